use super::panel::{Origin, PanelComplex};
use crate::complexes::{barycentric_subdivision, SimplicialComplex, SimplicialPoset};
use crate::error::{Error, Result};
use crate::subset::{Mask, MAX_INDEX};

/// Cone over an order complex whose vertex `i` carries the vertex set
/// `vertex_sets[i]`. A cell off the apex lies in `P_j` iff its bottom
/// element contains `j`; cells through the apex lie in no panel.
fn cone_panels(order_complex: &SimplicialComplex, vertex_sets: &[Mask], m: usize, origin: Origin) -> PanelComplex {
    let y = order_complex.cone();
    let apex = order_complex.vertex_count() as u32;
    let cell_index = y
        .cells()
        .iter()
        .map(|c| {
            if *c.last().expect("cells are nonempty") == apex {
                Mask::EMPTY
            } else {
                vertex_sets[c[0] as usize]
            }
        })
        .collect();
    let apex_cell = y.id_of(&[apex]).expect("apex is a vertex");
    let mut elements = vec![(Mask::EMPTY, apex_cell)];
    for (v, &set) in vertex_sets.iter().enumerate() {
        elements.push((set, y.id_of(&[v as u32]).expect("order complex vertex")));
    }
    PanelComplex::from_cell_index(y, m, cell_index, origin, elements)
}

fn check_minimal(k: &SimplicialComplex) -> Result<()> {
    if k.vertex_count() > MAX_INDEX + 1 {
        return Err(Error::Input(format!("at most {} vertices are supported", MAX_INDEX + 1)));
    }
    for v in 0..k.vertex_count() {
        if !k.contains(&[v as u32]) {
            return Err(Error::NotMinimal(v + 1));
        }
    }
    Ok(())
}

/// `(Y^K, P)`: the cone on the barycentric subdivision of `K`, with `P_j`
/// the face `F_{v_j}`. Element `i + 1` of the structure is cell `i` of `K`.
pub fn panelize_simplicial(k: &SimplicialComplex) -> Result<PanelComplex> {
    check_minimal(k)?;
    let sd = barycentric_subdivision(k);
    let sets: Vec<Mask> = k
        .cells()
        .iter()
        .map(|c| Mask::from_indices(c.iter().map(|&v| v as usize)))
        .collect();
    Ok(cone_panels(&sd, &sets, k.vertex_count(), Origin::Simplicial))
}

/// `(Y^S, P)` for a simplicial poset: the cone on its order complex.
pub fn panelize_poset(s: &SimplicialPoset) -> Result<PanelComplex> {
    let oc = s.order_complex();
    let sets: Vec<Mask> = (1..s.len()).map(|e| s.vertex_set(e)).collect();
    Ok(cone_panels(&oc, &sets, s.vertex_count(), Origin::Poset))
}

/// Coarsened structure on `Y^K` with `P_i = ∪_{j ∈ J_i} F_{v_j}`.
pub fn panelize_partition(k: &SimplicialComplex, blocks: &[Vec<u32>]) -> Result<PanelComplex> {
    check_minimal(k)?;
    let m = k.vertex_count();
    let mut owner = vec![None; m];
    let mut masks = Vec::with_capacity(blocks.len());
    for (i, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::InvalidPartition(format!("block {} is empty", i + 1)));
        }
        for &v in block {
            let v = v as usize;
            if v >= m {
                return Err(Error::InvalidPartition(format!("vertex {} is out of range", v + 1)));
            }
            if let Some(prev) = owner[v] {
                return Err(Error::InvalidPartition(format!(
                    "vertex {} lies in blocks {} and {}",
                    v + 1,
                    prev + 1,
                    i + 1
                )));
            }
            owner[v] = Some(i);
        }
        masks.push(Mask::from_indices(block.iter().map(|&v| v as usize)));
    }
    if let Some(v) = owner.iter().position(Option::is_none) {
        return Err(Error::InvalidPartition(format!("vertex {} lies in no block", v + 1)));
    }
    let fine = panelize_simplicial(k)?;
    let coarsen = |i: Mask| Mask::from_indices((0..masks.len()).filter(|&b| !masks[b].intersection(i).is_empty()));
    let cell_index = (0..fine.y().num_cells()).map(|c| coarsen(fine.cell_index(c))).collect();
    Ok(PanelComplex::from_cell_index(
        fine.y().clone(),
        masks.len(),
        cell_index,
        Origin::Partition(masks),
        Vec::new(),
    ))
}

/// Union of the blocks named by `l`, as a vertex mask of `K`.
pub fn partition_vertices(blocks: &[Mask], l: Mask) -> Mask {
    l.iter().fold(Mask::EMPTY, |acc, i| acc.union(blocks[i]))
}
