use super::simplicial::{Label, SimplicialComplex, Subcomplex};
use crate::error::{Error, Result};

fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// The complex of chains of nonempty simplices of `k`.
///
/// Vertex `i` of the result is cell `i` of `k`, so the vertex order is
/// (dimension, lexicographic) and every simplex lists its chain bottom-up.
pub fn barycentric_subdivision(k: &SimplicialComplex) -> SimplicialComplex {
    let mut flags = Vec::new();
    for facet in k.facets() {
        for perm in permutations(facet) {
            let mut prefix = Vec::with_capacity(perm.len());
            let mut chain = Vec::with_capacity(perm.len());
            for v in perm {
                let pos = prefix.partition_point(|&x| x < v);
                prefix.insert(pos, v);
                chain.push(k.id_of(&prefix).expect("prefix of a facet is a cell") as u32);
            }
            flags.push(chain);
        }
    }
    let labels = k
        .cells()
        .iter()
        .map(|c| Label::Face(c.clone()))
        .collect();
    SimplicialComplex::with_labels(labels, &flags).expect("flags index cells of k")
}

/// Cells of the subdivision `kprime = barycentric_subdivision(k)` forming
/// the face `F_σ`: chains whose bottom simplex contains `σ`.
pub fn face_cells(k: &SimplicialComplex, kprime: &SimplicialComplex, sigma: &[u32]) -> Result<Subcomplex> {
    let mut s = sigma.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.is_empty() || k.id_of(&s).is_none() {
        return Err(Error::NotASimplex(s));
    }
    let mut out = Subcomplex::empty(kprime.num_cells());
    for (id, chain) in kprime.cells().iter().enumerate() {
        let bottom = k.cell(chain[0] as usize);
        if s.iter().all(|v| bottom.binary_search(v).is_ok()) {
            out.insert(id);
        }
    }
    Ok(out)
}

/// `F_σ` as a standalone complex: the order complex of `{τ ∈ K : τ ⊇ σ}`.
pub fn face_subcomplex(k: &SimplicialComplex, sigma: &[u32]) -> Result<SimplicialComplex> {
    let kprime = barycentric_subdivision(k);
    let cells = face_cells(k, &kprime, sigma)?;
    Ok(kprime.extract(&cells))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four_cycle() -> SimplicialComplex {
        SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap()
    }

    #[test]
    fn edge_becomes_path() {
        let k = SimplicialComplex::from_maximal(2, &[vec![0, 1]]).unwrap();
        let sd = barycentric_subdivision(&k);
        assert_eq!(sd.f_vector(), vec![3, 2]);
        assert_eq!(sd.labels()[2], Label::Face(vec![0, 1]));
    }

    #[test]
    fn triangle_boundary_becomes_hexagon() {
        let k = SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(barycentric_subdivision(&k).f_vector(), vec![6, 6]);
    }

    #[test]
    fn subdivided_four_cycle() {
        assert_eq!(barycentric_subdivision(&four_cycle()).f_vector(), vec![8, 8]);
    }

    #[test]
    fn full_triangle_has_six_flags() {
        let k = SimplicialComplex::simplex(3);
        let sd = barycentric_subdivision(&k);
        assert_eq!(sd.f_vector(), vec![7, 12, 6]);
    }

    #[test]
    fn face_subcomplexes() {
        let k = four_cycle();
        let star = face_subcomplex(&k, &[0]).unwrap();
        assert_eq!(star.f_vector(), vec![3, 2]);
        assert_eq!(face_subcomplex(&k, &[0, 1]).unwrap().f_vector(), vec![1]);
        let t = SimplicialComplex::simplex(3);
        assert_eq!(face_subcomplex(&t, &[0, 1, 2]).unwrap().f_vector(), vec![1]);
        assert_eq!(
            face_subcomplex(&k, &[0, 2]).unwrap_err(),
            Error::NotASimplex(vec![0, 2])
        );
    }
}
