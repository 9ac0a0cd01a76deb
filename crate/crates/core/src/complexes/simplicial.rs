use std::collections::{HashMap, HashSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

/// Provenance of a vertex. Survives relabeling so derived complexes can be
/// traced back to the objects they were built from.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Label {
    /// Vertex of an input complex (0-based).
    Vertex(u32),
    /// Barycenter of a simplex of the subdivided complex.
    Face(Vec<u32>),
    /// Element of a simplicial poset.
    Element(usize),
    /// Cone point.
    Apex,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Vertex(v) => write!(f, "{}", v + 1),
            Label::Face(s) => {
                let parts: Vec<String> = s.iter().map(|v| (v + 1).to_string()).collect();
                write!(f, "[{}]", parts.join(""))
            }
            Label::Element(e) => write!(f, "e{e}"),
            Label::Apex => f.write_str("u0"),
        }
    }
}

/// Non-fatal findings while closing a list of maximal simplices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuildWarning {
    DuplicateFacet(Vec<u32>),
    AbsorbedSimplex(Vec<u32>),
}

/// Finite abstract simplicial complex on vertices `0..m`.
///
/// The empty simplex is always a member and is not stored as a cell. Cells
/// are the nonempty simplices, numbered by (dimension, lexicographic order of
/// the sorted vertex list); that numbering is the canonical cell id used by
/// every other module.
#[derive(Clone)]
pub struct SimplicialComplex {
    m: usize,
    labels: Vec<Label>,
    facets: Vec<Vec<u32>>,
    cells: Vec<Vec<u32>>,
    dim_start: Vec<usize>,
    index: HashMap<Vec<u32>, usize>,
    faces: Vec<Vec<usize>>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialComplex")
            .field("m", &self.m)
            .field("facets", &self.facets)
            .finish()
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.cells == other.cells
    }
}

impl Eq for SimplicialComplex {}

fn normalize(s: &[u32]) -> Vec<u32> {
    let mut v = s.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

impl SimplicialComplex {
    /// Downward closure of `maximal` on the vertex set `0..m`.
    pub fn from_maximal(m: usize, maximal: &[Vec<u32>]) -> Result<SimplicialComplex> {
        Self::from_maximal_with_warnings(m, maximal).map(|(k, _)| k)
    }

    pub fn from_maximal_with_warnings(
        m: usize,
        maximal: &[Vec<u32>],
    ) -> Result<(SimplicialComplex, Vec<BuildWarning>)> {
        let labels = (0..m as u32).map(Label::Vertex).collect();
        Self::build(m, labels, maximal)
    }

    /// Like [`from_maximal`](Self::from_maximal) but with explicit vertex labels.
    pub fn with_labels(labels: Vec<Label>, maximal: &[Vec<u32>]) -> Result<SimplicialComplex> {
        Self::build(labels.len(), labels, maximal).map(|(k, _)| k)
    }

    /// The complex `{∅}` on `m` (ghost) vertices.
    pub fn empty(m: usize) -> SimplicialComplex {
        Self::from_maximal(m, &[]).expect("empty complex is valid")
    }

    /// The full simplex on `0..m`.
    pub fn simplex(m: usize) -> SimplicialComplex {
        let all: Vec<u32> = (0..m as u32).collect();
        let facets = if m == 0 { vec![] } else { vec![all] };
        Self::from_maximal(m, &facets).expect("simplex is valid")
    }

    fn build(
        m: usize,
        labels: Vec<Label>,
        maximal: &[Vec<u32>],
    ) -> Result<(SimplicialComplex, Vec<BuildWarning>)> {
        let mut warnings = Vec::new();
        let mut listed: Vec<Vec<u32>> = Vec::new();
        let mut seen = HashSet::new();
        for s in maximal {
            if let Some(&v) = s.iter().find(|&&v| v as usize >= m) {
                return Err(Error::VertexOutOfRange {
                    vertex: v as usize,
                    m,
                });
            }
            let s = normalize(s);
            if s.is_empty() {
                continue;
            }
            if !seen.insert(s.clone()) {
                warnings.push(BuildWarning::DuplicateFacet(s));
                continue;
            }
            listed.push(s);
        }
        let is_sub = |a: &[u32], b: &[u32]| a.len() < b.len() && a.iter().all(|v| b.contains(v));
        let mut facets = Vec::new();
        for s in &listed {
            if listed.iter().any(|t| is_sub(s, t)) {
                warnings.push(BuildWarning::AbsorbedSimplex(s.clone()));
            } else {
                facets.push(s.clone());
            }
        }
        let mut all: HashSet<Vec<u32>> = HashSet::new();
        for f in &facets {
            let k = f.len();
            assert!(k < 32, "facets with 32 or more vertices are not supported");
            for bits in 1u32..(1 << k) {
                let sub: Vec<u32> = (0..k).filter(|i| bits >> i & 1 == 1).map(|i| f[i]).collect();
                all.insert(sub);
            }
        }
        let mut cells: Vec<Vec<u32>> = all.into_iter().collect();
        cells.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        facets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok((Self::assemble(m, labels, facets, cells), warnings))
    }

    /// `cells` must be sorted by (length, lex) and closed under nonempty subsets.
    fn assemble(m: usize, labels: Vec<Label>, facets: Vec<Vec<u32>>, cells: Vec<Vec<u32>>) -> Self {
        let top = cells.last().map_or(0, Vec::len);
        let mut dim_start = vec![0usize; top + 1];
        for d in 0..=top {
            dim_start[d] = cells.partition_point(|c| c.len() < d + 1);
        }
        let index: HashMap<Vec<u32>, usize> =
            cells.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        let faces = cells
            .iter()
            .map(|c| {
                if c.len() < 2 {
                    return Vec::new();
                }
                (0..c.len())
                    .map(|i| {
                        let mut f = c.clone();
                        f.remove(i);
                        index[&f]
                    })
                    .collect()
            })
            .collect();
        SimplicialComplex {
            m,
            labels,
            facets,
            cells,
            dim_start,
            index,
            faces,
        }
    }

    /// Number of vertices `m`, including ghost vertices that lie in no simplex.
    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    /// Every vertex lies in some simplex.
    pub fn is_minimal(&self) -> bool {
        self.cells_of_dim(0).len() == self.m
    }

    /// `-1` for `{∅}`.
    pub fn dimension(&self) -> isize {
        self.dim_start.len() as isize - 2
    }

    /// Number of nonempty simplices.
    pub fn num_cells(&self) -> usize {
        self.cells.len()
    }

    /// Number of simplices, counting the empty one.
    pub fn num_simplices(&self) -> usize {
        self.cells.len() + 1
    }

    pub fn cells(&self) -> &[Vec<u32>] {
        &self.cells
    }

    pub fn cell(&self, id: usize) -> &[u32] {
        &self.cells[id]
    }

    pub fn dim_of(&self, id: usize) -> usize {
        self.cells[id].len() - 1
    }

    pub fn cells_of_dim(&self, d: usize) -> std::ops::Range<usize> {
        if d + 1 >= self.dim_start.len() {
            let n = self.cells.len();
            return n..n;
        }
        self.dim_start[d]..self.dim_start[d + 1]
    }

    pub fn id_of(&self, simplex: &[u32]) -> Option<usize> {
        self.index.get(simplex).copied()
    }

    /// Membership test; the empty simplex always belongs.
    pub fn contains(&self, simplex: &[u32]) -> bool {
        simplex.is_empty() || self.index.contains_key(&normalize(simplex))
    }

    /// Codimension-one faces of a cell, in the order of the removed vertex.
    /// The face obtained by dropping position `i` carries sign `(-1)^i`.
    pub fn boundary_faces(&self, id: usize) -> &[usize] {
        &self.faces[id]
    }

    /// Number of simplices per dimension, starting at dimension 0.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..self.dim_start.len() - 1)
            .map(|d| self.cells_of_dim(d).len())
            .collect()
    }

    /// `{σ ∈ K : σ ⊆ J}`, relabeled onto `0..|J|` with original labels kept.
    pub fn full_subcomplex(&self, vertices: &[u32]) -> SimplicialComplex {
        let keep = normalize(vertices);
        let mut pos = vec![u32::MAX; self.m];
        for (i, &v) in keep.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        let facets: Vec<Vec<u32>> = self
            .cells
            .iter()
            .filter(|c| c.iter().all(|&v| pos[v as usize] != u32::MAX))
            .map(|c| c.iter().map(|&v| pos[v as usize]).collect())
            .collect();
        let labels = keep.iter().map(|&v| self.labels[v as usize].clone()).collect();
        SimplicialComplex::with_labels(labels, &facets).expect("relabeled cells are in range")
    }

    /// Cone with a new apex vertex `m`, labeled [`Label::Apex`].
    pub fn cone(&self) -> SimplicialComplex {
        let apex = self.m as u32;
        let mut facets: Vec<Vec<u32>> = self
            .facets
            .iter()
            .map(|f| {
                let mut g = f.clone();
                g.push(apex);
                g
            })
            .collect();
        if facets.is_empty() {
            facets.push(vec![apex]);
        }
        let mut labels = self.labels.clone();
        labels.push(Label::Apex);
        SimplicialComplex::with_labels(labels, &facets).expect("cone is valid")
    }

    /// Subcomplex induced by the cells of `set`, relabeled onto the vertices it uses.
    pub fn extract(&self, set: &Subcomplex) -> SimplicialComplex {
        let mut used: Vec<u32> = set
            .iter()
            .filter(|&id| self.cells[id].len() == 1)
            .map(|id| self.cells[id][0])
            .collect();
        used.sort_unstable();
        let mut pos = vec![u32::MAX; self.m];
        for (i, &v) in used.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        let facets: Vec<Vec<u32>> = set
            .iter()
            .map(|id| self.cells[id].iter().map(|&v| pos[v as usize]).collect())
            .collect();
        let labels = used.iter().map(|&v| self.labels[v as usize].clone()).collect();
        SimplicialComplex::with_labels(labels, &facets).expect("subcomplex cells are in range")
    }

    /// Set of all cells.
    pub fn whole(&self) -> Subcomplex {
        let mut s = Subcomplex::empty(self.num_cells());
        s.bits.insert_range(..);
        s
    }

    /// Subcomplex generated by the given simplices (downward closure inside `self`).
    pub fn generate(&self, simplices: &[Vec<u32>]) -> Result<Subcomplex> {
        let mut s = Subcomplex::empty(self.num_cells());
        for simplex in simplices {
            let simplex = normalize(simplex);
            if simplex.is_empty() {
                continue;
            }
            let id = self
                .id_of(&simplex)
                .ok_or_else(|| Error::NotASimplex(simplex.clone()))?;
            self.close_into(id, &mut s);
        }
        Ok(s)
    }

    pub(crate) fn close_into(&self, id: usize, s: &mut Subcomplex) {
        if s.contains(id) {
            return;
        }
        s.insert(id);
        for &f in &self.faces[id] {
            self.close_into(f, s);
        }
    }

    /// True when `set` is closed under taking faces.
    pub fn is_closed(&self, set: &Subcomplex) -> bool {
        set.iter().all(|id| self.faces[id].iter().all(|&f| set.contains(f)))
    }

    /// Connected components of a subcomplex, as cell sets ordered by smallest cell id.
    pub fn components(&self, set: &Subcomplex) -> Vec<Subcomplex> {
        let n = self.num_cells();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for id in set.iter() {
            for &f in &self.faces[id] {
                let (a, b) = (find(&mut parent, id), find(&mut parent, f));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut by_root: Vec<Option<usize>> = vec![None; n];
        let mut out: Vec<Subcomplex> = Vec::new();
        for id in set.iter() {
            let r = find(&mut parent, id);
            let slot = match by_root[r] {
                Some(i) => i,
                None => {
                    by_root[r] = Some(out.len());
                    out.push(Subcomplex::empty(n));
                    out.len() - 1
                }
            };
            out[slot].insert(id);
        }
        out
    }
}

/// A set of cells of a fixed parent [`SimplicialComplex`], indexed by cell id.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subcomplex {
    bits: FixedBitSet,
}

impl fmt::Debug for Subcomplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

impl Subcomplex {
    pub fn empty(num_cells: usize) -> Subcomplex {
        Subcomplex {
            bits: FixedBitSet::with_capacity(num_cells),
        }
    }

    pub fn contains(&self, id: usize) -> bool {
        self.bits.contains(id)
    }

    pub fn insert(&mut self, id: usize) {
        self.bits.insert(id);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.ones().next()
    }

    pub fn union(&self, other: &Subcomplex) -> Subcomplex {
        let mut b = self.bits.clone();
        b.union_with(&other.bits);
        Subcomplex { bits: b }
    }

    pub fn intersection(&self, other: &Subcomplex) -> Subcomplex {
        let mut b = self.bits.clone();
        b.intersect_with(&other.bits);
        Subcomplex { bits: b }
    }

    pub fn is_subset(&self, other: &Subcomplex) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn capacity(&self) -> usize {
        self.bits.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn one_based(sets: &[&[u32]]) -> Vec<Vec<u32>> {
        sets.iter()
            .map(|s| s.iter().map(|v| v - 1).collect())
            .collect()
    }

    #[test]
    fn four_cycle_has_nine_simplices() {
        let k = SimplicialComplex::from_maximal(4, &one_based(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]))
            .unwrap();
        assert_eq!(k.num_simplices(), 9);
        assert_eq!(k.num_cells(), 8);
        assert_eq!(k.f_vector(), vec![4, 4]);
        assert!(k.is_minimal());
        assert!(k.contains(&[]));
    }

    #[test]
    fn full_triangle_has_seven_simplices() {
        let k = SimplicialComplex::from_maximal(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(k.num_cells(), 7);
        assert_eq!(k.dimension(), 2);
    }

    #[test]
    fn out_of_range_vertex_is_rejected() {
        let err = SimplicialComplex::from_maximal(2, &[vec![0, 2]]).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { vertex: 2, m: 2 });
    }

    #[test]
    fn duplicates_and_absorbed_simplices_warn() {
        let (k, w) =
            SimplicialComplex::from_maximal_with_warnings(3, &[vec![0, 1], vec![1, 0], vec![0]])
                .unwrap();
        assert_eq!(k.facets(), &[vec![0, 1]]);
        assert!(w.contains(&BuildWarning::DuplicateFacet(vec![0, 1])));
        assert!(w.contains(&BuildWarning::AbsorbedSimplex(vec![0])));
        assert!(!k.is_minimal());
    }

    #[test]
    fn empty_complex() {
        let k = SimplicialComplex::empty(3);
        assert_eq!(k.num_cells(), 0);
        assert_eq!(k.dimension(), -1);
        assert!(k.contains(&[]));
        assert!(k.f_vector().is_empty());
    }

    #[test]
    fn full_subcomplexes_of_the_four_cycle() {
        let k = SimplicialComplex::from_maximal(4, &one_based(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]))
            .unwrap();
        let opposite = k.full_subcomplex(&[0, 2]);
        assert_eq!(opposite.f_vector(), vec![2]);
        assert_eq!(opposite.labels(), &[Label::Vertex(0), Label::Vertex(2)]);
        let path = k.full_subcomplex(&[0, 1, 2]);
        assert_eq!(path.f_vector(), vec![3, 2]);
        assert_eq!(k.full_subcomplex(&[0, 1, 2, 3]), k);
        assert_eq!(k.full_subcomplex(&[]).num_cells(), 0);
    }

    #[test]
    fn components_and_closure() {
        let k = SimplicialComplex::from_maximal(5, &[vec![0, 1], vec![2, 3], vec![4]]).unwrap();
        let all = k.whole();
        assert!(k.is_closed(&all));
        assert_eq!(k.components(&all).len(), 3);
        let gen = k.generate(&[vec![2, 3]]).unwrap();
        assert_eq!(gen.len(), 3);
        assert!(k.is_closed(&gen));
        let extracted = k.extract(&gen);
        assert_eq!(extracted.f_vector(), vec![2, 1]);
    }
}
