use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::simplicial::{Label, SimplicialComplex};
use crate::error::{Error, Result};
use crate::subset::{Mask, MAX_INDEX};

/// A finite poset with least element whose lower intervals are Boolean.
///
/// Elements are renumbered canonically: `0` is the least element and the
/// rest follow by (rank, input position). Rank-1 elements are the vertices.
#[derive(Debug, Clone)]
pub struct SimplicialPoset {
    m: usize,
    names: Vec<String>,
    below: Vec<FixedBitSet>,
    upper_covers: Vec<Vec<usize>>,
    vertex_set: Vec<Mask>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidPoset(msg.into())
}

impl SimplicialPoset {
    /// Builds and validates a poset from covering pairs `(a, b)` meaning `a ⋖ b`.
    ///
    /// `vertex_labels` assigns 0-based vertex labels to rank-1 elements (input
    /// indices). When empty, atoms are labeled in input order.
    pub fn new(
        names: Vec<String>,
        covers: &[(usize, usize)],
        vertex_labels: &[(usize, u32)],
    ) -> Result<SimplicialPoset> {
        let n = names.len();
        if n == 0 {
            return Err(invalid("missing least element: the poset is empty"));
        }
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(invalid(format!("cover ({a}, {b}) names an unknown element")));
            }
            if a == b {
                return Err(invalid(format!("element {} covers itself", names[a])));
            }
            if !up[a].contains(&b) {
                up[a].push(b);
                indeg[b] += 1;
            }
        }
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let minima = stack.clone();
        let mut deg = indeg.clone();
        while let Some(x) = stack.pop() {
            order.push(x);
            for &y in &up[x] {
                deg[y] -= 1;
                if deg[y] == 0 {
                    stack.push(y);
                }
            }
        }
        if order.len() != n {
            return Err(invalid("covering relation has a cycle"));
        }
        if minima.len() != 1 {
            return Err(invalid(format!(
                "missing least element: {} minimal elements",
                minima.len()
            )));
        }
        let zero = minima[0];
        let mut below_in = vec![FixedBitSet::with_capacity(n); n];
        for &x in &order {
            below_in[x].insert(x);
            let bx = below_in[x].clone();
            for &y in &up[x] {
                below_in[y].union_with(&bx);
            }
        }

        let atoms: Vec<usize> = up[zero].clone();
        let mut label_of: HashMap<usize, u32> = HashMap::new();
        if vertex_labels.is_empty() {
            let mut sorted = atoms.clone();
            sorted.sort_unstable();
            for (i, a) in sorted.into_iter().enumerate() {
                label_of.insert(a, i as u32);
            }
        } else {
            for &(e, l) in vertex_labels {
                if e >= n || !atoms.contains(&e) {
                    return Err(invalid(format!("vertex label given for a non-vertex element {e}")));
                }
                if label_of.values().any(|&x| x == l) {
                    return Err(invalid(format!("vertex label {} used twice", l + 1)));
                }
                label_of.insert(e, l);
            }
            if let Some(a) = atoms.iter().find(|a| !label_of.contains_key(a)) {
                return Err(invalid(format!("vertex {} has no label", names[*a])));
            }
        }
        let m = label_of.values().map(|&l| l as usize + 1).max().unwrap_or(0);
        if m > MAX_INDEX + 1 {
            return Err(invalid(format!("at most {} vertices are supported", MAX_INDEX + 1)));
        }
        let vset_in: Vec<Mask> = (0..n)
            .map(|x| {
                Mask::from_indices(
                    below_in[x]
                        .ones()
                        .filter_map(|a| label_of.get(&a).map(|&l| l as usize)),
                )
            })
            .collect();

        // Canonical numbering: by rank, then input position.
        let mut perm: Vec<usize> = (0..n).collect();
        perm.sort_by_key(|&x| (x != zero, below_in[x].count_ones(..), x));
        let mut pos = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            pos[old] = new;
        }
        let below = perm
            .iter()
            .map(|&old| {
                let mut b = FixedBitSet::with_capacity(n);
                for y in below_in[old].ones() {
                    b.insert(pos[y]);
                }
                b
            })
            .collect();
        let upper_covers = perm
            .iter()
            .map(|&old| {
                let mut u: Vec<usize> = up[old].iter().map(|&y| pos[y]).collect();
                u.sort_unstable();
                u
            })
            .collect();
        let poset = SimplicialPoset {
            m,
            names: perm.iter().map(|&old| names[old].clone()).collect(),
            below,
            upper_covers,
            vertex_set: perm.iter().map(|&old| vset_in[old]).collect(),
        };
        poset.validate()?;
        Ok(poset)
    }

    fn validate(&self) -> Result<()> {
        let n = self.len();
        for s in 0..n {
            let interval: Vec<usize> = self.below[s].ones().collect();
            let k = self.vertex_set[s].len();
            if interval.len() != 1usize << k {
                return Err(invalid(format!(
                    "interval below {} has {} elements, expected 2^{}",
                    self.names[s],
                    interval.len(),
                    k
                )));
            }
            let mut seen: Vec<Mask> = interval.iter().map(|&t| self.vertex_set[t]).collect();
            seen.sort_unstable_by_key(|m| m.0);
            seen.dedup();
            if seen.len() != interval.len() {
                return Err(invalid(format!(
                    "interval below {} is not Boolean",
                    self.names[s]
                )));
            }
            for &a in &interval {
                for &b in &interval {
                    let ordered = self.leq(a, b);
                    let nested = self.vertex_set[a].is_subset(self.vertex_set[b]);
                    if ordered != nested {
                        return Err(invalid(format!(
                            "interval below {} is not Boolean",
                            self.names[s]
                        )));
                    }
                }
            }
        }
        for a in 0..n {
            for b in a + 1..n {
                if !self.join(a, b).is_empty() && self.meet(a, b).is_none() {
                    return Err(invalid(format!(
                        "{} and {} have no unique greatest lower bound",
                        self.names[a], self.names[b]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Face poset of `k`: element `0` is `∅` and element `i + 1` is cell `i`.
    pub fn face_poset(k: &SimplicialComplex) -> SimplicialPoset {
        let mut names = vec!["{}".to_string()];
        let mut covers = Vec::new();
        let mut labels = Vec::new();
        for (id, cell) in k.cells().iter().enumerate() {
            let parts: Vec<String> = cell.iter().map(|v| (v + 1).to_string()).collect();
            names.push(format!("{{{}}}", parts.join(",")));
            if cell.len() == 1 {
                covers.push((0, id + 1));
                labels.push((id + 1, cell[0]));
            }
            for &f in k.boundary_faces(id) {
                covers.push((f + 1, id + 1));
            }
        }
        let mut p = SimplicialPoset::new(names, &covers, &labels).expect("face posets are simplicial");
        p.m = p.m.max(k.vertex_count());
        p
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of vertex labels `m`.
    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    /// `V(Δ^σ)`, 0-based.
    pub fn vertex_set(&self, s: usize) -> Mask {
        self.vertex_set[s]
    }

    pub fn rank(&self, s: usize) -> usize {
        self.vertex_set[s].len()
    }

    pub fn upper_covers(&self, s: usize) -> &[usize] {
        &self.upper_covers[s]
    }

    /// The unique maximal common lower bound, or `None` when it is not unique.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let mut common = self.below[a].clone();
        common.intersect_with(&self.below[b]);
        let lower: Vec<usize> = common.ones().collect();
        let maximal: Vec<usize> = lower
            .iter()
            .copied()
            .filter(|&x| !lower.iter().any(|&y| y != x && self.leq(x, y)))
            .collect();
        (maximal.len() == 1).then(|| maximal[0])
    }

    /// Minimal common upper bounds, ascending.
    pub fn join(&self, a: usize, b: usize) -> Vec<usize> {
        let upper: Vec<usize> = (0..self.len())
            .filter(|&x| self.leq(a, x) && self.leq(b, x))
            .collect();
        upper
            .iter()
            .copied()
            .filter(|&x| !upper.iter().any(|&y| y != x && self.leq(y, x)))
            .collect()
    }

    /// Order complex of the elements other than the least one. Vertex `i`
    /// is element `i + 1`.
    pub fn order_complex(&self) -> SimplicialComplex {
        let mut chains = Vec::new();
        let mut path = Vec::new();
        for &atom in &self.upper_covers[0] {
            self.maximal_chains(atom, &mut path, &mut chains);
        }
        let labels = (1..self.len()).map(Label::Element).collect();
        SimplicialComplex::with_labels(labels, &chains).expect("chains index elements")
    }

    fn maximal_chains(&self, x: usize, path: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        path.push(x as u32 - 1);
        if self.upper_covers[x].is_empty() {
            out.push(path.clone());
        }
        for &y in &self.upper_covers[x] {
            self.maximal_chains(y, path, out);
        }
        path.pop();
    }

    /// Order complex of the full subposet `S_J = {σ : V(σ) ⊆ J}`.
    pub fn sub_order_complex(&self, j: Mask) -> SimplicialComplex {
        let keep: Vec<u32> = (1..self.len())
            .filter(|&s| self.vertex_set[s].is_subset(j))
            .map(|s| s as u32 - 1)
            .collect();
        self.order_complex().full_subcomplex(&keep)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// Two triangles glued along their whole boundary.
    pub(crate) fn two_triangles() -> SimplicialPoset {
        let names = ["0", "1", "2", "3", "12", "23", "13", "A", "B"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let covers = [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 4),
            (2, 4),
            (2, 5),
            (3, 5),
            (1, 6),
            (3, 6),
            (4, 7),
            (5, 7),
            (6, 7),
            (4, 8),
            (5, 8),
            (6, 8),
        ];
        SimplicialPoset::new(names, &covers, &[(1, 0), (2, 1), (3, 2)]).unwrap()
    }

    /// Two edges on the same pair of vertices.
    pub(crate) fn two_edges() -> SimplicialPoset {
        let names = ["0", "1", "2", "a", "b"].iter().map(|s| s.to_string()).collect();
        let covers = [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4)];
        SimplicialPoset::new(names, &covers, &[]).unwrap()
    }

    #[test]
    fn face_poset_of_complex_has_small_joins() {
        let k = SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]])
            .unwrap();
        let p = SimplicialPoset::face_poset(&k);
        assert_eq!(p.len(), 9);
        for a in 0..p.len() {
            for b in 0..p.len() {
                assert!(p.join(a, b).len() <= 1);
            }
        }
        assert_eq!(p.order_complex(), crate::complexes::barycentric_subdivision(&k));
    }

    #[test]
    fn two_triangle_joins() {
        let p = two_triangles();
        let e12 = p.names().iter().position(|n| n == "12").unwrap();
        let e23 = p.names().iter().position(|n| n == "23").unwrap();
        let tops: Vec<&str> = p.join(e12, e23).iter().map(|&x| p.names()[x].as_str()).collect();
        assert_eq!(tops, vec!["A", "B"]);
        assert_eq!(p.order_complex().f_vector()[0], 8);
        assert_eq!(p.vertex_count(), 3);
    }

    #[test]
    fn two_edge_joins_and_meets() {
        let p = two_edges();
        assert_eq!(p.join(1, 2), vec![3, 4]);
        assert_eq!(p.meet(1, 2), Some(0));
        assert!(p.join(3, 4).is_empty());
        assert_eq!(p.meet(3, 4), None);
        assert_eq!(p.vertex_set(3), Mask::from_indices([0, 1]));
    }

    #[test]
    fn lower_intervals_are_boolean() {
        for p in [two_edges(), two_triangles()] {
            for s in 0..p.len() {
                let size = (0..p.len()).filter(|&t| p.leq(t, s)).count();
                assert_eq!(size, 1 << p.rank(s));
            }
        }
    }

    #[test]
    fn rejects_non_boolean_interval() {
        // A square face: four vertices and a single top element.
        let names = ["0", "1", "2", "3", "4", "T"].iter().map(|s| s.to_string()).collect();
        let covers = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 5), (3, 5), (4, 5)];
        assert!(matches!(
            SimplicialPoset::new(names, &covers, &[]),
            Err(Error::InvalidPoset(_))
        ));
    }

    #[test]
    fn rejects_missing_minimum() {
        let names = ["a", "b"].iter().map(|s| s.to_string()).collect();
        assert!(SimplicialPoset::new(names, &[], &[]).is_err());
    }

    #[test]
    fn sub_order_complex_of_two_edges() {
        let p = two_edges();
        assert_eq!(p.sub_order_complex(Mask::from_indices([0])).f_vector(), vec![1]);
        assert_eq!(p.sub_order_complex(Mask::from_indices([0, 1])).f_vector(), vec![4, 4]);
        assert_eq!(p.sub_order_complex(Mask::EMPTY).num_cells(), 0);
    }
}
