//! Brute-force cellular chain complexes of polyhedral products of sphere pairs.
//!
//! A product cell is a base cell together with one cell per factor. Factor
//! cells are coded 0 and 1 for the two cells of the subspace and 2 for the
//! cell outside it. Cells are ordered by base cell, then by pattern read
//! left to right; boundaries carry Koszul signs with the base factor first.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::complexes::SimplicialComplex;
use crate::constructions::PanelComplex;
use crate::error::Result;
use crate::homology::{ChainComplex, Flavor, IntMatrix};
use crate::spheres::SpherePairSpec;
use crate::subset::Mask;

/// CW model of one factor pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    /// `(D^{n+1}, S^n)` with `n ≥ 1`: cells `v`, `e_n` in the sphere, `e_{n+1}` outside.
    Disk(u32),
    /// `(D^1, S^0)`: endpoints `-`, `+` and the open interval.
    Interval,
    /// `(S^d, pt)`: the basepoint and one `d`-cell.
    SpherePoint(u32),
}

impl Factor {
    fn dim(self, code: u8) -> u32 {
        match (self, code) {
            (_, 0) => 0,
            (Factor::Disk(n), 1) => n,
            (Factor::Disk(n), 2) => n + 1,
            (Factor::Interval, 1) => 0,
            (Factor::Interval, 2) => 1,
            (Factor::SpherePoint(d), 2) => d,
            _ => unreachable!("invalid factor code"),
        }
    }

    fn boundary(self, code: u8) -> &'static [(u8, i8)] {
        match (self, code) {
            (Factor::Disk(_), 2) => &[(1, 1)],
            (Factor::Interval, 2) => &[(1, 1), (0, -1)],
            _ => &[],
        }
    }

    fn subspace_codes(self) -> &'static [u8] {
        match self {
            Factor::SpherePoint(_) => &[0],
            _ => &[0, 1],
        }
    }
}

/// Factor models for `(D^{n_j+1}, S^{n_j})`.
pub fn disk_factors(spec: &SpherePairSpec) -> Vec<Factor> {
    spec.dims()
        .iter()
        .map(|&n| if n == 0 { Factor::Interval } else { Factor::Disk(n) })
        .collect()
}

/// Factor models for `(S^{n_j+1}, pt)`.
pub fn sphere_point_factors(spec: &SpherePairSpec) -> Vec<Factor> {
    spec.dims().iter().map(|&n| Factor::SpherePoint(n + 1)).collect()
}

struct Base<'a> {
    dims: Vec<u32>,
    faces: Vec<&'a [usize]>,
    tops: Vec<Vec<Mask>>,
}

type Pattern = u128;

fn code_at(p: Pattern, m: usize, j: usize) -> u8 {
    ((p >> (2 * (m - 1 - j))) & 3) as u8
}

fn with_code(p: Pattern, m: usize, j: usize, code: u8) -> Pattern {
    let shift = 2 * (m - 1 - j);
    (p & !(3 << shift)) | (Pattern::from(code) << shift)
}

fn patterns(factors: &[Factor], top: Mask) -> Vec<Pattern> {
    let m = factors.len();
    let mut out = vec![0 as Pattern];
    for (j, f) in factors.iter().enumerate() {
        let codes: &[u8] = if top.contains(j) { &[2] } else { f.subspace_codes() };
        out = out
            .into_iter()
            .flat_map(|p| codes.iter().map(move |&c| with_code(p, m, j, c)))
            .collect();
    }
    out.sort_unstable();
    out
}

fn assemble(base: &Base, factors: &[Factor]) -> ChainComplex {
    let m = factors.len();
    let per_base: Vec<Vec<(Pattern, u32)>> = (0..base.dims.len())
        .into_par_iter()
        .map(|c| {
            let mut cells: Vec<Pattern> = base.tops[c].iter().flat_map(|&t| patterns(factors, t)).collect();
            cells.sort_unstable();
            cells
                .into_iter()
                .map(|p| {
                    let d = base.dims[c] + (0..m).map(|j| factors[j].dim(code_at(p, m, j))).sum::<u32>();
                    (p, d)
                })
                .collect()
        })
        .collect();
    let top = per_base.iter().flatten().map(|&(_, d)| d as usize).max();
    let Some(top) = top else {
        return ChainComplex::from_boundaries(Flavor::Absolute, 0, Vec::new()).expect("empty complex");
    };
    let mut by_degree: Vec<Vec<(usize, Pattern)>> = vec![Vec::new(); top + 1];
    let mut position: HashMap<(usize, Pattern), usize> = HashMap::new();
    for (c, cells) in per_base.iter().enumerate() {
        for &(p, d) in cells {
            let list = &mut by_degree[d as usize];
            position.insert((c, p), list.len());
            list.push((c, p));
        }
    }
    let boundaries: Vec<IntMatrix> = (0..=top)
        .into_par_iter()
        .map(|d| {
            let rows = if d == 0 { 0 } else { by_degree[d - 1].len() };
            let mut triplets = Vec::new();
            for (col, &(c, p)) in by_degree[d].iter().enumerate() {
                let base_dim = base.dims[c];
                for (i, &f) in base.faces[c].iter().enumerate() {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    triplets.push((position[&(f, p)], col, BigInt::from(sign)));
                }
                let mut prefix = base_dim;
                for (j, factor) in factors.iter().enumerate() {
                    let code = code_at(p, m, j);
                    let koszul = if prefix.is_multiple_of(2) { 1 } else { -1 };
                    for &(target, s) in factor.boundary(code) {
                        let q = with_code(p, m, j, target);
                        triplets.push((position[&(c, q)], col, BigInt::from(koszul * i32::from(s))));
                    }
                    prefix += factor.dim(code);
                }
            }
            IntMatrix::from_triplets(rows, by_degree[d].len(), triplets)
        })
        .collect();
    ChainComplex::from_boundaries(Flavor::Absolute, 0, boundaries).expect("shapes chain together")
}

/// Cellular chains of the polyhedral product over a panel structure, with
/// an arbitrary factor model per panel.
pub fn product_chain_complex_panel(p: &PanelComplex, factors: &[Factor]) -> Result<ChainComplex> {
    let y = p.y();
    let base = Base {
        dims: y.cells().iter().map(|c| c.len() as u32 - 1).collect(),
        faces: (0..y.num_cells()).map(|c| y.boundary_faces(c)).collect(),
        tops: (0..y.num_cells()).map(|c| p.cell_index(c).subsets().collect()).collect(),
    };
    Ok(assemble(&base, factors))
}

/// Cellular chains of `(D^{n_j+1}, S^{n_j})^{(Y,P)}`.
pub fn mac_chain_complex_panel(p: &PanelComplex, spec: &SpherePairSpec) -> Result<ChainComplex> {
    spec.check_len(p.m())?;
    product_chain_complex_panel(p, &disk_factors(spec))
}

/// Cellular chains of `(S^{n_j+1}, pt)^{(Y,P)}`.
pub fn sphere_point_chain_complex_panel(p: &PanelComplex, spec: &SpherePairSpec) -> Result<ChainComplex> {
    spec.check_len(p.m())?;
    product_chain_complex_panel(p, &sphere_point_factors(spec))
}

/// Cellular chains of the classical polyhedral product `(D^{n_j+1}, S^{n_j})^K`.
pub fn mac_chain_complex_classical(k: &SimplicialComplex, spec: &SpherePairSpec) -> Result<ChainComplex> {
    spec.check_len(k.vertex_count())?;
    let mut tops = vec![Mask::EMPTY];
    tops.extend(
        k.cells()
            .iter()
            .map(|c| Mask::from_indices(c.iter().map(|&v| v as usize))),
    );
    let base = Base {
        dims: vec![0],
        faces: vec![&[]],
        tops: vec![tops],
    };
    Ok(assemble(&base, &disk_factors(spec)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{panelize_generic, panelize_simplicial};
    use crate::homology::{cohomology, homology, Coefficients};

    fn four_cycle() -> SimplicialComplex {
        SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap()
    }

    fn betti(c: &ChainComplex) -> Vec<usize> {
        c.check_boundary_square().unwrap();
        homology(c, Coefficients::Integers).unwrap().betti()
    }

    #[test]
    fn classical_four_cycle() {
        let k = four_cycle();
        let c = mac_chain_complex_classical(&k, &SpherePairSpec::uniform(4, 1)).unwrap();
        assert_eq!(betti(&c), vec![1, 0, 0, 2, 0, 0, 1]);
        let r = mac_chain_complex_classical(&k, &SpherePairSpec::uniform(4, 0)).unwrap();
        assert_eq!(betti(&r), vec![1, 2, 1]);
    }

    #[test]
    fn classical_simplex_is_contractible() {
        let k = SimplicialComplex::simplex(3);
        let c = mac_chain_complex_classical(&k, &SpherePairSpec::uniform(3, 1)).unwrap();
        assert_eq!(betti(&c), vec![1]);
    }

    #[test]
    fn two_points_give_three_sphere() {
        let k = SimplicialComplex::from_maximal(2, &[vec![0], vec![1]]).unwrap();
        let c = mac_chain_complex_classical(&k, &SpherePairSpec::uniform(2, 1)).unwrap();
        assert_eq!(betti(&c), vec![1, 0, 0, 1]);
    }

    #[test]
    fn classical_cell_counts() {
        let k = four_cycle();
        let expected: usize = std::iter::once(0)
            .chain(k.cells().iter().map(Vec::len))
            .map(|s| 1 << (4 - s))
            .sum();
        for n in [0, 1, 2] {
            let c = mac_chain_complex_classical(&k, &SpherePairSpec::uniform(4, n)).unwrap();
            assert_eq!(c.total_cells(), expected);
        }
    }

    #[test]
    fn panel_four_cycle_is_torus() {
        let p = panelize_simplicial(&four_cycle()).unwrap();
        let c = mac_chain_complex_panel(&p, &SpherePairSpec::uniform(4, 0)).unwrap();
        assert_eq!(betti(&c), vec![1, 2, 1]);
    }

    #[test]
    fn full_and_empty_panels() {
        let y = SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let full = panelize_generic(y.clone(), vec![y.whole(), y.whole()]).unwrap();
        let c = mac_chain_complex_panel(&full, &"1,2".parse().unwrap()).unwrap();
        assert_eq!(betti(&c), vec![1, 1]);
        let empty = crate::complexes::Subcomplex::empty(y.num_cells());
        let none = panelize_generic(y, vec![empty.clone(), empty]).unwrap();
        let c = mac_chain_complex_panel(&none, &SpherePairSpec::uniform(2, 0)).unwrap();
        assert_eq!(betti(&c), vec![4, 4]);
        let h = cohomology(&c, Coefficients::Integers).unwrap();
        assert_eq!(h.rank(1), 4);
    }

    #[test]
    fn spec_length_is_checked() {
        let p = panelize_simplicial(&four_cycle()).unwrap();
        assert!(mac_chain_complex_panel(&p, &SpherePairSpec::uniform(3, 1)).is_err());
    }
}
