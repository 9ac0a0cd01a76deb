//! Additive formulas for the cohomology of polyhedral products of sphere
//! pairs, computed summand by summand over subsets `J ⊆ [m]`.

use rayon::prelude::*;
use serde::Serialize;

use crate::complexes::{SimplicialComplex, SimplicialPoset};
use crate::constructions::{panelize_simplicial, PanelComplex};
use crate::error::Result;
use crate::homology::{cohomology, ChainComplex, Coefficients, GradedGroup};
use crate::spheres::SpherePairSpec;
use crate::subset::Mask;

/// One summand, already shifted into total degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summand {
    pub j: Mask,
    pub shift: i32,
    pub group: GradedGroup,
    /// Not computed because it is known to vanish (a simplex of `K`).
    pub skipped: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
    pub total: GradedGroup,
}

impl Decomposition {
    fn collect(summands: Vec<Summand>) -> Decomposition {
        let mut total = GradedGroup::new();
        for s in &summands {
            total.add_assign(&s.group);
        }
        Decomposition { summands, total }
    }

    pub fn summand(&self, j: Mask) -> Option<&Summand> {
        self.summands.iter().find(|s| s.j == j)
    }

    /// Summands with a nonzero group.
    pub fn nonzero(&self) -> impl Iterator<Item = &Summand> {
        self.summands.iter().filter(|s| !s.group.is_zero())
    }
}

fn per_subset<F>(m: usize, f: F) -> Result<Decomposition>
where
    F: Fn(Mask) -> Result<Summand> + Sync,
{
    let subsets: Vec<Mask> = Mask::all(m).collect();
    let summands = subsets.par_iter().map(|&j| f(j)).collect::<Result<Vec<_>>>()?;
    Ok(Decomposition::collect(summands))
}

/// Contractible `X_j`: the `J`-summand is `H^*(Y, P_J)` shifted up by `N_J`.
pub fn summands_x_contractible(
    p: &PanelComplex,
    spec: &SpherePairSpec,
    coefficients: Coefficients,
) -> Result<Decomposition> {
    spec.check_len(p.m())?;
    per_subset(p.m(), |j| {
        let c = ChainComplex::relative(p.y(), &p.union(j))?;
        let shift = spec.n_sum(j);
        Ok(Summand {
            j,
            shift,
            group: cohomology(&c, coefficients)?.shift(shift),
            skipped: false,
        })
    })
}

/// Contractible `A_j`, with `X_j` a sphere of dimension `n_j + 1`: the
/// `J`-summand is `H^*(P_∩J)` shifted up by `Σ_{j∈J}(n_j + 1)`.
pub fn summands_a_contractible(
    p: &PanelComplex,
    spec: &SpherePairSpec,
    coefficients: Coefficients,
) -> Result<Decomposition> {
    spec.check_len(p.m())?;
    per_subset(p.m(), |j| {
        let c = ChainComplex::of_subcomplex(p.y(), &p.intersection(j), false)?;
        let shift = spec.n_sum(j) + j.len() as i32;
        Ok(Summand {
            j,
            shift,
            group: cohomology(&c, coefficients)?.shift(shift),
            skipped: false,
        })
    })
}

/// Hochster-type table for a simplicial complex. With a uniform spec `n`
/// the `J`-entry is `H̃^*(K_J)` shifted up by `n|J| + 1`; simplices `J ≠ ∅`
/// are skipped unless `include_simplices` is set. Mixed specs go through
/// [`summands_x_contractible`] on `(Y^K, P)`.
pub fn hochster_table(
    k: &SimplicialComplex,
    spec: &SpherePairSpec,
    coefficients: Coefficients,
    include_simplices: bool,
) -> Result<Decomposition> {
    spec.check_len(k.vertex_count())?;
    let Some(n) = spec.uniform_value() else {
        return summands_x_contractible(&panelize_simplicial(k)?, spec, coefficients);
    };
    per_subset(k.vertex_count(), |j| {
        let shift = n as i32 * j.len() as i32 + 1;
        let vertices: Vec<u32> = j.iter().map(|v| v as u32).collect();
        if !j.is_empty() && k.contains(&vertices) && !include_simplices {
            return Ok(Summand {
                j,
                shift,
                group: GradedGroup::new(),
                skipped: true,
            });
        }
        let kj = k.full_subcomplex(&vertices);
        Ok(Summand {
            j,
            shift,
            group: cohomology(&ChainComplex::reduced(&kj), coefficients)?.shift(shift),
            skipped: false,
        })
    })
}

/// Hochster-type table for a simplicial poset, with the order complex of
/// the full subposet `S_J` in place of `K_J`. Mixed specs go through the
/// panel formula on `(Y^S, P)`.
pub fn hochster_table_poset(
    s: &SimplicialPoset,
    spec: &SpherePairSpec,
    coefficients: Coefficients,
) -> Result<Decomposition> {
    spec.check_len(s.vertex_count())?;
    let Some(n) = spec.uniform_value() else {
        return summands_x_contractible(&crate::constructions::panelize_poset(s)?, spec, coefficients);
    };
    let oc = s.order_complex();
    per_subset(s.vertex_count(), |j| {
        let keep: Vec<u32> = (1..s.len())
            .filter(|&e| s.vertex_set(e).is_subset(j))
            .map(|e| e as u32 - 1)
            .collect();
        let sub = oc.full_subcomplex(&keep);
        let shift = n as i32 * j.len() as i32 + 1;
        Ok(Summand {
            j,
            shift,
            group: cohomology(&ChainComplex::reduced(&sub), coefficients)?.shift(shift),
            skipped: false,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::poset::tests::{two_edges, two_triangles};
    use crate::constructions::{panelize_generic, panelize_poset};
    use crate::homology::Group;
    use num_bigint::BigInt;

    fn four_cycle() -> SimplicialComplex {
        SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap()
    }

    #[test]
    fn four_cycle_moment_angle_summands() {
        let p = panelize_simplicial(&four_cycle()).unwrap();
        let d = summands_x_contractible(&p, &SpherePairSpec::uniform(4, 1), Coefficients::Integers).unwrap();
        let nonzero: Vec<(Mask, Vec<usize>)> = d.nonzero().map(|s| (s.j, s.group.betti())).collect();
        assert_eq!(
            nonzero,
            vec![
                (Mask::EMPTY, vec![1]),
                (Mask::from_indices([0, 2]), vec![0, 0, 0, 1]),
                (Mask::from_indices([1, 3]), vec![0, 0, 0, 1]),
                (Mask::full(4), vec![0, 0, 0, 0, 0, 0, 1]),
            ]
        );
        assert_eq!(d.total.betti(), vec![1, 0, 0, 2, 0, 0, 1]);
    }

    #[test]
    fn hochster_four_cycle() {
        let k = four_cycle();
        let one = hochster_table(&k, &SpherePairSpec::uniform(4, 1), Coefficients::Integers, false).unwrap();
        assert_eq!(one.total.betti(), vec![1, 0, 0, 2, 0, 0, 1]);
        let zero = hochster_table(&k, &SpherePairSpec::uniform(4, 0), Coefficients::Integers, false).unwrap();
        assert_eq!(zero.total.betti(), vec![1, 2, 1]);
        let with = hochster_table(&k, &SpherePairSpec::uniform(4, 1), Coefficients::Integers, true).unwrap();
        assert_eq!(with.total, one.total);
        assert_eq!(one.summands.iter().filter(|s| s.skipped).count(), 8);
    }

    #[test]
    fn poset_and_complex_tables_agree() {
        let k = four_cycle();
        let s = SimplicialPoset::face_poset(&k);
        for n in [0, 1] {
            let spec = SpherePairSpec::uniform(4, n);
            let a = hochster_table(&k, &spec, Coefficients::Integers, true).unwrap();
            let b = hochster_table_poset(&s, &spec, Coefficients::Integers).unwrap();
            assert_eq!(a.total, b.total);
        }
    }

    #[test]
    fn a_contractible_two_triangles() {
        let p = panelize_poset(&two_triangles()).unwrap();
        let d = summands_a_contractible(&p, &SpherePairSpec::uniform(3, 1), Coefficients::Integers).unwrap();
        let top = d.summand(Mask::full(3)).unwrap();
        assert_eq!(top.group.get(6), Group::free(2));
    }

    #[test]
    fn a_contractible_single_full_panel() {
        let y = SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let p = panelize_generic(y.clone(), vec![y.whole()]).unwrap();
        let d = summands_a_contractible(&p, &SpherePairSpec::uniform(1, 1), Coefficients::Integers).unwrap();
        assert_eq!(d.total.betti(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn two_edge_poset_table() {
        let s = two_edges();
        let t = hochster_table_poset(&s, &SpherePairSpec::uniform(2, 1), Coefficients::Integers).unwrap();
        assert_eq!(t.summand(Mask::full(2)).unwrap().group.betti(), vec![0, 0, 0, 0, 1]);
        assert_eq!(t.total.betti(), vec![1, 0, 0, 0, 1]);
    }

    #[test]
    fn projective_plane_torsion_in_degree_nine() {
        let tris = [
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 2, 6],
            [2, 3, 5],
            [2, 4, 5],
            [2, 4, 6],
            [3, 4, 6],
            [3, 5, 6],
        ];
        let facets: Vec<Vec<u32>> = tris.iter().map(|t| t.iter().map(|v| v - 1).collect()).collect();
        let k = SimplicialComplex::from_maximal(6, &facets).unwrap();
        let t = hochster_table(&k, &SpherePairSpec::uniform(6, 1), Coefficients::Integers, false).unwrap();
        let full = t.summand(Mask::full(6)).unwrap();
        assert_eq!(full.group.get(9).torsion, vec![BigInt::from(2)]);
        assert_eq!(t.total.get(9).torsion, vec![BigInt::from(2)]);
    }
}
