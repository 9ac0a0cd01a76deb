use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::cochain::{cup_unchecked, Cochain};
use crate::constructions::PanelComplex;
use crate::error::{Error, Result};
use crate::homology::{ChainComplex, Coefficients, CohomologyBasis, GradedGroup, Group};
use crate::spheres::SpherePairSpec;
use crate::subset::Mask;

/// One additive generator of the ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisClass {
    pub j: Mask,
    /// Degree inside `H^*(Y, P_J)`.
    pub q: i32,
    /// Total degree `q + N_J`.
    pub degree: i32,
    /// Additive order; `None` for a free generator.
    #[serde(serialize_with = "crate::ser::opt_bigint")]
    pub order: Option<BigInt>,
    pub label: String,
}

/// Nonzero product of two basis elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Product {
    pub left: usize,
    pub right: usize,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub index: usize,
    #[serde(serialize_with = "crate::ser::bigint")]
    pub coefficient: BigInt,
}

/// Finite presentation of a graded ring: basis classes and structure constants.
#[derive(Debug, Clone, Serialize)]
pub struct RingModel {
    pub coefficients: Coefficients,
    pub spec: SpherePairSpec,
    pub basis: Vec<BasisClass>,
    #[serde(skip)]
    table: BTreeMap<(usize, usize), Vec<(usize, BigInt)>>,
    products: Vec<Product>,
}

/// An element of a [`RingModel`] as a coordinate vector.
pub type Element = Vec<BigInt>;

impl RingModel {
    fn new(
        coefficients: Coefficients,
        spec: SpherePairSpec,
        basis: Vec<BasisClass>,
        table: BTreeMap<(usize, usize), Vec<(usize, BigInt)>>,
    ) -> RingModel {
        let products = table
            .iter()
            .map(|(&(left, right), terms)| Product {
                left,
                right,
                terms: terms
                    .iter()
                    .map(|(index, c)| Term {
                        index: *index,
                        coefficient: c.clone(),
                    })
                    .collect(),
            })
            .collect();
        RingModel {
            coefficients,
            spec,
            basis,
            table,
            products,
        }
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Structure constants of `e_a · e_b`; empty when the product is zero.
    pub fn product(&self, a: usize, b: usize) -> &[(usize, BigInt)] {
        self.table.get(&(a, b)).map_or(&[], Vec::as_slice)
    }

    /// Nonzero products, ordered by `(left, right)`.
    pub fn products(&self) -> &[Product] {
        &self.products
    }

    pub fn basis_vector(&self, a: usize) -> Element {
        let mut v = vec![BigInt::zero(); self.len()];
        v[a] = BigInt::one();
        v
    }

    /// Reduces coordinates by the additive order of each generator.
    pub fn normalize(&self, v: &mut Element) {
        for (x, b) in v.iter_mut().zip(&self.basis) {
            if let Coefficients::Mod(p) = self.coefficients {
                *x = x.mod_floor(&BigInt::from(p));
            }
            if let Some(d) = &b.order {
                *x = x.mod_floor(d);
            }
        }
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Element {
        let mut out = vec![BigInt::zero(); self.len()];
        for ((a, b), terms) in &self.table {
            if x[*a].is_zero() || y[*b].is_zero() {
                continue;
            }
            let s = &x[*a] * &y[*b];
            for (c, k) in terms {
                out[*c] += &s * k;
            }
        }
        self.normalize(&mut out);
        out
    }

    /// Index of the unit class, when the ring has one in degree 0.
    pub fn unit(&self) -> Option<usize> {
        self.basis
            .iter()
            .position(|b| b.j.is_empty() && b.q == 0 && b.order.is_none())
    }

    /// Additive structure read off the basis.
    pub fn graded_group(&self) -> GradedGroup {
        let mut out = GradedGroup::new();
        for b in &self.basis {
            let g = match &b.order {
                None => Group::free(1),
                Some(d) => Group {
                    rank: 0,
                    torsion: vec![d.clone()],
                },
            };
            out.add_assign(&{
                let mut one = GradedGroup::new();
                one.set(b.degree, g);
                one
            });
        }
        out
    }

    /// First pair violating `ab = (-1)^{|a||b|} ba`.
    pub fn graded_commutativity_violation(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).find(|&(a, b)| {
            let ab = self.multiply(&self.basis_vector(a), &self.basis_vector(b));
            let mut ba = self.multiply(&self.basis_vector(b), &self.basis_vector(a));
            if (self.basis[a].degree * self.basis[b].degree) % 2 != 0 {
                ba.iter_mut().for_each(|x| *x = -x.clone());
                self.normalize(&mut ba);
            }
            ab != ba
        })
    }

    /// First triple violating `(ab)c = a(bc)`.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        let triples: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
            .collect();
        triples.into_par_iter().find_first(|&(a, b, c)| {
            let (ea, eb, ec) = (self.basis_vector(a), self.basis_vector(b), self.basis_vector(c));
            self.multiply(&self.multiply(&ea, &eb), &ec) != self.multiply(&ea, &self.multiply(&eb, &ec))
        })
    }

    /// First pair of basis classes whose blocks overlap in some `j` with
    /// `n_j ≥ 1` but whose product is nonzero.
    pub fn annihilation_violation(&self) -> Option<(usize, usize)> {
        self.table.keys().copied().find(|&(a, b)| {
            let overlap = self.basis[a].j.intersection(self.basis[b].j);
            overlap.iter().any(|j| self.spec.dim(j) >= 1)
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ring model serializes")
    }
}

struct Block {
    j: Mask,
    q: i32,
    basis: CohomologyBasis,
    cochains: Vec<Cochain>,
    offset: usize,
}

/// `ε = (-1)^{Σ n_j n_{j'}}` over `j ∈ J`, `j' ∈ J'` with `j > j'`.
fn exchange_sign(spec: &SpherePairSpec, j: Mask, jp: Mask) -> bool {
    let mut odd = false;
    for a in j.iter() {
        for b in jp.iter().filter(|&b| b < a) {
            odd ^= (spec.dim(a) * spec.dim(b)) % 2 == 1;
        }
    }
    odd
}

/// Cohomology ring of `(D^{n_j+1}, S^{n_j})^{(Y,P)}`, assembled from the
/// relative cup products `H^*(Y, P_J) ⊗ H^*(Y, P_{J'}) → H^*(Y, P_{J∪J'})`.
///
/// For `u = φ⊗ι_J`, `v = φ'⊗ι_{J'}` the product is zero when some
/// `j ∈ J ∩ J'` has `n_j ≥ 1`; otherwise it is
/// `(-1)^{N_J·q'} ε (φ ∪ φ') ⊗ ι_{J∪J'}` in total degree `q + q' + N_{J∪J'}`.
pub fn ds_ring(p: &PanelComplex, spec: &SpherePairSpec, coefficients: Coefficients) -> Result<RingModel> {
    spec.check_len(p.m())?;
    let y = p.y();
    let top = y.dimension().max(0) as i32;
    let keys: Vec<(Mask, i32)> = Mask::all(p.m())
        .flat_map(|j| (0..=top).map(move |q| (j, q)))
        .collect();
    let found: Vec<Option<(Mask, i32, CohomologyBasis)>> = keys
        .par_iter()
        .map(|&(j, q)| {
            let c = ChainComplex::relative(y, &p.union(j))?;
            let b = CohomologyBasis::new(&c, q, coefficients)?;
            Ok((!b.is_empty()).then_some((j, q, b)))
        })
        .collect::<Result<_>>()?;
    let mut blocks = Vec::new();
    let mut basis = Vec::new();
    for (j, q, b) in found.into_iter().flatten() {
        let cochains = b
            .generators()
            .iter()
            .map(|g| {
                let entries: Vec<(usize, BigInt)> = b.cells().iter().copied().zip(g.iter().cloned()).collect();
                Cochain::from_cells(y, q as usize, &entries)
            })
            .collect();
        let offset = basis.len();
        for (i, order) in b.orders().iter().enumerate() {
            basis.push(BasisClass {
                j,
                q,
                degree: q + spec.n_sum(j),
                order: order.clone(),
                label: format!("{}.{}.{}", j.label(), q, i),
            });
        }
        blocks.push(Block {
            j,
            q,
            basis: b,
            cochains,
            offset,
        });
    }
    let index: BTreeMap<(Mask, i32), usize> = blocks.iter().enumerate().map(|(i, b)| ((b.j, b.q), i)).collect();
    let pairs: Vec<(usize, usize)> = (0..blocks.len())
        .flat_map(|a| (0..blocks.len()).map(move |b| (a, b)))
        .collect();
    let partial: Vec<Vec<((usize, usize), Vec<(usize, BigInt)>)>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let (u, v) = (&blocks[a], &blocks[b]);
            let overlap = u.j.intersection(v.j);
            if overlap.iter().any(|j| spec.dim(j) >= 1) {
                return Ok(Vec::new());
            }
            let Some(&t) = index.get(&(u.j.union(v.j), u.q + v.q)) else {
                return Ok(Vec::new());
            };
            let target = &blocks[t];
            let negate = ((spec.n_sum(u.j) * v.q) % 2 != 0) ^ exchange_sign(spec, u.j, v.j);
            let mut out = Vec::new();
            for (x, cx) in u.cochains.iter().enumerate() {
                for (w, cw) in v.cochains.iter().enumerate() {
                    let prod = cup_unchecked(y, cx, cw);
                    let values: Vec<BigInt> = target.basis.cells().iter().map(|&id| prod.value(y, id).clone()).collect();
                    let coords = target.basis.coordinates(&values).map_err(|e| {
                        Error::Internal(format!("cup product of {} and {} is not a relative cocycle: {e}", u.j, v.j))
                    })?;
                    let terms: Vec<(usize, BigInt)> = coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (target.offset + i, if negate { -c } else { c }))
                        .collect();
                    if !terms.is_empty() {
                        out.push(((u.offset + x, v.offset + w), terms));
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut model = RingModel::new(coefficients, spec.clone(), basis, BTreeMap::new());
    let mut table = BTreeMap::new();
    for (key, terms) in partial.into_iter().flatten() {
        let mut v = vec![BigInt::zero(); model.len()];
        for (i, c) in terms {
            v[i] += c;
        }
        model.normalize(&mut v);
        let terms: Vec<(usize, BigInt)> = v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        if !terms.is_empty() {
            table.insert(key, terms);
        }
    }
    model = RingModel::new(coefficients, spec.clone(), model.basis, table);
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::SimplicialComplex;
    use crate::constructions::panelize_simplicial;
    use crate::decomp::summands_x_contractible;

    fn four_cycle() -> SimplicialComplex {
        SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap()
    }

    #[test]
    fn four_cycle_real_torus_ring() {
        let p = panelize_simplicial(&four_cycle()).unwrap();
        let r = ds_ring(&p, &SpherePairSpec::uniform(4, 0), Coefficients::Integers).unwrap();
        assert_eq!(r.graded_group().betti(), vec![1, 2, 1]);
        let ones: Vec<usize> = (0..r.len()).filter(|&i| r.basis[i].degree == 1).collect();
        let two = (0..r.len()).find(|&i| r.basis[i].degree == 2).unwrap();
        assert_eq!(ones.len(), 2);
        let prod = r.product(ones[0], ones[1]);
        assert_eq!(prod.len(), 1);
        assert_eq!(prod[0].0, two);
        assert!(prod[0].1.is_one() || (-&prod[0].1).is_one());
        for &a in &ones {
            assert!(r.product(a, a).is_empty());
        }
        assert_eq!(r.graded_commutativity_violation(), None);
        assert_eq!(r.associativity_violation(), None);
    }

    #[test]
    fn moment_angle_ring() {
        let p = panelize_simplicial(&four_cycle()).unwrap();
        let spec = SpherePairSpec::uniform(4, 1);
        let r = ds_ring(&p, &spec, Coefficients::Integers).unwrap();
        let d = summands_x_contractible(&p, &spec, Coefficients::Integers).unwrap();
        assert_eq!(r.graded_group(), d.total);
        assert_eq!(r.annihilation_violation(), None);
        assert_eq!(r.graded_commutativity_violation(), None);
        assert_eq!(r.associativity_violation(), None);
        let threes: Vec<usize> = (0..r.len()).filter(|&i| r.basis[i].degree == 3).collect();
        let six = (0..r.len()).find(|&i| r.basis[i].degree == 6).unwrap();
        let prod = r.product(threes[0], threes[1]);
        assert_eq!(prod.len(), 1);
        assert_eq!(prod[0].0, six);
        let unit = r.unit().unwrap();
        for a in 0..r.len() {
            assert_eq!(r.multiply(&r.basis_vector(unit), &r.basis_vector(a)), r.basis_vector(a));
        }
    }

    #[test]
    fn mixed_spec_signs() {
        let p = panelize_simplicial(&four_cycle()).unwrap();
        let spec: SpherePairSpec = "1,2,0,1".parse().unwrap();
        let r = ds_ring(&p, &spec, Coefficients::Integers).unwrap();
        let d = summands_x_contractible(&p, &spec, Coefficients::Integers).unwrap();
        assert_eq!(r.graded_group(), d.total);
        assert_eq!(r.graded_commutativity_violation(), None);
        assert_eq!(r.associativity_violation(), None);
    }

    #[test]
    fn json_lists_basis_and_products() {
        let p = panelize_simplicial(&four_cycle()).unwrap();
        let r = ds_ring(&p, &SpherePairSpec::uniform(4, 0), Coefficients::Integers).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["basis"].as_array().unwrap().len(), 4);
        assert!(!v["products"].as_array().unwrap().is_empty());
    }
}
