use num_bigint::BigInt;
use num_traits::Zero;

use crate::complexes::{SimplicialComplex, Subcomplex};
use crate::error::{Error, Result};

/// Integer cochain on the simplices of one dimension, indexed by cell id
/// relative to the first cell of that dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    pub values: Vec<BigInt>,
}

impl Cochain {
    pub fn zero(y: &SimplicialComplex, degree: usize) -> Cochain {
        Cochain {
            degree,
            values: vec![BigInt::zero(); y.cells_of_dim(degree).len()],
        }
    }

    /// Cochain with the given values on cells of `y` (by cell id).
    pub fn from_cells(y: &SimplicialComplex, degree: usize, entries: &[(usize, BigInt)]) -> Cochain {
        let mut c = Cochain::zero(y, degree);
        let start = y.cells_of_dim(degree).start;
        for (id, v) in entries {
            c.values[id - start] += v;
        }
        c
    }

    /// Constant function `1` on vertices.
    pub fn unit(y: &SimplicialComplex) -> Cochain {
        Cochain {
            degree: 0,
            values: vec![BigInt::from(1); y.cells_of_dim(0).len()],
        }
    }

    pub fn value(&self, y: &SimplicialComplex, id: usize) -> &BigInt {
        &self.values[id - y.cells_of_dim(self.degree).start]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn coboundary(&self, y: &SimplicialComplex) -> Cochain {
        let range = y.cells_of_dim(self.degree + 1);
        let values = range
            .map(|id| {
                y.boundary_faces(id)
                    .iter()
                    .enumerate()
                    .map(|(i, &f)| {
                        let v = self.value(y, f);
                        if i % 2 == 0 {
                            v.clone()
                        } else {
                            -v
                        }
                    })
                    .sum()
            })
            .collect();
        Cochain {
            degree: self.degree + 1,
            values,
        }
    }

    pub fn is_cocycle(&self, y: &SimplicialComplex) -> bool {
        self.coboundary(y).is_zero()
    }

    pub fn vanishes_on(&self, y: &SimplicialComplex, a: &Subcomplex) -> bool {
        y.cells_of_dim(self.degree)
            .all(|id| !a.contains(id) || self.value(y, id).is_zero())
    }

    /// Entries reduced into `[0, p)`.
    pub fn reduce_mod(&mut self, p: u32) {
        use num_integer::Integer;
        let p = BigInt::from(p);
        for v in &mut self.values {
            *v = v.mod_floor(&p);
        }
    }
}

/// Alexander–Whitney product without precondition checks.
pub(crate) fn cup_unchecked(y: &SimplicialComplex, u: &Cochain, v: &Cochain) -> Cochain {
    let (p, q) = (u.degree, v.degree);
    let values = y
        .cells_of_dim(p + q)
        .map(|id| {
            let s = y.cell(id);
            let front = u.value(y, y.id_of(&s[..=p]).expect("front face"));
            if front.is_zero() {
                return BigInt::zero();
            }
            let back = v.value(y, y.id_of(&s[p..]).expect("back face"));
            front * back
        })
        .collect();
    Cochain {
        degree: p + q,
        values,
    }
}

/// Relative cup product `H^p(Y, A) ⊗ H^q(Y, B) → H^{p+q}(Y, A ∪ B)` on
/// cocycles, using front and back faces in the vertex order of `y`.
pub fn simplicial_cup(
    y: &SimplicialComplex,
    u: &Cochain,
    v: &Cochain,
    a: Option<&Subcomplex>,
    b: Option<&Subcomplex>,
) -> Result<Cochain> {
    for c in [u, v] {
        if !c.is_cocycle(y) {
            return Err(Error::NotACocycle { degree: c.degree });
        }
    }
    if a.is_some_and(|a| !u.vanishes_on(y, a)) || b.is_some_and(|b| !v.vanishes_on(y, b)) {
        return Err(Error::AnnihilationViolated);
    }
    Ok(cup_unchecked(y, u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{ChainComplex, CohomologyBasis, Coefficients};

    /// Seven-vertex torus.
    fn torus() -> SimplicialComplex {
        let facets: Vec<Vec<u32>> = (0..7u32)
            .flat_map(|i| [vec![i, (i + 1) % 7, (i + 3) % 7], vec![i, (i + 2) % 7, (i + 3) % 7]])
            .collect();
        SimplicialComplex::from_maximal(7, &facets).unwrap()
    }

    fn classes(y: &SimplicialComplex, n: i32) -> (CohomologyBasis, Vec<Cochain>) {
        let c = ChainComplex::absolute(y);
        let b = CohomologyBasis::new(&c, n, Coefficients::Integers).unwrap();
        let cochains = b
            .generators()
            .iter()
            .map(|g| {
                let entries: Vec<(usize, BigInt)> = b.cells().iter().copied().zip(g.iter().cloned()).collect();
                Cochain::from_cells(y, n as usize, &entries)
            })
            .collect();
        (b, cochains)
    }

    fn coords(y: &SimplicialComplex, b: &CohomologyBasis, c: &Cochain) -> Vec<BigInt> {
        let v: Vec<BigInt> = b.cells().iter().map(|&id| c.value(y, id).clone()).collect();
        b.coordinates(&v).unwrap()
    }

    #[test]
    fn torus_cup_products() {
        let y = torus();
        let h = crate::homology::homology(&ChainComplex::absolute(&y), Coefficients::Integers).unwrap();
        assert_eq!(h.betti(), vec![1, 2, 1]);
        let (_, one) = classes(&y, 1);
        let (b2, _) = classes(&y, 2);
        let uv = coords(&y, &b2, &simplicial_cup(&y, &one[0], &one[1], None, None).unwrap());
        let vu = coords(&y, &b2, &simplicial_cup(&y, &one[1], &one[0], None, None).unwrap());
        assert_eq!(uv.len(), 1);
        assert_eq!(uv[0].magnitude(), &num_bigint::BigUint::from(1u32));
        assert_eq!(vu[0], -uv[0].clone());
        let uu = coords(&y, &b2, &simplicial_cup(&y, &one[0], &one[0], None, None).unwrap());
        assert!(uu[0].is_zero());
    }

    #[test]
    fn unit_and_coboundaries() {
        let y = torus();
        let (b1, one) = classes(&y, 1);
        let unit = Cochain::unit(&y);
        assert_eq!(simplicial_cup(&y, &unit, &one[0], None, None).unwrap(), one[0]);
        let mut f = Cochain::zero(&y, 0);
        f.values[2] = BigInt::from(1);
        let df = f.coboundary(&y);
        let (b2, _) = classes(&y, 2);
        let prod = simplicial_cup(&y, &df, &one[1], None, None).unwrap();
        assert!(coords(&y, &b2, &prod).iter().all(Zero::is_zero));
        assert!(coords(&y, &b1, &df).iter().all(Zero::is_zero));
    }

    #[test]
    fn preconditions() {
        let y = torus();
        let mut bad = Cochain::zero(&y, 1);
        bad.values[0] = BigInt::from(1);
        let unit = Cochain::unit(&y);
        assert!(matches!(
            simplicial_cup(&y, &bad, &unit, None, None),
            Err(Error::NotACocycle { degree: 1 })
        ));
        let a = y.generate(&[vec![0]]).unwrap();
        assert_eq!(
            simplicial_cup(&y, &unit, &unit, Some(&a), None),
            Err(Error::AnnihilationViolated)
        );
    }
}
