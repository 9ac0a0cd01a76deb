use num_bigint::BigInt;
use serde::Serialize;

use super::matrix::{IntMatrix, TripletJson};
use crate::complexes::{SimplicialComplex, Subcomplex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Absolute,
    Relative,
    Reduced,
}

/// Sparse-triplet dump of a chain complex.
#[derive(Debug, Clone, Serialize)]
pub struct ChainDump {
    pub flavor: Flavor,
    pub low: i32,
    pub dims: Vec<usize>,
    /// `boundaries[i]` leaves degree `low + i`.
    pub boundaries: Vec<TripletJson>,
}

/// Finite chain complex of free abelian groups with sparse integer boundaries.
///
/// Degrees run from `low` upward; `boundary(n)` maps `C_n` to `C_{n-1}`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    flavor: Flavor,
    low: i32,
    dims: Vec<usize>,
    boundaries: Vec<IntMatrix>,
    cells: Vec<Vec<usize>>,
}

impl ChainComplex {
    /// Assembles a complex from its boundary maps. `boundaries[i]` is `∂`
    /// out of degree `low + i`; the shapes must chain together.
    pub fn from_boundaries(flavor: Flavor, low: i32, boundaries: Vec<IntMatrix>) -> Result<ChainComplex> {
        let dims: Vec<usize> = boundaries.iter().map(IntMatrix::cols).collect();
        for (i, b) in boundaries.iter().enumerate() {
            let expected = if i == 0 { 0 } else { dims[i - 1] };
            if b.rows() != expected {
                return Err(Error::Internal(format!(
                    "boundary out of degree {} has {} rows, expected {}",
                    low + i as i32,
                    b.rows(),
                    expected
                )));
            }
        }
        Ok(ChainComplex {
            flavor,
            low,
            cells: dims.iter().map(|_| Vec::new()).collect(),
            dims,
            boundaries,
        })
    }

    /// Simplicial chains of `k`.
    pub fn absolute(k: &SimplicialComplex) -> ChainComplex {
        Self::build(k, &k.whole(), None, Flavor::Absolute)
    }

    /// Augmented simplicial chains of `k`, with one cell in degree `-1`.
    pub fn reduced(k: &SimplicialComplex) -> ChainComplex {
        Self::build(k, &k.whole(), None, Flavor::Reduced)
    }

    /// Chains of `k` modulo the subcomplex `a`.
    pub fn relative(k: &SimplicialComplex, a: &Subcomplex) -> Result<ChainComplex> {
        Self::pair(k, &k.whole(), a)
    }

    /// Chains of the subcomplex `x` of `k`, optionally augmented.
    pub fn of_subcomplex(k: &SimplicialComplex, x: &Subcomplex, reduced: bool) -> Result<ChainComplex> {
        check_closed(k, x)?;
        let flavor = if reduced { Flavor::Reduced } else { Flavor::Absolute };
        Ok(Self::build(k, x, None, flavor))
    }

    /// Chains of `x` modulo `a`, both subcomplexes of `k` with `a ⊆ x`.
    pub fn pair(k: &SimplicialComplex, x: &Subcomplex, a: &Subcomplex) -> Result<ChainComplex> {
        check_closed(k, x)?;
        check_closed(k, a)?;
        if !a.is_subset(x) {
            return Err(Error::NotASubcomplex {
                index: 0,
                reason: "the pair subcomplex is not contained in the space".into(),
            });
        }
        Ok(Self::build(k, x, Some(a), Flavor::Relative))
    }

    fn build(k: &SimplicialComplex, x: &Subcomplex, a: Option<&Subcomplex>, flavor: Flavor) -> ChainComplex {
        let top = k.dimension().max(-1);
        let keep = |id: usize| x.contains(id) && !a.is_some_and(|a| a.contains(id));
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut position = vec![usize::MAX; k.num_cells()];
        for d in 0..=top {
            let ids: Vec<usize> = k.cells_of_dim(d as usize).filter(|&id| keep(id)).collect();
            for (i, &id) in ids.iter().enumerate() {
                position[id] = i;
            }
            cells.push(ids);
        }
        let mut boundaries = Vec::new();
        let augmented = flavor == Flavor::Reduced;
        if augmented {
            boundaries.push(IntMatrix::zeros(0, 1));
        }
        for d in 0..cells.len() {
            let rows = if d == 0 {
                usize::from(augmented)
            } else {
                cells[d - 1].len()
            };
            let mut triplets = Vec::new();
            for (c, &id) in cells[d].iter().enumerate() {
                if d == 0 {
                    if augmented {
                        triplets.push((0, c, BigInt::from(1)));
                    }
                    continue;
                }
                for (i, &f) in k.boundary_faces(id).iter().enumerate() {
                    if keep(f) {
                        let sign = if i % 2 == 0 { 1 } else { -1 };
                        triplets.push((position[f], c, BigInt::from(sign)));
                    }
                }
            }
            boundaries.push(IntMatrix::from_triplets(rows, cells[d].len(), triplets));
        }
        if augmented {
            cells.insert(0, Vec::new());
        }
        let low = if augmented { -1 } else { 0 };
        let dims = boundaries.iter().map(IntMatrix::cols).collect();
        ChainComplex {
            flavor,
            low,
            dims,
            boundaries,
            cells,
        }
    }

    pub fn dump(&self) -> ChainDump {
        ChainDump {
            flavor: self.flavor,
            low: self.low,
            dims: self.dims.clone(),
            boundaries: self.boundaries.iter().map(IntMatrix::to_triplet_json).collect(),
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Lowest degree that may carry cells.
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest degree that may carry cells (`low - 1` when there are none).
    pub fn high(&self) -> i32 {
        self.low + self.dims.len() as i32 - 1
    }

    pub fn dim(&self, n: i32) -> usize {
        self.index(n).map_or(0, |i| self.dims[i])
    }

    fn index(&self, n: i32) -> Option<usize> {
        let i = n - self.low;
        (i >= 0 && (i as usize) < self.dims.len()).then_some(i as usize)
    }

    /// `∂_n : C_n → C_{n-1}`.
    pub fn boundary(&self, n: i32) -> IntMatrix {
        match self.index(n) {
            Some(i) => self.boundaries[i].clone(),
            None => IntMatrix::zeros(self.dim(n - 1), self.dim(n)),
        }
    }

    pub(crate) fn boundary_ref(&self, n: i32) -> Option<&IntMatrix> {
        self.index(n).map(|i| &self.boundaries[i])
    }

    /// Parent cell ids spanning `C_n`, for complexes built from a simplicial complex.
    pub fn cells(&self, n: i32) -> &[usize] {
        self.index(n).map_or(&[], |i| &self.cells[i])
    }

    pub fn total_cells(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        (self.low..=self.high())
            .map(|n| if n.rem_euclid(2) == 0 { self.dim(n) as i64 } else { -(self.dim(n) as i64) })
            .sum()
    }

    /// Exact check of `∂_{n} ∂_{n+1} = 0` in every degree.
    pub fn check_boundary_square(&self) -> Result<()> {
        for n in self.low + 1..=self.high() {
            let (Some(a), Some(b)) = (self.boundary_ref(n), self.boundary_ref(n + 1)) else {
                continue;
            };
            if !a.mul(b).is_zero() {
                return Err(Error::BoundarySquareNonzero { degree: n + 1 });
            }
        }
        Ok(())
    }
}

fn check_closed(k: &SimplicialComplex, s: &Subcomplex) -> Result<()> {
    if s.capacity() != k.num_cells() {
        return Err(Error::NotASubcomplex {
            index: 0,
            reason: "cell set belongs to a different complex".into(),
        });
    }
    if !k.is_closed(s) {
        return Err(Error::NotASubcomplex {
            index: 0,
            reason: "not closed under faces".into(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn four_cycle() -> SimplicialComplex {
        SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap()
    }

    #[test]
    fn cycle_incidence_matrix() {
        let c = ChainComplex::absolute(&four_cycle());
        let d1 = c.boundary(1).to_rows_i64().unwrap();
        assert_eq!(d1.len(), 4);
        for col in 0..4 {
            let column: Vec<i64> = d1.iter().map(|r| r[col]).collect();
            assert_eq!(column.iter().sum::<i64>(), 0);
            assert_eq!(column.iter().filter(|&&x| x != 0).count(), 2);
        }
        assert!(c.check_boundary_square().is_ok());
        assert_eq!(c.euler_characteristic(), 0);
    }

    #[test]
    fn empty_reduced_complex_has_augmentation_only() {
        let c = ChainComplex::reduced(&SimplicialComplex::empty(2));
        assert_eq!(c.low(), -1);
        assert_eq!(c.high(), -1);
        assert_eq!(c.dim(-1), 1);
    }

    #[test]
    fn relative_needs_a_subcomplex() {
        let k = four_cycle();
        let mut s = Subcomplex::empty(k.num_cells());
        s.insert(k.id_of(&[0, 1]).unwrap());
        assert!(ChainComplex::relative(&k, &s).is_err());
        let closed = k.generate(&[vec![0, 1]]).unwrap();
        let rel = ChainComplex::relative(&k, &closed).unwrap();
        assert_eq!(rel.euler_characteristic(), -1);
        assert!(rel.check_boundary_square().is_ok());
    }

    #[test]
    fn triangle_boundary_square_vanishes() {
        let c = ChainComplex::reduced(&SimplicialComplex::simplex(4));
        assert!(c.check_boundary_square().is_ok());
        assert_eq!(c.euler_characteristic(), 0);
    }
}
