//! Smith normal form.
//!
//! Pivot rule: smallest nonzero norm in the active block, ties broken by the
//! number of nonzeros in the pivot's row plus column, then by position. All
//! arithmetic is exact; the integer entry point runs in `i64` and restarts in
//! arbitrary precision if any intermediate overflows.

use num_bigint::BigInt;

use super::matrix::{Dense, IntMatrix};
use super::scalar::{BigInts, Scalars, SmallInts};

/// Dense Smith decomposition `U · A · V = D` over a coefficient ring.
#[derive(Debug, Clone)]
pub struct DenseSmith<E> {
    /// Nonzero diagonal entries `d_1 | d_2 | ... | d_r`, each normalized.
    pub diagonal: Vec<E>,
    pub u: Option<Dense<E>>,
    pub u_inv: Option<Dense<E>>,
    pub v: Option<Dense<E>>,
    pub v_inv: Option<Dense<E>>,
}

impl<E> DenseSmith<E> {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

struct Transforms<E> {
    u: Dense<E>,
    u_inv: Dense<E>,
    v: Dense<E>,
    v_inv: Dense<E>,
}

struct Worker<'a, R: Scalars> {
    ring: &'a R,
    a: Dense<R::Elem>,
    t: Option<Transforms<R::Elem>>,
}

impl<R: Scalars> Worker<'_, R> {
    // row[target] += c * row[src]
    fn row_op(&mut self, target: usize, src: usize, c: &R::Elem) -> Option<()> {
        self.a.add_row_multiple(self.ring, target, src, c)?;
        if let Some(t) = &mut self.t {
            t.u.add_row_multiple(self.ring, target, src, c)?;
            let neg = self.ring.neg(c)?;
            t.u_inv.add_col_multiple(self.ring, src, target, &neg)?;
        }
        Some(())
    }

    // col[target] += c * col[src]
    fn col_op(&mut self, target: usize, src: usize, c: &R::Elem) -> Option<()> {
        self.a.add_col_multiple(self.ring, target, src, c)?;
        if let Some(t) = &mut self.t {
            t.v.add_col_multiple(self.ring, target, src, c)?;
            let neg = self.ring.neg(c)?;
            t.v_inv.add_row_multiple(self.ring, src, target, &neg)?;
        }
        Some(())
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        self.a.swap_rows(i, k);
        if let Some(t) = &mut self.t {
            t.u.swap_rows(i, k);
            t.u_inv.swap_cols(i, k);
        }
    }

    fn swap_cols(&mut self, i: usize, k: usize) {
        self.a.swap_cols(i, k);
        if let Some(t) = &mut self.t {
            t.v.swap_cols(i, k);
            t.v_inv.swap_rows(i, k);
        }
    }

    fn scale_row(&mut self, k: usize, unit: &R::Elem) -> Option<()> {
        self.a.scale_row(self.ring, k, unit)?;
        if let Some(t) = &mut self.t {
            t.u.scale_row(self.ring, k, unit)?;
            let inv = self.ring.unit_inverse(unit);
            t.u_inv.scale_col(self.ring, k, &inv)?;
        }
        Some(())
    }

    fn select_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let (m, n) = (self.a.rows, self.a.cols);
        let row_counts: Vec<usize> = (k..m)
            .map(|i| (k..n).filter(|&j| !self.ring.is_zero(self.a.at(i, j))).count())
            .collect();
        let col_counts: Vec<usize> = (k..n)
            .map(|j| (k..m).filter(|&i| !self.ring.is_zero(self.a.at(i, j))).count())
            .collect();
        let mut best: Option<(usize, usize)> = None;
        for i in k..m {
            for j in k..n {
                let v = self.a.at(i, j);
                if self.ring.is_zero(v) {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => {
                        let bv = self.a.at(bi, bj);
                        match self.ring.cmp_norm(v, bv) {
                            std::cmp::Ordering::Less => true,
                            std::cmp::Ordering::Greater => false,
                            std::cmp::Ordering::Equal => {
                                row_counts[i - k] + col_counts[j - k]
                                    < row_counts[bi - k] + col_counts[bj - k]
                            }
                        }
                    }
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Smallest-norm nonzero entry of column `k` at or below row `k`.
    fn min_in_column(&self, k: usize) -> Option<usize> {
        (k..self.a.rows)
            .filter(|&i| !self.ring.is_zero(self.a.at(i, k)))
            .min_by(|&x, &y| self.ring.cmp_norm(self.a.at(x, k), self.a.at(y, k)))
    }

    fn min_in_row(&self, k: usize) -> Option<usize> {
        (k..self.a.cols)
            .filter(|&j| !self.ring.is_zero(self.a.at(k, j)))
            .min_by(|&x, &y| self.ring.cmp_norm(self.a.at(k, x), self.a.at(k, y)))
    }

    fn run(mut self) -> Option<DenseSmith<R::Elem>> {
        let (m, n) = (self.a.rows, self.a.cols);
        let mut diagonal = Vec::new();
        let mut k = 0;
        while k < m.min(n) {
            let Some((pi, pj)) = self.select_pivot(k) else {
                break;
            };
            self.swap_rows(k, pi);
            self.swap_cols(k, pj);
            loop {
                // Column k below the pivot.
                let mut remainder = false;
                for i in k + 1..m {
                    if self.ring.is_zero(self.a.at(i, k)) {
                        continue;
                    }
                    let (q, r) = self.ring.div_rem(self.a.at(i, k), self.a.at(k, k))?;
                    let nq = self.ring.neg(&q)?;
                    self.row_op(i, k, &nq)?;
                    if !self.ring.is_zero(&r) {
                        remainder = true;
                    }
                }
                if remainder {
                    let i = self.min_in_column(k).expect("pivot column is nonzero");
                    self.swap_rows(k, i);
                    continue;
                }
                // Row k right of the pivot.
                for j in k + 1..n {
                    if self.ring.is_zero(self.a.at(k, j)) {
                        continue;
                    }
                    let (q, r) = self.ring.div_rem(self.a.at(k, j), self.a.at(k, k))?;
                    let nq = self.ring.neg(&q)?;
                    self.col_op(j, k, &nq)?;
                    if !self.ring.is_zero(&r) {
                        remainder = true;
                    }
                }
                if remainder {
                    let j = self.min_in_row(k).expect("pivot row is nonzero");
                    self.swap_cols(k, j);
                    continue;
                }
                // Divisibility of the remaining block by the pivot.
                let pivot = self.a.at(k, k).clone();
                let mut offender = None;
                'scan: for i in k + 1..m {
                    for j in k + 1..n {
                        let v = self.a.at(i, j);
                        if self.ring.is_zero(v) {
                            continue;
                        }
                        let (_, r) = self.ring.div_rem(v, &pivot)?;
                        if !self.ring.is_zero(&r) {
                            offender = Some(i);
                            break 'scan;
                        }
                    }
                }
                match offender {
                    Some(i) => {
                        let one = self.ring.one();
                        self.row_op(k, i, &one)?;
                    }
                    None => break,
                }
            }
            let unit = self.ring.normalizing_unit(self.a.at(k, k));
            self.scale_row(k, &unit)?;
            diagonal.push(self.a.at(k, k).clone());
            k += 1;
        }
        let (u, u_inv, v, v_inv) = match self.t {
            Some(t) => (Some(t.u), Some(t.u_inv), Some(t.v), Some(t.v_inv)),
            None => (None, None, None, None),
        };
        Some(DenseSmith {
            diagonal,
            u,
            u_inv,
            v,
            v_inv,
        })
    }
}

/// Runs Smith elimination over `ring`. Returns `None` only if the ring
/// reports overflow.
pub fn dense_smith<R: Scalars>(
    ring: &R,
    a: Dense<R::Elem>,
    track_transforms: bool,
) -> Option<DenseSmith<R::Elem>> {
    let t = track_transforms.then(|| Transforms {
        u: Dense::identity(ring, a.rows),
        u_inv: Dense::identity(ring, a.rows),
        v: Dense::identity(ring, a.cols),
        v_inv: Dense::identity(ring, a.cols),
    });
    Worker { ring, a, t }.run()
}

/// Integer Smith decomposition `U · A · V = D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries of `D`, in order.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i))
            .take_while(|v| v != &BigInt::from(0))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().len()
    }
}

fn smith_in<R: Scalars>(ring: &R, a: &IntMatrix) -> Option<SmithForm> {
    let dense = a.to_dense(ring)?;
    let (rows, cols) = (dense.rows, dense.cols);
    let s = dense_smith(ring, dense, true)?;
    let mut d = Dense::zeros(ring, rows, cols);
    for (i, x) in s.diagonal.iter().enumerate() {
        *d.at_mut(i, i) = x.clone();
    }
    Some(SmithForm {
        u: IntMatrix::from_dense(ring, s.u.as_ref()?),
        d: IntMatrix::from_dense(ring, &d),
        v: IntMatrix::from_dense(ring, s.v.as_ref()?),
        u_inv: IntMatrix::from_dense(ring, s.u_inv.as_ref()?),
        v_inv: IntMatrix::from_dense(ring, s.v_inv.as_ref()?),
    })
}

/// Smith normal form of an integer matrix. Deterministic for identical input.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    smith_in(&SmallInts, a)
        .or_else(|| smith_in(&BigInts, a))
        .expect("arbitrary-precision elimination cannot overflow")
}

/// Checks `U·A·V = D`, `U·U⁻¹ = I`, `V·V⁻¹ = I` and the divisibility chain of `D`.
pub fn verify_smith(a: &IntMatrix, s: &SmithForm) -> bool {
    use num_integer::Integer;
    use num_traits::{Signed, Zero};

    if s.u.mul(a).mul(&s.v) != s.d {
        return false;
    }
    if s.u.mul(&s.u_inv) != IntMatrix::identity(a.rows())
        || s.v.mul(&s.v_inv) != IntMatrix::identity(a.cols())
    {
        return false;
    }
    // Off-diagonal zeros, then the diagonal chain.
    if s.d.triplets().any(|(r, c, _)| r != c) {
        return false;
    }
    let diag: Vec<BigInt> = (0..a.rows().min(a.cols())).map(|i| s.d.get(i, i)).collect();
    let nonzero = diag.iter().take_while(|v| !v.is_zero()).count();
    if diag[nonzero..].iter().any(|v| !v.is_zero()) {
        return false;
    }
    diag[..nonzero].iter().all(|v| v.is_positive())
        && diag[..nonzero].windows(2).all(|w| w[1].is_multiple_of(&w[0]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diag_two_three_becomes_one_six() {
        // Hand elimination: gcd(2,3) = 1 and lcm(2,3) = 6.
        let a = IntMatrix::from_i64_rows(&[vec![2, 0], vec![0, 3]]);
        let s = smith_normal_form(&a);
        assert!(verify_smith(&a, &s));
        assert_eq!(s.d.to_rows_i64().unwrap(), vec![vec![1, 0], vec![0, 6]]);
    }

    #[test]
    fn zero_matrix_keeps_identity_transforms() {
        let a = IntMatrix::zeros(3, 2);
        let s = smith_normal_form(&a);
        assert!(s.d.is_zero());
        assert_eq!(s.u, IntMatrix::identity(3));
        assert_eq!(s.v, IntMatrix::identity(2));
    }

    #[test]
    fn identity_is_fixed() {
        let a = IntMatrix::identity(4);
        let s = smith_normal_form(&a);
        assert_eq!(s.d, a);
        assert!(verify_smith(&a, &s));
    }

    #[test]
    fn empty_matrices_are_legal() {
        for (r, c) in [(0, 0), (0, 3), (2, 0)] {
            let a = IntMatrix::zeros(r, c);
            let s = smith_normal_form(&a);
            assert!(verify_smith(&a, &s));
            assert_eq!(s.rank(), 0);
        }
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = i64::MAX / 2;
        let a = IntMatrix::from_i64_rows(&[vec![big, big - 1], vec![big - 3, big]]);
        let s = smith_normal_form(&a);
        assert!(verify_smith(&a, &s));
        // |det| = big^2 - (big-1)(big-3) = 4 big - 3, so D = diag(1, 4 big - 3).
        assert_eq!(s.diagonal()[1], BigInt::from(big) * 4 - 3);
    }

    #[test]
    fn torsion_example() {
        let a = IntMatrix::from_i64_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let s = smith_normal_form(&a);
        assert!(verify_smith(&a, &s));
        assert_eq!(
            s.diagonal(),
            vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
    }
}
