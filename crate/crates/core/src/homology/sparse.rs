//! Rank and invariant factors of large sparse matrices.
//!
//! Unit pivots are eliminated first in Markowitz order (shortest column, then
//! shortest row); a unit pivot contributes an invariant factor of 1 and its
//! row and column can be dropped without further column operations. Whatever
//! survives holds no unit entry and is handed to the dense Smith kernel.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;

use super::matrix::{Dense, IntMatrix};
use super::scalar::{BigInts, PrimeField, Scalars, SmallInts};
use super::smith::dense_smith;

/// Rank and non-unit invariant factors of a matrix.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MatrixInvariants {
    pub rank: usize,
    /// Invariant factors greater than one, ascending in the divisibility chain.
    pub torsion: Vec<BigInt>,
}

type Row<E> = Vec<(u32, E)>;

struct Eliminator<'a, R: Scalars> {
    ring: &'a R,
    rows: Vec<Row<R::Elem>>,
    col_rows: Vec<Vec<u32>>,
    col_done: Vec<bool>,
    heap: BinaryHeap<Reverse<(usize, u32)>>,
    rank: usize,
}

impl<'a, R: Scalars> Eliminator<'a, R> {
    fn new(ring: &'a R, a: &IntMatrix) -> Option<Self> {
        let mut rows: Vec<Row<R::Elem>> = vec![Vec::new(); a.rows()];
        let mut col_rows = vec![Vec::new(); a.cols()];
        for c in 0..a.cols() {
            for (r, v) in a.column(c) {
                let e = ring.from_bigint(v)?;
                if ring.is_zero(&e) {
                    continue;
                }
                rows[*r as usize].push((c as u32, e));
                col_rows[c].push(*r);
            }
        }
        let heap = col_rows
            .iter()
            .enumerate()
            .map(|(c, rs)| Reverse((rs.len(), c as u32)))
            .collect();
        Some(Eliminator {
            ring,
            rows,
            col_done: vec![false; a.cols()],
            col_rows,
            heap,
            rank: 0,
        })
    }

    fn entry(&self, r: u32, c: u32) -> Option<&R::Elem> {
        let row = &self.rows[r as usize];
        row.binary_search_by_key(&c, |(col, _)| *col)
            .ok()
            .map(|i| &row[i].1)
    }

    fn remove_from_col(&mut self, c: u32, r: u32) {
        let list = &mut self.col_rows[c as usize];
        if let Some(pos) = list.iter().position(|&x| x == r) {
            list.swap_remove(pos);
        }
        self.heap.push(Reverse((list.len(), c)));
    }

    /// `row[target] -= factor * row[pivot]`, maintaining the column index.
    fn eliminate(&mut self, target: u32, pivot: u32, factor: &R::Elem) -> Option<()> {
        let src = std::mem::take(&mut self.rows[pivot as usize]);
        let old = std::mem::take(&mut self.rows[target as usize]);
        let mut merged = Vec::with_capacity(old.len() + src.len());
        let (mut i, mut j) = (0, 0);
        let mut added = Vec::new();
        let mut removed = Vec::new();
        while i < old.len() || j < src.len() {
            let take_old = j >= src.len() || (i < old.len() && old[i].0 < src[j].0);
            let take_src = i >= old.len() || (j < src.len() && src[j].0 < old[i].0);
            if take_old {
                merged.push(old[i].clone());
                i += 1;
            } else if take_src {
                let v = self.ring.neg(&self.ring.mul(factor, &src[j].1)?)?;
                added.push(src[j].0);
                merged.push((src[j].0, v));
                j += 1;
            } else {
                let v = self.ring.sub_mul(&old[i].1, factor, &src[j].1)?;
                if self.ring.is_zero(&v) {
                    removed.push(old[i].0);
                } else {
                    merged.push((old[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        self.rows[pivot as usize] = src;
        self.rows[target as usize] = merged;
        for c in added {
            self.col_rows[c as usize].push(target);
            let len = self.col_rows[c as usize].len();
            self.heap.push(Reverse((len, c)));
        }
        for c in removed {
            self.remove_from_col(c, target);
        }
        Some(())
    }

    fn unit_pivot(&self, c: u32) -> Option<u32> {
        self.col_rows[c as usize]
            .iter()
            .copied()
            .filter(|&r| self.entry(r, c).is_some_and(|v| self.ring.is_unit(v)))
            .min_by_key(|&r| (self.rows[r as usize].len(), r))
    }

    fn pivot_on(&mut self, c: u32, p: u32) -> Option<()> {
        let pv = self.entry(p, c).expect("pivot entry").clone();
        let inv = self.ring.unit_inverse(&pv);
        let others: Vec<u32> = self.col_rows[c as usize]
            .iter()
            .copied()
            .filter(|&r| r != p)
            .collect();
        for r in others {
            let a = self.entry(r, c).expect("column index is exact").clone();
            let factor = self.ring.mul(&a, &inv)?;
            self.eliminate(r, p, &factor)?;
        }
        let row = std::mem::take(&mut self.rows[p as usize]);
        for (col, _) in &row {
            self.remove_from_col(*col, p);
        }
        self.col_done[c as usize] = true;
        self.rank += 1;
        Some(())
    }

    fn unit_pass(&mut self) -> Option<()> {
        loop {
            while let Some(Reverse((len, c))) = self.heap.pop() {
                if self.col_done[c as usize] || len != self.col_rows[c as usize].len() {
                    continue;
                }
                if len == 0 {
                    self.col_done[c as usize] = true;
                    continue;
                }
                if let Some(p) = self.unit_pivot(c) {
                    self.pivot_on(c, p)?;
                }
            }
            // Columns skipped for lack of a unit may have gained one since.
            let pending: Vec<u32> = (0..self.col_rows.len() as u32)
                .filter(|&c| !self.col_done[c as usize] && !self.col_rows[c as usize].is_empty())
                .collect();
            let mut found = false;
            for c in pending {
                if self.unit_pivot(c).is_some() {
                    found = true;
                    self.heap.push(Reverse((self.col_rows[c as usize].len(), c)));
                }
            }
            if !found {
                return Some(());
            }
        }
    }

    fn finish(mut self) -> Option<(usize, Vec<R::Elem>)> {
        self.unit_pass()?;
        let live_rows: Vec<usize> = (0..self.rows.len())
            .filter(|&r| !self.rows[r].is_empty())
            .collect();
        let live_cols: Vec<usize> = (0..self.col_rows.len())
            .filter(|&c| !self.col_done[c] && !self.col_rows[c].is_empty())
            .collect();
        if live_rows.is_empty() {
            return Some((self.rank, Vec::new()));
        }
        let mut col_pos = vec![usize::MAX; self.col_rows.len()];
        for (i, &c) in live_cols.iter().enumerate() {
            col_pos[c] = i;
        }
        let mut dense = Dense::zeros(self.ring, live_rows.len(), live_cols.len());
        for (i, &r) in live_rows.iter().enumerate() {
            for (c, v) in &self.rows[r] {
                *dense.at_mut(i, col_pos[*c as usize]) = v.clone();
            }
        }
        let s = dense_smith(self.ring, dense, false)?;
        let rank = self.rank + s.rank();
        let torsion = s
            .diagonal
            .into_iter()
            .filter(|d| !self.ring.is_unit(d))
            .collect();
        Some((rank, torsion))
    }
}

fn invariants_in<R: Scalars>(ring: &R, a: &IntMatrix) -> Option<MatrixInvariants> {
    let (rank, torsion) = Eliminator::new(ring, a)?.finish()?;
    Some(MatrixInvariants {
        rank,
        torsion: torsion.iter().map(|t| ring.to_bigint(t)).collect(),
    })
}

/// Rank over ℤ and the invariant factors greater than one.
pub fn integer_invariants(a: &IntMatrix) -> MatrixInvariants {
    invariants_in(&SmallInts, a)
        .or_else(|| invariants_in(&BigInts, a))
        .expect("arbitrary-precision elimination cannot overflow")
}

/// Rank over the prime field ℤ/p.
pub fn rank_mod_p(a: &IntMatrix, p: u32) -> usize {
    invariants_in(&PrimeField::new(p), a)
        .expect("prime field arithmetic cannot overflow")
        .rank
}
