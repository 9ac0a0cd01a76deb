use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::scalar::Scalars;

/// Sparse integer matrix, stored column by column with rows ascending.
///
/// No column holds a duplicate row index or an explicit zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(u32, BigInt)>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.columns[i].push((i as u32, BigInt::from(1)));
        }
        m
    }

    /// Builds a matrix from triplets; repeated coordinates are summed and zeros dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> IntMatrix
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut columns: Vec<Vec<(u32, BigInt)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet ({r},{c}) outside {rows}x{cols}");
            columns[c].push((r as u32, v));
        }
        for col in &mut columns {
            col.sort_by_key(|(r, _)| *r);
            let mut merged: Vec<(u32, BigInt)> = Vec::with_capacity(col.len());
            for (r, v) in col.drain(..) {
                match merged.last_mut() {
                    Some((lr, lv)) if *lr == r => *lv += v,
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *col = merged;
        }
        IntMatrix {
            rows,
            cols,
            columns,
        }
    }

    pub fn from_i64_rows(data: &[Vec<i64>]) -> IntMatrix {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        IntMatrix::from_triplets(
            rows,
            cols,
            data.iter().enumerate().flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(j, &v)| (i, j, BigInt::from(v)))
            }),
        )
    }

    /// Builds a column from already sorted, zero-free entries.
    pub(crate) fn from_columns(rows: usize, columns: Vec<Vec<(u32, BigInt)>>) -> IntMatrix {
        debug_assert!(columns.iter().all(|c| c
            .windows(2)
            .all(|w| w[0].0 < w[1].0)
            && c.iter().all(|(r, v)| (*r as usize) < rows && !v.is_zero())));
        IntMatrix {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(u32, BigInt)] {
        &self.columns[c]
    }

    pub fn get(&self, r: usize, c: usize) -> BigInt {
        self.columns[c]
            .binary_search_by_key(&(r as u32), |(row, _)| *row)
            .map(|i| self.columns[c][i].1.clone())
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r as usize, c, v)))
    }

    /// Every column has at most two entries, each `±1`, and two entries cancel.
    pub fn columns_are_incidences(&self) -> bool {
        use num_traits::One;
        self.columns.iter().all(|c| match c.as_slice() {
            [] => true,
            [(_, x)] => x.magnitude().is_one(),
            [(_, a), (_, b)] => a.magnitude().is_one() && (a + b).is_zero(),
            _ => false,
        })
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_triplets(
            self.cols,
            self.rows,
            self.triplets().map(|(r, c, v)| (c, r, v.clone())),
        )
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut columns = Vec::with_capacity(other.cols);
        let mut acc: Vec<BigInt> = vec![BigInt::zero(); self.rows];
        let mut touched: Vec<u32> = Vec::new();
        for col in &other.columns {
            for (k, b) in col {
                for (i, a) in &self.columns[*k as usize] {
                    if acc[*i as usize].is_zero() {
                        touched.push(*i);
                    }
                    acc[*i as usize] += a * b;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut out = Vec::new();
            for &i in &touched {
                let v = std::mem::take(&mut acc[i as usize]);
                if !v.is_zero() {
                    out.push((i, v));
                }
            }
            touched.clear();
            columns.push(out);
        }
        IntMatrix::from_columns(self.rows, columns)
    }

    pub fn to_dense<R: Scalars>(&self, ring: &R) -> Option<Dense<R::Elem>> {
        let mut d = Dense::zeros(ring, self.rows, self.cols);
        for (r, c, v) in self.triplets() {
            *d.at_mut(r, c) = ring.from_bigint(v)?;
        }
        Some(d)
    }

    pub fn from_dense<R: Scalars>(ring: &R, d: &Dense<R::Elem>) -> IntMatrix {
        let mut columns = vec![Vec::new(); d.cols];
        for (c, column) in columns.iter_mut().enumerate() {
            for r in 0..d.rows {
                let v = d.at(r, c);
                if !ring.is_zero(v) {
                    column.push((r as u32, ring.to_bigint(v)));
                }
            }
        }
        IntMatrix::from_columns(d.rows, columns)
    }

    pub fn to_rows_i64(&self) -> Option<Vec<Vec<i64>>> {
        let mut out = vec![vec![0i64; self.cols]; self.rows];
        for (r, c, v) in self.triplets() {
            out[r][c] = v.to_i64()?;
        }
        Some(out)
    }

    pub fn to_triplet_json(&self) -> TripletJson {
        TripletJson {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .triplets()
                .map(|(r, c, v)| (r, c, v.to_string()))
                .collect(),
        }
    }

    pub fn from_triplet_json(t: &TripletJson) -> Result<IntMatrix, String> {
        let mut trip = Vec::with_capacity(t.entries.len());
        for (r, c, v) in &t.entries {
            if *r >= t.rows || *c >= t.cols {
                return Err(format!("entry ({r},{c}) outside {}x{}", t.rows, t.cols));
            }
            let v: BigInt = v.parse().map_err(|e| format!("bad integer {v:?}: {e}"))?;
            trip.push((*r, *c, v));
        }
        Ok(IntMatrix::from_triplets(t.rows, t.cols, trip))
    }
}

/// Sparse-triplet serialization of an [`IntMatrix`]. Values are decimal strings
/// so that arbitrary-precision entries survive the round trip.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripletJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, String)>,
}

/// Row-major dense matrix over an arbitrary [`Scalars`] element type.
#[derive(Debug, Clone, PartialEq)]
pub struct Dense<E> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Dense<E> {
    pub fn zeros<R: Scalars<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Dense<E> {
        Dense {
            rows,
            cols,
            data: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity<R: Scalars<Elem = E>>(ring: &R, n: usize) -> Dense<E> {
        let mut d = Dense::zeros(ring, n, n);
        for i in 0..n {
            d.data[i * n + i] = ring.one();
        }
        d
    }

    pub fn at(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut E {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// `row[target] += c * row[src]`.
    pub fn add_row_multiple<R: Scalars<Elem = E>>(
        &mut self,
        ring: &R,
        target: usize,
        src: usize,
        c: &E,
    ) -> Option<()> {
        if ring.is_zero(c) {
            return Some(());
        }
        for k in 0..self.cols {
            let s = &self.data[src * self.cols + k];
            if ring.is_zero(s) {
                continue;
            }
            let t = &self.data[target * self.cols + k];
            let v = ring.add(t, &ring.mul(c, s)?)?;
            self.data[target * self.cols + k] = v;
        }
        Some(())
    }

    /// `col[target] += c * col[src]`.
    pub fn add_col_multiple<R: Scalars<Elem = E>>(
        &mut self,
        ring: &R,
        target: usize,
        src: usize,
        c: &E,
    ) -> Option<()> {
        if ring.is_zero(c) {
            return Some(());
        }
        for r in 0..self.rows {
            let s = &self.data[r * self.cols + src];
            if ring.is_zero(s) {
                continue;
            }
            let t = &self.data[r * self.cols + target];
            let v = ring.add(t, &ring.mul(c, s)?)?;
            self.data[r * self.cols + target] = v;
        }
        Some(())
    }

    pub fn scale_row<R: Scalars<Elem = E>>(&mut self, ring: &R, r: usize, u: &E) -> Option<()> {
        for k in 0..self.cols {
            let v = ring.mul(u, &self.data[r * self.cols + k])?;
            self.data[r * self.cols + k] = v;
        }
        Some(())
    }

    pub fn scale_col<R: Scalars<Elem = E>>(&mut self, ring: &R, c: usize, u: &E) -> Option<()> {
        for r in 0..self.rows {
            let v = ring.mul(u, &self.data[r * self.cols + c])?;
            self.data[r * self.cols + c] = v;
        }
        Some(())
    }

    pub fn mul<R: Scalars<Elem = E>>(&self, ring: &R, other: &Dense<E>) -> Option<Dense<E>> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Dense::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let v = ring.add(out.at(i, j), &ring.mul(a, b)?)?;
                    *out.at_mut(i, j) = v;
                }
            }
        }
        Some(out)
    }

    pub fn mul_vec<R: Scalars<Elem = E>>(&self, ring: &R, v: &[E]) -> Option<Vec<E>> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![ring.zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (k, x) in v.iter().enumerate() {
                if ring.is_zero(x) {
                    continue;
                }
                let a = self.at(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                *o = ring.add(o, &ring.mul(a, x)?)?;
            }
        }
        Some(out)
    }

    /// Keeps only the columns in `range`.
    pub fn column_block(&self, range: std::ops::Range<usize>) -> Dense<E> {
        let cols = range.len();
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(&self.data[r * self.cols + range.start..r * self.cols + range.end]);
        }
        Dense {
            rows: self.rows,
            cols,
            data,
        }
    }

    pub fn is_zero_matrix<R: Scalars<Elem = E>>(&self, ring: &R) -> bool {
        self.data.iter().all(|v| ring.is_zero(v))
    }
}
