//! Explicit cohomology bases with coordinate maps.
//!
//! For degree `n` let `A = δ^{n-1}` and `B = δ^n`. With `U·A·V = D`, the
//! coordinates `y = U z` split cochains into a boundary part (first `r₁`
//! coordinates, divisible by `d_i` on coboundaries) and the rest, on which
//! `B·U⁻¹` restricts to a matrix `B''`. A second Smith form of `B''` picks
//! out the free cocycles. In degree 0 of an unaugmented complex the basis is
//! the indicator functions of the components that survive.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::chain::{ChainComplex, Flavor};
use super::groups::{Coefficients, Group};
use super::matrix::{Dense, IntMatrix};
use super::scalar::{BigInts, PrimeField, Scalars, SmallInts};
use super::smith::dense_smith;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
enum Coordinates {
    Smith {
        u: Vec<Vec<BigInt>>,
        r1: usize,
        torsion_rows: Vec<usize>,
        v2_inv: Vec<Vec<BigInt>>,
        r2: usize,
    },
    Components {
        representatives: Vec<usize>,
    },
}

/// Chosen generators of `H^n` of a chain complex, with the inverse map from
/// cocycles to coordinates. Torsion generators come first, then free ones.
#[derive(Debug, Clone)]
pub struct CohomologyBasis {
    degree: i32,
    coefficients: Coefficients,
    cells: Vec<usize>,
    coboundary: IntMatrix,
    generators: Vec<Vec<BigInt>>,
    orders: Vec<Option<BigInt>>,
    coords: Coordinates,
}

fn rows_of<E: Clone, R: Scalars<Elem = E>>(ring: &R, d: &Dense<E>) -> Vec<Vec<BigInt>> {
    (0..d.rows)
        .map(|r| d.row(r).iter().map(|x| ring.to_bigint(x)).collect())
        .collect()
}

struct SmithData {
    generators: Vec<Vec<BigInt>>,
    orders: Vec<Option<BigInt>>,
    coords: Coordinates,
}

fn smith_basis<R: Scalars>(ring: &R, a: &IntMatrix, b: &IntMatrix, n: usize) -> Option<Result<SmithData>> {
    let mut s1 = dense_smith(ring, a.to_dense(ring)?, true)?;
    let r1 = s1.rank();
    let u = s1.u.take().expect("tracked");
    let u_inv = s1.u_inv.take().expect("tracked");
    let bp = b.to_dense(ring)?.mul(ring, &u_inv)?;
    if !bp.column_block(0..r1).is_zero_matrix(ring) {
        return Some(Err(Error::Internal(
            "coboundaries are not cocycles in the chosen coordinates".into(),
        )));
    }
    let mut s2 = dense_smith(ring, bp.column_block(r1..n), true)?;
    let r2 = s2.rank();
    let v2 = s2.v.take().expect("tracked");
    let v2_inv = s2.v_inv.take().expect("tracked");

    let mut generators = Vec::new();
    let mut orders = Vec::new();
    let mut torsion_rows = Vec::new();
    for (i, d) in s1.diagonal.iter().enumerate() {
        if !ring.is_unit(d) {
            torsion_rows.push(i);
            generators.push(u_inv.column(i).iter().map(|x| ring.to_bigint(x)).collect());
            orders.push(Some(ring.to_bigint(d)));
        }
    }
    for k in r2..n - r1 {
        let mut y = vec![ring.zero(); n];
        for (i, x) in v2.column(k).into_iter().enumerate() {
            y[r1 + i] = x;
        }
        let z = u_inv.mul_vec(ring, &y)?;
        generators.push(z.iter().map(|x| ring.to_bigint(x)).collect());
        orders.push(None);
    }
    Some(Ok(SmithData {
        generators,
        orders,
        coords: Coordinates::Smith {
            u: rows_of(ring, &u),
            r1,
            torsion_rows,
            v2_inv: rows_of(ring, &v2_inv),
            r2,
        },
    }))
}

fn component_basis(d1: Option<&IntMatrix>, n: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let mut parent: Vec<usize> = (0..n).collect();
    let mut killed = vec![false; n];
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut anchored = Vec::new();
    if let Some(d1) = d1 {
        for c in 0..d1.cols() {
            let col = d1.column(c);
            match col {
                [(r, _)] => anchored.push(*r as usize),
                [(a, _), (b, _)] => {
                    let (x, y) = (find(&mut parent, *a as usize), find(&mut parent, *b as usize));
                    if x != y {
                        parent[x.max(y)] = x.min(y);
                    }
                }
                _ => {}
            }
        }
    }
    for r in anchored {
        let root = find(&mut parent, r);
        killed[root] = true;
    }
    let mut representatives = Vec::new();
    let mut generators = Vec::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        if root == v && !killed[v] {
            representatives.push(v);
            generators.push(
                (0..n)
                    .map(|w| {
                        if find(&mut parent, w) == v {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect(),
            );
        }
    }
    (generators, representatives)
}

impl CohomologyBasis {
    /// Basis of `H^n(C)` with the given coefficients.
    pub fn new(c: &ChainComplex, n: i32, coefficients: Coefficients) -> Result<CohomologyBasis> {
        let dim = c.dim(n);
        let a = c.boundary(n).transpose();
        let b = c.boundary(n + 1).transpose();
        let cells = c.cells(n).to_vec();
        let simple_degree_zero =
            n == 0 && c.low() == 0 && c.flavor() != Flavor::Reduced && c.boundary(1).columns_are_incidences();
        if simple_degree_zero {
            let (generators, representatives) = component_basis(c.boundary_ref(1), dim);
            return Ok(CohomologyBasis {
                degree: n,
                coefficients,
                cells,
                coboundary: b,
                orders: vec![None; generators.len()],
                generators,
                coords: Coordinates::Components { representatives },
            });
        }
        let data = match coefficients {
            Coefficients::Integers => smith_basis(&SmallInts, &a, &b, dim)
                .or_else(|| smith_basis(&BigInts, &a, &b, dim))
                .expect("arbitrary precision cannot overflow")?,
            Coefficients::Mod(p) => {
                smith_basis(&PrimeField::new(p), &a, &b, dim).expect("field arithmetic cannot overflow")?
            }
        };
        Ok(CohomologyBasis {
            degree: n,
            coefficients,
            cells,
            coboundary: b,
            generators: data.generators,
            orders: data.orders,
            coords: data.coords,
        })
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn coefficients(&self) -> Coefficients {
        self.coefficients
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Cochain representatives, indexed by position in `C^n`.
    pub fn generators(&self) -> &[Vec<BigInt>] {
        &self.generators
    }

    /// `Some(d)` for a generator of order `d`, `None` for a free generator.
    pub fn orders(&self) -> &[Option<BigInt>] {
        &self.orders
    }

    /// Parent cell ids of the cochain positions.
    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    /// The group spanned by the basis.
    pub fn group(&self) -> Group {
        Group {
            rank: self.orders.iter().filter(|o| o.is_none()).count(),
            torsion: self.orders.iter().flatten().cloned().collect(),
        }
    }

    fn reduce(&self, x: BigInt) -> BigInt {
        match self.coefficients {
            Coefficients::Integers => x,
            Coefficients::Mod(p) => x.mod_floor(&BigInt::from(p)),
        }
    }

    /// Coordinates of the class of a cocycle; torsion coordinates are reduced
    /// modulo their orders.
    pub fn coordinates(&self, cocycle: &[BigInt]) -> Result<Vec<BigInt>> {
        let not_cocycle = || Error::NotACocycle {
            degree: self.degree.max(0) as usize,
        };
        if cocycle.len() != self.cells.len() {
            return Err(Error::Internal(format!(
                "cochain has {} entries, expected {}",
                cocycle.len(),
                self.cells.len()
            )));
        }
        let z: Vec<BigInt> = cocycle.iter().map(|x| self.reduce(x.clone())).collect();
        let image = mat_vec_sparse(&self.coboundary, &z);
        if image.into_iter().any(|x| !self.reduce(x).is_zero()) {
            return Err(not_cocycle());
        }
        match &self.coords {
            Coordinates::Components { representatives } => {
                Ok(representatives.iter().map(|&r| z[r].clone()).collect())
            }
            Coordinates::Smith {
                u,
                r1,
                torsion_rows,
                v2_inv,
                r2,
            } => {
                let y: Vec<BigInt> = u.iter().map(|row| self.reduce(dot(row, &z))).collect();
                let mut out = Vec::with_capacity(self.len());
                for (&i, order) in torsion_rows.iter().zip(&self.orders) {
                    let d = order.as_ref().expect("torsion generators come first");
                    out.push(y[i].mod_floor(d));
                }
                let tail = &y[*r1..];
                let w: Vec<BigInt> = v2_inv.iter().map(|row| self.reduce(dot(row, tail))).collect();
                if w[..*r2].iter().any(|x| !x.is_zero()) {
                    return Err(not_cocycle());
                }
                out.extend(w[*r2..].iter().cloned());
                Ok(out)
            }
        }
    }

    /// Cochain representing the class with the given coordinates.
    pub fn cochain(&self, coordinates: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.cells.len()];
        for (g, c) in self.generators.iter().zip(coordinates) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(g) {
                *o += c * x;
            }
        }
        out.into_iter().map(|x| self.reduce(x)).collect()
    }
}

fn dot(row: &[BigInt], v: &[BigInt]) -> BigInt {
    row.iter()
        .zip(v)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .map(|(a, b)| a * b)
        .sum()
}

pub(crate) fn mat_vec_sparse(m: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); m.rows()];
    for c in 0..m.cols() {
        if v[c].is_zero() {
            continue;
        }
        for (r, x) in m.column(c) {
            out[*r as usize] += x * &v[c];
        }
    }
    out
}
