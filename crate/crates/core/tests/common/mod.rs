#![allow(dead_code)]

use facelab::complexes::{SimplicialComplex, SimplicialPoset};
use facelab::homology::{ChainComplex, IntMatrix};
use facelab::io::Input;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

pub fn four_cycle() -> SimplicialComplex {
    SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap()
}

pub fn path4() -> SimplicialComplex {
    SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3]]).unwrap()
}

fn data(name: &str) -> Input {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    Input::from_path(&path).unwrap()
}

pub fn rp2() -> SimplicialComplex {
    match data("rp2.json") {
        Input::Complex(k) => k,
        other => panic!("unexpected {}", other.kind()),
    }
}

pub fn poset(name: &str) -> SimplicialPoset {
    match data(name) {
        Input::Poset(s) => s,
        other => panic!("unexpected {}", other.kind()),
    }
}

pub fn two_triangles() -> SimplicialPoset {
    poset("two_triangles.json")
}

pub fn two_edges() -> SimplicialPoset {
    poset("two_edges.json")
}

/// Complex on `m` vertices generated by random subsets plus every vertex.
pub fn complex_from_masks(m: usize, masks: &[u32]) -> SimplicialComplex {
    let mut facets: Vec<Vec<u32>> = (0..m as u32).map(|v| vec![v]).collect();
    for &mask in masks {
        let f: Vec<u32> = (0..m as u32).filter(|&v| mask & (1 << v) != 0).collect();
        if !f.is_empty() {
            facets.push(f);
        }
    }
    SimplicialComplex::from_maximal(m, &facets).unwrap()
}

pub fn arb_complex(max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_m).prop_flat_map(|m| {
        proptest::collection::vec(0u32..(1 << m), 0..5).prop_map(move |masks| complex_from_masks(m, &masks))
    })
}

pub fn dense(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let mut out = vec![vec![BigInt::zero(); m.cols()]; m.rows()];
    for (r, c, v) in m.triplets() {
        out[r][c] = v.clone();
    }
    out
}

pub fn matmul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| (0..inner).map(|k| &row[k] * &b[k][c]).sum())
                .collect()
        })
        .collect()
}

/// Fraction-free Gaussian elimination; returns (rank, determinant when square).
pub fn bareiss(a: &[Vec<BigInt>]) -> (usize, BigInt) {
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut sign = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap(p, rank);
            sign = -sign;
        }
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&m[r][k] * &m[rank][c] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    let det = if rows == cols && rank == rows { sign * prev } else { BigInt::zero() };
    (rank, det)
}

/// Rational Betti numbers from ranks of the boundary matrices.
pub fn rational_betti(c: &ChainComplex) -> Vec<(i32, usize)> {
    let rank = |n: i32| {
        let d = c.boundary(n);
        if d.rows() == 0 || d.cols() == 0 {
            0
        } else {
            bareiss(&dense(&d)).0
        }
    };
    (c.low()..=c.high())
        .map(|n| (n, c.dim(n) - rank(n) - rank(n + 1)))
        .filter(|&(_, b)| b > 0)
        .collect()
}

/// Diagonal, nonnegative, divisibility chain, `U A V = D`, unimodular `U`, `V`.
pub fn check_smith(a: &IntMatrix, u: &IntMatrix, d: &IntMatrix, v: &IntMatrix) -> Result<(), String> {
    let (da, du, dd, dv) = (dense(a), dense(u), dense(d), dense(v));
    if matmul(&matmul(&du, &da), &dv) != dd {
        return Err("U A V != D".into());
    }
    for (r, row) in dd.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            if r != c && !x.is_zero() {
                return Err(format!("off-diagonal entry at ({r},{c})"));
            }
        }
    }
    let diag: Vec<BigInt> = (0..a.rows().min(a.cols())).map(|i| dd[i][i].clone()).collect();
    if diag.iter().any(Signed::is_negative) {
        return Err("negative diagonal entry".into());
    }
    for w in diag.windows(2) {
        let ok = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
        if !ok {
            return Err(format!("{} does not divide {}", w[0], w[1]));
        }
    }
    for (name, m) in [("U", &du), ("V", &dv)] {
        if !m.is_empty() && bareiss(m).1.abs() != BigInt::one() {
            return Err(format!("{name} is not unimodular"));
        }
    }
    Ok(())
}
