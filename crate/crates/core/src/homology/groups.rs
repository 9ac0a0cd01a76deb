use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::chain::ChainComplex;
use super::matrix::IntMatrix;
use super::smith::smith_normal_form;
use super::sparse::{integer_invariants, rank_mod_p, MatrixInvariants};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum Coefficients {
    #[default]
    Integers,
    Mod(u32),
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Integers => f.write_str("Z"),
            Coefficients::Mod(p) => write!(f, "Z/{p}"),
        }
    }
}

/// A finitely generated abelian group `ℤ^rank ⊕ ⊕ ℤ/d_i` with `d_1 | d_2 | ...`.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Group {
    pub rank: usize,
    #[serde(serialize_with = "crate::ser::bigints")]
    pub torsion: Vec<BigInt>,
}

impl Group {
    pub fn free(rank: usize) -> Group {
        Group {
            rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Direct sum, with torsion brought back to invariant-factor form.
    pub fn sum(&self, other: &Group) -> Group {
        let mut all = self.torsion.clone();
        all.extend(other.torsion.iter().cloned());
        Group {
            rank: self.rank + other.rank,
            torsion: invariant_factors(&all),
        }
    }

    /// `ℤ/p` dimension contributed by this group for a prime `p`.
    pub fn dim_mod_p(&self, p: u32) -> usize {
        let p = BigInt::from(p);
        self.rank + self.torsion.iter().filter(|d| (*d % &p) == BigInt::from(0)).count()
    }

    /// Torsion written as `Z/2+Z/4`; empty when torsion-free.
    pub fn torsion_label(&self) -> String {
        self.torsion
            .iter()
            .map(|d| format!("Z/{d}"))
            .collect::<Vec<_>>()
            .join("+")
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Reduces a list of cyclic orders to the invariant-factor chain.
pub fn invariant_factors(orders: &[BigInt]) -> Vec<BigInt> {
    let orders: Vec<&BigInt> = orders.iter().filter(|d| !d.is_one()).collect();
    if orders.len() <= 1 {
        return orders.into_iter().cloned().collect();
    }
    let n = orders.len();
    let diag = IntMatrix::from_triplets(n, n, orders.iter().enumerate().map(|(i, d)| (i, i, (*d).clone())));
    smith_normal_form(&diag)
        .diagonal()
        .into_iter()
        .filter(|d| !d.is_one())
        .collect()
}

/// Graded abelian group; only nonzero degrees are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct GradedGroup {
    degrees: BTreeMap<i32, Group>,
}

impl GradedGroup {
    pub fn new() -> GradedGroup {
        GradedGroup::default()
    }

    pub fn set(&mut self, degree: i32, g: Group) {
        if g.is_zero() {
            self.degrees.remove(&degree);
        } else {
            self.degrees.insert(degree, g);
        }
    }

    pub fn get(&self, degree: i32) -> Group {
        self.degrees.get(&degree).cloned().unwrap_or_default()
    }

    pub fn rank(&self, degree: i32) -> usize {
        self.degrees.get(&degree).map_or(0, |g| g.rank)
    }

    pub fn is_zero(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Nonzero degrees with their groups, ascending.
    pub fn iter(&self) -> impl Iterator<Item = (i32, &Group)> {
        self.degrees.iter().map(|(d, g)| (*d, g))
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.degrees.keys().next_back().copied()
    }

    /// All degrees moved up by `k`.
    pub fn shift(&self, k: i32) -> GradedGroup {
        GradedGroup {
            degrees: self.degrees.iter().map(|(d, g)| (d + k, g.clone())).collect(),
        }
    }

    pub fn direct_sum(&self, other: &GradedGroup) -> GradedGroup {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &GradedGroup) {
        for (d, g) in &other.degrees {
            let merged = self.get(*d).sum(g);
            self.set(*d, merged);
        }
    }

    /// Free ranks in degrees `0..=max_degree`.
    pub fn betti(&self) -> Vec<usize> {
        match self.max_degree() {
            Some(top) if top >= 0 => (0..=top).map(|d| self.rank(d)).collect(),
            _ => Vec::new(),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.iter()
            .map(|(d, g)| if d.rem_euclid(2) == 0 { g.rank as i64 } else { -(g.rank as i64) })
            .sum()
    }

    /// First degree where the two groups differ.
    pub fn first_difference(&self, other: &GradedGroup) -> Option<i32> {
        let mut degrees: Vec<i32> = self.degrees.keys().chain(other.degrees.keys()).copied().collect();
        degrees.sort_unstable();
        degrees.dedup();
        degrees.into_iter().find(|&d| self.get(d) != other.get(d))
    }
}

impl fmt::Display for GradedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.iter().map(|(d, g)| format!("H{d}={g}")).collect();
        f.write_str(&parts.join(", "))
    }
}

fn invariants(m: Option<&IntMatrix>, coefficients: Coefficients) -> MatrixInvariants {
    match (m, coefficients) {
        (None, _) => MatrixInvariants::default(),
        (Some(m), Coefficients::Integers) => integer_invariants(m),
        (Some(m), Coefficients::Mod(p)) => MatrixInvariants {
            rank: rank_mod_p(m, p),
            torsion: Vec::new(),
        },
    }
}

fn per_degree(c: &ChainComplex, coefficients: Coefficients) -> Result<Vec<MatrixInvariants>> {
    c.check_boundary_square()?;
    let degrees: Vec<i32> = (c.low()..=c.high() + 1).collect();
    Ok(degrees
        .par_iter()
        .map(|&n| invariants(c.boundary_ref(n), coefficients))
        .collect())
}

/// Homology of a chain complex. Over `ℤ/p` all groups are free.
pub fn homology(c: &ChainComplex, coefficients: Coefficients) -> Result<GradedGroup> {
    let inv = per_degree(c, coefficients)?;
    let mut out = GradedGroup::new();
    for (i, n) in (c.low()..=c.high()).enumerate() {
        let rank = c.dim(n) - inv[i].rank - inv[i + 1].rank;
        out.set(
            n,
            Group {
                rank,
                torsion: inv[i + 1].torsion.clone(),
            },
        );
    }
    Ok(out)
}

/// Cohomology of a chain complex, from the transposed boundaries: the free
/// part matches homology and the torsion of `H^n` is that of `H_{n-1}`.
pub fn cohomology(c: &ChainComplex, coefficients: Coefficients) -> Result<GradedGroup> {
    let inv = per_degree(c, coefficients)?;
    let mut out = GradedGroup::new();
    for (i, n) in (c.low()..=c.high()).enumerate() {
        let rank = c.dim(n) - inv[i].rank - inv[i + 1].rank;
        out.set(
            n,
            Group {
                rank,
                torsion: inv[i].torsion.clone(),
            },
        );
    }
    Ok(out)
}
