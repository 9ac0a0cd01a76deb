use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::cohomology::CohomologyBasis;
use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Restriction of cochains from `big` to `small` on the cell level: entry
/// `i` of the result is the position in `big` of the `i`-th cell of `small`.
pub fn restriction_positions(big: &CohomologyBasis, small: &CohomologyBasis) -> Result<Vec<usize>> {
    let pos: HashMap<usize, usize> = big.cells().iter().enumerate().map(|(i, &c)| (c, i)).collect();
    small
        .cells()
        .iter()
        .map(|c| {
            pos.get(c).copied().ok_or_else(|| Error::NotASubcomplex {
                index: 0,
                reason: format!("cell {c} of the smaller complex is missing from the larger one"),
            })
        })
        .collect()
}

/// Matrix of `κ* : H^n(B) → H^n(A)` for an inclusion `A ⊆ B`, on the chosen
/// bases: column `k` holds the coordinates of the restriction of generator `k`.
pub fn induced_inclusion_map(big: &CohomologyBasis, small: &CohomologyBasis) -> Result<IntMatrix> {
    if big.degree() != small.degree() {
        return Err(Error::Internal("induced map between different degrees".into()));
    }
    let positions = restriction_positions(big, small)?;
    let mut triplets = Vec::new();
    for (k, g) in big.generators().iter().enumerate() {
        let restricted: Vec<BigInt> = positions.iter().map(|&p| g[p].clone()).collect();
        for (r, x) in small.coordinates(&restricted)?.into_iter().enumerate() {
            if !x.is_zero() {
                triplets.push((r, k, x));
            }
        }
    }
    Ok(IntMatrix::from_triplets(small.len(), big.len(), triplets))
}
