use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::Mask;

/// Dimensions `n_1..n_m` of the sphere pairs `(D^{n_j+1}, S^{n_j})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SpherePairSpec {
    dims: Vec<u32>,
}

impl SpherePairSpec {
    pub fn new(dims: Vec<u32>) -> SpherePairSpec {
        SpherePairSpec { dims }
    }

    pub fn uniform(m: usize, n: u32) -> SpherePairSpec {
        SpherePairSpec { dims: vec![n; m] }
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn dim(&self, j: usize) -> u32 {
        self.dims[j]
    }

    /// `J₀ = {j : n_j = 0}`.
    pub fn j0(&self) -> Mask {
        Mask::from_indices((0..self.dims.len()).filter(|&j| self.dims[j] == 0))
    }

    /// `N_J = Σ_{j∈J} n_j`.
    pub fn n_sum(&self, j: Mask) -> i32 {
        j.iter().map(|i| self.dims[i] as i32).sum()
    }

    /// Uniform value, if every `n_j` agrees.
    pub fn uniform_value(&self) -> Option<u32> {
        let first = *self.dims.first()?;
        self.dims.iter().all(|&d| d == first).then_some(first)
    }

    pub fn check_len(&self, m: usize) -> Result<()> {
        if self.dims.len() != m {
            return Err(Error::SpecLength {
                expected: m,
                got: self.dims.len(),
            });
        }
        Ok(())
    }
}

impl FromStr for SpherePairSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<SpherePairSpec> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SpherePairSpec::new(Vec::new()));
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Input(format!("bad sphere dimension {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(SpherePairSpec::new)
    }
}

impl fmt::Display for SpherePairSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_sums() {
        let s: SpherePairSpec = "1, 0,2".parse().unwrap();
        assert_eq!(s.dims(), &[1, 0, 2]);
        assert_eq!(s.j0(), Mask::singleton(1));
        assert_eq!(s.n_sum(Mask::full(3)), 3);
        assert_eq!(s.to_string(), "1,0,2");
        assert!("1,x".parse::<SpherePairSpec>().is_err());
        assert_eq!(s.check_len(2), Err(Error::SpecLength { expected: 2, got: 3 }));
    }
}
