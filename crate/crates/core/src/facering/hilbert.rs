use num_integer::binomial;
use serde::Serialize;

use crate::homology::Group;

/// Graded pieces up to a degree bound; entry `d` is the group in degree `d`,
/// with free rank and torsion kept apart.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub terms: Vec<Group>,
}

impl HilbertSeries {
    pub fn zero(bound: usize) -> HilbertSeries {
        HilbertSeries {
            terms: vec![Group::default(); bound + 1],
        }
    }

    pub fn bound(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.terms.iter().map(|g| g.rank).collect()
    }

    /// Ranks in degrees `0, step, 2·step, ...`.
    pub fn ranks_every(&self, step: usize) -> Vec<usize> {
        self.terms.iter().step_by(step.max(1)).map(|g| g.rank).collect()
    }

    pub fn has_torsion(&self) -> bool {
        self.terms.iter().any(|g| !g.torsion.is_empty())
    }

    pub fn first_mismatch(&self, other: &HilbertSeries) -> Option<usize> {
        let n = self.terms.len().max(other.terms.len());
        let zero = Group::default();
        (0..n).find(|&d| self.terms.get(d).unwrap_or(&zero) != other.terms.get(d).unwrap_or(&zero))
    }

    /// Rows `degree,rank,torsion`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["degree", "rank", "torsion"]).expect("in-memory write");
        for (d, g) in self.terms.iter().enumerate() {
            w.write_record([d.to_string(), g.rank.to_string(), g.torsion_label()])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8")
    }
}

/// Number of monomials in `s` variables, each with exponent at least 1,
/// of total exponent `t`.
pub fn exact_support_count(s: usize, t: usize) -> u64 {
    match (s, t) {
        (0, 0) => 1,
        (0, _) => 0,
        _ if t < s => 0,
        _ => binomial(t as u64 - 1, s as u64 - 1),
    }
}
