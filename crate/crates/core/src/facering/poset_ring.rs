use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::hilbert::HilbertSeries;
use crate::complexes::SimplicialPoset;
use crate::error::{Error, Result};
use crate::homology::Group;
use crate::subset::Mask;

/// Sorted multiset of poset elements other than the least one; the empty
/// monomial is `1 = v_0̂`.
pub type ChainMonomial = Vec<usize>;

pub type PosetElement = BTreeMap<ChainMonomial, BigInt>;

/// Chooses which incomparable pair to rewrite next. Receives the
/// incomparable position pairs in lexicographic order.
pub type Selector<'a> = &'a mut dyn FnMut(&[(usize, usize)]) -> usize;

pub const DEFAULT_STEP_LIMIT: usize = 1_000_000;

/// Face ring `ℤ[S]` of a simplicial poset with `deg v_σ = x_degree · rank σ`,
/// computed in the chain-monomial normal form.
#[derive(Debug, Clone)]
pub struct PosetFaceRing {
    poset: SimplicialPoset,
    x_degree: u32,
    step_limit: usize,
}

impl PosetFaceRing {
    pub fn new(poset: SimplicialPoset, x_degree: u32) -> PosetFaceRing {
        PosetFaceRing {
            poset,
            x_degree,
            step_limit: DEFAULT_STEP_LIMIT,
        }
    }

    pub fn with_step_limit(mut self, limit: usize) -> PosetFaceRing {
        self.step_limit = limit;
        self
    }

    pub fn poset(&self) -> &SimplicialPoset {
        &self.poset
    }

    pub fn x_degree(&self) -> u32 {
        self.x_degree
    }

    pub fn one() -> PosetElement {
        BTreeMap::from([(Vec::new(), BigInt::one())])
    }

    pub fn generator(&self, s: usize) -> PosetElement {
        let mono = if s == 0 { Vec::new() } else { vec![s] };
        BTreeMap::from([(mono, BigInt::one())])
    }

    pub fn degree(&self, mono: &[usize]) -> usize {
        self.x_degree as usize * mono.iter().map(|&s| self.poset.rank(s)).sum::<usize>()
    }

    /// Block of a monomial: the vertex set of its support.
    pub fn block(&self, mono: &[usize]) -> Mask {
        mono.iter().fold(Mask::EMPTY, |acc, &s| acc.union(self.poset.vertex_set(s)))
    }

    pub fn is_normal(&self, mono: &[usize]) -> bool {
        mono.windows(2).all(|w| self.poset.leq(w[0], w[1]))
    }

    fn incomparable_pairs(&self, mono: &[usize]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..mono.len() {
            for k in i + 1..mono.len() {
                if !self.poset.leq(mono[i], mono[k]) && !self.poset.leq(mono[k], mono[i]) {
                    out.push((i, k));
                }
            }
        }
        out
    }

    /// Rewrites a monomial to normal form with the given pair selector.
    pub fn normal_form_with(&self, mono: ChainMonomial, select: Selector) -> Result<PosetElement> {
        let mut out = PosetElement::new();
        let mut work = vec![(mono, BigInt::one())];
        let mut steps = 0usize;
        while let Some((mut mono, coeff)) = work.pop() {
            mono.retain(|&s| s != 0);
            mono.sort_unstable();
            let pairs = self.incomparable_pairs(&mono);
            if pairs.is_empty() {
                *out.entry(mono).or_insert_with(BigInt::zero) += coeff;
                continue;
            }
            steps += 1;
            if steps > self.step_limit {
                return Err(Error::RewriteLimit(self.step_limit));
            }
            let (i, k) = pairs[select(&pairs).min(pairs.len() - 1)];
            let (s, t) = (mono[i], mono[k]);
            let joins = self.poset.join(s, t);
            if joins.is_empty() {
                continue;
            }
            let meet = self
                .poset
                .meet(s, t)
                .ok_or_else(|| Error::Internal(format!("elements {s} and {t} have a join but no unique meet")))?;
            let mut rest = mono;
            rest.remove(k);
            rest.remove(i);
            rest.push(meet);
            for eta in joins {
                let mut next = rest.clone();
                next.push(eta);
                work.push((next, coeff.clone()));
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn normal_form(&self, mono: ChainMonomial) -> Result<PosetElement> {
        self.normal_form_with(mono, &mut |_| 0)
    }

    pub fn multiply_with(&self, a: &PosetElement, b: &PosetElement, select: Selector) -> Result<PosetElement> {
        let mut out = PosetElement::new();
        for (ma, xa) in a {
            for (mb, xb) in b {
                let mut mono = ma.clone();
                mono.extend_from_slice(mb);
                for (m, c) in self.normal_form_with(mono, select)? {
                    *out.entry(m).or_insert_with(BigInt::zero) += c * xa * xb;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    /// Product in normal form, rewriting the leftmost incomparable pair first.
    pub fn multiply(&self, a: &PosetElement, b: &PosetElement) -> Result<PosetElement> {
        self.multiply_with(a, b, &mut |_| 0)
    }

    /// Chain monomials of degree at most `bound`.
    pub fn basis_up_to(&self, bound: usize) -> Vec<ChainMonomial> {
        let mut out = vec![Vec::new()];
        let mut mono = Vec::new();
        for s in 1..self.poset.len() {
            self.extend_chains(s, bound, &mut mono, &mut out);
        }
        out.sort_by(|a, b| self.degree(a).cmp(&self.degree(b)).then_with(|| a.cmp(b)));
        out
    }

    fn extend_chains(&self, s: usize, budget: usize, mono: &mut Vec<usize>, out: &mut Vec<ChainMonomial>) {
        let step = self.degree(&[s]);
        if step == 0 || step > budget {
            return;
        }
        let mut used = 0;
        let base = mono.len();
        while used + step <= budget {
            mono.push(s);
            used += step;
            out.push(mono.clone());
            for t in s + 1..self.poset.len() {
                if self.poset.leq(s, t) && t != s {
                    self.extend_chains(t, budget - used, mono, out);
                }
            }
        }
        mono.truncate(base);
    }

    /// Counts of chain monomials by degree.
    pub fn hilbert_series(&self, bound: usize) -> HilbertSeries {
        let n = self.poset.len();
        let mut ending: Vec<Vec<u64>> = vec![vec![0; bound + 1]; n];
        ending[0][0] = 1;
        for s in 1..n {
            let step = self.degree(&[s]);
            let mut below = vec![0u64; bound + 1];
            for t in 0..s {
                if self.poset.leq(t, s) {
                    for d in 0..=bound {
                        below[d] += ending[t][d];
                    }
                }
            }
            if step == 0 {
                continue;
            }
            for d in 0..=bound {
                let mut total = 0;
                let mut l = step;
                while l <= d {
                    total += below[d - l];
                    l += step;
                }
                ending[s][d] = total;
            }
        }
        let mut h = HilbertSeries::zero(bound);
        for (d, term) in h.terms.iter_mut().enumerate() {
            *term = Group::free(ending.iter().map(|e| e[d] as usize).sum());
        }
        h
    }

    /// Chain-monomial counts in each `(J, degree)` up to `bound`.
    pub fn block_dimensions(&self, bound: usize) -> BTreeMap<(Mask, i32), Group> {
        let mut counts: BTreeMap<(Mask, i32), usize> = BTreeMap::new();
        for mono in self.basis_up_to(bound) {
            *counts.entry((self.block(&mono), self.degree(&mono) as i32)).or_default() += 1;
        }
        counts.into_iter().map(|(k, c)| (k, Group::free(c))).collect()
    }

    pub fn format_monomial(&self, mono: &[usize]) -> String {
        if mono.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < mono.len() {
            let run = mono[i..].iter().take_while(|&&s| s == mono[i]).count();
            let name = &self.poset.names()[mono[i]];
            parts.push(if run == 1 { format!("v[{name}]") } else { format!("v[{name}]^{run}") });
            i += run;
        }
        parts.join("*")
    }

    pub fn format_element(&self, e: &PosetElement) -> String {
        if e.is_empty() {
            return "0".to_string();
        }
        e.iter()
            .map(|(m, c)| {
                let mono = self.format_monomial(m);
                if c.is_one() {
                    mono
                } else {
                    format!("{c}*{mono}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
