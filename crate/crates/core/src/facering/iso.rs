use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::block::{BlockElement, Monomial, MonomialBlockRing};
use super::hilbert::HilbertSeries;
use super::poset_ring::{ChainMonomial, PosetElement, PosetFaceRing};
use crate::error::Result;
use crate::homology::Group;
use crate::subset::Mask;

#[derive(Debug, Clone, Copy)]
pub enum FaceRing<'a> {
    Block(&'a MonomialBlockRing),
    Poset(&'a PosetFaceRing),
}

impl FaceRing<'_> {
    pub fn hilbert_series(&self, bound: usize) -> HilbertSeries {
        match self {
            FaceRing::Block(r) => r.hilbert_series(bound),
            FaceRing::Poset(r) => r.hilbert_series(bound),
        }
    }

    fn block_dimensions(&self, bound: usize) -> BTreeMap<(Mask, i32), Group> {
        match self {
            FaceRing::Block(r) => r.block_dimensions(bound),
            FaceRing::Poset(r) => r.block_dimensions(bound),
        }
    }

    fn m(&self) -> usize {
        match self {
            FaceRing::Block(r) => r.m,
            FaceRing::Poset(r) => r.poset().vertex_count(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Stage {
    Hilbert,
    Blocks,
    StructureConstants,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub stage: Stage,
    pub degree: i32,
    pub j: Option<Mask>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoVerdict {
    pub bound: usize,
    pub left: HilbertSeries,
    pub right: HilbertSeries,
    /// Whether structure constants were compared under a correspondence.
    pub structure_checked: bool,
    pub mismatch: Option<Mismatch>,
}

impl IsoVerdict {
    pub fn matches(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares two face rings up to `bound`: Hilbert series, then `(J, degree)`
/// block dimensions, then structure constants under the canonical
/// correspondence (class by class between block rings, and
/// `v_σ ↦ [face of σ] ⊗ Π_{j∈V(σ)} x_j` from a poset ring into a block ring).
pub fn iso_check(a: FaceRing, b: FaceRing, bound: usize) -> Result<IsoVerdict> {
    let left = a.hilbert_series(bound);
    let right = b.hilbert_series(bound);
    let mut verdict = IsoVerdict {
        bound,
        left,
        right,
        structure_checked: false,
        mismatch: None,
    };
    if let Some(d) = verdict.left.first_mismatch(&verdict.right) {
        verdict.mismatch = Some(Mismatch {
            stage: Stage::Hilbert,
            degree: d as i32,
            j: None,
            detail: format!(
                "{} vs {}",
                verdict.left.terms.get(d).cloned().unwrap_or_default(),
                verdict.right.terms.get(d).cloned().unwrap_or_default()
            ),
        });
        return Ok(verdict);
    }
    if a.m() == b.m() {
        let (da, db) = (a.block_dimensions(bound), b.block_dimensions(bound));
        let mut keys: Vec<(Mask, i32)> = da.keys().chain(db.keys()).copied().collect();
        keys.sort_by_key(|&(j, d)| (d, j));
        keys.dedup();
        let zero = Group::default();
        if let Some(&(j, d)) = keys
            .iter()
            .find(|k| da.get(k).unwrap_or(&zero) != db.get(k).unwrap_or(&zero))
        {
            verdict.mismatch = Some(Mismatch {
                stage: Stage::Blocks,
                degree: d,
                j: Some(j),
                detail: format!(
                    "{} vs {}",
                    da.get(&(j, d)).unwrap_or(&zero),
                    db.get(&(j, d)).unwrap_or(&zero)
                ),
            });
            return Ok(verdict);
        }
        verdict.mismatch = match (a, b) {
            (FaceRing::Block(x), FaceRing::Block(y)) => {
                verdict.structure_checked = true;
                compare_block_rings(x, y, bound)
            }
            (FaceRing::Poset(s), FaceRing::Block(r)) | (FaceRing::Block(r), FaceRing::Poset(s)) => {
                verdict.structure_checked = true;
                compare_poset_ring(s, r, bound)?
            }
            (FaceRing::Poset(_), FaceRing::Poset(_)) => None,
        };
    }
    Ok(verdict)
}

fn mismatch(degree: i32, j: Mask, detail: String) -> Option<Mismatch> {
    Some(Mismatch {
        stage: Stage::StructureConstants,
        degree,
        j: Some(j),
        detail,
    })
}

/// Matches classes by position within each `(J, q)` and compares the class tables.
fn compare_block_rings(a: &MonomialBlockRing, b: &MonomialBlockRing, bound: usize) -> Option<Mismatch> {
    let mut to_b = vec![usize::MAX; a.classes.len()];
    for (i, class) in a.classes.iter().enumerate() {
        let here = a.classes_of(class.j, class.q);
        let there = b.classes_of(class.j, class.q);
        let pos = here.iter().position(|&c| c == i).expect("class lists itself");
        match there.get(pos) {
            Some(&c) if b.classes[c].order == class.order => to_b[i] = c,
            _ => return mismatch(class.q, class.j, format!("no partner for class {}", class.label)),
        }
    }
    let w = a.x_degree as i32;
    for x in 0..a.classes.len() {
        for y in 0..a.classes.len() {
            let (cx, cy) = (&a.classes[x], &a.classes[y]);
            let j = cx.j.union(cy.j);
            let degree = cx.q + cy.q + w * j.len() as i32;
            if degree > bound as i32 {
                continue;
            }
            let mut lhs: Vec<(usize, BigInt)> = a.class_product(x, y).iter().map(|(c, k)| (to_b[*c], k.clone())).collect();
            lhs.sort();
            let rhs = b.class_product(to_b[x], to_b[y]).to_vec();
            if lhs != rhs {
                return mismatch(degree, j, format!("{} * {}", cx.label, cy.label));
            }
        }
    }
    None
}

fn image_of_monomial(r: &MonomialBlockRing, mono: &[usize], cache: &BTreeMap<usize, BlockElement>) -> Option<BlockElement> {
    let mut acc = r.one()?;
    for e in mono {
        acc = r.multiply(&acc, cache.get(e)?);
    }
    Some(acc)
}

fn image(r: &MonomialBlockRing, e: &PosetElement, cache: &BTreeMap<usize, BlockElement>) -> Option<BlockElement> {
    let mut out = BlockElement::new();
    for (mono, c) in e {
        for (k, x) in image_of_monomial(r, mono, cache)? {
            *out.entry(k).or_insert_with(BigInt::zero) += &x * c;
        }
    }
    out.retain(|_, x| !x.is_zero());
    Some(out)
}

/// Checks that `ρ` sends the chain-monomial basis bijectively onto `±` the
/// free basis of `r` in each degree, and that `ρ(ab) = ρ(a)ρ(b)` on basis pairs.
fn compare_poset_ring(s: &PosetFaceRing, r: &MonomialBlockRing, bound: usize) -> Result<Option<Mismatch>> {
    let poset = s.poset();
    let mut cache = BTreeMap::new();
    for e in 1..poset.len() {
        let j = poset.vertex_set(e);
        match r.element_image(e, j) {
            Some(img) => {
                cache.insert(e, img);
            }
            None => return Ok(mismatch(s.degree(&[e]) as i32, j, format!("no image for {}", poset.names()[e]))),
        }
    }
    let basis = s.basis_up_to(bound);
    let mut images: BTreeMap<ChainMonomial, BlockElement> = BTreeMap::new();
    let mut seen: BTreeSet<(usize, Monomial)> = BTreeSet::new();
    for mono in &basis {
        let j = s.block(mono);
        let d = s.degree(mono) as i32;
        let Some(img) = image_of_monomial(r, mono, &cache) else {
            return Ok(mismatch(d, j, "ring has no unit".into()));
        };
        let single = img.len() == 1 && img.values().next().is_some_and(|x| x.abs().is_one());
        let key = img.keys().next().cloned();
        match key {
            Some(k) if single && r.classes[k.0].j == j && r.degree(k.0, &k.1) == d && seen.insert(k.clone()) => {}
            _ => {
                return Ok(mismatch(d, j, format!("{} is not sent to a distinct basis element", s.format_monomial(mono))));
            }
        }
        images.insert(mono.clone(), img);
    }
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i..] {
            let d = s.degree(x) + s.degree(y);
            if d > bound {
                continue;
            }
            let product = s.multiply(&BTreeMap::from([(x.clone(), BigInt::one())]), &BTreeMap::from([(y.clone(), BigInt::one())]))?;
            let lhs = image(r, &product, &cache);
            let rhs = r.multiply(&images[x], &images[y]);
            if lhs.as_ref() != Some(&rhs) {
                let j = s.block(x).union(s.block(y));
                return Ok(mismatch(
                    d as i32,
                    j,
                    format!("{} * {}", s.format_monomial(x), s.format_monomial(y)),
                ));
            }
        }
    }
    Ok(None)
}
