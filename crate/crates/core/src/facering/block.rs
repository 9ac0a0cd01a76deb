use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::hilbert::{exact_support_count, HilbertSeries};
use crate::complexes::SimplicialComplex;
use crate::constructions::PanelComplex;
use crate::cupring::cochain::{cup_unchecked, Cochain};
use crate::error::{Error, Result};
use crate::homology::{ChainComplex, Coefficients, CohomologyBasis, Group};
use crate::subset::Mask;

/// Generator of the coefficient module of block `J`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientClass {
    pub j: Mask,
    /// Internal cohomological degree.
    pub q: i32,
    #[serde(serialize_with = "crate::ser::opt_bigint")]
    pub order: Option<BigInt>,
    pub label: String,
}

/// Exponent vector of length `m`.
pub type Monomial = Vec<u32>;

/// Linear combination of `class ⊗ monomial` basis elements.
pub type BlockElement = BTreeMap<(usize, Monomial), BigInt>;

#[derive(Debug, Clone, Serialize)]
struct ClassProduct {
    left: usize,
    right: usize,
    #[serde(serialize_with = "terms_as_strings")]
    terms: Vec<(usize, BigInt)>,
}

fn terms_as_strings<S: serde::Serializer>(t: &[(usize, BigInt)], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(t.iter().map(|(i, c)| (i, c.to_string())))
}

/// Ring `⊕_J M_J ⊗ R^J` where `R^J` is spanned by monomials supported
/// exactly on `J` and `M_J` is a finitely generated coefficient module.
/// Products multiply coefficient classes through a class table and add
/// exponent vectors.
#[derive(Debug, Clone, Serialize)]
pub struct MonomialBlockRing {
    pub m: usize,
    pub x_degree: u32,
    pub coefficients: Coefficients,
    pub classes: Vec<CoefficientClass>,
    #[serde(skip)]
    table: BTreeMap<(usize, usize), Vec<(usize, BigInt)>>,
    class_products: Vec<ClassProduct>,
    /// Image of each poset element `σ` in the coefficient module of its block.
    #[serde(skip)]
    element_classes: Vec<Vec<(usize, BigInt)>>,
}

impl MonomialBlockRing {
    fn assemble(
        m: usize,
        x_degree: u32,
        coefficients: Coefficients,
        classes: Vec<CoefficientClass>,
        table: BTreeMap<(usize, usize), Vec<(usize, BigInt)>>,
        element_classes: Vec<Vec<(usize, BigInt)>>,
    ) -> MonomialBlockRing {
        let class_products = table
            .iter()
            .map(|(&(left, right), terms)| ClassProduct {
                left,
                right,
                terms: terms.clone(),
            })
            .collect();
        MonomialBlockRing {
            m,
            x_degree,
            coefficients,
            classes,
            table,
            class_products,
            element_classes,
        }
    }

    pub fn class_product(&self, a: usize, b: usize) -> &[(usize, BigInt)] {
        self.table.get(&(a, b)).map_or(&[], Vec::as_slice)
    }

    /// Classes of block `J` in internal degree `q`, in basis order.
    pub fn classes_of(&self, j: Mask, q: i32) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| self.classes[c].j == j && self.classes[c].q == q)
            .collect()
    }

    /// Blocks with a nonzero coefficient module, ascending.
    pub fn blocks(&self) -> Vec<Mask> {
        let mut out: Vec<Mask> = self.classes.iter().map(|c| c.j).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn reduce(&self, class: usize, x: &mut BigInt) {
        if let Coefficients::Mod(p) = self.coefficients {
            *x = x.mod_floor(&BigInt::from(p));
        }
        if let Some(d) = &self.classes[class].order {
            *x = x.mod_floor(d);
        }
    }

    fn normalized(&self, mut e: BlockElement) -> BlockElement {
        for ((c, _), x) in e.iter_mut() {
            self.reduce(*c, x);
        }
        e.retain(|_, x| !x.is_zero());
        e
    }

    /// Total degree of `class ⊗ monomial`.
    pub fn degree(&self, class: usize, monomial: &[u32]) -> i32 {
        self.classes[class].q + self.x_degree as i32 * monomial.iter().sum::<u32>() as i32
    }

    pub fn basis_element(&self, class: usize, monomial: Monomial) -> BlockElement {
        BTreeMap::from([((class, monomial), BigInt::one())])
    }

    pub fn one(&self) -> Option<BlockElement> {
        let unit = self.classes.iter().position(|c| c.j.is_empty() && c.q == 0)?;
        Some(self.basis_element(unit, vec![0; self.m]))
    }

    pub fn multiply(&self, a: &BlockElement, b: &BlockElement) -> BlockElement {
        let mut out = BlockElement::new();
        for ((ca, ma), xa) in a {
            for ((cb, mb), xb) in b {
                let mono: Monomial = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
                for (c, k) in self.class_product(*ca, *cb) {
                    *out.entry((*c, mono.clone())).or_insert_with(BigInt::zero) += xa * xb * k;
                }
            }
        }
        self.normalized(out)
    }

    /// Image of `v_σ` for a poset element with vertex set `j`: the recorded
    /// class when one exists, otherwise the unique degree-0 class of block `j`.
    pub fn element_image(&self, element: usize, j: Mask) -> Option<BlockElement> {
        let coeffs = match self.element_classes.get(element) {
            Some(c) => c.clone(),
            None => match self.classes_of(j, 0).as_slice() {
                [c] => vec![(*c, BigInt::one())],
                _ => return None,
            },
        };
        let mono: Monomial = (0..self.m).map(|i| u32::from(j.contains(i))).collect();
        Some(self.normalized(coeffs.into_iter().map(|(c, x)| ((c, mono.clone()), x)).collect()))
    }

    /// Every basis element `class ⊗ monomial` of degree at most `bound`.
    pub fn basis_up_to(&self, bound: usize) -> Vec<(usize, Monomial)> {
        let mut out = Vec::new();
        for (c, class) in self.classes.iter().enumerate() {
            if class.q > bound as i32 {
                continue;
            }
            let budget = (bound as i32 - class.q) as u32 / self.x_degree.max(1);
            let support: Vec<usize> = class.j.iter().collect();
            let mut mono = vec![0u32; self.m];
            exponents(&support, 0, budget, &mut mono, &mut |e| out.push((c, e.to_vec())));
        }
        out
    }

    /// Graded pieces up to `bound`, from the closed-form count of `R^J`.
    pub fn hilbert_series(&self, bound: usize) -> HilbertSeries {
        let mut h = HilbertSeries::zero(bound);
        for (key, g) in self.block_dimensions(bound) {
            let d = key.1 as usize;
            h.terms[d] = h.terms[d].sum(&g);
        }
        h
    }

    /// Group in each `(J, degree)` up to `bound`.
    pub fn block_dimensions(&self, bound: usize) -> BTreeMap<(Mask, i32), Group> {
        let mut out: BTreeMap<(Mask, i32), Group> = BTreeMap::new();
        let w = self.x_degree as i32;
        for class in &self.classes {
            for d in class.q.max(0)..=bound as i32 {
                let rest = d - class.q;
                let count = if w == 0 {
                    u64::from(rest == 0 && class.j.is_empty())
                } else if rest % w == 0 {
                    exact_support_count(class.j.len(), (rest / w) as usize)
                } else {
                    0
                };
                if count == 0 {
                    continue;
                }
                let g = match &class.order {
                    None => Group::free(count as usize),
                    Some(o) => Group {
                        rank: 0,
                        torsion: vec![o.clone(); count as usize],
                    },
                };
                let entry = out.entry((class.j, d)).or_default();
                *entry = entry.sum(&g);
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ring serializes")
    }
}

fn exponents(support: &[usize], at: usize, budget: u32, mono: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if at == support.len() {
        emit(mono);
        return;
    }
    let remaining = (support.len() - at - 1) as u32;
    if budget < remaining + 1 {
        return;
    }
    for e in 1..=budget - remaining {
        mono[support[at]] = e;
        exponents(support, at + 1, budget - e, mono, emit);
    }
    mono[support[at]] = 0;
}

/// Stanley–Reisner ring `ℤ[K]` with `deg v_j = x_degree`.
pub fn stanley_reisner(k: &SimplicialComplex, x_degree: u32) -> Result<MonomialBlockRing> {
    if !k.is_minimal() {
        return Err(Error::NotMinimal(
            (0..k.vertex_count()).find(|&v| !k.contains(&[v as u32])).unwrap_or(0) + 1,
        ));
    }
    let mut faces = vec![Mask::EMPTY];
    faces.extend(k.cells().iter().map(|c| Mask::from_indices(c.iter().map(|&v| v as usize))));
    faces.sort_unstable();
    let position: BTreeMap<Mask, usize> = faces.iter().enumerate().map(|(i, &j)| (j, i)).collect();
    let classes = faces
        .iter()
        .map(|&j| CoefficientClass {
            j,
            q: 0,
            order: None,
            label: j.label(),
        })
        .collect();
    let mut table = BTreeMap::new();
    for (a, &ja) in faces.iter().enumerate() {
        for (b, &jb) in faces.iter().enumerate() {
            if let Some(&c) = position.get(&ja.union(jb)) {
                table.insert((a, b), vec![(c, BigInt::one())]);
            }
        }
    }
    Ok(MonomialBlockRing::assemble(
        k.vertex_count(),
        x_degree,
        Coefficients::Integers,
        classes,
        table,
        Vec::new(),
    ))
}

struct Block {
    j: Mask,
    q: i32,
    basis: CohomologyBasis,
    cochains: Vec<Cochain>,
    offset: usize,
}

/// Topological face ring `⊕_J H^*(P_∩J) ⊗ R^J`. The product restricts both
/// factors to `P_∩(J∪J')`, takes their cup product there and multiplies
/// monomials.
pub fn topological_face_ring(p: &PanelComplex, x_degree: u32, coefficients: Coefficients) -> Result<MonomialBlockRing> {
    let y = p.y();
    let top = y.dimension().max(0) as i32;
    let keys: Vec<(Mask, i32)> = Mask::all(p.m()).flat_map(|j| (0..=top).map(move |q| (j, q))).collect();
    let found: Vec<Option<(Mask, i32, CohomologyBasis)>> = keys
        .par_iter()
        .map(|&(j, q)| {
            let a = p.intersection(j);
            if a.is_empty() {
                return Ok(None);
            }
            let c = ChainComplex::of_subcomplex(y, &a, false)?;
            let b = CohomologyBasis::new(&c, q, coefficients)?;
            Ok((!b.is_empty()).then_some((j, q, b)))
        })
        .collect::<Result<_>>()?;
    let mut blocks = Vec::new();
    let mut classes = Vec::new();
    for (j, q, b) in found.into_iter().flatten() {
        let cochains = b
            .generators()
            .iter()
            .map(|g| {
                let entries: Vec<(usize, BigInt)> = b.cells().iter().copied().zip(g.iter().cloned()).collect();
                Cochain::from_cells(y, q as usize, &entries)
            })
            .collect();
        let offset = classes.len();
        for (i, order) in b.orders().iter().enumerate() {
            classes.push(CoefficientClass {
                j,
                q,
                order: order.clone(),
                label: format!("{}.{}.{}", j.label(), q, i),
            });
        }
        blocks.push(Block {
            j,
            q,
            basis: b,
            cochains,
            offset,
        });
    }
    let index: BTreeMap<(Mask, i32), usize> = blocks.iter().enumerate().map(|(i, b)| ((b.j, b.q), i)).collect();
    let pairs: Vec<(usize, usize)> = (0..blocks.len())
        .flat_map(|a| (0..blocks.len()).map(move |b| (a, b)))
        .collect();
    let products: Vec<Vec<((usize, usize), Vec<(usize, BigInt)>)>> = pairs
        .par_iter()
        .map(|&(a, b)| {
            let (u, v) = (&blocks[a], &blocks[b]);
            let Some(&t) = index.get(&(u.j.union(v.j), u.q + v.q)) else {
                return Ok(Vec::new());
            };
            let target = &blocks[t];
            let mut out = Vec::new();
            for (x, cx) in u.cochains.iter().enumerate() {
                for (w, cw) in v.cochains.iter().enumerate() {
                    let prod = cup_unchecked(y, cx, cw);
                    let values: Vec<BigInt> = target.basis.cells().iter().map(|&id| prod.value(y, id).clone()).collect();
                    let coords = target.basis.coordinates(&values)?;
                    let terms: Vec<(usize, BigInt)> = coords
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (target.offset + i, c))
                        .collect();
                    if !terms.is_empty() {
                        out.push(((u.offset + x, v.offset + w), terms));
                    }
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let table = products.into_iter().flatten().collect();

    let mut element_classes = Vec::new();
    for e in 0..p.element_count() {
        let j = p.element_vertex_set(e);
        let Some(&b) = index.get(&(j, 0)) else {
            return Err(Error::Internal(format!("no degree-0 classes in block {j}")));
        };
        let block = &blocks[b];
        let face = &p.faces()[p.face_of_element(e)];
        let values: Vec<BigInt> = block
            .basis
            .cells()
            .iter()
            .map(|&id| BigInt::from(u8::from(face.cells.contains(id))))
            .collect();
        let coords = block.basis.coordinates(&values)?;
        element_classes.push(
            coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (block.offset + i, c))
                .collect(),
        );
    }
    let mut ring = MonomialBlockRing::assemble(p.m(), x_degree, coefficients, classes, BTreeMap::new(), element_classes);
    let table: BTreeMap<(usize, usize), Vec<(usize, BigInt)>> = table;
    let mut reduced = BTreeMap::new();
    for (key, terms) in table {
        let mut terms: Vec<(usize, BigInt)> = terms
            .into_iter()
            .map(|(c, mut x)| {
                ring.reduce(c, &mut x);
                (c, x)
            })
            .filter(|(_, x)| !x.is_zero())
            .collect();
        terms.sort();
        if !terms.is_empty() {
            reduced.insert(key, terms);
        }
    }
    ring = MonomialBlockRing::assemble(
        ring.m,
        ring.x_degree,
        ring.coefficients,
        ring.classes,
        reduced,
        ring.element_classes,
    );
    Ok(ring)
}
