//! Formula-versus-oracle comparisons and the exhaustive small-case sweep.

use rayon::prelude::*;
use serde::Serialize;

use crate::complexes::{all_complexes, SimplicialComplex};
use crate::constructions::{panelize_simplicial, PanelComplex};
use crate::decomp::{hochster_table, hochster_table_poset, summands_x_contractible, Decomposition};
use crate::error::Result;
use crate::homology::{cohomology, Coefficients, GradedGroup, Group};
use crate::io::Input;
use crate::oracle::{mac_chain_complex_classical, mac_chain_complex_panel};
use crate::spheres::SpherePairSpec;
use crate::subset::Mask;

/// Cohomology obtained along one path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Path {
    pub name: String,
    pub group: GradedGroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyMismatch {
    pub path: String,
    pub degree: i32,
    /// Smallest `J` whose summand is nonzero in that degree.
    pub j: Option<Mask>,
    pub formula: Group,
    pub other: Group,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub spec: SpherePairSpec,
    pub coefficients: Coefficients,
    pub formula: Decomposition,
    pub paths: Vec<Path>,
    pub mismatch: Option<VerifyMismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }

    fn compare(spec: &SpherePairSpec, coefficients: Coefficients, formula: Decomposition, paths: Vec<Path>) -> VerifyReport {
        let mismatch = paths.iter().find_map(|p| {
            let d = formula.total.first_difference(&p.group)?;
            Some(VerifyMismatch {
                path: p.name.clone(),
                degree: d,
                j: formula.summands.iter().find(|s| !s.group.get(d).is_zero()).map(|s| s.j),
                formula: formula.total.get(d),
                other: p.group.get(d),
            })
        });
        VerifyReport {
            spec: spec.clone(),
            coefficients,
            formula,
            paths,
            mismatch,
        }
    }
}

/// Summand formula on a panel structure against the cellular oracle of
/// `(D^{n+1}, S^n)^{(Y,P)}`.
pub fn verify_panels(p: &PanelComplex, spec: &SpherePairSpec, coefficients: Coefficients) -> Result<VerifyReport> {
    let formula = summands_x_contractible(p, spec, coefficients)?;
    let panel = cohomology(&mac_chain_complex_panel(p, spec)?, coefficients)?;
    Ok(VerifyReport::compare(
        spec,
        coefficients,
        formula,
        vec![Path {
            name: "panel oracle".into(),
            group: panel,
        }],
    ))
}

/// Summand formula over `Y^K` against the classical oracle on `K`, the panel
/// oracle over `Y^K` and the Hochster table.
pub fn verify_complex(k: &SimplicialComplex, spec: &SpherePairSpec, coefficients: Coefficients) -> Result<VerifyReport> {
    let p = panelize_simplicial(k)?;
    let formula = summands_x_contractible(&p, spec, coefficients)?;
    let classical = cohomology(&mac_chain_complex_classical(k, spec)?, coefficients)?;
    let panel = cohomology(&mac_chain_complex_panel(&p, spec)?, coefficients)?;
    let hochster = hochster_table(k, spec, coefficients, false)?.total;
    Ok(VerifyReport::compare(
        spec,
        coefficients,
        formula,
        vec![
            Path {
                name: "classical oracle".into(),
                group: classical,
            },
            Path {
                name: "panel oracle".into(),
                group: panel,
            },
            Path {
                name: "hochster table".into(),
                group: hochster,
            },
        ],
    ))
}

/// Dispatches on the input kind.
pub fn verify_input(input: &Input, spec: &SpherePairSpec, coefficients: Coefficients) -> Result<VerifyReport> {
    match input {
        Input::Complex(k) => verify_complex(k, spec, coefficients),
        Input::Poset(s) => {
            let mut report = verify_panels(&input.panel_complex()?, spec, coefficients)?;
            let table = hochster_table_poset(s, spec, coefficients)?.total;
            report.paths.push(Path {
                name: "poset hochster table".into(),
                group: table,
            });
            Ok(VerifyReport::compare(spec, coefficients, report.formula, report.paths))
        }
        _ => verify_panels(&input.panel_complex()?, spec, coefficients),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepFailure {
    pub facets: Vec<Vec<u32>>,
    pub m: usize,
    pub n: u32,
    pub mismatch: VerifyMismatch,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub max_vertices: usize,
    pub uniform_dims: Vec<u32>,
    pub cases: usize,
    pub failures: Vec<SweepFailure>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs [`verify_complex`] on every complex with `1..=max_vertices` vertices
/// and every uniform spec in `dims`.
pub fn sweep(max_vertices: usize, dims: &[u32], coefficients: Coefficients) -> Result<SweepReport> {
    let cases: Vec<(SimplicialComplex, u32)> = (1..=max_vertices)
        .flat_map(all_complexes)
        .flat_map(|k| dims.iter().map(move |&n| (k.clone(), n)))
        .collect();
    let results: Vec<Option<SweepFailure>> = cases
        .par_iter()
        .map(|(k, n)| {
            let spec = SpherePairSpec::uniform(k.vertex_count(), *n);
            let r = verify_complex(k, &spec, coefficients)?;
            Ok(r.mismatch.map(|mismatch| SweepFailure {
                facets: k.facets().iter().map(|f| f.iter().map(|v| v + 1).collect()).collect(),
                m: k.vertex_count(),
                n: *n,
                mismatch,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(SweepReport {
        max_vertices,
        uniform_dims: dims.to_vec(),
        cases: cases.len(),
        failures: results.into_iter().flatten().collect(),
    })
}
