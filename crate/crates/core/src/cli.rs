//! Command-line front end of the `facelab` binary.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::complexes::SimplicialPoset;
use crate::cupring::ds_ring;
use crate::decomp::{hochster_table, hochster_table_poset, summands_a_contractible, summands_x_contractible};
use crate::error::Error;
use crate::facering::{stanley_reisner, topological_face_ring, HilbertSeries, PosetFaceRing};
use crate::homology::{cohomology, homology, ChainComplex, Coefficients};
use crate::io::Input;
use crate::report::{summands_csv, to_json, Report};
use crate::spheres::SpherePairSpec;
use crate::verify::{sweep, verify_input};

#[derive(Debug, Parser)]
#[command(name = "facelab", version, about = "Polyhedral products over panel structures")]
pub struct Cli {
    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    pub parallel: Option<usize>,
    /// Directory for report files.
    #[arg(long, global = true, default_value = ".")]
    pub out_dir: PathBuf,
    /// Base name of report files; defaults to the input file stem.
    #[arg(long, global = true)]
    pub name: Option<String>,
    /// Coefficient ring: `0` for the integers or a prime `p`.
    #[arg(long, global = true, default_value_t = 0)]
    pub prime: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum PanelMode {
    Faces,
    #[value(name = "I_f")]
    PanelIndex,
    #[value(name = "c_J")]
    Components,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum DecompMode {
    #[value(name = "X", alias = "x")]
    X,
    #[value(name = "A", alias = "a")]
    A,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Variant {
    Sr,
    Poset,
    Topological,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Homology and cohomology of a complex (or of `Y` for panel inputs).
    Homology {
        input: PathBuf,
        /// Also write the chain complex as sparse triplets.
        #[arg(long)]
        dump_chains: bool,
    },
    /// Summary of the panel structure.
    Panelize {
        #[arg(value_enum)]
        mode: PanelMode,
        input: PathBuf,
    },
    /// Summand table of the additive decomposition.
    Decomp {
        input: PathBuf,
        #[arg(long)]
        spec: String,
        #[arg(long, value_enum, default_value = "X")]
        mode: DecompMode,
    },
    /// Hochster-type table.
    Hochster {
        input: PathBuf,
        /// Treat a complex as its face poset.
        #[arg(long)]
        poset: bool,
        #[arg(long)]
        spec: Option<String>,
    },
    /// Cohomology ring as JSON.
    Ring {
        input: PathBuf,
        #[arg(long)]
        spec: String,
    },
    /// Face ring Hilbert series and ring dump.
    Facering {
        input: PathBuf,
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long)]
        degree_bound: usize,
        /// Degree of each generator `x_j`.
        #[arg(long, default_value_t = 2)]
        x_degree: u32,
    },
    /// Formula against oracle; exit 0 iff every degree matches.
    Verify {
        input: PathBuf,
        #[arg(long)]
        spec: String,
    },
    /// Exhaustive sweep over small complexes.
    Selftest {
        #[arg(long, default_value_t = 4)]
        max_vertices: usize,
    },
}

/// Failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Input(_) => 2,
            Error::Internal(_)
            | Error::BoundarySquareNonzero { .. }
            | Error::NotACocycle { .. }
            | Error::AnnihilationViolated
            | Error::RewriteLimit(_) => 1,
            _ => 3,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

struct Outputs {
    dir: PathBuf,
    name: String,
}

impl Outputs {
    fn write(&self, suffix: &str, contents: &str) -> Outcome {
        fs::create_dir_all(&self.dir).map_err(io_failure)?;
        let path = self.dir.join(format!("{}.{suffix}", self.name));
        fs::write(&path, contents).map_err(io_failure)
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure { code: 1, message: e.to_string() }
}

fn load(path: &Path) -> std::result::Result<Input, Failure> {
    Ok(Input::from_path(path)?)
}

fn parse_spec(text: &str) -> std::result::Result<SpherePairSpec, Failure> {
    text.parse::<SpherePairSpec>().map_err(|e| Failure {
        code: 3,
        message: e.to_string(),
    })
}

fn vector(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

impl Cli {
    fn coefficients(&self) -> std::result::Result<Coefficients, Failure> {
        match self.prime {
            0 => Ok(Coefficients::Integers),
            p if p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0) => Ok(Coefficients::Mod(p)),
            p => Err(Failure {
                code: 3,
                message: format!("{p} is not a prime"),
            }),
        }
    }

    fn outputs(&self, input: Option<&Path>, fallback: &str) -> Outputs {
        let name = self.name.clone().unwrap_or_else(|| {
            input
                .and_then(|p| p.file_stem())
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| fallback.to_string())
        });
        Outputs {
            dir: self.out_dir.clone(),
            name,
        }
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    if let Some(n) = cli.parallel {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
    match dispatch(cli) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    let coefficients = cli.coefficients()?;
    match &cli.command {
        Command::Homology { input, dump_chains } => cmd_homology(cli, input, *dump_chains, coefficients),
        Command::Panelize { mode, input } => cmd_panelize(cli, *mode, input),
        Command::Decomp { input, spec, mode } => cmd_decomp(cli, input, spec, *mode, coefficients),
        Command::Hochster { input, poset, spec } => cmd_hochster(cli, input, *poset, spec.as_deref(), coefficients),
        Command::Ring { input, spec } => cmd_ring(cli, input, spec, coefficients),
        Command::Facering {
            input,
            variant,
            degree_bound,
            x_degree,
        } => cmd_facering(cli, input, *variant, *degree_bound, *x_degree, coefficients),
        Command::Verify { input, spec } => cmd_verify(cli, input, spec, coefficients),
        Command::Selftest { max_vertices } => cmd_selftest(cli, *max_vertices, coefficients),
    }
}

fn cmd_homology(cli: &Cli, path: &Path, dump: bool, coefficients: Coefficients) -> Outcome {
    let input = load(path)?;
    let k = match &input {
        Input::Poset(s) => s.order_complex(),
        other => other.complex().expect("non-poset inputs carry a complex").clone(),
    };
    let c = ChainComplex::absolute(&k);
    let h = homology(&c, coefficients)?;
    let co = cohomology(&c, coefficients)?;
    let mut r = Report::new(format!("Homology of {}", path.display()));
    r.line(format!("- input: {}", input.kind()))
        .line(format!("- coefficients: {coefficients}"))
        .line(format!("- f-vector: {:?}", k.f_vector()))
        .graded("homology", &h)
        .graded("cohomology", &co);
    println!("homology: {h}");
    println!("betti: {}", vector(&h.betti()));
    let out = cli.outputs(Some(path), "homology");
    if dump {
        out.write("chains.json", &to_json(&c.dump()))?;
    }
    out.write("report.md", &r.to_markdown())
}

fn cmd_panelize(cli: &Cli, mode: PanelMode, path: &Path) -> Outcome {
    let p = load(path)?.panel_complex()?;
    let mut r = Report::new(format!("Panel structure of {}", path.display()));
    r.line(format!("- panels: {}", p.m()))
        .line(format!("- cells of Y: {}", p.y().num_cells()))
        .line(format!("- faces: {}", p.faces().len()));
    let rows: Vec<Vec<String>> = match mode {
        PanelMode::Faces => p
            .faces()
            .iter()
            .enumerate()
            .map(|(i, f)| vec![i.to_string(), f.panel_index.label(), f.anchor.to_string(), f.cells.len().to_string()])
            .collect(),
        PanelMode::PanelIndex => (0..p.y().num_cells())
            .map(|c| {
                let simplex: Vec<String> = p.y().cell(c).iter().map(|v| (v + 1).to_string()).collect();
                vec![c.to_string(), format!("[{}]", simplex.join(",")), p.cell_index(c).label()]
            })
            .collect(),
        PanelMode::Components => crate::subset::Mask::all(p.m())
            .map(|j| vec![j.label(), p.component_count(j).to_string()])
            .collect(),
    };
    let header: &[&str] = match mode {
        PanelMode::Faces => &["face", "I_f", "anchor", "cells"],
        PanelMode::PanelIndex => &["cell", "simplex", "I_f"],
        PanelMode::Components => &["J", "c_J"],
    };
    r.section("table").table(header, &rows);
    println!("{}", header.join("\t"));
    for row in &rows {
        println!("{}", row.join("\t"));
    }
    cli.outputs(Some(path), "panelize").write("report.md", &r.to_markdown())
}

fn cmd_decomp(cli: &Cli, path: &Path, spec: &str, mode: DecompMode, coefficients: Coefficients) -> Outcome {
    let spec = parse_spec(spec)?;
    let p = load(path)?.panel_complex()?;
    let d = match mode {
        DecompMode::X => summands_x_contractible(&p, &spec, coefficients)?,
        DecompMode::A => summands_a_contractible(&p, &spec, coefficients)?,
    };
    let mut r = Report::new(format!("Decomposition of {}", path.display()));
    r.line(format!("- mode: {mode:?}"))
        .line(format!("- spec: {spec}"))
        .line(format!("- coefficients: {coefficients}"))
        .section("summands")
        .decomposition(&d);
    println!("total: {}", d.total);
    let out = cli.outputs(Some(path), "decomp");
    out.write("summands.csv", &summands_csv(&d))?;
    out.write("report.md", &r.to_markdown())
}

fn cmd_hochster(cli: &Cli, path: &Path, as_poset: bool, spec: Option<&str>, coefficients: Coefficients) -> Outcome {
    let input = load(path)?;
    let poset = match (&input, as_poset) {
        (Input::Poset(s), _) => Some(s.clone()),
        (Input::Complex(k), true) => Some(SimplicialPoset::face_poset(k)),
        (Input::Complex(_), false) => None,
        _ => {
            return Err(Failure {
                code: 3,
                message: "hochster needs a complex or a poset".into(),
            })
        }
    };
    let m = match (&poset, &input) {
        (Some(s), _) => s.vertex_count(),
        (None, i) => i.complex().expect("complex input").vertex_count(),
    };
    let spec = match spec {
        Some(s) => parse_spec(s)?,
        None => SpherePairSpec::uniform(m, 1),
    };
    let d = match (&poset, &input) {
        (Some(s), _) => hochster_table_poset(s, &spec, coefficients)?,
        (None, Input::Complex(k)) => hochster_table(k, &spec, coefficients, false)?,
        _ => unreachable!("checked above"),
    };
    let mut r = Report::new(format!("Hochster table of {}", path.display()));
    r.line(format!("- spec: {spec}"))
        .line(format!("- coefficients: {coefficients}"))
        .section("summands")
        .decomposition(&d);
    for (deg, g) in d.total.iter() {
        println!("H{deg} = {g}");
    }
    let out = cli.outputs(Some(path), "hochster");
    out.write("summands.csv", &summands_csv(&d))?;
    out.write("report.md", &r.to_markdown())
}

const RING_CHECK_LIMIT: usize = 60;

fn cmd_ring(cli: &Cli, path: &Path, spec: &str, coefficients: Coefficients) -> Outcome {
    let spec = parse_spec(spec)?;
    let p = load(path)?.panel_complex()?;
    let ring = ds_ring(&p, &spec, coefficients)?;
    let out = cli.outputs(Some(path), "ring");
    out.write("ring.json", &ring.to_json())?;
    let mut r = Report::new(format!("Cohomology ring of {}", path.display()));
    r.line(format!("- spec: {spec}"))
        .line(format!("- basis elements: {}", ring.len()))
        .line(format!("- nonzero products: {}", ring.products().len()))
        .graded("additive structure", &ring.graded_group());
    let mut failure = None;
    if let Some((a, b)) = ring.annihilation_violation() {
        failure = Some(format!("annihilation fails for {} * {}", ring.basis[a].label, ring.basis[b].label));
    }
    if ring.len() <= RING_CHECK_LIMIT {
        let comm = ring.graded_commutativity_violation();
        let assoc = ring.associativity_violation();
        r.line(format!("- graded commutative: {}", comm.is_none()))
            .line(format!("- associative: {}", assoc.is_none()));
        if let Some((a, b)) = comm {
            failure.get_or_insert(format!("commutativity fails for {} * {}", ring.basis[a].label, ring.basis[b].label));
        }
        if let Some((a, b, c)) = assoc {
            failure.get_or_insert(format!(
                "associativity fails for {}, {}, {}",
                ring.basis[a].label, ring.basis[b].label, ring.basis[c].label
            ));
        }
    }
    out.write("report.md", &r.to_markdown())?;
    println!("basis: {}, products: {}", ring.len(), ring.products().len());
    match failure {
        Some(message) => Err(Failure { code: 1, message }),
        None => Ok(()),
    }
}

fn cmd_facering(
    cli: &Cli,
    path: &Path,
    variant: Variant,
    bound: usize,
    x_degree: u32,
    coefficients: Coefficients,
) -> Outcome {
    let input = load(path)?;
    let out = cli.outputs(Some(path), "facering");
    let hilbert: HilbertSeries = match variant {
        Variant::Sr => {
            let Some(k) = input.complex() else {
                return Err(Failure {
                    code: 3,
                    message: "the sr variant needs a simplicial complex".into(),
                });
            };
            let ring = stanley_reisner(k, x_degree)?;
            out.write("ring.json", &ring.to_json())?;
            ring.hilbert_series(bound)
        }
        Variant::Topological => {
            let ring = topological_face_ring(&input.panel_complex()?, x_degree, coefficients)?;
            out.write("ring.json", &ring.to_json())?;
            ring.hilbert_series(bound)
        }
        Variant::Poset => {
            let s = match &input {
                Input::Poset(s) => s.clone(),
                Input::Complex(k) => SimplicialPoset::face_poset(k),
                _ => {
                    return Err(Failure {
                        code: 3,
                        message: "the poset variant needs a poset or a complex".into(),
                    })
                }
            };
            let ring = PosetFaceRing::new(s, x_degree);
            let generators: Vec<serde_json::Value> = (1..ring.poset().len())
                .map(|e| serde_json::json!({"element": ring.poset().names()[e], "degree": ring.degree(&[e])}))
                .collect();
            let basis: Vec<String> = ring.basis_up_to(bound).iter().map(|m| ring.format_monomial(m)).collect();
            out.write(
                "ring.json",
                &to_json(&serde_json::json!({"generators": generators, "basis": basis})),
            )?;
            ring.hilbert_series(bound)
        }
    };
    let step = x_degree.max(1) as usize;
    let mut r = Report::new(format!("Face ring of {}", path.display()));
    r.line(format!("- variant: {variant:?}"))
        .line(format!("- deg x_j: {x_degree}"))
        .line(format!("- degree bound: {bound}"))
        .line(format!("- ranks: {}", vector(&hilbert.ranks())))
        .line(format!("- ranks in degrees divisible by {step}: {}", vector(&hilbert.ranks_every(step))))
        .line(format!("- torsion present: {}", hilbert.has_torsion()));
    out.write("hilbert.csv", &hilbert.to_csv())?;
    out.write("report.md", &r.to_markdown())?;
    println!("hilbert: {}", vector(&hilbert.ranks_every(step)));
    Ok(())
}

fn cmd_verify(cli: &Cli, path: &Path, spec: &str, coefficients: Coefficients) -> Outcome {
    let spec = parse_spec(spec)?;
    let input = load(path)?;
    let report = verify_input(&input, &spec, coefficients)?;
    let mut r = Report::new(format!("Verification of {}", path.display()));
    r.line(format!("- spec: {spec}"))
        .line(format!("- coefficients: {coefficients}"))
        .graded("formula", &report.formula.total);
    for p in &report.paths {
        r.graded(&p.name, &p.group);
    }
    let verdict = match &report.mismatch {
        None => "all degrees match".to_string(),
        Some(m) => format!(
            "mismatch against {} in degree {} (J = {}): {} vs {}",
            m.path,
            m.degree,
            m.j.map_or("-".to_string(), |j| j.label()),
            m.formula,
            m.other
        ),
    };
    r.section("verdict").line(&verdict).section("summands").decomposition(&report.formula);
    let out = cli.outputs(Some(path), "verify");
    out.write("summands.csv", &summands_csv(&report.formula))?;
    out.write("report.md", &r.to_markdown())?;
    println!("formula betti: {}", vector(&report.formula.total.betti()));
    for p in &report.paths {
        println!("{} betti: {}", p.name, vector(&p.group.betti()));
    }
    println!("{verdict}");
    match report.mismatch {
        None => Ok(()),
        Some(_) => Err(Failure { code: 1, message: verdict }),
    }
}

fn cmd_selftest(cli: &Cli, max_vertices: usize, coefficients: Coefficients) -> Outcome {
    let report = sweep(max_vertices, &[0, 1], coefficients)?;
    let mut r = Report::new("Self-test");
    r.line(format!("- max vertices: {max_vertices}"))
        .line(format!("- uniform dimensions: {:?}", report.uniform_dims))
        .line(format!("- cases: {}", report.cases))
        .line(format!("- failures: {}", report.failures.len()));
    for f in &report.failures {
        r.line(format!(
            "  - m={} n={} facets={:?}: {} in degree {}",
            f.m, f.n, f.facets, f.mismatch.path, f.mismatch.degree
        ));
    }
    cli.outputs(None, "selftest").write("report.md", &r.to_markdown())?;
    println!("cases: {}, failures: {}", report.cases, report.failures.len());
    match report.failures.first() {
        None => Ok(()),
        Some(f) => Err(Failure {
            code: 1,
            message: format!(
                "m={} n={} facets={:?}: mismatch against {} in degree {} (J = {})",
                f.m,
                f.n,
                f.facets,
                f.mismatch.path,
                f.mismatch.degree,
                f.mismatch.j.map_or("-".to_string(), |j| j.label())
            ),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_failure_class() {
        assert_eq!(Failure::from(Error::Input("x".into())).code, 2);
        assert_eq!(Failure::from(Error::BoundarySquareNonzero { degree: 1 }).code, 1);
        assert_eq!(Failure::from(Error::RewriteLimit(10)).code, 1);
        assert_eq!(Failure::from(Error::NotMinimal(2)).code, 3);
    }
}
