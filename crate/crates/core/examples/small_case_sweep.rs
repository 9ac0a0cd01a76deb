//! Every complex on at most four vertices, formula against both oracles.

use std::time::Instant;

use facelab::homology::Coefficients;
use facelab::verify::sweep;

fn main() -> facelab::Result<()> {
    let start = Instant::now();
    let report = sweep(4, &[0, 1], Coefficients::Integers)?;
    println!(
        "{} cases, {} failures, {:.2?}",
        report.cases,
        report.failures.len(),
        start.elapsed()
    );
    for f in &report.failures {
        println!("  {:?} n={} -> {:?}", f.facets, f.n, f.mismatch);
    }
    Ok(())
}
