//! Summand formula against brute-force cellular models for the 4-cycle.

use facelab::complexes::SimplicialComplex;
use facelab::constructions::panelize_simplicial;
use facelab::decomp::summands_x_contractible;
use facelab::homology::{cohomology, Coefficients};
use facelab::oracle::{mac_chain_complex_classical, mac_chain_complex_panel};
use facelab::spheres::SpherePairSpec;

fn main() -> facelab::Result<()> {
    let k = SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]])?;
    let p = panelize_simplicial(&k)?;
    for n in [0, 1, 2] {
        let spec = SpherePairSpec::uniform(4, n);
        let formula = summands_x_contractible(&p, &spec, Coefficients::Integers)?;
        let classical = mac_chain_complex_classical(&k, &spec)?;
        let panel = mac_chain_complex_panel(&p, &spec)?;
        println!("n = {n}");
        println!("  formula          {:?}", formula.total.betti());
        println!(
            "  classical oracle {:?} ({} cells)",
            cohomology(&classical, Coefficients::Integers)?.betti(),
            classical.total_cells()
        );
        println!(
            "  panel oracle     {:?} ({} cells)",
            cohomology(&panel, Coefficients::Integers)?.betti(),
            panel.total_cells()
        );
        for s in formula.nonzero() {
            println!("    J = {:<10} shift {:>2}  {}", s.j.label(), s.shift, s.group);
        }
    }
    Ok(())
}
