//! Hochster tables, including torsion carried by the projective plane.

use facelab::complexes::SimplicialComplex;
use facelab::decomp::{hochster_table, hochster_table_poset};
use facelab::homology::Coefficients;
use facelab::io::Input;
use facelab::spheres::SpherePairSpec;
use facelab::subset::Mask;

fn main() -> facelab::Result<()> {
    let Input::Complex(rp2) = Input::from_json(include_str!("../data/rp2.json"))? else {
        unreachable!()
    };
    let t = hochster_table(&rp2, &SpherePairSpec::uniform(6, 1), Coefficients::Integers, false)?;
    println!("RP2, n = 1: total {}", t.total);
    println!("  J = [6] summand: {}", t.summand(Mask::full(6)).expect("present").group);
    println!("  skipped simplices: {}", t.summands.iter().filter(|s| s.skipped).count());

    let square = SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]])?;
    let t = hochster_table(&square, &SpherePairSpec::uniform(4, 0), Coefficients::Integers, false)?;
    println!("4-cycle, n = 0: {}", t.total);

    let Input::Poset(s) = Input::from_json(include_str!("../data/two_triangles.json"))? else {
        unreachable!()
    };
    let t = hochster_table_poset(&s, &SpherePairSpec::uniform(3, 1), Coefficients::Integers)?;
    println!("two triangles, n = 1: {}", t.total);
    Ok(())
}
