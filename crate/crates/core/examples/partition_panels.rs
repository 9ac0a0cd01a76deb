//! Coarsened panels from a vertex partition of the 4-cycle.

use facelab::complexes::SimplicialComplex;
use facelab::constructions::{panelize_partition, partition_vertices};
use facelab::homology::{homology, ChainComplex, Coefficients};
use facelab::spheres::SpherePairSpec;
use facelab::subset::Mask;
use facelab::verify::verify_panels;

fn main() -> facelab::Result<()> {
    let k = SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]])?;
    let blocks = vec![vec![0, 2], vec![1, 3]];
    let p = panelize_partition(&k, &blocks)?;
    for l in Mask::all(2) {
        let panel = ChainComplex::of_subcomplex(p.y(), &p.union(l), false)?;
        let masks: Vec<Mask> = blocks.iter().map(|b| Mask::from_indices(b.iter().map(|&v| v as usize))).collect();
        let vertices: Vec<u32> = partition_vertices(&masks, l).iter().map(|v| v as u32).collect();
        let full = k.full_subcomplex(&vertices);
        println!(
            "L = {:<6} H(P_L) = {:<12} H(K_J) = {}",
            l.label(),
            homology(&panel, Coefficients::Integers)?.to_string(),
            homology(&ChainComplex::absolute(&full), Coefficients::Integers)?
        );
    }
    let r = verify_panels(&p, &SpherePairSpec::uniform(2, 1), Coefficients::Integers)?;
    println!("n = 1: formula {} / oracle match = {}", r.formula.total, r.passed());
    Ok(())
}
