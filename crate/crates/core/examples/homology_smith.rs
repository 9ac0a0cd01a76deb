//! Integral homology of the six-vertex projective plane and a Smith form.

use facelab::complexes::SimplicialComplex;
use facelab::homology::{cohomology, homology, smith_normal_form, verify_smith, ChainComplex, Coefficients, IntMatrix};

fn main() -> facelab::Result<()> {
    let triangles = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
        [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
    ];
    let facets: Vec<Vec<u32>> = triangles.iter().map(|t| t.iter().map(|v| v - 1).collect()).collect();
    let rp2 = SimplicialComplex::from_maximal(6, &facets)?;
    let c = ChainComplex::absolute(&rp2);
    println!("f-vector     {:?}", rp2.f_vector());
    println!("H_*(RP2; Z)  {}", homology(&c, Coefficients::Integers)?);
    println!("H^*(RP2; Z)  {}", cohomology(&c, Coefficients::Integers)?);
    println!("H_*(RP2; Z/2) {}", homology(&c, Coefficients::Mod(2))?);

    let a = IntMatrix::from_triplets(
        3,
        3,
        [(0, 0, 2), (0, 1, 4), (1, 1, 6), (1, 2, -3), (2, 0, 8), (2, 2, 9)]
            .into_iter()
            .map(|(r, c, v)| (r, c, v.into())),
    );
    let s = smith_normal_form(&a);
    assert!(verify_smith(&a, &s), "U A V = D");
    println!("Smith diagonal of A: {:?}", s.diagonal());
    Ok(())
}
