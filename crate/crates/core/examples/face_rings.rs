//! Stanley–Reisner rings, poset face rings and topological face rings.

use facelab::complexes::SimplicialComplex;
use facelab::constructions::{panelize_poset, panelize_simplicial};
use facelab::facering::{iso_check, stanley_reisner, topological_face_ring, FaceRing, PosetFaceRing};
use facelab::homology::Coefficients;
use facelab::io::Input;

fn main() -> facelab::Result<()> {
    let square = SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]])?;
    let path = SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3]])?;
    let sr = stanley_reisner(&square, 2)?;
    println!("Z[4-cycle] even degrees: {:?}", sr.hilbert_series(8).ranks_every(2));

    let top = topological_face_ring(&panelize_simplicial(&square)?, 2, Coefficients::Integers)?;
    let v = iso_check(FaceRing::Block(&top), FaceRing::Block(&sr), 10)?;
    println!("Z(Y^K,P) vs Z[K]: match = {}", v.matches());
    let v = iso_check(FaceRing::Block(&sr), FaceRing::Block(&stanley_reisner(&path, 2)?), 10)?;
    println!("Z[4-cycle] vs Z[path]: {:?}", v.mismatch);

    let Input::Poset(edges) = Input::from_json(include_str!("../data/two_edges.json"))? else {
        unreachable!()
    };
    let zs = PosetFaceRing::new(edges.clone(), 2);
    let prod = zs.multiply(&zs.generator(1), &zs.generator(2))?;
    println!("two edges: v1 * v2 = {}", zs.format_element(&prod));

    let Input::Poset(tri) = Input::from_json(include_str!("../data/two_triangles.json"))? else {
        unreachable!()
    };
    let zs = PosetFaceRing::new(tri.clone(), 2);
    let top = topological_face_ring(&panelize_poset(&tri)?, 2, Coefficients::Integers)?;
    let v = iso_check(FaceRing::Poset(&zs), FaceRing::Block(&top), 10)?;
    println!("Z[S] vs Z(Y^S,P) for two triangles: match = {}, series {:?}", v.matches(), v.left.ranks());
    Ok(())
}
