use super::*;
use crate::complexes::poset::tests::{two_edges, two_triangles};
use crate::complexes::{nerve, SimplicialComplex, SimplicialPoset};
use crate::error::Error;
use crate::subset::Mask;

fn four_cycle() -> SimplicialComplex {
    SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).unwrap()
}

#[test]
fn panels_equal_to_y() {
    let y = SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2]]).unwrap();
    let p = panelize_generic(y.clone(), vec![y.whole(), y.whole()]).unwrap();
    assert_eq!(p.faces().len(), 1);
    assert_eq!(p.faces()[0].panel_index, Mask::full(2));
}

#[test]
fn empty_panels_leave_one_face() {
    let y = SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2]]).unwrap();
    let empty = crate::complexes::Subcomplex::empty(y.num_cells());
    let p = panelize_generic(y, vec![empty.clone(), empty]).unwrap();
    assert_eq!(p.faces().len(), 1);
    assert_eq!(p.faces()[0].panel_index, Mask::EMPTY);
    assert_eq!(p.core().len(), p.y().num_cells());
}

#[test]
fn segment_with_two_endpoint_panels() {
    let y = SimplicialComplex::from_maximal(3, &[vec![0, 1], vec![1, 2]]).unwrap();
    let p = panelize_from_simplices(y, &[vec![vec![0]], vec![vec![2]]]).unwrap();
    let indices: Vec<Mask> = p.faces().iter().map(|f| f.panel_index).collect();
    assert_eq!(indices, vec![Mask::EMPTY, Mask::singleton(0), Mask::singleton(1)]);
    assert!(p.intersection(Mask::full(2)).is_empty());
}

#[test]
fn non_subcomplex_panel_is_rejected() {
    let y = SimplicialComplex::from_maximal(2, &[vec![0, 1]]).unwrap();
    let mut s = crate::complexes::Subcomplex::empty(y.num_cells());
    s.insert(y.id_of(&[0, 1]).unwrap());
    assert!(matches!(
        panelize_generic(y, vec![s]),
        Err(Error::NotASubcomplex { index: 1, .. })
    ));
}

#[test]
fn simplicial_faces_match_simplices() {
    let k = four_cycle();
    let p = panelize_simplicial(&k).unwrap();
    assert_eq!(p.faces().len(), 9);
    for j in Mask::all(4) {
        let simplex: Vec<u32> = j.iter().map(|v| v as u32).collect();
        let expected = usize::from(k.contains(&simplex));
        assert_eq!(p.faces_with_index(j).count(), expected, "J = {j}");
        assert_eq!(p.component_count(j), expected);
    }
    for e in 0..p.element_count() {
        assert_eq!(p.faces()[p.face_of_element(e)].panel_index, p.element_vertex_set(e));
    }
}

#[test]
fn point_gives_an_edge() {
    let k = SimplicialComplex::simplex(1);
    let p = panelize_simplicial(&k).unwrap();
    assert_eq!(p.y().f_vector(), vec![2, 1]);
    assert_eq!(p.panels()[0].len(), 1);
}

#[test]
fn full_triangle_has_eight_faces() {
    let p = panelize_simplicial(&SimplicialComplex::simplex(3)).unwrap();
    assert_eq!(p.faces().len(), 8);
}

#[test]
fn non_minimal_complex_is_rejected() {
    let k = SimplicialComplex::from_maximal(3, &[vec![0, 1]]).unwrap();
    assert_eq!(panelize_simplicial(&k).unwrap_err(), Error::NotMinimal(3));
}

#[test]
fn poset_component_counts() {
    let p = panelize_poset(&two_triangles()).unwrap();
    assert_eq!(p.component_count(Mask::full(3)), 2);
    assert_eq!(p.faces_with_index(Mask::full(3)).count(), 2);
    let q = panelize_poset(&two_edges()).unwrap();
    assert_eq!(q.component_count(Mask::full(2)), 2);
    let a = q.face_of_element(3);
    let b = q.face_of_element(4);
    assert_ne!(a, b);
}

#[test]
fn face_poset_matches_simplicial() {
    let k = four_cycle();
    let a = panelize_simplicial(&k).unwrap();
    let b = panelize_poset(&SimplicialPoset::face_poset(&k)).unwrap();
    assert_eq!(a.y(), b.y());
    for c in 0..a.y().num_cells() {
        assert_eq!(a.cell_index(c), b.cell_index(c));
    }
    assert_eq!(a.faces(), b.faces());
}

#[test]
fn singleton_partition_is_the_fine_structure() {
    let k = four_cycle();
    let fine = panelize_simplicial(&k).unwrap();
    let coarse = panelize_partition(&k, &[vec![0], vec![1], vec![2], vec![3]]).unwrap();
    for c in 0..fine.y().num_cells() {
        assert_eq!(fine.cell_index(c), coarse.cell_index(c));
    }
}

#[test]
fn partition_validation() {
    let k = four_cycle();
    assert!(matches!(
        panelize_partition(&k, &[vec![0, 1], vec![1, 2, 3]]),
        Err(Error::InvalidPartition(_))
    ));
    assert!(matches!(
        panelize_partition(&k, &[vec![0, 1], vec![2]]),
        Err(Error::InvalidPartition(_))
    ));
    let p = panelize_partition(&k, &[vec![0, 2], vec![1, 3]]).unwrap();
    assert_eq!(p.m(), 2);
}

#[test]
fn nerve_of_cone_panels_recovers_k() {
    let k = four_cycle();
    let p = panelize_simplicial(&k).unwrap();
    assert_eq!(nerve(p.panels()), k);
}

#[test]
fn monotone_unions_and_intersections() {
    let p = panelize_simplicial(&four_cycle()).unwrap();
    for j in Mask::all(4) {
        for jj in Mask::all(4) {
            if j.is_subset(jj) {
                assert!(p.union(j).is_subset(&p.union(jj)));
                assert!(p.intersection(jj).is_subset(&p.intersection(j)));
            }
        }
        for c in p.components(j) {
            let index = c.iter().fold(Mask::full(4), |acc, id| acc.intersection(p.cell_index(id)));
            assert!(j.is_subset(index));
        }
    }
}
