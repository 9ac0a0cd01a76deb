use super::simplicial::SimplicialComplex;
use crate::subset::Mask;

/// Every simplicial complex on the vertex set `0..m` in which each vertex is
/// a simplex, in a fixed order (by included faces, smallest first).
pub fn all_complexes(m: usize) -> Vec<SimplicialComplex> {
    let mut candidates: Vec<Mask> = Mask::all(m).filter(|s| s.len() >= 2).collect();
    candidates.sort_by_key(|s| (s.len(), s.0));
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend(m, &candidates, 0, &mut chosen, &mut out);
    out
}

fn extend(m: usize, candidates: &[Mask], at: usize, chosen: &mut Vec<Mask>, out: &mut Vec<SimplicialComplex>) {
    if at == candidates.len() {
        let mut faces: Vec<Vec<u32>> = (0..m as u32).map(|v| vec![v]).collect();
        faces.extend(chosen.iter().map(|s| s.iter().map(|v| v as u32).collect()));
        out.push(SimplicialComplex::from_maximal(m, &faces).expect("faces are in range"));
        return;
    }
    extend(m, candidates, at + 1, chosen, out);
    let s = candidates[at];
    let closed = s
        .iter()
        .map(|v| s.difference(Mask::singleton(v)))
        .all(|f| f.len() < 2 || chosen.contains(&f));
    if closed {
        chosen.push(s);
        extend(m, candidates, at + 1, chosen, out);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=4).map(|m| all_complexes(m).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 9, 114]);
        assert!(all_complexes(4).iter().all(SimplicialComplex::is_minimal));
    }
}
