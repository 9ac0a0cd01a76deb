use super::simplicial::{SimplicialComplex, Subcomplex};

/// Nerve of a family of subcomplexes of a common complex: `{i_1..i_k}` is a
/// simplex iff the corresponding members have a common cell.
pub fn nerve(family: &[Subcomplex]) -> SimplicialComplex {
    let mut simplices = Vec::new();
    let mut stack: Vec<(Vec<u32>, Subcomplex)> = family
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.is_empty())
        .map(|(i, s)| (vec![i as u32], s.clone()))
        .collect();
    while let Some((idx, common)) = stack.pop() {
        let last = *idx.last().expect("nonempty index set") as usize;
        for (j, member) in family.iter().enumerate().skip(last + 1) {
            let meet = common.intersection(member);
            if !meet.is_empty() {
                let mut next = idx.clone();
                next.push(j as u32);
                stack.push((next, meet));
            }
        }
        simplices.push(idx);
    }
    SimplicialComplex::from_maximal(family.len(), &simplices).expect("indices are in range")
}
