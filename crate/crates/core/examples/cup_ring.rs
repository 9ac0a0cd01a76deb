//! Cohomology rings from relative cup products.

use facelab::complexes::SimplicialComplex;
use facelab::constructions::panelize_simplicial;
use facelab::cupring::ds_ring;
use facelab::homology::Coefficients;
use facelab::spheres::SpherePairSpec;

fn main() -> facelab::Result<()> {
    let k = SimplicialComplex::from_maximal(4, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]])?;
    let p = panelize_simplicial(&k)?;
    for spec in ["0,0,0,0", "1,1,1,1", "1,0,2,0"] {
        let spec: SpherePairSpec = spec.parse()?;
        let r = ds_ring(&p, &spec, Coefficients::Integers)?;
        println!("spec {spec}: {}", r.graded_group());
        for prod in r.products() {
            let (a, b) = (&r.basis[prod.left], &r.basis[prod.right]);
            if a.degree == 0 || b.degree == 0 {
                continue;
            }
            let terms: Vec<String> = prod
                .terms
                .iter()
                .map(|t| format!("{}*{}", t.coefficient, r.basis[t.index].label))
                .collect();
            println!("  {} * {} = {}", a.label, b.label, terms.join(" + "));
        }
        println!(
            "  commutative: {}, associative: {}",
            r.graded_commutativity_violation().is_none(),
            r.associativity_violation().is_none()
        );
    }
    Ok(())
}
