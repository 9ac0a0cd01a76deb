mod common;

use std::time::{Duration, Instant};

use common::*;
use facelab::complexes::all_complexes;
use facelab::constructions::{panelize_partition, panelize_poset, panelize_simplicial, partition_vertices, PanelComplex};
use facelab::cupring::ds_ring;
use facelab::decomp::{hochster_table, summands_a_contractible, summands_x_contractible};
use facelab::facering::{iso_check, stanley_reisner, topological_face_ring, FaceRing, PosetFaceRing};
use facelab::homology::{cohomology, homology, smith_normal_form, ChainComplex, Coefficients, GradedGroup, IntMatrix};
use facelab::oracle::{mac_chain_complex_classical, mac_chain_complex_panel};
use facelab::spheres::SpherePairSpec;
use facelab::subset::Mask;
use facelab::verify::sweep;
use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const Z: Coefficients = Coefficients::Integers;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn square_zero(c: &ChainComplex, what: &str) -> Result<(), String> {
    c.check_boundary_square().map_err(|e| format!("{what}: {e}"))
}

fn panel_complexes_square_zero(p: &PanelComplex, what: &str) -> Result<(), String> {
    for j in Mask::all(p.m()) {
        square_zero(&ChainComplex::relative(p.y(), &p.union(j)).map_err(fail)?, what)?;
    }
    Ok(())
}

fn sweep_all_small() -> Check {
    let r = sweep(4, &[0, 1], Z).map_err(fail)?;
    match r.failures.first() {
        None => Ok(format!("{} cases", r.cases)),
        Some(f) => Err(format!(
            "m={} n={} facets={:?}: {} differs in degree {}",
            f.m, f.n, f.facets, f.mismatch.path, f.mismatch.degree
        )),
    }
}

fn four_cycle_targets() -> Check {
    let k = four_cycle();
    let p = panelize_simplicial(&k).map_err(fail)?;
    for (n, betti) in [(1, vec![1, 0, 0, 2, 0, 0, 1]), (0, vec![1, 2, 1])] {
        let spec = SpherePairSpec::uniform(4, n);
        let formula = summands_x_contractible(&p, &spec, Z).map_err(fail)?.total;
        let oracle = cohomology(&mac_chain_complex_classical(&k, &spec).map_err(fail)?, Z).map_err(fail)?;
        ensure(formula.betti() == betti, format!("n={n}: formula {formula}"))?;
        ensure(oracle == formula, format!("n={n}: oracle {oracle}"))?;
        ensure(formula.iter().all(|(_, g)| g.torsion.is_empty()), format!("n={n}: torsion"))?;
    }
    Ok("n=1 (1,0,0,2,0,0,1), n=0 (1,2,1)".into())
}

fn projective_plane_torsion() -> Check {
    let k = rp2();
    let spec = SpherePairSpec::uniform(6, 1);
    let table = hochster_table(&k, &spec, Z, false).map_err(fail)?;
    let full = table.summand(Mask::full(6)).ok_or("no J=[6] summand")?;
    let summand = full.group.get(9);
    ensure(summand.rank == 0 && summand.torsion == [BigInt::from(2)], format!("J=[6]: {}", full.group))?;
    let oracle_complex = mac_chain_complex_classical(&k, &spec).map_err(fail)?;
    square_zero(&oracle_complex, "RP2 oracle")?;
    let oracle = cohomology(&oracle_complex, Z).map_err(fail)?;
    ensure(oracle.get(9).torsion.contains(&BigInt::from(2)), format!("oracle H9 = {}", oracle.get(9)))?;
    ensure(oracle == table.total, format!("oracle {oracle} vs table {}", table.total))?;
    Ok(format!("H9 = {}, {} oracle cells", oracle.get(9), oracle_complex.total_cells()))
}

fn two_triangle_poset() -> Check {
    let s = two_triangles();
    let p = panelize_poset(&s).map_err(fail)?;
    panel_complexes_square_zero(&p, "two-triangle panels")?;
    let spec = SpherePairSpec::uniform(3, 1);
    let formula = summands_x_contractible(&p, &spec, Z).map_err(fail)?;
    let oracle_complex = mac_chain_complex_panel(&p, &spec).map_err(fail)?;
    square_zero(&oracle_complex, "two-triangle oracle")?;
    let oracle = cohomology(&oracle_complex, Z).map_err(fail)?;
    ensure(formula.total == oracle, format!("formula {} vs oracle {oracle}", formula.total))?;
    let all = Mask::full(3);
    let c = p.component_count(all);
    ensure(c == 2, format!("c_[3] = {c}"))?;
    let x = formula.summand(all).ok_or("no J=[3] summand")?;
    ensure(x.group.betti().iter().sum::<usize>() == c - 1, format!("X summand {} vs c = {c}", x.group))?;
    let a = summands_a_contractible(&p, &spec, Z).map_err(fail)?;
    let a3 = a.summand(all).ok_or("no J=[3] A summand")?;
    ensure(a3.group.rank(6) == c, format!("A summand {} vs c = {c}", a3.group))?;
    Ok(format!("total {oracle}, c_[3] = {c}"))
}

fn ring_checks() -> Check {
    let p = panelize_simplicial(&four_cycle()).map_err(fail)?;
    let torus = ds_ring(&p, &SpherePairSpec::uniform(4, 0), Z).map_err(fail)?;
    ensure(torus.graded_group().betti() == [1, 2, 1], "torus ranks")?;
    let ones: Vec<usize> = (0..torus.len()).filter(|&i| torus.basis[i].degree == 1).collect();
    let top = (0..torus.len()).find(|&i| torus.basis[i].degree == 2).ok_or("no degree 2")?;
    let prod = torus.product(ones[0], ones[1]);
    ensure(
        prod.len() == 1 && prod[0].0 == top && (prod[0].1.is_one() || (-&prod[0].1).is_one()),
        format!("x*y = {prod:?}"),
    )?;
    ensure(ones.iter().all(|&a| torus.product(a, a).is_empty()), "nonzero square")?;
    let moment = ds_ring(&p, &SpherePairSpec::uniform(4, 1), Z).map_err(fail)?;
    ensure(moment.annihilation_violation().is_none(), "annihilation rule")?;

    let mut cases = Vec::new();
    for m in 1..=4 {
        for k in all_complexes(m) {
            for spec in [
                SpherePairSpec::uniform(m, 0),
                SpherePairSpec::uniform(m, 1),
                SpherePairSpec::uniform(m, 2),
                SpherePairSpec::new((0..m as u32).map(|i| i % 3).collect()),
                SpherePairSpec::new((0..m as u32).map(|i| (i + 1) % 2).collect()),
            ] {
                cases.push((k.clone(), spec));
            }
        }
    }
    let checked: Vec<bool> = cases
        .par_iter()
        .map(|(k, spec)| -> Result<bool, String> {
            let p = panelize_simplicial(k).map_err(fail)?;
            let r = ds_ring(&p, spec, Z).map_err(fail)?;
            if r.len() > 40 {
                return Ok(false);
            }
            let what = format!("{:?} spec {spec}", k.facets());
            ensure(r.graded_commutativity_violation().is_none(), format!("commutativity: {what}"))?;
            ensure(r.associativity_violation().is_none(), format!("associativity: {what}"))?;
            ensure(r.annihilation_violation().is_none(), format!("annihilation: {what}"))?;
            let additive = summands_x_contractible(&p, spec, Z).map_err(fail)?.total;
            ensure(r.graded_group() == additive, format!("additive structure: {what}"))?;
            Ok(true)
        })
        .collect::<Result<_, _>>()?;
    Ok(format!("{} rings checked exhaustively", checked.iter().filter(|&&b| b).count()))
}

fn face_ring_isomorphisms() -> Check {
    let complexes: Vec<_> = (1..=4).flat_map(all_complexes).collect();
    complexes
        .par_iter()
        .map(|k| -> Result<(), String> {
            let top = topological_face_ring(&panelize_simplicial(k).map_err(fail)?, 2, Z).map_err(fail)?;
            let sr = stanley_reisner(k, 2).map_err(fail)?;
            let v = iso_check(FaceRing::Block(&top), FaceRing::Block(&sr), 10).map_err(fail)?;
            ensure(v.matches() && v.structure_checked, format!("{:?}: {:?}", k.facets(), v.mismatch))
        })
        .collect::<Result<(), _>>()?;
    for (name, s) in [("two triangles", two_triangles()), ("two edges", two_edges())] {
        let top = topological_face_ring(&panelize_poset(&s).map_err(fail)?, 2, Z).map_err(fail)?;
        let zs = PosetFaceRing::new(s, 2);
        let v = iso_check(FaceRing::Block(&top), FaceRing::Poset(&zs), 10).map_err(fail)?;
        ensure(v.matches() && v.structure_checked, format!("{name}: {:?}", v.mismatch))?;
    }
    Ok(format!("{} complexes and 2 posets to degree 10", complexes.len()))
}

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let rows = rng.gen_range(1..=30);
    let cols = rng.gen_range(1..=30);
    let density = rng.gen_range(0.05..0.5);
    let mut entries = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if rng.gen_bool(density) {
                let v = rng.gen_range(-9i64..=9);
                if v != 0 {
                    entries.push((r, c, BigInt::from(v)));
                }
            }
        }
    }
    IntMatrix::from_triplets(rows, cols, entries)
}

fn linear_algebra_kernel() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let matrices: Vec<IntMatrix> = (0..10_000).map(|_| random_matrix(&mut rng)).collect();
    matrices
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            let s = smith_normal_form(a);
            check_smith(a, &s.u, &s.d, &s.v).map_err(|e| format!("matrix {i}: {e}"))?;
            ensure(s.rank() == bareiss(&dense(a)).0, format!("matrix {i}: rank"))
        })
        .collect::<Result<(), _>>()?;

    let mut complexes = 0usize;
    let mut every = |c: &ChainComplex, what: &str| -> Result<(), String> {
        complexes += 1;
        square_zero(c, what)
    };
    for m in 1..=4 {
        for k in all_complexes(m) {
            every(&ChainComplex::absolute(&k), "absolute")?;
            every(&ChainComplex::reduced(&k), "reduced")?;
            let p = panelize_simplicial(&k).map_err(fail)?;
            for j in Mask::all(m) {
                every(&ChainComplex::relative(p.y(), &p.union(j)).map_err(fail)?, "relative")?;
            }
            for n in [0, 1] {
                let spec = SpherePairSpec::uniform(m, n);
                every(&mac_chain_complex_classical(&k, &spec).map_err(fail)?, "classical oracle")?;
                every(&mac_chain_complex_panel(&p, &spec).map_err(fail)?, "panel oracle")?;
            }
        }
    }
    for s in [two_triangles(), two_edges()] {
        let p = panelize_poset(&s).map_err(fail)?;
        every(&ChainComplex::absolute(&s.order_complex()), "order complex")?;
        every(&mac_chain_complex_panel(&p, &SpherePairSpec::uniform(s.vertex_count(), 1)).map_err(fail)?, "poset oracle")?;
    }
    Ok(format!("10000 matrices, {complexes} chain complexes"))
}

fn partition_coarsening() -> Check {
    let k = four_cycle();
    let blocks = vec![vec![0, 2], vec![1, 3]];
    let p = panelize_partition(&k, &blocks).map_err(fail)?;
    panel_complexes_square_zero(&p, "partition panels")?;
    let masks: Vec<Mask> = blocks.iter().map(|b| Mask::from_indices(b.iter().map(|&v| v as usize))).collect();
    for l in Mask::all(2) {
        let panel = homology(&ChainComplex::of_subcomplex(p.y(), &p.union(l), false).map_err(fail)?, Z).map_err(fail)?;
        let vertices: Vec<u32> = partition_vertices(&masks, l).iter().map(|v| v as u32).collect();
        let full: GradedGroup = homology(&ChainComplex::absolute(&k.full_subcomplex(&vertices)), Z).map_err(fail)?;
        ensure(panel == full, format!("L = {}: {panel} vs {full}", l.label()))?;
    }
    let spec = SpherePairSpec::uniform(2, 1);
    let formula = summands_x_contractible(&p, &spec, Z).map_err(fail)?.total;
    let oracle_complex = mac_chain_complex_panel(&p, &spec).map_err(fail)?;
    square_zero(&oracle_complex, "partition oracle")?;
    let oracle = cohomology(&oracle_complex, Z).map_err(fail)?;
    ensure(formula == oracle, format!("formula {formula} vs oracle {oracle}"))?;
    Ok(format!("total {formula}"))
}

fn main() {
    type Criterion = (&'static str, u64, fn() -> Check);
    let criteria: [Criterion; 8] = [
        ("small-case sweep", 300, sweep_all_small),
        ("4-cycle targets", 1, four_cycle_targets),
        ("RP2 torsion", 30, projective_plane_torsion),
        ("two-triangle poset", 60, two_triangle_poset),
        ("ring checks", 120, ring_checks),
        ("face-ring isomorphisms", 120, face_ring_isomorphisms),
        ("linear algebra kernel", 600, linear_algebra_kernel),
        ("partition coarsening", 60, partition_coarsening),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(*limit);
        let (status, detail) = match (&result, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("{d}; over time limit")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {}: {status} {name} [{:.2}s / {limit}s] {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!("acceptance: {} of {} passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
