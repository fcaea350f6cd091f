//! Acceptance criteria 1-13. Runs without the libtest harness so that every
//! criterion prints one PASS/FAIL line; exits nonzero if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use char2lie::algebra::{build_quotient, build_sl6, LieAlgebra};
use char2lie::cli::run_command;
use char2lie::cochain::{act, cbracket, cup, differential, set_count, Cochain};
use char2lie::cohomology::{basis_cocycle, Complex};
use char2lie::deform::{
    build_type_ii, build_type_iii, phi_cochain, phi_forensics, psi_1, psi_2, specialize,
};
use char2lie::field::{Field, Gf2, Gf4};
use char2lie::linalg::Matrix;
use char2lie::rootsys::{decompositions, h2_weights, weyl_orbit, Weight};
use char2lie::simplicity::{
    check_certificate, is_proper_ideal, is_simple, Verdict, DEFAULT_TRIALS,
};
use char2lie::trivector::{Classification, OrbitTag, Trivector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn l2() -> LieAlgebra<Gf2> {
    build_quotient()
}

fn c1_algebra_info() -> Check {
    let (code, out) = run_command(["algebra", "info"]);
    ensure!(code == 0, "exit {code}");
    for needle in [
        "dim A = 35",
        "center = span{H1+H3+H5} (dim 1)",
        "dim L = 34",
    ] {
        ensure!(out.contains(needle), "missing {needle:?} in {out:?}");
    }
    let a = build_sl6::<Gf2>();
    let z = a
        .element_from_labels(&[("H1", Gf2::ONE), ("H3", Gf2::ONE), ("H5", Gf2::ONE)])
        .unwrap();
    ensure!(a.center() == vec![z], "center of A is not span{{H1+H3+H5}}");
    Ok("dim A 35, center 1, dim L 34".into())
}

fn c2_h2() -> Check {
    let l = l2();
    let cx = Complex::new(&l).map_err(|e| e.to_string())?;
    let s = cx.h2_summary().map_err(|e| e.to_string())?;
    ensure!(s.total == 20, "dim H² = {}", s.total);
    ensure!(s.nonzero.len() == 20, "{} weights", s.nonzero.len());
    for d in &s.nonzero {
        ensure!(
            d.h2 == 1 && d.b2 == 0,
            "weight {}: h2 {} b2 {}",
            d.weight,
            d.h2,
            d.b2
        );
    }
    let mu = Weight::simple_root(1) + Weight::simple_root(3) + Weight::simple_root(5);
    let found: BTreeSet<Weight> = s.nonzero.iter().map(|d| d.weight).collect();
    ensure!(
        found == weyl_orbit(mu),
        "weights are not the Weyl orbit of α1+α3+α5"
    );
    Ok(format!("dim H² 20 over {} blocks", s.blocks_examined))
}

fn c3_decompositions() -> Check {
    let mu = Weight::simple_root(1) + Weight::simple_root(3) + Weight::simple_root(5);
    let r = |i: usize, j: usize| Weight::root(i - 1, j - 1);
    let mut expected = BTreeSet::new();
    for [a, b, c] in [
        [2, 4, 6],
        [2, 6, 4],
        [4, 2, 6],
        [4, 6, 2],
        [6, 2, 4],
        [6, 4, 2],
    ] {
        let mut d = vec![r(1, a), r(3, b), r(5, c)];
        d.sort();
        expected.insert(d);
    }
    let got: BTreeSet<Vec<Weight>> = decompositions(mu, 3, 0)
        .into_iter()
        .map(|mut d| {
            d.sort();
            d
        })
        .collect();
    ensure!(got == expected, "got {got:?}");
    ensure!(
        decompositions(mu, 2, 0).is_empty(),
        "μ* is a sum of two roots"
    );
    Ok("6 three-root decompositions, none with two".into())
}

fn c4_squares() -> Check {
    let l = l2();
    for mu in h2_weights() {
        let psi = basis_cocycle(&l, mu).unwrap();
        ensure!(
            cup(&l, &psi, &psi).unwrap().is_zero(),
            "ψ_{mu} ∪ ψ_{mu} ≠ 0"
        );
    }
    Ok("20 of 20 vanish".into())
}

fn c5_set_counts() -> Check {
    let l = l2();
    let (p1, p2) = (psi_1(&l).unwrap(), psi_2(&l).unwrap());
    let counts = [
        set_count(&l, &cup(&l, &p1, &p2).unwrap()),
        set_count(&l, &cup(&l, &p2, &p1).unwrap()),
        set_count(&l, &cbracket(&l, &p1, &p2).unwrap()),
    ];
    ensure!(counts == [28, 28, 48], "counts {counts:?}");
    Ok("28 / 28 / 48".into())
}

fn c6_d_phi() -> Check {
    let l = l2();
    let dphi = differential(&l, &phi_cochain(&l).unwrap()).unwrap();
    let b = cbracket(&l, &psi_1(&l).unwrap(), &psi_2(&l).unwrap()).unwrap();
    ensure!(dphi == b, "dφ ≠ [ψ1, ψ2]");
    ensure!(
        set_count(&l, &dphi) == 48,
        "dφ has {} sets",
        set_count(&l, &dphi)
    );
    let f = phi_forensics(&l).unwrap();
    ensure!(
        f.part_counts[0] == 14,
        "first part: {} sets",
        f.part_counts[0]
    );
    ensure!(
        f.cartan_valued[0] == 1,
        "first part has {} Cartan-valued entries",
        f.cartan_valued[0]
    );
    Ok(format!(
        "dφ = [ψ1,ψ2], 48 sets, first part 14 (parts {:?})",
        f.part_counts
    ))
}

fn c7_type_ii() -> Check {
    let l = l2();
    let f = build_type_ii(&l).map_err(|e| e.to_string())?;
    let j = f.jacobi_coefficients(&l).unwrap();
    ensure!(
        j.values().all(Cochain::is_zero),
        "nonzero Jacobi coefficient"
    );
    Ok(format!("t^0..t^{} vanish", j.len() - 1))
}

fn c8_type_iii() -> Check {
    let l = l2();
    let f = build_type_iii(&l).map_err(|e| e.to_string())?;
    let j = f.jacobi_coefficients(&l).unwrap();
    for d in 1..=4 {
        ensure!(
            j.get(&d).is_some_and(Cochain::is_zero),
            "t^{d} coefficient nonzero"
        );
    }
    Ok("t^1..t^4 vanish".into())
}

fn c9_ranks() -> Check {
    use Classification::*;
    let ranks: Vec<usize> = OrbitTag::ALL
        .iter()
        .map(|&t| Trivector::<Gf2>::canonical(t).rank())
        .collect();
    ensure!(ranks == [0, 3, 5, 6, 6], "ranks {ranks:?}");
    let classes: Vec<Classification> = OrbitTag::ALL
        .iter()
        .map(|&t| Trivector::<Gf2>::canonical(t).classify().unwrap())
        .collect();
    ensure!(classes == [I, II, III, Rank6, Rank6], "classes {classes:?}");
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let g = Matrix::<Gf2>::random_invertible(&mut rng, 6);
        for t in OrbitTag::ALL {
            let w = Trivector::<Gf2>::canonical(t);
            ensure!(
                w.act(&g).unwrap().rank() == w.rank(),
                "rank of ({t:?}) changed"
            );
        }
    }
    Ok("ranks 0 3 5 6 6, invariant under 100 changes of basis".into())
}

fn c10_correspondence() -> Check {
    let l = l2();
    let cx = Complex::new(&l).unwrap();
    let (p1, p2) = (psi_1(&l).unwrap(), psi_2(&l).unwrap());
    ensure!(
        Trivector::canonical(OrbitTag::II).to_cocycle(&l).unwrap() == p1,
        "to_cocycle(II) ≠ ψ1"
    );
    ensure!(
        Trivector::canonical(OrbitTag::III).to_cocycle(&l).unwrap() == p1.add(&p2).unwrap(),
        "to_cocycle(III) ≠ ψ1 + ψ2"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let w = Trivector::<Gf2>::random(&mut rng);
        let back = Trivector::from_class(&cx, &w.to_cocycle(&l).unwrap()).unwrap();
        ensure!(back == w, "round trip failed for {w:?}");
    }
    Ok("II ↦ ψ1, III ↦ ψ1+ψ2, 100 round trips".into())
}

fn c11_equivariance() -> Check {
    let l = l2();
    let cx = Complex::new(&l).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 0..100 {
        let g = Matrix::<Gf2>::random_invertible(&mut rng, 6);
        let w = Trivector::<Gf2>::random(&mut rng);
        let lhs = act(&l, &g, &w.to_cocycle(&l).unwrap()).unwrap();
        let rhs = w.act(&g).unwrap().to_cocycle(&l).unwrap();
        ensure!(
            cx.classes_equal(&lhs, &rhs).unwrap(),
            "sample {n}: classes differ"
        );
    }
    Ok("100 of 100".into())
}

const SIMPLICITY_SEED: u64 = 1;

fn c12_simplicity() -> Check {
    let l = l2();
    let mut notes = Vec::new();
    for (name, f) in [
        ("II", build_type_ii(&l).unwrap()),
        ("III", build_type_iii(&l).unwrap()),
    ] {
        let a = specialize(&l, &f, Gf2::ONE).unwrap();
        let r = is_simple(&a, DEFAULT_TRIALS, SIMPLICITY_SEED).unwrap();
        ensure!(r.verdict == Verdict::Simple, "type {name}: {:?}", r.verdict);
        let cert = r.certificate.as_ref().ok_or("no certificate")?;
        ensure!(
            check_certificate(&a, cert),
            "type {name}: certificate does not re-check"
        );
        notes.push(format!("{name} simple (trial {})", cert.trial));
    }
    let a = build_sl6::<Gf2>();
    let r = is_simple(&a, DEFAULT_TRIALS, SIMPLICITY_SEED).unwrap();
    ensure!(r.verdict == Verdict::ProperIdealFound, "A: {:?}", r.verdict);
    let w = r.witness.unwrap();
    ensure!(is_proper_ideal(&a, &w), "witness is not an ideal");
    ensure!(w == a.center(), "ideal found is not the center");
    notes.push("A → center".into());
    Ok(format!("seed {SIMPLICITY_SEED}: {}", notes.join(", ")))
}

fn c13_properties() -> Check {
    let l = l2();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in 0..100 {
        let degree = 1 + n % 2;
        let density = if degree == 1 { 0.3 } else { 0.02 };
        let c = Cochain::<Gf2>::random(&mut rng, degree, 34, density);
        let dd = differential(&l, &differential(&l, &c).unwrap()).unwrap();
        ensure!(dd.is_zero(), "d∘d ≠ 0 on a degree-{degree} cochain");
    }
    let b0 = Cochain::from_bracket(&l);
    for _ in 0..50 {
        let c = Cochain::<Gf2>::random(&mut rng, 2, 34, 0.03);
        let lhs = cup(&l, &b0, &c)
            .unwrap()
            .add(&cup(&l, &c, &b0).unwrap())
            .unwrap();
        ensure!(
            lhs == differential(&l, &c).unwrap(),
            "cup(b0,c)+cup(c,b0) ≠ dc"
        );
    }
    linalg_consistency::<Gf2>(&mut rng)?;
    linalg_consistency::<Gf4>(&mut rng)?;
    Ok("d∘d 100/100, cup with b0 50/50, linear algebra 2×50".into())
}

fn linalg_consistency<F: Field>(rng: &mut ChaCha8Rng) -> Check {
    for _ in 0..50 {
        let (r, c) = (rng.gen_range(1..40), rng.gen_range(1..40));
        let m = Matrix::<F>::random(rng, r, c);
        let kernel = m.kernel_basis();
        ensure!(m.rank() + kernel.len() == c, "rank-nullity fails");
        for v in &kernel {
            ensure!(
                m.mul_vec(v).unwrap().iter().all(|x| x.is_zero()),
                "kernel vector not in kernel"
            );
        }
        let x: Vec<F> = (0..c).map(|_| F::random(rng)).collect();
        let b = m.mul_vec(&x).unwrap();
        let y = m
            .solve(&b)
            .unwrap()
            .ok_or("consistent system reported unsolvable")?;
        ensure!(m.mul_vec(&y).unwrap() == b, "solve returned a non-solution");
    }
    Ok(String::new())
}

fn main() {
    let criteria: [(&str, Option<u64>, fn() -> Check); 13] = [
        ("algebra info", Some(1), c1_algebra_info),
        ("cohomology h2", Some(10), c2_h2),
        ("decompositions of α1+α3+α5", None, c3_decompositions),
        ("ψ_μ ∪ ψ_μ = 0", None, c4_squares),
        ("set counts of ψ1∪ψ2, ψ2∪ψ1, [ψ1,ψ2]", None, c5_set_counts),
        ("dφ = [ψ1,ψ2]", None, c6_d_phi),
        ("type II Jacobi", None, c7_type_ii),
        ("type III Jacobi", Some(30), c8_type_iii),
        ("trivector ranks", None, c9_ranks),
        ("trivector/cocycle correspondence", None, c10_correspondence),
        ("GF(2) equivariance in H²", None, c11_equivariance),
        ("simplicity", None, c12_simplicity),
        ("property suites", None, c13_properties),
    ];
    let mut failed = 0;
    for (n, (name, budget, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let result = match (result, budget) {
            (Ok(_), Some(s)) if elapsed > Duration::from_secs(s) => {
                Err(format!("took {elapsed:.2?}, budget {s} s"))
            }
            (r, _) => r,
        };
        match result {
            Ok(detail) => println!(
                "PASS criterion {:2} {name}: {detail} [{elapsed:.2?}]",
                n + 1
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {:2} {name}: {why} [{elapsed:.2?}]", n + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 13 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
