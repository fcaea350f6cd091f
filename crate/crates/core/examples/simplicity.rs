//! Norton's irreducibility test on adjoint modules.
use char2lie::algebra::{build_quotient, build_sl6};
use char2lie::deform::{build_type_ii, build_type_iii, specialize};
use char2lie::field::{Field, Gf2, Gf4};
use char2lie::simplicity::{is_simple, DEFAULT_TRIALS};

fn main() {
    let seed = 1;
    let a = build_sl6::<Gf2>();
    let r = is_simple(&a, DEFAULT_TRIALS, seed).unwrap();
    println!(
        "sl(6): {:?}, ideal of dim {:?}",
        r.verdict,
        r.witness.map(|w| w.len())
    );

    let l = build_quotient::<Gf2>();
    let r = is_simple(&l, DEFAULT_TRIALS, seed).unwrap();
    println!("L: {:?} after {} trial(s)", r.verdict, r.trials_used);

    for (name, f) in [
        ("II", build_type_ii(&l).unwrap()),
        ("III", build_type_iii(&l).unwrap()),
    ] {
        let b = specialize(&l, &f, Gf2::ONE).unwrap();
        println!(
            "type {name} at t = 1: {:?}",
            is_simple(&b, DEFAULT_TRIALS, seed).unwrap().verdict
        );
    }

    let l4 = build_quotient::<Gf4>();
    let f = build_type_iii(&l4).unwrap();
    for t0 in [Gf4::ONE, Gf4::generator(), Gf4::generator().frobenius()] {
        let b = specialize(&l4, &f, t0).unwrap();
        println!(
            "type III over GF(4) at t = {t0}: {:?}",
            is_simple(&b, DEFAULT_TRIALS, seed).unwrap().verdict
        );
    }
}
