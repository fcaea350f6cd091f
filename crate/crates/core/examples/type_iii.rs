//! The deformation [ , ] + t(ψ₁ + ψ₂) + t²φ and its Jacobi coefficients.
use char2lie::algebra::build_quotient;
use char2lie::cohomology::Complex;
use char2lie::deform::{
    build_type_ii, build_type_iii, obstruction_status, psi_1, psi_2, DeformedBracket,
};
use char2lie::field::Gf2;

fn main() {
    let l = build_quotient::<Gf2>();
    let cx = Complex::new(&l).unwrap();

    let psi = psi_1(&l).unwrap().add(&psi_2(&l).unwrap()).unwrap();
    let naive = DeformedBracket::new(&l, vec![psi.clone()]).unwrap();
    println!(
        "[ , ] + t(ψ1+ψ2) fails Jacobi at t-degrees {:?}",
        naive.failing_degrees(&l).unwrap()
    );

    let r = obstruction_status(&cx, &psi).unwrap();
    println!(
        "ψ ∪ ψ vanishes identically: {}, is a coboundary: {}",
        r.obstruction_vanishes_identically, r.is_coboundary
    );

    let f = build_type_iii(&l).unwrap();
    for (d, c) in f.jacobi_coefficients(&l).unwrap() {
        println!(
            "t^{d}: {}",
            if c.is_zero() {
                "0".to_string()
            } else {
                format!("{} entries", c.len())
            }
        );
    }
    println!(
        "type II has t-degree {}",
        build_type_ii(&l).unwrap().t_degree()
    );

    let path = std::env::temp_dir().join("type_iii.json");
    std::fs::write(&path, serde_json::to_string_pretty(&f.to_doc(&l)).unwrap()).unwrap();
    println!("wrote {}", path.display());
}
