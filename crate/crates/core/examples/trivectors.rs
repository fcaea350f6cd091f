//! Trivector orbits and their cocycles.
use char2lie::algebra::build_quotient;
use char2lie::cochain::act;
use char2lie::cohomology::Complex;
use char2lie::deform::{psi_1, psi_2};
use char2lie::field::Gf2;
use char2lie::linalg::Matrix;
use char2lie::trivector::{OrbitTag, Trivector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    for tag in OrbitTag::ALL {
        let w = Trivector::<Gf2>::canonical(tag);
        println!(
            "({tag:?}) {w:?}: rank {}, class {}",
            w.rank(),
            w.classify().unwrap()
        );
    }

    let l = build_quotient::<Gf2>();
    let psi = psi_1(&l).unwrap().add(&psi_2(&l).unwrap()).unwrap();
    let z = Trivector::canonical(OrbitTag::III).to_cocycle(&l).unwrap();
    println!("to_cocycle(III) == ψ1 + ψ2: {}", z == psi);

    let cx = Complex::new(&l).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let g = Matrix::<Gf2>::random_invertible(&mut rng, 6);
    let w = Trivector::<Gf2>::random(&mut rng);
    let lhs = act(&l, &g, &w.to_cocycle(&l).unwrap()).unwrap();
    let rhs = w.act(&g).unwrap().to_cocycle(&l).unwrap();
    println!(
        "g·to_cocycle(w) ~ to_cocycle(g·w): {}",
        cx.classes_equal(&lhs, &rhs).unwrap()
    );
    println!(
        "from_class recovers w: {}",
        Trivector::from_class(&cx, &rhs).unwrap() == w.act(&g).unwrap()
    );
}
