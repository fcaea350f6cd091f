//! H²(L, L) computed one weight block at a time.
//!
//! Set RAYON_NUM_THREADS to control the number of worker threads.
use std::time::Instant;

use char2lie::algebra::build_quotient;
use char2lie::cohomology::Complex;
use char2lie::field::Gf2;

fn main() {
    let l = build_quotient::<Gf2>();
    let start = Instant::now();
    let cx = Complex::new(&l).unwrap();
    let s = cx.h2_summary().unwrap();
    println!(
        "dim H² = {} from {} weight blocks in {:.2?}",
        s.total,
        s.blocks_examined,
        start.elapsed()
    );
    for d in &s.nonzero {
        println!(
            "  {}  C² {:4}  Z² {:4}  B² {:4}  H² {}",
            d.weight, d.c2, d.z2, d.b2, d.h2
        );
    }
    let (mu, psi) = s.cocycles.iter().next().unwrap();
    println!("ψ_{mu} has {} entries", psi.len());
}
