//! Counting "sets" in ψ₁ ∪ ψ₂, [ψ₁, ψ₂] and dφ.
use char2lie::algebra::build_quotient;
use char2lie::cochain::{cbracket, cup, differential, set_count};
use char2lie::deform::{phi_cochain, phi_forensics, psi_1, psi_2};
use char2lie::field::Gf2;

fn main() {
    let l = build_quotient::<Gf2>();
    let (p1, p2) = (psi_1(&l).unwrap(), psi_2(&l).unwrap());
    let bracket = cbracket(&l, &p1, &p2).unwrap();
    let dphi = differential(&l, &phi_cochain(&l).unwrap()).unwrap();

    println!(
        "ψ1 ∪ ψ2   : {} sets",
        set_count(&l, &cup(&l, &p1, &p2).unwrap())
    );
    println!(
        "ψ2 ∪ ψ1   : {} sets",
        set_count(&l, &cup(&l, &p2, &p1).unwrap())
    );
    println!("[ψ1, ψ2]  : {} sets", set_count(&l, &bracket));
    println!("dφ        : {} sets", set_count(&l, &dphi));
    println!("dφ == [ψ1, ψ2]: {}", dphi == bracket);

    let f = phi_forensics(&l).unwrap();
    println!(
        "d of each part of φ: {:?} (total {})",
        f.part_counts, f.total
    );
    println!("coincidences between parts:");
    for (i, row) in f.matches.iter().enumerate() {
        for (j, m) in row.iter().enumerate().skip(i + 1) {
            print!(" ({},{})={m}", i + 1, j + 1);
        }
    }
    println!();
    println!(
        "{} - 2·{} = {}",
        f.total,
        f.total_matches,
        f.total - 2 * f.total_matches
    );
}
