//! sl(6) over GF(2), its center, and the 34-dimensional quotient L.
use char2lie::algebra::{build_quotient, build_sl6};
use char2lie::field::Gf2;

fn main() {
    let a = build_sl6::<Gf2>();
    let l = build_quotient::<Gf2>();
    println!("dim A = {}", a.dim());
    for z in a.center() {
        let labels: Vec<String> = z.support().map(|(k, _)| a.label(k).to_string()).collect();
        println!("center spanned by {}", labels.join(" + "));
    }
    println!(
        "dim L = {}, center of L has dim {}",
        l.dim(),
        l.center().len()
    );
    println!("Jacobi holds on L: {}", l.satisfies_jacobi());

    let x = l.element_from_labels(&[("E+1-2", Gf2::ONE)]).unwrap();
    let y = l.element_from_labels(&[("E+2-1", Gf2::ONE)]).unwrap();
    let h = l.bracket(&x, &y);
    let labels: Vec<String> = h.support().map(|(k, _)| l.label(k).to_string()).collect();
    println!("[E+1-2, E+2-1] = {}", labels.join(" + "));
}
