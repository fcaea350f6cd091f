//! Writing an H² weight as a sum of roots.
use char2lie::rootsys::{decompositions, h2_weights, Weight};

fn main() {
    let mu = Weight::simple_root(1) + Weight::simple_root(3) + Weight::simple_root(5);
    println!("μ = α1 + α3 + α5 = {mu}");
    for d in decompositions(mu, 3, 0) {
        let parts: Vec<String> = d.iter().map(|r| r.to_string()).collect();
        println!("  {}", parts.join(" + "));
    }
    println!(
        "as a sum of two roots: {} ways",
        decompositions(mu, 2, 0).len()
    );

    let ws = h2_weights();
    println!(
        "{} weights with three +1 and three -1 coordinates:",
        ws.len()
    );
    for w in ws {
        println!("  {w}");
    }
}
