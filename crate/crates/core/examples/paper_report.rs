//! Every headline number in one report.
use char2lie::report::paper_report;

fn main() {
    let r = paper_report(1).unwrap();
    println!("{}", serde_json::to_string_pretty(&r).unwrap());
    if !r.ok() {
        std::process::exit(1);
    }
}
