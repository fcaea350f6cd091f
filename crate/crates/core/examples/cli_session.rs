//! Driving the command-line interface from code, with files in a temp dir.
use char2lie::cli::run_command;

fn run(args: &[&str]) -> String {
    let (code, out) = run_command(args);
    println!(
        "$ char2lie {}\n[exit {code}]\n{}",
        args.join(" "),
        out.trim_end()
    );
    out
}

fn main() {
    let dir = std::env::temp_dir().join("char2lie-session");
    std::fs::create_dir_all(&dir).unwrap();
    let p = |name: &str| dir.join(name).to_string_lossy().into_owned();

    std::fs::write(
        p("iii.json"),
        r#"{"coeffs":[{"triple":[1,2,3],"value":"1"},{"triple":[1,4,5],"value":"1"}]}"#,
    )
    .unwrap();
    run(&["algebra", "info"]);
    run(&["trivector", "rank", "--in", &p("iii.json")]);
    run(&["trivector", "classify", "--in", &p("iii.json")]);
    run(&["deform", "build", "--type", "III", "--out", &p("f.json")]);
    run(&["deform", "verify", "--in", &p("f.json")]);
    run(&[
        "deform",
        "simplicity",
        "--in",
        &p("f.json"),
        "--t0",
        "1",
        "--seed",
        "1",
    ]);
}
