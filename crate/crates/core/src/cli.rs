//! Command-line surface. `run_command` parses argv, runs one command and
//! returns the exit code with everything that would go to stdout.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage error or
//! malformed input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{build_quotient, build_sl6, LieAlgebra};
use crate::cochain::{cbracket, cup, set_count, Cochain, CochainDoc};
use crate::cohomology::Complex;
use crate::deform::{
    build_type_ii, build_type_iii, obstruction_status, specialize, DeformationDoc, DeformedBracket,
};
use crate::error::{Error, Result};
use crate::field::{check_degree, Field, Gf16, Gf2, Gf256, Gf4};
use crate::report::paper_report;
use crate::rootsys::Weight;
use crate::simplicity::{is_simple, DEFAULT_TRIALS};
use crate::tables;
use crate::trivector::{Trivector, TrivectorDoc};

#[derive(Parser, Debug)]
#[command(
    name = "char2lie",
    version,
    about = "Cohomology and deformations of sl(6)/Z in characteristic 2"
)]
struct Cli {
    /// Work over GF(2^e).
    #[arg(long, global = true, default_value_t = 1)]
    field_degree: u32,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Regenerate the shipped tables file before running.
    #[arg(long, global = true)]
    rebuild_tables: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// sl(6), its center, and L = sl(6)/Z.
    Algebra {
        #[command(subcommand)]
        cmd: AlgebraCmd,
    },
    /// Second cohomology of L with adjoint coefficients.
    Cohomology {
        #[command(subcommand)]
        cmd: CohomologyCmd,
    },
    /// Trivectors in Λ³V, dim V = 6.
    Trivector {
        #[command(subcommand)]
        cmd: TrivectorCmd,
    },
    /// Cup product (or bracket) of two 2-cochains.
    Cup {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        /// Output [a, b] = a ∪ b + b ∪ a instead of a ∪ b.
        #[arg(long)]
        bracket: bool,
        #[arg(long)]
        count_sets: bool,
    },
    /// Global deformations of L over F[t].
    Deform {
        #[command(subcommand)]
        cmd: DeformCmd,
    },
    /// Summary reports.
    Report {
        #[command(subcommand)]
        cmd: ReportCmd,
    },
}

#[derive(Subcommand, Debug)]
enum AlgebraCmd {
    /// Dimensions and center.
    Info,
}

#[derive(Subcommand, Debug)]
enum CohomologyCmd {
    /// H²(L, L) by weight blocks.
    H2 {
        /// Restrict to one weight, e.g. "1,1,1,-1,-1,-1".
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<Weight>,
        /// Print ψ_μ as cochain JSON.
        #[arg(long, allow_hyphen_values = true)]
        emit_cocycle: Option<Weight>,
    },
}

#[derive(Subcommand, Debug)]
enum TrivectorCmd {
    /// Orbit class of a trivector.
    Classify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Image of a trivector in H²(L, L), as cochain JSON.
    ToCocycle {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Dimension of the smallest U with w in Λ³U.
    Rank {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Exploratory search for w = D₁ + D₂ with D₁, D₂ decomposable.
    Split {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20000)]
        budget: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DeformType {
    #[value(name = "II")]
    Ii,
    #[value(name = "III")]
    Iii,
}

#[derive(Subcommand, Debug)]
enum DeformCmd {
    /// Write the type II or type III deformation.
    Build {
        #[arg(long = "type", value_enum)]
        kind: DeformType,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-degree Jacobi status of a deformation file.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Structure constants of the bracket at t = t0.
    Specialize {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        t0: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// MeatAxe simplicity test of the bracket at t = t0.
    Simplicity {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        t0: String,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
    },
    /// Whether ψ ∪ ψ is exact for a 2-cocycle ψ.
    Obstruction {
        #[arg(long = "in")]
        input: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum ReportCmd {
    /// Recompute every headline invariant and compare with the expected values.
    Paper {
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

struct Out {
    code: i32,
    text: String,
}

impl Out {
    fn ok(text: String) -> Self {
        Out { code: 0, text }
    }
}

fn json<T: Serialize>(x: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(x)? + "\n")
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn write_or_return(out: &Option<PathBuf>, text: String) -> Result<String> {
    match out {
        Some(p) => {
            std::fs::write(p, &text)?;
            Ok(format!("wrote {}\n", p.display()))
        }
        None => Ok(text),
    }
}

fn quotient<F: Field>() -> Result<LieAlgebra<F>> {
    if F::DEGREE == 1 {
        let t = tables::load()?;
        let doc = t.quotient.to_table_doc();
        return LieAlgebra::from_table_doc(&doc);
    }
    Ok(build_quotient())
}

fn run_typed<F: Field>(cli: &Cli) -> Result<Out> {
    let l = quotient::<F>()?;
    match &cli.command {
        Command::Algebra {
            cmd: AlgebraCmd::Info,
        } => algebra_info::<F>(cli.json),
        Command::Cohomology {
            cmd:
                CohomologyCmd::H2 {
                    weight,
                    emit_cocycle,
                },
        } => {
            let cx = Complex::new(&l)?;
            if let Some(mu) = emit_cocycle {
                let psi = crate::cohomology::basis_cocycle(&l, *mu)?;
                return Ok(Out::ok(json(&psi.to_doc(&l))?));
            }
            if let Some(mu) = weight {
                let dims = cx.block_dims(mu);
                return Ok(Out::ok(if cli.json {
                    json(&dims)?
                } else {
                    format!(
                        "weight {}: dim C² = {}, dim Z² = {}, dim B² = {}, dim H² = {}\n",
                        dims.weight, dims.c2, dims.z2, dims.b2, dims.h2
                    )
                }));
            }
            let s = cx.h2_summary()?;
            if cli.json {
                return Ok(Out::ok(json(&s.to_doc(&l, false))?));
            }
            let mut t = format!(
                "dim H²(L, L) = {} ({} weight blocks of C²)\n",
                s.total, s.blocks_examined
            );
            for d in &s.nonzero {
                writeln!(t, "  {}  dim H² = {}  dim B² = {}", d.weight, d.h2, d.b2).ok();
            }
            Ok(Out::ok(t))
        }
        Command::Trivector { cmd } => trivector::<F>(&l, cmd, cli.json),
        Command::Cup {
            left,
            right,
            bracket,
            count_sets,
        } => {
            let a = in_file(left, Cochain::from_doc(&l, &read_json::<CochainDoc>(left)?))?;
            let b = in_file(
                right,
                Cochain::from_doc(&l, &read_json::<CochainDoc>(right)?),
            )?;
            let c = if *bracket {
                cbracket(&l, &a, &b)?
            } else {
                cup(&l, &a, &b)?
            };
            if *count_sets {
                let n = set_count(&l, &c);
                return Ok(Out::ok(if cli.json {
                    json(&serde_json::json!({ "sets": n }))?
                } else {
                    format!("{n}\n")
                }));
            }
            Ok(Out::ok(json(&c.to_doc(&l))?))
        }
        Command::Deform { cmd } => deform::<F>(&l, cmd, cli.json),
        Command::Report {
            cmd: ReportCmd::Paper { seed },
        } => {
            if F::DEGREE != 1 {
                return Err(Error::Precondition(
                    "report paper runs over GF(2); omit --field-degree".into(),
                ));
            }
            let r = paper_report(*seed)?;
            let code = if r.ok() { 0 } else { 1 };
            let text = if cli.json {
                json(&r)?
            } else {
                let mut t = String::new();
                writeln!(
                    t,
                    "dim A = {}, center dim = {}, dim L = {}",
                    r.dim_a, r.center_dim, r.dim_l
                )
                .ok();
                writeln!(
                    t,
                    "dim H²(L, L) = {} over {} weights",
                    r.dim_h2,
                    r.h2_weights.len()
                )
                .ok();
                let s = &r.set_counts;
                writeln!(
                    t,
                    "sets: ψ₁∪ψ₂ {}, ψ₂∪ψ₁ {}, [ψ₁,ψ₂] {}, dφ {}; dφ = [ψ₁,ψ₂]: {}",
                    s.psi1_cup_psi2, s.psi2_cup_psi1, s.bracket, s.d_phi, r.d_phi_equals_bracket
                )
                .ok();
                writeln!(
                    t,
                    "parts of φ: {:?} sets, total {}, {} coincident pairs",
                    r.phi_forensics.part_counts,
                    r.phi_forensics.total,
                    r.phi_forensics.total_matches
                )
                .ok();
                writeln!(
                    t,
                    "Jacobi: type II {:?}, type III {:?}",
                    r.jacobi_type_ii.error, r.jacobi_type_iii.error
                )
                .ok();
                let ranks: Vec<String> = r
                    .trivector_ranks
                    .iter()
                    .map(|x| format!("{:?}:{}", x.tag, x.rank))
                    .collect();
                writeln!(t, "trivector ranks: {}", ranks.join(" ")).ok();
                let v = &r.simplicity;
                writeln!(
                    t,
                    "simplicity (seed {}): A {:?}, L {:?}, II(1) {:?}, III(1) {:?}",
                    v.seed, v.sl6, v.quotient, v.type_ii_at_1, v.type_iii_at_1
                )
                .ok();
                if r.ok() {
                    writeln!(t, "all checks agree").ok();
                } else {
                    for m in &r.mismatches {
                        writeln!(t, "MISMATCH {m}").ok();
                    }
                }
                t
            };
            Ok(Out { code, text })
        }
    }
}

#[derive(Serialize)]
struct AlgebraInfo {
    field_degree: u32,
    dim_a: usize,
    center: Vec<std::collections::BTreeMap<String, String>>,
    dim_l: usize,
    quotient_satisfies_jacobi: bool,
    quotient_center_dim: usize,
}

fn algebra_info<F: Field>(as_json: bool) -> Result<Out> {
    let a = build_sl6::<F>();
    let l = build_quotient::<F>();
    let center = a.center();
    let info = AlgebraInfo {
        field_degree: F::DEGREE,
        dim_a: a.dim(),
        center: center.iter().map(|z| a.element_doc(z)).collect(),
        dim_l: l.dim(),
        quotient_satisfies_jacobi: l.satisfies_jacobi(),
        quotient_center_dim: l.center().len(),
    };
    if as_json {
        return Ok(Out::ok(json(&info)?));
    }
    let zs: Vec<String> = center
        .iter()
        .map(|z| {
            z.support()
                .map(|(k, _)| a.label(k).to_string())
                .collect::<Vec<_>>()
                .join("+")
        })
        .collect();
    Ok(Out::ok(format!(
        "dim A = {}\ncenter = span{{{}}} (dim {})\ndim L = {}\n",
        info.dim_a,
        zs.join(", "),
        center.len(),
        info.dim_l
    )))
}

fn trivector<F: Field>(l: &LieAlgebra<F>, cmd: &TrivectorCmd, as_json: bool) -> Result<Out> {
    let path = match cmd {
        TrivectorCmd::Classify { input }
        | TrivectorCmd::ToCocycle { input }
        | TrivectorCmd::Rank { input } => input,
        TrivectorCmd::Split { input, .. } => input,
    };
    let w = in_file(
        path,
        Trivector::<F>::from_doc(&read_json::<TrivectorDoc>(path)?),
    )?;
    Ok(Out::ok(match cmd {
        TrivectorCmd::Classify { .. } => {
            let c = w.classify()?;
            if as_json {
                json(&serde_json::json!({ "class": c, "rank": w.rank() }))?
            } else {
                format!("{c}\n")
            }
        }
        TrivectorCmd::Rank { .. } => {
            if as_json {
                json(&serde_json::json!({ "rank": w.rank() }))?
            } else {
                format!("{}\n", w.rank())
            }
        }
        TrivectorCmd::ToCocycle { .. } => json(&w.to_cocycle(l)?.to_doc(l))?,
        TrivectorCmd::Split { seed, budget, .. } => {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(*seed);
            let split = w.two_decomposable_split(&mut rng, *budget);
            json(&serde_json::json!({
                "rank": w.rank(),
                "found": split.is_some(),
                "parts": split.map(|(a, b)| vec![a.to_doc(), b.to_doc()]),
            }))?
        }
    }))
}

fn load_deformation<F: Field>(l: &LieAlgebra<F>, path: &Path) -> Result<DeformedBracket<F>> {
    in_file(
        path,
        DeformedBracket::from_doc(l, &read_json::<DeformationDoc>(path)?),
    )
}

#[derive(Serialize)]
struct DegreeStatus {
    t_degree: usize,
    vanishes: bool,
    nonzero_entries: usize,
}

fn deform<F: Field>(l: &LieAlgebra<F>, cmd: &DeformCmd, as_json: bool) -> Result<Out> {
    match cmd {
        DeformCmd::Build { kind, out } => {
            let f = match kind {
                DeformType::Ii => build_type_ii(l)?,
                DeformType::Iii => build_type_iii(l)?,
            };
            Ok(Out::ok(write_or_return(out, json(&f.to_doc(l))?)?))
        }
        DeformCmd::Verify { input } => {
            let f = load_deformation(l, input)?;
            let status: Vec<DegreeStatus> = f
                .jacobi_coefficients(l)?
                .into_iter()
                .map(|(d, c)| DegreeStatus {
                    t_degree: d,
                    vanishes: c.is_zero(),
                    nonzero_entries: c.len(),
                })
                .collect();
            let code = if status.iter().all(|s| s.vanishes) {
                0
            } else {
                1
            };
            let text = if as_json {
                json(&status)?
            } else {
                status
                    .iter()
                    .map(|s| {
                        if s.vanishes {
                            format!("t^{}: 0\n", s.t_degree)
                        } else {
                            format!(
                                "t^{}: NONZERO ({} entries)\n",
                                s.t_degree, s.nonzero_entries
                            )
                        }
                    })
                    .collect()
            };
            Ok(Out { code, text })
        }
        DeformCmd::Specialize { input, t0, out } => {
            let f = load_deformation(l, input)?;
            let a = specialize(l, &f, F::from_hex(t0)?)?;
            Ok(Out::ok(write_or_return(out, json(&a.to_table_doc())?)?))
        }
        DeformCmd::Simplicity {
            input,
            t0,
            seed,
            trials,
        } => {
            let f = load_deformation(l, input)?;
            let a = specialize(l, &f, F::from_hex(t0)?)?;
            let r = is_simple(&a, *trials, *seed)?;
            Ok(Out::ok(json(&r.to_doc(&a))?))
        }
        DeformCmd::Obstruction { input } => {
            let psi = in_file(
                input,
                Cochain::from_doc(l, &read_json::<CochainDoc>(input)?),
            )?;
            let cx = Complex::new(l)?;
            let r = obstruction_status(&cx, &psi)?;
            Ok(Out::ok(json(&r.to_doc(l))?))
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Verification(_) | Error::Internal(_) | Error::Singular => 1,
        _ => 2,
    }
}

/// Runs one command; `args` excludes the program name.
pub fn run_command<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv = std::iter::once(OsString::from("char2lie")).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let mut prefix = String::new();
    if cli.rebuild_tables {
        let path = tables::default_path();
        match tables::rebuild(&path) {
            Ok(sum) => prefix = format!("rebuilt {} (sha256 {sum})\n", path.display()),
            Err(e) => return (exit_code(&e), format!("error: {e}\n")),
        }
    }
    let result = check_degree(cli.field_degree).and_then(|_| match cli.field_degree {
        1 => run_typed::<Gf2>(&cli),
        2 => run_typed::<Gf4>(&cli),
        4 => run_typed::<Gf16>(&cli),
        _ => run_typed::<Gf256>(&cli),
    });
    match result {
        Ok(out) => (out.code, prefix + &out.text),
        Err(e) => (exit_code(&e), format!("{prefix}error: {e}\n")),
    }
}
