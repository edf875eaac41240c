mod reproduce;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use specht_core::groebner::Ideal;
use specht_core::lefschetz::{has_slp, has_wlp, slp_threshold_predicate, wlp_threshold_predicate};
use specht_core::poly::{parse_polynomial, MonomialOrder};
use specht_core::specht::{module_basis, straighten};
use specht_core::tableaux::{enumerate_standard, parse_tableau, ShiftedShape};
use specht_core::theorems::{CheckConfig, Outcome, TheoremId, TheoremVerdict};
use specht_core::{Error, FieldSpec};

pub const SCHEMA_VERSION: u32 = 1;

const EXIT_MISMATCH: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Linear-algebra commands are capped at this many variables unless `--allow-large` is given.
const LINEAR_CAP: usize = 10;

#[derive(Debug, Parser)]
#[command(name = "specht", version, about = "Shifted Specht modules and ideals, with exact verification")]
struct Cli {
    /// Print a versioned JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Lift the default parameter caps.
    #[arg(long, global = true)]
    allow_large: bool,

    /// Seed for the random forms tried by regular-sequence searches.
    #[arg(long, global = true, default_value_t = CheckConfig::default().seed)]
    seed: u64,

    /// Random forms tried per step of a regular-sequence search.
    #[arg(long, global = true, default_value_t = CheckConfig::default().cm_trials)]
    trials: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ShapeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
}

#[derive(Debug, Args)]
struct IdealArgs {
    /// Number of variables.
    #[arg(long)]
    n: usize,
    /// `q` or `fp:<p>`.
    #[arg(long, default_value = "q")]
    field: FieldSpec,
    /// Comma-separated generators.
    #[arg(long)]
    ideal: String,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Order {
    Grevlex,
    Lex,
}

impl Order {
    fn monomial_order(self) -> MonomialOrder {
        match self {
            Order::Grevlex => MonomialOrder::GrevLex,
            Order::Lex => MonomialOrder::Lex,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Standard tableaux of a shifted shape.
    Tableaux {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long)]
        count_only: bool,
    },
    /// The standard basis of V(n,k,d), one generator per line.
    Basis {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
    },
    /// Coordinates of F_T over the standard basis.
    Straighten {
        /// `top=i1,i2,..;bottom=j1,j2,..`
        #[arg(long)]
        tableau: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
    },
    /// Weak Lefschetz property of F[x_1..x_n]/(x_1^2..x_n^2).
    Wlp {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
    },
    /// Strong Lefschetz property of F[x_1..x_n]/(x_1^2..x_n^2).
    Slp {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
    },
    /// a(n,k,d) = a(n,k,d-1) ∩ (x_1..x_n)^(d), with component heights.
    Decomp {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
    },
    /// Check one theorem instance, or a manifest of them with `--batch`.
    Verify {
        #[arg(long, required_unless_present = "batch")]
        theorem: Option<TheoremId>,
        #[arg(long, required_unless_present = "batch")]
        n: Option<usize>,
        #[arg(long, required_unless_present = "batch")]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, default_value = "q")]
        field: FieldSpec,
        /// JSON array of `{theorem, n, k, d?, field}` objects, checked concurrently.
        #[arg(long, conflicts_with_all = ["theorem", "n", "k", "d"])]
        batch: Option<PathBuf>,
    },
    /// Reduced Gröbner basis.
    Gb {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long, value_enum, default_value = "grevlex")]
        order: Order,
    },
    /// Ideal membership.
    Member {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        poly: String,
    },
    /// (I : f).
    Colon {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        by: String,
    },
    /// I ∩ J.
    Intersect {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        other: String,
    },
    /// (I : f^∞), or (I : m^∞) without `--by`.
    Saturate {
        #[command(flatten)]
        ideal: IdealArgs,
        #[arg(long)]
        by: Option<String>,
    },
    /// Hilbert series numerator, dimension and height of a homogeneous ideal.
    Hilbert {
        #[command(flatten)]
        ideal: IdealArgs,
    },
    /// Replay a worked example and diff it against its golden file.
    Reproduce {
        #[arg(long, value_enum)]
        example: reproduce::Example,
    },
}

/// What a command produced: a JSON result, its text rendering, and the exit code.
struct Report {
    result: Value,
    text: String,
    exit: u8,
}

impl Report {
    fn ok(result: Value, text: String) -> Self {
        Report { result, text, exit: 0 }
    }
}

struct Failure {
    error: Error,
    exit: u8,
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        let exit = match error {
            Error::TooLarge(_) => EXIT_INCONCLUSIVE,
            _ => EXIT_USAGE,
        };
        Failure { error, exit }
    }
}

type CmdResult = Result<Report, Failure>;

fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(['(', ' ', '{']).next().unwrap_or_default().to_string()
}

fn cap(n: usize, limit: usize, allow_large: bool) -> Result<(), Error> {
    if n > limit && !allow_large {
        return Err(Error::TooLarge(format!("n={n} exceeds the cap of {limit}; pass --allow-large")));
    }
    Ok(())
}

fn shape(s: &ShapeArgs) -> Result<ShiftedShape, Error> {
    ShiftedShape::new(s.n, s.k, s.d)
}

fn lines<T: ToString>(items: &[T]) -> String {
    items.iter().map(|x| format!("{}\n", x.to_string())).collect()
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn parse_ideal(args: &IdealArgs) -> Result<Ideal, Error> {
    Ideal::parse(&args.ideal, args.field, args.n)
}

/// The reduced grevlex basis of `i` as a result.
fn ideal_report(i: &Ideal) -> Report {
    let basis = i.groebner_basis(&MonomialOrder::GrevLex);
    Report::ok(
        json!({ "field": i.field(), "nvars": i.nvars(), "basis": strings(&basis) }),
        lines(&basis),
    )
}

fn verdict_exit(v: &TheoremVerdict) -> u8 {
    match v.agrees() {
        Some(true) => 0,
        Some(false) => EXIT_MISMATCH,
        None => EXIT_INCONCLUSIVE,
    }
}

fn verdict_json(v: &TheoremVerdict) -> Value {
    let mut value = serde_json::to_value(v).expect("verdicts serialize");
    value["agrees"] = json!(v.agrees());
    value
}

fn verdict_text(v: &TheoremVerdict) -> String {
    let mut out = String::new();
    let outcome = match v.outcome {
        Outcome::Holds => "holds",
        Outcome::Fails => "fails",
        Outcome::Inconclusive => "inconclusive",
    };
    let expected = if v.expected { "holds" } else { "fails" };
    let _ = writeln!(out, "{} {} over {}: {outcome} (expected {expected})", v.theorem, v.params, v.field);
    if let Some(w) = &v.witness {
        let _ = writeln!(out, "witness: {w}");
    }
    for note in &v.notes {
        let _ = writeln!(out, "note: {note}");
    }
    out
}

fn verify_one(cfg: &CheckConfig, theorem: TheoremId, n: usize, k: usize, d: Option<usize>, field: FieldSpec) -> CmdResult {
    let v = cfg.verify(theorem, n, k, d, field)?;
    eprintln!("elapsed: {:.3}s", v.elapsed.as_secs_f64());
    Ok(Report {
        result: verdict_json(&v),
        text: verdict_text(&v),
        exit: verdict_exit(&v),
    })
}

#[derive(Debug, Deserialize)]
struct BatchEntry {
    theorem: TheoremId,
    n: usize,
    k: usize,
    #[serde(default)]
    d: Option<usize>,
    #[serde(default = "default_field")]
    field: FieldSpec,
}

fn default_field() -> FieldSpec {
    FieldSpec::Rationals
}

fn verify_batch(cfg: &CheckConfig, path: &PathBuf) -> CmdResult {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Error::ParameterOutOfRange(format!("cannot read {}: {e}", path.display())))?;
    let entries: Vec<BatchEntry> =
        serde_json::from_str(&raw).map_err(|e| Error::ParameterOutOfRange(format!("bad manifest: {e}")))?;
    let outcomes: Vec<CmdResult> = std::thread::scope(|s| {
        let handles: Vec<_> = entries
            .iter()
            .map(|e| s.spawn(move || verify_one(cfg, e.theorem, e.n, e.k, e.d, e.field)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    });
    let mut results = Vec::new();
    let mut text = String::new();
    let mut exits = Vec::new();
    for o in outcomes {
        match o {
            Ok(r) => {
                results.push(r.result);
                text.push_str(&r.text);
                exits.push(r.exit);
            }
            Err(f) => {
                results.push(json!({ "error": { "kind": error_kind(&f.error), "message": f.error.to_string() } }));
                let _ = writeln!(text, "error: {}", f.error);
                exits.push(f.exit);
            }
        }
    }
    let exit = if exits.contains(&EXIT_USAGE) {
        EXIT_USAGE
    } else if exits.contains(&EXIT_MISMATCH) {
        EXIT_MISMATCH
    } else {
        exits.into_iter().max().unwrap_or(0)
    };
    Ok(Report {
        result: Value::Array(results),
        text,
        exit,
    })
}

fn lefschetz_report(n: usize, field: FieldSpec, rank_test: bool, predicate: bool) -> Report {
    let result = json!({
        "n": n,
        "field": field,
        "rank_test": rank_test,
        "threshold_predicate": predicate,
        "agree": rank_test == predicate,
    });
    let text = format!("{result}\n");
    Report {
        exit: if rank_test == predicate { 0 } else { EXIT_MISMATCH },
        result,
        text,
    }
}

fn run(cli: &Cli) -> CmdResult {
    let cfg = CheckConfig {
        allow_large: cli.allow_large,
        seed: cli.seed,
        cm_trials: cli.trials,
        ..CheckConfig::default()
    };
    match &cli.command {
        Command::Tableaux { shape: s, count_only } => {
            let sh = shape(s)?;
            let tabs = enumerate_standard(sh);
            let mut result = json!({ "shape": [s.n, s.k, s.d], "count": tabs.len() });
            let text = if *count_only {
                format!("{}\n", tabs.len())
            } else {
                result["tableaux"] = json!(strings(&tabs));
                lines(&tabs)
            };
            Ok(Report::ok(result, text))
        }
        Command::Basis { shape: s, field } => {
            cap(s.n, LINEAR_CAP, cli.allow_large)?;
            let b = module_basis(shape(s)?, *field);
            let result = json!({
                "shape": [s.n, s.k, s.d],
                "field": field,
                "tableaux": strings(&b.tableaux),
                "generators": strings(&b.polynomials),
            });
            Ok(Report::ok(result, lines(&b.polynomials)))
        }
        Command::Straighten { tableau, k, field } => {
            let t = parse_tableau(tableau, *k)?;
            cap(t.shape().n, LINEAR_CAP, cli.allow_large)?;
            let v = straighten(&t, *field)?;
            let terms: Vec<(String, String)> = v.coords.iter().map(|(t, c)| (c.to_string(), t.to_string())).collect();
            let mut text: String = terms.iter().map(|(c, t)| format!("{c} * [{t}]\n")).collect();
            if terms.is_empty() {
                text.push_str("0\n");
            }
            let result = json!({
                "tableau": t.to_string(),
                "field": field,
                "terms": terms.iter().map(|(c, t)| json!({ "coefficient": c, "tableau": t })).collect::<Vec<_>>(),
            });
            Ok(Report::ok(result, text))
        }
        Command::Wlp { n, field } => {
            cap(*n, LINEAR_CAP, cli.allow_large)?;
            Ok(lefschetz_report(*n, *field, has_wlp(*n, *field), wlp_threshold_predicate(*n, field.characteristic())))
        }
        Command::Slp { n, field } => {
            cap(*n, LINEAR_CAP, cli.allow_large)?;
            Ok(lefschetz_report(*n, *field, has_slp(*n, *field), slp_threshold_predicate(*n, field.characteristic())))
        }
        Command::Decomp { shape: s, field } => {
            let v = cfg.check_thm_rad_d(s.n, s.k, s.d, *field)?;
            eprintln!("elapsed: {:.3}s", v.elapsed.as_secs_f64());
            let mut report = Report {
                result: verdict_json(&v),
                text: verdict_text(&v),
                exit: verdict_exit(&v),
            };
            if s.k >= 1 && s.d > s.k + 1 {
                let m = cfg.mixed_height_evidence(s.n, s.k, s.d, *field)?;
                let _ = writeln!(
                    report.text,
                    "component heights: {} and {}; mixed: {}",
                    m.height_specht,
                    m.height_monomial,
                    m.mixed()
                );
                report.result["mixed_heights"] = serde_json::to_value(&m).expect("reports serialize");
            }
            Ok(report)
        }
        Command::Verify { batch: Some(path), .. } => verify_batch(&cfg, path),
        Command::Verify { theorem, n, k, d, field, .. } => {
            let (Some(t), Some(n), Some(k)) = (theorem, n, k) else {
                return Err(Error::ParameterOutOfRange("verify needs --theorem, --n and --k".into()).into());
            };
            verify_one(&cfg, *t, *n, *k, *d, *field)
        }
        Command::Gb { ideal, order } => {
            let i = parse_ideal(ideal)?;
            let basis = i.groebner_basis(&order.monomial_order());
            let result = json!({
                "field": i.field(),
                "nvars": i.nvars(),
                "order": format!("{order:?}").to_lowercase(),
                "basis": strings(&basis),
            });
            Ok(Report::ok(result, lines(&basis)))
        }
        Command::Member { ideal, poly } => {
            let i = parse_ideal(ideal)?;
            let f = parse_polynomial(poly, ideal.field, ideal.n)?;
            let member = i.contains(&f)?;
            Ok(Report::ok(json!({ "member": member }), format!("{member}\n")))
        }
        Command::Colon { ideal, by } => {
            let i = parse_ideal(ideal)?;
            let f = parse_polynomial(by, ideal.field, ideal.n)?;
            Ok(ideal_report(&i.colon(&f)?))
        }
        Command::Intersect { ideal, other } => {
            let i = parse_ideal(ideal)?;
            let j = Ideal::parse(other, ideal.field, ideal.n)?;
            Ok(ideal_report(&i.intersect(&j)?))
        }
        Command::Saturate { ideal, by } => {
            let i = parse_ideal(ideal)?;
            let s = match by {
                Some(by) => i.saturate(&parse_polynomial(by, ideal.field, ideal.n)?)?,
                None => i.saturate_max()?,
            };
            Ok(ideal_report(&s))
        }
        Command::Hilbert { ideal } => {
            let h = parse_ideal(ideal)?.hilbert_data()?;
            let result = json!({
                "numerator": h.numerator,
                "numerator_string": h.numerator_string(),
                "krull_dim": h.krull_dim,
                "height": h.height,
                "multiplicity": h.multiplicity(),
                "vector_space_dim": h.vector_space_dim(),
            });
            let text = format!(
                "numerator: {}\nkrull_dim: {}\nheight: {}\nmultiplicity: {}\n",
                h.numerator_string(),
                h.krull_dim,
                h.height,
                h.multiplicity()
            );
            Ok(Report::ok(result, text))
        }
        Command::Reproduce { example } => {
            let out = reproduce::render(*example, &cfg)?;
            let golden = reproduce::golden(*example);
            let matches = out == golden;
            let mut text = out.clone();
            if !matches {
                text.push_str("--- golden\n");
                text.push_str(&reproduce::diff(golden, &out));
            }
            Ok(Report {
                result: json!({ "example": example.name(), "matches_golden": matches, "output": out }),
                text,
                exit: if matches { 0 } else { EXIT_MISMATCH },
            })
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Tableaux { .. } => "tableaux",
        Command::Basis { .. } => "basis",
        Command::Straighten { .. } => "straighten",
        Command::Wlp { .. } => "wlp",
        Command::Slp { .. } => "slp",
        Command::Decomp { .. } => "decomp",
        Command::Verify { batch: Some(_), .. } => "batch",
        Command::Verify { .. } => "verify",
        Command::Gb { .. } => "gb",
        Command::Member { .. } => "member",
        Command::Colon { .. } => "colon",
        Command::Intersect { .. } => "intersect",
        Command::Saturate { .. } => "saturate",
        Command::Hilbert { .. } => "hilbert",
        Command::Reproduce { .. } => "reproduce",
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: u32,
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<Value>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if cli.allow_large {
        eprintln!("warning: parameter caps disabled");
    }
    let command = command_name(&cli.command);
    let (result, error, text, exit) = match run(&cli) {
        Ok(r) => (Some(r.result), None, r.text, r.exit),
        Err(f) => {
            eprintln!("error: {}", f.error);
            let err = json!({ "kind": error_kind(&f.error), "message": f.error.to_string() });
            (None, Some(err), String::new(), f.exit)
        }
    };
    if cli.json {
        let env = Envelope {
            schema_version: SCHEMA_VERSION,
            command,
            result,
            error,
        };
        println!("{}", serde_json::to_string_pretty(&env).expect("envelope serializes"));
    } else {
        print!("{text}");
    }
    ExitCode::from(exit)
}
