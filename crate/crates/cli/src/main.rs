//! `hodge`: Hurwitz tables, identity verification and exact series dumps.
//!
//! Exit codes: 0 on success, 1 when an identity fails, 2 on usage errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hodge_core::hurwitz::{hurwitz_table, HurwitzTable, Method};
use hodge_core::partitions::Partition;
use hodge_core::suite::{Suite, SuiteConfig, Verifier};
use hodge_core::{hurwitz, mv};
use serde_json::{json, Value};

/// Default directory for output files when `--out` is not given.
const OUT_DIR_ENV: &str = "HODGE_OUT_DIR";

#[derive(Parser)]
#[command(name = "hodge", version, about = "Exact Mariño–Vafa / ELSV / Hodge integral engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate Hurwitz numbers H_{g,μ}.
    Hurwitz(HurwitzArgs),
    /// Run identity suites and emit a JSON report.
    Verify(VerifyArgs),
    /// Dump an exact series as JSON.
    Series(SeriesArgs),
}

#[derive(Parser)]
struct HurwitzArgs {
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    max_weight: u32,
    #[arg(long, default_value_t = 3)]
    max_genus: u32,
    #[arg(long, value_enum, default_value_t = MethodArg::Burnside)]
    method: MethodArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Output file; defaults to stdout, or a file under $HODGE_OUT_DIR when set.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Parser)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::All)]
    suite: SuiteArg,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    max_genus: u32,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    max_weight: u32,
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    lambda_order: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Parser)]
struct SeriesArgs {
    #[arg(long, value_enum)]
    target: Target,
    /// Partition such as `2.1`, for `V` and `limit-lambda-g`.
    #[arg(long)]
    partition: Option<String>,
    /// Highest λ exponent; for `V` counted from the leading pole `λ^{-|ν|}`.
    #[arg(long, default_value_t = 8)]
    order: u32,
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    max_weight: u32,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Burnside,
    Oracle,
    Cutjoin,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    MvCutjoin,
    Elsv,
    LambdaG,
    Cubic,
    #[value(name = "g-minus-1")]
    GMinus1,
    Mumford,
    Bernoulli,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    #[value(name = "R")]
    R,
    #[value(name = "Phi")]
    Phi,
    #[value(name = "V")]
    V,
    LimitElsv,
    LimitLambdaG,
}

enum Failure {
    Usage(String),
    Identity(String),
    Io(String),
}

impl From<hodge_core::Error> for Failure {
    fn from(e: hodge_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Hurwitz(a) => cmd_hurwitz(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Series(a) => cmd_series(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity(msg)) => {
            eprintln!("identity failure: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("i/o error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn emit(out: Option<PathBuf>, default_name: &str, body: &str) -> Result<(), Failure> {
    let path = out.or_else(|| std::env::var_os(OUT_DIR_ENV).map(|d| Path::new(&d).join(default_name)));
    match path {
        Some(p) => {
            if let Some(parent) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(parent).map_err(|e| Failure::Io(format!("{}: {e}", parent.display())))?;
            }
            fs::write(&p, body).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))
        }
        None => io::stdout().lock().write_all(body.as_bytes()).map_err(|e| Failure::Io(e.to_string())),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn cmd_hurwitz(a: HurwitzArgs) -> Result<(), Failure> {
    let methods: Vec<Method> = match a.method {
        MethodArg::Burnside => vec![Method::Burnside],
        MethodArg::Oracle => vec![Method::Oracle],
        MethodArg::Cutjoin => vec![Method::Cutjoin],
        MethodArg::All => Method::ALL.to_vec(),
    };
    let mut table = hurwitz_table(a.max_weight as usize, a.max_genus as usize, &methods)?;
    // H_{g,(1)} = 0 for g ≥ 1 are the only vanishing entries; omit them
    table.entries.retain(|e| !is_zero(&e.h));
    let disagreements = table.disagreements();
    let body = match a.format {
        Format::Json => {
            let mut v = json!({"entries": table.entries, "skipped": table.skipped});
            if methods.len() > 1 {
                v["crossCheck"] = json!({"disagreements": disagreements});
            }
            pretty(&v)
        }
        Format::Csv => csv_with_diff(&table, methods.len() > 1),
    };
    let name = format!("hurwitz.{}", if a.format == Format::Csv { "csv" } else { "json" });
    emit(a.out, &name, &body)?;
    if let Some(d) = disagreements.first() {
        return Err(Failure::Identity(format!("methods disagree at g = {}, mu = {}", d.g, d.mu)));
    }
    Ok(())
}

fn is_zero(q: &hodge_core::exact::Rational) -> bool {
    *q.numer() == 0.into()
}

fn csv_with_diff(table: &HurwitzTable, cross_check: bool) -> String {
    let mut out = table.to_csv();
    if cross_check {
        out.push_str("\ng,mu,burnside,oracle,cutjoin\n");
        for d in table.disagreements() {
            let col = |m: Method| d.values.get(&m).cloned().unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                d.g,
                d.mu.canonical_string(),
                col(Method::Burnside),
                col(Method::Oracle),
                col(Method::Cutjoin)
            ));
        }
    }
    out
}

fn cmd_verify(a: VerifyArgs) -> Result<(), Failure> {
    let suite: Suite = match a.suite {
        SuiteArg::All => Suite::All,
        SuiteArg::MvCutjoin => Suite::MvCutjoin,
        SuiteArg::Elsv => Suite::Elsv,
        SuiteArg::LambdaG => Suite::LambdaG,
        SuiteArg::Cubic => Suite::Cubic,
        SuiteArg::GMinus1 => Suite::GMinus1,
        SuiteArg::Mumford => Suite::Mumford,
        SuiteArg::Bernoulli => Suite::Bernoulli,
    };
    let cfg = SuiteConfig {
        max_weight: a.max_weight as usize,
        max_genus: a.max_genus as usize,
        lambda_order: a.lambda_order as i64,
    };
    let run = Verifier::new(cfg)?.run(suite)?;
    emit(a.out, &format!("verify-{suite}.json"), &pretty(&run.to_json()))?;
    match run.first_failure() {
        Some(r) => Err(Failure::Identity(serde_json::to_string(r).expect("serializable"))),
        None => Ok(()),
    }
}

fn partition_arg(a: &SeriesArgs) -> Result<Partition, Failure> {
    let s = a.partition.as_deref().ok_or_else(|| Failure::Usage("this target needs --partition".into()))?;
    Ok(Partition::parse(s)?)
}

fn cmd_series(a: SeriesArgs) -> Result<(), Failure> {
    let order = a.order as i64;
    let d = a.max_weight as usize;
    let (name, v) = match a.target {
        Target::V => {
            let nu = partition_arg(&a)?;
            let s = mv::quantum_dim(&nu, order - nu.weight() as i64);
            (
                format!("series-V-{}.json", nu.canonical_string()),
                json!({"target": "V", "partition": nu, "series": s.to_json()}),
            )
        }
        Target::LimitLambdaG => {
            let mu = partition_arg(&a)?;
            let r = mv::build_r(mu.weight(), order + mu.len() as i64 - 2)?;
            let s = mv::limit_lambda_g(&r, &mu).map_err(|e| Failure::Identity(e.to_string()))?.truncate(order);
            (
                format!("series-limit-lambda-g-{}.json", mu.canonical_string()),
                json!({"target": "limit-lambda-g", "partition": mu, "series": s.to_json()}),
            )
        }
        Target::Phi => {
            let phi = hurwitz::burnside_phi(d, order)?;
            ("series-Phi.json".into(), json!({"target": "Phi", "maxWeight": d, "series": phi.to_json()}))
        }
        Target::R => {
            let r = mv::build_r(d, order)?;
            ("series-R.json".into(), json!({"target": "R", "maxWeight": d, "series": r.r.to_json()}))
        }
        Target::LimitElsv => {
            let r = mv::build_r(d, order)?;
            let lim = mv::limit_elsv(&r, order).map_err(|e| Failure::Identity(e.to_string()))?;
            ("series-limit-elsv.json".into(), json!({"target": "limit-elsv", "maxWeight": d, "series": lim.to_json()}))
        }
    };
    emit(a.out, &name, &pretty(&v))
}
