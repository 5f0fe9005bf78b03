use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use qgcount::burnside::{self, count_with_progress};
use qgcount::oracle::{direct_fix_count_with, OracleConfig, DEFAULT_ORACLE_BOUND};
use qgcount::{all_cycle_types, class_fix_count, isomorphic_by_bijection, Error, Structure};
use serde_json::json;

mod verify;

/// Counts right quasigroups with identity up to isomorphism.
#[derive(Parser, Debug)]
#[command(name = "qgcount", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads; 0 means one per core.
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,

    /// Largest order the brute-force oracle will enumerate.
    #[arg(long, default_value_t = DEFAULT_ORACLE_BOUND, global = true)]
    oracle_bound: usize,

    /// Run the oracle past its bound anyway.
    #[arg(long, global = true)]
    force_oracle: bool,

    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0x5eed, global = true)]
    seed: u64,

    /// Suppress progress on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print QG(N).
    Count { n: usize },
    /// Per-class table of the class sum for order N.
    Table { n: usize },
    /// QG(1), ..., QG(NMAX).
    Sequence { n_max: usize },
    /// Cross-check the class sum against the exhaustive oracle at order N.
    Verify { n: usize },
    /// Per-class fixed points, counted directly and by formula.
    Fix { n: usize },
    /// Isomorphism test between two table or transversal files.
    Iso { a: PathBuf, b: PathBuf },
    /// Convert a table file to its transversal, or a transversal to its table.
    Convert { a: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// Exit status: 0 success, 1 negative verdict or failed check, 2 usage error.
enum Outcome {
    Ok,
    Negative,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut out = String::new();
    let result = run(&cli, &mut out);
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    let _ = lock.write_all(out.as_bytes());
    let _ = lock.flush();
    match result {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Negative) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn oracle_config(cli: &Cli) -> OracleConfig {
    OracleConfig {
        bound: cli.oracle_bound,
        force: cli.force_oracle,
    }
}

fn positive(n: usize) -> Result<usize, Error> {
    if n == 0 {
        Err(Error::ZeroOrder)
    } else {
        Ok(n)
    }
}

fn run(cli: &Cli, out: &mut String) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Count { n } => {
            let n = positive(*n)?;
            let quiet = cli.quiet;
            let progress = |done: usize, total: usize| {
                if !quiet && total >= 10_000 {
                    eprintln!("classes {done}/{total}");
                }
            };
            let c = count_with_progress(n, Some(&progress))?;
            match cli.format {
                Format::Text => out.push_str(&format!("{}\n", c.qg)),
                Format::Json => push_json(
                    out,
                    &json!({
                        "n": c.n,
                        "classes": c.classes,
                        "total_sum": c.total_sum.to_string(),
                        "qg": c.qg.to_string(),
                    }),
                ),
                Format::Csv => out.push_str(&format!("n,qg\n{},{}\n", c.n, c.qg)),
            }
        }
        Command::Table { n } => {
            let t = burnside::census(positive(*n)?)?;
            match cli.format {
                Format::Text => out.push_str(&t.to_text()),
                Format::Json => push_json(out, &t.to_json()),
                Format::Csv => out.push_str(&t.to_csv()),
            }
        }
        Command::Sequence { n_max } => {
            let seq = burnside::sequence(positive(*n_max)?)?;
            match cli.format {
                Format::Text => {
                    for (n, q) in &seq {
                        out.push_str(&format!("{n} {q}\n"));
                    }
                }
                Format::Json => {
                    let v: Vec<_> = seq
                        .iter()
                        .map(|(n, q)| json!({"n": n, "qg": q.to_string()}))
                        .collect();
                    push_json(out, &v);
                }
                Format::Csv => {
                    out.push_str("n,qg\n");
                    for (n, q) in &seq {
                        out.push_str(&format!("{n},{q}\n"));
                    }
                }
            }
        }
        Command::Verify { n } => {
            let started = Instant::now();
            let report = verify::run(positive(*n)?, oracle_config(cli), cli.seed)?;
            if !cli.quiet {
                eprintln!("verify {n}: {:.2?}", started.elapsed());
            }
            match cli.format {
                Format::Json => push_json(out, &report.to_json()),
                Format::Csv => {
                    out.push_str("check,status,detail\n");
                    for c in &report.checks {
                        out.push_str(&format!(
                            "{},{},\"{}\"\n",
                            c.name,
                            status(c.passed),
                            c.detail
                        ));
                    }
                }
                Format::Text => {
                    for c in &report.checks {
                        out.push_str(&format!("{} {}: {}\n", status(c.passed), c.name, c.detail));
                    }
                }
            }
            if !report.all_passed() {
                return Ok(Outcome::Negative);
            }
        }
        Command::Fix { n } => {
            let n = positive(*n)?;
            let config = oracle_config(cli);
            let mut rows = Vec::new();
            let mut all_ok = true;
            for t in all_cycle_types(n - 1) {
                let rep = t.representative();
                let direct = direct_fix_count_with(&rep, n, config)?;
                let formula = class_fix_count(&t);
                all_ok &= direct == formula;
                rows.push((t, rep, direct, formula));
            }
            match cli.format {
                Format::Text => {
                    out.push_str("class | represent. | direct | formula | status\n");
                    for (t, rep, d, f) in &rows {
                        out.push_str(&format!(
                            "{} | {} | {} | {} | {}\n",
                            t.partition_string(),
                            rep.to_cycle_string(),
                            d,
                            f,
                            status(d == f)
                        ));
                    }
                }
                Format::Csv => {
                    out.push_str("partition,representative,direct,formula,status\n");
                    for (t, rep, d, f) in &rows {
                        out.push_str(&format!(
                            "{},\"{}\",{},{},{}\n",
                            t.partition_string(),
                            rep.to_cycle_string(),
                            d,
                            f,
                            status(d == f)
                        ));
                    }
                }
                Format::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|(t, rep, d, f)| {
                            json!({
                                "partition": t.partition_string(),
                                "representative": rep.to_cycle_string(),
                                "direct": d.to_string(),
                                "formula": f.to_string(),
                                "passed": d == f,
                            })
                        })
                        .collect();
                    push_json(out, &json!({"n": n, "classes": v}));
                }
            }
            if !all_ok {
                return Ok(Outcome::Negative);
            }
        }
        Command::Iso { a, b } => {
            let ta = load(a)?.into_table();
            let tb = load(b)?.into_table();
            if ta.order() != tb.order() {
                return Err(Error::OrderMismatch(ta.order(), tb.order()));
            }
            let witness = isomorphic_by_bijection(&ta, &tb);
            match cli.format {
                Format::Json => push_json(
                    out,
                    &json!({
                        "isomorphic": witness.is_some(),
                        "witness": witness.as_ref().map(|w| w.to_cycle_string()),
                    }),
                ),
                Format::Text | Format::Csv => match &witness {
                    Some(w) => out.push_str(&format!("{}\n", w.to_cycle_string())),
                    None => out.push_str("not isomorphic\n"),
                },
            }
            if witness.is_none() {
                return Ok(Outcome::Negative);
            }
        }
        Command::Convert { a } => match (load(a)?, cli.format) {
            (Structure::Table(t), Format::Json) => push_json(out, &t.to_transversal().to_json()),
            (Structure::Table(t), _) => out.push_str(&t.to_transversal().to_text()),
            (Structure::Transversal(t), Format::Json) => {
                push_json(out, &qgcount::CayleyTable::from_transversal(&t).to_json())
            }
            (Structure::Transversal(t), _) => {
                out.push_str(&qgcount::CayleyTable::from_transversal(&t).to_text())
            }
        },
    }
    Ok(Outcome::Ok)
}

fn status(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

fn push_json<T: serde::Serialize>(out: &mut String, value: &T) {
    out.push_str(&serde_json::to_string_pretty(value).expect("serializable"));
    out.push('\n');
}

fn load(path: &PathBuf) -> Result<Structure, Error> {
    let content =
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Structure::parse(&content).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}
