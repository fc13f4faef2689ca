use std::fmt::Display;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;
use srd_core::enumerate::{self, SeqClass};
use srd_core::recur::{self, QTable};
use srd_core::verify::{self, IdentityReport, Suite, VerifyConfig};
use srd_core::{IntPoly, SignedSeq};

/// Largest `n` accepted by `table` and `seq`.
const TABLE_MAX: usize = 200;
/// Largest `n` accepted by `enumerate`.
const LIST_MAX: usize = 7;

#[derive(Parser)]
#[command(
    name = "srd",
    version,
    about = "Bar-tracking polynomials of signed relative derangements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    JsonLines,
    Bfile,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqName {
    #[value(name = "D")]
    D,
    #[value(name = "Q")]
    Q,
    #[value(name = "QB")]
    Qb,
    #[value(name = "DB")]
    Db,
    #[value(name = "f")]
    F,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Identities,
    Lemmas,
    Injections,
    Series,
    Stats,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Lemmas => Suite::Lemmas,
            SuiteArg::Injections => Suite::Injections,
            SuiteArg::Series => Suite::Series,
            SuiteArg::Stats => Suite::Stats,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print Q_n^B(t).
    Poly {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Print the coefficient triangle q_{n,m} for rows 0..=n-max.
    Table {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Print a counting sequence for n = 1..=n-max.
    Seq {
        #[arg(long, value_enum)]
        name: SeqName,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 6)]
        n_max_oracle: usize,
        #[arg(long, default_value_t = 30)]
        n_max_rec: usize,
        #[arg(long, default_value_t = 20)]
        series_order: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long, hide = true)]
        corrupt_q3: bool,
    },
    /// List every sequence of a class on [n].
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_class)]
        class: SeqClass,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

fn parse_class(s: &str) -> Result<SeqClass, String> {
    s.parse().map_err(|e: srd_core::Error| e.to_string())
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Out<'a> = &'a mut dyn Write;

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn guard(what: &str, n: usize, max: usize) -> Result<(), Failure> {
    if n > max {
        return usage(format!("{what} must be at most {max}, got {n}"));
    }
    Ok(())
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

fn joined(values: &[BigInt], sep: &str) -> String {
    strings(values).join(sep)
}

/// Coefficients low to high; the zero polynomial renders as a single 0.
fn coefficient_list(p: &IntPoly) -> Vec<BigInt> {
    if p.is_zero() {
        vec![BigInt::default()]
    } else {
        p.coeffs().to_vec()
    }
}

fn write_bfile(out: Out, values: impl IntoIterator<Item = impl Display>) -> io::Result<()> {
    for (i, v) in values.into_iter().enumerate() {
        writeln!(out, "{} {v}", i + 1)?;
    }
    Ok(())
}

fn cmd_poly(out: Out, n: usize, format: Format) -> Result<bool, Failure> {
    let p = recur::poly_q_b(n);
    let coeffs = coefficient_list(&p);
    match format {
        Format::Table => writeln!(out, "{p}")?,
        Format::Csv => writeln!(out, "{}", joined(&coeffs, ","))?,
        Format::JsonLines => writeln!(
            out,
            "{}",
            json!({ "n": n, "coefficients": strings(&coeffs) })
        )?,
        Format::Bfile => write_bfile(out, &coeffs)?,
    }
    Ok(true)
}

fn cmd_table(out: Out, n_max: usize, format: Format) -> Result<bool, Failure> {
    guard("--n-max", n_max, TABLE_MAX)?;
    let table = QTable::build(n_max);
    let rows = &table.rows()[..=n_max];
    match format {
        Format::Table => {
            for row in rows {
                writeln!(out, "{}", joined(row, " "))?;
            }
        }
        Format::Csv => {
            for row in rows {
                writeln!(out, "{}", joined(row, ","))?;
            }
        }
        Format::JsonLines => {
            for (n, row) in rows.iter().enumerate() {
                writeln!(out, "{}", json!({ "n": n, "coefficients": strings(row) }))?;
            }
        }
        Format::Bfile => write_bfile(out, rows.iter().flatten())?,
    }
    Ok(true)
}

fn cmd_seq(out: Out, name: SeqName, n_max: usize, format: Format) -> Result<bool, Failure> {
    guard("--n-max", n_max, TABLE_MAX)?;
    let all = match name {
        SeqName::D => recur::d_seq(n_max),
        SeqName::Q => recur::q_seq(n_max),
        SeqName::Qb => recur::qb_seq(n_max),
        SeqName::Db => recur::db_seq(n_max),
        SeqName::F => recur::f_seq(n_max),
    };
    let values = &all[1..=n_max];
    match format {
        Format::Table => writeln!(out, "{}", joined(values, " "))?,
        Format::Csv => {
            writeln!(out, "n,value")?;
            for (i, v) in values.iter().enumerate() {
                writeln!(out, "{},{v}", i + 1)?;
            }
        }
        Format::JsonLines => {
            for (i, v) in values.iter().enumerate() {
                writeln!(out, "{}", json!({ "n": i + 1, "value": v.to_string() }))?;
            }
        }
        Format::Bfile => write_bfile(out, values)?,
    }
    Ok(true)
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_owned()
    }
}

fn write_reports(out: Out, reports: &[IdentityReport], format: Format) -> Result<(), Failure> {
    match format {
        Format::Table => {
            for r in reports {
                writeln!(out, "{r}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "id,n_lo,n_hi,passed,counterexample")?;
            for r in reports {
                let ce = r.counterexample.as_deref().unwrap_or("");
                let (lo, hi) = r.n_range;
                writeln!(
                    out,
                    "{},{lo},{hi},{},{}",
                    csv_field(&r.id),
                    r.passed,
                    csv_field(ce)
                )?;
            }
        }
        Format::JsonLines => {
            for r in reports {
                let line = json!({
                    "id": r.id,
                    "n_lo": r.n_range.0,
                    "n_hi": r.n_range.1,
                    "passed": r.passed,
                    "counterexample": r.counterexample,
                });
                writeln!(out, "{line}")?;
            }
        }
        Format::Bfile => return usage("bfile output is not available for verify"),
    }
    Ok(())
}

fn cmd_verify(out: Out, suite: Suite, cfg: &VerifyConfig, format: Format) -> Result<bool, Failure> {
    if format == Format::Bfile {
        return usage("bfile output is not available for verify");
    }
    let reports = verify::run_suite(suite, cfg).map_err(|e| Failure::Usage(e.to_string()))?;
    write_reports(out, &reports, format)?;
    Ok(verify::all_passed(&reports))
}

fn entries_json(s: &SignedSeq) -> serde_json::Value {
    s.entries()
        .iter()
        .map(|e| json!({ "value": e.value, "barred": e.barred }))
        .collect()
}

fn cmd_enumerate(out: Out, n: usize, class: SeqClass, format: Format) -> Result<bool, Failure> {
    guard("--n", n, LIST_MAX)?;
    if format == Format::Bfile {
        return usage("bfile output is not available for enumerate");
    }
    let seqs = enumerate::collect_class(n, class);
    match format {
        Format::Table => {
            for s in &seqs {
                writeln!(out, "{s}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "index,position,value,barred")?;
            for (i, s) in seqs.iter().enumerate() {
                for (pos, e) in s.entries().iter().enumerate() {
                    writeln!(out, "{},{},{},{}", i + 1, pos + 1, e.value, e.barred)?;
                }
            }
        }
        Format::JsonLines => {
            for (i, s) in seqs.iter().enumerate() {
                let line =
                    json!({ "index": i + 1, "bars": s.bar_count(), "entries": entries_json(s) });
                writeln!(out, "{line}")?;
            }
        }
        Format::Bfile => unreachable!("rejected above"),
    }
    Ok(true)
}

fn run(cli: Cli, out: Out) -> Result<bool, Failure> {
    match cli.command {
        Command::Poly { n, format } => cmd_poly(out, n, format),
        Command::Table { n_max, format } => cmd_table(out, n_max, format),
        Command::Seq {
            name,
            n_max,
            format,
        } => cmd_seq(out, name, n_max, format),
        Command::Verify {
            suite,
            n_max_oracle,
            n_max_rec,
            series_order,
            format,
            corrupt_q3,
        } => {
            let cfg = VerifyConfig {
                n_max_rec,
                n_max_oracle,
                series_order,
                corrupt_q3,
            };
            cmd_verify(out, suite.into(), &cfg, format)
        }
        Command::Enumerate { n, class, format } => cmd_enumerate(out, n, class, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
