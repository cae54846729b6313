//! The `recip` command line: sweeps and single computations, reported as CSV
//! or JSON.
//!
//! Exit status: 0 when every record passes, 1 when some record violates its
//! identity (the record is echoed to stderr), 2 on invalid usage.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::{is_prime, quartic_symbol};
use crate::error::Error;
use crate::forms::ClassRow;
use crate::laws::{
    check_hilbert_triple, sweep_explore, sweep_hilbert, sweep_scholz, sweep_supplement, verify_hilbert_composite, Record,
    Summary,
};
use crate::quadring::fundamental_unit;
use crate::symbols::{eps_symbol, lambda_symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Verify reciprocity laws for real quadratic fields over prime ranges.
#[derive(Debug, Parser)]
#[command(name = "recip", version)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub workers: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Scholz's law for all pairs p < q in [min, max], p = q = 1 mod 4.
    Scholz {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        #[arg(long, default_value_t = 1)]
        min: u64,
    },
    /// The supplementary law for all pairs p < q in [min, max], p = q = 1 mod 8.
    Supplement {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        #[arg(long, default_value_t = 1)]
        min: u64,
    },
    /// The composite law for one triple or a range of triples.
    Hilbert {
        #[arg(long, requires_all = ["q", "r"], conflicts_with_all = ["pqmax", "rmax"])]
        p: Option<u64>,
        #[arg(long, requires_all = ["p", "r"])]
        q: Option<u64>,
        #[arg(long, requires_all = ["p", "q"])]
        r: Option<u64>,
        #[arg(long, requires = "rmax")]
        pqmax: Option<u64>,
        #[arg(long, requires = "pqmax")]
        rmax: Option<u64>,
    },
    /// Data for the odd-prime analogue of the supplementary law.
    Explore {
        #[arg(long)]
        ell: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
    },
    /// A single quantity.
    Compute {
        #[command(subcommand)]
        what: Quantity,
    },
}

#[derive(Debug, Subcommand)]
pub enum Quantity {
    EpsSymbol { p: u64, q: u64 },
    LambdaSymbol { p: u64, q: u64 },
    ClassNumber { disc: i64 },
    FundamentalUnit { m: i64 },
    Quartic { p: u64, q: u64 },
}

struct Usage(String);

impl Usage {
    fn flag(flag: &str, e: impl std::fmt::Display) -> Usage {
        Usage(format!("invalid value for {flag}: {e}"))
    }
}

enum Failure {
    Usage(Usage),
    Compute(Error),
}

impl From<Usage> for Failure {
    fn from(u: Usage) -> Self {
        Failure::Usage(u)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

struct Report {
    body: String,
    violations: Vec<String>,
}

#[derive(Serialize)]
struct JsonReport<'a, R> {
    records: &'a [R],
    summary: Summary<R>,
}

fn render<R: Record + Clone>(records: &[R], format: Format) -> Report {
    let summary = Summary::of(records);
    let violations = summary.violations.iter().map(R::csv_row).collect();
    let body = match format {
        Format::Csv => {
            let mut s = String::new();
            s.push_str(R::HEADER);
            s.push('\n');
            for r in records {
                s.push_str(&r.csv_row());
                s.push('\n');
            }
            s.push_str(&format!(
                "# total={} passed={} violations={}\n",
                summary.total,
                summary.passed,
                summary.violations.len()
            ));
            s
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&JsonReport { records, summary }).expect("records serialize");
            s.push('\n');
            s
        }
    };
    Report { body, violations }
}

#[derive(Debug, Clone, Serialize)]
struct Computed {
    quantity: &'static str,
    input: String,
    value: String,
}

impl Record for Computed {
    const HEADER: &'static str = "quantity,input,value";

    fn csv_row(&self) -> String {
        format!("{},{},{}", self.quantity, self.input, self.value)
    }

    fn passed(&self) -> bool {
        true
    }
}

fn require_prime(flag: &str, v: u64) -> Result<(), Usage> {
    if is_prime(v) {
        Ok(())
    } else {
        Err(Usage::flag(flag, format!("{v} is not prime")))
    }
}

fn compute(what: &Quantity) -> Result<Vec<Computed>, Failure> {
    let row = |quantity, input: String, value: String| Computed { quantity, input, value };
    let pair = |p: u64, q: u64| -> Result<String, Usage> {
        require_prime("p", p)?;
        require_prime("q", q)?;
        Ok(format!("{p} {q}"))
    };
    // invalid mathematical input is a usage error here
    let usage = |e: Error| Failure::Usage(Usage(e.to_string()));
    Ok(match *what {
        Quantity::EpsSymbol { p, q } => {
            let input = pair(p, q)?;
            vec![row("eps_symbol", input, eps_symbol(p, q).map_err(usage)?.to_string())]
        }
        Quantity::LambdaSymbol { p, q } => {
            let input = pair(p, q)?;
            vec![row("lambda_symbol", input, lambda_symbol(p, q).map_err(usage)?.to_string())]
        }
        Quantity::Quartic { p, q } => {
            let input = pair(p, q)?;
            vec![row("quartic_symbol", input, quartic_symbol(p, q).map_err(usage)?.to_string())]
        }
        Quantity::ClassNumber { disc } => {
            let c = ClassRow::compute(disc).map_err(usage)?;
            let input = disc.to_string();
            vec![
                row("h_plus", input.clone(), c.h_plus.to_string()),
                row("h", input.clone(), c.h.to_string()),
                row("unit_norm", input, c.unit_norm.to_string()),
            ]
        }
        Quantity::FundamentalUnit { m } => {
            let u = fundamental_unit(m).map_err(usage)?;
            let input = m.to_string();
            vec![
                row("epsilon", input.clone(), u.epsilon.to_string()),
                row("norm", input.clone(), u.norm.to_string()),
                row("cf_period", input, u.cf_period.to_string()),
            ]
        }
    })
}

fn execute(config: &RunConfig) -> Result<Report, Failure> {
    let workers = config.workers as usize;
    let format = config.format;
    Ok(match &config.command {
        Command::Scholz { max, min } => render(&sweep_scholz(*min, *max, workers)?, format),
        Command::Supplement { max, min } => render(&sweep_supplement(*min, *max, workers)?, format),
        Command::Hilbert { p: Some(p), q: Some(q), r: Some(r), .. } => {
            require_prime("--p", *p)?;
            require_prime("--q", *q)?;
            require_prime("--r", *r)?;
            check_hilbert_triple(*p, *q, *r).map_err(|e| Usage::flag("--p/--q/--r", e))?;
            render(&[verify_hilbert_composite(*p, *q, *r)?], format)
        }
        Command::Hilbert { pqmax: Some(pq), rmax: Some(r), .. } => render(&sweep_hilbert(*pq, *r, workers)?, format),
        Command::Hilbert { .. } => {
            return Err(Usage("hilbert needs either --p, --q and --r or --pqmax and --rmax".into()).into());
        }
        Command::Explore { ell, max } => {
            if *ell == 2 || !is_prime(*ell) {
                return Err(Usage::flag("--ell", format!("{ell} is not an odd prime")).into());
            }
            render(&sweep_explore(*ell, *max, workers)?, format)
        }
        Command::Compute { what } => render(&compute(what)?, format),
    })
}

/// Runs a parsed configuration and returns the exit status.
pub fn run(config: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let report = match execute(config) {
        Ok(r) => r,
        Err(Failure::Usage(Usage(msg))) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 2;
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            return 1;
        }
    };
    let written = match &config.out {
        Some(path) => fs::write(path, &report.body).map_err(|e| e.to_string()),
        None => stdout.write_all(report.body.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write report: {e}");
        return 2;
    }
    for v in &report.violations {
        let _ = writeln!(stderr, "violation: {v}");
    }
    if report.violations.is_empty() {
        0
    } else {
        1
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(&config, stdout, stderr),
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(text.as_bytes());
                    2
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with(std::iter::once("recip").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn scholz_csv() {
        let (code, out, _) = call(&["scholz", "--max", "60"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some(<crate::laws::ScholzRecord as Record>::HEADER));
        assert!(out.contains("5,29,+1,+1,+1,0,true,true,true"));
        assert!(out.ends_with("violations=0\n"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["scholz", "--max", "10", "--p", "banana"]).0, 2);
        assert_eq!(call(&["scholz", "--max", "banana"]).0, 2);
        assert_eq!(call(&["scholz", "--max", "0"]).0, 2);
        let (code, _, err) = call(&["hilbert", "--p", "3", "--q", "7", "--r", "11"]);
        assert_eq!(code, 2);
        assert!(err.contains("--p/--q/--r"));
        let (code, _, err) = call(&["hilbert", "--p", "4", "--q", "7", "--r", "37"]);
        assert_eq!(code, 2);
        assert!(err.contains("--p"));
        assert_eq!(call(&["hilbert"]).0, 2);
        assert_eq!(call(&["explore", "--ell", "9", "--max", "50"]).0, 2);
        assert_eq!(call(&["compute", "eps-symbol", "5", "13"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn hilbert_json() {
        let (code, out, _) = call(&["hilbert", "--p", "3", "--q", "7", "--r", "37", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let rec = &v["records"][0];
        assert_eq!(rec["eps_pq_r"], 1);
        assert_eq!(rec["eps_r_on_a"], 1);
        assert_eq!(rec["unique_primary_a"], true);
        assert_eq!(v["summary"]["total"], 1);
        assert_eq!(v["summary"]["violations"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn compute_quantities() {
        let (code, out, _) = call(&["compute", "fundamental-unit", "37"]);
        assert_eq!(code, 0);
        assert!(out.contains("epsilon,37,6 + sqrt(37)"));
        assert!(out.contains("norm,37,-1"));
        let (_, out, _) = call(&["compute", "class-number", "145"]);
        assert!(out.contains("h,145,4"));
        let (_, out, _) = call(&["compute", "quartic", "17", "89"]);
        assert!(out.contains("quartic_symbol,17 89,-1"));
    }
}
