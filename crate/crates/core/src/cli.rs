//! Command-line surface: table emission plus the verification suite.
//!
//! Every value is emitted as an exact decimal or `p/q` string — never a
//! float — in either JSON-lines or CSV form, so identical invocations
//! produce byte-identical output and every value parses back losslessly.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::Rat;
use crate::bernoulli::bernoulli_at_integer;
use crate::fubini::{fubini_poly, ordered_bell};
use crate::stirling::StirlingTriangle;
use crate::verify::{render_report, run_suite, VerifyConfig};

#[derive(Debug, Parser)]
#[command(
    name = "rstirling",
    version,
    about = "Exact Bernoulli, r-Stirling and Fubini-type number tables with a built-in identity verifier"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Bernoulli polynomial values B_n(r) for n = 0..=n-max
    Bernoulli {
        #[arg(long = "n-max")]
        n_max: usize,
        /// Non-negative integer evaluation point
        #[arg(long, default_value_t = 0)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Rows r..=n-max of the triangle of r-Stirling numbers of the second kind
    Stirling {
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
        /// Restrict the dump to a single column
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// A single Fubini-type polynomial value F_{n,r}(x)
    Fubini {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
        /// Rational evaluation point, e.g. 2 or -5/3
        #[arg(long, allow_hyphen_values = true)]
        x: Rat,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Ordered Bell numbers for n = 0..=n-max
    OrderedBell {
        #[arg(long = "n-max")]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run every identity cross-check; exit 0 on full agreement
    Verify {
        #[arg(long = "n-max", default_value_t = 40)]
        n_max: usize,
        /// Largest r exercised
        #[arg(long, default_value_t = 8)]
        r: usize,
        #[arg(long = "egf-order", default_value_t = 32)]
        egf_order: usize,
        /// Evaluation point for the integrated log identity (repeatable);
        /// defaults to -1, 1/2 and 2
        #[arg(long = "s", allow_hyphen_values = true)]
        s: Vec<Rat>,
        /// Corrupt one triangle entry so the suite must fail (test hook)
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Debug, Serialize)]
struct Indices {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    x: Option<String>,
}

impl Indices {
    fn n(n: usize) -> Indices {
        Indices {
            n,
            k: None,
            r: None,
            x: None,
        }
    }
}

/// One emitted value with the indices that identify it.
#[derive(Debug, Serialize)]
struct OutputRecord {
    kind: &'static str,
    indices: Indices,
    value: String,
}

fn emit(records: &[OutputRecord], format: Format, out: &mut impl Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for record in records {
                let line = serde_json::to_string(record).expect("serializable record");
                writeln!(out, "{line}")?;
            }
        }
        Format::Csv => {
            writeln!(out, "kind,n,k,r,x,value")?;
            for record in records {
                let opt = |v: &Option<String>| v.clone().unwrap_or_default();
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    record.kind,
                    record.indices.n,
                    record.indices.k.map_or(String::new(), |k| k.to_string()),
                    record.indices.r.map_or(String::new(), |r| r.to_string()),
                    opt(&record.indices.x),
                    record.value
                )?;
            }
        }
    }
    Ok(())
}

fn usage_error(message: &str) -> u8 {
    eprintln!("error: {message}");
    2
}

/// Parse arguments from the process environment and dispatch.
pub fn run() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match dispatch(cli.command, &mut stdout.lock()) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::FAILURE
        }
    }
}

fn dispatch(command: Command, out: &mut impl Write) -> std::io::Result<u8> {
    match command {
        Command::Bernoulli { n_max, r, format } => {
            let records: Vec<OutputRecord> = (0..=n_max)
                .map(|n| {
                    let indices = if r == 0 {
                        Indices::n(n)
                    } else {
                        Indices {
                            r: Some(r),
                            ..Indices::n(n)
                        }
                    };
                    OutputRecord {
                        kind: if r == 0 {
                            "bernoulli_number"
                        } else {
                            "bernoulli_at_integer"
                        },
                        indices,
                        value: bernoulli_at_integer(n, r).to_string(),
                    }
                })
                .collect();
            emit(&records, format, out)?;
            Ok(0)
        }
        Command::Stirling {
            n_max,
            r,
            k,
            format,
        } => {
            if n_max < r {
                return Ok(usage_error(&format!(
                    "--n-max ({n_max}) must be at least --r ({r})"
                )));
            }
            let triangle = StirlingTriangle::build(r, n_max).expect("n_max >= r");
            let mut records = Vec::new();
            for n in r..=n_max {
                for (column, value) in triangle.row(n).iter().enumerate() {
                    if k.is_some_and(|want| want != column) {
                        continue;
                    }
                    records.push(OutputRecord {
                        kind: if r == 0 { "stirling" } else { "r_stirling" },
                        indices: Indices {
                            k: Some(column),
                            r: (r > 0).then_some(r),
                            ..Indices::n(n)
                        },
                        value: value.to_string(),
                    });
                }
            }
            emit(&records, format, out)?;
            Ok(0)
        }
        Command::Fubini { n, r, x, format } => {
            let value = fubini_poly(n, r).eval(&x);
            let record = OutputRecord {
                kind: "fubini_value",
                indices: Indices {
                    r: Some(r),
                    x: Some(x.to_string()),
                    ..Indices::n(n)
                },
                value: value.to_string(),
            };
            emit(std::slice::from_ref(&record), format, out)?;
            Ok(0)
        }
        Command::OrderedBell { n_max, format } => {
            let records: Vec<OutputRecord> = (0..=n_max)
                .map(|n| OutputRecord {
                    kind: "ordered_bell",
                    indices: Indices::n(n),
                    value: ordered_bell(n).to_string(),
                })
                .collect();
            emit(&records, format, out)?;
            Ok(0)
        }
        Command::Verify {
            n_max,
            r,
            egf_order,
            s,
            inject_fault,
        } => {
            let defaults = VerifyConfig::default();
            let config = VerifyConfig {
                max_n: n_max,
                max_r: r,
                egf_order,
                s_values: if s.is_empty() { defaults.s_values } else { s },
                corrupt_triangle: inject_fault,
            };
            let all_ok = render_report(&run_suite(&config), out)?;
            Ok(if all_ok { 0 } else { 1 })
        }
    }
}
