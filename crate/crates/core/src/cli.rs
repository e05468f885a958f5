//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure (or an output file that
//! could not be written), 2 usage error, 3 precision-certification failure.
//!
//! JSON field names:
//! - `verlinde`: `rank`, `level`, `genus`, `value`, `error_bound`
//! - `degree`: `rank`, `genus`, `shape{offset,dimension}`, `p_values[{n,value}]`,
//!   `coefficients{offset,alpha,c_top}`, `base_locus_count`, `degree`
//! - `ssets`: list of `{kappa, parity, s_set}` with canonical encodings
//! - `verify`: see [`crate::report`]

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::f2geometry::{self, ThetaCharacteristic};
use crate::pipeline::{self, PipelineError};
use crate::report;
use crate::tables;
use crate::verlinde::{self, EvalOptions, VerlindeError, VerlindeQuery};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_PRECISION: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "thetamap", version, about = "Theta-characteristic combinatorics and the degree of the rank-4 theta map in genus 2")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every invariant suite.
    Verify {
        #[arg(long)]
        json: bool,
    },
    /// Verlinde table, interpolation coefficients and the degree of the theta map.
    Degree {
        #[arg(long, default_value_t = pipeline::SUPPORTED_RANK)]
        rank: u32,
        #[arg(long)]
        json: bool,
    },
    /// S(κ) for one theta-characteristic, or for all sixteen.
    Ssets {
        /// Odd subset of 1..6, e.g. "1" or "1,2,3".
        #[arg(long)]
        kappa: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// One certified Verlinde number.
    Verlinde {
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        level: u32,
        #[arg(long)]
        genus: u32,
        /// Fixed working precision in bits; disables escalation.
        #[arg(long)]
        precision: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Canonical CSV tables.
    Tables {
        #[arg(long, value_enum)]
        which: Table,
        /// Write to this file instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Table {
    #[value(name = "P")]
    P,
    #[value(name = "alpha")]
    Alpha,
    #[value(name = "ssets")]
    Ssets,
}

#[derive(Debug, Serialize)]
struct SSetRow {
    kappa: String,
    parity: String,
    s_set: Vec<String>,
}

fn sset_rows(kappas: &[ThetaCharacteristic]) -> Vec<SSetRow> {
    kappas
        .iter()
        .map(|&k| SSetRow {
            kappa: k.to_string(),
            parity: k.parity().to_string(),
            s_set: f2geometry::s_set(k).iter().map(|a| a.to_string()).collect(),
        })
        .collect()
}

fn pipeline_exit(e: &PipelineError) -> u8 {
    match e {
        PipelineError::UnsupportedRank(_) => EXIT_USAGE,
        PipelineError::Verlinde(v) => verlinde_exit(v),
        PipelineError::Hilbert(_) => EXIT_VERIFY_FAILED,
    }
}

fn verlinde_exit(e: &VerlindeError) -> u8 {
    match e {
        VerlindeError::Certification { .. } => EXIT_PRECISION,
        _ => EXIT_USAGE,
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

/// Runs one parsed command, writing normal output to `out` and diagnostics
/// to `err`. Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_VERIFY_FAILED
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<u8> {
    match cmd {
        Command::Verify { json } => {
            let rep = report::run_all();
            if json {
                writeln!(out, "{}", to_json(&rep))?;
            } else {
                write!(out, "{}", rep.render_table())?;
            }
            Ok(match rep.overall {
                report::Outcome::Pass => EXIT_OK,
                report::Outcome::Fail => EXIT_VERIFY_FAILED,
            })
        }
        Command::Degree { rank, json } => match pipeline::degree_pipeline(rank) {
            Ok(r) => {
                if json {
                    writeln!(out, "{}", to_json(&r))?;
                } else {
                    writeln!(out, "Verlinde numbers, rank {}, genus {}", r.rank, r.genus)?;
                    write!(out, "{}", tables::p_table_csv(&r.p_values))?;
                    writeln!(out)?;
                    writeln!(out, "interpolation coefficients (alpha_k = 0 for k < {})", r.shape.offset)?;
                    write!(out, "{}", tables::alpha_table_csv(&r.coefficients))?;
                    writeln!(out)?;
                    writeln!(out, "c_{} = {}", r.shape.dimension, r.coefficients.c_top)?;
                    writeln!(out, "base locus count = {}", r.base_locus_count)?;
                    writeln!(out, "deg theta = {}", r.degree)?;
                }
                Ok(EXIT_OK)
            }
            Err(e) => {
                writeln!(err, "error: {e}")?;
                Ok(pipeline_exit(&e))
            }
        },
        Command::Ssets { kappa, json } => {
            let kappas = match kappa {
                Some(spec) => match spec.parse::<ThetaCharacteristic>() {
                    Ok(k) => vec![k],
                    Err(e) => {
                        writeln!(err, "error: invalid --kappa {spec:?}: {e}")?;
                        return Ok(EXIT_USAGE);
                    }
                },
                None => ThetaCharacteristic::all(),
            };
            if json {
                writeln!(out, "{}", to_json(&sset_rows(&kappas)))?;
            } else {
                for &k in &kappas {
                    let s = f2geometry::s_set(k);
                    writeln!(out, "{{{k}}} ({}): {}", k.parity(), tables::braced_list(s.iter()))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verlinde {
            rank,
            level,
            genus,
            precision,
            json,
        } => {
            let q = match VerlindeQuery::new(rank, level, genus) {
                Ok(q) => q,
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    return Ok(EXIT_USAGE);
                }
            };
            let opts = precision.map(EvalOptions::fixed).unwrap_or_default();
            match verlinde::verlinde_number_with(q, &opts) {
                Ok(r) => {
                    if json {
                        writeln!(out, "{}", to_json(&r))?;
                    } else {
                        writeln!(
                            out,
                            "P(r={}, n={}, g={}) = {}  (error bound {:.3e}, {} bits)",
                            rank, level, genus, r.value, r.error_bound, r.precision_bits
                        )?;
                    }
                    Ok(EXIT_OK)
                }
                Err(e) => {
                    writeln!(err, "error: {e}")?;
                    Ok(verlinde_exit(&e))
                }
            }
        }
        Command::Tables { which, csv } => {
            let text = match which {
                Table::Ssets => tables::ssets_csv(&ThetaCharacteristic::all()),
                Table::P | Table::Alpha => match pipeline::degree_pipeline(pipeline::SUPPORTED_RANK) {
                    Ok(r) if which == Table::P => tables::p_table_csv(&r.p_values),
                    Ok(r) => tables::alpha_table_csv(&r.coefficients),
                    Err(e) => {
                        writeln!(err, "error: {e}")?;
                        return Ok(pipeline_exit(&e));
                    }
                },
            };
            match csv {
                Some(path) => std::fs::write(&path, text)?,
                None => write!(out, "{text}")?,
            }
            Ok(EXIT_OK)
        }
    }
}
