//! Command-line surface. Every verb emits machine-readable output on stdout
//! and diagnostics on stderr; exit status 0 on success, 1 on a domain error
//! or failed check, 2 on a usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Result;
use crate::perm::Permutation;
use crate::schubert::{grothendieck_poly, schubert_poly};
use crate::theorem::{
    default_truncation_degree, grothendieck_via_mobius, proof_identity_report, support_poset,
    verify_theorem,
};
use crate::Int;

#[derive(Parser)]
#[command(
    name = "grobius",
    version,
    about = "Schubert and Grothendieck polynomials via divided differences and Möbius inversion"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Schubert polynomial of W as JSON
    Schubert {
        w: String,
        #[arg(long, value_enum, default_value_t = PolyFormat::Json)]
        format: PolyFormat,
    },
    /// Print the Grothendieck polynomial of W as JSON
    Grothendieck {
        w: String,
        /// mobius: one-sum labels on the poset of W; recursion: the
        /// isobaric divided-difference oracle
        #[arg(long, value_enum, default_value_t = Method::Mobius)]
        method: Method,
        #[arg(long, value_enum, default_value_t = PolyFormat::Json)]
        format: PolyFormat,
    },
    /// Print the poset of W (Schubert support up to the diagram-weight ceiling)
    Poset {
        w: String,
        #[arg(long, value_enum, default_value_t = PosetFormat::Json)]
        format: PosetFormat,
        /// Annotate DOT nodes with their one-sum labels
        #[arg(long)]
        labels: bool,
    },
    /// Print the Rothe diagram of W as JSON
    Diagram {
        w: String,
        /// Use the columnwise north closure instead
        #[arg(long)]
        closure: bool,
    },
    /// Sweep all of S_n: Möbius route vs. recursion oracle
    Verify {
        #[arg(long)]
        n: usize,
        /// Worker count for the per-permutation comparisons
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Include the permutations skipped for failing the hypothesis
        #[arg(long)]
        list_skipped: bool,
    },
    /// Re-run the identity checks behind the Möbius route in a truncated ring
    Proofcheck {
        w: String,
        /// Truncation degree; defaults to the Grothendieck degree of W
        #[arg(long)]
        d: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Mobius,
    Recursion,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    Json,
}

/// Parses `argv` and runs one command, returning the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            1
        }
    }
}

fn emit(out: &mut dyn Write, value: &serde_json::Value) {
    let _ = writeln!(out, "{value}");
}

// keeps the documented field order ("width" before "terms")
fn emit_poly(out: &mut dyn Write, poly: &crate::SparsePoly<Int>) {
    let _ = writeln!(out, "{}", serde_json::to_string(poly).unwrap());
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Schubert { w, format } => {
            let PolyFormat::Json = format;
            let w: Permutation = w.parse()?;
            emit_poly(out, &schubert_poly::<Int>(&w));
            Ok(0)
        }
        Command::Grothendieck { w, method, format } => {
            let PolyFormat::Json = format;
            let w: Permutation = w.parse()?;
            let poly = match method {
                Method::Mobius => grothendieck_via_mobius::<Int>(&w)?,
                Method::Recursion => grothendieck_poly::<Int>(&w),
            };
            emit_poly(out, &poly);
            Ok(0)
        }
        Command::Poset { w, format, labels } => {
            let w: Permutation = w.parse()?;
            let poset = support_poset::<Int>(&w)?;
            match format {
                PosetFormat::Json => {
                    let l = poset.one_sum_labelling::<Int>();
                    emit(out, &poset.to_json(&l));
                }
                PosetFormat::Dot => {
                    let l = labels.then(|| poset.one_sum_labelling::<Int>());
                    let _ = write!(out, "{}", poset.to_dot(l.as_ref()));
                }
            }
            Ok(0)
        }
        Command::Diagram { w, closure } => {
            let w: Permutation = w.parse()?;
            let mut diagram = w.rothe_diagram();
            if closure {
                diagram = diagram.north_closure();
            }
            let cells: Vec<[usize; 2]> = diagram.cells().map(|&(r, c)| [r, c]).collect();
            emit(
                out,
                &json!({
                    "n": diagram.n(),
                    "cells": cells,
                    "weight": diagram.weight().entries(),
                }),
            );
            Ok(0)
        }
        Command::Verify {
            n,
            jobs,
            list_skipped,
        } => {
            let report = verify_theorem::<Int>(n, jobs)?;
            emit(out, &report.to_json(list_skipped));
            Ok(if report.mismatches.is_empty() { 0 } else { 1 })
        }
        Command::Proofcheck { w, d } => {
            let w: Permutation = w.parse()?;
            let d = d.unwrap_or_else(|| default_truncation_degree::<Int>(&w));
            let report = proof_identity_report::<Int>(&w, d)?;
            emit(out, &report.to_json());
            Ok(if report.ok() { 0 } else { 1 })
        }
    }
}
