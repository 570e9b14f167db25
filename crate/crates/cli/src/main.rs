//! `tropic`: command-line front end for tropic-core.
//!
//! Every command prints one JSON document on standard output. Inputs are
//! inline expressions, JSON documents (starting with `{`), or paths to files
//! holding either.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use tropic_core::counting::{check_lower_bound, check_minkowski_bound, region_count_formula};
use tropic_core::exactgeom::{Point, Polytope};
use tropic_core::io::from_json;
use tropic_core::minimize::{
    balancing_not_unique_witness, canonical_arrangement, enumerate_flen_minimal_balancings,
    minimal_balancing_fan_mlen, minimal_representation_1d, minimal_representation_fan, SignedFan, PL1D,
};
use tropic_core::plancomplex::{
    corner_locus, factorization_curve, overlay_all, svg, tropical_curve, PlanarComplex, WeightedFan,
};
use tropic_core::rational::{self, Rational};
use tropic_core::signomial::{
    newton_polytope, parse_factorization, parse_rational_rep, parse_signomial, parse_signomial_list,
    regular_subdivision, Factorization, RationalRep, Signomial,
};
use tropic_core::verify::{self, DEFAULT_SEED};
use tropic_core::Error;

#[derive(Parser)]
#[command(name = "tropic", version, about = "Exact computations with tropical rational signomials")]
struct Cli {
    /// Pretty-print the JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Also write an SVG drawing of the resulting complex.
    #[arg(long, global = true, value_name = "PATH")]
    svg: Option<PathBuf>,
    /// Cross-check region counts with the face-tracing oracle.
    #[arg(long, global = true)]
    oracle: bool,
    /// Seed for the randomized verification suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Which length a fan balancing minimizes.
    #[arg(long, global = true, value_enum, default_value_t = Length::Mlen)]
    length: Length,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Length {
    Mlen,
    Flen,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a rational signomial at a point given as comma-separated rationals.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// Drop monomials that never attain the maximum.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Monomial length of a signomial, product or quotient.
    Mlen {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Factorization length of a signomial, product or quotient.
    Flen {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Newton polytope of a signomial.
    Newton {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Regular subdivision of the Newton polygon induced by the coefficients.
    Subdivision {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Tropical curve of a signomial or product.
    Curve {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Union of several tropical curves with weights added on shared cells.
    Overlay {
        #[arg(allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Signed corner locus of a quotient.
    Cornerlocus {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Region count of an arrangement of tropical curves.
    Regions {
        #[arg(allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Region count against the lower bound flen + C(m, 2).
    Bounds {
        #[arg(allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Vertex count of a Minkowski sum against its lower bound.
    Minkowski {
        #[arg(allow_hyphen_values = true)]
        inputs: Vec<String>,
    },
    /// Minimal representation of a one-variable piecewise linear function.
    Min1d {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Minimal balancings of a completely unbalanced fan.
    Balancefan {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Minimal representation of a function whose corner locus is a signed fan.
    Minrepfan {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Canonical arrangement of a complex or curve.
    Canonical {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Complex with two balancings whose lengths disagree.
    Witness,
    /// Run every verification criterion.
    #[command(name = "verify-all")]
    VerifyAll,
}

enum Failure {
    Input(Error),
    Verification(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

type Outcome = Result<Value, Failure>;

fn read_input(arg: &str) -> Result<String, Error> {
    let path = Path::new(arg);
    if !arg.trim_start().starts_with('{') && path.is_file() {
        return fs::read_to_string(path).map_err(|e| Error::Invalid(format!("reading {arg}: {e}")));
    }
    Ok(arg.to_string())
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("core types serialize")
}

fn rep(text: &str) -> Result<RationalRep, Error> {
    if is_json(text) {
        return from_json(text);
    }
    parse_rational_rep(text, None)
}

fn factorization(text: &str) -> Result<Factorization, Error> {
    if is_json(text) {
        return from_json(text);
    }
    parse_factorization(text, None)
}

fn signomial(text: &str) -> Result<Signomial, Error> {
    if is_json(text) {
        return from_json(text);
    }
    parse_signomial(text, None)
}

/// Several signomials, either one per argument or a list in a single file.
fn signomials(args: &[String]) -> Result<Vec<Signomial>, Error> {
    if args.is_empty() {
        return Err(Error::Invalid("expected at least one signomial".into()));
    }
    let mut out = Vec::new();
    for a in args {
        let text = read_input(a)?;
        if is_json(&text) {
            out.push(from_json(&text)?);
        } else {
            out.extend(parse_signomial_list(&text, None)?);
        }
    }
    Ok(out)
}

/// Lengths of a signomial or product as one number, of a quotient as a pair.
fn lengths(text: &str, flen: bool) -> Result<Value, Error> {
    let name = if flen { "flen" } else { "mlen" };
    let single = if is_json(text) {
        from_json::<Factorization>(text).or_else(|_| from_json::<Signomial>(text).map(Factorization::single)).ok()
    } else {
        parse_factorization(text, None).ok()
    };
    if let Some(f) = single {
        return Ok(json!({ name: if flen { f.flen()? } else { f.mlen()? } }));
    }
    let r = rep(text)?;
    let (num, den) = if flen { r.flen()? } else { r.mlen()? };
    Ok(json!({ name: [num, den] }))
}

fn point(text: &str) -> Result<Vec<Rational>, Error> {
    text.split(',').map(|t| rational::parse(t.trim())).collect()
}

fn complex_input(text: &str) -> Result<PlanarComplex, Error> {
    if is_json(text) {
        return from_json(text);
    }
    factorization_curve(&factorization(text)?)
}

fn polytope_input(text: &str) -> Result<Polytope, Error> {
    if is_json(text) {
        return from_json(text);
    }
    newton_polytope(&signomial(text)?)
}

fn points_json(points: &[Point]) -> Value {
    points
        .iter()
        .map(|p| p.iter().map(rational::format).collect::<Vec<_>>())
        .collect()
}

fn write_svg(path: &Option<PathBuf>, layers: &[(&PlanarComplex, &str)]) -> Result<(), Error> {
    if let Some(p) = path {
        fs::write(p, svg::render(layers)).map_err(|e| Error::Invalid(format!("writing {}: {e}", p.display())))?;
    }
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    let out = match &cli.command {
        Command::Eval { expr, point: p } => {
            let r = rep(&read_input(expr)?)?;
            let v = r.evaluate(&point(p)?)?;
            json!({ "value": rational::format(&v) })
        }
        Command::Reduce { expr } => {
            let s = factorization(&read_input(expr)?)?.expand_reduced()?;
            json!({ "reduced": s.to_string(), "signomial": value(&s) })
        }
        Command::Mlen { expr } => lengths(&read_input(expr)?, false)?,
        Command::Flen { expr } => lengths(&read_input(expr)?, true)?,
        Command::Newton { expr } => value(&newton_polytope(&factorization(&read_input(expr)?)?.expand())?),
        Command::Subdivision { expr } => {
            let s = regular_subdivision(&signomial(&read_input(expr)?)?)?;
            let cells: Vec<Value> = s.cells.iter().map(|c| points_json(c)).collect();
            json!({ "polygon": value(&s.base), "vertices": points_json(&s.vertices), "cells": cells })
        }
        Command::Curve { expr } => {
            let c = factorization_curve(&factorization(&read_input(expr)?)?)?;
            write_svg(&cli.svg, &[(&c, "black")])?;
            value(&c)
        }
        Command::Overlay { exprs } => {
            let curves = signomials(exprs)?.iter().map(tropical_curve).collect::<Result<Vec<_>, _>>()?;
            let refs: Vec<&PlanarComplex> = curves.iter().collect();
            let o = overlay_all(&refs);
            const COLORS: [&str; 4] = ["black", "#1f5fbf", "#c03030", "#2f8f2f"];
            let layers: Vec<(&PlanarComplex, &str)> =
                curves.iter().enumerate().map(|(i, c)| (c, COLORS[i % COLORS.len()])).collect();
            write_svg(&cli.svg, &layers)?;
            value(&o)
        }
        Command::Cornerlocus { expr } => {
            let s = corner_locus(&rep(&read_input(expr)?)?)?;
            write_svg(&cli.svg, &[(&s.positive, "black"), (&s.negative, "#c03030")])?;
            value(&s)
        }
        Command::Regions { exprs } => value(&region_count_formula(&signomials(exprs)?, cli.oracle)?),
        Command::Bounds { exprs } => value(&check_lower_bound(&signomials(exprs)?)?),
        Command::Minkowski { inputs } => {
            let polys = inputs
                .iter()
                .map(|i| polytope_input(&read_input(i)?))
                .collect::<Result<Vec<_>, _>>()?;
            value(&check_minkowski_bound(&polys)?)
        }
        Command::Min1d { input } => {
            let text = read_input(input)?;
            let f: PL1D = if is_json(&text) { from_json(&text)? } else { PL1D::from_rational(&rep(&text)?)? };
            let r = minimal_representation_1d(&f)?;
            json!({ "representation": r.to_string(), "rep": value(&r), "mlen": value(&r.mlen()?) })
        }
        Command::Balancefan { input } => {
            let f: WeightedFan = from_json(&read_input(input)?)?;
            match cli.length {
                Length::Mlen => value(&minimal_balancing_fan_mlen(&f)?),
                Length::Flen => {
                    let all = enumerate_flen_minimal_balancings(&f)?;
                    json!({ "count": all.len(), "results": value(&all) })
                }
            }
        }
        Command::Minrepfan { input } => {
            let s: SignedFan = from_json(&read_input(input)?)?;
            let r = minimal_representation_fan(&s)?;
            json!({ "representation": r.to_string(), "rep": value(&r), "mlen": value(&r.mlen()?) })
        }
        Command::Canonical { input } => {
            let x = complex_input(&read_input(input)?)?;
            let a = canonical_arrangement(&x);
            let ac = a.to_complex();
            write_svg(&cli.svg, &[(&ac, "#bbbbbb"), (&x, "black")])?;
            json!({ "lines": value(&a.lines), "flen": a.flen() })
        }
        Command::Witness => {
            let w = balancing_not_unique_witness()?;
            write_svg(&cli.svg, &[(&w.x, "black")])?;
            let mut v = value(&w);
            v["y1_text"] = json!(w.y1.to_string());
            v["y2_text"] = json!(w.y2.to_string());
            v
        }
        Command::VerifyAll => {
            let results = verify::run_all(cli.seed);
            let passed = results.iter().all(|r| r.passed);
            let v = json!({ "seed": cli.seed, "passed": passed, "criteria": value(&results) });
            if !passed {
                return Err(Failure::Verification(v));
            }
            v
        }
    };
    Ok(out)
}

fn print(v: &Value, pretty: bool) {
    let text = if pretty { serde_json::to_string_pretty(v) } else { serde_json::to_string(v) };
    // A closed pipe on stdout is not worth a panic.
    let _ = writeln!(std::io::stdout().lock(), "{}", text.expect("JSON values serialize"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => {
            print(&v, cli.json);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(v)) => {
            print(&v, cli.json);
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("{}", json!({ "error": e.code(), "message": e.to_string() }));
            ExitCode::from(2)
        }
    }
}
