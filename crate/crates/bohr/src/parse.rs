//! Specification string grammars used by the CLI and the C ABI.
//!
//! Weights:   "geometric" | "even" | "lacunary:<k>" | "mask:<s1>+<d1>n[,<s2>+<d2>n...]"
//! Functions: "mobius:a=<float>" | "blaschke:zeros=<c1;c2;...>"
//!            | "schur:gammas=<c1;...>" | "extremal:a=<float>,k=<float>"
//! Complex literals: "<re>[+<im>i]" (also "-", e.g. "0.5-0.2i").

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::functions::{HarmonicPair, SeriesFunction, DEFAULT_ORDER};
use crate::weights::WeightSequence;

pub fn parse_weights(spec: &str) -> Result<WeightSequence> {
    let spec = spec.trim();
    match spec {
        "geometric" => return Ok(WeightSequence::geometric()),
        "even" => return Ok(WeightSequence::even_only()),
        _ => {}
    }
    if let Some(rest) = spec.strip_prefix("lacunary:") {
        let k: u32 = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad lacunary stride '{rest}'")))?;
        return WeightSequence::lacunary(k);
    }
    if let Some(rest) = spec.strip_prefix("mask:") {
        let mut progs = Vec::new();
        for part in rest.split(',') {
            let part = part.trim();
            let body = part
                .strip_suffix('n')
                .ok_or_else(|| Error::Parse(format!("progression '{part}' must end in 'n'")))?;
            let (s, d) = body
                .split_once('+')
                .ok_or_else(|| Error::Parse(format!("progression '{part}' must be '<s>+<d>n'")))?;
            let s: u32 = s.trim().parse().map_err(|_| Error::Parse(format!("bad offset in '{part}'")))?;
            let d: u32 = d.trim().parse().map_err(|_| Error::Parse(format!("bad stride in '{part}'")))?;
            progs.push((s, d));
        }
        return WeightSequence::masked(&progs);
    }
    Err(Error::Parse(format!("unknown weight spec '{spec}'")))
}

/// Parse "<re>[+<im>i]" into a complex number.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad complex literal '{s}'"));
    if let Some(body) = s.strip_suffix('i') {
        // split at the sign of the imaginary part, skipping a leading sign
        let split = body
            .char_indices()
            .skip(1)
            .find(|&(i, c)| (c == '+' || c == '-') && !body[..i].ends_with(['e', 'E']))
            .map(|(i, _)| i);
        match split {
            Some(i) => {
                let re: f64 = body[..i].parse().map_err(|_| bad())?;
                let im: f64 = match &body[i..i + 1] {
                    "+" => body[i + 1..].parse().map_err(|_| bad())?,
                    _ => body[i..].parse().map_err(|_| bad())?,
                };
                Ok(Complex64::new(re, im))
            }
            // pure imaginary, e.g. "0.5i"
            None => Ok(Complex64::new(0.0, body.parse().map_err(|_| bad())?)),
        }
    } else {
        Ok(Complex64::new(s.parse().map_err(|_| bad())?, 0.0))
    }
}

fn parse_complex_list(s: &str) -> Result<Vec<Complex64>> {
    s.split(';').map(parse_complex).collect()
}

/// A parsed function specification: either a plain analytic function or
/// the extremal harmonic construction.
pub enum FunctionSpec {
    Analytic(SeriesFunction),
    Extremal { a: f64, k: f64 },
}

pub fn parse_function(spec: &str) -> Result<FunctionSpec> {
    parse_function_with_order(spec, DEFAULT_ORDER)
}

pub fn parse_function_with_order(spec: &str, order: usize) -> Result<FunctionSpec> {
    let spec = spec.trim();
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("function spec '{spec}' needs '<kind>:<args>'")))?;
    let field = |args: &str, key: &str| -> Result<String> {
        args.split(',')
            .find_map(|kv| kv.trim().strip_prefix(&format!("{key}=")).map(str::to_owned))
            .ok_or_else(|| Error::Parse(format!("missing '{key}=' in '{spec}'")))
    };
    match kind {
        "mobius" => {
            let a: f64 = field(rest, "a")?
                .parse()
                .map_err(|_| Error::Parse(format!("bad 'a' in '{spec}'")))?;
            Ok(FunctionSpec::Analytic(SeriesFunction::mobius(a, order)?))
        }
        "blaschke" => {
            let zeros = parse_complex_list(&field(rest, "zeros")?)?;
            Ok(FunctionSpec::Analytic(SeriesFunction::blaschke(&zeros, order)?))
        }
        "schur" => {
            let gammas = parse_complex_list(&field(rest, "gammas")?)?;
            Ok(FunctionSpec::Analytic(SeriesFunction::schur(&gammas, order)?))
        }
        "extremal" => {
            let a: f64 = field(rest, "a")?
                .parse()
                .map_err(|_| Error::Parse(format!("bad 'a' in '{spec}'")))?;
            let k: f64 = field(rest, "k")?
                .parse()
                .map_err(|_| Error::Parse(format!("bad 'k' in '{spec}'")))?;
            // validate eagerly
            HarmonicPair::extremal(a, k, Complex64::new(1.0, 0.0), 1)?;
            Ok(FunctionSpec::Extremal { a, k })
        }
        other => Err(Error::Parse(format!("unknown function kind '{other}'"))),
    }
}
