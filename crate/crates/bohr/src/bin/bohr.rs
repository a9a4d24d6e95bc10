//! Command-line driver: radius solving, the known-constants regression
//! table, grid verification, sharpness probing, Psi monotonicity checks,
//! and the squared-coefficient domination check. Reports go to stdout as
//! JSON or CSV; diagnostics to stderr.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use bohr::corpus;
use bohr::parse::{parse_complex, parse_function, parse_weights, FunctionSpec};
use bohr::verify::{self, PASS_TOL};
use bohr::{monotonicity_check, solve_radius, RadiusProblem};

#[derive(Parser)]
#[command(name = "bohr", version, about = "Sharp Bohr radii: solve, verify, probe")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct ProblemArgs {
    /// Power of z in |h(z^m)|
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Exponent p in (0, 2]
    #[arg(long, default_value_t = 1.0)]
    p: f64,
    /// Dilation bound k in [0, 1]
    #[arg(long, conflicts_with = "big_k")]
    k: Option<f64>,
    /// Quasiregularity constant K >= 1; applies k = (K-1)/(K+1)
    #[arg(long = "K", id = "big_k")]
    big_k: Option<f64>,
    /// Tail start N >= 1
    #[arg(long = "N", default_value_t = 1)]
    n: u32,
    /// Weight spec: geometric | even | lacunary:<k> | mask:<s>+<d>n[,...]
    #[arg(long, default_value = "geometric")]
    weights: String,
    /// Use the m -> infinity form of the characteristic equation
    #[arg(long)]
    limit_m: bool,
}

impl ProblemArgs {
    fn build(&self) -> bohr::Result<RadiusProblem> {
        let k = match (self.k, self.big_k) {
            (Some(k), _) => k,
            (None, Some(big_k)) => bohr::radius::quasiregular_k(big_k)?,
            (None, None) => 0.0,
        };
        let w = parse_weights(&self.weights)?;
        if self.limit_m {
            RadiusProblem::new_limit(self.p, k, self.n, w)
        } else {
            RadiusProblem::new(self.m, self.p, k, self.n, w)
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve the characteristic equation for the sharp radius
    Radius {
        #[command(flatten)]
        problem: ProblemArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Regression table of all closed-form radii vs the solver
    Table {
        #[arg(long, default_value = "known-constants")]
        preset: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Maximum allowed |closed_form - solver| before exit code 1
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Verify the inequality on an r-z grid up to the solved radius
    Verify {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Function spec: mobius:a=.. | blaschke:zeros=.. | schur:gammas=.. | extremal:a=..,k=..
        #[arg(long, required_unless_present = "corpus_size")]
        function: Option<String>,
        /// Instead of --function, verify this many seeded Schur functions
        #[arg(long)]
        corpus_size: Option<usize>,
        #[arg(long, default_value_t = 16)]
        r_steps: usize,
        #[arg(long, default_value_t = 720)]
        z_steps: usize,
        #[arg(long, default_value_t = PASS_TOL)]
        tol: f64,
        #[arg(long, default_value_t = corpus::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Probe sharpness with the extremal family beyond the radius
    Probe {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Probe radius; must exceed the solved sharp radius
        #[arg(long)]
        r: f64,
        /// Witness grid step: a = 1 - a_step * j
        #[arg(long, default_value_t = 1e-4)]
        a_step: f64,
    },
    /// Check that Psi_p is non-increasing and nonnegative on [0, 1]
    PsiCheck {
        #[command(flatten)]
        problem: ProblemArgs,
        /// Evaluation radius; defaults to the solved sharp radius
        #[arg(long)]
        r: Option<f64>,
        #[arg(long, default_value_t = 200)]
        a_steps: usize,
    },
    /// Squared-coefficient domination for a proportional pair g = lambda k h_0
    LemmaC {
        /// Analytic part h
        #[arg(long)]
        function: String,
        #[arg(long, default_value_t = 0.5)]
        k: f64,
        /// Unimodular lambda as a complex literal
        #[arg(long, default_value = "1")]
        lambda: String,
        #[arg(long, default_value = "geometric")]
        weights: String,
        #[arg(long)]
        r: f64,
    },
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable report"));
}

fn run(cli: Cli) -> bohr::Result<ExitCode> {
    match cli.command {
        Command::Radius { problem, format } => {
            let prob = problem.build()?;
            let res = solve_radius(&prob)?;
            match format {
                Format::Json => emit(&res),
                Format::Csv => {
                    println!("radius,residual,bracket_lo,bracket_hi,evaluations");
                    println!(
                        "{:.15},{:.3e},{:.15},{:.15},{}",
                        res.radius, res.residual, res.bracket.0, res.bracket.1, res.evaluations
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { preset, format, tol } => {
            if preset != "known-constants" {
                return Err(bohr::Error::Parse(format!("unknown preset '{preset}'")));
            }
            let rows = verify::radius_table()?;
            match format {
                Format::Csv => print!("{}", verify::table_to_csv(&rows)),
                Format::Json => emit(&rows),
            }
            let ok = rows.iter().all(|r| r.abs_diff < tol);
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Verify { problem, function, corpus_size, r_steps, z_steps, tol, seed, format } => {
            let prob = problem.build()?;
            let reports = match (&function, corpus_size) {
                (Some(spec), _) => vec![verify::verify_inequality(&prob, spec, r_steps, z_steps)?],
                (None, Some(count)) => {
                    let mut out = Vec::with_capacity(count);
                    for (id, f) in corpus::schur_corpus(seed, count, bohr::DEFAULT_ORDER) {
                        out.push(verify::verify_function(&prob, &id, &f, r_steps, z_steps)?);
                    }
                    out
                }
                (None, None) => unreachable!("clap enforces one of --function/--corpus-size"),
            };
            let mut all_passed = true;
            for rep in &reports {
                let passed = rep.max_lhs.max(rep.envelope_max) <= 1.0 + tol;
                all_passed &= passed;
                if !passed {
                    eprintln!(
                        "FAIL {} at r={} z=({}, {}): lhs={}",
                        rep.function_id, rep.argmax_r, rep.argmax_z.0, rep.argmax_z.1, rep.max_lhs
                    );
                }
            }
            match format {
                Format::Json => {
                    if reports.len() == 1 {
                        emit(&reports[0]);
                    } else {
                        emit(&serde_json::json!({
                            "seed": seed,
                            "count": reports.len(),
                            "all_passed": all_passed,
                            "reports": reports,
                        }));
                    }
                }
                Format::Csv => {
                    println!("function_id,radius,max_lhs,envelope_max,margin,truncation_worst,passed");
                    for rep in &reports {
                        println!(
                            "{},{:.15},{:.15},{:.15},{:.3e},{:.3e},{}",
                            rep.function_id,
                            rep.radius,
                            rep.max_lhs,
                            rep.envelope_max,
                            rep.margin,
                            rep.truncation_worst,
                            rep.passed
                        );
                    }
                }
            }
            Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Probe { problem, r, a_step } => {
            let prob = problem.build()?;
            let rep = verify::sharpness_probe(&prob, r, a_step)?;
            emit(&rep);
            Ok(if rep.exceeds { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::PsiCheck { problem, r, a_steps } => {
            let prob = problem.build()?;
            let res = solve_radius(&prob)?;
            let r = r.unwrap_or(res.radius);
            let monotone = monotonicity_check(&prob, r, a_steps)?;
            emit(&serde_json::json!({
                "radius": res.radius,
                "r": r,
                "a_steps": a_steps,
                "monotone": monotone,
            }));
            Ok(if monotone { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::LemmaC { function, k, lambda, weights, r } => {
            let h = match parse_function(&function)? {
                FunctionSpec::Analytic(f) => f,
                FunctionSpec::Extremal { a, .. } => bohr::SeriesFunction::mobius(a, bohr::DEFAULT_ORDER)?,
            };
            let lambda: Complex64 = parse_complex(&lambda)?;
            let w = parse_weights(&weights)?;
            let (lhs, rhs) = verify::lemma_c_check(&h, k, lambda, &w, r)?;
            emit(&serde_json::json!({ "lhs": lhs, "rhs": rhs, "k": k, "r": r }));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
