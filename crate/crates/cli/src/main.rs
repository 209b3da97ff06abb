use std::io::{self, BufWriter, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Number, Value};

use ytl_core::combinatorics::{standard_d_tableaux_count, DPartition, Partition};
use ytl_core::lr_rule::{lr_coefficient, lr_product, pieri_summands, restriction_multiplicities};
use ytl_core::rep_theory::{catalan, is_ytl_label, r_set, ytl_dimension_formula, ytl_dimension_sum_squares, LabelKind};
use ytl_core::ytl_basis::{enumerate_basis, z_row_enumerated, z_row_recursive, z_row_sums};
use ytl_core::yokonuma::verify::{draw_u_values, verify_all};
use ytl_core::yokonuma::{parse_rational, validate_specialisation, IdealRoute};

#[derive(Parser)]
#[command(name = "ytl", version, about = "Exact computations for Yokonuma–Temperley–Lieb algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of YTL_{d,n}(u), by the closed formula and by summing squares
    Dims {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
    /// Labels of the irreducible representations of YTL_{d,n}(u)
    Irreps {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
    /// Littlewood–Richardson coefficient, or the whole product without --nu
    Lr {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Option<Partition>,
    },
    /// Restriction of E^λ from G(d,1,n) to the symmetric group
    Restrict {
        /// d-partition, components separated by ';' (e.g. "2,1;;1")
        #[arg(long, value_parser = parse_d_partition)]
        lambda: DPartition,
    },
    /// Induction of E^μ ⊗ trivial via Pieri's rule
    Pieri {
        #[arg(long, value_parser = parse_d_partition)]
        mu: DPartition,
        #[arg(long)]
        l: usize,
    },
    /// The basis S_{d,n}
    Basis {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Z_n(m) for every weight m, and the identities it satisfies
    Zcount {
        #[arg(long)]
        n: usize,
    },
    /// Brute-force verification of the quotient in the Yokonuma–Hecke algebra
    Verify {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        /// Specialisation of u as P/Q; a second value is drawn from the seed
        #[arg(long = "u-eval", value_parser = parse_u)]
        u_eval: Option<num_rational::BigRational>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Check the defining relations over Q[u, u^-1]
        #[arg(long)]
        symbolic: bool,
        #[arg(long, value_enum, default_value_t = Route::Closure)]
        route: Route,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Route {
    Literal,
    Pairs,
    Closure,
}

impl From<Route> for IdealRoute {
    fn from(r: Route) -> Self {
        match r {
            Route::Literal => IdealRoute::Literal,
            Route::Pairs => IdealRoute::Pairs,
            Route::Closure => IdealRoute::Closure,
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: ytl_core::Error| e.to_string())
}

fn parse_d_partition(s: &str) -> Result<DPartition, String> {
    s.parse().map_err(|e: ytl_core::Error| e.to_string())
}

fn parse_u(s: &str) -> Result<num_rational::BigRational, String> {
    let u = parse_rational(s).map_err(|e| e.to_string())?;
    validate_specialisation(&u).map_err(|e| e.to_string())?;
    Ok(u)
}

/// Exit status of a command that ran: success or a failed check.
enum Outcome {
    Pass,
    Fail,
}

fn big(x: &BigUint) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("decimal digits"))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

fn emit<T: Serialize>(out: &mut impl Write, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn run(cmd: Command, out: &mut impl Write) -> Result<Outcome, Box<dyn std::error::Error>> {
    let outcome = match cmd {
        Command::Dims { d, n } => {
            let formula = ytl_dimension_formula(d, n)?;
            let squares = ytl_dimension_sum_squares(d, n)?;
            let ok = formula == squares;
            emit(
                out,
                &json!({
                    "d": d,
                    "n": n,
                    "formula": big(&formula),
                    "sum_of_squares": big(&squares),
                    "verdict": verdict(ok),
                }),
            )?;
            if ok { Outcome::Pass } else { Outcome::Fail }
        }
        Command::Irreps { d, n } => {
            let r = r_set(d, n)?;
            let members: Vec<Value> = r
                .members
                .iter()
                .map(|m| {
                    json!({
                        "label": m.label,
                        "kind": m.kind,
                        "dimension": big(&standard_d_tableaux_count(&m.label)),
                    })
                })
                .collect();
            emit(
                out,
                &json!({
                    "d": d,
                    "n": n,
                    "count": members.len(),
                    "one_component": r.count(LabelKind::OneComponent),
                    "two_columns": r.count(LabelKind::TwoColumns),
                    "members": members,
                }),
            )?;
            Outcome::Pass
        }
        Command::Lr { lambda, mu, nu } => {
            match nu {
                Some(nu) => emit(
                    out,
                    &json!({
                        "lambda": lambda,
                        "mu": mu,
                        "nu": nu,
                        "coefficient": lr_coefficient(&lambda, &mu, &nu),
                    }),
                )?,
                None => {
                    let product: Vec<Value> = lr_product(&lambda, &mu)
                        .into_iter()
                        .rev()
                        .map(|(nu, c)| json!({ "nu": nu, "coefficient": c }))
                        .collect();
                    emit(out, &json!({ "lambda": lambda, "mu": mu, "product": product }))?
                }
            }
            Outcome::Pass
        }
        Command::Restrict { lambda } => {
            let summands = restriction_multiplicities(&lambda);
            let widest = summands.keys().map(Partition::first).max().unwrap_or(0);
            let list: Vec<Value> = summands
                .iter()
                .rev()
                .map(|(nu, c)| json!({ "nu": nu, "multiplicity": c }))
                .collect();
            emit(
                out,
                &json!({
                    "lambda": lambda,
                    "summands": list,
                    "max_first_part": widest,
                    "summands_within_two_columns": widest <= 2,
                    "is_ytl_label": is_ytl_label(&lambda),
                }),
            )?;
            Outcome::Pass
        }
        Command::Pieri { mu, l } => {
            let summands = pieri_summands(&mu, l);
            emit(out, &json!({ "mu": mu, "l": l, "summands": summands }))?;
            Outcome::Pass
        }
        Command::Basis { d, n, format } => {
            let basis = enumerate_basis(d, n)?;
            match format {
                Format::Json => emit(
                    out,
                    &json!({ "d": d, "n": n, "size": basis.len(), "elements": basis }),
                )?,
                Format::Csv => {
                    let header: Vec<String> = (1..=n).map(|j| format!("r{j}")).collect();
                    writeln!(out, "{},pattern", header.join(","))?;
                    for b in &basis {
                        let r: Vec<String> = b.framing.iter().map(usize::to_string).collect();
                        let p = if b.pattern.is_empty() { String::new() } else { b.pattern.to_string() };
                        writeln!(out, "{},{p}", r.join(","))?;
                    }
                }
            }
            Outcome::Pass
        }
        Command::Zcount { n } => {
            if n == 0 {
                return Err("n must be at least 1".into());
            }
            let row = z_row_enumerated(n);
            let recursive = z_row_recursive(n);
            let (sum, weighted) = z_row_sums(&row);
            let cn = catalan(n);
            let weighted_expected = &cn * BigUint::from(n + 1);
            let top_expected = catalan(n - 1);
            let checks = [
                ("recursion", row == recursive),
                ("sum", sum == cn),
                ("weighted_sum", weighted == weighted_expected),
                ("top_weight", row[n - 1] == top_expected),
            ];
            let ok = checks.iter().all(|c| c.1);
            emit(
                out,
                &json!({
                    "n": n,
                    "z": row.iter().map(big).collect::<Vec<_>>(),
                    "sum": big(&sum),
                    "catalan": big(&cn),
                    "weighted_sum": big(&weighted),
                    "weighted_expected": big(&weighted_expected),
                    "top": big(&row[n - 1]),
                    "top_expected": big(&top_expected),
                    "checks": checks
                        .iter()
                        .map(|(name, ok)| json!({ "name": name, "verdict": verdict(*ok) }))
                        .collect::<Vec<_>>(),
                }),
            )?;
            if ok { Outcome::Pass } else { Outcome::Fail }
        }
        Command::Verify { d, n, u_eval, seed, symbolic, route } => {
            let u_values = match u_eval {
                Some(u) => {
                    let extra = draw_u_values(seed, 2).into_iter().find(|x| *x != u).expect("two distinct draws");
                    vec![u, extra]
                }
                None => draw_u_values(seed, 2),
            };
            let report = verify_all(d, n, &u_values, symbolic, route.into())?;
            emit(out, &report)?;
            if report.passed { Outcome::Pass } else { Outcome::Fail }
        }
    };
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(Outcome::Pass), Ok(())) => ExitCode::SUCCESS,
        (Ok(Outcome::Fail), Ok(())) => {
            eprintln!("ytl: verification failed");
            ExitCode::from(1)
        }
        (Err(e), _) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
