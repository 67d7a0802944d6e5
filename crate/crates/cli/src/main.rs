use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use cob2_core::classify::{
    check_generators, check_membership, decide_equal, in_ocob2, synthesize_term, CategoryFlavor,
};
use cob2_core::frobalg::{
    check_extended, find_theta, format_rational, validate_algebra, validate_involution,
    AlgebraData, AlgebraSpec, ThetaSearch, Tqft,
};
use cob2_core::{normalize, parse, selftest, Error, Generator, Term, TermError};

#[derive(Parser)]
#[command(
    name = "cob2",
    version,
    about = "Decide equality and membership of 2d cobordisms; evaluate them in Frobenius algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Category to work in.
    #[arg(long, default_value = "unoriented", value_parser = parse_flavor)]
    flavor: CategoryFlavor,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and type-check a term, print it fully parenthesized.
    Parse {
        term: String,
        #[command(flatten)]
        common: Common,
    },
    /// Print the normal form of a term.
    Normalize {
        term: String,
        #[command(flatten)]
        common: Common,
    },
    /// Decide whether two terms denote the same cobordism.
    Eq {
        left: String,
        right: String,
        #[command(flatten)]
        common: Common,
    },
    /// Report χ, boundary count and X per component and decide membership.
    Member {
        term: String,
        #[command(flatten)]
        common: Common,
    },
    /// Rebuild a canonical word for the term's normal form.
    Synth {
        term: String,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate a term as a matrix over the algebra.
    Eval {
        term: String,
        #[arg(long)]
        algebra: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Validate an algebra file.
    CheckAlgebra {
        #[arg(long)]
        algebra: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Search for a Möbius element over ℚ.
    FindTheta {
        #[arg(long)]
        algebra: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Run the built-in verification suites.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_flavor(s: &str) -> Result<CategoryFlavor, String> {
    s.parse()
}

/// Printed text plus exit status; `Err` is reported as an input error.
struct Outcome {
    text: String,
    ok: bool,
}

impl Outcome {
    fn new(text: impl Into<String>, ok: bool) -> Self {
        Outcome {
            text: text.into(),
            ok,
        }
    }
}

fn pretty(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("json serializes")
}

fn read_term(text: &str) -> Result<Term, String> {
    parse(text).map_err(|e| match &e {
        TermError::Syntax { offset, .. } => {
            format!("{e}\n  {text}\n  {:>width$}", "^", width = offset + 1)
        }
        TermError::ArityMismatch { .. } => e.to_string(),
    })
}

fn scoped_term(text: &str, flavor: CategoryFlavor) -> Result<Term, String> {
    let t = read_term(text)?;
    check_generators(&t, flavor).map_err(|e| e.to_string())?;
    Ok(t)
}

fn load_algebra(path: &Path) -> Result<AlgebraData, String> {
    AlgebraSpec::load(path)
        .and_then(|s| s.decode())
        .map_err(|e| e.to_string())
}

fn strings(v: &[cob2_core::Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn run(cli: Cli) -> Result<Outcome, String> {
    match cli.command {
        Command::Parse { term, common } => {
            let t = scoped_term(&term, common.flavor)?;
            let arity = t.arity().map_err(|e| e.to_string())?;
            Ok(if common.json {
                Outcome::new(pretty(json!({"term": t.render(), "arity": arity})), true)
            } else {
                Outcome::new(format!("{} : {arity}", t.render()), true)
            })
        }
        Command::Normalize { term, common } => {
            let t = scoped_term(&term, common.flavor)?;
            let s = normalize(&t).map_err(|e| e.to_string())?;
            Ok(if common.json {
                Outcome::new(
                    pretty(
                        json!({"surface": s.to_text(), "arity": s.arity, "open": s.open, "closed": s.closed}),
                    ),
                    true,
                )
            } else {
                Outcome::new(s.to_text(), true)
            })
        }
        Command::Eq {
            left,
            right,
            common,
        } => {
            let (l, r) = (read_term(&left)?, read_term(&right)?);
            let equal = decide_equal(&l, &r, common.flavor).map_err(|e| e.to_string())?;
            Ok(if common.json {
                let nf = |t: &Term| normalize(t).map(|s| s.to_text()).unwrap_or_default();
                Outcome::new(
                    pretty(json!({
                        "flavor": common.flavor.name(),
                        "equal": equal,
                        "left": nf(&l),
                        "right": nf(&r),
                    })),
                    equal,
                )
            } else {
                Outcome::new(if equal { "equal" } else { "not equal" }, equal)
            })
        }
        Command::Member { term, common } => {
            let t = read_term(&term)?;
            let s = normalize(&t).map_err(|e| e.to_string())?;
            let report = in_ocob2(&s);
            let reason = check_membership(&s, common.flavor)
                .err()
                .map(|e| e.to_string());
            let member = reason.is_none();
            Ok(if common.json {
                let mut v = report.to_json();
                v["flavor"] = json!(common.flavor.name());
                v["member"] = json!(member);
                v["reason"] = json!(reason);
                Outcome::new(pretty(v), member)
            } else {
                let verdict = match &reason {
                    None => format!("member of the {} category", common.flavor.name()),
                    Some(r) => format!("not a member: {r}"),
                };
                Outcome::new(format!("{report}\n{verdict}"), member)
            })
        }
        Command::Synth { term, common } => {
            let t = read_term(&term)?;
            let s = normalize(&t).map_err(|e| e.to_string())?;
            let word = synthesize_term(&s, common.flavor).map_err(|e| e.to_string())?;
            Ok(if common.json {
                Outcome::new(
                    pretty(json!({"surface": s.to_text(), "term": word.render()})),
                    true,
                )
            } else {
                Outcome::new(word.render(), true)
            })
        }
        Command::Eval {
            term,
            algebra,
            common,
        } => {
            let t = scoped_term(&term, common.flavor)?;
            let data = load_algebra(&algebra)?;
            // the file's theta is only consulted (and validated) when needed
            let theta = data.theta.as_ref().filter(|_| t.contains(Generator::Theta));
            let tqft =
                Tqft::new(&data.algebra, &data.involution, theta).map_err(|e| e.to_string())?;
            let m = tqft.evaluate(&t).map_err(|e: Error| e.to_string())?;
            Ok(if common.json {
                Outcome::new(
                    pretty(json!({"rows": m.rows(), "cols": m.cols(), "matrix": m.to_strings()})),
                    true,
                )
            } else {
                Outcome::new(m.to_string(), true)
            })
        }
        Command::CheckAlgebra { algebra, common } => {
            let data = load_algebra(&algebra)?;
            let mut report = validate_algebra(&data.algebra);
            if report.passed() {
                report.extend(validate_involution(&data.algebra, &data.involution));
            }
            if let Some(theta) = data.theta.as_ref().filter(|_| report.passed()) {
                report.extend(check_extended(&data.algebra, &data.involution, theta));
            }
            let ok = report.passed();
            Ok(if common.json {
                Outcome::new(pretty(json!({"passed": ok, "checks": report.checks})), ok)
            } else {
                Outcome::new(report.to_string(), ok)
            })
        }
        Command::FindTheta { algebra, common } => {
            let data = load_algebra(&algebra)?;
            let mut report = validate_algebra(&data.algebra);
            if report.passed() {
                report.extend(validate_involution(&data.algebra, &data.involution));
            }
            if !report.passed() {
                let failed: Vec<_> = report.failures().map(|c| c.name).collect();
                return Err(format!("algebra failed validation: {}", failed.join(", ")));
            }
            let result = find_theta(&data.algebra, &data.involution);
            let found = matches!(result, ThetaSearch::Found(_));
            Ok(if common.json {
                let v = match &result {
                    ThetaSearch::Found(t) => json!({"result": "found", "theta": strings(&t.0)}),
                    ThetaSearch::NoneOverQ => json!({"result": "none over Q"}),
                    ThetaSearch::Undetermined { reason } => {
                        json!({"result": "undetermined", "reason": reason})
                    }
                };
                Outcome::new(pretty(v), found)
            } else {
                Outcome::new(result.to_string(), found)
            })
        }
        Command::Selftest {
            seed,
            cases,
            common,
        } => {
            let report = selftest::run(seed, cases);
            let ok = report.passed();
            Ok(if common.json {
                Outcome::new(
                    pretty(serde_json::to_value(&report).expect("report serializes")),
                    ok,
                )
            } else {
                Outcome::new(report.to_string(), ok)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{}", out.text);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
