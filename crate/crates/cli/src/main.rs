//! ceva — build Fermat/Ceva configurations and check symbolic-vs-ordinary
//! power containment.
//!
//! Exit codes: 0 success (and the --expect verdict matched, when given);
//! 1 a verification check failed or the verdict did not match --expect;
//! 2 usage error; 3 resource cap exceeded; 4 unusable field or invalid
//! parameters.

mod render;

use ceva_core::{
    build_config, certify, config_dump, verify_lemma1, CyclotomicField, Error, Field, Limits,
    PrimeField, TermOrder,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::time::Duration;

const EXIT_CHECK_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_RESOURCE: i32 = 3;
const EXIT_INVALID: i32 = 4;

#[derive(Parser)]
#[command(name = "ceva", version, about = "Fermat/Ceva configuration containment checker")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Coefficient field: "cyclotomic" or "prime:<p>" (requires n | p - 1).
    #[arg(long, global = true, default_value = "cyclotomic")]
    field: String,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Omit timings, making reports byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,

    /// Expected verdict string; exit 1 when the computed verdict differs.
    #[arg(long, global = true)]
    expect: Option<String>,

    /// Cap on the Groebner basis size (env: CEVA_MAX_BASIS).
    #[arg(long, global = true)]
    max_basis: Option<usize>,

    /// Cap on intermediate polynomial degree (env: CEVA_MAX_DEGREE).
    #[arg(long, global = true)]
    max_degree: Option<u32>,

    /// Wall-clock budget in seconds per completion (env: CEVA_TIME_BUDGET).
    #[arg(long, global = true)]
    time_budget: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct At {
    /// Ambient projective dimension N.
    #[arg(long = "N")]
    dim: usize,

    /// Degree n of the Fermat binomials (order of the root of unity).
    #[arg(long)]
    n: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Build the configuration at (N, n) and dump it.
    BuildConfig {
        #[command(flatten)]
        at: At,
    },
    /// Verify the flat list in both directions (inclusion and brute-force
    /// completeness).
    VerifyLemma1 {
        #[command(flatten)]
        at: At,
    },
    /// Per-prime vanishing orders of F against threshold m.
    CheckSymbolic {
        #[command(flatten)]
        at: At,
        #[arg(long)]
        m: u32,
    },
    /// Decide F in I^r by Groebner normal form.
    CheckOrdinary {
        #[command(flatten)]
        at: At,
        #[arg(long)]
        r: u32,
        /// Dump the reduced basis of I^r to this path.
        #[arg(long)]
        dump_basis: Option<PathBuf>,
        /// Order for the dumped basis: grevlex or lex.
        #[arg(long, default_value = "grevlex")]
        order: String,
    },
    /// Check I^(m) against I^r with threshold bookkeeping.
    CheckContainment {
        #[command(flatten)]
        at: At,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        r: u32,
    },
    /// Run the certificate chain from the N = 2 base case up to N-max.
    CertifyChain {
        #[arg(long = "N-max")]
        dim_max: usize,
        #[arg(long)]
        n: u64,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let n = match &cli.command {
        Command::BuildConfig { at }
        | Command::VerifyLemma1 { at }
        | Command::CheckSymbolic { at, .. }
        | Command::CheckOrdinary { at, .. }
        | Command::CheckContainment { at, .. } => at.n,
        Command::CertifyChain { n, .. } => *n,
    };
    let backend = match parse_field_flag(&cli.field, n) {
        Ok(b) => b,
        Err(e) => return report_error(&e),
    };
    let limits = build_limits(&cli);
    let outcome = match backend {
        Backend::Cyclotomic(f) => execute(&cli, &f, &limits),
        Backend::Prime(f) => execute(&cli, &f, &limits),
    };
    match outcome {
        Err(e) => report_error(&e),
        Ok(out) => {
            let rendered = match cli.format {
                Format::Text => out.text,
                Format::Json => {
                    let mut value = out.json;
                    if cli.no_timing {
                        render::strip_timings(&mut value);
                    }
                    match serde_json::to_string_pretty(&value) {
                        Ok(s) => s,
                        Err(e) => {
                            eprintln!("error: failed to serialize report: {e}");
                            return EXIT_CHECK_FAILED;
                        }
                    }
                }
            };
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, rendered + "\n") {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return EXIT_CHECK_FAILED;
                }
            } else {
                println!("{rendered}");
            }
            if let Some(expect) = &cli.expect {
                if expect != &out.verdict {
                    eprintln!(
                        "error: expected verdict {expect:?} but the computation returned {:?}",
                        out.verdict
                    );
                    return EXIT_CHECK_FAILED;
                }
            }
            if out.check_failed {
                EXIT_CHECK_FAILED
            } else {
                0
            }
        }
    }
}

enum Backend {
    Cyclotomic(CyclotomicField),
    Prime(PrimeField),
}

fn parse_field_flag(flag: &str, n: u64) -> Result<Backend, Error> {
    if flag == "cyclotomic" {
        return Ok(Backend::Cyclotomic(CyclotomicField::new(n)?));
    }
    if let Some(p) = flag.strip_prefix("prime:") {
        let p: u64 = p
            .parse()
            .map_err(|_| Error::InvalidField(format!("bad prime modulus {p:?}")))?;
        return Ok(Backend::Prime(PrimeField::new(p, n)?));
    }
    Err(Error::InvalidField(format!(
        "unknown field {flag:?}; use \"cyclotomic\" or \"prime:<p>\""
    )))
}

fn build_limits(cli: &Cli) -> Limits {
    let mut limits = Limits::default();
    let env_usize = |key: &str| std::env::var(key).ok().and_then(|v| v.parse::<usize>().ok());
    let env_u64 = |key: &str| std::env::var(key).ok().and_then(|v| v.parse::<u64>().ok());
    if let Some(v) = env_usize("CEVA_MAX_BASIS") {
        limits.max_basis = v;
    }
    if let Some(v) = env_u64("CEVA_MAX_DEGREE") {
        limits.max_degree = v as u32;
    }
    if let Some(v) = env_u64("CEVA_TIME_BUDGET") {
        limits.time_budget = Some(Duration::from_secs(v));
    }
    if let Some(v) = cli.max_basis {
        limits.max_basis = v;
    }
    if let Some(v) = cli.max_degree {
        limits.max_degree = v;
    }
    if let Some(v) = cli.time_budget {
        limits.time_budget = Some(Duration::from_secs(v));
    }
    limits
}

/// A finished command: rendered text, JSON value, the verdict string
/// --expect compares against, and whether a verification check failed.
struct Outcome {
    text: String,
    json: serde_json::Value,
    verdict: String,
    check_failed: bool,
}

fn execute<F: Field>(cli: &Cli, field: &F, limits: &Limits) -> Result<Outcome, Error> {
    match &cli.command {
        Command::BuildConfig { at } => {
            let cfg = build_config(at.dim, at.n, field)?;
            let dump = config_dump(&cfg);
            Ok(Outcome {
                text: render::config_text(&cfg),
                json: serde_json::to_value(&dump).expect("dump serializes"),
                verdict: "ok".into(),
                check_failed: false,
            })
        }
        Command::VerifyLemma1 { at } => {
            let cfg = build_config(at.dim, at.n, field)?;
            let report = verify_lemma1(&cfg);
            Ok(Outcome {
                text: render::lemma1_text(&report),
                json: serde_json::to_value(&report).expect("report serializes"),
                verdict: if report.pass { "pass" } else { "fail" }.into(),
                check_failed: !report.pass,
            })
        }
        Command::CheckSymbolic { at, m } => {
            let cfg = build_config(at.dim, at.n, field)?;
            let report = certify::symbolic_check(&cfg, *m);
            Ok(Outcome {
                text: render::symbolic_text(&report),
                json: serde_json::to_value(&report).expect("report serializes"),
                verdict: if report.all_pass { "pass" } else { "fail" }.into(),
                check_failed: false,
            })
        }
        Command::CheckOrdinary { at, r, dump_basis, order } => {
            let cfg = build_config(at.dim, at.n, field)?;
            let (report, gb) = certify::ordinary_power_check(&cfg, *r, limits)?;
            if let Some(path) = dump_basis {
                let ord = parse_order(order)?;
                let dump = if ord == gb.order() {
                    gb.dump()
                } else {
                    let ideal = certify::explicit_ideal(&cfg, limits)?.power(*r)?;
                    ideal.groebner(ord, limits)?.dump()
                };
                std::fs::write(path, dump)
                    .map_err(|e| Error::Check(format!("cannot write basis dump: {e}")))?;
            }
            Ok(Outcome {
                text: render::ordinary_text(&report),
                json: serde_json::to_value(&report).expect("report serializes"),
                verdict: if report.member { "member" } else { "nonmember" }.into(),
                check_failed: false,
            })
        }
        Command::CheckContainment { at, m, r } => {
            let cfg = build_config(at.dim, at.n, field)?;
            let report = certify::check_containment(&cfg, *m, *r, limits)?;
            Ok(Outcome {
                text: render::containment_text(&report),
                json: serde_json::to_value(&report).expect("report serializes"),
                verdict: report.verdict.clone(),
                check_failed: false,
            })
        }
        Command::CertifyChain { dim_max, n } => {
            let chain = certify::verify_chain(*dim_max, *n, field, limits)?;
            Ok(Outcome {
                text: render::chain_text(&chain),
                json: serde_json::to_value(&chain).expect("report serializes"),
                verdict: if chain.all_noncontainment { "noncontainment" } else { "failed" }.into(),
                check_failed: !chain.all_noncontainment,
            })
        }
    }
}

fn parse_order(name: &str) -> Result<TermOrder, Error> {
    match name {
        "grevlex" => Ok(TermOrder::Grevlex),
        "lex" => Ok(TermOrder::Lex),
        _ => Err(Error::Invalid(format!("unknown order {name:?}; use grevlex or lex"))),
    }
}

fn report_error(e: &Error) -> i32 {
    eprintln!("error: {e}");
    match e {
        Error::Resource(_) => EXIT_RESOURCE,
        Error::InvalidField(_) | Error::Invalid(_) | Error::Parse { .. } => EXIT_INVALID,
        Error::Certificate(_) | Error::Check(_) => EXIT_CHECK_FAILED,
        Error::DivisionByZero => EXIT_USAGE,
    }
}
