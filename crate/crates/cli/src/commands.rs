//! Subcommand bodies. Each writes its human-readable output to `out`,
//! diagnostics to `err`, and returns the process exit code.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::Args;
use thiserror::Error;

use knotcert_core::algebra::sturm::{refine, refine_to_digits};
use knotcert_core::algebra::{isolate_real_roots, rat, Poly, RootInterval};
use knotcert_core::certify::{analyze_roots, certify, checked_alexander, integer_coeffs, CertifyError, Verdict};
use knotcert_core::family_checks::run_family_checks;
use knotcert_core::twobridge::FractionError;

use crate::input::KnotSelector;
use crate::report::{ReportDocument, Timings};

pub const EXIT_APPLIES: i32 = 0;
pub const EXIT_INAPPLICABLE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid knot: {0}")]
    Input(#[from] FractionError),
    #[error(transparent)]
    Certify(#[from] CertifyError),
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Args, Debug, Clone)]
pub struct CertifyArgs {
    #[command(flatten)]
    pub knot: KnotSelector,
    /// Write the JSON report here
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
    /// Suppress the summary on standard output
    #[arg(long)]
    pub quiet: bool,
    /// Omit timings so identical inputs give identical JSON
    #[arg(long)]
    pub canonical: bool,
}

#[derive(Args, Debug, Clone)]
pub struct AlexanderArgs {
    #[command(flatten)]
    pub knot: KnotSelector,
    /// Also list the real roots with isolating intervals
    #[arg(long)]
    pub roots: bool,
    /// Decimal digits for root approximations
    #[arg(long, default_value_t = 6, value_name = "D")]
    pub digits: usize,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    /// Check family members j = 1..=N
    #[arg(long, default_value_t = 10, value_name = "N")]
    pub j_max: u64,
}

fn coeff_line(c: &[i64]) -> String {
    c.iter().map(i64::to_string).collect::<Vec<_>>().join(" ")
}

fn decimal(p: &Poly, iv: &RootInterval, digits: usize) -> String {
    refine_to_digits(p, iv, digits).decimal(digits)
}

fn report_error(err: &mut dyn Write, e: &CliError) -> i32 {
    let _ = writeln!(err, "error: {e}");
    EXIT_INVALID
}

pub fn run_certify(args: &CertifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match certify_inner(args, out) {
        Ok(code) => code,
        Err(e) => report_error(err, &e),
    }
}

fn certify_inner(args: &CertifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let input = args.knot.resolve()?;
    let start = Instant::now();
    let c = certify(input.fraction)?;
    let timings = Timings {
        total_ms: start.elapsed().as_millis() as u64,
    };
    let cert = &c.certificate;

    if !args.quiet {
        writeln!(out, "knot {}", input.fraction)?;
        if let Some(cf) = &input.continued_fraction {
            writeln!(out, "continued fraction [{}]", coeff_line(cf).replace(' ', ","))?;
        }
        writeln!(out, "alexander {}", coeff_line(&cert.alexander))?;
        writeln!(out, "qualifying roots {}", cert.qualifying_roots)?;
        for r in &cert.roots {
            writeln!(
                out,
                "  xi ~ {}  rigid={}  trace^2>4={}",
                decimal(&r.xi_factor, &r.interval, 6),
                r.rigid,
                r.meridian_trace_exceeds_4
            )?;
        }
        for b in &c.branches {
            writeln!(
                out,
                "branch {}  real t-roots={}  H1(knot)={}  H1(filled)={}  rigid={}",
                b.modulus_in_t,
                b.real_root_intervals.len(),
                b.dims_knot.dim_h1,
                b.dims_filled.dim_h1,
                b.rigid
            )?;
        }
        writeln!(out, "verdict {}", cert.verdict.as_str())?;
    }

    if let Some(path) = &args.json {
        let doc = ReportDocument::new(input, &c, (!args.canonical).then_some(timings));
        let text = doc.to_json()? + "\n";
        fs::write(path, text).map_err(|source| CliError::Write {
            path: path.clone(),
            source,
        })?;
    }

    Ok(match cert.verdict {
        Verdict::Applies => EXIT_APPLIES,
        Verdict::InapplicableNoRoot | Verdict::InapplicableNotRigid => EXIT_INAPPLICABLE,
    })
}

pub fn run_alexander(args: &AlexanderArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match alexander_inner(args, out) {
        Ok(()) => 0,
        Err(e) => report_error(err, &e),
    }
}

fn alexander_inner(args: &AlexanderArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let input = args.knot.resolve()?;
    let delta = checked_alexander(input.fraction)?;
    writeln!(out, "{}", coeff_line(&integer_coeffs(&delta)?))?;
    if !args.roots {
        return Ok(());
    }
    let analysis = analyze_roots(&delta)?;
    let (zero, one) = (rat(0), rat(1));
    for sf in &analysis.factors {
        let f = &sf.factor;
        for iv in isolate_real_roots(f) {
            let mut iv = refine_to_digits(f, &iv, args.digits);
            if f.sign_at(&zero) != 0 {
                while iv.contains(&zero) {
                    iv = refine(f, &iv, &(iv.width() / rat(2)));
                }
            }
            let (sign, class) = if !iv.is_positive() {
                ("nonpositive", "excluded")
            } else if f.sign_at(&one) == 0 && iv.contains(&one) {
                ("positive", "excluded (xi = 1)")
            } else if sf.multiplicity > 1 {
                ("positive", "excluded (multiple)")
            } else {
                ("positive", "qualifying")
            };
            writeln!(
                out,
                "root {}  multiplicity={}  {}  {}  interval ({}, {})",
                iv.decimal(args.digits),
                sf.multiplicity,
                sign,
                class,
                iv.lo,
                iv.hi
            )?;
        }
    }
    Ok(())
}

pub fn run_verify(args: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if args.j_max == 0 {
        let _ = writeln!(err, "error: --j-max must be at least 1");
        return EXIT_INVALID;
    }
    let items = run_family_checks(args.j_max);
    let mut failed = 0;
    for it in &items {
        let status = if it.passed { "PASS" } else { "FAIL" };
        let _ = if it.detail.is_empty() {
            writeln!(out, "{status} j={} {}", it.j, it.kind.label())
        } else {
            writeln!(out, "{status} j={} {}: {}", it.j, it.kind.label(), it.detail)
        };
        failed += usize::from(!it.passed);
    }
    let _ = writeln!(out, "{} of {} checks passed", items.len() - failed, items.len());
    if failed == 0 {
        0
    } else {
        1
    }
}
