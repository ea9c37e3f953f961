//! `noetherline`: exact invariants of the family of canonically polarized
//! 3-folds on the Noether line, parametrized by integer pairs `(e, a)`.
//!
//! Exit codes: 0 success, 2 usage error, 3 failed certificate or identity
//! check. All output is deterministic: the same invocation produces the
//! same bytes.

mod render;

use std::fmt;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use noetherline::doublecover::{curve_probes, CheckMode, ConstructionCertificate};
use noetherline::family::{admissible_regions, all_regions, audit_noether_chain, enumerate};
use noetherline::identities::verify_identities;
use noetherline::pbundle::BundleGeometry;
use noetherline::{Coefficient, Error, Fraction, SurfaceDivisorClass};

#[derive(Parser)]
#[command(
    name = "noetherline",
    version,
    about = "Exact invariants of canonically polarized 3-folds on the Noether line K^3 = (4/3)p_g - 10/3"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute and verify the construction certificate of one member
    Invariants(InvariantsArgs),
    /// Enumerate certificates over a rectangle of parameters
    Enumerate(EnumerateArgs),
    /// Cohomology of a line bundle on the Hirzebruch surface Sigma_e
    Cohomology(CohomologyArgs),
    /// Intersection numbers of the standard divisors against probe curves
    Probe(ProbeArgs),
    /// Audit the inequality chain pinning the family to the Noether line
    AuditChain(AuditChainArgs),
    /// Run the symbolic identity suite over indeterminate parameters
    VerifyIdentities(VerifyIdentitiesArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Args)]
struct InvariantsArgs {
    /// Hirzebruch parameter e >= 0
    #[arg(long)]
    e: i64,
    /// Twist parameter a (negative values need --explore)
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    #[arg(long, value_enum, default_value = "table")]
    format: OutputFormat,
    /// Compute outside the admissible regions, skipping the family checks
    #[arg(long)]
    explore: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Range of e values, `lo..hi` (inclusive) or a single value
    #[arg(long, visible_alias = "e-range", allow_hyphen_values = true)]
    e: RangeArg,
    /// Range of a values, `lo..hi` (inclusive) or a single value
    #[arg(long, visible_alias = "a-range", allow_hyphen_values = true)]
    a: RangeArg,
    #[arg(long, value_enum, default_value = "table")]
    format: OutputFormat,
    /// Include boundary and inadmissible pairs instead of skipping them
    #[arg(long)]
    explore: bool,
}

#[derive(Args)]
struct CohomologyArgs {
    /// Coefficient of the negative section s (an integer here)
    #[arg(long, allow_hyphen_values = true)]
    alpha: Coefficient,
    /// Coefficient of the fiber l (an integer here)
    #[arg(long, allow_hyphen_values = true)]
    beta: Coefficient,
    /// Hirzebruch parameter e >= 0
    #[arg(long)]
    e: i64,
    #[arg(long, value_enum, default_value = "table")]
    format: OutputFormat,
}

#[derive(Args)]
struct ProbeArgs {
    /// Hirzebruch parameter e >= 0
    #[arg(long)]
    e: i64,
    /// Twist parameter a (negative values need --explore)
    #[arg(long, allow_negative_numbers = true)]
    a: i64,
    #[arg(long, value_enum, default_value = "table")]
    format: OutputFormat,
    /// Allow parameters outside the admissible regions
    #[arg(long)]
    explore: bool,
}

#[derive(Args)]
struct AuditChainArgs {
    /// Geometric genus, at least 3
    #[arg(long)]
    pg: i64,
    /// Degree of the canonical image surface (default: pg - 2)
    #[arg(long)]
    d_sigma: Option<i64>,
    /// Canonical pairing term, an exact fraction `n` or `n/d`
    /// (default: (pg - 4)/3)
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<Fraction>,
    /// Extra nonnegative contribution in the assembled bound (default: 0)
    #[arg(long, allow_hyphen_values = true)]
    remainder: Option<Fraction>,
    #[arg(long, value_enum, default_value = "table")]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyIdentitiesArgs {
    #[arg(long, value_enum, default_value = "table")]
    format: OutputFormat,
}

/// Inclusive integer range in `lo..hi` syntax; a bare `n` means `n..n`.
#[derive(Clone, Debug)]
struct RangeArg {
    lo: i64,
    hi: i64,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse_end = |t: &str| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| format!("`{}` is not an integer", t.trim()))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (parse_end(lo)?, parse_end(hi)?),
            None => {
                let n = parse_end(s)?;
                (n, n)
            }
        };
        if lo > hi {
            return Err(format!("range {lo}..{hi} is empty"));
        }
        Ok(RangeArg { lo, hi })
    }
}

enum CliError {
    Usage(String),
    Check(String),
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        match err {
            Error::CertificateFailure { .. } => CliError::Check(err.to_string()),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Check(msg) => f.write_str(msg),
        }
    }
}

struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            failed: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            print!("{}", output.text);
            if output.failed {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                CliError::Usage(_) => ExitCode::from(2),
                CliError::Check(_) => ExitCode::from(3),
            }
        }
    }
}

fn require_surface_parameter(e: i64) -> Result<(), CliError> {
    if e < 0 {
        return Err(CliError::Usage(format!(
            "Hirzebruch parameter must be nonnegative, got {e}"
        )));
    }
    Ok(())
}

fn require_explore_for_negative_a(a: i64, explore: bool) -> Result<(), CliError> {
    if a < 0 && !explore {
        return Err(CliError::Usage(format!(
            "a = {a} is negative; pass --explore to compute outside the family"
        )));
    }
    Ok(())
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Invariants(args) => {
            require_surface_parameter(args.e)?;
            require_explore_for_negative_a(args.a, args.explore)?;
            let mode = if args.explore {
                CheckMode::Explore
            } else {
                CheckMode::Strict
            };
            let certificate = ConstructionCertificate::compute(args.e, args.a, mode)?;
            Ok(Output::ok(match args.format {
                OutputFormat::Json => render::json(&certificate),
                OutputFormat::Csv => render::certificates_csv(std::slice::from_ref(&certificate)),
                OutputFormat::Table => render::certificate_table(&certificate),
            }))
        }
        Command::Enumerate(args) => {
            require_surface_parameter(args.e.lo)?;
            require_explore_for_negative_a(args.a.lo, args.explore)?;
            let filter: Vec<_> = if args.explore {
                all_regions().to_vec()
            } else {
                admissible_regions().to_vec()
            };
            let certificates = enumerate(args.e.lo..=args.e.hi, args.a.lo..=args.a.hi, &filter)?;
            Ok(Output::ok(match args.format {
                OutputFormat::Json => render::json(&certificates),
                OutputFormat::Csv => render::certificates_csv(&certificates),
                OutputFormat::Table => render::certificates_table(&certificates),
            }))
        }
        Command::Cohomology(args) => {
            require_surface_parameter(args.e)?;
            let concrete = |name: &str, c: &Coefficient| {
                c.as_i64().ok_or_else(|| {
                    CliError::Usage(format!("--{name} must be an integer here, got `{c}`"))
                })
            };
            let alpha = concrete("alpha", &args.alpha)?;
            let beta = concrete("beta", &args.beta)?;
            let class = SurfaceDivisorClass::from_ints(alpha, beta);
            let table = class.cohomology(args.e)?;
            Ok(Output::ok(render::cohomology(
                alpha,
                beta,
                args.e,
                &table,
                args.format,
            )))
        }
        Command::Probe(args) => {
            require_surface_parameter(args.e)?;
            require_explore_for_negative_a(args.a, args.explore)?;
            let geom = BundleGeometry::concrete(args.e, args.a);
            let probes = curve_probes(&geom)?;
            Ok(Output::ok(render::probes(
                args.e,
                args.a,
                &probes,
                args.format,
            )))
        }
        Command::AuditChain(args) => {
            let d_sigma = args.d_sigma.unwrap_or(args.pg - 2);
            let gamma = args.gamma.unwrap_or_else(|| Fraction::new(args.pg - 4, 3));
            let remainder = args.remainder.unwrap_or_else(Fraction::zero);
            let report = audit_noether_chain(args.pg, d_sigma, gamma, remainder)?;
            Ok(Output::ok(render::audit(&report, args.format)))
        }
        Command::VerifyIdentities(args) => {
            let checks = verify_identities();
            let failed = checks.iter().any(|c| !c.passed);
            Ok(Output {
                text: render::identities(&checks, args.format),
                failed,
            })
        }
    }
}
