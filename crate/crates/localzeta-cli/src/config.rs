//! Command-line flags and their validation.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use std::path::PathBuf;

pub const MAX_Q: u32 = 7;
pub const MAX_RMAX: i64 = 3;
pub const MAX_LEVEL: i64 = 4;

#[derive(Parser, Debug)]
#[command(name = "localzeta", version, about = "Exact verification of local zeta integrals and ★-epsilon factors")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run verification suites and write reports.
    Verify(CommonArgs),
    /// Print ε_*(ω) as `a*T^b` for every character of conductor ≤ rmax.
    EpsilonTable(CommonArgs),
}

#[derive(Args, Debug, Clone)]
pub struct CommonArgs {
    /// Residue field size (a prime).
    #[arg(long, default_value_t = 3)]
    pub q: u32,
    /// Residue characteristic; must equal q when given.
    #[arg(long)]
    pub p: Option<u32>,
    /// Haar normalization μ(𝒪), an exact rational such as 1 or 1/2.
    #[arg(long, default_value = "1")]
    pub mu: String,
    /// Conductor of the additive character.
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub d: i64,
    /// Largest multiplicative conductor enumerated.
    #[arg(long, default_value_t = 2)]
    pub rmax: i64,
    /// Finest coset level in basis sweeps.
    #[arg(long, default_value_t = 3)]
    pub level: i64,
    /// Quadrature tolerance for the archimedean suite.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    /// Comma-separated suites, or `all`.
    #[arg(long, default_value = "all")]
    pub suite: String,
    /// Seed for randomized cases.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Directory for report files.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    SchwartzOracle,
    Zeta1dEpsilon,
    IdentityA,
    DoubleStar,
    Lift2dInvariance,
    Measure,
    Fe2,
    Rho2,
    Archfe,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::SchwartzOracle,
        Suite::Zeta1dEpsilon,
        Suite::IdentityA,
        Suite::DoubleStar,
        Suite::Lift2dInvariance,
        Suite::Measure,
        Suite::Fe2,
        Suite::Rho2,
        Suite::Archfe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::SchwartzOracle => "schwartz-oracle",
            Suite::Zeta1dEpsilon => "zeta1d-epsilon",
            Suite::IdentityA => "identity-A",
            Suite::DoubleStar => "double-star",
            Suite::Lift2dInvariance => "lift2d-invariance",
            Suite::Measure => "measure",
            Suite::Fe2 => "FE2",
            Suite::Rho2 => "rho2",
            Suite::Archfe => "archfe",
        }
    }

    fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name().eq_ignore_ascii_case(s))
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub q: u32,
    pub mu: BigRational,
    pub d: i64,
    pub rmax: i64,
    pub level: i64,
    pub tol: f64,
    pub suites: Vec<Suite>,
    pub seed: u64,
    pub out_dir: PathBuf,
    pub format: Format,
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|k| k * k <= n).all(|k| n % k != 0)
}

impl RunConfig {
    pub fn from_args(a: &CommonArgs) -> Result<Self, String> {
        if !is_prime(a.q) {
            return Err("q must be prime".into());
        }
        if a.q > MAX_Q {
            return Err(format!("q must be at most {MAX_Q}"));
        }
        if let Some(p) = a.p {
            if p != a.q {
                return Err(format!("p = {p} does not match q = {}; only prime residue fields are supported", a.q));
            }
        }
        let mu: BigRational = a.mu.trim().parse().map_err(|_| format!("cannot parse μ = {:?}", a.mu))?;
        if mu <= BigRational::from_integer(0.into()) {
            return Err("μ must be positive".into());
        }
        if !(0..=MAX_RMAX).contains(&a.rmax) {
            return Err(format!("rmax must lie in 0..={MAX_RMAX}"));
        }
        if !(0..=MAX_LEVEL).contains(&a.level) {
            return Err(format!("level must lie in 0..={MAX_LEVEL}"));
        }
        if a.d.abs() > 4 {
            return Err("d must lie in -4..=4".into());
        }
        if !(a.tol > 0.0 && a.tol <= 1e-3) {
            return Err("tol must lie in (0, 1e-3]".into());
        }
        let mut suites = Vec::new();
        for s in a.suite.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if s.eq_ignore_ascii_case("all") {
                suites.extend(Suite::ALL);
            } else {
                suites.push(Suite::parse(s).ok_or_else(|| format!("unknown suite {s:?}"))?);
            }
        }
        if suites.is_empty() {
            return Err("no suite selected".into());
        }
        suites.sort();
        suites.dedup();
        Ok(RunConfig {
            q: a.q,
            mu,
            d: a.d,
            rmax: a.rmax,
            level: a.level,
            tol: a.tol,
            suites,
            seed: a.seed,
            out_dir: a.out_dir.clone().unwrap_or_else(|| PathBuf::from("localzeta-report")),
            format: a.format,
        })
    }
}
