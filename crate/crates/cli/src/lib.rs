//! Command-line front end: polynomial parsing, the scenario catalog and
//! report output.

pub mod commands;
pub mod error;
pub mod parse;
pub mod report;
pub mod scenario;

use clap::{Args, Parser, Subcommand};
use glab_core::groups::DEFAULT_ORDER_BOUND;

pub use error::CliError;
pub use report::Report;

#[derive(Debug, Parser)]
#[command(
    name = "glab",
    about = "Exact computations with function fields, characters and curves"
)]
pub struct Cli {
    /// Emit a flat JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Search bound on place degrees or zeta terms.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// `a, b` or `E/F_q: a=.., b=..`.
    #[arg(long)]
    pub curve: String,
    #[arg(long, default_value_t = 7)]
    pub q: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Splitting pattern of a place in y-degree extension f(x, y) = 0.
    Split {
        poly: String,
        #[arg(long)]
        place: String,
        #[arg(long, default_value_t = 7)]
        q: u64,
    },
    /// Compare splitting of all places up to the bound.
    SplitEquiv {
        f: String,
        g: String,
        #[arg(long, default_value_t = 7)]
        q: u64,
    },
    /// First place of degree at least T that splits completely.
    SplitPrime {
        poly: String,
        #[arg(long, default_value_t = 1)]
        t: usize,
        #[arg(long, default_value_t = 7)]
        q: u64,
    },
    /// Zeta numerator of an elliptic curve.
    Zeta(CurveArgs),
    /// L-polynomial of y^2 = f(x).
    Lfun {
        #[arg(long)]
        quad: String,
        #[arg(long, default_value_t = 7)]
        q: u64,
    },
    /// Zeta and character L-functions of two quadratic subfields.
    Motivating {
        #[arg(long)]
        f1: String,
        #[arg(long)]
        f2: String,
        #[arg(long, default_value_t = 7)]
        q: u64,
    },
    /// Class field theory parameters and ray class orders.
    #[command(subcommand)]
    Cft(CftCommand),
    /// Point counts over F_q^i.
    Count {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long, default_value_t = 3)]
        upto: u32,
    },
    /// Group structure of the rational points.
    Clgroup(CurveArgs),
    /// j-invariant.
    J(CurveArgs),
    /// Division polynomial; the curve may have coefficients in F_q[t].
    Divpoly {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        l: u64,
    },
    /// Resultant cutting out the l-torsion field over F_q(t).
    TorsionResultant {
        #[command(flatten)]
        curve: CurveArgs,
        #[arg(long)]
        l: u64,
        #[arg(long, default_value_t = 10)]
        checks: usize,
    },
    /// Subgroup <q> of (Z/l)^* and the resulting monodromy.
    Igusa {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        l: u64,
    },
    /// Gassmann test of two subgroups, or a screen of one index.
    Gassmann {
        #[arg(long)]
        group: String,
        /// Generators separated by `;`.
        #[arg(long)]
        h: Option<String>,
        #[arg(long)]
        h2: Option<String>,
        #[arg(long)]
        index: Option<usize>,
    },
    /// Sampled checks of the L-function criteria.
    Criteria {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
    /// Rigidity of monomial characters of the semidirect product.
    Rigidity {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "")]
        h: String,
        #[arg(long)]
        l: u64,
    },
    /// Diagonal evidence for the same semidirect product.
    Diagonal {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "")]
        h: String,
        #[arg(long)]
        l: u64,
    },
    /// Two non-conjugate subgroups of Q8 with equal induced characters.
    Quaternion,
    /// Catalog of executable scenarios.
    #[command(subcommand)]
    Scenario(ScenarioCommand),
}

#[derive(Debug, Subcommand)]
pub enum CftCommand {
    Params {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        order: u64,
        #[arg(long)]
        h: u64,
        #[arg(long, default_value_t = 1)]
        min_t: u64,
    },
    Ray {
        #[arg(long)]
        h: u64,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        l: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum ScenarioCommand {
    Run { id: String },
    List,
}

pub fn execute(cli: &Cli) -> Result<Report, CliError> {
    use commands as c;
    let b = |d: usize| cli.bound.unwrap_or(d);
    match &cli.command {
        Command::Split { poly, place, q } => c::split(*q, poly, place),
        Command::SplitEquiv { f, g, q } => c::split_equiv(*q, f, g, b(1)),
        Command::SplitPrime { poly, t, q } => c::split_prime(*q, poly, *t),
        Command::Zeta(a) => c::zeta(a.q, &a.curve, b(4)),
        Command::Lfun { quad, q } => c::lfun(*q, quad, b(4)),
        Command::Motivating { f1, f2, q } => c::motivating(*q, f1, f2, b(4)),
        Command::Cft(CftCommand::Params {
            p,
            q,
            order,
            h,
            min_t,
        }) => c::cft_params(*p, *q, *order, *h, *min_t),
        Command::Cft(CftCommand::Ray { h, q, t, l }) => c::cft_ray(*h, *q, *t, *l),
        Command::Count { curve, upto } => c::count(curve.q, &curve.curve, *upto),
        Command::Clgroup(a) => c::clgroup(a.q, &a.curve),
        Command::J(a) => c::j_invariant(a.q, &a.curve),
        Command::Divpoly { curve, l } => c::divpoly(curve.q, &curve.curve, *l),
        Command::TorsionResultant { curve, l, checks } => {
            c::torsion_resultant(curve.q, &curve.curve, *l, *checks, cli.seed)
        }
        Command::Igusa { q, l } => c::igusa(*q, *l),
        Command::Gassmann {
            group,
            h,
            h2,
            index,
        } => c::gassmann(group, h.as_deref(), h2.as_deref(), *index),
        Command::Criteria { group, count } => c::criteria(group, *count, cli.seed),
        Command::Rigidity { group, h, l } => c::rigidity(group, h, *l, b(DEFAULT_ORDER_BOUND)),
        Command::Diagonal { group, h, l } => c::diagonal(group, h, *l, b(DEFAULT_ORDER_BOUND)),
        Command::Quaternion => c::quaternion(),
        Command::Scenario(ScenarioCommand::Run { id }) => scenario::run(id),
        Command::Scenario(ScenarioCommand::List) => Ok(scenario::list()),
    }
}

/// Run with parsed arguments, writing to `out` and `err`; returns the exit
/// code.
pub fn run_with(cli: &Cli, out: &mut impl std::io::Write, err: &mut impl std::io::Write) -> i32 {
    match execute(cli) {
        Ok(report) => {
            let body = if cli.json {
                report.json()
            } else {
                report.text()
            };
            let _ = out.write_all(body.as_bytes());
            match &report.failure {
                Some(f) => {
                    let _ = writeln!(err, "{}", CliError::Assertion(f.clone()));
                    1
                }
                None => 0,
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

/// Parse `args` (including the program name) and run.
pub fn run<I, T>(args: I, out: &mut impl std::io::Write, err: &mut impl std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run_with(&cli, out, err),
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{e}");
            2
        }
        Err(e) => {
            let _ = write!(out, "{e}");
            0
        }
    }
}
