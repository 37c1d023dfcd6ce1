use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use inertia::qfield::SpectrumFamily;
use inertia::{Limits, DEFAULT_FLAG_CAP, DEFAULT_ORDER_CAP};
use inertia_cli::{
    render, run_fixture_check, run_fixture_eigen, run_fixture_project, run_gpd, run_spectrum,
    run_torus, GpdAction, Report,
};

#[derive(Parser)]
#[command(
    name = "inertia",
    version,
    about = "Exact inertia operators on finite groupoids and stacks"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,

    /// Largest group order accepted from a group spec.
    #[arg(long, env = "INERTIA_ORDER_CAP", default_value_t = DEFAULT_ORDER_CAP, global = true)]
    order_cap: usize,

    /// Largest torus rank accepted for flag enumeration.
    #[arg(long, env = "INERTIA_FLAG_CAP", default_value_t = DEFAULT_FLAG_CAP, global = true)]
    flag_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Inertia operators on the class of BG.
    Gpd(GpdArgs),
    /// Motivic class of the quasi-split torus attached to a permutation action.
    Torus {
        /// Rank of the character lattice.
        #[arg(long)]
        r: usize,
        /// Generators in one-based cycle notation, e.g. "(1 2 3), (1 2)".
        #[arg(long, default_value = "")]
        gens: String,
    },
    /// Test a polynomial in q for membership in an eigenvalue family.
    Spectrum {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value = "full")]
        family: SpectrumFamily,
    },
    /// Eigen-analysis of a built-in operator matrix (bgl2, bn, bgl3).
    Fixture(FixtureArgs),
}

#[derive(Args)]
#[command(group(ArgGroup::new("op").required(true)))]
struct GpdArgs {
    /// Group: Zn, Sn, Dn, Q8, "Za x Zb", perm:..., perm1:..., cayley:FILE.
    #[arg(long)]
    group: String,
    #[arg(long, group = "op")]
    inertia: bool,
    /// Operator on distinct commuting r-tuples.
    #[arg(long, group = "op", value_name = "R")]
    inertia_r: Option<usize>,
    /// k-fold iterated inertia.
    #[arg(long, group = "op", value_name = "K")]
    iterated: Option<usize>,
    /// Eigencomponents under the inertia operator.
    #[arg(long, group = "op")]
    projections: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("op").required(true)))]
struct FixtureArgs {
    #[arg(long)]
    name: String,
    #[arg(long, group = "op")]
    eigen: bool,
    /// Basis label or "label=value; ..." vector to decompose.
    #[arg(long, group = "op", value_name = "VECTOR")]
    project: Option<String>,
    #[arg(long, group = "op")]
    check: bool,
}

fn emit<R: Report>(report: R, json: bool) -> Result<bool> {
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{}", render(&report, json)) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            return Err(e.into());
        }
    }
    Ok(report.ok())
}

fn run(cli: Cli) -> Result<bool> {
    let json = cli.json || cli.format == Format::Json;
    let limits = Limits {
        order_cap: cli.order_cap,
        flag_cap: cli.flag_cap,
    };
    match cli.command {
        Command::Gpd(a) => {
            let action = if a.inertia {
                GpdAction::Inertia
            } else if let Some(r) = a.inertia_r {
                GpdAction::InertiaR(r)
            } else if let Some(k) = a.iterated {
                GpdAction::Iterated(k)
            } else {
                GpdAction::Projections
            };
            emit(run_gpd(&a.group, action, limits)?, json)
        }
        Command::Torus { r, gens } => emit(run_torus(r, &gens, limits)?, json),
        Command::Spectrum { poly, family } => emit(run_spectrum(&poly, family)?, json),
        Command::Fixture(a) => {
            if a.eigen {
                emit(run_fixture_eigen(&a.name)?, json)
            } else if let Some(v) = a.project {
                emit(run_fixture_project(&a.name, &v)?, json)
            } else {
                emit(run_fixture_check(&a.name)?, json)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
