//! Thin command-line front end: flag parsing, config-file merge, dispatch,
//! and exit-code mapping. All actual work lives in the library; see
//! `config::execute` and the crate examples.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{ArgAction, Args, Parser, Subcommand};

use tatecalc::config::{self, parse_window_spec, PartialConfig, RunConfig};
use tatecalc::Error;

#[derive(Parser)]
#[command(
    name = "tatecalc",
    version,
    about = "Exact bigraded spectral sequence calculator over F_p with height p-1 stabilizer presets"
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Sub>,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Subcommand, Clone, Copy)]
enum Sub {
    /// Monomial basis of a preset ring at one bidegree
    RingBasis,
    /// Turn the pages of a preset spectral sequence (tables or charts)
    SsRun,
    /// Derive the horizontal vanishing line with its propagation trace
    VanishingLine,
    /// Filtration report bounding the exotic Picard group
    PicardBound,
    /// Diagonal ring dimensions against the necklace oracle
    Dims,
    /// Built-in verification battery
    Selftest,
}

impl Sub {
    fn name(self) -> &'static str {
        match self {
            Sub::RingBasis => "ring-basis",
            Sub::SsRun => "ss-run",
            Sub::VanishingLine => "vanishing-line",
            Sub::PicardBound => "picard-bound",
            Sub::Dims => "dims",
            Sub::Selftest => "selftest",
        }
    }
}

#[derive(Args)]
struct Flags {
    /// Odd prime p; presets live at height n = p - 1
    #[arg(long, global = true)]
    prime: Option<u32>,
    /// Level: cp, f, n, or g (--group is the same flag)
    #[arg(long, global = true, visible_alias = "group")]
    level: Option<String>,
    /// Work in the beta-inverted (Farrell-Tate) ring
    #[arg(long, global = true, action = ArgAction::SetTrue)]
    inverted: bool,
    /// Filtration degree s
    #[arg(long, global = true)]
    s: Option<i64>,
    /// Internal degree t
    #[arg(long, global = true)]
    t: Option<i64>,
    /// Window override: smin,smax,tmin,tmax (must contain the default interior)
    #[arg(long, global = true)]
    window: Option<String>,
    /// Output format: table, ascii-chart, or svg
    #[arg(long, global = true)]
    format: Option<String>,
    /// Write chart/table payload to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// JSON config file; explicit flags win over its fields
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for the randomized self-checks
    #[arg(long, global = true)]
    seed: Option<u64>,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e);
            match e {
                Error::Hypothesis(_) => 2,
                Error::InternalCheck(_) => 3,
                _ => 1,
            }
        }
    }
}

fn dispatch(cli: Cli) -> tatecalc::Result<()> {
    let window = match cli.flags.window.as_deref() {
        Some(text) => Some(parse_window_spec(text)?),
        None => None,
    };
    let from_flags = PartialConfig {
        command: cli.command.map(|c| c.name().to_string()),
        prime: cli.flags.prime,
        level: cli.flags.level,
        group: None,
        inverted: if cli.flags.inverted { Some(true) } else { None },
        s: cli.flags.s,
        t: cli.flags.t,
        window,
        format: cli.flags.format,
        out: cli.flags.out,
        seed: cli.flags.seed,
    };
    let from_file = match &cli.flags.config {
        Some(path) => PartialConfig::from_json_file(path)?,
        None => PartialConfig::default(),
    };
    let run = RunConfig::resolve(PartialConfig::overlay(from_file, from_flags))?;
    let output = config::execute(&run)?;
    print!("{}", output.stdout);
    if let Some((path, payload)) = output.artifact {
        std::fs::write(&path, payload)
            .map_err(|e| Error::Config(format!("cannot write {}: {}", path.display(), e)))?;
    }
    Ok(())
}
