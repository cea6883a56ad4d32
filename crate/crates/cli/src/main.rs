//! `orbk`: batch computations of orbifold-cohomology data with exact
//! arithmetic and deterministic JSON reports.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.
//! Identical input yields byte-identical output: every report is a JSON
//! document with sorted object keys, rationals rendered as `p/q` strings,
//! and no timestamps.

mod commands;
mod input;
mod verify;

use clap::{Parser, Subcommand};
use commands::{CliError, CmdOutput};
use orbk_core::fingroup::DEFAULT_CAP;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "orbk",
    about = "Exact orbifold-cohomology computations for finite quotients and weighted projective spaces",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(clap::Args)]
struct FileArgs {
    /// Input description (JSON; see the README for the format).
    file: PathBuf,
    /// Enumeration cap for the group closure.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Twisted sectors with degree shifts, fixed dimensions and inverses.
    Sectors(FileArgs),
    /// Graded dimension table (age-graded for point/linear quotients).
    Poincare(FileArgs),
    /// Orbifold Euler number.
    Euler(FileArgs),
    /// Ring table, or one product of two sectors.
    Ring {
        #[command(flatten)]
        common: FileArgs,
        /// Sector index (give twice for a product of two sectors).
        #[arg(long = "sector")]
        sectors: Vec<usize>,
    },
    /// Pairing of two conjugacy classes on a point quotient.
    Pairing {
        #[command(flatten)]
        common: FileArgs,
        /// Conjugacy class index (give exactly twice).
        #[arg(long = "class")]
        classes: Vec<usize>,
    },
    /// Three-point invariant of three classes on a point quotient.
    Threepoint {
        #[command(flatten)]
        common: FileArgs,
        /// Conjugacy class index (give exactly three times).
        #[arg(long = "class")]
        classes: Vec<usize>,
    },
    /// Weighted k-mark constant-map count on a point quotient.
    Kpoint {
        #[command(flatten)]
        common: FileArgs,
        /// Conjugacy class index (give at least twice).
        #[arg(long = "class")]
        classes: Vec<usize>,
    },
    /// Splitting verdict for the fixed-locus inclusion of an element.
    Goodmap {
        #[command(flatten)]
        common: FileArgs,
        /// Element word over generator indices, e.g. "0.1.0"; "e" is the
        /// identity.
        #[arg(long)]
        element: String,
    },
    /// Inequivalent equivariant lifts for the fixed locus of an element.
    Lifts {
        #[command(flatten)]
        common: FileArgs,
        /// Element word over generator indices, e.g. "0.1.0".
        #[arg(long)]
        element: String,
    },
    /// Virtual dimension 2d from the dimension formula.
    Vdim {
        /// The pairing c1(TX).A as a rational "p/q".
        #[arg(long)]
        c1a: String,
        /// Complex dimension of the target.
        #[arg(long)]
        dim: i64,
        /// Genus of the domain.
        #[arg(long)]
        genus: i64,
        /// Number of marked points.
        #[arg(long)]
        marks: usize,
        /// Degree shift of each marked point (repeat per mark).
        #[arg(long = "iota")]
        iotas: Vec<String>,
    },
    /// Class-count comparison data for a crepant resolution (SL input).
    Mckay(FileArgs),
    /// Run the machine-checked invariant suite (built-in corpus, or one
    /// input file).
    Verify {
        /// Optional input description; without it the built-in corpus runs.
        file: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

fn run(cmd: Cmd) -> CmdOutput {
    match cmd {
        Cmd::Sectors(args) => {
            let spec = commands::load_spec(&args.file)?;
            commands::cmd_sectors(&spec, args.cap)
        }
        Cmd::Poincare(args) => {
            let spec = commands::load_spec(&args.file)?;
            commands::cmd_poincare(&spec, args.cap)
        }
        Cmd::Euler(args) => {
            let spec = commands::load_spec(&args.file)?;
            commands::cmd_euler(&spec, args.cap)
        }
        Cmd::Ring { common, sectors } => {
            let spec = commands::load_spec(&common.file)?;
            commands::cmd_ring(&spec, &sectors, common.cap)
        }
        Cmd::Pairing { common, classes } => {
            let spec = commands::load_spec(&common.file)?;
            commands::cmd_pairing(&spec, &classes, common.cap)
        }
        Cmd::Threepoint { common, classes } => {
            let spec = commands::load_spec(&common.file)?;
            commands::cmd_threepoint(&spec, &classes, common.cap)
        }
        Cmd::Kpoint { common, classes } => {
            let spec = commands::load_spec(&common.file)?;
            commands::cmd_kpoint(&spec, &classes, common.cap)
        }
        Cmd::Goodmap { common, element } => {
            let spec = commands::load_spec(&common.file)?;
            commands::cmd_goodmap(&spec, &element, common.cap)
        }
        Cmd::Lifts { common, element } => {
            let spec = commands::load_spec(&common.file)?;
            commands::cmd_lifts(&spec, &element, common.cap)
        }
        Cmd::Vdim {
            c1a,
            dim,
            genus,
            marks,
            iotas,
        } => commands::cmd_vdim(&c1a, dim, genus, marks, &iotas),
        Cmd::Mckay(args) => {
            let spec = commands::load_spec(&args.file)?;
            commands::cmd_mckay(&spec, args.cap)
        }
        Cmd::Verify { file, cap } => {
            let spec = match &file {
                Some(path) => Some(commands::load_spec(path)?),
                None => None,
            };
            commands::cmd_verify(spec.as_ref(), cap)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((report, code)) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("report serializes")
            );
            ExitCode::from(code as u8)
        }
        Err(CliError { message }) => {
            eprintln!(
                "{}",
                serde_json::to_string_pretty(&serde_json::json!({ "error": message }))
                    .expect("error serializes")
            );
            ExitCode::from(2)
        }
    }
}
