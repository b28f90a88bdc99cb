//! `wallkit` — exact lattice computations for wall divisors on Nikulin
//! orbifolds.
//!
//! Every command prints one line of compact JSON to stdout by default;
//! `--pretty` switches to human-readable text. Errors go to stderr as
//! `{"error":<class>,"message":<detail>}`. Exit codes: `0` success, `1`
//! verification failure, `2` usage error, `3` precondition violation (see
//! [`error`] for the policy).
//!
//! The environment variable `WALLKIT_THREADS`, when set, must be a positive
//! integer. It caps the worker threads the kernels may use; the current
//! kernels are exact and sequential, so any valid cap is honored trivially,
//! but the value is validated up front so scripts fail fast on typos.

mod error;
mod json;
mod ops;
mod picfile;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::CliError;
use crate::ops::Outcome;

#[derive(Parser)]
#[command(
    name = "wallkit",
    version,
    about = "Exact lattice computations for wall divisors on Nikulin orbifolds"
)]
struct Cli {
    /// Print human-readable text instead of compact JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a lattice from the standard registry.
    #[command(subcommand)]
    Lattice(LatticeCmd),
    /// Look up a named divisor class.
    #[command(subcommand)]
    Class(ClassCmd),
    /// Invariants of a single vector.
    #[command(subcommand)]
    Vec(VecCmd),
    /// Classify a primitive vector into its monodromy-orbit row.
    Classify {
        /// Ambient lattice: Lambda or LambdaHat1.
        #[arg(long)]
        lattice: String,
        /// Comma-separated integer coordinates.
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
    },
    /// Wall-divisor membership for a single ray.
    #[command(subcommand)]
    Wall(WallCmd),
    /// Enumerate all wall rays meeting a Picard sublattice.
    Walls {
        #[command(subcommand)]
        cmd: WallsCmd,
    },
    /// Kähler-chamber side tests.
    #[command(subcommand)]
    Kahler(KahlerCmd),
    /// Discriminant-group data for a registry lattice.
    Disc {
        /// Lattice name, e.g. E8m2.
        #[arg(long)]
        lattice: String,
        /// Report the orbit sizes under the simple-root reflections.
        #[arg(long)]
        orbits: bool,
    },
    /// Eichler-criterion isometries between vectors of equal invariants.
    #[command(subcommand)]
    Eichler(EichlerCmd),
    /// Run the case-study verification suites.
    Verify {
        /// Suite name: all, generic, one-curve, two-curves, elliptic, involution.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand)]
enum LatticeCmd {
    /// Print rank, determinant, parity, and the Gram matrix.
    Show {
        /// Lattice name, e.g. Lambda, LambdaHat1, E8m2, U(2), K3[2].
        #[arg(long)]
        name: String,
    },
}

#[derive(Subcommand)]
enum ClassCmd {
    /// Print the ambient lattice and coordinates of a named class.
    Show {
        /// Class name, e.g. delta_prime, sigma_hat, l2_-1, e1_sup1.
        #[arg(long)]
        name: String,
    },
}

#[derive(Subcommand)]
enum VecCmd {
    /// Print the norm and divisibility of a vector.
    Invariants {
        /// Lattice name from the standard registry.
        #[arg(long)]
        lattice: String,
        /// Comma-separated integer coordinates.
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
    },
}

#[derive(Subcommand)]
enum WallCmd {
    /// Decide whether the ray through the vector is a wall divisor.
    Test {
        /// Comma-separated coordinates in Lambda (16 entries).
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
    },
}

#[derive(Subcommand)]
enum WallsCmd {
    /// Enumerate the wall rays whose classes lie in the Picard sublattice.
    Enum {
        /// Path to a JSON file {"ambient":<name>,"basis":[[...],...]}.
        #[arg(long)]
        pic: PathBuf,
    },
}

#[derive(Subcommand)]
enum KahlerCmd {
    /// Test whether alpha lies in the Kähler chamber selected by omega.
    Test {
        /// Path to the Picard file fixing the wall set.
        #[arg(long)]
        pic: PathBuf,
        /// Reference class of positive norm, off every wall.
        #[arg(long, allow_hyphen_values = true)]
        omega: String,
        /// Class to test, in ambient coordinates.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
}

#[derive(Subcommand)]
enum EichlerCmd {
    /// Produce a certified isometry mapping one primitive vector to another.
    Normalize {
        /// Lattice name; needs two orthogonal unimodular hyperbolic planes.
        #[arg(long)]
        lattice: String,
        /// Source vector, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        /// Target vector, comma-separated.
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
}

/// Validate `WALLKIT_THREADS` if present.
fn check_threads_env() -> Result<(), CliError> {
    match std::env::var("WALLKIT_THREADS") {
        Err(std::env::VarError::NotPresent) => Ok(()),
        Err(std::env::VarError::NotUnicode(_)) => Err(CliError::Usage(
            "WALLKIT_THREADS is not valid unicode".to_string(),
        )),
        Ok(raw) => match raw.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(()),
            _ => Err(CliError::Usage(format!(
                "WALLKIT_THREADS must be a positive integer, got {raw:?}"
            ))),
        },
    }
}

fn dispatch(cli: Cli) -> Result<Outcome, CliError> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Lattice(LatticeCmd::Show { name }) => ops::lattice_show(&name, pretty),
        Command::Class(ClassCmd::Show { name }) => ops::class_show(&name, pretty),
        Command::Vec(VecCmd::Invariants { lattice, coords }) => {
            ops::vec_invariants(&lattice, &coords, pretty)
        }
        Command::Classify { lattice, coords } => ops::classify(&lattice, &coords, pretty),
        Command::Wall(WallCmd::Test { coords }) => ops::wall_test(&coords, pretty),
        Command::Walls {
            cmd: WallsCmd::Enum { pic },
        } => ops::walls_enum(&pic, pretty),
        Command::Kahler(KahlerCmd::Test { pic, omega, alpha }) => {
            ops::kahler_test(&pic, &omega, &alpha, pretty)
        }
        Command::Disc { lattice, orbits } => ops::disc(&lattice, orbits, pretty),
        Command::Eichler(EichlerCmd::Normalize { lattice, from, to }) => {
            ops::eichler(&lattice, &from, &to, pretty)
        }
        Command::Verify { suite } => ops::verify(&suite, pretty),
    }
}

/// Write a line to stdout, treating a closed pipe (e.g. `wallkit ... | head`)
/// as a normal early exit rather than a panic.
fn emit(line: &str) -> Option<i32> {
    use std::io::Write;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match writeln!(out, "{line}").and_then(|_| out.flush()) {
        Ok(()) => None,
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Some(0),
        Err(_) => Some(1),
    }
}

fn run() -> i32 {
    let cli = Cli::parse();
    if let Err(e) = check_threads_env() {
        eprintln!("{}", e.to_json());
        return e.exit_code();
    }
    match dispatch(cli) {
        Ok(out) => emit(&out.stdout).unwrap_or(out.exit),
        Err(e) => {
            eprintln!("{}", e.to_json());
            e.exit_code()
        }
    }
}

fn main() {
    std::process::exit(run());
}
