//! The `rk` command line: lattice line-sum analysis, solving, table search,
//! peeling certificates and puzzle generation.
//!
//! Exit status is 0 on success, 1 when the input is unsolvable or cannot be
//! processed, and 2 on usage errors.

mod commands;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use rk_core::symmetry::GridTransform;
use rk_core::Slope;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNSOLVABLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rk",
    version,
    about = "Uniqueness analysis for lattice line-sum puzzles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the lines of one slope and their cells.
    Lines {
        n: usize,
        m: usize,
        #[arg(allow_hyphen_values = true, value_parser = parse_slope)]
        slope: Slope,
    },
    /// Size, rank and nullity of the clue matrix.
    Matrix {
        n: usize,
        m: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_through)]
        through: Slope,
    },
    /// Solve a puzzle file.
    Solve { file: PathBuf },
    /// Render which cells the clues determine.
    Mask {
        n: usize,
        m: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_through)]
        through: Slope,
    },
    /// The five uniqueness invariants of an n x m lattice.
    Invariants {
        n: usize,
        m: usize,
        #[arg(long)]
        max_q: Option<u32>,
    },
    /// Minimal slope prefix for every square lattice up to --max-n.
    Table {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_q: Option<u32>,
        #[arg(long, env = "RK_JOBS", default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Peeling fixpoint on an n x n lattice compared with the exact mask.
    Certify {
        n: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_through)]
        through: Slope,
        /// Write the derivation here, one step per line.
        #[arg(long)]
        log: Option<PathBuf>,
        /// Also close the certified set under this symmetry (repeatable).
        #[arg(long = "transport", value_parser = parse_transform)]
        transports: Vec<GridTransform>,
    },
    /// Random integer grid and the clues it induces.
    Generate {
        n: usize,
        m: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_through)]
        through: Slope,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range, default_value = "1..9")]
        range: (i64, i64),
        /// Write `<out>.grid` and `<out>.rk` instead of printing both.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_slope(s: &str) -> Result<Slope, String> {
    s.parse().map_err(|e: rk_core::Error| e.to_string())
}

fn parse_through(s: &str) -> Result<Slope, String> {
    let slope = parse_slope(s)?;
    if !slope.in_order() {
        return Err(format!(
            "{s} is not an integer, the reciprocal of one, or inf"
        ));
    }
    Ok(slope)
}

fn parse_transform(s: &str) -> Result<GridTransform, String> {
    s.parse().map_err(|e: rk_core::Error| e.to_string())
}

/// `lo..hi`, both ends included.
fn parse_range(s: &str) -> Result<(i64, i64), String> {
    let (lo, hi) = s.split_once("..").ok_or("expected lo..hi")?;
    let lo: i64 = lo
        .parse()
        .map_err(|_| format!("invalid lower bound {lo:?}"))?;
    let hi: i64 = hi
        .parse()
        .map_err(|_| format!("invalid upper bound {hi:?}"))?;
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match commands::execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let closed = e
                .downcast_ref::<std::io::Error>()
                .is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe);
            if closed {
                return EXIT_OK;
            }
            let _ = writeln!(err, "error: {e:#}");
            e.downcast_ref::<commands::UsageError>()
                .map_or(EXIT_UNSOLVABLE, |_| EXIT_USAGE)
        }
    }
}
