use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{Context, Result};

use rk_core::certifier::propagate_with_transports;
use rk_core::lattice::{enumerate_lines, LatticeDims};
use rk_core::puzzle::{
    clues_from_grid, grid_from_solution, parse_puzzle, random_grid, render_grid, render_mask,
    serialize_grid, serialize_puzzle, validate,
};
use rk_core::slope::slope_prefix;
use rk_core::uniqueness::{
    clue_rank, default_max_q, entry_uniqueness_mask, invariants, search_table, TableRow,
};
use rk_core::{Grid, Puzzle, Slope, SolutionStatus};

use crate::{Command, EXIT_OK, EXIT_UNSOLVABLE};

/// Bad arguments that only show up after parsing, e.g. a zero dimension.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn dims(n: usize, m: usize) -> Result<LatticeDims> {
    LatticeDims::new(n, m).map_err(|e| usage(e.to_string()))
}

fn prefix(through: Slope) -> Vec<Slope> {
    slope_prefix(through).expect("--through is validated as an ordered slope")
}

pub fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Lines { n, m, slope } => lines(dims(n, m)?, slope, out),
        Command::Matrix { n, m, through } => matrix(dims(n, m)?, through, out),
        Command::Solve { file } => solve(&file, out),
        Command::Mask { n, m, through } => {
            let mask = entry_uniqueness_mask(dims(n, m)?, &prefix(through))?;
            out.write_all(render_mask(&mask).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Invariants { n, m, max_q } => {
            let d = dims(n, m)?;
            if max_q == Some(0) {
                return Err(usage("--max-q must be at least 1"));
            }
            let report = invariants(d, max_q.unwrap_or_else(|| default_max_q(d)))?;
            writeln!(out, "{report}")?;
            Ok(EXIT_OK)
        }
        Command::Table {
            max_n,
            max_q,
            jobs,
            csv,
        } => table(max_n, max_q, jobs, csv.as_deref(), out),
        Command::Certify {
            n,
            through,
            log,
            transports,
        } => certify(dims(n, n)?, through, log.as_deref(), &transports, out),
        Command::Generate {
            n,
            m,
            through,
            seed,
            range,
            out: path,
        } => generate(dims(n, m)?, through, seed, range, path.as_deref(), out),
    }
}

fn lines(d: LatticeDims, slope: Slope, out: &mut dyn Write) -> Result<i32> {
    for line in enumerate_lines(d, slope) {
        write!(out, "{} {}:", slope, line.offset())?;
        for c in line.cells() {
            write!(out, " {c}")?;
        }
        writeln!(out)?;
    }
    Ok(EXIT_OK)
}

fn matrix(d: LatticeDims, through: Slope, out: &mut dyn Write) -> Result<i32> {
    let summary = clue_rank(d, &prefix(through))?;
    writeln!(out, "rows {}", summary.rows)?;
    writeln!(out, "cols {}", d.cell_count())?;
    writeln!(out, "rank {}", summary.rank)?;
    writeln!(out, "nullity {}", d.cell_count() - summary.rank)?;
    Ok(EXIT_OK)
}

fn solve(file: &Path, out: &mut dyn Write) -> Result<i32> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let p: Puzzle = parse_puzzle(&text).with_context(|| format!("parsing {}", file.display()))?;
    let sol = p.solve()?;
    match sol.status {
        SolutionStatus::Unique => {
            let g = grid_from_solution(p.dims(), sol.unique().expect("unique"))?;
            out.write_all(render_grid(&g).as_bytes())?;
            Ok(EXIT_OK)
        }
        SolutionStatus::Underdetermined => {
            writeln!(out, "underdetermined(dim={})", sol.nullbasis.dim())?;
            let sample = sol.particular.as_ref().expect("consistent system");
            out.write_all(render_grid(&grid_from_solution(p.dims(), sample)?).as_bytes())?;
            Ok(EXIT_OK)
        }
        SolutionStatus::Inconsistent => {
            writeln!(out, "inconsistent")?;
            let diag = validate(&p);
            for (a, b) in &diag.conflicts {
                writeln!(out, "totals differ: slope {a} vs slope {b}")?;
            }
            Ok(EXIT_UNSOLVABLE)
        }
    }
}

fn table(
    max_n: usize,
    max_q: Option<u32>,
    jobs: usize,
    csv_path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    if max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    if jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    if max_q == Some(0) {
        return Err(usage("--max-q must be at least 1"));
    }
    let rows = search_table(max_n, max_q, jobs)?;
    writeln!(
        out,
        "{:>4}  {:>6}  {:>10}  {:>11}  {:>6}",
        "n", "slope", "prefix_len", "matrix_rows", "rank"
    )?;
    for r in &rows {
        writeln!(
            out,
            "{:>4}  {:>6}  {:>10}  {:>11}  {:>6}",
            r.n,
            r.slope.to_string(),
            r.prefix_len,
            r.matrix_rows,
            r.rank
        )?;
    }
    if let Some(path) = csv_path {
        write_csv(path, &rows).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(EXIT_OK)
}

fn write_csv(path: &Path, rows: &[TableRow]) -> Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["n", "minimal_slope", "prefix_len", "matrix_rows", "rank"])?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.slope.to_string(),
            r.prefix_len.to_string(),
            r.matrix_rows.to_string(),
            r.rank.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

fn certify(
    d: LatticeDims,
    through: Slope,
    log: Option<&Path>,
    transports: &[rk_core::GridTransform],
    out: &mut dyn Write,
) -> Result<i32> {
    let slopes = prefix(through);
    let set = propagate_with_transports(d, &slopes, &BTreeSet::new(), transports)
        .map_err(|e| usage(e.to_string()))?;
    let mask = entry_uniqueness_mask(d, &slopes)?;
    let certified = set.to_mask();
    writeln!(out, "certified {}/{}", set.len(), d.cell_count())?;
    writeln!(out, "unique {}/{}", mask.unique_count(), d.cell_count())?;
    writeln!(
        out,
        "sound {}",
        if mask.covers(&certified) { "yes" } else { "no" }
    )?;
    writeln!(
        out,
        "complete {}",
        if certified == mask { "yes" } else { "no" }
    )?;
    if let Some(path) = log {
        fs::write(path, set.derivation_log())
            .with_context(|| format!("writing {}", path.display()))?;
        writeln!(out, "log {}", path.display())?;
    }
    Ok(EXIT_OK)
}

fn generate(
    d: LatticeDims,
    through: Slope,
    seed: u64,
    (lo, hi): (i64, i64),
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32> {
    let g: Grid = random_grid(d, lo, hi, seed)?;
    let p = clues_from_grid(&g, &prefix(through))?;
    let (grid_text, puzzle_text) = (serialize_grid(&g), serialize_puzzle(&p));
    match path {
        None => {
            out.write_all(grid_text.as_bytes())?;
            out.write_all(puzzle_text.as_bytes())?;
        }
        Some(base) => {
            let grid_path = base.with_extension("grid");
            let puzzle_path = base.with_extension("rk");
            fs::write(&grid_path, grid_text)
                .with_context(|| format!("writing {}", grid_path.display()))?;
            fs::write(&puzzle_path, puzzle_text)
                .with_context(|| format!("writing {}", puzzle_path.display()))?;
            writeln!(out, "{}", grid_path.display())?;
            writeln!(out, "{}", puzzle_path.display())?;
        }
    }
    Ok(EXIT_OK)
}
