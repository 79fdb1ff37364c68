//! Line-oriented text formats.
//!
//! Puzzle files:
//!
//! ```text
//! rk v1
//! dims <n> <m>
//! slopes <slope> <slope> ...
//! clue <slope> <offset> <value>
//! ```
//!
//! Grid files: `grid <n> <m>` followed by `m` rows of `n` values, top row
//! first. In both formats blank lines and lines starting with `#` are
//! ignored, and values are integers or reduced fractions `a/b` with `b > 0`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::lattice::{enumerate_lines, normalize_slopes, LatticeDims};
use crate::linalg::Scalar;
use crate::slope::Slope;

use super::{GridValues, PuzzleInstance};

const MAGIC: &str = "rk v1";

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_value<T: Scalar>(line: usize, tok: &str) -> Result<Ratio<T>> {
    let bad = || Error::parse(line, format!("invalid value {tok:?}"));
    let (num, den) = match tok.split_once('/') {
        None => (tok.parse::<T>().map_err(|_| bad())?, T::one()),
        Some((a, b)) => (
            a.parse::<T>().map_err(|_| bad())?,
            b.parse::<T>().map_err(|_| bad())?,
        ),
    };
    if den <= T::zero() || !num.gcd(&den).is_one() {
        return Err(Error::parse(
            line,
            format!("value {tok:?} is not a reduced fraction"),
        ));
    }
    Ok(Ratio::new_raw(num, den))
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("invalid {what} {tok:?}")))
}

fn parse_dims(line: usize, n: &str, m: &str) -> Result<LatticeDims> {
    let n = parse_usize(line, n, "dimension")?;
    let m = parse_usize(line, m, "dimension")?;
    LatticeDims::new(n, m).map_err(|e| Error::parse(line, e.to_string()))
}

fn expect_keyword<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
    last_line: usize,
) -> Result<(usize, Vec<&'a str>)> {
    let (no, l) = lines
        .next()
        .ok_or_else(|| Error::parse(last_line, format!("expected `{keyword}` line")))?;
    let mut toks = l.split_whitespace();
    if toks.next() != Some(keyword) {
        return Err(Error::parse(no, format!("expected `{keyword}` line")));
    }
    Ok((no, toks.collect()))
}

/// Parses a puzzle file. Clue lines may appear in any order; every line of
/// every declared slope needs exactly one clue.
pub fn parse_puzzle<T: Scalar>(text: &str) -> Result<PuzzleInstance<T>> {
    let total_lines = text.lines().count().max(1);
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, MAGIC)) => {}
        Some((no, _)) => return Err(Error::parse(no, format!("expected `{MAGIC}` header"))),
        None => {
            return Err(Error::parse(
                total_lines,
                format!("expected `{MAGIC}` header"),
            ))
        }
    }

    let (no, toks) = expect_keyword(&mut lines, "dims", total_lines)?;
    let [n, m] = toks[..] else {
        return Err(Error::parse(no, "`dims` takes two values"));
    };
    let dims = parse_dims(no, n, m)?;

    let (no, toks) = expect_keyword(&mut lines, "slopes", total_lines)?;
    let declared = toks
        .iter()
        .map(|t| {
            t.parse::<Slope>()
                .map_err(|e| Error::parse(no, e.to_string()))
        })
        .collect::<Result<Vec<_>>>()?;
    let slopes = normalize_slopes(&declared).map_err(|e| Error::parse(no, e.to_string()))?;

    let offsets: BTreeMap<Slope, Vec<i64>> = slopes
        .iter()
        .map(|&s| {
            (
                s,
                enumerate_lines(dims, s)
                    .iter()
                    .map(|l| l.offset())
                    .collect(),
            )
        })
        .collect();
    let mut clues = BTreeMap::new();
    for (no, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [kw, s, c, v] = toks[..] else {
            return Err(Error::parse(no, "expected `clue <slope> <offset> <value>`"));
        };
        if kw != "clue" {
            return Err(Error::parse(no, format!("unknown record {kw:?}")));
        }
        let slope: Slope = s
            .parse()
            .map_err(|e: Error| Error::parse(no, e.to_string()))?;
        let offset: i64 = c
            .parse()
            .map_err(|_| Error::parse(no, format!("invalid offset {c:?}")))?;
        let value = parse_value::<T>(no, v)?;
        let Some(valid) = offsets.get(&slope) else {
            return Err(Error::parse(no, format!("slope {slope} is not declared")));
        };
        if valid.binary_search(&offset).is_err() {
            return Err(Error::parse(
                no,
                Error::UnrealizableOffset { slope, offset }.to_string(),
            ));
        }
        if clues.insert((slope, offset), value).is_some() {
            return Err(Error::parse(
                no,
                Error::DuplicateClue { slope, offset }.to_string(),
            ));
        }
    }
    for (&slope, valid) in &offsets {
        if let Some(&offset) = valid.iter().find(|&&o| !clues.contains_key(&(slope, o))) {
            return Err(Error::parse(
                total_lines,
                Error::MissingClue { slope, offset }.to_string(),
            ));
        }
    }
    PuzzleInstance::new(dims, &slopes, clues)
}

/// Canonical text: slopes in order, clues by slope then offset.
pub fn serialize_puzzle<T: Scalar>(p: &PuzzleInstance<T>) -> String {
    let mut out = format!("{MAGIC}\ndims {} {}\nslopes", p.dims().n(), p.dims().m());
    for s in p.slopes() {
        write!(out, " {s}").unwrap();
    }
    out.push('\n');
    for ((s, c), v) in p.clues() {
        writeln!(out, "clue {s} {c} {v}").unwrap();
    }
    out
}

pub fn parse_grid<T: Scalar>(text: &str) -> Result<GridValues<T>> {
    let total_lines = text.lines().count().max(1);
    let mut lines = content_lines(text);
    let (no, toks) = expect_keyword(&mut lines, "grid", total_lines)?;
    let [n, m] = toks[..] else {
        return Err(Error::parse(no, "`grid` takes two values"));
    };
    let dims = parse_dims(no, n, m)?;
    let mut rows = Vec::with_capacity(dims.m());
    for (no, l) in lines {
        if rows.len() == dims.m() {
            return Err(Error::parse(no, "more rows than declared"));
        }
        let row = l
            .split_whitespace()
            .map(|t| parse_value::<T>(no, t))
            .collect::<Result<Vec<_>>>()?;
        if row.len() != dims.n() {
            return Err(Error::parse(
                no,
                format!("expected {} values, found {}", dims.n(), row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != dims.m() {
        return Err(Error::parse(
            total_lines,
            format!("expected {} rows, found {}", dims.m(), rows.len()),
        ));
    }
    GridValues::from_rows_top_down(dims, &rows)
}

pub fn serialize_grid<T: Scalar>(g: &GridValues<T>) -> String {
    let mut out = format!("grid {} {}\n", g.dims().n(), g.dims().m());
    for row in g.rows_top_down() {
        let row: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
