use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{enumerate_lines, line_offset, normalize_slopes, Cell, LatticeDims, Line};
use crate::slope::Slope;
use crate::symmetry::{transform_cell, GridTransform};
use crate::uniqueness::UniquenessMask;

/// Why a cell was added to a [`CertifiedSet`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reason {
    /// Every other cell of the line was already determined.
    Line(Line),
    /// Image of an already determined cell under a symmetry of the clue
    /// system.
    Transport {
        transform: GridTransform,
        from: Cell,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationStep {
    pub cell: Cell,
    pub reason: Reason,
}

impl fmt::Display for DerivationStep {
    /// `(i, j) <- <slope> <offset>` or `(i, j) <- <transform> (a, b)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.reason {
            Reason::Line(line) => write!(f, "{} <- {} {}", self.cell, line.slope(), line.offset()),
            Reason::Transport { transform, from } => {
                write!(f, "{} <- {} {}", self.cell, transform, from)
            }
        }
    }
}

/// Cells certified as uniquely solvable by peeling, with the derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedSet {
    dims: LatticeDims,
    slopes: Vec<Slope>,
    initial: BTreeSet<Cell>,
    determined: BTreeSet<Cell>,
    derivation: Vec<DerivationStep>,
}

impl CertifiedSet {
    pub fn dims(&self) -> LatticeDims {
        self.dims
    }

    pub fn slopes(&self) -> &[Slope] {
        &self.slopes
    }

    pub fn initial(&self) -> &BTreeSet<Cell> {
        &self.initial
    }

    pub fn determined(&self) -> &BTreeSet<Cell> {
        &self.determined
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.determined.contains(&cell)
    }

    pub fn len(&self) -> usize {
        self.determined.len()
    }

    pub fn is_empty(&self) -> bool {
        self.determined.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.determined.len() == self.dims.cell_count()
    }

    pub fn derivation(&self) -> &[DerivationStep] {
        &self.derivation
    }

    pub fn to_mask(&self) -> UniquenessMask {
        UniquenessMask::from_fn(self.dims, |c| self.determined.contains(&c))
    }

    /// The derivation as newline-terminated text records.
    pub fn derivation_log(&self) -> String {
        self.derivation.iter().map(|s| format!("{s}\n")).collect()
    }

    /// Re-checks every step of the derivation from the initial set.
    pub fn replay(&self) -> bool {
        let mut known = self.initial.clone();
        for step in &self.derivation {
            let ok = match &step.reason {
                Reason::Line(line) => {
                    self.slopes.contains(&line.slope())
                        && line
                            .cells()
                            .iter()
                            .all(|&c| line_offset(line.slope(), c) == line.offset())
                        && line
                            .cells()
                            .iter()
                            .filter(|c| !known.contains(c))
                            .eq(std::iter::once(&step.cell))
                }
                Reason::Transport { transform, from } => {
                    transform.preserves(self.dims, &self.slopes)
                        && known.contains(from)
                        && !known.contains(&step.cell)
                        && transform_cell(*transform, self.dims, *from).ok() == Some(step.cell)
                }
            };
            if !ok {
                return false;
            }
            known.insert(step.cell);
        }
        known == self.determined
    }
}

struct Peeler<'a> {
    dims: LatticeDims,
    lines: &'a [Line],
    determined: Vec<bool>,
    open: Vec<usize>,
    lines_of: Vec<Vec<usize>>,
}

impl<'a> Peeler<'a> {
    fn new(dims: LatticeDims, lines: &'a [Line]) -> Self {
        let mut lines_of = vec![Vec::new(); dims.cell_count()];
        for (k, line) in lines.iter().enumerate() {
            for &c in line.cells() {
                lines_of[dims.column_index(c)].push(k);
            }
        }
        Peeler {
            dims,
            lines,
            determined: vec![false; dims.cell_count()],
            open: lines.iter().map(Line::len).collect(),
            lines_of,
        }
    }

    fn mark(&mut self, cell: Cell) -> bool {
        let col = self.dims.column_index(cell);
        if self.determined[col] {
            return false;
        }
        self.determined[col] = true;
        for &k in &self.lines_of[col] {
            self.open[k] -= 1;
        }
        true
    }

    /// Peels until no line has exactly one open cell, restarting the scan
    /// from the first line after every step.
    fn run(&mut self, log: &mut Vec<DerivationStep>) {
        while let Some(k) = self.open.iter().position(|&o| o == 1) {
            let line = &self.lines[k];
            let cell = *line
                .cells()
                .iter()
                .find(|&&c| !self.determined[self.dims.column_index(c)])
                .expect("one open cell");
            self.mark(cell);
            log.push(DerivationStep {
                cell,
                reason: Reason::Line(line.clone()),
            });
        }
    }

    fn determined_cells(&self) -> BTreeSet<Cell> {
        self.dims
            .cells()
            .filter(|&c| self.determined[self.dims.column_index(c)])
            .collect()
    }
}

fn check_initial(dims: LatticeDims, initial: &BTreeSet<Cell>) -> Result<()> {
    initial.iter().try_for_each(|&c| dims.check(c))
}

/// Least fixpoint of the peeling rule over the given lines, scanned in the
/// order supplied.
pub fn propagate_over(
    dims: LatticeDims,
    lines: &[Line],
    initial: &BTreeSet<Cell>,
) -> Result<CertifiedSet> {
    check_initial(dims, initial)?;
    let mut slopes: Vec<Slope> = lines.iter().map(Line::slope).collect();
    slopes.sort();
    slopes.dedup();
    let mut peeler = Peeler::new(dims, lines);
    for &c in initial {
        peeler.mark(c);
    }
    let mut derivation = Vec::new();
    peeler.run(&mut derivation);
    Ok(CertifiedSet {
        dims,
        slopes,
        initial: initial.clone(),
        determined: peeler.determined_cells(),
        derivation,
    })
}

/// Peeling fixpoint over every line of `slopes`, scanned by slope order,
/// then offset.
pub fn propagate(
    dims: LatticeDims,
    slopes: &[Slope],
    initial: &BTreeSet<Cell>,
) -> Result<CertifiedSet> {
    propagate_with_transports(dims, slopes, initial, &[])
}

/// Like [`propagate`], but whenever peeling stalls the determined set is
/// also closed under the given symmetries, each of which must preserve
/// the clue system.
pub fn propagate_with_transports(
    dims: LatticeDims,
    slopes: &[Slope],
    initial: &BTreeSet<Cell>,
    transports: &[GridTransform],
) -> Result<CertifiedSet> {
    check_initial(dims, initial)?;
    let slopes = normalize_slopes(slopes)?;
    if let Some(t) = transports.iter().find(|t| !t.preserves(dims, &slopes)) {
        return Err(Error::InvalidParameter(format!(
            "{t} does not preserve the clue system"
        )));
    }
    let lines: Vec<Line> = slopes
        .iter()
        .flat_map(|&s| enumerate_lines(dims, s))
        .collect();
    let mut peeler = Peeler::new(dims, &lines);
    for &c in initial {
        peeler.mark(c);
    }
    let mut derivation = Vec::new();
    loop {
        peeler.run(&mut derivation);
        let mut moved = false;
        for &t in transports {
            for from in peeler.determined_cells() {
                let cell = transform_cell(t, dims, from)?;
                if peeler.mark(cell) {
                    derivation.push(DerivationStep {
                        cell,
                        reason: Reason::Transport { transform: t, from },
                    });
                    moved = true;
                }
            }
        }
        if !moved {
            break;
        }
    }
    Ok(CertifiedSet {
        dims,
        slopes,
        initial: initial.clone(),
        determined: peeler.determined_cells(),
        derivation,
    })
}
