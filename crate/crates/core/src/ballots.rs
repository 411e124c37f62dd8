//! Brute-force enumeration oracles: ballot sequences and constrained
//! tableau fillings.
//!
//! Everything here counts by depth-first search with prefix-validity pruning
//! and a hard state budget, so an oversized instance fails loudly instead of
//! hanging. These routines are the ground truth the closed forms are checked
//! against; they share no code with the formula side.

use std::collections::BTreeSet;

use num::Zero;

use crate::exact::Natural;
use crate::shapes::{Cell, ColumnCounts, Partition};

/// Default cap on explored search states.
pub const DEFAULT_STATE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EnumerationError {
    #[error("enumeration state budget of {cap} exceeded")]
    BudgetExceeded { cap: u64 },
}

struct Budget {
    used: u64,
    cap: u64,
}

impl Budget {
    fn new(cap: u64) -> Self {
        Budget { used: 0, cap }
    }

    fn step(&mut self) -> Result<(), EnumerationError> {
        self.used += 1;
        if self.used > self.cap {
            Err(EnumerationError::BudgetExceeded { cap: self.cap })
        } else {
            Ok(())
        }
    }
}

/// One ballot: a 0/1 choice per candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallotVector {
    choices: Vec<bool>,
}

impl BallotVector {
    pub fn new(choices: Vec<bool>) -> Self {
        BallotVector { choices }
    }

    pub fn choices(&self) -> &[bool] {
        &self.choices
    }

    pub fn num_selected(&self) -> usize {
        self.choices.iter().filter(|&&c| c).count()
    }
}

/// An ordered list of ballots.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BallotSequence {
    ballots: Vec<BallotVector>,
}

impl BallotSequence {
    pub fn new(ballots: Vec<BallotVector>) -> Self {
        BallotSequence { ballots }
    }

    pub fn len(&self) -> usize {
        self.ballots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ballots.is_empty()
    }

    /// Whether every prefix tally is weakly decreasing and the final tally
    /// equals `target`.
    pub fn is_valid_for(&self, target: &ColumnCounts) -> bool {
        let width = target.len();
        if self.ballots.iter().any(|b| b.choices.len() != width) {
            return false;
        }
        let mut tally = vec![0u64; width];
        for ballot in &self.ballots {
            for (slot, &choice) in tally.iter_mut().zip(&ballot.choices) {
                *slot += choice as u64;
            }
            if tally.windows(2).any(|w| w[0] < w[1]) {
                return false;
            }
        }
        tally == target.counts()
    }
}

/// Exact number of ballot sequences of `steps` ballots, each a 0/1 choice per
/// candidate, whose prefix tallies stay weakly decreasing and whose final
/// tally is `target`.
pub fn count_multivote(
    steps: u64,
    target: &ColumnCounts,
    cap: u64,
) -> Result<Natural, EnumerationError> {
    let width = target.len();
    let mut budget = Budget::new(cap);
    // Root feasibility: each tally must be reachable in the steps available.
    if target.counts().iter().any(|&n| n > steps) {
        return Ok(Natural::zero());
    }
    let mut tally = vec![0u64; width];
    let mut found: u64 = 0;
    multivote_dfs(steps, target.counts(), &mut tally, &mut budget, &mut found)?;
    Ok(Natural::from(found))
}

fn multivote_dfs(
    remaining: u64,
    target: &[u64],
    tally: &mut [u64],
    budget: &mut Budget,
    found: &mut u64,
) -> Result<(), EnumerationError> {
    if remaining == 0 {
        // The pruning below guarantees tally == target here.
        debug_assert_eq!(tally, target);
        *found += 1;
        return Ok(());
    }
    let width = target.len();
    assert!(width < 64, "target width {width} out of range");
    'mask: for mask in 0..(1u64 << width) {
        budget.step()?;
        let mut prev = u64::MAX;
        for i in 0..width {
            let next = tally[i] + ((mask >> i) & 1);
            if next > prev || next > target[i] || target[i] - next > remaining - 1 {
                continue 'mask;
            }
            prev = next;
        }
        for (i, slot) in tally.iter_mut().enumerate() {
            *slot += (mask >> i) & 1;
        }
        multivote_dfs(remaining - 1, target, tally, budget, found)?;
        for (i, slot) in tally.iter_mut().enumerate() {
            *slot -= (mask >> i) & 1;
        }
    }
    Ok(())
}

/// Exact number of ballot sequences as in [`count_multivote`] but with
/// exactly one selection per ballot. Zero unless `steps` equals the total
/// tally and the target is weakly decreasing.
pub fn count_singlevote(
    steps: u64,
    target: &ColumnCounts,
    cap: u64,
) -> Result<Natural, EnumerationError> {
    let mut budget = Budget::new(cap);
    if target.sum() != steps {
        return Ok(Natural::zero());
    }
    let mut tally = vec![0u64; target.len()];
    let mut found: u64 = 0;
    singlevote_dfs(steps, target.counts(), &mut tally, &mut budget, &mut found)?;
    Ok(Natural::from(found))
}

fn singlevote_dfs(
    remaining: u64,
    target: &[u64],
    tally: &mut [u64],
    budget: &mut Budget,
    found: &mut u64,
) -> Result<(), EnumerationError> {
    if remaining == 0 {
        debug_assert_eq!(tally, target);
        *found += 1;
        return Ok(());
    }
    for i in 0..target.len() {
        budget.step()?;
        let next = tally[i] + 1;
        let decreasing = i == 0 || tally[i - 1] >= next;
        if decreasing && next <= target[i] {
            tally[i] += 1;
            singlevote_dfs(remaining - 1, target, tally, budget, found)?;
            tally[i] -= 1;
        }
    }
    Ok(())
}

/// Inclusive per-cell entry bounds, given the entries already placed to the
/// left and above.
type CellBounds = dyn Fn(Cell, Option<u64>, Option<u64>) -> (u64, u64);

fn walk_fillings(
    shape: &Partition,
    budget: &mut Budget,
    bounds: &CellBounds,
    on_complete: &mut dyn FnMut(&[u64]),
) -> Result<(), EnumerationError> {
    let cells: Vec<Cell> = shape.cells().collect();
    // Index of the cell directly above each cell, if any.
    let above: Vec<Option<usize>> = cells
        .iter()
        .map(|c| {
            if c.row == 0 {
                None
            } else {
                cells.iter().position(|o| o.row == c.row - 1 && o.col == c.col)
            }
        })
        .collect();
    let mut entries: Vec<u64> = Vec::with_capacity(cells.len());

    fn rec(
        cells: &[Cell],
        above: &[Option<usize>],
        entries: &mut Vec<u64>,
        budget: &mut Budget,
        bounds: &CellBounds,
        on_complete: &mut dyn FnMut(&[u64]),
    ) -> Result<(), EnumerationError> {
        let idx = entries.len();
        if idx == cells.len() {
            on_complete(entries);
            return Ok(());
        }
        let cell = cells[idx];
        let left = if cell.col > 0 { Some(entries[idx - 1]) } else { None };
        let up = above[idx].map(|i| entries[i]);
        let (lo, hi) = bounds(cell, left, up);
        let mut value = lo;
        while value <= hi {
            budget.step()?;
            entries.push(value);
            rec(cells, above, entries, budget, bounds, on_complete)?;
            entries.pop();
            value += 1;
        }
        Ok(())
    }

    rec(&cells, &above, &mut entries, budget, bounds, on_complete)
}

fn count_fillings(
    shape: &Partition,
    cap: u64,
    bounds: &CellBounds,
) -> Result<Natural, EnumerationError> {
    let mut budget = Budget::new(cap);
    let mut found: u64 = 0;
    walk_fillings(shape, &mut budget, bounds, &mut |_| found += 1)?;
    Ok(Natural::from(found))
}

/// Number of fillings of `shape` from {1..letters} with weakly increasing
/// rows and strictly increasing columns.
pub fn enumerate_ssyt(
    letters: u64,
    shape: &Partition,
    cap: u64,
) -> Result<Natural, EnumerationError> {
    count_fillings(shape, cap, &ssyt_bounds(letters))
}

fn ssyt_bounds(letters: u64) -> impl Fn(Cell, Option<u64>, Option<u64>) -> (u64, u64) {
    move |_cell, left, above| {
        let lo = left.unwrap_or(1).max(above.map_or(1, |a| a + 1));
        (lo, letters)
    }
}

/// Number of fillings of `shape` with 1..=size each exactly once, rows and
/// columns strictly increasing.
pub fn enumerate_syt(shape: &Partition, cap: u64) -> Result<Natural, EnumerationError> {
    let mut budget = Budget::new(cap);
    let size = shape.size();
    let mut filled: Vec<u64> = vec![0; shape.num_rows()];
    let mut found: u64 = 0;

    fn rec(
        parts: &[u64],
        placed: u64,
        size: u64,
        filled: &mut Vec<u64>,
        budget: &mut Budget,
        found: &mut u64,
    ) -> Result<(), EnumerationError> {
        if placed == size {
            *found += 1;
            return Ok(());
        }
        for row in 0..parts.len() {
            budget.step()?;
            let grows_row = filled[row] < parts[row];
            let stays_staircase = row == 0 || filled[row - 1] > filled[row];
            if grows_row && stays_staircase {
                filled[row] += 1;
                rec(parts, placed + 1, size, filled, budget, found)?;
                filled[row] -= 1;
            }
        }
        Ok(())
    }

    rec(shape.parts(), 0, size, &mut filled, &mut budget, &mut found)?;
    Ok(Natural::from(found))
}

/// Number of fillings of `shape` with strictly increasing columns where the
/// entries of column i come from {1..=letters+i}.
pub fn enumerate_colstrict(
    letters: u64,
    shape: &Partition,
    cap: u64,
) -> Result<Natural, EnumerationError> {
    count_fillings(shape, cap, &colstrict_bounds(letters))
}

fn colstrict_bounds(letters: u64) -> impl Fn(Cell, Option<u64>, Option<u64>) -> (u64, u64) {
    move |cell, _left, above| {
        let lo = above.map_or(1, |a| a + 1);
        (lo, letters + cell.col as u64)
    }
}

/// Number of fillings of `shape` with weakly increasing rows where the
/// entries of row j come from {j+1..=letters}.
pub fn enumerate_rowweak(
    letters: u64,
    shape: &Partition,
    cap: u64,
) -> Result<Natural, EnumerationError> {
    count_fillings(shape, cap, &rowweak_bounds(letters))
}

fn rowweak_bounds(letters: u64) -> impl Fn(Cell, Option<u64>, Option<u64>) -> (u64, u64) {
    move |cell, left, _above| {
        let lo = left.unwrap_or(1).max(cell.row as u64 + 1);
        (lo, letters)
    }
}

/// Number of ways to place 1..=size, one per cell, strictly increasing down
/// each column (rows unconstrained).
pub fn enumerate_colincreasing_labelings(
    shape: &Partition,
    cap: u64,
) -> Result<Natural, EnumerationError> {
    let mut budget = Budget::new(cap);
    let heights: Vec<u64> = shape.column_counts().counts().to_vec();
    let size = shape.size();
    let mut filled: Vec<u64> = vec![0; heights.len()];
    let mut found: u64 = 0;

    fn rec(
        heights: &[u64],
        placed: u64,
        size: u64,
        filled: &mut Vec<u64>,
        budget: &mut Budget,
        found: &mut u64,
    ) -> Result<(), EnumerationError> {
        if placed == size {
            *found += 1;
            return Ok(());
        }
        for col in 0..heights.len() {
            budget.step()?;
            if filled[col] < heights[col] {
                filled[col] += 1;
                rec(heights, placed + 1, size, filled, budget, found)?;
                filled[col] -= 1;
            }
        }
        Ok(())
    }

    rec(&heights, 0, size, &mut filled, &mut budget, &mut found)?;
    Ok(Natural::from(found))
}

/// One filling of a shape: every cell carries exactly one positive entry.
/// Entries are stored row-major, which is the canonical sorted cell order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Filling {
    shape: Partition,
    entries: Vec<u64>,
}

impl Filling {
    pub fn from_row_major(shape: Partition, entries: Vec<u64>) -> Option<Self> {
        let fits = entries.len() as u64 == shape.size() && entries.iter().all(|&e| e >= 1);
        fits.then_some(Filling { shape, entries })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// The cell-to-entry listing in sorted cell order.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, u64)> + '_ {
        self.shape.cells().zip(self.entries.iter().copied())
    }
}

/// A materialized set of fillings of one shape, stored as row-major entry
/// vectors (the canonical sorted cell listing).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FillingSet {
    shape: Partition,
    fillings: BTreeSet<Vec<u64>>,
}

impl FillingSet {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.fillings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fillings.is_empty()
    }

    pub fn contains(&self, entries: &[u64]) -> bool {
        self.fillings.contains(entries)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<u64>> {
        self.fillings.iter()
    }

    pub fn fillings(&self) -> impl Iterator<Item = Filling> + '_ {
        self.fillings.iter().map(|entries| Filling {
            shape: self.shape.clone(),
            entries: entries.clone(),
        })
    }

    pub fn intersection(&self, other: &FillingSet) -> FillingSet {
        assert_eq!(self.shape, other.shape, "sets must share a shape");
        FillingSet {
            shape: self.shape.clone(),
            fillings: self.fillings.intersection(&other.fillings).cloned().collect(),
        }
    }
}

fn collect_fillings(
    shape: &Partition,
    cap: u64,
    bounds: &CellBounds,
) -> Result<FillingSet, EnumerationError> {
    let mut budget = Budget::new(cap);
    let mut fillings = BTreeSet::new();
    walk_fillings(shape, &mut budget, bounds, &mut |entries| {
        fillings.insert(entries.to_vec());
    })?;
    Ok(FillingSet { shape: shape.clone(), fillings })
}

pub fn ssyt_fillings(
    letters: u64,
    shape: &Partition,
    cap: u64,
) -> Result<FillingSet, EnumerationError> {
    collect_fillings(shape, cap, &ssyt_bounds(letters))
}

pub fn colstrict_fillings(
    letters: u64,
    shape: &Partition,
    cap: u64,
) -> Result<FillingSet, EnumerationError> {
    collect_fillings(shape, cap, &colstrict_bounds(letters))
}

pub fn rowweak_fillings(
    letters: u64,
    shape: &Partition,
    cap: u64,
) -> Result<FillingSet, EnumerationError> {
    collect_fillings(shape, cap, &rowweak_bounds(letters))
}

/// Outcome of materializing the three filling families and intersecting them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionReport {
    pub ssyt_count: usize,
    pub col_strict_count: usize,
    pub row_weak_count: usize,
    pub intersection_count: usize,
    pub pass: bool,
}

/// Materializes the semistandard, column-strict, and row-weak filling sets
/// and checks that the first equals the intersection of the other two.
pub fn intersection_check(
    letters: u64,
    shape: &Partition,
    cap: u64,
) -> Result<IntersectionReport, EnumerationError> {
    let ssyt = ssyt_fillings(letters, shape, cap)?;
    let col_strict = colstrict_fillings(letters, shape, cap)?;
    let row_weak = rowweak_fillings(letters, shape, cap)?;
    let intersection = col_strict.intersection(&row_weak);
    Ok(IntersectionReport {
        ssyt_count: ssyt.len(),
        col_strict_count: col_strict.len(),
        row_weak_count: row_weak.len(),
        intersection_count: intersection.len(),
        pass: intersection == ssyt,
    })
}
