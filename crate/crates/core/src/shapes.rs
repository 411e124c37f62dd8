//! Young diagram shapes and their hook structure.
//!
//! - [`Partition`]: weakly decreasing positive row lengths, with conjugation
//! - [`ColumnCounts`]: per-column cell tallies, not required monotone
//! - [`hook_length`], [`hook_product`], [`content_product`]: cell statistics
//! - [`row_hook_sets`], [`row_hook_identity`]: the per-row decomposition that
//!   turns the hook product into a factorial quotient
//!
//! Rows and columns are indexed from 0 throughout. The empty partition is
//! admitted everywhere; empty products are 1.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, One, Signed};

use crate::exact::{factorial, to_exact, Exact, Natural};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShapeError {
    #[error("unparseable part {0:?}: expected a nonnegative integer")]
    UnparseablePart(String),
    #[error("part {0} is zero: partition parts must be positive")]
    ZeroPart(usize),
    #[error("parts must be weakly decreasing, got {0} before {1}")]
    NotWeaklyDecreasing(u64, u64),
}

/// A Young diagram shape: weakly decreasing positive row lengths. May be
/// empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self, ShapeError> {
        for (i, &part) in parts.iter().enumerate() {
            if part == 0 {
                return Err(ShapeError::ZeroPart(i));
            }
            if i > 0 && parts[i - 1] < part {
                return Err(ShapeError::NotWeaklyDecreasing(parts[i - 1], part));
            }
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    /// Number of cells.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn row_len(&self, row: usize) -> u64 {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// Height of column `col`.
    pub fn col_len(&self, col: usize) -> u64 {
        self.parts.iter().take_while(|&&p| p > col as u64).count() as u64
    }

    /// The transposed diagram; an involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let parts = (0..cols).map(|c| self.col_len(c)).collect();
        Partition { parts }
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts.iter().enumerate().flat_map(|(row, &len)| {
            (0..len as usize).map(move |col| Cell { row, col })
        })
    }

    pub fn contains(&self, cell: Cell) -> bool {
        (cell.col as u64) < self.row_len(cell.row)
    }

    /// Column tallies of this diagram: entry i is the height of column i.
    pub fn column_counts(&self) -> ColumnCounts {
        ColumnCounts::new(self.conjugate().parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "{}", rendered.join(","))
    }
}

impl FromStr for Partition {
    type Err = ShapeError;

    /// Parses the canonical "3,2,1" form; the empty string is the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self, ShapeError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let part: u64 = token
                .parse()
                .map_err(|_| ShapeError::UnparseablePart(token.to_string()))?;
            parts.push(part);
        }
        Partition::new(parts)
    }
}

/// Per-column cell tallies (n_0, ..., n_d). Entries are arbitrary
/// nonnegative integers; monotonicity is deliberately not required, so that
/// out-of-shape targets can be expressed and counted (as zero).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ColumnCounts {
    counts: Vec<u64>,
}

impl ColumnCounts {
    pub fn new(counts: Vec<u64>) -> Self {
        ColumnCounts { counts }
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Canonical form with trailing zeros removed; counts that differ only in
    /// terminal zeros describe the same election and the same shape.
    pub fn normalize(&self) -> ColumnCounts {
        let mut counts = self.counts.clone();
        while counts.last() == Some(&0) {
            counts.pop();
        }
        ColumnCounts { counts }
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] >= w[1])
    }

    /// The partition with these parts, if they are weakly decreasing
    /// (trailing zeros are dropped first).
    pub fn to_partition(&self) -> Option<Partition> {
        let normalized = self.normalize();
        if normalized.is_weakly_decreasing() {
            Some(Partition { parts: normalized.counts })
        } else {
            None
        }
    }

    /// The diagram whose column tallies these are, i.e. the conjugate of
    /// [`Self::to_partition`].
    pub fn shape(&self) -> Option<Partition> {
        self.to_partition().map(|p| p.conjugate())
    }

    /// Shifted tallies beta_i = counts\[i\] + (len-1) - i. Strictly decreasing
    /// exactly when the counts are weakly decreasing; for a partition these
    /// are its first-column hook lengths.
    pub fn beta_numbers(&self) -> BetaNumbers {
        let d = self.counts.len().saturating_sub(1) as u64;
        let values = self
            .counts
            .iter()
            .enumerate()
            .map(|(i, &n)| n + d - i as u64)
            .collect();
        BetaNumbers { values }
    }
}

impl fmt::Display for ColumnCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self.counts.iter().map(u64::to_string).collect();
        write!(f, "{}", rendered.join(","))
    }
}

impl FromStr for ColumnCounts {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, ShapeError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(ColumnCounts::new(Vec::new()));
        }
        let mut counts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let count: u64 = token
                .parse()
                .map_err(|_| ShapeError::UnparseablePart(token.to_string()))?;
            counts.push(count);
        }
        Ok(ColumnCounts::new(counts))
    }
}

/// A cell at 0-based `row`, `col` of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// The shifted tallies fed to the difference product in the closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaNumbers {
    values: Vec<u64>,
}

impl BetaNumbers {
    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn as_i64(&self) -> Vec<i64> {
        self.values.iter().map(|&v| v as i64).collect()
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[0] > w[1])
    }

    /// Product of the factorials of the entries.
    pub fn factorial_product(&self) -> Natural {
        self.values.iter().map(|&v| factorial(v)).product()
    }
}

/// Arm + leg + 1 of `cell` in `p`.
///
/// Panics if the cell lies outside the diagram; callers own that contract.
pub fn hook_length(p: &Partition, cell: Cell) -> u64 {
    assert!(p.contains(cell), "cell {cell:?} outside diagram {p}");
    let arm = p.parts()[cell.row] - cell.col as u64 - 1;
    let leg = p.col_len(cell.col) - cell.row as u64 - 1;
    arm + leg + 1
}

/// Product of all hook lengths; invariant under conjugation.
pub fn hook_product(p: &Partition) -> Natural {
    p.cells()
        .map(|c| Natural::from(hook_length(p, c)))
        .product()
}

/// Product over all cells of (letters + col - row).
///
/// Whenever some factor would be negative, a zero factor necessarily occurs
/// higher in the same column, so the product is a natural number.
pub fn content_product(letters: u64, p: &Partition) -> Natural {
    let mut acc = BigInt::one();
    for cell in p.cells() {
        acc *= BigInt::from(letters as i128 + cell.col as i128 - cell.row as i128);
    }
    assert!(
        !acc.is_negative(),
        "content product must be nonnegative; got {acc} for letters={letters}, shape={p}"
    );
    acc.to_biguint().expect("nonnegative")
}

/// The three per-row hook sets: the hook lengths of row `row`, the
/// beta-number gaps skipped by them, and the full range they partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowHookSets {
    /// Hook lengths of the cells in the row.
    pub hooks: BTreeSet<u64>,
    /// Differences beta_row - beta_j for the rows j below.
    pub gaps: BTreeSet<u64>,
    /// 1..=beta_row.
    pub span: BTreeSet<u64>,
}

impl RowHookSets {
    /// Whether hooks and gaps are disjoint and together fill the span.
    pub fn is_partition_of_span(&self) -> bool {
        self.hooks.is_disjoint(&self.gaps)
            && self.hooks.union(&self.gaps).copied().collect::<BTreeSet<_>>() == self.span
    }
}

/// Hook sets of row `row` of `p`, whose parts play the role of the tallies
/// (n_0, ..., n_d).
pub fn row_hook_sets(p: &Partition, row: usize) -> RowHookSets {
    assert!(row < p.num_rows(), "row {row} outside diagram {p}");
    let beta = ColumnCounts::new(p.parts().to_vec()).beta_numbers();
    let beta = beta.values();
    let hooks = (0..p.parts()[row] as usize)
        .map(|col| hook_length(p, Cell { row, col }))
        .collect();
    let gaps = (row + 1..beta.len()).map(|j| beta[row] - beta[j]).collect();
    let span = (1..=beta[row]).collect();
    RowHookSets { hooks, gaps, span }
}

/// Both sides of the per-row hook identity: the product of the hook lengths
/// in the row, and beta_row! divided by the gap products. Panics if the two
/// disagree (they cannot, for a valid partition).
pub fn row_hook_identity(p: &Partition, row: usize) -> (Exact, Exact) {
    assert!(row < p.num_rows(), "row {row} outside diagram {p}");
    let beta = ColumnCounts::new(p.parts().to_vec()).beta_numbers();
    let beta = beta.values();
    let lhs: Natural = (0..p.parts()[row] as usize)
        .map(|col| Natural::from(hook_length(p, Cell { row, col })))
        .product();
    let lhs = to_exact(&lhs);
    let mut rhs = to_exact(&factorial(beta[row]));
    for j in row + 1..beta.len() {
        rhs /= to_exact(&Natural::from(beta[row] - beta[j]));
    }
    assert_eq!(lhs, rhs, "row hook identity must hold for {p}, row {row}");
    (lhs, rhs)
}

/// All partitions of exactly `cells` cells, first parts descending.
pub fn partitions_of(cells: u64) -> Vec<Partition> {
    fn rec(remaining: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(cells, cells, &mut Vec::new(), &mut out);
    out
}

/// All partitions with at most `max_cells` cells, including the empty one,
/// by increasing size.
pub fn partitions_up_to(max_cells: u64) -> Vec<Partition> {
    (0..=max_cells).flat_map(partitions_of).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::reciprocal_factorial;
    use proptest::prelude::*;

    fn p(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            ColumnCounts::new(vec![2, 1, 0, 0]).normalize(),
            ColumnCounts::new(vec![2, 1])
        );
        assert_eq!(
            ColumnCounts::new(vec![0, 0]).normalize(),
            ColumnCounts::new(vec![])
        );
        assert_eq!(
            ColumnCounts::new(vec![2, 1]).normalize(),
            ColumnCounts::new(vec![2, 1])
        );
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(hook_length(&p(&[2, 1]), Cell { row: 0, col: 0 }), 3);
        assert_eq!(hook_length(&p(&[2, 1]), Cell { row: 0, col: 1 }), 1);
        // Oracle: count the arm and leg cells directly.
        let shape = p(&[3, 3, 2]);
        let cell = Cell { row: 1, col: 1 };
        let arm_cells = (cell.col + 1..shape.parts()[cell.row] as usize).count();
        let leg_cells = (cell.row + 1..shape.num_rows())
            .filter(|&r| shape.parts()[r] as usize > cell.col)
            .count();
        assert_eq!(arm_cells + leg_cells + 1, 3);
        assert_eq!(hook_length(&shape, cell), 3);
    }

    #[test]
    #[should_panic(expected = "outside diagram")]
    fn hook_length_outside_contract() {
        hook_length(&p(&[2, 1]), Cell { row: 1, col: 1 });
    }

    #[test]
    fn hook_product_examples() {
        assert_eq!(hook_product(&p(&[2, 1])), Natural::from(3u32));
        assert_eq!(hook_product(&p(&[1])), Natural::from(1u32));
        assert_eq!(hook_product(&p(&[2, 2])), Natural::from(12u32));
        assert_eq!(hook_product(&Partition::empty()), Natural::from(1u32));
    }

    #[test]
    fn content_product_examples() {
        assert_eq!(content_product(2, &p(&[2, 1])), Natural::from(6u32));
        assert_eq!(content_product(0, &p(&[1])), Natural::from(0u32));
        assert_eq!(content_product(3, &p(&[1, 1])), Natural::from(6u32));
    }

    #[test]
    fn content_product_matches_column_factorial_quotient() {
        // prod over cells of (N + col - row) ==
        // prod over columns i of (N+i)! / (N+i-n_i)!, n = column tallies.
        for shape in partitions_up_to(8) {
            let tallies = shape.column_counts();
            for letters in 0..=6u64 {
                let mut quotient = Exact::from_integer(1.into());
                for (i, &n_i) in tallies.counts().iter().enumerate() {
                    quotient = quotient
                        * to_exact(&factorial(letters + i as u64))
                        * reciprocal_factorial(letters as i64 + i as i64 - n_i as i64);
                }
                let direct = to_exact(&content_product(letters, &shape));
                assert_eq!(direct, quotient, "shape {shape}, letters {letters}");
            }
        }
    }

    #[test]
    fn row_hook_sets_examples() {
        let sets = row_hook_sets(&p(&[2, 1]), 0);
        assert_eq!(sets.hooks, BTreeSet::from([3, 1]));
        assert_eq!(sets.gaps, BTreeSet::from([2]));
        assert_eq!(sets.span, BTreeSet::from([1, 2, 3]));
        assert!(sets.is_partition_of_span());

        let sets = row_hook_sets(&p(&[1]), 0);
        assert_eq!(sets.hooks, BTreeSet::from([1]));
        assert!(sets.gaps.is_empty());
        assert_eq!(sets.span, BTreeSet::from([1]));

        let sets = row_hook_sets(&p(&[3, 1, 1]), 0);
        assert_eq!(sets.hooks, BTreeSet::from([5, 2, 1]));
        assert_eq!(sets.gaps, BTreeSet::from([3, 4]));
        assert_eq!(sets.span, (1..=5).collect::<BTreeSet<_>>());
    }

    #[test]
    fn row_hook_identity_examples() {
        let three = to_exact(&Natural::from(3u32));
        assert_eq!(row_hook_identity(&p(&[2, 1]), 0), (three.clone(), three));
        let one = to_exact(&Natural::from(1u32));
        assert_eq!(row_hook_identity(&p(&[1]), 0), (one.clone(), one));
        let two = to_exact(&Natural::from(2u32));
        assert_eq!(row_hook_identity(&p(&[2, 2]), 1), (two.clone(), two));
    }

    #[test]
    fn hook_sets_partition_span_up_to_ten_cells() {
        for shape in partitions_up_to(10) {
            for row in 0..shape.num_rows() {
                let sets = row_hook_sets(&shape, row);
                assert!(sets.is_partition_of_span(), "shape {shape}, row {row}");
            }
        }
    }

    #[test]
    fn hook_product_conjugation_invariant_up_to_ten_cells() {
        for shape in partitions_up_to(10) {
            assert_eq!(
                hook_product(&shape),
                hook_product(&shape.conjugate()),
                "shape {shape}"
            );
        }
    }

    #[test]
    fn hook_product_equals_beta_factorial_quotient() {
        // prod_i [beta_i! / prod_{j>i} (beta_i - beta_j)] == hook product.
        for shape in partitions_up_to(10) {
            let mut quotient = Exact::from_integer(1.into());
            for row in 0..shape.num_rows() {
                let (_, rhs) = row_hook_identity(&shape, row);
                quotient *= rhs;
            }
            assert_eq!(quotient, to_exact(&hook_product(&shape)), "shape {shape}");
        }
    }

    #[test]
    fn partition_parse_and_display() {
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 2, 1]).to_string(), "3,2,1");
        assert_eq!(Partition::empty().to_string(), "");
    }

    #[test]
    fn beta_numbers_track_monotonicity() {
        let c = ColumnCounts::new(vec![3, 1, 1]);
        assert_eq!(c.beta_numbers().values(), &[5, 2, 1]);
        assert!(c.beta_numbers().is_strictly_decreasing());
        // A single-step rise collapses two shifted tallies onto each other.
        let c = ColumnCounts::new(vec![1, 2]);
        assert_eq!(c.beta_numbers().values(), &[2, 2]);
        assert!(!c.beta_numbers().is_strictly_decreasing());
        for parts in [vec![], vec![4], vec![2, 2, 1]] {
            let c = ColumnCounts::new(parts);
            assert_eq!(
                c.beta_numbers().is_strictly_decreasing(),
                c.is_weakly_decreasing()
            );
        }
    }

    #[test]
    fn partition_counts_by_size() {
        let sizes = [1usize, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &expected) in sizes.iter().enumerate() {
            assert_eq!(partitions_of(n as u64).len(), expected, "n = {n}");
        }
    }

    proptest! {
        #[test]
        fn conjugate_is_involution(mut parts in proptest::collection::vec(1u64..=12, 0..8)) {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let shape = Partition::new(parts).unwrap();
            prop_assert_eq!(shape.conjugate().conjugate(), shape);
        }

        #[test]
        fn display_parse_round_trip(mut parts in proptest::collection::vec(1u64..=30, 0..8)) {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let shape = Partition::new(parts).unwrap();
            let parsed: Partition = shape.to_string().parse().unwrap();
            prop_assert_eq!(parsed, shape);
        }

        #[test]
        fn normalize_is_idempotent(counts in proptest::collection::vec(0u64..5, 0..8)) {
            let c = ColumnCounts::new(counts);
            let once = c.normalize();
            prop_assert_eq!(once.normalize(), once);
        }
    }
}
