//! Closed-form counts for ballot sequences and tableaux, a memoized
//! recursion, and the harnesses that check them against the enumeration
//! oracles.
//!
//! - [`multivote_formula`] / [`singlevote_formula`]: factorial-and-difference-
//!   product closed forms, evaluated as exact rationals
//! - [`multivote_recursive`]: the step recursion with memoization
//! - [`hcf_count`] / [`hlf_count`]: tableau counts via hooks and contents
//! - [`closed_form_check`]: per-instance cross-verification report
//!
//! All arithmetic is exact. Closed forms return rationals and callers assert
//! integrality; silent rounding would mask convention bugs.

use std::collections::HashMap;

use num::{One, Zero};

use crate::ballots::{count_multivote, EnumerationError};
use crate::exact::{
    as_natural, factorial, reciprocal_factorial, to_exact, vandermonde, Exact, Natural,
};
use crate::shapes::{content_product, hook_product, ColumnCounts, Partition};

/// One counting problem: `steps` ballots aiming for the given tallies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountInstance {
    pub steps: u64,
    pub counts: ColumnCounts,
}

impl CountInstance {
    pub fn new(steps: u64, counts: ColumnCounts) -> Self {
        CountInstance { steps, counts }
    }
}

/// Whether no tally exceeds its predecessor by more than one.
///
/// On admissible tallies the closed form equals the exact ballot count
/// (possibly zero); on inadmissible ones the count is zero while the closed
/// form may not be.
pub fn admissible(counts: &ColumnCounts) -> bool {
    counts.counts().windows(2).all(|w| w[0] + 1 >= w[1])
}

/// Closed form for the multi-vote ballot count:
///
/// prod_i (steps+i)! / (steps+i-n_i)!  x  V(beta) / prod_i beta_i!
///
/// with V the pairwise difference product and beta the shifted tallies.
/// Negative factorial arguments are handled by the reciprocal-factorial zero
/// convention. The result is integral whenever `admissible` holds.
pub fn multivote_formula(inst: &CountInstance) -> Exact {
    let counts = inst.counts.counts();
    let mut acc = Exact::one();
    for (i, &n_i) in counts.iter().enumerate() {
        let upper = inst
            .steps
            .checked_add(i as u64)
            .expect("steps + column index overflows u64");
        // The zero convention for negative arguments lives in
        // reciprocal_factorial; magnitudes beyond i64 saturate, which keeps
        // the sign and is unreachable for computable inputs anyway.
        let lower = (upper as i128 - n_i as i128)
            .clamp(i64::MIN as i128, i64::MAX as i128) as i64;
        acc *= to_exact(&factorial(upper)) * reciprocal_factorial(lower);
    }
    let beta = inst.counts.beta_numbers();
    acc * Exact::from_integer(vandermonde(&beta.as_i64()))
        / to_exact(&beta.factorial_product())
}

/// Single-vote analogue of [`multivote_formula`]:
///
/// steps!  x  V(beta) / prod_i beta_i!
///
/// Equals the single-vote ballot count when `steps` is the total tally and
/// the tallies are weakly decreasing.
pub fn singlevote_formula(inst: &CountInstance) -> Exact {
    let beta = inst.counts.beta_numbers();
    to_exact(&factorial(inst.steps)) * Exact::from_integer(vandermonde(&beta.as_i64()))
        / to_exact(&beta.factorial_product())
}

/// Memo store for [`multivote_recursive_with`], keyed on steps and
/// normalized tallies.
#[derive(Debug, Default)]
pub struct Memo {
    map: HashMap<(u64, Vec<u64>), Natural>,
}

impl Memo {
    pub fn new() -> Self {
        Memo::default()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }
}

/// Multi-vote ballot count by the step recursion, with a fresh memo per call.
pub fn multivote_recursive(inst: &CountInstance) -> Natural {
    multivote_recursive_with(inst, &mut Memo::new())
}

/// Multi-vote ballot count by the step recursion: each step peels one 0/1
/// ballot off the end. Base case steps = 0; tallies that are not weakly
/// decreasing count zero immediately.
pub fn multivote_recursive_with(inst: &CountInstance, memo: &mut Memo) -> Natural {
    let counts = inst.counts.normalize();
    if !counts.is_weakly_decreasing() {
        return Natural::zero();
    }
    if counts.is_empty() {
        return Natural::one();
    }
    if inst.steps == 0 {
        return Natural::zero();
    }
    let key = (inst.steps, counts.counts().to_vec());
    if let Some(hit) = memo.map.get(&key) {
        return hit.clone();
    }
    let width = counts.len();
    let mut total = Natural::zero();
    for mask in 0..(1u64 << width) {
        // All tallies are >= 1 here, so every mask subtraction stays valid.
        let reduced: Vec<u64> = counts
            .counts()
            .iter()
            .enumerate()
            .map(|(i, &n)| n - ((mask >> i) & 1))
            .collect();
        let sub = CountInstance::new(inst.steps - 1, ColumnCounts::new(reduced));
        total += multivote_recursive_with(&sub, memo);
    }
    memo.map.insert(key, total.clone());
    total
}

/// Per-instance verification of the closed form against the search oracle.
#[derive(Debug, Clone)]
pub struct ClosedFormCheck {
    pub instance: CountInstance,
    pub admissible: bool,
    pub enumerated: Natural,
    pub formula: Exact,
    /// Whether the closed form satisfies the one-step recursion; only
    /// evaluated when all tallies and the step count are positive.
    pub recursion_holds: Option<bool>,
    pub pass: bool,
}

/// Runs the enumeration oracle and the closed form on one instance and
/// reports agreement: inadmissible tallies must enumerate to zero, admissible
/// ones must match the formula exactly, and where the one-step recursion
/// applies the formula must satisfy it.
pub fn closed_form_check(
    inst: &CountInstance,
    cap: u64,
) -> Result<ClosedFormCheck, EnumerationError> {
    let enumerated = count_multivote(inst.steps, &inst.counts, cap)?;
    let formula = multivote_formula(inst);
    let admissible = admissible(&inst.counts);
    let counts_match = if admissible {
        to_exact(&enumerated) == formula
    } else {
        enumerated.is_zero()
    };

    let all_positive = !inst.counts.is_empty() && inst.counts.counts().iter().all(|&n| n >= 1);
    let recursion_holds = (all_positive && inst.steps >= 1).then(|| {
        let width = inst.counts.len();
        let mut sum = Exact::zero();
        for mask in 0..(1u64 << width) {
            let reduced: Vec<u64> = inst
                .counts
                .counts()
                .iter()
                .enumerate()
                .map(|(i, &n)| n - ((mask >> i) & 1))
                .collect();
            sum += multivote_formula(&CountInstance::new(
                inst.steps - 1,
                ColumnCounts::new(reduced),
            ));
        }
        sum == formula
    });

    Ok(ClosedFormCheck {
        instance: inst.clone(),
        admissible,
        enumerated,
        formula,
        recursion_holds,
        pass: counts_match && recursion_holds != Some(false),
    })
}

/// Semistandard tableau count of `shape` with entries from {1..letters}:
/// content product over hook product, asserted integral.
pub fn hcf_count(letters: u64, shape: &Partition) -> Natural {
    let quotient = to_exact(&content_product(letters, shape))
        / to_exact(&hook_product(shape));
    as_natural(&quotient).unwrap_or_else(|| {
        panic!("hook content quotient {quotient} not a natural number for {shape}")
    })
}

/// Standard tableau count of `shape`: size! over hook product. Also computed
/// through the single-vote closed form on the column tallies; the two routes
/// must agree.
pub fn hlf_count(shape: &Partition) -> Natural {
    let via_hooks = to_exact(&factorial(shape.size())) / to_exact(&hook_product(shape));
    let inst = CountInstance::new(shape.size(), shape.column_counts());
    let via_formula = singlevote_formula(&inst);
    assert_eq!(
        via_hooks, via_formula,
        "hook and difference-product routes disagree for {shape}"
    );
    as_natural(&via_hooks)
        .unwrap_or_else(|| panic!("standard count {via_hooks} not a natural number for {shape}"))
}

/// All tally vectors with at most `max_len` entries, each entry at most
/// `max_entry`, including the empty vector. Deterministic order.
pub fn tally_vectors(max_len: usize, max_entry: u64) -> Vec<ColumnCounts> {
    let mut out = vec![ColumnCounts::new(Vec::new())];
    for len in 1..=max_len {
        let mut v = vec![0u64; len];
        loop {
            out.push(ColumnCounts::new(v.clone()));
            let mut pos = 0;
            while pos < len {
                if v[pos] < max_entry {
                    v[pos] += 1;
                    break;
                }
                v[pos] = 0;
                pos += 1;
            }
            if pos == len {
                break;
            }
        }
    }
    out
}

/// All tally vectors whose entries sum to at most `max_sum`, with at most
/// `max_sum` entries (longer vectors only repeat zero padding).
pub fn tally_vectors_sum_bounded(max_sum: u64) -> Vec<ColumnCounts> {
    fn rec(len: usize, left: u64, prefix: &mut Vec<u64>, out: &mut Vec<ColumnCounts>) {
        if prefix.len() == len {
            out.push(ColumnCounts::new(prefix.clone()));
            return;
        }
        for entry in 0..=left {
            prefix.push(entry);
            rec(len, left - entry, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for len in 0..=max_sum as usize {
        rec(len, max_sum, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ballots::{count_singlevote, enumerate_syt, DEFAULT_STATE_BUDGET};
    use crate::shapes::partitions_up_to;

    const CAP: u64 = DEFAULT_STATE_BUDGET;

    fn inst(steps: u64, counts: &[u64]) -> CountInstance {
        CountInstance::new(steps, ColumnCounts::new(counts.to_vec()))
    }

    fn shape(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn exact(v: u64) -> Exact {
        to_exact(&nat(v))
    }

    #[test]
    fn admissible_examples() {
        assert!(admissible(&ColumnCounts::new(vec![2, 3, 1])));
        assert!(!admissible(&ColumnCounts::new(vec![1, 3])));
        assert!(admissible(&ColumnCounts::new(vec![0, 0])));
        assert!(admissible(&ColumnCounts::new(vec![])));
    }

    #[test]
    fn multivote_formula_examples() {
        assert_eq!(multivote_formula(&inst(2, &[2, 1])), exact(2));
        assert_eq!(multivote_formula(&inst(0, &[1])), Exact::zero());
        assert_eq!(multivote_formula(&inst(1, &[1, 1])), exact(1));
    }

    #[test]
    fn formula_vanishes_on_admissible_single_step_rise() {
        // Tallies like (1,2) rise by exactly one: admissible, count zero, and
        // the formula must vanish through the repeated shifted tallies.
        let counts = ColumnCounts::new(vec![1, 2]);
        assert!(admissible(&counts));
        assert_eq!(counts.beta_numbers().values(), &[2, 2]);
        assert_eq!(multivote_formula(&inst(3, &[1, 2])), Exact::zero());
        assert_eq!(multivote_formula(&inst(5, &[2, 3, 1])), Exact::zero());
    }

    #[test]
    fn recursive_examples() {
        assert_eq!(multivote_recursive(&inst(2, &[2, 1])), nat(2));
        assert_eq!(multivote_recursive(&inst(4, &[0, 0])), nat(1));
        assert_eq!(multivote_recursive(&inst(1, &[2])), nat(0));
    }

    #[test]
    fn closed_form_check_examples() {
        let report = closed_form_check(&inst(2, &[2, 1]), CAP).unwrap();
        assert!(report.pass && report.admissible);
        assert_eq!(report.enumerated, nat(2));

        let report = closed_form_check(&inst(3, &[1, 3]), CAP).unwrap();
        assert!(report.pass && !report.admissible);
        assert_eq!(report.enumerated, nat(0));

        let report = closed_form_check(&inst(0, &[1, 1]), CAP).unwrap();
        assert!(report.pass && report.admissible);
        assert_eq!(report.enumerated, nat(0));
        assert_eq!(report.formula, Exact::zero());
    }

    #[test]
    fn hcf_examples() {
        assert_eq!(hcf_count(2, &shape(&[2, 1])), nat(2));
        assert_eq!(hcf_count(1, &shape(&[1])), nat(1));
        assert_eq!(hcf_count(3, &shape(&[2, 1])), nat(8));
        assert_eq!(hcf_count(0, &shape(&[1])), nat(0));
        assert_eq!(hcf_count(4, &Partition::empty()), nat(1));
    }

    #[test]
    fn hlf_examples() {
        assert_eq!(hlf_count(&shape(&[2, 1])), nat(2));
        assert_eq!(hlf_count(&shape(&[2, 2])), nat(2));
        assert_eq!(hlf_count(&shape(&[1, 1, 1])), nat(1));
        assert_eq!(hlf_count(&Partition::empty()), nat(1));
    }

    #[test]
    fn singlevote_formula_examples() {
        assert_eq!(singlevote_formula(&inst(3, &[2, 1])), exact(2));
        assert_eq!(singlevote_formula(&inst(2, &[1, 1])), exact(1));
        assert_eq!(singlevote_formula(&inst(1, &[1])), exact(1));
    }

    #[test]
    fn closed_form_exhaustive_small() {
        for counts in tally_vectors(3, 2) {
            for steps in 0..=3u64 {
                let report =
                    closed_form_check(&CountInstance::new(steps, counts.clone()), CAP).unwrap();
                assert!(report.pass, "steps {steps}, counts {counts}");
            }
        }
    }

    #[test]
    fn formula_matches_hcf_on_conjugate() {
        for diagram in partitions_up_to(8) {
            let tallies = diagram.column_counts();
            for letters in 0..=6u64 {
                let formula = multivote_formula(&CountInstance::new(letters, tallies.clone()));
                assert_eq!(
                    formula,
                    to_exact(&hcf_count(letters, &diagram)),
                    "diagram {diagram}, letters {letters}"
                );
            }
        }
    }

    #[test]
    fn recursive_matches_search_oracle() {
        let mut memo = Memo::new();
        for counts in tally_vectors(3, 3) {
            for steps in 0..=4u64 {
                let i = CountInstance::new(steps, counts.clone());
                assert_eq!(
                    multivote_recursive_with(&i, &mut memo),
                    count_multivote(steps, &counts, CAP).unwrap(),
                    "steps {steps}, counts {counts}"
                );
            }
        }
        assert!(!memo.is_empty());

        // Partition-shaped tallies over the full oracle range.
        for diagram in partitions_up_to(8) {
            let tallies = ColumnCounts::new(diagram.parts().to_vec());
            for steps in 0..=6u64 {
                let i = CountInstance::new(steps, tallies.clone());
                assert_eq!(
                    multivote_recursive_with(&i, &mut memo),
                    count_multivote(steps, &tallies, CAP).unwrap(),
                    "steps {steps}, tallies {tallies}"
                );
            }
        }
    }

    #[test]
    fn hlf_matches_syt_and_singlevote() {
        for diagram in partitions_up_to(7) {
            let expected = enumerate_syt(&diagram, CAP).unwrap();
            assert_eq!(hlf_count(&diagram), expected, "diagram {diagram}");
            assert_eq!(
                count_singlevote(diagram.size(), &diagram.column_counts(), CAP).unwrap(),
                expected,
                "diagram {diagram}"
            );
        }
    }

    #[test]
    fn singlevote_formula_satisfies_recursion() {
        // F*(steps, n) = sum_i F*(steps-1, n with n_i-1), for weakly
        // decreasing all-positive tallies summing to steps.
        for total in 1..=8u64 {
            for diagram in crate::shapes::partitions_of(total) {
                let n = diagram.parts().to_vec();
                let direct = singlevote_formula(&CountInstance::new(total, ColumnCounts::new(n.clone())));
                let mut sum = Exact::zero();
                for i in 0..n.len() {
                    let mut reduced = n.clone();
                    reduced[i] -= 1;
                    sum += singlevote_formula(&CountInstance::new(
                        total - 1,
                        ColumnCounts::new(reduced),
                    ));
                }
                assert_eq!(direct, sum, "tallies {n:?}");
            }
        }
    }

    #[test]
    fn formula_invariant_under_trailing_zeros() {
        for counts in tally_vectors(3, 3) {
            for steps in 0..=4u64 {
                let base = multivote_formula(&CountInstance::new(steps, counts.clone()));
                let mut padded = counts.counts().to_vec();
                for _ in 0..3 {
                    padded.push(0);
                    let f = multivote_formula(&CountInstance::new(
                        steps,
                        ColumnCounts::new(padded.clone()),
                    ));
                    assert_eq!(f, base, "steps {steps}, counts {counts}, padded {padded:?}");
                }
            }
        }
    }

    #[test]
    fn memo_is_reusable_across_calls() {
        let mut memo = Memo::new();
        let a = multivote_recursive_with(&inst(4, &[3, 2, 1]), &mut memo);
        let b = multivote_recursive_with(&inst(4, &[3, 2, 1]), &mut memo);
        assert_eq!(a, b);
        assert_eq!(a, multivote_recursive(&inst(4, &[3, 2, 1])));
    }
}
