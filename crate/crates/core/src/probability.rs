//! The equal-ratio result: three tableau-count ratios that collapse to one
//! exact rational per shape.
//!
//! For a diagram p with column tallies n = (n_0..n_d), the common ratio is
//! n_0! ... n_d! divided by the hook product. It reappears as
//! semistandard / column-strict, minimal-semistandard / minimal-row-weak,
//! and standard / column-increasing-labeling count ratios; everything here
//! is exact and cross-checked against more than one route.

use num::{BigInt, One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::counting::{hcf_count, hlf_count};
use crate::exact::{binomial, factorial, multinomial, to_exact, vandermonde, Exact, Natural};
use crate::shapes::{hook_product, Partition};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProbabilityError {
    #[error("letters {letters} below the minimum {min} for shape {shape}")]
    TooFewLetters { letters: u64, min: u64, shape: String },
}

/// The common ratio of the three count pairs: (product of column tally
/// factorials) / (product of hook lengths).
///
/// Computed in all three closed forms — factorials over hooks, difference
/// product over shifted-tally factorials, and the pairwise tally product —
/// which must agree before the value is returned. Defined as 1 for the empty
/// shape.
pub fn common_ratio(shape: &Partition) -> Exact {
    if shape.is_empty() {
        return Exact::one();
    }
    let tallies = shape.column_counts();
    let n = tallies.counts();
    let d = n.len() - 1;

    let factorials: Natural = n.iter().map(|&v| factorial(v)).product();
    let via_hooks = to_exact(&factorials) / to_exact(&hook_product(shape));

    let beta = tallies.beta_numbers();
    let via_difference_product = Exact::from_integer(vandermonde(&beta.as_i64()))
        / to_exact(&beta.factorial_product())
        * to_exact(&factorials);

    let mut via_pairs = Exact::one();
    for i in 0..=d {
        for j in i + 1..=d {
            let numer = n[i] as i128 - n[j] as i128 + j as i128 - i as i128;
            let denom = n[i] + (j - i) as u64;
            via_pairs *= Exact::new(BigInt::from(numer), BigInt::from(denom));
        }
    }

    assert_eq!(via_hooks, via_difference_product, "shape {shape}");
    assert_eq!(via_hooks, via_pairs, "shape {shape}");
    via_hooks
}

/// Left-hand factor of the common ratio: prod_{i<j} (n_i - n_j + j - i) / (j - i).
///
/// Equals the semistandard count of the conjugate shape at its minimal
/// letter count (the Weyl dimension form); that equality is asserted before
/// returning.
pub fn weyl_factor(shape: &Partition) -> Exact {
    if shape.is_empty() {
        return Exact::one();
    }
    let tallies = shape.column_counts();
    let n = tallies.counts();
    let d = n.len() - 1;
    let mut acc = Exact::one();
    for (i, &n_i) in n.iter().enumerate() {
        for (j, &n_j) in n.iter().enumerate().skip(i + 1) {
            let numer = n_i as i128 - n_j as i128 + j as i128 - i as i128;
            acc *= Exact::new(BigInt::from(numer), BigInt::from((j - i) as u64));
        }
    }
    let conjugate = shape.conjugate();
    let minimal = hcf_count(d as u64 + 1, &conjugate);
    assert_eq!(acc, to_exact(&minimal), "shape {shape}");
    acc
}

/// Reciprocal right-hand factor of the common ratio:
/// prod_{i<j} (n_i + j - i) / (j - i), equal to the product of binomials
/// C(n_i + d - i, n_i); both routes are computed and must agree.
pub fn binomial_factor(shape: &Partition) -> Exact {
    if shape.is_empty() {
        return Exact::one();
    }
    let tallies = shape.column_counts();
    let n = tallies.counts();
    let d = n.len() - 1;
    let mut acc = Exact::one();
    for (i, &n_i) in n.iter().enumerate() {
        for j in i + 1..=d {
            acc *= Exact::new(
                BigInt::from(n_i + (j - i) as u64),
                BigInt::from((j - i) as u64),
            );
        }
    }
    let via_binomials: Natural = n
        .iter()
        .enumerate()
        .map(|(i, &n_i)| binomial(n_i + (d - i) as u64, n_i as i64))
        .product();
    assert_eq!(acc, to_exact(&via_binomials), "shape {shape}");
    acc
}

/// The six counts attached to a shape and a letter bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableauCounts {
    /// Semistandard fillings with entries at most `letters`.
    pub ssyt: Natural,
    /// Column-strict fillings, column i capped at letters + i.
    pub col_strict: Natural,
    /// Row-weak fillings of the conjugate at its minimal letter count.
    pub row_weak_min: Natural,
    /// Labelings by 1..=size increasing down columns.
    pub col_labelings: Natural,
    /// Standard fillings.
    pub syt: Natural,
    /// Semistandard fillings of the conjugate at its minimal letter count.
    pub ssyt_min: Natural,
}

/// Closed-form values of the six counts. Requires `letters` at least the
/// number of rows, below which the semistandard count is zero and the ratios
/// are undefined.
pub fn tableau_counts(letters: u64, shape: &Partition) -> Result<TableauCounts, ProbabilityError> {
    let min = shape.num_rows() as u64;
    if letters < min {
        return Err(ProbabilityError::TooFewLetters {
            letters,
            min,
            shape: shape.to_string(),
        });
    }
    if shape.is_empty() {
        return Ok(TableauCounts {
            ssyt: Natural::one(),
            col_strict: Natural::one(),
            row_weak_min: Natural::one(),
            col_labelings: Natural::one(),
            syt: Natural::one(),
            ssyt_min: Natural::one(),
        });
    }
    let tallies = shape.column_counts();
    let n = tallies.counts();
    let d = n.len() - 1;
    let conjugate = shape.conjugate();

    let col_strict: Natural = n
        .iter()
        .enumerate()
        .map(|(i, &n_i)| binomial(letters + i as u64, n_i as i64))
        .product();
    let row_weak_min: Natural = n
        .iter()
        .enumerate()
        .map(|(i, &n_i)| binomial(n_i + (d - i) as u64, n_i as i64))
        .product();

    Ok(TableauCounts {
        ssyt: hcf_count(letters, shape),
        col_strict,
        row_weak_min,
        col_labelings: multinomial(n),
        syt: hlf_count(shape),
        ssyt_min: hcf_count(d as u64 + 1, &conjugate),
    })
}

/// Outcome of checking that the three count ratios coincide with the common
/// ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbabilityReport {
    pub shape: Partition,
    pub letters: u64,
    /// ssyt/col_strict, ssyt_min/row_weak_min, syt/col_labelings.
    pub ratios: [Exact; 3],
    pub p_value: Exact,
    pub consistent: bool,
}

fn serialize_exact<S: Serializer>(value: &Exact, serializer: S) -> Result<S::Ok, S::Error> {
    let mut s = serializer.serialize_struct("Exact", 2)?;
    s.serialize_field("num", &value.numer().to_string())?;
    s.serialize_field("den", &value.denom().to_string())?;
    s.end()
}

impl Serialize for ProbabilityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Rational<'a>(&'a Exact);
        impl Serialize for Rational<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serialize_exact(self.0, serializer)
            }
        }
        let mut s = serializer.serialize_struct("ProbabilityReport", 5)?;
        s.serialize_field("shape", &self.shape.to_string())?;
        s.serialize_field("n", &self.letters.to_string())?;
        s.serialize_field("ratios", &[
            Rational(&self.ratios[0]),
            Rational(&self.ratios[1]),
            Rational(&self.ratios[2]),
        ])?;
        s.serialize_field("p_value", &Rational(&self.p_value))?;
        s.serialize_field("consistent", &self.consistent)?;
        s.end()
    }
}

/// Forms the three ratios from [`tableau_counts`] and compares them with the
/// common ratio, all as exact rationals.
pub fn equal_ratio_check(
    letters: u64,
    shape: &Partition,
) -> Result<ProbabilityReport, ProbabilityError> {
    let counts = tableau_counts(letters, shape)?;
    let ratio = |num: &Natural, den: &Natural| -> Exact {
        assert!(!den.is_zero(), "zero denominator for shape {shape}");
        to_exact(num) / to_exact(den)
    };
    let ratios = [
        ratio(&counts.ssyt, &counts.col_strict),
        ratio(&counts.ssyt_min, &counts.row_weak_min),
        ratio(&counts.syt, &counts.col_labelings),
    ];
    let p_value = common_ratio(shape);
    let consistent = ratios.iter().all(|r| *r == p_value);
    Ok(ProbabilityReport {
        shape: shape.clone(),
        letters,
        ratios,
        p_value,
        consistent,
    })
}
