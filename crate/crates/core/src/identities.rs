//! Symbolic verification of the central expansion identity and the claims
//! hanging off it.
//!
//! The identity: summing, over all 0/1 vectors J of length n+1, the product
//!
//!   [ prod_i (X - x_i)^(1-j_i) * x_i^(j_i) ] * V(x_0 - j_0 t, ..., x_n - j_n t)
//!
//! equals [ prod_{r=0..n} (X - r t) ] * V(x_0, ..., x_n), where V is the
//! pairwise difference product. Everything here expands both sides literally
//! and compares term sets; no evaluation shortcuts unless explicitly asked
//! for via [`random_point_check`].

use num::{BigInt, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::poly::{universe_size, var_x, MultiPoly, VAR_T, VAR_X};

/// Largest instance size accepted for full symbolic expansion; the term
/// count grows like 2^(n+1) (n+1)!.
pub const MAX_SYMBOLIC_SIZE: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SizeError {
    #[error("instance size {size} exceeds the symbolic expansion bound {max}")]
    TooLarge { size: usize, max: usize },
}

fn check_size(size: usize) -> Result<(), SizeError> {
    if size > MAX_SYMBOLIC_SIZE {
        Err(SizeError::TooLarge { size, max: MAX_SYMBOLIC_SIZE })
    } else {
        Ok(())
    }
}

/// Outcome of comparing two polynomial sides of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub size: usize,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub equal: bool,
    /// First term of lhs - rhs in exponent order, when the sides differ.
    pub first_discrepancy: Option<String>,
}

impl IdentityReport {
    fn compare(size: usize, lhs: &MultiPoly, rhs: &MultiPoly) -> Self {
        let difference = lhs.sub(rhs);
        IdentityReport {
            size,
            lhs_terms: lhs.num_terms(),
            rhs_terms: rhs.num_terms(),
            equal: difference.is_zero(),
            first_discrepancy: difference.first_term_rendered(),
        }
    }
}

impl Serialize for IdentityReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        // Numbers serialize as decimal strings; consumers must not need
        // native big-integer support.
        let mut s = serializer.serialize_struct("IdentityReport", 5)?;
        s.serialize_field("n", &self.size.to_string())?;
        s.serialize_field("lhs_terms", &self.lhs_terms.to_string())?;
        s.serialize_field("rhs_terms", &self.rhs_terms.to_string())?;
        s.serialize_field("equal", &self.equal)?;
        s.serialize_field("first_discrepancy", &self.first_discrepancy)?;
        s.end()
    }
}

/// Difference product of shifted variables: prod_{a<b} ((v_a - s_a t) - (v_b - s_b t)),
/// over the given (variable, t-shift) pairs.
pub fn shifted_vandermonde(nvars: usize, args: &[(usize, i64)]) -> MultiPoly {
    let mut acc = MultiPoly::constant(nvars, 1);
    for a in 0..args.len() {
        for b in a + 1..args.len() {
            let (va, sa) = args[a];
            let (vb, sb) = args[b];
            let factor = MultiPoly::linear(nvars, &[(va, 1), (vb, -1), (VAR_T, sb - sa)], 0);
            acc = acc.mul(&factor);
        }
    }
    acc
}

/// Plain difference product V(x_0..x_n) in the size-n universe.
pub fn plain_vandermonde(n: usize) -> MultiPoly {
    let nvars = universe_size(n);
    let args: Vec<(usize, i64)> = (0..=n).map(|i| (var_x(i), 0)).collect();
    shifted_vandermonde(nvars, &args)
}

/// The fully expanded 2^(n+1)-term sum side of the identity.
pub fn sum_side(n: usize) -> Result<MultiPoly, SizeError> {
    check_size(n)?;
    let nvars = universe_size(n);
    let mut total = MultiPoly::zero(nvars);
    for mask in 0..(1u64 << (n + 1)) {
        let mut prefactor = MultiPoly::constant(nvars, 1);
        let mut shifts = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let selected = (mask >> i) & 1 == 1;
            let factor = if selected {
                MultiPoly::var(nvars, var_x(i))
            } else {
                MultiPoly::linear(nvars, &[(VAR_X, 1), (var_x(i), -1)], 0)
            };
            prefactor = prefactor.mul(&factor);
            shifts.push((var_x(i), selected as i64));
        }
        total = total.add(&prefactor.mul(&shifted_vandermonde(nvars, &shifts)));
    }
    Ok(total)
}

/// Falling product prod_{r=0..n} (X - r t) in the size-n universe.
pub fn falling_product(n: usize) -> MultiPoly {
    let nvars = universe_size(n);
    let mut acc = MultiPoly::constant(nvars, 1);
    for r in 0..=n as i64 {
        acc = acc.mul(&MultiPoly::linear(nvars, &[(VAR_X, 1), (VAR_T, -r)], 0));
    }
    acc
}

/// The factored product side of the identity.
pub fn product_side(n: usize) -> MultiPoly {
    falling_product(n).mul(&plain_vandermonde(n))
}

/// Expands both sides of the identity and compares them term by term.
pub fn expansion_check(n: usize) -> Result<IdentityReport, SizeError> {
    let lhs = sum_side(n)?;
    let rhs = product_side(n);
    Ok(IdentityReport::compare(n, &lhs, &rhs))
}

/// Whether exchanging x_k and x_l negates the expanded sum side.
pub fn antisymmetry_check(n: usize, k: usize, l: usize) -> Result<bool, SizeError> {
    assert!(k < l && l <= n, "need 0 <= k < l <= n");
    let g = sum_side(n)?;
    Ok(g.swap_vars(var_x(k), var_x(l)) == g.neg())
}

/// Whether every monomial of the expanded sum side has total degree
/// n(n+1)/2 in the x variables.
pub fn homogeneity_check(n: usize) -> Result<bool, SizeError> {
    let g = sum_side(n)?;
    let expected = (n * (n + 1) / 2) as u32;
    let homogeneous = g.terms().all(|(exps, _)| {
        let degree: u32 = exps[2..].iter().map(|&e| e as u32).sum();
        degree == expected
    });
    Ok(homogeneous)
}

/// Coefficient of the staircase monomial x_0^n x_1^(n-1) ... x_n^0 in the
/// expanded sum side, as a polynomial in X and t. Panics if it differs from
/// the falling product (it cannot).
pub fn staircase_slice(n: usize) -> Result<MultiPoly, SizeError> {
    let mut slice = sum_side(n)?;
    for i in 0..=n {
        slice = slice.slice_by_var(var_x(i), (n - i) as u16);
    }
    assert_eq!(
        slice,
        falling_product(n),
        "staircase coefficient must equal the falling product at size {n}"
    );
    Ok(slice)
}

/// The weighted difference-product identity:
///
///   sum_i x_i V(x_0, ..., x_i - t, ..., x_n)
///     = [ sum_i (x_i - i t) ] V(x_0, ..., x_n)
///
/// expanded and compared symbolically.
pub fn weighted_identity_check(n: usize) -> Result<IdentityReport, SizeError> {
    check_size(n)?;
    Ok(IdentityReport::compare(
        n,
        &weighted_identity_lhs(n),
        &weighted_identity_rhs(n),
    ))
}

fn weighted_identity_lhs(n: usize) -> MultiPoly {
    let nvars = universe_size(n);
    let mut total = MultiPoly::zero(nvars);
    for i in 0..=n {
        let args: Vec<(usize, i64)> =
            (0..=n).map(|j| (var_x(j), (j == i) as i64)).collect();
        total = total.add(&MultiPoly::var(nvars, var_x(i)).mul(&shifted_vandermonde(nvars, &args)));
    }
    total
}

fn weighted_identity_rhs(n: usize) -> MultiPoly {
    let nvars = universe_size(n);
    let coeffs: Vec<(usize, i64)> = (0..=n).map(|i| (var_x(i), 1)).collect();
    let mut weight = MultiPoly::linear(nvars, &coeffs, 0);
    let total_shift: i64 = (0..=n as i64).sum();
    weight = weight.add(&MultiPoly::linear(nvars, &[(VAR_T, -total_shift)], 0));
    weight.mul(&plain_vandermonde(n))
}

/// Derives the weighted identity as the X^n slice of the expansion identity:
/// the slice of the sum side must decompose as (weighted lhs) - (sum of x_i)V,
/// the slice of the product side as -(sum of shifts)tV, and the two slices
/// must agree.
pub fn weighted_identity_from_slice(n: usize) -> Result<bool, SizeError> {
    let lhs_slice = sum_side(n)?.slice_by_var(VAR_X, n as u16);
    let rhs_slice = product_side(n).slice_by_var(VAR_X, n as u16);

    let nvars = universe_size(n);
    let v = plain_vandermonde(n);
    let sum_x: Vec<(usize, i64)> = (0..=n).map(|i| (var_x(i), 1)).collect();
    let sum_x = MultiPoly::linear(nvars, &sum_x, 0);
    let lhs_decomposes = lhs_slice == weighted_identity_lhs(n).sub(&sum_x.mul(&v));

    let total_shift: i64 = (0..=n as i64).sum();
    let shift_poly = MultiPoly::linear(nvars, &[(VAR_T, -total_shift)], 0);
    let rhs_decomposes = rhs_slice == shift_poly.mul(&v);

    Ok(lhs_decomposes && rhs_decomposes && lhs_slice == rhs_slice)
}

/// Evaluates both sides of the expansion identity at `points` pseudo-random
/// integer points with coordinates in -9..=9, drawn from a seeded generator,
/// and reports whether they agree everywhere. Works for sizes beyond the
/// symbolic bound; arithmetic stays exact.
pub fn random_point_check(n: usize, seed: u64, points: usize) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..points {
        let point: Vec<BigInt> = (0..universe_size(n))
            .map(|_| BigInt::from(rng.gen_range(-9i64..=9)))
            .collect();
        if eval_sum_side(n, &point) != eval_product_side(n, &point) {
            return false;
        }
    }
    true
}

/// Numeric route for the sum side: no polynomial expansion involved.
fn eval_sum_side(n: usize, point: &[BigInt]) -> BigInt {
    let x_big = &point[VAR_X];
    let t = &point[VAR_T];
    let xs = &point[2..];
    let mut total = BigInt::zero();
    for mask in 0..(1u64 << (n + 1)) {
        let mut term = BigInt::one();
        for (i, x_i) in xs.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                term *= x_i;
            } else {
                term *= x_big - x_i;
            }
        }
        let shifted: Vec<BigInt> = xs
            .iter()
            .enumerate()
            .map(|(i, x_i)| x_i - BigInt::from((mask >> i) & 1) * t)
            .collect();
        for a in 0..shifted.len() {
            for b in a + 1..shifted.len() {
                term *= &shifted[a] - &shifted[b];
            }
        }
        total += term;
    }
    total
}

fn eval_product_side(n: usize, point: &[BigInt]) -> BigInt {
    let x_big = &point[VAR_X];
    let t = &point[VAR_T];
    let xs = &point[2..];
    let mut total = BigInt::one();
    for r in 0..=n {
        total *= x_big - BigInt::from(r) * t;
    }
    for a in 0..xs.len() {
        for b in a + 1..xs.len() {
            total *= &xs[a] - &xs[b];
        }
    }
    total
}
