//! Arbitrary-precision integer and rational arithmetic, plus the factorial
//! conventions the counting formulas depend on.
//!
//! - [`factorial`], [`binomial`], [`multinomial`]: exact integer products
//! - [`reciprocal_factorial`]: 1/k!, extended to 0 for negative k
//! - [`vandermonde`]: the alternating difference product over integer points
//!
//! Everything here is exact; no floating point and no modular shortcuts.

use num::{BigInt, BigRational, BigUint, One, Signed, Zero};

/// Arbitrary-precision nonnegative integer.
pub type Natural = BigUint;

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator; equality is value equality.
pub type Exact = BigRational;

/// k!, with 0! = 1.
pub fn factorial(k: u64) -> Natural {
    let mut acc = Natural::one();
    for i in 2..=k {
        acc *= Natural::from(i);
    }
    acc
}

/// 1/k! as an exact rational, and exactly 0 when k is negative.
///
/// The zero extension is what lets factorial-quotient formulas vanish outside
/// their combinatorial range without case analysis at every call site; any
/// formula that can see a negative factorial argument must route through
/// this function.
pub fn reciprocal_factorial(k: i64) -> Exact {
    if k < 0 {
        return Exact::zero();
    }
    Exact::new(BigInt::one(), BigInt::from(factorial(k as u64)))
}

/// n choose k, with the value 0 whenever k lies outside 0..=n.
pub fn binomial(n: u64, k: i64) -> Natural {
    if k < 0 || (k as u64) > n {
        return Natural::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Natural::one();
    for i in 1..=k {
        // Each partial product n-k+1 ... n-k+i is divisible by i!.
        acc = acc * Natural::from(n - k + i) / Natural::from(i);
    }
    acc
}

/// (sum of parts)! / (product of part factorials).
pub fn multinomial(parts: &[u64]) -> Natural {
    let mut acc = Natural::one();
    let mut taken: u64 = 0;
    for &part in parts {
        taken += part;
        acc *= binomial(taken, part as i64);
    }
    acc
}

/// Product of pairwise differences prod_{i<j} (a_i - a_j).
///
/// Weakly decreasing input gives a nonnegative value, a repeated entry gives
/// zero, and empty or singleton input gives 1. The sign matches the
/// alternating determinant expansion sum_sigma (-1)^sgn(sigma) prod a_i^(n-sigma(i)).
pub fn vandermonde(values: &[i64]) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            acc *= BigInt::from(values[i] as i128 - values[j] as i128);
        }
    }
    acc
}

/// Lift a natural number into the rationals.
pub fn to_exact(n: &Natural) -> Exact {
    Exact::from_integer(BigInt::from(n.clone()))
}

/// The natural-number value of `x`, if `x` is a nonnegative integer.
pub fn as_natural(x: &Exact) -> Option<Natural> {
    if x.is_integer() && !x.numer().is_negative() {
        x.numer().to_biguint()
    } else {
        None
    }
}
