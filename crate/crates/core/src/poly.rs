//! Sparse multivariate polynomials with exact integer coefficients over a
//! fixed ordered variable set (X, t, x_0, ..., x_n).
//!
//! Terms are kept in a sorted map from exponent vectors to nonzero
//! coefficients, so equality is term-set equality and iteration order is
//! deterministic. The variable universe is fixed at construction; mixing
//! polynomials from different universes is a caller bug and panics.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, One, Zero};

/// Index of the distinguished variable `X`.
pub const VAR_X: usize = 0;
/// Index of the shift variable `t`.
pub const VAR_T: usize = 1;

/// Index of `x_i` in the universe.
pub fn var_x(i: usize) -> usize {
    2 + i
}

/// Number of variables in the universe (X, t, x_0..x_n).
pub fn universe_size(n: usize) -> usize {
    n + 3
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, value: i64) -> Self {
        let mut p = MultiPoly::zero(nvars);
        p.accumulate(vec![0; nvars], BigInt::from(value));
        p
    }

    /// The monomial `var` to the first power.
    pub fn var(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable {var} outside universe of {nvars}");
        let mut exps = vec![0u16; nvars];
        exps[var] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.accumulate(exps, BigInt::one());
        p
    }

    /// Integer linear combination of variables plus a constant.
    pub fn linear(nvars: usize, coeffs: &[(usize, i64)], constant: i64) -> Self {
        let mut p = MultiPoly::constant(nvars, constant);
        for &(var, coeff) in coeffs {
            assert!(var < nvars, "variable {var} outside universe of {nvars}");
            let mut exps = vec![0u16; nvars];
            exps[var] = 1;
            p.accumulate(exps, BigInt::from(coeff));
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &BigInt)> {
        self.terms.iter()
    }

    fn accumulate(&mut self, exps: Vec<u16>, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn assert_same_universe(&self, other: &MultiPoly) {
        assert_eq!(
            self.nvars, other.nvars,
            "variable universe mismatch: {} vs {}",
            self.nvars, other.nvars
        );
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_universe(other);
        let mut out = self.clone();
        for (exps, coeff) in &other.terms {
            out.accumulate(exps.clone(), coeff.clone());
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_universe(other);
        let mut out = self.clone();
        for (exps, coeff) in &other.terms {
            out.accumulate(exps.clone(), -coeff.clone());
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.assert_same_universe(other);
        let mut out = MultiPoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.accumulate(exps, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::constant(self.nvars, 1);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// The polynomial with variables `a` and `b` exchanged.
    pub fn swap_vars(&self, a: usize, b: usize) -> MultiPoly {
        assert!(a < self.nvars && b < self.nvars, "variables outside universe");
        let mut out = MultiPoly::zero(self.nvars);
        for (exps, coeff) in &self.terms {
            let mut swapped = exps.clone();
            swapped.swap(a, b);
            out.accumulate(swapped, coeff.clone());
        }
        out
    }

    /// Coefficient of `var^power`, as a polynomial in the same universe with
    /// the exponent of `var` zeroed out.
    pub fn slice_by_var(&self, var: usize, power: u16) -> MultiPoly {
        assert!(var < self.nvars, "variable {var} outside universe");
        let mut out = MultiPoly::zero(self.nvars);
        for (exps, coeff) in &self.terms {
            if exps[var] == power {
                let mut reduced = exps.clone();
                reduced[var] = 0;
                out.accumulate(reduced, coeff.clone());
            }
        }
        out
    }

    /// Exact evaluation at an integer point, one value per variable.
    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.nvars, "point dimension mismatch");
        let mut total = BigInt::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (value, &exp) in point.iter().zip(exps) {
                if exp > 0 {
                    term *= value.pow(exp as u32);
                }
            }
            total += term;
        }
        total
    }

    /// The first term of this polynomial in exponent order, rendered for
    /// diagnostics.
    pub fn first_term_rendered(&self) -> Option<String> {
        self.terms
            .iter()
            .next()
            .map(|(exps, coeff)| format!("{}{}", coeff, render_monomial(exps)))
    }
}

fn var_name(index: usize) -> String {
    match index {
        VAR_X => "X".to_string(),
        VAR_T => "t".to_string(),
        i => format!("x{}", i - 2),
    }
}

fn render_monomial(exps: &[u16]) -> String {
    let mut out = String::new();
    for (i, &e) in exps.iter().enumerate() {
        if e == 1 {
            out.push_str(&format!("*{}", var_name(i)));
        } else if e > 1 {
            out.push_str(&format!("*{}^{}", var_name(i), e));
        }
    }
    out
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(exps, coeff)| format!("{}{}", coeff, render_monomial(exps)))
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{self}]")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}
