use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// An element of `ℤ[q, q⁻¹]`, stored as exponent → nonzero coefficient.
///
/// The same type doubles as a polynomial in a formal variable `t` (Poincaré
/// polynomials); only the rendering differs, see [`Laurent::display_in`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    coeffs: BTreeMap<i32, i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn one() -> Self {
        Laurent::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Laurent::monomial(0, c)
    }

    /// `c·q^k`.
    pub fn monomial(k: i32, c: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(k, c);
        }
        Laurent { coeffs }
    }

    pub fn q_pow(k: i32) -> Self {
        Laurent::monomial(k, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut out = Laurent::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0) == Some(&1)
    }

    pub fn coeff(&self, k: i32) -> i64 {
        self.coeffs.get(&k).copied().unwrap_or(0)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn min_exponent(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    /// True when no negative powers occur, i.e. the element lies in `ℤ[q]`.
    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|k| k >= 0)
    }

    pub(crate) fn add_term(&mut self, k: i32, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&k);
        }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i32) -> Laurent {
        Laurent { coeffs: self.coeffs.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn scale(&self, s: i64) -> Laurent {
        if s == 0 {
            return Laurent::zero();
        }
        Laurent { coeffs: self.coeffs.iter().map(|(&e, &c)| (e, c * s)).collect() }
    }

    /// Substitutes `q ↦ q⁻¹`.
    pub fn invert_variable(&self) -> Laurent {
        Laurent { coeffs: self.coeffs.iter().map(|(&e, &c)| (-e, c)).collect() }
    }

    /// Exact value at a rational point. `q = 0` is only allowed when no
    /// negative powers occur.
    pub fn eval(&self, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&e, &c) in &self.coeffs {
            acc += BigRational::from_integer(BigInt::from(c)) * pow_rational(q, e);
        }
        acc
    }

    /// Exact quotient in `ℤ[q, q⁻¹]`.
    ///
    /// Long division from the top exponent down. A quotient of an exact
    /// division has its exponents inside `[min(num) − min(den), max(num) −
    /// max(den)]`, so leaving that window proves a nonzero remainder.
    pub fn exact_div(&self, den: &Laurent) -> Result<Laurent> {
        let (Some(dmin), Some(dmax)) = (den.min_exponent(), den.max_exponent()) else {
            return Err(Error::NotDivisible);
        };
        let Some(nmin) = self.min_exponent() else {
            return Ok(Laurent::zero());
        };
        let lead = den.coeff(dmax);
        let lower = nmin - dmin;
        let mut rem = self.clone();
        let mut quot = Laurent::zero();
        while let Some(top) = rem.max_exponent() {
            let k = top - dmax;
            let c = rem.coeff(top);
            if k < lower || c % lead != 0 {
                return Err(Error::NotDivisible);
            }
            let term = Laurent::monomial(k, c / lead);
            rem = &rem - &(&term * den);
            quot = &quot + &term;
        }
        Ok(quot)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, &c)) in self.coeffs.iter().rev().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if i == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let pow = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            match (mag, pow.is_empty()) {
                (_, true) => out.push_str(&mag.to_string()),
                (1, false) => out.push_str(&pow),
                (_, false) => out.push_str(&format!("{mag}*{pow}")),
            }
        }
        out
    }
}

pub(crate) fn pow_rational(q: &BigRational, e: i32) -> BigRational {
    let base = if e < 0 { q.recip() } else { q.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&k, &c) in &rhs.coeffs {
            out.add_term(k, c);
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&k, &c) in &rhs.coeffs {
            out.add_term(k, -c);
        }
        out
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&a, &x) in &self.coeffs {
            for (&b, &y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        self.scale(-1)
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("q"))
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}
