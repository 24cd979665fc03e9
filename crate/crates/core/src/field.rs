//! Exact coefficient fields for parameter values: `ℚ` and quadratic
//! extensions `ℚ(√d)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::lattice::Laurent;

/// The arithmetic the parameter code needs from a coefficient field.
///
/// `total_cmp` is a fixed total order used only to canonicalize; it is not
/// compatible with the field operations.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(r: &BigRational) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn to_f64(&self) -> f64;
    fn total_cmp(&self, other: &Self) -> Ordering;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Integer power; `None` when a negative power of zero is requested.
    fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            k >>= 1;
        }
        Some(acc)
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn total_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }
}

/// Evaluates a Laurent polynomial at `q` in any field.
pub fn eval_laurent<F: Field>(l: &Laurent, q: &F) -> Option<F> {
    let mut acc = F::zero();
    for (e, c) in l.terms() {
        acc = acc.add(&F::from_int(c).mul(&q.pow(e as i64)?));
    }
    Some(acc)
}

fn rat_zero() -> BigRational {
    <BigRational as Zero>::zero()
}

fn rat_one() -> BigRational {
    <BigRational as One>::one()
}

fn is_rational_square(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let (n, d) = (r.numer(), r.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| BigRational::new(sn, sd))
}

/// `a + b√d` with `d` a non-square rational.
///
/// The radicand travels with the value. Rational values (`b = 0`) carry no
/// radicand and combine with elements of any `ℚ(√d)`; mixing two different
/// radicands is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticExt {
    a: BigRational,
    b: BigRational,
    d: Option<BigRational>,
}

impl QuadraticExt {
    pub fn rational(a: BigRational) -> Self {
        QuadraticExt { a, b: rat_zero(), d: None }
    }

    /// `a + b√d`; collapses to a rational when `d` is a square.
    pub fn new(a: BigRational, b: BigRational, d: BigRational) -> Self {
        match is_rational_square(&d) {
            Some(s) => QuadraticExt::rational(a + b * s),
            None => QuadraticExt { a, b, d: Some(d) }.normalized(),
        }
    }

    /// The positive square root `√d` (or `i√|d|`-style element for `d < 0`).
    pub fn sqrt(d: BigRational) -> Self {
        QuadraticExt::new(rat_zero(), rat_one(), d)
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> Option<&BigRational> {
        self.d.as_ref()
    }

    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.b)
    }

    /// The Galois conjugate `a − b√d`.
    pub fn conj(&self) -> Self {
        QuadraticExt { a: self.a.clone(), b: -&self.b, d: self.d.clone() }
    }

    /// `(a + b√d)(a − b√d) = a² − d b²`.
    pub fn norm(&self) -> BigRational {
        match &self.d {
            Some(d) => &self.a * &self.a - d * &self.b * &self.b,
            None => &self.a * &self.a,
        }
    }

    fn normalized(mut self) -> Self {
        if Zero::is_zero(&self.b) {
            self.d = None;
        }
        self
    }

    fn common_radicand(&self, other: &Self) -> Option<BigRational> {
        match (&self.d, &other.d) {
            (Some(x), Some(y)) => {
                assert_eq!(x, y, "mixing ℚ(√{x}) and ℚ(√{y})");
                Some(x.clone())
            }
            (Some(x), None) | (None, Some(x)) => Some(x.clone()),
            (None, None) => None,
        }
    }
}

impl Field for QuadraticExt {
    fn zero() -> Self {
        QuadraticExt::rational(rat_zero())
    }
    fn one() -> Self {
        QuadraticExt::rational(rat_one())
    }
    fn from_rational(r: &BigRational) -> Self {
        QuadraticExt::rational(r.clone())
    }
    fn add(&self, other: &Self) -> Self {
        let d = self.common_radicand(other);
        QuadraticExt { a: &self.a + &other.a, b: &self.b + &other.b, d }.normalized()
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        let d = self.common_radicand(other);
        let bb = &self.b * &other.b;
        let a = &self.a * &other.a + d.as_ref().map_or_else(rat_zero, |d| d * bb);
        let b = &self.a * &other.b + &self.b * &other.a;
        QuadraticExt { a, b, d }.normalized()
    }
    fn neg(&self) -> Self {
        QuadraticExt { a: -&self.a, b: -&self.b, d: self.d.clone() }
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return None;
        }
        let c = self.conj();
        Some(QuadraticExt { a: &c.a / &n, b: &c.b / &n, d: c.d }.normalized())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn to_f64(&self) -> f64 {
        let f = |x: &BigRational| ToPrimitive::to_f64(x).unwrap_or(f64::NAN);
        let a = f(&self.a);
        match &self.d {
            Some(d) => a + f(&self.b) * f(d).sqrt(),
            None => a,
        }
    }
    fn total_cmp(&self, other: &Self) -> Ordering {
        self.a.cmp(&other.a).then_with(|| self.b.cmp(&other.b))
    }
}

impl fmt::Display for QuadraticExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = &self.d else {
            return write!(f, "{}", self.a);
        };
        let root = format!("√{d}");
        let b_part = if One::is_one(&self.b) {
            root
        } else if self.b == -rat_one() {
            format!("-{root}")
        } else {
            format!("{}{root}", self.b)
        };
        if Zero::is_zero(&self.a) {
            write!(f, "{b_part}")
        } else if let Some(abs) = b_part.strip_prefix('-') {
            write!(f, "{} - {abs}", self.a)
        } else {
            write!(f, "{} + {b_part}", self.a)
        }
    }
}

impl fmt::Debug for QuadraticExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn quad(a: i64, b: i64) -> QuadraticExt {
        QuadraticExt::new(r(a, 1), r(b, 1), r(2, 1))
    }

    #[test]
    fn square_root_of_two() {
        let s = QuadraticExt::sqrt(r(2, 1));
        assert_eq!(s.mul(&s), QuadraticExt::from_int(2));
        assert!(s.mul(&s).radicand().is_none());
        assert_eq!(s.to_string(), "√2");
        assert_eq!(quad(1, -3).to_string(), "1 - 3√2");
    }

    #[test]
    fn square_radicand_collapses() {
        assert_eq!(QuadraticExt::sqrt(r(9, 4)), QuadraticExt::rational(r(3, 2)));
    }

    #[test]
    fn inverse_and_powers() {
        let x = quad(1, 1);
        assert_eq!(x.mul(&x.inv().unwrap()), QuadraticExt::one());
        assert_eq!(x.pow(-2).unwrap().mul(&x.pow(2).unwrap()), QuadraticExt::one());
        assert_eq!(QuadraticExt::zero().inv(), None);
        assert_eq!(Field::pow(&r(0, 1), -1), None);
        assert_eq!(Field::pow(&r(2, 3), -2), Some(r(9, 4)));
    }

    #[test]
    fn laurent_evaluation() {
        let l = Laurent::from_terms([(-1, 1), (-2, 1)]);
        assert_eq!(eval_laurent(&l, &r(2, 1)), Some(r(3, 4)));
        assert!((eval_laurent(&l, &QuadraticExt::sqrt(r(2, 1))).unwrap().to_f64() - 1.2071067811865475).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn conjugation_is_a_ring_map(a in -9i64..9, b in -9i64..9, c in -9i64..9, d in -9i64..9) {
            let (x, y) = (quad(a, b), quad(c, d));
            prop_assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
            prop_assert_eq!(x.add(&y).conj(), x.conj().add(&y.conj()));
            prop_assert_eq!(x.mul(&x.conj()), QuadraticExt::rational(x.norm()));
        }

        #[test]
        fn field_axioms(a in -9i64..9, b in -9i64..9, c in -9i64..9, d in -9i64..9) {
            let (x, y) = (quad(a, b), quad(c, d));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.add(&y).sub(&y), x.clone());
            if !x.is_zero() {
                prop_assert_eq!(y.mul(&x).mul(&x.inv().unwrap()), y);
            }
        }
    }
}
