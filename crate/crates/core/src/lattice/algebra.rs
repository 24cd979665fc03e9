use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::{IntMatrix, IntVec, Laurent};
use crate::error::{Error, Result};

/// Sparse element of the group algebra `ℤ[q^{±1}][ℤⁿ]`.
///
/// Monomials `e^v` are keyed by their exponent vector; coefficients are
/// Laurent polynomials in `q`. No zero coefficient is ever stored, so
/// structural equality is equality of elements.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupAlg {
    rank: usize,
    terms: BTreeMap<IntVec, Laurent>,
}

impl GroupAlg {
    pub fn zero(rank: usize) -> Self {
        GroupAlg { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        GroupAlg::monomial(IntVec::zeros(rank), Laurent::one())
    }

    /// `c·e^v`.
    pub fn monomial(v: IntVec, c: Laurent) -> Self {
        let rank = v.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(v, c);
        }
        GroupAlg { rank, terms }
    }

    /// `e^v` with coefficient 1.
    pub fn exp(v: IntVec) -> Self {
        GroupAlg::monomial(v, Laurent::one())
    }

    pub fn constant(rank: usize, c: Laurent) -> Self {
        GroupAlg::monomial(IntVec::zeros(rank), c)
    }

    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (IntVec, Laurent)>,
    {
        let mut out = GroupAlg::zero(rank);
        for (v, c) in terms {
            if v.len() != rank {
                return Err(Error::RankMismatch { left: rank, right: v.len() });
            }
            out.add_term(v, &c);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, v: &IntVec) -> Laurent {
        self.terms.get(v).cloned().unwrap_or_default()
    }

    /// Terms in increasing lexicographic order of exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&IntVec, &Laurent)> {
        self.terms.iter()
    }

    /// Leading term in the lexicographic monomial order.
    pub fn leading(&self) -> Option<(&IntVec, &Laurent)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, v: IntVec, c: &Laurent) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&v) {
            Some(e) => {
                *e = &*e + c;
                if e.is_zero() {
                    self.terms.remove(&v);
                }
            }
            None => {
                self.terms.insert(v, c.clone());
            }
        }
    }

    fn check_rank(&self, other: &GroupAlg) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &GroupAlg) -> Result<GroupAlg> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(v.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &GroupAlg) -> Result<GroupAlg> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(v.clone(), &-c);
        }
        Ok(out)
    }

    /// Sparse convolution.
    pub fn checked_mul(&self, other: &GroupAlg) -> Result<GroupAlg> {
        self.check_rank(other)?;
        let mut out = GroupAlg::zero(self.rank);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a + b, &(x * y));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Laurent) -> GroupAlg {
        let mut out = GroupAlg::zero(self.rank);
        for (v, x) in &self.terms {
            out.add_term(v.clone(), &(x * c));
        }
        out
    }

    /// Multiplies by the monomial `e^v`.
    pub fn shift(&self, v: &IntVec) -> GroupAlg {
        GroupAlg { rank: self.rank, terms: self.terms.iter().map(|(u, c)| (u + v, c.clone())).collect() }
    }

    /// Exact quotient `self / den`.
    ///
    /// Multivariate division by leading terms in lexicographic order. In an
    /// exact division the quotient's exponents sit coordinatewise inside
    /// `[min(num) − min(den), max(num) − max(den)]` (degrees add in an integral
    /// domain), so a quotient term outside that box, or a leading coefficient
    /// that does not divide, proves a nonzero remainder.
    pub fn exact_div(&self, den: &GroupAlg) -> Result<GroupAlg> {
        self.check_rank(den)?;
        let Some((dlead, dcoef)) = den.leading() else {
            return Err(Error::NotDivisible);
        };
        if self.is_zero() {
            return Ok(GroupAlg::zero(self.rank));
        }
        let (nlo, nhi) = self.bounding_box();
        let (dlo, dhi) = den.bounding_box();
        let lo = &nlo - &dlo;
        let hi = &nhi - &dhi;

        let mut rem = self.clone();
        let mut quot = GroupAlg::zero(self.rank);
        while let Some((v, c)) = rem.leading() {
            let e = v - dlead;
            if (0..self.rank).any(|k| e[k] < lo[k] || e[k] > hi[k]) {
                return Err(Error::NotDivisible);
            }
            let qc = c.exact_div(dcoef)?;
            let term = GroupAlg::monomial(e, qc);
            rem = rem.checked_sub(&term.checked_mul(den)?)?;
            quot = quot.checked_add(&term)?;
        }
        Ok(quot)
    }

    fn bounding_box(&self) -> (IntVec, IntVec) {
        let mut lo = vec![i64::MAX; self.rank];
        let mut hi = vec![i64::MIN; self.rank];
        for v in self.terms.keys() {
            for k in 0..self.rank {
                lo[k] = lo[k].min(v[k]);
                hi[k] = hi[k].max(v[k]);
            }
        }
        (IntVec::new(lo), IntVec::new(hi))
    }

    /// Replaces every exponent `v` by `m·v`; a ring homomorphism
    /// `ℤ[q^{±1}][ℤ^cols] → ℤ[q^{±1}][ℤ^rows]`.
    pub fn apply_map(&self, m: &IntMatrix) -> Result<GroupAlg> {
        if m.cols() != self.rank {
            return Err(Error::DimensionMismatch { expected: m.cols(), got: self.rank });
        }
        let mut out = GroupAlg::zero(m.rows());
        for (v, c) in &self.terms {
            out.add_term(m.apply(v)?, c);
        }
        Ok(out)
    }

    /// Restriction to the fiber over `q`: drops coordinate `index` and sends
    /// `e^v` to `q^{v[index]}·e^{v without index}`.
    pub fn specialize_delta(&self, index: usize) -> Result<GroupAlg> {
        if index >= self.rank {
            return Err(Error::InvalidIndex { index, rank: self.rank });
        }
        let mut out = GroupAlg::zero(self.rank - 1);
        for (v, c) in &self.terms {
            let k = i32::try_from(v[index]).expect("δ-exponent fits in i32");
            out.add_term(v.without(index), &c.shift(k));
        }
        Ok(out)
    }

    /// Substitutes `q ↦ q⁻¹` in every coefficient.
    pub fn invert_q(&self) -> GroupAlg {
        GroupAlg { rank: self.rank, terms: self.terms.iter().map(|(v, c)| (v.clone(), c.invert_variable())).collect() }
    }
}

impl fmt::Display for GroupAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (v, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "e^{v}")?;
            } else {
                write!(f, "({c})·e^{v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupAlg[{}]({self})", self.rank)
    }
}

// Operator forms panic on a rank mismatch; use the `checked_*` methods when
// ranks come from input.
impl Add for &GroupAlg {
    type Output = GroupAlg;
    fn add(self, rhs: &GroupAlg) -> GroupAlg {
        self.checked_add(rhs).expect("group-algebra ranks agree")
    }
}

impl Sub for &GroupAlg {
    type Output = GroupAlg;
    fn sub(self, rhs: &GroupAlg) -> GroupAlg {
        self.checked_sub(rhs).expect("group-algebra ranks agree")
    }
}

impl Mul for &GroupAlg {
    type Output = GroupAlg;
    fn mul(self, rhs: &GroupAlg) -> GroupAlg {
        self.checked_mul(rhs).expect("group-algebra ranks agree")
    }
}
