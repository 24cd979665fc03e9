use std::collections::BTreeMap;
use std::fmt;

use super::{q_power, satake_image, SphericalFunction};
use crate::dualdata::LanglandsDualData;
use crate::error::{Error, Result};
use crate::lattice::{IntVec, Laurent};

/// An element `Σ a^ν e_ν` of the universal Hecke algebra, keyed by dominant
/// coweight.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HeckeExpansion {
    pub coeffs: BTreeMap<IntVec, Laurent>,
}

impl HeckeExpansion {
    pub fn coeff(&self, nu: &IntVec) -> Laurent {
        self.coeffs.get(nu).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms greatest coweight first.
    pub fn terms(&self) -> impl Iterator<Item = (&IntVec, &Laurent)> {
        self.coeffs.iter().rev()
    }

    /// `q^{⟨t, top − ν⟩}·a^ν` for each term, where `top = λ + μ`; these are
    /// the coefficients that count points in the indicator-function basis.
    pub fn rescaled(&self, t: &IntVec, top: &IntVec) -> BTreeMap<IntVec, Laurent> {
        self.coeffs.iter().map(|(nu, c)| (nu.clone(), &q_power(t.dot(&(top - nu))) * c)).collect()
    }
}

impl fmt::Display for HeckeExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> =
            self.terms().map(|(nu, c)| if c.is_one() { format!("e_{nu}") } else { format!("({c})·e_{nu}") }).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Satake images memoized by coweight, for repeated products.
pub struct SatakeEngine<'a> {
    dd: &'a LanglandsDualData,
    cache: BTreeMap<IntVec, SphericalFunction>,
}

impl<'a> SatakeEngine<'a> {
    pub fn new(dd: &'a LanglandsDualData) -> Self {
        SatakeEngine { dd, cache: BTreeMap::new() }
    }

    pub fn dual_data(&self) -> &'a LanglandsDualData {
        self.dd
    }

    pub fn image(&mut self, lambda: &IntVec) -> Result<&SphericalFunction> {
        if !self.cache.contains_key(lambda) {
            let s = satake_image(self.dd, lambda)?;
            self.cache.insert(lambda.clone(), s);
        }
        Ok(&self.cache[lambda])
    }

    /// Expands `e_λ · e_μ` by peeling off Satake images from the top of the
    /// dominance order down. Each image is unitriangular, so the coefficient
    /// of `e^ν` in the remainder is exactly `a^ν` once all larger coweights
    /// are gone.
    pub fn structure(&mut self, lambda: &IntVec, mu: &IntVec) -> Result<HeckeExpansion> {
        let right = self.image(mu)?.poly.clone();
        let mut rem = self.image(lambda)?.poly.checked_mul(&right)?;
        let top = lambda + mu;
        let mut out = HeckeExpansion::default();
        for nu in self.dd.base().dominant_below(&top)? {
            let c = rem.coeff(&nu);
            if c.is_zero() {
                continue;
            }
            let s = self.image(&nu)?;
            rem = rem.checked_sub(&s.poly.scale(&c))?;
            out.coeffs.insert(nu, c);
        }
        if !rem.is_zero() {
            return Err(Error::Internal(format!("nonzero remainder {rem} in e_{lambda}·e_{mu}")));
        }
        if !out.coeff(&top).is_one() {
            return Err(Error::Internal(format!("coefficient of e_{top} is not 1")));
        }
        Ok(out)
    }
}

/// `e_λ · e_μ = Σ a^ν_{λμ} e_ν`.
pub fn structure_polynomials(dd: &LanglandsDualData, lambda: &IntVec, mu: &IntVec) -> Result<HeckeExpansion> {
    SatakeEngine::new(dd).structure(lambda, mu)
}
