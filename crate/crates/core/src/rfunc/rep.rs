use std::collections::BTreeSet;
use std::fmt;

use crate::dualdata::LanglandsDualData;
use crate::error::{Error, Result};
use crate::lattice::IntVec;

/// A representation of the extended dual group, recorded by its weight
/// multiset in `Ỹ` (kept sorted).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DualRepresentation {
    weights: Vec<IntVec>,
}

impl DualRepresentation {
    /// Accepts a multiset only if every extended Weyl element permutes it.
    pub fn new(dd: &LanglandsDualData, mut weights: Vec<IntVec>) -> Result<Self> {
        let n = dd.ext().rank();
        if let Some(w) = weights.iter().find(|w| w.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: w.len() });
        }
        weights.sort();
        let rep = DualRepresentation { weights };
        if !rep.is_weyl_stable(dd) {
            return Err(Error::NotWeylStable);
        }
        Ok(rep)
    }

    /// The sum of the Weyl orbits of the given weights, each orbit counted
    /// once per seed.
    pub fn from_orbits(dd: &LanglandsDualData, seeds: &[IntVec]) -> Result<Self> {
        let mut weights = Vec::new();
        for s in seeds {
            let orbit: BTreeSet<IntVec> = dd.ext_weyl().elements().iter().map(|w| w.act_y(s)).collect();
            weights.extend(orbit);
        }
        DualRepresentation::new(dd, weights)
    }

    /// The trivial one-dimensional representation.
    pub fn trivial(dd: &LanglandsDualData) -> Self {
        DualRepresentation { weights: vec![IntVec::zeros(dd.ext().rank())] }
    }

    /// The character `p`, a one-dimensional representation with weight `δ`.
    pub fn p(dd: &LanglandsDualData) -> Self {
        DualRepresentation { weights: vec![dd.p()] }
    }

    pub fn weights(&self) -> &[IntVec] {
        &self.weights
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn is_weyl_stable(&self, dd: &LanglandsDualData) -> bool {
        dd.ext_weyl().elements().iter().all(|w| {
            let mut image: Vec<IntVec> = self.weights.iter().map(|x| w.act_y(x)).collect();
            image.sort();
            image == self.weights
        })
    }

    /// `p ⊗ τ`: every weight shifted by `δ`.
    pub fn tensor_p(&self, dd: &LanglandsDualData) -> Self {
        let delta = dd.p();
        let mut weights: Vec<IntVec> = self.weights.iter().map(|w| w + &delta).collect();
        weights.sort();
        DualRepresentation { weights }
    }

    /// `τ̌ = p ⊗ τ*`: weights `δ − w`. Stability is preserved because `δ` is
    /// Weyl-fixed.
    pub fn contragredient(&self, dd: &LanglandsDualData) -> Self {
        let delta = dd.p();
        let mut weights: Vec<IntVec> = self.weights.iter().map(|w| &delta - w).collect();
        weights.sort();
        DualRepresentation { weights }
    }
}

impl fmt::Display for DualRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}
