use std::fmt;

use num_rational::Ratio;

use super::is_dot_invariant;
use crate::dualdata::LanglandsDualData;
use crate::error::{Error, Result};
use crate::lattice::{GroupAlg, IntVec, Laurent};
use crate::rootdatum::stabilizer_poincare_in;

/// The Satake image of a basis element `e_λ`: a dot-invariant function on
/// the fiber over `q`, expanded in monomials of `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphericalFunction {
    pub lambda: IntVec,
    pub poly: GroupAlg,
}

impl SphericalFunction {
    /// Coefficient of `e^λ`; always 1.
    pub fn leading_coeff(&self) -> Laurent {
        self.poly.coeff(&self.lambda)
    }
}

impl fmt::Display for SphericalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S(e_{}) = {}", self.lambda, self.poly)
    }
}

/// The symmetrization on the extended lattice, before `δ ↦ q`:
///
/// `W_λ(q⁻¹)⁻¹ · Σ_w w( e^{(λ,0)} · Π_{α>0} (1 − q⁻¹e^{−α̃̌}) / (1 − e^{−α̃̌}) )`.
///
/// With `D = Π (1 − e^{−α̃̌})` each `w(D)` is `D` times a signed monomial, so
/// the sum is `(1/D)·Σ_w w(N)·(D / w(D))` with `N` the numerator; both
/// divisions are exact and a remainder is a bug.
pub fn satake_image_ext(dd: &LanglandsDualData, lambda: &IntVec) -> Result<GroupAlg> {
    let base = dd.base();
    if !base.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let rank = dd.ext().rank();
    let t = Laurent::q_pow(-1);
    let mut numer = GroupAlg::exp(lambda.extend_with(0));
    let mut denom = GroupAlg::one(rank);
    for c in dd.ext_roots().positive_coroots() {
        let minus = -&c;
        numer = numer.checked_mul(&(&GroupAlg::one(rank) - &GroupAlg::monomial(minus.clone(), t.clone())))?;
        denom = denom.checked_mul(&(&GroupAlg::one(rank) - &GroupAlg::exp(minus)))?;
    }

    let mut sum = GroupAlg::zero(rank);
    for w in dd.ext_weyl().elements() {
        let wn = numer.apply_map(&w.mat_y)?;
        let wd = denom.apply_map(&w.mat_y)?;
        let ratio = denom.exact_div(&wd).map_err(|_| bug("D / w(D) is not a monomial"))?;
        sum = sum.checked_add(&wn.checked_mul(&ratio)?)?;
    }
    let sym = sum.exact_div(&denom).map_err(|_| bug("symmetrized sum not divisible by D"))?;

    let w_lambda = stabilizer_poincare_in(dd.base_weyl(), lambda).invert_variable();
    let mut out = GroupAlg::zero(rank);
    for (v, c) in sym.terms() {
        let c = c.exact_div(&w_lambda).map_err(|_| bug("coefficient not divisible by W_λ(q⁻¹)"))?;
        out = out.checked_add(&GroupAlg::monomial(v.clone(), c))?;
    }
    Ok(out)
}

/// `S(e_λ)`: the extended symmetrization specialized at `δ ↦ q`.
pub fn satake_image(dd: &LanglandsDualData, lambda: &IntVec) -> Result<SphericalFunction> {
    let poly = satake_image_ext(dd, lambda)?.specialize_delta(dd.delta_index())?;
    let sf = SphericalFunction { lambda: lambda.clone(), poly };
    if !sf.leading_coeff().is_one() {
        return Err(bug("coefficient of e^λ is not 1"));
    }
    debug_assert!(is_dot_invariant(dd.base(), &sf.poly).unwrap_or(false));
    Ok(sf)
}

/// `⟨ρ, λ⟩ = ⟨t, λ⟩ / 2`, the exponent a classical (non-extended)
/// normalization would need; half-integral exactly when `⟨t, λ⟩` is odd.
pub fn half_sum_pairing(dd: &LanglandsDualData, lambda: &IntVec) -> Ratio<i64> {
    Ratio::new(dd.t().dot(lambda), 2)
}

fn bug(what: &str) -> Error {
    Error::Internal(format!("Satake symmetrization: {what}"))
}
