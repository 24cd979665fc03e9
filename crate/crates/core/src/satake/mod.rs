//! The dot action, its linearization on the extended lattice, absolute
//! Satake images and the structure polynomials of the spherical Hecke
//! algebra.
//!
//! Two conventions meet here. On unramified characters the simple dot step
//! is `(σ·χ)(y) = χ(σy)·q^{⟨α,y⟩}`. On functions of the parameter (monomials
//! `e^y` evaluated at `x = χ⁻¹` with `p(x) = q`) the matching step is
//! `e^y ↦ q^{−⟨α,y⟩}·e^{σy}`, which is exactly the linear action
//! `σ(y, n) = (σy, n − ⟨α, y⟩)` on `Ỹ` followed by `δ ↦ q`.

mod hecke;
mod image;
mod tree;

use std::fmt;

use crate::dualdata::LanglandsDualData;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::lattice::{GroupAlg, IntVec, Laurent};
use crate::rootdatum::{RootDatum, WeylElement};

pub use hecke::{structure_polynomials, HeckeExpansion, SatakeEngine};
pub use image::{half_sum_pairing, satake_image, satake_image_ext, SphericalFunction};
pub use tree::{
    compare_rank1_oracle, tree_structure_constants, tree_structure_constants_capped, OracleCheck, OracleReport,
    DEFAULT_TREE_DEPTH_CAP, DEFAULT_TREE_NODE_CAP,
};

/// A character of `T` given by its values on the standard basis of `Y`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnramifiedCharacter<F> {
    values: Vec<F>,
}

impl<F: Field> UnramifiedCharacter<F> {
    pub fn new(values: Vec<F>) -> Result<Self> {
        if let Some(k) = values.iter().position(|v| v.is_zero()) {
            return Err(Error::ZeroValue(k));
        }
        Ok(UnramifiedCharacter { values })
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    /// `χ(y) = Π χ(eₖ)^{yₖ}`.
    pub fn eval(&self, y: &IntVec) -> F {
        self.values.iter().zip(y.iter()).fold(F::one(), |acc, (v, &e)| acc.mul(&v.pow(e).expect("values are nonzero")))
    }

    /// The pointwise inverse `χ⁻¹`.
    pub fn inverse(&self) -> Self {
        UnramifiedCharacter { values: self.values.iter().map(|v| v.inv().expect("nonzero")).collect() }
    }
}

/// One simple dot step `σᵢ·χ`.
pub fn dot_step<F: Field>(d: &RootDatum, i: usize, q: &F, chi: &UnramifiedCharacter<F>) -> UnramifiedCharacter<F> {
    let n = d.rank();
    let sigma = d.reflection_y(i);
    let alpha = &d.simple_roots()[i];
    let values = (0..n)
        .map(|k| {
            let e = IntVec::unit(n, k);
            let moved = sigma.apply(&e).expect("rank matches");
            chi.eval(&moved).mul(&q.pow(alpha[k]).expect("q is nonzero"))
        })
        .collect();
    UnramifiedCharacter { values }
}

/// `w·χ`, composing simple steps along the reduced word of `w`, last letter
/// first.
pub fn dot_act<F: Field>(
    d: &RootDatum,
    w: &WeylElement,
    q: &F,
    chi: &UnramifiedCharacter<F>,
) -> UnramifiedCharacter<F> {
    w.word.iter().rev().fold(chi.clone(), |acc, &i| dot_step(d, i, q, &acc))
}

/// One simple dot step on a function: `e^y ↦ q^{−⟨αᵢ, y⟩}·e^{σᵢ y}`.
pub fn dot_step_element(d: &RootDatum, i: usize, f: &GroupAlg) -> Result<GroupAlg> {
    let sigma = d.reflection_y(i);
    let alpha = &d.simple_roots()[i];
    let mut out = GroupAlg::zero(d.rank());
    for (y, c) in f.terms() {
        let k = i32::try_from(alpha.dot(y)).map_err(|_| Error::Internal("exponent overflow".into()))?;
        let term = GroupAlg::monomial(sigma.apply(y)?, c.shift(-k));
        out = out.checked_add(&term)?;
    }
    Ok(out)
}

/// The dot action of `w` on functions, by simple steps, last letter first.
pub fn dot_act_element(d: &RootDatum, w: &WeylElement, f: &GroupAlg) -> Result<GroupAlg> {
    w.word.iter().rev().try_fold(f.clone(), |acc, &i| dot_step_element(d, i, &acc))
}

/// The same action computed linearly: lift to `δ`-height 0, apply the
/// extended Weyl element, specialize `δ ↦ q`.
pub fn dot_act_element_linear(dd: &LanglandsDualData, w: &WeylElement, f: &GroupAlg) -> Result<GroupAlg> {
    let ext_w = ext_element(dd, w)?;
    let lifted = lift_element(dd, f, 0);
    lifted.apply_map(&ext_w.mat_y)?.specialize_delta(dd.delta_index())
}

/// Whether every simple dot step fixes `f`.
pub fn is_dot_invariant(d: &RootDatum, f: &GroupAlg) -> Result<bool> {
    for i in 0..d.semisimple_rank() {
        if &dot_step_element(d, i, f)? != f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `y ↦ (y, n)`: the embedding of `Y` into `Ỹ` at `δ`-height `n`.
pub fn lift_exponent(dd: &LanglandsDualData, y: &IntVec, n: i64) -> IntVec {
    dd.extended().lift(y, n)
}

/// Lifts every monomial of `f` to `δ`-height `n`.
pub fn lift_element(dd: &LanglandsDualData, f: &GroupAlg, n: i64) -> GroupAlg {
    let mut out = GroupAlg::zero(dd.ext().rank());
    for (y, c) in f.terms() {
        out = out.checked_add(&GroupAlg::monomial(lift_exponent(dd, y, n), c.clone())).expect("lifted ranks agree");
    }
    out
}

/// The element of the extended Weyl group with the same reduced word.
pub fn ext_element<'a>(dd: &'a LanglandsDualData, w: &WeylElement) -> Result<&'a WeylElement> {
    dd.ext_weyl()
        .elements()
        .iter()
        .find(|e| e.word == w.word)
        .ok_or_else(|| Error::Internal(format!("no extended element with word {:?}", w.word)))
}

/// Evaluates a function at the parameter `x = χ⁻¹` (so `q` enters through
/// the coefficients).
pub fn eval_at_inverse<F: Field>(f: &GroupAlg, q: &F, chi: &UnramifiedCharacter<F>) -> F {
    let x = chi.inverse();
    let mut acc = F::zero();
    for (y, c) in f.terms() {
        let coeff = crate::field::eval_laurent(c, q).expect("q is nonzero");
        acc = acc.add(&coeff.mul(&x.eval(y)));
    }
    acc
}

impl<F: Field> fmt::Display for UnramifiedCharacter<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// `q` as a Laurent scalar, for building coefficients.
pub(crate) fn q_power(k: i64) -> Laurent {
    Laurent::q_pow(i32::try_from(k).expect("exponent fits in i32"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualdata::langlands_dual_data;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn pgl2_dot_step() {
        let d = RootDatum::builtin("PGL2").unwrap();
        // χ(μ) = 5, so χ(α̌) = χ(2μ) = 25 = s
        let chi = UnramifiedCharacter::new(vec![r(5)]).unwrap();
        let q = r(3);
        let image = dot_step(&d, 0, &q, &chi);
        let s = r(25);
        assert_eq!(image.eval(&IntVec::from([2])), s.recip() * r(9));
        assert_eq!(dot_step(&d, 0, &q, &image), chi);
    }

    #[test]
    fn identity_fixes_characters() {
        let d = RootDatum::builtin("Sp4").unwrap();
        let w = d.weyl_group().unwrap();
        let chi = UnramifiedCharacter::new(vec![r(2), r(7)]).unwrap();
        assert_eq!(dot_act(&d, w.identity(), &r(5), &chi), chi);
    }

    #[test]
    fn dot_action_is_a_group_action() {
        for name in ["PGL2", "GL3", "Sp4", "SO5"] {
            let d = RootDatum::builtin(name).unwrap();
            let w = d.weyl_group().unwrap();
            let chi = UnramifiedCharacter::new((0..d.rank()).map(|k| r(k as i64 + 2)).collect()).unwrap();
            let q = r(7);
            for a in w.elements() {
                for b in w.elements() {
                    let prod = w.find_x(&(&a.mat_x * &b.mat_x)).unwrap();
                    assert_eq!(
                        dot_act(&d, prod, &q, &chi),
                        dot_act(&d, a, &q, &dot_act(&d, b, &q, &chi)),
                        "{name} {:?} {:?}",
                        a.word,
                        b.word
                    );
                }
            }
        }
    }

    #[test]
    fn pgl2_linear_action_on_lift() {
        let dd = langlands_dual_data(&RootDatum::builtin("PGL2").unwrap()).unwrap();
        let s = &dd.ext_weyl().elements()[1];
        assert_eq!(s.act_y(&lift_exponent(&dd, &IntVec::from([1]), 0)), IntVec::from([-1, -1]));
        let f = GroupAlg::exp(IntVec::from([1]));
        let expected = GroupAlg::monomial(IntVec::from([-1]), Laurent::q_pow(-1));
        assert_eq!(dot_act_element_linear(&dd, &dd.base_weyl().elements()[1], &f).unwrap(), expected);
        assert_eq!(dot_act_element(dd.base(), &dd.base_weyl().elements()[1], &f).unwrap(), expected);
    }

    #[test]
    fn lift_then_specialize_at_height_zero_is_identity() {
        let dd = langlands_dual_data(&RootDatum::builtin("GL2").unwrap()).unwrap();
        let f = GroupAlg::exp(IntVec::from([3, -1]));
        assert_eq!(lift_element(&dd, &f, 0).specialize_delta(2).unwrap(), f);
    }

    #[test]
    fn character_and_function_actions_match() {
        // f(x_{w·χ}) = (D(w⁻¹) f)(x_χ)
        let dd = langlands_dual_data(&RootDatum::builtin("GL3").unwrap()).unwrap();
        let d = dd.base();
        let q = r(4);
        let chi = UnramifiedCharacter::new(vec![r(2), r(3), r(5)]).unwrap();
        let f = GroupAlg::monomial(IntVec::from([1, 0, -2]), Laurent::from_terms([(1, 2), (-1, 1)]));
        for w in dd.base_weyl().elements() {
            let inv = dd.base_weyl().find_x(&w.mat_x.inverse().unwrap()).unwrap();
            let lhs = eval_at_inverse(&f, &q, &dot_act(d, w, &q, &chi));
            let rhs = eval_at_inverse(&dot_act_element(d, inv, &f).unwrap(), &q, &chi);
            assert_eq!(lhs, rhs, "{:?}", w.word);
        }
    }
}
