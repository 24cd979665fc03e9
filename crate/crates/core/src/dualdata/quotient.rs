use std::fmt;

use super::LanglandsDualData;
use crate::error::{Error, Result};
use crate::lattice::{smith_normal_form, solve_integer, IntMatrix, IntVec};

/// The element of `G_m × Ǧ` generating the kernel of `G_m × Ǧ → 𝒢ᴰ`.
///
/// Coordinates are halves: the element is `exp(πi·halves)` on the torus
/// `(ℤ ⊕ X) ⊗ 𝒞^×`, so the first entry encodes the scalar and the rest encode
/// `ε` as `t(−1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelElement {
    pub halves: IntVec,
}

impl KernelElement {
    /// `−1` or `1`.
    pub fn scalar(&self) -> i64 {
        if self.halves[0] == 1 {
            -1
        } else {
            1
        }
    }

    /// `t mod 2` read off the dual-torus part.
    pub fn epsilon_parity(&self) -> IntVec {
        IntVec::new(self.halves.coords()[1..].to_vec())
    }

    pub fn epsilon_is_trivial(&self) -> bool {
        self.epsilon_parity().is_zero()
    }
}

impl fmt::Display for KernelElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let eps = if self.epsilon_is_trivial() {
            "1".to_string()
        } else {
            format!("ε = exp(πi·{})", self.epsilon_parity())
        };
        write!(f, "({}, {eps})", self.scalar())
    }
}

/// The dual group as a quotient of `G_m × Ǧ`, read off the cocharacter map
/// `ℤ ⊕ X → X̃`, `(n, x) ↦ n·j + (x, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientDecomposition {
    /// Invariant factors of the cokernel other than 1.
    pub cokernel: Vec<i64>,
    /// A vector of `X̃` generating the cokernel; congruent to `r`.
    pub generator: IntVec,
    pub kernel: KernelElement,
}

/// Smith normal form of `[j | (e₁,0) | … | (eₙ,0)]`.
///
/// With `L·A·R = D`, the torus kernel is `{v : A v ∈ ℤ}/ℤ`, generated by
/// `R eₖ / dₖ` for each nontrivial factor `dₖ`, and the cokernel by `L⁻¹ eₖ`.
pub fn decompose_quotient(dd: &LanglandsDualData) -> Result<QuotientDecomposition> {
    let n = dd.base().rank();
    let mut columns = vec![dd.j().clone()];
    columns.extend((0..n).map(|k| IntVec::unit(n + 1, k)));
    let a = IntMatrix::from_columns(n + 1, &columns);
    let snf = smith_normal_form(&a);
    let cokernel = snf.nontrivial_factors();
    if cokernel != [2] || snf.rank() != n + 1 {
        return Err(Error::Internal(format!("cokernel factors {cokernel:?}, expected [2]")));
    }
    let k = snf.diagonal.iter().position(|&x| x == 2).expect("factor 2 present");

    let left_inv = snf.left.inverse().ok_or_else(|| Error::Internal("left factor not unimodular".into()))?;
    let generator = left_inv.column(k);
    let differs_from_r = dd.r() - &generator;
    if solve_integer(&a, &differs_from_r).is_none() {
        return Err(Error::Internal(format!("cokernel generator {generator} is not congruent to r")));
    }

    let halves = IntVec::new(snf.right.column(k).iter().map(|x| x.rem_euclid(2)).collect());
    let kernel = KernelElement { halves };
    if kernel.scalar() != -1 || kernel.epsilon_parity() != dd.epsilon().parity() {
        return Err(Error::Internal(format!("kernel element {kernel} disagrees with t = {}", dd.t())));
    }
    Ok(QuotientDecomposition { cokernel, generator, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualdata::langlands_dual_data;
    use crate::rootdatum::RootDatum;

    fn decompose(name: &str) -> QuotientDecomposition {
        let dd = langlands_dual_data(&RootDatum::builtin(name).unwrap()).unwrap();
        decompose_quotient(&dd).unwrap()
    }

    #[test]
    fn pgl2_cokernel_is_z2_generated_by_r() {
        let q = decompose("PGL2");
        assert_eq!(q.cokernel, vec![2]);
        assert_eq!(q.kernel.scalar(), -1);
        assert!(!q.kernel.epsilon_is_trivial());
    }

    #[test]
    fn sl2_kernel_has_trivial_epsilon() {
        let q = decompose("SL2");
        assert_eq!(q.cokernel, vec![2]);
        assert_eq!(q.kernel.to_string(), "(-1, 1)");
    }

    #[test]
    fn gl2_kernel_is_minus_one_minus_identity() {
        let q = decompose("GL2");
        assert_eq!(q.kernel.scalar(), -1);
        // t = (1,-1): ε acts as −1 in both coordinates, i.e. −I
        assert_eq!(q.kernel.epsilon_parity(), IntVec::from([1, 1]));
    }

    #[test]
    fn all_builtins_agree_with_epsilon() {
        for d in RootDatum::builtins().into_iter().chain([RootDatum::trivial()]) {
            let dd = langlands_dual_data(&d).unwrap();
            let q = decompose_quotient(&dd).unwrap();
            assert_eq!(q.kernel.epsilon_is_trivial(), dd.epsilon_order() == 1, "{d:?}");
        }
    }
}
