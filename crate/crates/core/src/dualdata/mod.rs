//! Weights of type ρ, the extended datum `X̃ = X ⊕ ℤr`, the dual data
//! `(i, p, j, r)` and the central enhancement ε.

mod quotient;

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{solve_integer, IntMatrix, IntVec};
use crate::rootdatum::{RootDatum, RootSystem, WeylGroup, DEFAULT_WEYL_CAP};

pub use quotient::{decompose_quotient, KernelElement, QuotientDecomposition};

/// The full solution set of `⟨r, α̌ᵢ⟩ = 1` for all simple coroots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoWeights {
    pub particular: IntVec,
    /// Basis of the characters orthogonal to every simple coroot.
    pub kernel: Vec<IntVec>,
}

impl RhoWeights {
    /// Whether `r` pairs to 1 with every simple coroot of `d`.
    pub fn is_solution(d: &RootDatum, r: &IntVec) -> bool {
        r.len() == d.rank() && d.simple_coroots().iter().all(|c| r.dot(c) == 1)
    }
}

/// Solves `⟨r, α̌ᵢ⟩ = 1` over `ℤ`; `None` when no integral weight of type ρ
/// exists (e.g. `PGL2`, where it would read `2r = 1`).
pub fn solve_rho_weights(d: &RootDatum) -> Option<RhoWeights> {
    let n = d.rank();
    let k = d.semisimple_rank();
    if k == 0 {
        return Some(RhoWeights { particular: IntVec::zeros(n), kernel: (0..n).map(|i| IntVec::unit(n, i)).collect() });
    }
    // rows are the coroots: (A r)_i = ⟨r, α̌ᵢ⟩
    let rows: Vec<Vec<i64>> = d.simple_coroots().iter().map(|c| c.coords().to_vec()).collect();
    let a = IntMatrix::from_rows(&rows).ok()?;
    let (particular, kernel) = solve_integer(&a, &IntVec::new(vec![1; k]))?;
    Some(RhoWeights { particular, kernel })
}

/// A datum together with its canonical central extension: the character
/// lattice gains a coordinate spanned by `r`, and every coroot gains a 1 so
/// that `r` becomes a weight of type ρ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedDatum {
    base: RootDatum,
    ext: RootDatum,
    r: IntVec,
}

impl ExtendedDatum {
    pub fn base(&self) -> &RootDatum {
        &self.base
    }

    pub fn ext(&self) -> &RootDatum {
        &self.ext
    }

    /// `r = (0, …, 0, 1)` in `X̃`.
    pub fn r(&self) -> &IntVec {
        &self.r
    }

    /// The last coordinate carries `δ` on the `Ỹ` side.
    pub fn delta_index(&self) -> usize {
        self.base.rank()
    }

    /// `δ = (0, …, 0, 1)` in `Ỹ`.
    pub fn delta(&self) -> IntVec {
        IntVec::unit(self.base.rank() + 1, self.delta_index())
    }

    /// Lifts `x ∈ X` to `(x, 0) ∈ X̃`.
    pub fn embed_x(&self, x: &IntVec) -> IntVec {
        x.extend_with(0)
    }

    /// Lifts `y ∈ Y` to `(y, n) ∈ Ỹ`.
    pub fn lift(&self, y: &IntVec, n: i64) -> IntVec {
        y.extend_with(n)
    }
}

/// `α̃ᵢ = (αᵢ, 0)`, `α̃̌ᵢ = (α̌ᵢ, 1)`, `r = (0, …, 0, 1)`.
pub fn extend_datum(d: &RootDatum) -> Result<ExtendedDatum> {
    d.ensure_valid()?;
    let n = d.rank();
    let roots = d.simple_roots().iter().map(|a| a.extend_with(0)).collect();
    let coroots = d.simple_coroots().iter().map(|c| c.extend_with(1)).collect();
    let name = Some(format!("ext({})", d.label()));
    let ext = RootDatum::new(name, n + 1, roots, coroots)?;
    Ok(ExtendedDatum { base: d.clone(), ext, r: IntVec::unit(n + 1, n) })
}

/// The enhancement ε: the sum of positive roots `t`, viewed as a cocharacter
/// of the dual torus and evaluated at `−1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Epsilon {
    pub order: u8,
    pub t: IntVec,
}

impl Epsilon {
    /// Value of ε on a character `y` of the dual torus: `(−1)^{⟨t, y⟩}`.
    pub fn sign_on(&self, y: &IntVec) -> i64 {
        if self.t.dot(y).rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// `t mod 2`, coordinatewise in `{0, 1}`.
    pub fn parity(&self) -> IntVec {
        IntVec::new(self.t.iter().map(|x| x.rem_euclid(2)).collect())
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }
}

/// Order of ε is 2 exactly when `t ∉ 2X`. Also checks that `⟨t, α̌⟩` is even
/// for every positive coroot, which is what makes ε central.
pub fn epsilon_of(d: &RootDatum) -> Result<Epsilon> {
    let rs = d.root_system()?;
    epsilon_from_roots(d, &rs)
}

fn epsilon_from_roots(d: &RootDatum, rs: &RootSystem) -> Result<Epsilon> {
    let t = rs.root_sum(d.rank());
    for c in rs.positive_coroots() {
        if t.dot(&c).rem_euclid(2) != 0 {
            return Err(Error::Internal(format!("⟨t, {c}⟩ = {} is odd", t.dot(&c))));
        }
    }
    let order = if t.iter().all(|x| x % 2 == 0) { 1 } else { 2 };
    Ok(Epsilon { order, t })
}

/// The Langlands dual data `(𝒢ᴰ, i, p, j, r)` in lattice form.
///
/// `i` and `p` are both realized by `δ`: as a cocharacter `G_m → 𝒢ᴰ` through
/// `Ỹ`, and as the character of `𝒢ᴰ` it defines. `j = 2r − (t, 0)`.
/// Root systems and Weyl groups of both data are cached.
#[derive(Debug, Clone)]
pub struct LanglandsDualData {
    extended: ExtendedDatum,
    epsilon: Epsilon,
    t_ext: IntVec,
    j: IntVec,
    base_roots: RootSystem,
    ext_roots: RootSystem,
    base_weyl: WeylGroup,
    ext_weyl: WeylGroup,
}

impl LanglandsDualData {
    pub fn new(d: &RootDatum) -> Result<Self> {
        Self::with_weyl_cap(d, DEFAULT_WEYL_CAP)
    }

    /// Like [`LanglandsDualData::new`] with an explicit bound on `|W|`.
    pub fn with_weyl_cap(d: &RootDatum, cap: usize) -> Result<Self> {
        let extended = extend_datum(d)?;
        let base_roots = d.root_system()?;
        let ext_roots = extended.ext().root_system()?;
        let epsilon = epsilon_from_roots(d, &base_roots)?;
        let t_ext = extended.embed_x(&epsilon.t);
        let j = &extended.r().scale(2) - &t_ext;
        let base_weyl = WeylGroup::enumerate(d, cap)?;
        let ext_weyl = WeylGroup::enumerate(extended.ext(), cap)?;
        let dd = LanglandsDualData { extended, epsilon, t_ext, j, base_roots, ext_roots, base_weyl, ext_weyl };
        dd.check()?;
        Ok(dd)
    }

    // Every failure here is a bug in the construction, not bad input.
    fn check(&self) -> Result<()> {
        let fail = |what: String| Err(Error::Internal(what));
        let ext = self.extended.ext();
        let r = self.extended.r();
        let i = self.i();
        for (k, c) in ext.simple_coroots().iter().enumerate() {
            if r.dot(c) != 1 {
                return fail(format!("⟨r, α̃̌{k}⟩ = {}", r.dot(c)));
            }
            let image = ext.reflection_x(k).apply(r)?;
            if image != r - &ext.simple_roots()[k] {
                return fail(format!("σ{k}(r) = {image}"));
            }
        }
        if r.dot(&i) != 1 {
            return fail(format!("⟨r, i⟩ = {}", r.dot(&i)));
        }
        if self.j.dot(&i) != 2 {
            return fail(format!("⟨j, i⟩ = {}", self.j.dot(&i)));
        }
        for w in self.ext_weyl.elements() {
            if w.act_x(&self.j) != self.j {
                return fail(format!("j not fixed by {:?}", w.word));
            }
            if w.act_y(&i) != i {
                return fail(format!("δ not fixed by {:?}", w.word));
            }
        }
        let even = self.epsilon.t.iter().all(|x| x % 2 == 0);
        if even != (self.epsilon.order == 1) {
            return fail("ε order disagrees with t".to_string());
        }
        Ok(())
    }

    pub fn extended(&self) -> &ExtendedDatum {
        &self.extended
    }

    pub fn base(&self) -> &RootDatum {
        self.extended.base()
    }

    pub fn ext(&self) -> &RootDatum {
        self.extended.ext()
    }

    pub fn r(&self) -> &IntVec {
        self.extended.r()
    }

    /// `t` in `X`.
    pub fn t(&self) -> &IntVec {
        &self.epsilon.t
    }

    /// `(t, 0)` in `X̃`.
    pub fn t_ext(&self) -> &IntVec {
        &self.t_ext
    }

    pub fn j(&self) -> &IntVec {
        &self.j
    }

    /// The cocharacter `i = δ` of `Ỹ`.
    pub fn i(&self) -> IntVec {
        self.extended.delta()
    }

    /// The character `p` of the dual group, also given by `δ`.
    pub fn p(&self) -> IntVec {
        self.extended.delta()
    }

    pub fn delta_index(&self) -> usize {
        self.extended.delta_index()
    }

    pub fn epsilon(&self) -> &Epsilon {
        &self.epsilon
    }

    pub fn epsilon_order(&self) -> u8 {
        self.epsilon.order
    }

    pub fn base_roots(&self) -> &RootSystem {
        &self.base_roots
    }

    pub fn ext_roots(&self) -> &RootSystem {
        &self.ext_roots
    }

    pub fn base_weyl(&self) -> &WeylGroup {
        &self.base_weyl
    }

    pub fn ext_weyl(&self) -> &WeylGroup {
        &self.ext_weyl
    }
}

impl fmt::Display for LanglandsDualData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "dual data of {}: r = {}, t = {}, j = {}, i = p = {}, ε order {}",
            self.base().label(),
            self.r(),
            self.t(),
            self.j(),
            self.i(),
            self.epsilon_order()
        )
    }
}

/// Assembles and verifies the dual data of `d`.
pub fn langlands_dual_data(d: &RootDatum) -> Result<LanglandsDualData> {
    LanglandsDualData::new(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdatum::{datum_isomorphic, transport_x};

    fn v(c: &[i64]) -> IntVec {
        IntVec::new(c.to_vec())
    }

    fn b(name: &str) -> RootDatum {
        RootDatum::builtin(name).unwrap()
    }

    #[test]
    fn rho_weights() {
        assert_eq!(solve_rho_weights(&b("PGL2")), None);
        let sl2 = solve_rho_weights(&b("SL2")).unwrap();
        assert_eq!(sl2.particular, v(&[1]));
        assert!(sl2.kernel.is_empty());

        let gl2 = solve_rho_weights(&b("GL2")).unwrap();
        assert_eq!(gl2.kernel.len(), 1);
        let k = &gl2.kernel[0];
        assert!(*k == v(&[1, 1]) || *k == v(&[-1, -1]));
        // (1,0) lies in the solution set
        let diff = &v(&[1, 0]) - &gl2.particular;
        assert!(diff == IntVec::zeros(2) || diff.coords()[0] == diff.coords()[1]);
    }

    #[test]
    fn extend_examples() {
        let e = extend_datum(&b("PGL2")).unwrap();
        assert_eq!(e.ext().simple_roots(), &[v(&[1, 0])]);
        assert_eq!(e.ext().simple_coroots(), &[v(&[2, 1])]);
        assert_eq!(e.r(), &v(&[0, 1]));
        assert_eq!(e.base(), &b("PGL2"));

        let e = extend_datum(&b("SL2")).unwrap();
        assert_eq!(e.ext().simple_coroots(), &[v(&[1, 1])]);
        assert_eq!(e.r().dot(&e.ext().simple_coroots()[0]), 1);
    }

    #[test]
    fn extend_pgl2_is_gl2() {
        let e = extend_datum(&b("PGL2")).unwrap();
        let dd = langlands_dual_data(&b("PGL2")).unwrap();
        let m = datum_isomorphic(e.ext(), &b("GL2")).expect("extended PGL2 ≅ GL2");
        assert_eq!(transport_x(&m, e.r()), Some(v(&[1, 0])));
        assert_eq!(transport_x(&m, dd.j()), Some(v(&[1, 1])));
    }

    #[test]
    fn epsilon_orders() {
        for (name, order, t) in [
            ("PGL2", 2, v(&[1])),
            ("SL2", 1, v(&[2])),
            ("GL2", 2, v(&[1, -1])),
            ("GL3", 1, v(&[2, 0, -2])),
            ("Sp4", 1, v(&[4, 2])),
            ("SO5", 2, v(&[3, 1])),
        ] {
            let e = epsilon_of(&b(name)).unwrap();
            assert_eq!((e.order, &e.t), (order, &t), "{name}");
        }
        assert_eq!(epsilon_of(&b("SL3")).unwrap().order, 1);
        assert_eq!(epsilon_of(&b("PGL3")).unwrap().order, 1);
    }

    #[test]
    fn dual_data_of_pgl2() {
        let dd = langlands_dual_data(&b("PGL2")).unwrap();
        assert_eq!(dd.j(), &v(&[-1, 2]));
        assert_eq!(dd.i(), v(&[0, 1]));
        assert_eq!(dd.epsilon_order(), 2);
        assert_eq!(dd.r().dot(&dd.i()), 1);
        assert_eq!(dd.j().dot(&dd.i()), 2);
    }

    #[test]
    fn every_builtin_passes_its_checks() {
        for d in RootDatum::builtins().into_iter().chain([RootDatum::trivial()]) {
            let dd = langlands_dual_data(&d).unwrap();
            assert_eq!(dd.ext().rank(), d.rank() + 1);
            let rho = solve_rho_weights(dd.ext()).unwrap();
            assert!(RhoWeights::is_solution(dd.ext(), &rho.particular));
            assert!(RhoWeights::is_solution(dd.ext(), dd.r()));
        }
    }
}
