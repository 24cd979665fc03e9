use modlang::dualdata::{decompose_quotient, epsilon_of, langlands_dual_data};
use modlang::lattice::{smith_normal_form, GroupAlg, IntMatrix, IntVec, Laurent};
use modlang::rootdatum::{datum_isomorphic, RootDatum};
use modlang::satake::{is_dot_invariant, satake_image, SatakeEngine};
use proptest::prelude::*;

const NAMES: [&str; 8] = ["SL2", "PGL2", "GL2", "GL3", "SL3", "PGL3", "Sp4", "SO5"];

// Products of elementary row operations; determinant ±1 by construction.
fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0..n, 0..n, -2i64..=2, any::<bool>()), 0..6).prop_map(move |ops| {
        let mut m = IntMatrix::identity(n);
        for (a, b, k, flip) in ops {
            let mut e = IntMatrix::identity(n);
            if a != b {
                e[(a, b)] = k;
            } else if flip {
                e[(a, a)] = -1;
            }
            m = &e * &m;
        }
        m
    })
}

// The same group written in another basis of X: roots by g, coroots by g⁻ᵀ.
fn rebased(name: &'static str) -> impl Strategy<Value = (RootDatum, RootDatum)> {
    let d = RootDatum::builtin(name).unwrap();
    let n = d.rank();
    unimodular(n).prop_map(move |g| {
        let h = g.inverse().expect("unimodular").transpose();
        let roots = d.simple_roots().iter().map(|a| g.apply(a).unwrap()).collect();
        let coroots = d.simple_coroots().iter().map(|c| h.apply(c).unwrap()).collect();
        (d.clone(), RootDatum::from_parts(None, n, roots, coroots))
    })
}

fn any_rebased() -> impl Strategy<Value = (RootDatum, RootDatum)> {
    prop::sample::select(&NAMES[..]).prop_flat_map(rebased)
}

fn laurent() -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-4i32..=4, -5i64..=5), 0..5).prop_map(Laurent::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariants_survive_a_change_of_basis((d, e) in any_rebased()) {
        prop_assert!(e.is_valid());
        prop_assert!(e.dual().unwrap().dual().unwrap().same_presentation(&e));
        prop_assert!(datum_isomorphic(&e, &d).is_some());
        prop_assert_eq!(e.weyl_group().unwrap().order(), d.weyl_group().unwrap().order());
        prop_assert_eq!(epsilon_of(&e).unwrap().order, epsilon_of(&d).unwrap().order);
        let dd = langlands_dual_data(&e).unwrap();
        prop_assert_eq!(decompose_quotient(&dd).unwrap().cokernel, vec![2]);
    }

    #[test]
    fn dominance_is_a_partial_order(
        a in prop::collection::vec(-2i64..=2, 2),
        b in prop::collection::vec(-2i64..=2, 2),
        c in prop::collection::vec(-2i64..=2, 2),
    ) {
        // coroot-lattice translates of a common base point in GL3
        let d = RootDatum::builtin("GL3").unwrap();
        let base = IntVec::from([1, 0, 0]);
        let at = |k: &[i64]| &base + &IntVec::from([k[0], k[1] - k[0], -k[1]]);
        let (x, y, z) = (at(&a), at(&b), at(&c));
        prop_assert!(d.dominance_leq(&x, &x));
        if d.dominance_leq(&x, &y) && d.dominance_leq(&y, &x) {
            prop_assert_eq!(&x, &y);
        }
        if d.dominance_leq(&x, &y) && d.dominance_leq(&y, &z) {
            prop_assert!(d.dominance_leq(&x, &z));
        }
    }

    #[test]
    fn laurent_division_undoes_multiplication(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }
    }

    #[test]
    fn smith_form_diagonalizes(rows in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 1..4)) {
        let a = IntMatrix::from_rows(&rows).unwrap();
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.left.det().abs(), 1);
        prop_assert_eq!(s.right.det().abs(), 1);
        let d = s.left.checked_mul(&a).unwrap().checked_mul(&s.right).unwrap();
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                let expected = if i == j { s.diagonal[i] } else { 0 };
                prop_assert_eq!(d[(i, j)], expected);
            }
        }
        let nonzero: Vec<i64> = s.diagonal.iter().copied().filter(|&x| x != 0).collect();
        for w in nonzero.windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
    }

    #[test]
    fn group_algebra_division_is_exact(
        ys in prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 1..4),
        zs in prop::collection::vec(prop::collection::vec(-3i64..=3, 2), 1..3),
    ) {
        let build = |vs: &[Vec<i64>]| {
            vs.iter().enumerate().fold(GroupAlg::zero(2), |acc, (k, v)| {
                &acc + &GroupAlg::monomial(IntVec::new(v.clone()), Laurent::monomial(k as i32 - 1, 1))
            })
        };
        let (f, g) = (build(&ys), build(&zs));
        prop_assume!(!g.is_zero());
        prop_assert_eq!((&f * &g).exact_div(&g).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hecke_product_is_commutative(name in prop::sample::select(&NAMES[..]), i in 0usize..64, j in 0usize..64) {
        let d = RootDatum::builtin(name).unwrap();
        let dd = langlands_dual_data(&d).unwrap();
        let ws = d.dominant_coweights_up_to(2);
        let (l, m) = (&ws[i % ws.len()], &ws[j % ws.len()]);
        let mut engine = SatakeEngine::new(&dd);
        let lm = engine.structure(l, m).unwrap();
        let ml = engine.structure(m, l).unwrap();
        prop_assert_eq!(lm.coeffs, ml.coeffs);
        prop_assert!(is_dot_invariant(&d, &satake_image(&dd, l).unwrap().poly).unwrap());
    }
}
