//! Small hand-computed cases, each checked through the public API.

use std::collections::{BTreeMap, BTreeSet};

use modlang::dualdata::{
    decompose_quotient, epsilon_of, extend_datum, langlands_dual_data, solve_rho_weights, RhoWeights,
};
use modlang::lattice::{GroupAlg, IntMatrix, IntVec, Laurent};
use modlang::rfunc::{local_rfactor, make_parameter, partial_rfunction, DualRepresentation, UnramifiedParameter};
use modlang::rootdatum::{datum_isomorphic, RootDatum};
use modlang::satake::{
    dot_act, lift_element, satake_image, structure_polynomials, tree_structure_constants, UnramifiedCharacter,
};
use modlang::Error;
use num_bigint::BigInt;
use num_rational::BigRational;

fn v<const N: usize>(c: [i64; N]) -> IntVec {
    IntVec::from(c)
}

fn q(k: i32) -> Laurent {
    Laurent::q_pow(k)
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn datum(name: &str) -> RootDatum {
    RootDatum::builtin(name).unwrap()
}

fn e(y: IntVec) -> GroupAlg {
    GroupAlg::exp(y)
}

#[test]
fn group_algebra_arithmetic() {
    let a = v([1, -1]);
    let one = GroupAlg::one(2);
    assert_eq!(&e(a.clone()) * &e(-&a), one);
    let lhs = &(&one - &e(-&a)) * &(&one + &e(-&a));
    assert_eq!(lhs, &one - &e(a.scale(-2)));
    let x = GroupAlg::monomial(a.clone(), q(1));
    let y = GroupAlg::monomial(a.clone(), q(-1));
    assert_eq!(&x * &y, e(a.scale(2)));
}

#[test]
fn group_algebra_division() {
    let a = v([1]);
    let one = GroupAlg::one(1);
    let geometric = &one - &e(a.scale(2));
    let linear = &one - &e(a.clone());
    assert_eq!(geometric.exact_div(&linear).unwrap(), &one + &e(a.clone()));
    assert_eq!(linear.exact_div(&linear).unwrap(), one);
    assert!(linear.exact_div(&geometric).is_err());
}

#[test]
fn lattice_maps_and_specialization() {
    let f = &GroupAlg::monomial(v([1, 2]), q(3)) + &e(v([0, -1]));
    assert_eq!(f.apply_map(&IntMatrix::identity(2)).unwrap(), f);
    let neg = IntMatrix::from_rows(&[vec![-1]]).unwrap();
    assert_eq!(e(v([1])).apply_map(&neg).unwrap(), e(v([-1])));

    // reflection of the extended PGL2 lattice: α̃ = (1, 0), α̃̌ = (2, 1)
    let dd = langlands_dual_data(&datum("PGL2")).unwrap();
    let s = dd.ext().reflection_y(0);
    assert_eq!(e(v([1, 0])).apply_map(&s).unwrap(), e(&v([1, 0]) - &v([2, 1])));

    assert_eq!(e(v([1, 1])).specialize_delta(1).unwrap(), GroupAlg::monomial(v([1]), q(1)));
    let mixed = &e(v([1, 0])) + &e(v([-1, -1]));
    assert_eq!(mixed.specialize_delta(1).unwrap(), &e(v([1])) + &GroupAlg::monomial(v([-1]), q(-1)));
    let c = GroupAlg::constant(2, q(2));
    assert_eq!(c.specialize_delta(1).unwrap(), GroupAlg::constant(1, q(2)));
}

#[test]
fn validation_messages() {
    assert!(datum("PGL2").validate().is_empty());
    let bad = RootDatum::from_parts(None, 1, vec![v([1])], vec![v([1])]);
    let msgs: Vec<String> = bad.validate().iter().map(|x| x.to_string()).collect();
    assert_eq!(msgs, ["pairing ⟨α0,α̌0⟩ = 1 ≠ 2"]);
    let odd = RootDatum::from_parts(None, 1, vec![v([1])], vec![v([3])]);
    assert!(!odd.is_valid());
}

#[test]
fn duals_and_roots() {
    assert!(datum("SL2").dual().unwrap().same_presentation(&datum("PGL2")));
    assert!(datum("GL2").dual().unwrap().same_presentation(&datum("GL2")));
    assert_eq!(datum("PGL2").root_system().unwrap().positive_roots(), vec![v([1])]);
    let gl3: BTreeSet<IntVec> = datum("GL3").root_system().unwrap().positive_roots().into_iter().collect();
    assert_eq!(gl3, BTreeSet::from([v([1, -1, 0]), v([0, 1, -1]), v([1, 0, -1])]));
    let sp4: BTreeSet<IntVec> = datum("Sp4").root_system().unwrap().positive_roots().into_iter().collect();
    assert_eq!(sp4, BTreeSet::from([v([1, -1]), v([0, 2]), v([1, 1]), v([2, 0])]));
    for (name, order) in [("PGL2", 2), ("GL3", 6), ("Sp4", 8)] {
        assert_eq!(datum(name).weyl_group().unwrap().order(), order);
    }
}

#[test]
fn dominance_and_stabilizers() {
    let d = datum("PGL2");
    assert!(d.dominance_leq(&v([2]), &v([2])));
    assert!(d.dominance_leq(&v([0]), &v([2])));
    assert!(!d.dominance_leq(&v([1]), &v([2])));
    let below = |l: IntVec| d.dominant_below(&l).unwrap().into_iter().collect::<BTreeSet<_>>();
    assert_eq!(below(v([2])), BTreeSet::from([v([2]), v([0])]));
    assert_eq!(below(v([1])), BTreeSet::from([v([1])]));
    assert_eq!(datum("Sp4").dominant_below(&v([0, 0])).unwrap(), vec![v([0, 0])]);

    let t = |terms: &[(i32, i64)]| Laurent::from_terms(terms.iter().copied());
    assert_eq!(datum("GL3").stabilizer_poincare(&v([2, 1, 0])).unwrap(), Laurent::one());
    assert_eq!(d.stabilizer_poincare(&v([0])).unwrap(), t(&[(0, 1), (1, 1)]));
    assert_eq!(
        datum("GL3").stabilizer_poincare(&v([0, 0, 0])).unwrap(),
        &t(&[(0, 1), (1, 1)]) * &t(&[(0, 1), (1, 1), (2, 1)])
    );
}

#[test]
fn isomorphisms() {
    let gl3 = datum("GL3");
    assert_eq!(datum_isomorphic(&gl3, &gl3), Some(IntMatrix::identity(3)));
    let ext = extend_datum(&datum("PGL2")).unwrap();
    assert!(datum_isomorphic(ext.ext(), &datum("GL2")).is_some());
    assert!(datum_isomorphic(&datum("SL2"), &datum("PGL2")).is_none());
}

#[test]
fn rho_weights_and_extension() {
    assert!(solve_rho_weights(&datum("PGL2")).is_none());
    let gl2 = solve_rho_weights(&datum("GL2")).unwrap();
    assert!(RhoWeights::is_solution(&datum("GL2"), &v([1, 0])));
    assert_eq!(gl2.kernel.len(), 1);
    assert!(gl2.kernel[0] == v([1, 1]) || gl2.kernel[0] == v([-1, -1]));
    let sl2 = solve_rho_weights(&datum("SL2")).unwrap();
    assert_eq!((sl2.particular, sl2.kernel.len()), (v([1]), 0));

    let ext = extend_datum(&datum("SL2")).unwrap();
    assert_eq!(ext.base(), &datum("SL2"));
    assert_eq!(ext.ext().rank(), 2);
    assert_eq!(ext.ext().simple_roots(), &[v([2, 0])]);
    assert_eq!(ext.ext().simple_coroots(), &[v([1, 1])]);
    assert_eq!(ext.r(), &v([0, 1]));
}

#[test]
fn epsilon_and_quotient() {
    for (name, t, order) in [("PGL2", v([1]), 2), ("SL2", v([2]), 1), ("Sp4", v([4, 2]), 1), ("SO5", v([3, 1]), 2)] {
        let eps = epsilon_of(&datum(name)).unwrap();
        assert_eq!((eps.t, eps.order), (t, order), "{name}");
    }
    let pgl2 = langlands_dual_data(&datum("PGL2")).unwrap();
    assert_eq!(pgl2.j(), &v([-1, 2]));
    let quo = decompose_quotient(&pgl2).unwrap();
    assert_eq!(quo.cokernel, vec![2]);
    assert_eq!(&quo.generator, pgl2.r());

    let sl2 = langlands_dual_data(&datum("SL2")).unwrap();
    assert!(decompose_quotient(&sl2).unwrap().kernel.epsilon_is_trivial());
    let gl2 = langlands_dual_data(&datum("GL2")).unwrap();
    let k = decompose_quotient(&gl2).unwrap().kernel;
    assert_eq!((k.scalar(), k.epsilon_is_trivial()), (-1, false));
}

#[test]
fn dot_action_on_characters() {
    let d = datum("PGL2");
    let w = d.weyl_group().unwrap();
    let qv = rat(5);
    let chi = UnramifiedCharacter::new(vec![rat(3)]).unwrap();
    assert_eq!(dot_act(&d, w.identity(), &qv, &chi), chi);
    let s = w.elements().iter().find(|x| x.word == [0]).unwrap();
    let moved = dot_act(&d, s, &qv, &chi);
    // χ(α̌) = 9, so the new value is 9⁻¹·25
    assert_eq!(moved.eval(&v([2])), BigRational::new(25.into(), 9.into()));
    assert_eq!(dot_act(&d, s, &qv, &moved), chi);
}

#[test]
fn lifting_and_pgl2_images() {
    let dd = langlands_dual_data(&datum("PGL2")).unwrap();
    let f = &e(v([1])) + &GroupAlg::monomial(v([-3]), q(2));
    assert_eq!(lift_element(&dd, &f, 0).specialize_delta(1).unwrap(), f);
    let s = dd.ext_weyl().elements().iter().find(|x| x.word == [0]).unwrap();
    assert_eq!(s.act_y(&v([1, 0])), v([-1, -1]));

    assert_eq!(satake_image(&dd, &v([0])).unwrap().poly, GroupAlg::one(1));
    let s1 = satake_image(&dd, &v([1])).unwrap().poly;
    assert_eq!(s1, &e(v([1])) + &GroupAlg::monomial(v([-1]), q(-1)));
    let s2 = satake_image(&dd, &v([2])).unwrap().poly;
    let middle = &q(-1) - &q(-2);
    let expected = &(&e(v([2])) + &GroupAlg::constant(1, middle)) + &GroupAlg::monomial(v([-2]), q(-2));
    assert_eq!(s2, expected);
}

#[test]
fn structure_polynomial_examples() {
    let dd = langlands_dual_data(&datum("PGL2")).unwrap();
    let unit = structure_polynomials(&dd, &v([0]), &v([3])).unwrap();
    assert_eq!(unit.coeffs, BTreeMap::from([(v([3]), Laurent::one())]));
    let square = structure_polynomials(&dd, &v([1]), &v([1])).unwrap();
    assert_eq!(square.coeffs, BTreeMap::from([(v([2]), Laurent::one()), (v([0]), &q(-1) + &q(-2))]));

    let gl3 = langlands_dual_data(&datum("GL3")).unwrap();
    let h = structure_polynomials(&gl3, &v([1, 0, 0]), &v([1, 1, 0])).unwrap();
    assert!(h.coeff(&v([2, 1, 0])).is_one());
}

#[test]
fn tree_counts() {
    assert_eq!(tree_structure_constants(1, 1, 2).unwrap(), BTreeMap::from([(0, 3), (2, 1)]));
    assert_eq!(tree_structure_constants(1, 0, 2).unwrap(), BTreeMap::from([(1, 1)]));
    assert_eq!(tree_structure_constants(2, 2, 2).unwrap()[&0], 6);
}

#[test]
fn parameters_and_factors() {
    let dd = langlands_dual_data(&datum("PGL2")).unwrap();
    assert!(make_parameter(&dd, rat(3), vec![rat(2)]).is_ok());
    assert!(matches!(
        UnramifiedParameter::from_values(&dd, rat(3), vec![rat(2), rat(1)]),
        Err(Error::OmegaViolated { .. })
    ));
    let triv = langlands_dual_data(&RootDatum::trivial()).unwrap();
    let x = make_parameter::<BigRational>(&triv, rat(7), vec![]).unwrap();
    assert_eq!(x.point().values(), &[rat(7)]);

    let one = local_rfactor(&x, &DualRepresentation::trivial(&triv)).unwrap();
    assert_eq!(one.denominator(), vec![rat(1), rat(-1)]);
    let p = local_rfactor(&x, &DualRepresentation::p(&triv)).unwrap();
    assert_eq!(p.denominator(), vec![rat(1), rat(-7)]);

    // standard representation of the dual of PGL2 at values(μ) = a = 2, q = 3
    let x = make_parameter(&dd, rat(3), vec![rat(2)]).unwrap();
    let std = DualRepresentation::new(&dd, vec![v([1, 1]), v([-1, 0])]).unwrap();
    let f = local_rfactor(&x, &std).unwrap();
    // (1 − 6u)(1 − u/2) = 1 − 13/2·u + 3u²
    assert_eq!(f.denominator(), vec![rat(1), BigRational::new((-13).into(), 2.into()), rat(3)]);
    assert_eq!(std.contragredient(&dd), std);
    assert_eq!(DualRepresentation::trivial(&dd).contragredient(&dd), DualRepresentation::p(&dd));
}

#[test]
fn euler_products() {
    let triv = langlands_dual_data(&RootDatum::trivial()).unwrap();
    let tau = DualRepresentation::trivial(&triv);
    assert_eq!(partial_rfunction::<BigRational>(&[], &tau, 2.0).unwrap(), 1.0);
    let two = make_parameter::<BigRational>(&triv, rat(2), vec![]).unwrap();
    assert!((partial_rfunction(&[two], &tau, 1.0).unwrap() - 2.0).abs() < 1e-12);
}
