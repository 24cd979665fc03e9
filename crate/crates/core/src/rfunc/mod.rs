//! Unramified modified parameters, condition (ω), the √q splitting with its
//! ε-twist, dual representations and local R-factors.

mod factor;
mod rep;

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::dualdata::LanglandsDualData;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::lattice::IntVec;

pub use factor::{local_rfactor, partial_rfunction, primes_below, RFactor, POLE_TOLERANCE};
pub use rep::DualRepresentation;

/// A multiplicative assignment on the standard basis of `Ỹ`, i.e. a point of
/// the dual torus of the extended group.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusPoint<F> {
    values: Vec<F>,
}

impl<F: Field> TorusPoint<F> {
    pub fn new(values: Vec<F>) -> Result<Self> {
        if let Some(k) = values.iter().position(|v| v.is_zero()) {
            return Err(Error::ZeroValue(k));
        }
        Ok(TorusPoint { values })
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    /// `Π valuesₖ^{ỹₖ}`.
    pub fn value_at(&self, y: &IntVec) -> F {
        assert_eq!(y.len(), self.values.len(), "weight of the wrong rank");
        self.values.iter().zip(y.iter()).fold(F::one(), |acc, (v, &e)| acc.mul(&v.pow(e).expect("values are nonzero")))
    }

    /// Applies `f` to every coordinate value.
    pub fn map(&self, f: impl Fn(&F) -> F) -> Self {
        TorusPoint { values: self.values.iter().map(f).collect() }
    }

    /// `ỹ ↦ x(m·ỹ)` on the basis, for an integer matrix `m` on `Ỹ`.
    pub fn pull_back(&self, m: &crate::lattice::IntMatrix) -> Self {
        let n = self.rank();
        TorusPoint {
            values: (0..n)
                .map(|k| self.value_at(&m.apply(&IntVec::unit(n, k)).expect("square matrix of matching rank")))
                .collect(),
        }
    }
}

impl<F: Field> fmt::Display for TorusPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// An unramified modified parameter at a place with residue field of size
/// `q`: a torus point of the extended dual whose value at `δ` is `q`.
#[derive(Debug, Clone)]
pub struct UnramifiedParameter<'a, F> {
    dd: &'a LanglandsDualData,
    q: BigRational,
    point: TorusPoint<F>,
}

impl<'a, F: Field> UnramifiedParameter<'a, F> {
    /// Extends values on the basis of `Y` by `values(δ) = q`.
    pub fn new(dd: &'a LanglandsDualData, q: BigRational, base_values: Vec<F>) -> Result<Self> {
        check_q(&q)?;
        let n = dd.base().rank();
        if base_values.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: base_values.len() });
        }
        let mut values = base_values;
        values.push(F::from_rational(&q));
        Ok(UnramifiedParameter { dd, q, point: TorusPoint::new(values)? })
    }

    /// Takes values on the whole basis of `Ỹ`; the value at `δ` must be `q`.
    pub fn from_values(dd: &'a LanglandsDualData, q: BigRational, values: Vec<F>) -> Result<Self> {
        check_q(&q)?;
        let n = dd.ext().rank();
        if values.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: values.len() });
        }
        let expected = F::from_rational(&q);
        let got = &values[dd.delta_index()];
        if *got != expected {
            return Err(Error::OmegaViolated { got: got.to_string(), expected: expected.to_string() });
        }
        Ok(UnramifiedParameter { dd, q, point: TorusPoint::new(values)? })
    }

    pub fn dual_data(&self) -> &'a LanglandsDualData {
        self.dd
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn point(&self) -> &TorusPoint<F> {
        &self.point
    }

    pub fn value_at(&self, y: &IntVec) -> F {
        self.point.value_at(y)
    }

    /// The orbit representative with the smallest value vector under
    /// [`Field::total_cmp`]; equal for Weyl-conjugate parameters.
    pub fn canonical(&self) -> Self {
        let mut best = self.point.clone();
        for w in self.dd.ext_weyl().elements() {
            let cand = self.point.pull_back(&w.mat_y);
            if cmp_points(&cand, &best) == Ordering::Less {
                best = cand;
            }
        }
        UnramifiedParameter { dd: self.dd, q: self.q.clone(), point: best }
    }

    /// `x(w⁻¹·)`: the parameter moved by an extended Weyl element's inverse
    /// matrix `m`.
    pub fn conjugate_by(&self, m: &crate::lattice::IntMatrix) -> Self {
        UnramifiedParameter { dd: self.dd, q: self.q.clone(), point: self.point.pull_back(m) }
    }
}

/// A convenience alias for [`UnramifiedParameter::new`].
pub fn make_parameter<F: Field>(
    dd: &LanglandsDualData,
    q: BigRational,
    base_values: Vec<F>,
) -> Result<UnramifiedParameter<'_, F>> {
    UnramifiedParameter::new(dd, q, base_values)
}

fn check_q(q: &BigRational) -> Result<()> {
    if *q <= <BigRational as One>::one() {
        return Err(Error::BadResidueCardinality(q.to_string()));
    }
    Ok(())
}

fn cmp_points<F: Field>(a: &TorusPoint<F>, b: &TorusPoint<F>) -> Ordering {
    for (x, y) in a.values.iter().zip(&b.values) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

/// The classical parameter attached to a square root `sq` of `q`:
/// `values'(ỹ) = values(ỹ)·sq^{−⟨j, ỹ⟩}`, so `values'(δ) = q·sq⁻² = 1`.
pub fn split_by_sqrt<F: Field>(x: &UnramifiedParameter<'_, F>, sq: &F) -> Result<TorusPoint<F>> {
    if sq.mul(sq) != F::from_rational(x.q()) {
        return Err(Error::NotSquareRoot(sq.to_string()));
    }
    let j = x.dual_data().j();
    let values =
        x.point.values.iter().zip(j.iter()).map(|(v, &jk)| v.mul(&sq.pow(-jk).expect("sq is nonzero"))).collect();
    Ok(TorusPoint { values })
}

/// Multiplies the value at each basis vector `eₖ` by `(−1)^{⟨(t,0), eₖ⟩}`;
/// an involution.
pub fn epsilon_twist<F: Field>(dd: &LanglandsDualData, p: &TorusPoint<F>) -> TorusPoint<F> {
    let values = p
        .values
        .iter()
        .zip(dd.t_ext().iter())
        .map(|(v, &tk)| if tk.rem_euclid(2) == 1 { v.neg() } else { v.clone() })
        .collect();
    TorusPoint { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dualdata::langlands_dual_data;
    use crate::field::QuadraticExt;
    use crate::rootdatum::RootDatum;
    use num_bigint::BigInt;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn dd(name: &str) -> LanglandsDualData {
        langlands_dual_data(&RootDatum::builtin(name).unwrap()).unwrap()
    }

    #[test]
    fn make_parameter_examples() {
        let d = dd("PGL2");
        let x = make_parameter(&d, r(3), vec![r(2)]).unwrap();
        assert_eq!(x.point().values(), &[r(2), r(3)]);
        assert!(matches!(
            UnramifiedParameter::from_values(&d, r(3), vec![r(2), r(1)]),
            Err(Error::OmegaViolated { .. })
        ));
        assert_eq!(make_parameter(&d, r(3), vec![r(0)]).unwrap_err(), Error::ZeroValue(0));
        assert!(matches!(make_parameter(&d, r(1), vec![r(2)]), Err(Error::BadResidueCardinality(_))));

        let triv = langlands_dual_data(&RootDatum::trivial()).unwrap();
        let x = make_parameter::<BigRational>(&triv, r(5), vec![]).unwrap();
        assert_eq!(x.point().values(), &[r(5)]);
    }

    #[test]
    fn split_gives_classical_parameter() {
        let d = dd("PGL2");
        let x = UnramifiedParameter::from_values(&d, r(9), vec![r(2), r(9)]).unwrap();
        let split = split_by_sqrt(&x, &r(3)).unwrap();
        assert_eq!(split.value_at(&d.i()), r(1));
        // value at (μ,1) was 2·9 = 18; ⟨j,(1,1)⟩ = 1
        assert_eq!(x.value_at(&IntVec::from([1, 1])), r(18));
        assert_eq!(split.value_at(&IntVec::from([1, 1])), r(6));
        assert!(matches!(split_by_sqrt(&x, &r(2)), Err(Error::NotSquareRoot(_))));
    }

    #[test]
    fn sign_of_square_root_is_the_epsilon_twist() {
        let d = dd("PGL2");
        let sq = QuadraticExt::sqrt(r(2));
        let x = make_parameter(&d, r(2), vec![QuadraticExt::new(r(3), r(-1), r(2))]).unwrap();
        let plus = split_by_sqrt(&x, &sq).unwrap();
        let minus = split_by_sqrt(&x, &sq.neg()).unwrap();
        assert_ne!(plus, minus);
        assert_eq!(minus, epsilon_twist(&d, &plus));
    }

    #[test]
    fn twist_is_an_involution_and_trivial_for_even_t() {
        let d = dd("PGL2");
        let p = TorusPoint::new(vec![r(5), r(7)]).unwrap();
        let once = epsilon_twist(&d, &p);
        assert_eq!(once.values(), &[r(-5), r(7)]);
        assert_eq!(epsilon_twist(&d, &once), p);

        let sl2 = dd("SL2");
        assert_eq!(epsilon_twist(&sl2, &p), p);
    }

    #[test]
    fn canonical_representative_is_orbit_invariant() {
        let d = dd("GL3");
        let x = make_parameter(&d, r(5), vec![r(2), r(3), r(7)]).unwrap();
        let c = x.canonical();
        for w in d.ext_weyl().elements() {
            let y = x.conjugate_by(&w.mat_y);
            assert_eq!(y.value_at(&d.i()), r(5));
            assert_eq!(y.canonical().point(), c.point());
        }
    }
}
