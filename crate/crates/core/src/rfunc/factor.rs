use std::fmt;

use super::{DualRepresentation, UnramifiedParameter};
use crate::error::{Error, Result};
use crate::field::Field;

/// `|1 − c·q^{−s}|` below this (relative to `max(1, |c·q^{−s}|)`) counts as a
/// pole.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// `Π (1 − cᵢ u)^{−1}` in `u = q^{−s}`, stored by its inverse roots `cᵢ`.
#[derive(Debug, Clone, PartialEq)]
pub struct RFactor<F> {
    pub inverse_roots: Vec<F>,
}

impl<F: Field> RFactor<F> {
    pub fn degree(&self) -> usize {
        self.inverse_roots.len()
    }

    /// Coefficients of `Π (1 − cᵢ u)` in increasing powers of `u`.
    pub fn denominator(&self) -> Vec<F> {
        let mut poly = vec![F::one()];
        for c in &self.inverse_roots {
            let mut next = poly.clone();
            next.push(F::zero());
            for (k, a) in poly.iter().enumerate() {
                next[k + 1] = next[k + 1].sub(&a.mul(c));
            }
            poly = next;
        }
        poly
    }

    /// `R(s + k)` expressed at `s`: every inverse root times `q^{−k}`.
    /// In particular `R(τ; s − 1)` is `shifted(−1)`, roots times `q`.
    pub fn shifted(&self, k: i64, q: &F) -> Self {
        let factor = q.pow(-k).expect("q is nonzero");
        RFactor { inverse_roots: self.inverse_roots.iter().map(|c| c.mul(&factor)).collect() }
    }

    /// Same factor as a rational function of `u`: the denominators agree.
    pub fn same_factor(&self, other: &Self) -> bool {
        self.denominator() == other.denominator()
    }

    /// `(log |R(s)|, sign of R(s))` at residue cardinality `q`.
    pub fn log_abs_and_sign(&self, q: f64, s: f64) -> Option<(f64, f64)> {
        let u = q.powf(-s);
        let mut log = 0.0;
        let mut sign = 1.0;
        for c in &self.inverse_roots {
            let cu = c.to_f64() * u;
            let d = 1.0 - cu;
            if d.abs() <= POLE_TOLERANCE * cu.abs().max(1.0) {
                return None;
            }
            log -= d.abs().ln();
            if d < 0.0 {
                sign = -sign;
            }
        }
        Some((log, sign))
    }

    /// `R(s)` at residue cardinality `q`; `None` at a pole.
    pub fn eval(&self, q: f64, s: f64) -> Option<f64> {
        self.log_abs_and_sign(q, s).map(|(l, sign)| sign * l.exp())
    }
}

impl<F: Field> fmt::Display for RFactor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse_roots.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.inverse_roots.iter().map(|c| format!("(1 - ({c})·u)")).collect();
        write!(f, "[{}]^-1", parts.join("·"))
    }
}

/// `det(1 − τ(x)·u)^{−1}`: the inverse roots are the values of `x` on the
/// weights of `τ`.
pub fn local_rfactor<F: Field>(x: &UnramifiedParameter<'_, F>, tau: &DualRepresentation) -> Result<RFactor<F>> {
    let n = x.dual_data().ext().rank();
    if let Some(w) = tau.weights().iter().find(|w| w.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: w.len() });
    }
    Ok(RFactor { inverse_roots: tau.weights().iter().map(|w| x.value_at(w)).collect() })
}

/// `Π_v R(x_v, τ; s)` over the given places, in the given order.
///
/// Logarithms of the absolute values are accumulated with Neumaier's
/// compensated summation and the sign is tracked separately, so the result
/// does not depend on anything but the input order.
pub fn partial_rfunction<F: Field>(
    places: &[UnramifiedParameter<'_, F>],
    tau: &DualRepresentation,
    s: f64,
) -> Result<f64> {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut sign = 1.0f64;
    for (i, x) in places.iter().enumerate() {
        let q = Field::to_f64(x.q());
        let place = || format!("place {i} (q = {})", x.q());
        let r = local_rfactor(x, tau)?;
        let (l, sg) = r.log_abs_and_sign(q, s).ok_or_else(|| Error::Pole { place: place() })?;
        let t = sum + l;
        comp += if sum.abs() >= l.abs() { (sum - t) + l } else { (l - t) + sum };
        sum = t;
        sign *= sg;
    }
    Ok(sign * (sum + comp).exp())
}

/// Primes `p < n`, by the sieve of Eratosthenes.
pub fn primes_below(n: u64) -> Vec<u64> {
    let n = n as usize;
    if n < 3 {
        return vec![];
    }
    let mut composite = vec![false; n];
    let mut out = Vec::new();
    for p in 2..n {
        if composite[p] {
            continue;
        }
        out.push(p as u64);
        for m in (p * p..n).step_by(p) {
            composite[m] = true;
        }
    }
    out
}
