use num_rational::Ratio;

use super::RootDatum;
use crate::error::{Error, Result};
use crate::lattice::{solve_integer, IntMatrix, IntVec};

impl RootDatum {
    /// Coefficients of `v` in the simple-coroot basis, when `v` is an integer
    /// combination of simple coroots.
    pub fn coroot_coordinates(&self, v: &IntVec) -> Option<IntVec> {
        if v.len() != self.rank() {
            return None;
        }
        let a = IntMatrix::from_columns(self.rank(), self.simple_coroots());
        let (sol, kernel) = solve_integer(&a, v)?;
        debug_assert!(kernel.is_empty(), "simple coroots are independent");
        Some(sol)
    }

    /// `ν ≤ λ` in the dominance order: `λ − ν` is a nonnegative integer
    /// combination of simple coroots.
    pub fn dominance_leq(&self, nu: &IntVec, lambda: &IntVec) -> bool {
        if nu.len() != self.rank() || lambda.len() != self.rank() {
            return false;
        }
        self.coroot_coordinates(&(lambda - nu)).is_some_and(|c| c.iter().all(|&x| x >= 0))
    }

    /// Every dominant `ν ≤ λ`, greatest first (sorted by the coroot height of
    /// `λ − ν`, then lexicographically descending).
    ///
    /// Writing `λ − ν = Σ cᵢ α̌ᵢ` with `ν` dominant gives `C·c ≤ (⟨αⱼ, λ⟩)ⱼ`
    /// coordinatewise, and the inverse Cartan matrix of a finite root system is
    /// nonnegative, so `c ≤ C⁻¹·(⟨αⱼ, λ⟩)ⱼ` bounds the search box.
    pub fn dominant_below(&self, lambda: &IntVec) -> Result<Vec<IntVec>> {
        self.ensure_valid()?;
        if !self.is_dominant(lambda) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let k = self.semisimple_rank();
        if k == 0 {
            return Ok(vec![lambda.clone()]);
        }
        // M[j][i] = ⟨α_j, α̌_i⟩, so (M c)_j = ⟨α_j, Σ cᵢ α̌ᵢ⟩
        let mut m: Vec<Vec<Ratio<i128>>> = (0..k)
            .map(|j| {
                (0..k)
                    .map(|i| Ratio::from_integer(self.simple_roots()[j].dot(&self.simple_coroots()[i]) as i128))
                    .collect()
            })
            .collect();
        let mut rhs: Vec<Ratio<i128>> =
            (0..k).map(|j| Ratio::from_integer(self.simple_roots()[j].dot(lambda) as i128)).collect();
        solve_rational(&mut m, &mut rhs);
        let bounds: Vec<i64> = rhs.iter().map(|x| x.floor().to_integer() as i64).collect();

        let mut out: Vec<(i64, IntVec)> = Vec::new();
        let mut c = vec![0i64; k];
        loop {
            let shift = self
                .simple_coroots()
                .iter()
                .zip(&c)
                .fold(IntVec::zeros(self.rank()), |acc, (a, &x)| &acc + &a.scale(x));
            let nu = lambda - &shift;
            if self.is_dominant(&nu) {
                out.push((c.iter().sum(), nu));
            }
            // odometer over the box
            let mut pos = 0;
            loop {
                if pos == k {
                    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
                    return Ok(out.into_iter().map(|(_, v)| v).collect());
                }
                if c[pos] < bounds[pos] {
                    c[pos] += 1;
                    break;
                }
                c[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Dominant coweights whose coordinates have absolute sum at most `height`.
    pub fn dominant_coweights_up_to(&self, height: i64) -> Vec<IntVec> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut c = vec![-height; n];
        if n == 0 {
            return vec![IntVec::zeros(0)];
        }
        loop {
            let v = IntVec::new(c.clone());
            if v.l1_norm() <= height && self.is_dominant(&v) {
                out.push(v);
            }
            let mut pos = 0;
            loop {
                if pos == n {
                    out.sort_by(|a, b| a.l1_norm().cmp(&b.l1_norm()).then_with(|| a.cmp(b)));
                    return out;
                }
                if c[pos] < height {
                    c[pos] += 1;
                    break;
                }
                c[pos] = -height;
                pos += 1;
            }
        }
    }
}

// Gauss–Jordan in place; the system is square and nonsingular.
fn solve_rational(m: &mut [Vec<Ratio<i128>>], rhs: &mut [Ratio<i128>]) {
    let k = rhs.len();
    for col in 0..k {
        let p = (col..k)
            .find(|&r| m[r][col] != Ratio::from_integer(0))
            .expect("Cartan matrix of a valid datum is nonsingular");
        m.swap(col, p);
        rhs.swap(col, p);
        let piv = m[col][col];
        for x in m[col].iter_mut() {
            *x /= piv;
        }
        rhs[col] /= piv;
        for r in 0..k {
            if r != col {
                let f = m[r][col];
                if f != Ratio::from_integer(0) {
                    let pivot_row = m[col].clone();
                    for (x, v) in m[r].iter_mut().zip(&pivot_row) {
                        *x -= f * v;
                    }
                    let v = rhs[col];
                    rhs[r] -= f * v;
                }
            }
        }
    }
}
