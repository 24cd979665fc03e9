use std::collections::{BTreeMap, VecDeque};

use super::RootDatum;
use crate::error::{Error, Result};
use crate::lattice::IntVec;

pub const DEFAULT_ROOT_CAP: usize = 100_000;

// Finite-type roots have simple-root coefficients at most 6 (E8).
const COEFF_CAP: i64 = 64;

/// A positive root together with its coroot, both also recorded by their
/// coefficients in the simple (co)root basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    pub root: IntVec,
    pub coroot: IntVec,
    pub root_coeffs: IntVec,
    pub coroot_coeffs: IntVec,
}

impl PositiveRoot {
    pub fn height(&self) -> i64 {
        self.root_coeffs.iter().sum()
    }
}

/// The positive roots of a datum, matched with their coroots.
#[derive(Debug, Clone)]
pub struct RootSystem {
    positive: Vec<PositiveRoot>,
}

impl RootSystem {
    pub fn positive(&self) -> &[PositiveRoot] {
        &self.positive
    }

    pub fn positive_roots(&self) -> Vec<IntVec> {
        self.positive.iter().map(|r| r.root.clone()).collect()
    }

    pub fn positive_coroots(&self) -> Vec<IntVec> {
        self.positive.iter().map(|r| r.coroot.clone()).collect()
    }

    /// All roots, positive and negative.
    pub fn all_roots(&self) -> Vec<IntVec> {
        self.positive.iter().flat_map(|r| [r.root.clone(), -&r.root]).collect()
    }

    /// Sum of the positive roots (the weight `2ρ`).
    pub fn root_sum(&self, rank: usize) -> IntVec {
        self.positive.iter().fold(IntVec::zeros(rank), |acc, r| &acc + &r.root)
    }

    pub fn len(&self) -> usize {
        self.positive.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positive.is_empty()
    }
}

/// Closure of the simple roots under simple reflections, tracked in the
/// simple-root basis: `s_i(β) = β − ⟨β, α̌_i⟩ α_i` and dually on coroots.
///
/// Does not check the datum axioms; fails with a resource-cap error when the
/// closure does not terminate within `cap` roots.
pub fn root_system(d: &RootDatum, cap: usize) -> Result<RootSystem> {
    let k = d.semisimple_rank();
    if d.simple_coroots().len() != k {
        return Err(Error::InvalidDatum(d.validate()));
    }
    let c = d.cartan_matrix();
    let overflow = || Error::ResourceCap { what: "root closure", limit: cap };

    // root coeffs → coroot coeffs
    let mut seen: BTreeMap<Vec<i64>, Vec<i64>> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for i in 0..k {
        let mut e = vec![0; k];
        e[i] = 1;
        seen.insert(e.clone(), e.clone());
        queue.push_back(e);
    }
    while let Some(beta) = queue.pop_front() {
        let beta_check = seen[&beta].clone();
        for i in 0..k {
            // ⟨β, α̌_i⟩ = Σ_j β_j C[i][j];  ⟨α_i, β̌⟩ = Σ_j β̌_j C[j][i]
            let pair: i64 = (0..k).map(|j| beta[j] * c[(i, j)]).sum();
            let pair_check: i64 = (0..k).map(|j| beta_check[j] * c[(j, i)]).sum();
            let mut image = beta.clone();
            image[i] -= pair;
            let mut image_check = beta_check.clone();
            image_check[i] -= pair_check;
            if image.iter().chain(&image_check).any(|x| x.abs() > COEFF_CAP) {
                return Err(overflow());
            }
            if !seen.contains_key(&image) {
                if seen.len() >= cap {
                    return Err(overflow());
                }
                seen.insert(image.clone(), image_check);
                queue.push_back(image);
            }
        }
    }

    let mut positive: Vec<PositiveRoot> = Vec::new();
    for (coeffs, check) in seen {
        let pos = coeffs.iter().all(|&x| x >= 0);
        let neg = coeffs.iter().all(|&x| x <= 0);
        if !pos && !neg {
            return Err(overflow());
        }
        if !pos {
            continue;
        }
        let combine = |basis: &[IntVec], cs: &[i64]| {
            basis.iter().zip(cs).fold(IntVec::zeros(d.rank()), |acc, (b, &x)| &acc + &b.scale(x))
        };
        positive.push(PositiveRoot {
            root: combine(d.simple_roots(), &coeffs),
            coroot: combine(d.simple_coroots(), &check),
            root_coeffs: IntVec::new(coeffs),
            coroot_coeffs: IntVec::new(check),
        });
    }
    positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.root_coeffs.cmp(&a.root_coeffs)));
    Ok(RootSystem { positive })
}

impl RootDatum {
    /// Positive roots and matched positive coroots.
    pub fn generate_roots(&self) -> Result<(Vec<IntVec>, Vec<IntVec>)> {
        self.ensure_valid()?;
        let rs = root_system(self, DEFAULT_ROOT_CAP)?;
        Ok((rs.positive_roots(), rs.positive_coroots()))
    }

    pub fn root_system(&self) -> Result<RootSystem> {
        self.ensure_valid()?;
        root_system(self, DEFAULT_ROOT_CAP)
    }
}
