use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::SatakeEngine;
use crate::dualdata::langlands_dual_data;
use crate::error::{Error, Result};
use crate::lattice::IntVec;
use crate::rootdatum::RootDatum;

pub const DEFAULT_TREE_DEPTH_CAP: usize = 12;
pub const DEFAULT_TREE_NODE_CAP: usize = 4_000_000;

struct Tree {
    parent: Vec<u32>,
    depth: Vec<u8>,
}

impl Tree {
    /// Ball of radius `radius` around a root in the `(q+1)`-regular tree.
    fn ball(q: u64, radius: usize, node_cap: usize) -> Result<Tree> {
        let mut parent = vec![0u32];
        let mut depth = vec![0u8];
        let mut frontier = vec![0u32];
        for level in 1..=radius {
            let mut next = Vec::new();
            for &p in &frontier {
                let kids = if level == 1 { q + 1 } else { q };
                for _ in 0..kids {
                    if parent.len() >= node_cap {
                        return Err(Error::ResourceCap { what: "tree nodes", limit: node_cap });
                    }
                    next.push(parent.len() as u32);
                    parent.push(p);
                    depth.push(level as u8);
                }
            }
            frontier = next;
        }
        Ok(Tree { parent, depth })
    }

    fn distance(&self, mut a: u32, mut b: u32) -> usize {
        let mut d = 0;
        while self.depth[a as usize] > self.depth[b as usize] {
            a = self.parent[a as usize];
            d += 1;
        }
        while self.depth[b as usize] > self.depth[a as usize] {
            b = self.parent[b as usize];
            d += 1;
        }
        while a != b {
            a = self.parent[a as usize];
            b = self.parent[b as usize];
            d += 2;
        }
        d
    }

    /// First node created at each depth; these lie on one geodesic ray.
    fn ray(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (i, &d) in self.depth.iter().enumerate() {
            if d as usize == out.len() {
                out.push(i as u32);
            }
        }
        out
    }
}

/// For `u`, `v` at distance `d` on the `(q+1)`-regular tree, the number of
/// `w` with `d(u, w) = m` and `d(w, v) = n`, for every `d` with
/// `|m − n| ≤ d ≤ m + n` and `d ≡ m + n (mod 2)`.
pub fn tree_structure_constants(m: usize, n: usize, q: u64) -> Result<BTreeMap<usize, u64>> {
    tree_structure_constants_capped(m, n, q, DEFAULT_TREE_DEPTH_CAP, DEFAULT_TREE_NODE_CAP)
}

pub fn tree_structure_constants_capped(
    m: usize,
    n: usize,
    q: u64,
    depth_cap: usize,
    node_cap: usize,
) -> Result<BTreeMap<usize, u64>> {
    if q < 2 {
        return Err(Error::BadResidueCardinality(q.to_string()));
    }
    let radius = m + n;
    if radius > depth_cap {
        return Err(Error::ResourceCap { what: "tree depth", limit: depth_cap });
    }
    let tree = Tree::ball(q, radius, node_cap)?;
    let ray = tree.ray();
    let u = 0u32;
    let sphere: Vec<u32> = (0..tree.parent.len() as u32).filter(|&w| tree.depth[w as usize] as usize == m).collect();
    let mut out = BTreeMap::new();
    let lo = m.abs_diff(n);
    for d in (lo..=radius).step_by(2) {
        let v = ray[d];
        debug_assert_eq!(tree.distance(u, v), d);
        let count = sphere.iter().filter(|&&w| tree.distance(w, v) == n).count();
        out.insert(d, count as u64);
    }
    Ok(out)
}

/// One comparison of a rescaled structure polynomial with a tree count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCheck {
    pub m: usize,
    pub n: usize,
    /// `ν = k·μ`, recorded as `k`, which is also the tree distance.
    pub nu: usize,
    /// `⟨t, λ + μ' − ν⟩`.
    pub exponent: i64,
    pub predicted: BigRational,
    pub tree_count: u64,
}

impl OracleCheck {
    pub fn agrees(&self) -> bool {
        self.predicted == BigRational::from_integer(BigInt::from(self.tree_count))
    }
}

/// Outcome of [`compare_rank1_oracle`].
#[derive(Debug, Clone, Default)]
pub struct OracleReport {
    pub q: u64,
    pub max_height: usize,
    pub checks: Vec<OracleCheck>,
    pub failures: Vec<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Compares `PGL2` structure polynomials, evaluated at `q0` and rescaled by
/// `q0^{⟨t, λ + μ' − ν⟩}`, with brute-force path counts on the tree, for all
/// `λ = mμ`, `μ' = nμ`, `m + n ≤ max_height`.
pub fn compare_rank1_oracle(q0: u64, max_height: usize) -> Result<OracleReport> {
    let dd = langlands_dual_data(&RootDatum::builtin("PGL2").expect("builtin"))?;
    let mut engine = SatakeEngine::new(&dd);
    let q = BigRational::from_integer(BigInt::from(q0));
    let mut report = OracleReport { q: q0, max_height, ..OracleReport::default() };
    for m in 0..=max_height {
        for n in 0..=(max_height - m) {
            let (lambda, mu) = (IntVec::from([m as i64]), IntVec::from([n as i64]));
            let top = &lambda + &mu;
            let h = engine.structure(&lambda, &mu)?;
            let counts = tree_structure_constants(m, n, q0)?;
            for (nu, c) in &h.coeffs {
                let exponent = dd.t().dot(&(&top - nu));
                if exponent < 0 || exponent % 2 != 0 {
                    report
                        .failures
                        .push(format!("m={m} n={n} ν={nu}: exponent {exponent} is not a nonnegative even integer"));
                }
                let k = nu[0] as usize;
                let predicted = c.eval(&q) * crate::lattice::pow_rational(&q, exponent as i32);
                let tree_count = counts.get(&k).copied().unwrap_or(0);
                let check = OracleCheck { m, n, nu: k, exponent, predicted, tree_count };
                if !check.agrees() {
                    report.failures.push(format!(
                        "m={m} n={n} ν={k}: rescaled polynomial gives {}, tree count {tree_count}",
                        check.predicted
                    ));
                }
                report.checks.push(check);
            }
            for (&d, &count) in &counts {
                if count > 0 && !h.coeffs.contains_key(&IntVec::from([d as i64])) {
                    report.failures.push(format!("m={m} n={n}: tree count {count} at distance {d} has no term"));
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(tree_structure_constants(1, 1, 2).unwrap(), BTreeMap::from([(0, 3), (2, 1)]));
        assert_eq!(tree_structure_constants(1, 0, 2).unwrap(), BTreeMap::from([(1, 1)]));
        assert_eq!(tree_structure_constants(2, 2, 2).unwrap()[&0], 6);
        // T₂·T₁ = T₃ + q·T₁
        assert_eq!(tree_structure_constants(2, 1, 3).unwrap(), BTreeMap::from([(1, 3), (3, 1)]));
    }

    #[test]
    fn caps() {
        assert!(matches!(tree_structure_constants(7, 7, 2), Err(Error::ResourceCap { .. })));
        assert!(matches!(tree_structure_constants_capped(3, 3, 3, 12, 100), Err(Error::ResourceCap { .. })));
        assert!(matches!(tree_structure_constants(1, 1, 1), Err(Error::BadResidueCardinality(_))));
    }

    #[test]
    fn oracle_agrees() {
        for q in [2, 3] {
            let report = compare_rank1_oracle(q, 4).unwrap();
            assert!(report.passed(), "{:?}", report.failures);
            assert!(!report.checks.is_empty());
        }
    }

    #[test]
    fn oracle_square_of_fundamental() {
        let report = compare_rank1_oracle(2, 2).unwrap();
        let c = report.checks.iter().find(|c| c.m == 1 && c.n == 1 && c.nu == 0).unwrap();
        assert_eq!(c.exponent, 2);
        assert_eq!(c.tree_count, 3);
    }
}
