use std::fmt;

use serde::{Deserialize, Serialize};

use super::roots::{root_system, DEFAULT_ROOT_CAP};
use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, IntVec};

/// A based root datum `(X, Y, Δ, Δ̌)` with `X = Y = ℤⁿ` paired by the dot
/// product.
///
/// `rank` is the rank of the ambient lattices, which may exceed the number of
/// simple roots (e.g. `GL2`).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootDatum {
    name: Option<String>,
    rank: usize,
    simple_roots: Vec<IntVec>,
    simple_coroots: Vec<IntVec>,
}

/// One failed root-datum axiom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Violation {
    CountMismatch { roots: usize, coroots: usize },
    WrongLength { coroot: bool, index: usize, len: usize, rank: usize },
    PairingNotTwo { index: usize, value: i64 },
    PositiveOffDiagonal { i: usize, j: usize, value: i64 },
    AsymmetricZero { i: usize, j: usize },
    DependentRoots,
    DependentCoroots,
    NotFiniteType,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CountMismatch { roots, coroots } => {
                write!(f, "{roots} simple roots but {coroots} simple coroots")
            }
            Violation::WrongLength { coroot, index, len, rank } => {
                let kind = if *coroot { "coroot" } else { "root" };
                write!(f, "simple {kind} {index} has length {len}, expected rank {rank}")
            }
            Violation::PairingNotTwo { index, value } => {
                write!(f, "pairing ⟨α{index},α̌{index}⟩ = {value} ≠ 2")
            }
            Violation::PositiveOffDiagonal { i, j, value } => {
                write!(f, "Cartan entry ⟨α{j},α̌{i}⟩ = {value} is positive")
            }
            Violation::AsymmetricZero { i, j } => {
                write!(f, "⟨α{j},α̌{i}⟩ and ⟨α{i},α̌{j}⟩ are not both zero or both nonzero")
            }
            Violation::DependentRoots => write!(f, "simple roots are linearly dependent"),
            Violation::DependentCoroots => write!(f, "simple coroots are linearly dependent"),
            Violation::NotFiniteType => write!(f, "root system is not finite"),
        }
    }
}

/// Names of the builtin registry, in registry order.
pub const BUILTIN_NAMES: [&str; 8] = ["SL2", "PGL2", "GL2", "GL3", "SL3", "PGL3", "Sp4", "SO5"];

const DUAL_NAMES: [(&str, &str); 5] =
    [("SL2", "PGL2"), ("GL2", "GL2"), ("GL3", "GL3"), ("SL3", "PGL3"), ("Sp4", "SO5")];

fn dual_name(name: &str) -> String {
    for (a, b) in DUAL_NAMES {
        if name == a {
            return b.to_string();
        }
        if name == b {
            return a.to_string();
        }
    }
    match name.strip_prefix("dual(").and_then(|s| s.strip_suffix(')')) {
        Some(inner) => inner.to_string(),
        None => format!("dual({name})"),
    }
}

fn vecs(rows: &[&[i64]]) -> Vec<IntVec> {
    rows.iter().map(|r| IntVec::new(r.to_vec())).collect()
}

impl RootDatum {
    /// Assembles a datum without checking the axioms; see [`RootDatum::validate`].
    pub fn from_parts(
        name: Option<String>,
        rank: usize,
        simple_roots: Vec<IntVec>,
        simple_coroots: Vec<IntVec>,
    ) -> Self {
        RootDatum { name, rank, simple_roots, simple_coroots }
    }

    /// Assembles and validates.
    pub fn new(
        name: Option<String>,
        rank: usize,
        simple_roots: Vec<IntVec>,
        simple_coroots: Vec<IntVec>,
    ) -> Result<Self> {
        let d = RootDatum::from_parts(name, rank, simple_roots, simple_coroots);
        d.ensure_valid()?;
        Ok(d)
    }

    pub fn builtin(name: &str) -> Option<RootDatum> {
        let (rank, roots, coroots): (usize, Vec<IntVec>, Vec<IntVec>) = match name {
            "SL2" => (1, vecs(&[&[2]]), vecs(&[&[1]])),
            "PGL2" => (1, vecs(&[&[1]]), vecs(&[&[2]])),
            "GL2" => (2, vecs(&[&[1, -1]]), vecs(&[&[1, -1]])),
            "GL3" => {
                let s = vecs(&[&[1, -1, 0], &[0, 1, -1]]);
                (3, s.clone(), s)
            }
            "SL3" => (2, vecs(&[&[2, -1], &[-1, 2]]), vecs(&[&[1, 0], &[0, 1]])),
            "PGL3" => (2, vecs(&[&[1, 0], &[0, 1]]), vecs(&[&[2, -1], &[-1, 2]])),
            "Sp4" => (2, vecs(&[&[1, -1], &[0, 2]]), vecs(&[&[1, -1], &[0, 1]])),
            "SO5" => (2, vecs(&[&[1, -1], &[0, 1]]), vecs(&[&[1, -1], &[0, 2]])),
            _ => return None,
        };
        Some(RootDatum::from_parts(Some(name.to_string()), rank, roots, coroots))
    }

    pub fn builtins() -> Vec<RootDatum> {
        BUILTIN_NAMES.iter().map(|n| RootDatum::builtin(n).expect("registry name")).collect()
    }

    /// The datum of the trivial group: rank 0, no roots.
    pub fn trivial() -> RootDatum {
        RootDatum::from_parts(Some("trivial".to_string()), 0, vec![], vec![])
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| "<unnamed>".to_string())
    }

    pub fn with_name(mut self, name: Option<String>) -> Self {
        self.name = name;
        self
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of simple roots.
    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn simple_roots(&self) -> &[IntVec] {
        &self.simple_roots
    }

    pub fn simple_coroots(&self) -> &[IntVec] {
        &self.simple_coroots
    }

    /// `C[i][j] = ⟨α_j, α̌_i⟩`.
    pub fn cartan_matrix(&self) -> IntMatrix {
        let k = self.semisimple_rank();
        let mut c = IntMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                c[(i, j)] = self.simple_roots[j].dot(&self.simple_coroots[i]);
            }
        }
        c
    }

    /// All violated axioms; empty iff the datum is valid and of finite type.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let (k, kc) = (self.simple_roots.len(), self.simple_coroots.len());
        if k != kc {
            out.push(Violation::CountMismatch { roots: k, coroots: kc });
        }
        for (coroot, list) in [(false, &self.simple_roots), (true, &self.simple_coroots)] {
            for (index, v) in list.iter().enumerate() {
                if v.len() != self.rank {
                    out.push(Violation::WrongLength { coroot, index, len: v.len(), rank: self.rank });
                }
            }
        }
        if !out.is_empty() {
            return out;
        }

        for i in 0..k {
            let value = self.simple_roots[i].dot(&self.simple_coroots[i]);
            if value != 2 {
                out.push(Violation::PairingNotTwo { index: i, value });
            }
        }
        let c = self.cartan_matrix();
        for i in 0..k {
            for j in 0..k {
                if i == j {
                    continue;
                }
                if c[(i, j)] > 0 {
                    out.push(Violation::PositiveOffDiagonal { i, j, value: c[(i, j)] });
                }
                if i < j && (c[(i, j)] == 0) != (c[(j, i)] == 0) {
                    out.push(Violation::AsymmetricZero { i, j });
                }
            }
        }
        if k > 0 {
            if IntMatrix::from_columns(self.rank, &self.simple_roots).rank() < k {
                out.push(Violation::DependentRoots);
            }
            if IntMatrix::from_columns(self.rank, &self.simple_coroots).rank() < k {
                out.push(Violation::DependentCoroots);
            }
        }
        if out.is_empty() && root_system(self, DEFAULT_ROOT_CAP).is_err() {
            out.push(Violation::NotFiniteType);
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_empty() {
            Ok(())
        } else {
            Err(Error::InvalidDatum(v))
        }
    }

    /// The dual datum: roots and coroots trade places.
    pub fn dual(&self) -> Result<RootDatum> {
        self.ensure_valid()?;
        Ok(RootDatum {
            name: self.name.as_deref().map(dual_name),
            rank: self.rank,
            simple_roots: self.simple_coroots.clone(),
            simple_coroots: self.simple_roots.clone(),
        })
    }

    /// Same lattices, roots and coroots, ignoring the label.
    pub fn same_presentation(&self, other: &RootDatum) -> bool {
        self.rank == other.rank
            && self.simple_roots == other.simple_roots
            && self.simple_coroots == other.simple_coroots
    }

    /// Matrix of the simple reflection `s_i` on `X`: `x ↦ x − ⟨x, α̌_i⟩ α_i`.
    pub fn reflection_x(&self, i: usize) -> IntMatrix {
        reflection(&self.simple_roots[i], &self.simple_coroots[i])
    }

    /// Matrix of the simple reflection `s_i` on `Y`: `y ↦ y − ⟨α_i, y⟩ α̌_i`.
    pub fn reflection_y(&self, i: usize) -> IntMatrix {
        reflection(&self.simple_coroots[i], &self.simple_roots[i])
    }

    /// A coweight is dominant when it pairs nonnegatively with every simple root.
    pub fn is_dominant(&self, y: &IntVec) -> bool {
        y.len() == self.rank && self.simple_roots.iter().all(|a| a.dot(y) >= 0)
    }
}

// v ↦ v − ⟨v, dual⟩ axis
fn reflection(axis: &IntVec, dual: &IntVec) -> IntMatrix {
    let n = axis.len();
    let mut m = IntMatrix::identity(n);
    for r in 0..n {
        for c in 0..n {
            m[(r, c)] -= axis[r] * dual[c];
        }
    }
    m
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RootDatum({}; rank {}; roots {:?}; coroots {:?})",
            self.label(),
            self.rank,
            self.simple_roots,
            self.simple_coroots
        )
    }
}
