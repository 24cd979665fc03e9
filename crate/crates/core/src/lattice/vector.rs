use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A vector of the ambient lattice `ℤⁿ`.
///
/// Character and cocharacter lattices are both presented as `ℤⁿ` with the
/// standard dot product as the pairing. The derived order is lexicographic,
/// which is the monomial order used for division in the group algebra.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntVec(Vec<i64>);

impl IntVec {
    pub fn new(coords: Vec<i64>) -> Self {
        IntVec(coords)
    }

    pub fn zeros(n: usize) -> Self {
        IntVec(vec![0; n])
    }

    /// The `k`-th standard basis vector of `ℤⁿ`.
    pub fn unit(n: usize, k: usize) -> Self {
        let mut v = vec![0; n];
        v[k] = 1;
        IntVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Standard pairing. Panics if the lengths differ.
    pub fn dot(&self, other: &IntVec) -> i64 {
        assert_eq!(self.len(), other.len(), "pairing of vectors of different rank");
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, k: i64) -> IntVec {
        IntVec(self.0.iter().map(|c| c * k).collect())
    }

    /// Sum of absolute values of the coordinates.
    pub fn l1_norm(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).sum()
    }

    /// Appends one coordinate, as in `y ↦ (y, n)`.
    pub fn extend_with(&self, last: i64) -> IntVec {
        let mut v = self.0.clone();
        v.push(last);
        IntVec(v)
    }

    /// Drops coordinate `k`.
    pub fn without(&self, k: usize) -> IntVec {
        let mut v = self.0.clone();
        v.remove(k);
        IntVec(v)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, i64> {
        self.0.iter()
    }
}

impl From<Vec<i64>> for IntVec {
    fn from(v: Vec<i64>) -> Self {
        IntVec(v)
    }
}

impl<const N: usize> From<[i64; N]> for IntVec {
    fn from(v: [i64; N]) -> Self {
        IntVec(v.to_vec())
    }
}

impl Index<usize> for IntVec {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &IntVec {
    type Output = IntVec;
    fn add(self, rhs: &IntVec) -> IntVec {
        assert_eq!(self.len(), rhs.len());
        IntVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVec {
    type Output = IntVec;
    fn sub(self, rhs: &IntVec) -> IntVec {
        assert_eq!(self.len(), rhs.len());
        IntVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVec {
    type Output = IntVec;
    fn neg(self) -> IntVec {
        IntVec(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
