//! Smith normal form over `ℤ` and integer linear solving.

use super::{IntMatrix, IntVec};

/// `left · a · right = diag(diagonal)` with `left`, `right` unimodular.
///
/// The nonzero diagonal entries are positive and each divides the next.
#[derive(Debug, Clone)]
pub struct Smith {
    pub left: IntMatrix,
    pub right: IntMatrix,
    pub diagonal: Vec<i64>,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|&&d| d != 0).count()
    }

    /// Invariant factors different from 1.
    pub fn nontrivial_factors(&self) -> Vec<i64> {
        self.diagonal.iter().copied().filter(|&d| d != 1 && d != 0).collect()
    }
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols() {
        let t = m[(a, j)];
        m[(a, j)] = m[(b, j)];
        m[(b, j)] = t;
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let t = m[(i, a)];
        m[(i, a)] = m[(i, b)];
        m[(i, b)] = t;
    }
}

// row[dst] += k * row[src]
fn add_row(m: &mut IntMatrix, dst: usize, src: usize, k: i64) {
    for j in 0..m.cols() {
        let v = m[(src, j)];
        m[(dst, j)] += k * v;
    }
}

fn add_col(m: &mut IntMatrix, dst: usize, src: usize, k: i64) {
    for i in 0..m.rows() {
        let v = m[(i, src)];
        m[(i, dst)] += k * v;
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for j in 0..m.cols() {
        m[(r, j)] = -m[(r, j)];
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> Smith {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut left = IntMatrix::identity(m);
    let mut right = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        // pivot: smallest nonzero magnitude in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                let v = d[(i, j)].abs();
                if v != 0 && best.is_none_or(|(bi, bj)| v < d[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        swap_rows(&mut d, t, pi);
        swap_rows(&mut left, t, pi);
        swap_cols(&mut d, t, pj);
        swap_cols(&mut right, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                let q = d[(i, t)].div_euclid(d[(t, t)]);
                if q != 0 {
                    add_row(&mut d, i, t, -q);
                    add_row(&mut left, i, t, -q);
                }
                if d[(i, t)] != 0 {
                    swap_rows(&mut d, t, i);
                    swap_rows(&mut left, t, i);
                    dirty = true;
                }
            }
            for j in t + 1..n {
                let q = d[(t, j)].div_euclid(d[(t, t)]);
                if q != 0 {
                    add_col(&mut d, j, t, -q);
                    add_col(&mut right, j, t, -q);
                }
                if d[(t, j)] != 0 {
                    swap_cols(&mut d, t, j);
                    swap_cols(&mut right, t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let p = d[(t, t)];
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| d[(i, j)] % p != 0));
            match bad {
                Some(i) => {
                    add_row(&mut d, t, i, 1);
                    add_row(&mut left, t, i, 1);
                }
                None => break,
            }
        }
        if d[(t, t)] < 0 {
            negate_row(&mut d, t);
            negate_row(&mut left, t);
        }
    }

    let diagonal = (0..m.min(n)).map(|i| d[(i, i)]).collect();
    Smith { left, right, diagonal }
}

/// All integer solutions of `a · x = b`: a particular solution and a basis of
/// the integer kernel, or `None` when no integral solution exists.
pub fn solve_integer(a: &IntMatrix, b: &IntVec) -> Option<(IntVec, Vec<IntVec>)> {
    assert_eq!(a.rows(), b.len(), "right-hand side has the wrong length");
    let s = smith_normal_form(a);
    let ub = s.left.apply(b).expect("dimensions checked above");
    let rank = s.rank();
    let mut y = vec![0i64; a.cols()];
    for i in 0..a.rows() {
        if i < rank {
            let di = s.diagonal[i];
            if ub[i] % di != 0 {
                return None;
            }
            y[i] = ub[i] / di;
        } else if ub[i] != 0 {
            return None;
        }
    }
    let particular = s.right.apply(&IntVec::new(y)).expect("square transform");
    let kernel = (rank..a.cols()).map(|j| s.right.column(j)).collect();
    Some((particular, kernel))
}
