use super::RootDatum;
use crate::lattice::{solve_integer, IntMatrix, IntVec};

/// Search radius for integer combinations of kernel vectors when the simple
/// (co)roots do not pin the lattice map down (non-semisimple data).
pub const ISO_SEARCH_RADIUS: i64 = 4;

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

/// A lattice isomorphism `M: X₂ → X₁` with `M α₂ᵢ = α₁_{π(i)}` and
/// `Mᵀ α̌₁_{π(i)} = α̌₂ᵢ` for a Dynkin-diagram bijection `π`; the transpose
/// condition says the contragredient `M⁻ᵀ` carries coroots to coroots.
///
/// Among all candidates found, prefers determinant `+1`, then the smallest
/// largest entry, then the fewest entries differing from the identity, then
/// lexicographic order, so the answer is deterministic.
pub fn datum_isomorphic(d1: &RootDatum, d2: &RootDatum) -> Option<IntMatrix> {
    datum_isomorphisms(d1, d2).into_iter().next()
}

/// Every isomorphism found by [`datum_isomorphic`]'s search, best first.
pub fn datum_isomorphisms(d1: &RootDatum, d2: &RootDatum) -> Vec<IntMatrix> {
    if !d1.is_valid() || !d2.is_valid() {
        return vec![];
    }
    let n = d1.rank();
    let k = d1.semisimple_rank();
    if d2.rank() != n || d2.semisimple_rank() != k {
        return vec![];
    }
    let c1 = d1.cartan_matrix();
    let c2 = d2.cartan_matrix();

    let mut found: Vec<IntMatrix> = Vec::new();
    for pi in permutations(k) {
        if (0..k).any(|i| (0..k).any(|j| c1[(pi[i], pi[j])] != c2[(i, j)])) {
            continue;
        }
        // unknowns m[r][c] at index r*n + c
        let mut rows: Vec<Vec<i64>> = Vec::new();
        let mut rhs: Vec<i64> = Vec::new();
        for (i, &pi_i) in pi.iter().enumerate() {
            let a2 = &d2.simple_roots()[i];
            let a1 = &d1.simple_roots()[pi_i];
            for r in 0..n {
                let mut row = vec![0; n * n];
                for c in 0..n {
                    row[r * n + c] = a2[c];
                }
                rows.push(row);
                rhs.push(a1[r]);
            }
            let h1 = &d1.simple_coroots()[pi_i];
            let h2 = &d2.simple_coroots()[i];
            for c in 0..n {
                let mut row = vec![0; n * n];
                for r in 0..n {
                    row[r * n + c] = h1[r];
                }
                rows.push(row);
                rhs.push(h2[c]);
            }
        }
        let (particular, kernel) = if rows.is_empty() {
            (IntVec::zeros(n * n), (0..n * n).map(|i| IntVec::unit(n * n, i)).collect())
        } else {
            let a = IntMatrix::from_rows(&rows).expect("rows of equal length");
            match solve_integer(&a, &IntVec::new(rhs)) {
                Some(s) => s,
                None => continue,
            }
        };
        for coeffs in box_points(kernel.len(), ISO_SEARCH_RADIUS) {
            let mut v = particular.clone();
            for (kv, &c) in kernel.iter().zip(&coeffs) {
                v = &v + &kv.scale(c);
            }
            let m = to_matrix(&v, n);
            if m.det().abs() == 1 && !found.contains(&m) {
                found.push(m);
            }
        }
    }
    found.sort_by_key(|m| {
        let det_rank = if m.det() == 1 { 0 } else { 1 };
        let max = m.data().iter().map(|x| x.abs()).max().unwrap_or(0);
        let id = IntMatrix::identity(n);
        let moved = m.data().iter().zip(id.data()).filter(|(a, b)| a != b).count();
        (det_rank, max, moved, m.data().to_vec())
    });
    found
}

fn to_matrix(v: &IntVec, n: usize) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..n).map(|r| v.coords()[r * n..(r + 1) * n].to_vec()).collect();
    if n == 0 {
        return IntMatrix::zeros(0, 0);
    }
    IntMatrix::from_rows(&rows).expect("square")
}

fn box_points(dim: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-radius..=radius).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Transports a vector of `X₁` into `X₂` along `M: X₂ → X₁`.
pub fn transport_x(m: &IntMatrix, x1: &IntVec) -> Option<IntVec> {
    m.inverse()?.apply(x1).ok()
}
