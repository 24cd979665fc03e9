use std::collections::{HashMap, VecDeque};

use super::{root_system, RootDatum, DEFAULT_ROOT_CAP};
use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, IntVec, Laurent};

pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

/// An element of the Weyl group with a reduced word and its action on both
/// lattices. `mat_x` and `mat_y` are contragredient:
/// `⟨mat_x·x, mat_y·y⟩ = ⟨x, y⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub mat_x: IntMatrix,
    pub mat_y: IntMatrix,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn act_x(&self, x: &IntVec) -> IntVec {
        self.mat_x.apply(x).expect("vector of ambient rank")
    }

    pub fn act_y(&self, y: &IntVec) -> IntVec {
        self.mat_y.apply(y).expect("vector of ambient rank")
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

/// All elements of a finite Weyl group, in breadth-first (length) order.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
}

impl WeylGroup {
    /// Enumerates by breadth-first closure over right multiplication by simple
    /// reflections, so each element is first reached along a reduced word.
    pub fn enumerate(d: &RootDatum, cap: usize) -> Result<WeylGroup> {
        d.ensure_valid()?;
        let n = d.rank();
        let k = d.semisimple_rank();
        let gens: Vec<(IntMatrix, IntMatrix)> = (0..k).map(|i| (d.reflection_x(i), d.reflection_y(i))).collect();

        let id = WeylElement { word: vec![], mat_x: IntMatrix::identity(n), mat_y: IntMatrix::identity(n) };
        let mut index: HashMap<IntMatrix, usize> = HashMap::new();
        index.insert(id.mat_x.clone(), 0);
        let mut elements = vec![id];
        let mut queue = VecDeque::from([0usize]);
        while let Some(at) = queue.pop_front() {
            for (i, (sx, sy)) in gens.iter().enumerate() {
                let mat_x = &elements[at].mat_x * sx;
                if index.contains_key(&mat_x) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::ResourceCap { what: "Weyl group order", limit: cap });
                }
                let mat_y = &elements[at].mat_y * sy;
                let mut word = elements[at].word.clone();
                word.push(i);
                index.insert(mat_x.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(WeylElement { word, mat_x, mat_y });
            }
        }
        Ok(WeylGroup { elements })
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    /// The unique element of maximal length.
    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("group contains the identity")
    }

    /// Element with the given matrix on `X`, if any.
    pub fn find_x(&self, m: &IntMatrix) -> Option<&WeylElement> {
        self.elements.iter().find(|w| &w.mat_x == m)
    }
}

impl RootDatum {
    pub fn weyl_group(&self) -> Result<WeylGroup> {
        WeylGroup::enumerate(self, DEFAULT_WEYL_CAP)
    }

    /// `Σ_{w ∈ W_λ} t^{ℓ(w)}` over the stabilizer of the coweight `λ`, as a
    /// polynomial in the formal variable.
    pub fn stabilizer_poincare(&self, lambda: &IntVec) -> Result<Laurent> {
        let w = self.weyl_group()?;
        Ok(stabilizer_poincare_in(&w, lambda))
    }
}

pub(crate) fn stabilizer_poincare_in(w: &WeylGroup, lambda: &IntVec) -> Laurent {
    let mut out = Laurent::zero();
    for e in w.elements() {
        if &e.act_y(lambda) == lambda {
            out.add_term(e.length() as i32, 1);
        }
    }
    out
}

/// Number of positive roots sent to negative roots by `w`.
pub fn inversion_count(d: &RootDatum, w: &WeylElement) -> Result<usize> {
    let rs = root_system(d, DEFAULT_ROOT_CAP)?;
    let positive = rs.positive_roots();
    Ok(positive.iter().filter(|r| !positive.contains(&w.act_x(r))).count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(name: &str) -> (RootDatum, WeylGroup) {
        let d = RootDatum::builtin(name).unwrap();
        let w = d.weyl_group().unwrap();
        (d, w)
    }

    #[test]
    fn orders() {
        for (name, n) in [("PGL2", 2), ("SL2", 2), ("GL2", 2), ("GL3", 6), ("SL3", 6), ("Sp4", 8), ("SO5", 8)] {
            assert_eq!(group(name).1.order(), n, "{name}");
        }
        assert_eq!(RootDatum::trivial().weyl_group().unwrap().order(), 1);
    }

    #[test]
    fn elements_respect_roots_and_pairing() {
        for d in RootDatum::builtins() {
            let w = d.weyl_group().unwrap();
            let mut roots = d.root_system().unwrap().all_roots();
            roots.sort();
            let n = d.rank();
            for e in w.elements() {
                let mut image: Vec<IntVec> = roots.iter().map(|r| e.act_x(r)).collect();
                image.sort();
                assert_eq!(image, roots);
                assert_eq!(inversion_count(&d, e).unwrap(), e.length());
                assert_eq!(&e.mat_x.transpose() * &e.mat_y, IntMatrix::identity(n));
            }
            let npos = d.root_system().unwrap().len();
            assert_eq!(w.longest().length(), npos);
            assert_eq!(w.elements().iter().filter(|e| e.length() == npos).count(), 1);
        }
    }

    #[test]
    fn poincare_polynomials() {
        let (pgl2, _) = group("PGL2");
        assert_eq!(pgl2.stabilizer_poincare(&IntVec::from([1])).unwrap(), Laurent::one());
        assert_eq!(pgl2.stabilizer_poincare(&IntVec::from([0])).unwrap(), Laurent::from_terms([(0, 1), (1, 1)]));
        let (gl3, _) = group("GL3");
        let expected = &Laurent::from_terms([(0, 1), (1, 1)]) * &Laurent::from_terms([(0, 1), (1, 1), (2, 1)]);
        assert_eq!(gl3.stabilizer_poincare(&IntVec::from([0, 0, 0])).unwrap(), expected);
        assert_eq!(gl3.stabilizer_poincare(&IntVec::from([2, 1, 0])).unwrap(), Laurent::one());
        assert_eq!(gl3.stabilizer_poincare(&IntVec::from([1, 0, 0])).unwrap(), Laurent::from_terms([(0, 1), (1, 1)]));
    }

    #[test]
    fn cap_is_enforced() {
        let d = RootDatum::builtin("GL3").unwrap();
        assert_eq!(WeylGroup::enumerate(&d, 4).unwrap_err(), Error::ResourceCap { what: "Weyl group order", limit: 4 });
    }
}
