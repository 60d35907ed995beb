//! Weyl group of the even part, minimal coset representatives and the Kac-module
//! resolution they predict.

use super::ResolutionShape;
use crate::algebra::{weight_add, weight_sub, LieSuperalgebra, ParabolicDecomposition, Weight};
use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::modules::check_type_one;
use crate::scalar::{q, Q};
use std::collections::{HashMap, VecDeque};

#[derive(Clone, Debug)]
pub struct WeylElement {
    /// Reduced word in the even simple reflections.
    pub word: Vec<usize>,
    /// Action on weight coordinates.
    pub matrix: Mat,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn apply(&self, w: &[Q]) -> Weight {
        linalg::mat_vec(&self.matrix, w)
    }
}

#[derive(Clone, Debug)]
pub struct WeylCoset {
    pub even_simple_roots: Vec<Weight>,
    /// All of `W`, in breadth-first (hence length-nondecreasing) order.
    pub elements: Vec<WeylElement>,
    /// `W^1` graded by length: indices into `elements`.
    pub coset: Vec<Vec<usize>>,
    pub rho: Weight,
}

impl WeylCoset {
    /// `w·λ = w(λ+ρ) − ρ`.
    pub fn dot(&self, w: &WeylElement, lambda: &[Q]) -> Weight {
        weight_sub(&w.apply(&weight_add(lambda, &self.rho)), &self.rho)
    }
}

fn reflection(g: &LieSuperalgebra, alpha: &[Q]) -> Mat {
    let r = g.rank();
    let norm = g.weight_pairing(alpha, alpha);
    let mut m = linalg::zeros(r, r);
    for j in 0..r {
        let mut e = vec![q(0); r];
        e[j] = q(1);
        let c = q(2) * g.weight_pairing(&e, alpha) / &norm;
        for i in 0..r {
            m[i][j] = &e[i] - &c * &alpha[i];
        }
    }
    m
}

fn is_positive_root(g: &LieSuperalgebra, w: &[Q]) -> bool {
    g.root_vector(w).is_some_and(|i| g.positive.contains(&i))
}

/// Weyl group of `g_0` and the minimal-length representatives of `W_l \ W`.
pub fn weyl_coset(g: &LieSuperalgebra, p: &ParabolicDecomposition) -> Result<WeylCoset> {
    if p.levi_roots(g).iter().any(|&i| g.parity(i).is_odd()) {
        return Err(Error::LeviNotInEvenPart);
    }
    let even_pos: Vec<usize> = g.positive.iter().copied().filter(|&i| !g.parity(i).is_odd()).collect();
    let even_simple_roots: Vec<Weight> = even_pos
        .iter()
        .filter(|&&e| !even_pos.iter().any(|&a| even_pos.iter().any(|&b| weight_add(g.root(a), g.root(b)) == *g.root(e))))
        .map(|&e| g.root(e).clone())
        .collect();
    let reflections: Vec<Mat> = even_simple_roots.iter().map(|a| reflection(g, a)).collect();
    let r = g.rank();

    let mut elements = vec![WeylElement { word: Vec::new(), matrix: linalg::identity(r) }];
    let mut seen: HashMap<Mat, usize> = HashMap::from([(linalg::identity(r), 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (s, refl) in reflections.iter().enumerate() {
            let m = linalg::mat_mul(refl, &elements[i].matrix, r, r);
            if seen.contains_key(&m) {
                continue;
            }
            let mut word = vec![s];
            word.extend_from_slice(&elements[i].word);
            seen.insert(m.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(WeylElement { word, matrix: m });
        }
    }

    let levi_pos = p.levi_positive(g);
    let mut coset: Vec<Vec<usize>> = Vec::new();
    for (i, w) in elements.iter().enumerate() {
        let inv = linalg::inverse(&w.matrix).ok_or_else(|| Error::Internal("singular Weyl group element".into()))?;
        let keeps = levi_pos.iter().all(|&a| is_positive_root(g, &linalg::mat_vec(&inv, g.root(a))));
        if keeps {
            let len = w.length();
            if coset.len() <= len {
                coset.resize(len + 1, Vec::new());
            }
            coset[len].push(i);
        }
    }
    Ok(WeylCoset { even_simple_roots, elements, coset, rho: g.rho.clone() })
}

/// Resolution of the Kac module `K_λ` predicted by `W^1`: the weights `w·λ`
/// with `ℓ(w) = j` in degree `j`, for `j ≤ length_max`.
pub fn kac_resolution(g: &LieSuperalgebra, p: &ParabolicDecomposition, lambda: &[Q], length_max: usize) -> Result<ResolutionShape> {
    check_type_one(g)?;
    let wc = weyl_coset(g, p)?;
    let longest = wc.coset.len() - 1;
    let degrees = (0..=length_max)
        .map(|j| {
            let mut entries: Vec<(Weight, usize)> = wc
                .coset
                .get(j)
                .map(|ix| ix.iter().map(|&i| (wc.dot(&wc.elements[i], lambda), 1)).collect())
                .unwrap_or_default();
            entries.sort();
            entries
        })
        .collect();
    Ok(ResolutionShape { degrees, truncated: length_max < longest, terminates_at: Some(longest) })
}
