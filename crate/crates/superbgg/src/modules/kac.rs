//! Kac modules of type-I superalgebras.

use super::{build_even_irrep, Module, SparseMat};
use crate::algebra::{build_adjoint_operation, weight_add, Kind, LieSuperalgebra, Parity, Weight};
use crate::error::{Error, Result};
use crate::scalar::{one, sign, Q};
use crate::sparse::{Acc, SVec};
use num_traits::Zero;
use std::collections::HashMap;

/// Degree of a basis element in the `g_{-1} + g_0 + g_1` grading.
pub fn type_one_degree(g: &LieSuperalgebra, i: usize) -> i64 {
    let s: Q = g.root(i)[..g.r].iter().fold(Q::zero(), |a, b| a + b);
    crate::scalar::to_i64(&s).unwrap_or(0)
}

pub(crate) fn check_type_one(g: &LieSuperalgebra) -> Result<()> {
    match g.kind {
        Kind::Gl => Ok(()),
        Kind::Osp if g.m == 2 => Ok(()),
        _ => Err(Error::NotTypeI(format!("{}({}|{})", g.kind, g.m, 2 * g.n))),
    }
}

struct Kac<'a> {
    g: &'a LieSuperalgebra,
    v0: Module,
    index: HashMap<(Vec<usize>, usize), usize>,
    basis: Vec<(Vec<usize>, usize)>,
}

impl Kac<'_> {
    /// `Y_{w_1} ⋯ Y_{w_k} v` in the PBW basis.
    fn mono(&self, word: &[usize], v: &[(usize, Q)]) -> SVec {
        let mut w = word.to_vec();
        let mut s = 0usize;
        // Odd generators of g_{-1} anticommute.
        for i in 1..w.len() {
            let mut j = i;
            while j > 0 && w[j - 1] > w[j] {
                w.swap(j - 1, j);
                s += 1;
                j -= 1;
            }
        }
        if w.windows(2).any(|p| p[0] == p[1]) {
            return Vec::new();
        }
        let sg = sign(s);
        let mut acc = Acc::new();
        for (vi, c) in v {
            acc.add(self.index[&(w.clone(), *vi)], &(c * &sg));
        }
        acc.finish()
    }

    fn apply(&self, x: usize, word: &[usize], v: &[(usize, Q)]) -> SVec {
        match type_one_degree(self.g, x) {
            -1 => {
                let mut w = vec![x];
                w.extend_from_slice(word);
                self.mono(&w, v)
            }
            0 => {
                let mut acc = Acc::new();
                for i in 0..word.len() {
                    for (y, c) in self.g.bracket(x, word[i]) {
                        let mut w = word.to_vec();
                        w[i] = *y;
                        acc.add_scaled(&self.mono(&w, v), c);
                    }
                }
                acc.add_scaled(&self.mono(word, &self.v0.act(x, v)), &one());
                acc.finish()
            }
            _ => {
                // X Y w = [X,Y] w − Y (X w); g_1 kills the cyclic space.
                let Some((&y, rest)) = word.split_first() else { return Vec::new() };
                let mut acc = Acc::new();
                for (z, c) in self.g.bracket(x, y) {
                    acc.add_scaled(&self.apply(*z, rest, v), c);
                }
                for (k, c) in self.apply(x, rest, v) {
                    let (t, vi) = &self.basis[k];
                    let mut w = vec![y];
                    w.extend_from_slice(t);
                    acc.add_scaled(&self.mono(&w, &[(*vi, one())]), &-c);
                }
                acc.finish()
            }
        }
    }
}

/// `K_λ = U(g) ⊗_{U(g_0 + g_1)} V⁰_λ` with basis `Λ(g_{-1}) ⊗ V⁰_λ`.
pub fn build_kac_module(g: &LieSuperalgebra, lambda: &[Q], max_depth: usize) -> Result<Module> {
    check_type_one(g)?;
    let op = build_adjoint_operation(g, 1)?;
    let v0 = build_even_irrep(g, lambda, &op, max_depth)?;
    let odd_neg: Vec<usize> = (0..g.dim()).filter(|&i| type_one_degree(g, i) == -1).collect();
    let k = odd_neg.len();
    let mut basis = Vec::new();
    for mask in 0..(1usize << k) {
        let subset: Vec<usize> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| odd_neg[b]).collect();
        for vi in 0..v0.dim() {
            basis.push((subset.clone(), vi));
        }
    }
    let index = basis.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
    let mut weights: Vec<Weight> = Vec::with_capacity(basis.len());
    let mut parities = Vec::with_capacity(basis.len());
    for (s, vi) in &basis {
        let w = s.iter().fold(v0.weights[*vi].clone(), |acc, &y| weight_add(&acc, g.root(y)));
        weights.push(w);
        parities.push(v0.parities[*vi].add(Parity::from_bit(s.len() % 2)));
    }
    let kac = Kac { g, v0, index, basis };
    let action: Vec<Option<SparseMat>> = (0..g.dim())
        .map(|x| Some(kac.basis.iter().map(|(s, vi)| kac.apply(x, s, &[(*vi, one())])).collect()))
        .collect();
    Ok(Module::new(lambda.to_vec(), weights, parities, action, None, vec![None; kac.basis.len()]))
}
