//! Chain spaces `Λ^k n ⊗ V` and `Λ^k n̄ ⊗ V` with their boundary, coboundary
//! and Laplace-type operators.
//!
//! One engine serves both sides: it takes an ordered basis of the wedge factor
//! (`n` or `n̄`) and the dual basis of it inside the opposite nilradical.

mod forms;

pub use forms::{chain_form_matrix, pairing_matrix, wedge_pairing};

use crate::algebra::{dual_basis, weight_add, LieSuperalgebra, ParabolicDecomposition, Parity, Weight};
use crate::error::Result;
use crate::linalg::{self, Mat};
use crate::modules::{compose, Module, SparseMat};
use crate::scalar::{one, qf, sign, Q};
use crate::sparse::{get, Acc, SVec};
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};

/// Which nilradical forms the wedge factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `Λ n ⊗ V` with `∂*` (boundary) and `∂` (coboundary).
    Nilradical,
    /// `Λ n̄ ⊗ V` with `δ*` (boundary) and `δ` (coboundary); homology lives here.
    Opposite,
}

/// Super exterior monomial: wedge positions (non-decreasing, repeats only for odd
/// elements) and a module basis index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub word: Vec<usize>,
    pub v: usize,
}

#[derive(Clone, Debug)]
pub struct ChainSpace {
    pub degree: usize,
    pub basis: Vec<Mono>,
    pub weights: Vec<Weight>,
    pub parities: Vec<Parity>,
    pub blocks: BTreeMap<Weight, Vec<usize>>,
    index: HashMap<Mono, usize>,
}

impl ChainSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, m: &Mono) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn block(&self, w: &[Q]) -> &[usize] {
        self.blocks.get(w).map(|v| v.as_slice()).unwrap_or(&[])
    }
}

/// Words of length `k` over `parities.len()` letters in normal form.
fn words(parities: &[Parity], k: usize) -> Vec<Vec<usize>> {
    fn rec(p: &[Parity], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for a in start..p.len() {
            cur.push(a);
            let next = if p[a].is_odd() { a } else { a + 1 };
            rec(p, k, next, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(parities, k, 0, &mut Vec::new(), &mut out);
    out
}

/// `Σ_j binom(e, j) · multichoose(o, k − j)`.
pub fn super_binomial(even: usize, odd: usize, k: usize) -> u128 {
    let binom = |n: u128, r: u128| -> u128 {
        if r > n {
            return 0;
        }
        let mut x = 1u128;
        for i in 0..r {
            x = x * (n - i) / (i + 1);
        }
        x
    };
    (0..=k.min(even))
        .map(|j| {
            let rest = (k - j) as u128;
            let mc = if odd == 0 { u128::from(rest == 0) } else { binom(odd as u128 + rest - 1, rest) };
            binom(even as u128, j as u128) * mc
        })
        .sum()
}

pub struct Complex<'a> {
    pub g: &'a LieSuperalgebra,
    pub p: &'a ParabolicDecomposition,
    pub module: &'a Module,
    pub side: Side,
    /// Basis of the wedge factor, as algebra indices.
    pub nil: Vec<usize>,
    /// `dual[a]` lies in the opposite nilradical with `(dual[a], nil[b]) = δ_ab`.
    pub dual: Vec<SVec>,
    pub spaces: Vec<ChainSpace>,
    /// `boundary[k] : C_k → C_{k−1}` (`boundary[0] = 0`).
    pub boundary: Vec<SparseMat>,
    /// `coboundary[k] : C_k → C_{k+1}` for `k < top`.
    pub coboundary: Vec<SparseMat>,
    nil_pos: HashMap<usize, usize>,
    nil_parity: Vec<Parity>,
    /// `½ Σ_a ξ_a ∧ [ξ_a^‡, x]_nil` per wedge letter `x`, as `(a, y, coeff)`.
    cob_terms: Vec<Vec<(usize, usize, Q)>>,
}

impl<'a> Complex<'a> {
    /// Builds `C_0 … C_top` with all operators between them.
    pub fn build(g: &'a LieSuperalgebra, p: &'a ParabolicDecomposition, module: &'a Module, side: Side, top: usize) -> Result<Self> {
        let (nil, dual) = match side {
            Side::Nilradical => (p.n.clone(), p.dual_pairing.clone()),
            Side::Opposite => (p.nbar.clone(), dual_basis(g, &p.nbar, &p.n)?),
        };
        let nil_pos: HashMap<usize, usize> = nil.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let nil_parity: Vec<Parity> = nil.iter().map(|&i| g.parity(i)).collect();
        let half = qf(1, 2);
        let cob_terms = nil
            .iter()
            .map(|&x| {
                let mut t = Vec::new();
                for (a, d) in dual.iter().enumerate() {
                    let br = g.bracket_vec(d, &[(x, one())]);
                    for (y, c) in br {
                        if let Some(&yp) = nil_pos.get(&y) {
                            t.push((a, yp, &c * &half));
                        }
                    }
                }
                t
            })
            .collect();
        let mut cx = Complex {
            g,
            p,
            module,
            side,
            nil,
            dual,
            spaces: Vec::new(),
            boundary: Vec::new(),
            coboundary: Vec::new(),
            nil_pos,
            nil_parity,
            cob_terms,
        };
        for k in 0..=top {
            let s = cx.make_space(k);
            cx.spaces.push(s);
        }
        cx.boundary.push(vec![Vec::new(); cx.spaces[0].dim()]);
        for k in 1..=top {
            let cols: SparseMat = (0..cx.spaces[k].dim()).into_par_iter().map(|j| cx.boundary_column(k, j)).collect();
            cx.boundary.push(cols);
        }
        let c0: SparseMat = (0..cx.spaces[0].dim()).into_par_iter().map(|v| cx.coboundary_on_module(v)).collect();
        if top > 0 {
            cx.coboundary.push(c0);
        }
        for k in 1..top {
            let cols: SparseMat = (0..cx.spaces[k].dim()).into_par_iter().map(|j| cx.coboundary_column(k, j)).collect();
            cx.coboundary.push(cols);
        }
        Ok(cx)
    }

    pub fn top(&self) -> usize {
        self.spaces.len() - 1
    }

    /// `(even, odd)` dimensions of the wedge factor.
    pub fn nil_sdim(&self) -> (usize, usize) {
        let odd = self.nil_parity.iter().filter(|p| p.is_odd()).count();
        (self.nil.len() - odd, odd)
    }

    fn make_space(&self, k: usize) -> ChainSpace {
        let mut basis = Vec::new();
        for w in words(&self.nil_parity, k) {
            for v in 0..self.module.dim() {
                basis.push(Mono { word: w.clone(), v });
            }
        }
        let mut weights = Vec::with_capacity(basis.len());
        let mut parities = Vec::with_capacity(basis.len());
        let mut blocks: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
        for (j, m) in basis.iter().enumerate() {
            let mut wt = self.module.weights[m.v].clone();
            let mut par = self.module.parities[m.v];
            for &a in &m.word {
                wt = weight_add(&wt, self.g.root(self.nil[a]));
                par = par.add(self.nil_parity[a]);
            }
            blocks.entry(wt.clone()).or_default().push(j);
            weights.push(wt);
            parities.push(par);
        }
        let index = basis.iter().enumerate().map(|(j, m)| (m.clone(), j)).collect();
        ChainSpace { degree: k, basis, weights, parities, blocks, index }
    }

    /// Brings a wedge word into normal form; `None` when it vanishes.
    pub fn normalize(&self, word: &[usize]) -> Option<(Vec<usize>, Q)> {
        let mut w = word.to_vec();
        let mut neg = 0usize;
        for i in 1..w.len() {
            let mut j = i;
            while j > 0 && w[j - 1] > w[j] {
                // X ∧ Y = −(−1)^{|X||Y|} Y ∧ X
                let pa = self.nil_parity[w[j - 1]].bit();
                let pb = self.nil_parity[w[j]].bit();
                neg += 1 + pa * pb;
                w.swap(j - 1, j);
                j -= 1;
            }
        }
        if w.windows(2).any(|p| p[0] == p[1] && !self.nil_parity[p[0]].is_odd()) {
            return None;
        }
        Some((w, sign(neg)))
    }

    /// Adds `c · (word ∧ v)` in degree `word.len()`.
    fn add_mono(&self, acc: &mut Acc, word: &[usize], v: usize, c: &Q) {
        if let Some((w, s)) = self.normalize(word) {
            let j = self.spaces[w.len()].index[&Mono { word: w, v }];
            acc.add(j, &(c * s));
        }
    }

    /// `x ∧ f` for a chain `f` of degree `k`.
    fn wedge_left(&self, acc: &mut Acc, x: usize, k: usize, f: &[(usize, Q)], c: &Q) {
        for (j, a) in f {
            let m = &self.spaces[k].basis[*j];
            let mut w = Vec::with_capacity(m.word.len() + 1);
            w.push(x);
            w.extend_from_slice(&m.word);
            self.add_mono(acc, &w, m.v, &(a * c));
        }
    }

    /// Action of an algebra basis element on a chain basis vector, with brackets
    /// projected onto the wedge factor.
    pub fn act_basis(&self, z: usize, k: usize, j: usize) -> SVec {
        let mut acc = Acc::new();
        self.act_into(&mut acc, z, k, j, &one());
        acc.finish()
    }

    fn act_into(&self, acc: &mut Acc, z: usize, k: usize, j: usize, c: &Q) {
        let m = &self.spaces[k].basis[j];
        let pz = self.g.parity(z).bit();
        let mut before = 0usize;
        for i in 0..m.word.len() {
            let x = self.nil[m.word[i]];
            let s = sign(pz * before);
            for (y, b) in self.g.bracket(z, x) {
                if let Some(&yp) = self.nil_pos.get(y) {
                    let mut w = m.word.clone();
                    w[i] = yp;
                    self.add_mono(acc, &w, m.v, &(c * b * &s));
                }
            }
            before += self.nil_parity[m.word[i]].bit();
        }
        let s = sign(pz * before);
        for (u, b) in self.module.act_basis(z, m.v) {
            self.add_mono(acc, &m.word, *u, &(c * b * &s));
        }
    }

    /// Action of a sparse algebra element on a chain.
    pub fn act(&self, x: &[(usize, Q)], k: usize, f: &[(usize, Q)]) -> SVec {
        let mut acc = Acc::new();
        for (z, a) in x {
            for (j, b) in f {
                self.act_into(&mut acc, *z, k, *j, &(a * b));
            }
        }
        acc.finish()
    }

    /// Matrix of an algebra element on `C_k`.
    pub fn action_matrix(&self, x: &[(usize, Q)], k: usize) -> SparseMat {
        (0..self.spaces[k].dim()).map(|j| self.act(x, k, &[(j, one())])).collect()
    }

    /// `B(X ∧ f) = −X·f − X ∧ B(f)`.
    fn boundary_column(&self, k: usize, j: usize) -> SVec {
        let m = &self.spaces[k].basis[j];
        let x = m.word[0];
        let rest = Mono { word: m.word[1..].to_vec(), v: m.v };
        let r = self.spaces[k - 1].index[&rest];
        let mut acc = Acc::new();
        self.act_into(&mut acc, self.nil[x], k - 1, r, &-one());
        if k >= 2 {
            self.wedge_left(&mut acc, x, k - 2, &self.boundary[k - 1][r], &-one());
        }
        acc.finish()
    }

    /// `D v = Σ_a ξ_a ∧ ξ_a^‡ v`.
    fn coboundary_on_module(&self, v: usize) -> SVec {
        let mut acc = Acc::new();
        for (a, d) in self.dual.iter().enumerate() {
            for (u, c) in self.module.act_element(d, &[(v, one())]) {
                self.add_mono(&mut acc, &[a], u, &c);
            }
        }
        acc.finish()
    }

    /// `D(X ∧ f) = ½ Σ_a ξ_a ∧ [ξ_a^‡, X] ∧ f − X ∧ D f`.
    fn coboundary_column(&self, k: usize, j: usize) -> SVec {
        let m = &self.spaces[k].basis[j];
        let x = m.word[0];
        let rest = &m.word[1..];
        let r = self.spaces[k - 1].index[&Mono { word: rest.to_vec(), v: m.v }];
        let mut acc = Acc::new();
        for (a, y, c) in &self.cob_terms[x] {
            let mut w = Vec::with_capacity(k + 1);
            w.push(*a);
            w.push(*y);
            w.extend_from_slice(rest);
            self.add_mono(&mut acc, &w, m.v, c);
        }
        self.wedge_left(&mut acc, x, k, &self.coboundary[k - 1][r], &-one());
        acc.finish()
    }

    /// Closed form `½ Σ ξ_a ∧ [ξ_a^‡, X_1 ∧ ⋯ ∧ X_k] ⊗ v + (−1)^k Σ X_1 ∧ ⋯ ∧ X_k ∧ ξ_a ⊗ ξ_a^‡ v`
    /// of the coboundary, used as an independent check of the recursion.
    pub fn coboundary_closed_form(&self, k: usize, j: usize) -> SVec {
        let m = &self.spaces[k].basis[j];
        let half = qf(1, 2);
        let mut acc = Acc::new();
        for (a, d) in self.dual.iter().enumerate() {
            // ξ_a^‡ acting on the wedge part only.
            let mut before = 0usize;
            for i in 0..m.word.len() {
                let x = self.nil[m.word[i]];
                let s = sign(self.nil_parity[a].bit() * before);
                for (y, b) in self.g.bracket_vec(d, &[(x, one())]) {
                    if let Some(&yp) = self.nil_pos.get(&y) {
                        let mut w = vec![a];
                        w.extend_from_slice(&m.word);
                        w[i + 1] = yp;
                        self.add_mono(&mut acc, &w, m.v, &(&b * &s * &half));
                    }
                }
                before += self.nil_parity[m.word[i]].bit();
            }
            let s = sign(k);
            for (u, c) in self.module.act_element(d, &[(m.v, one())]) {
                let mut w = m.word.clone();
                w.push(a);
                self.add_mono(&mut acc, &w, u, &(&c * &s));
            }
        }
        acc.finish()
    }

    /// `□_k = D_{k−1} B_k + B_{k+1} D_k`, for `k < top`.
    pub fn quabla_direct(&self, k: usize) -> SparseMat {
        let mut out = compose(&self.boundary[k + 1], &self.coboundary[k]);
        if k > 0 {
            let a = compose(&self.coboundary[k - 1], &self.boundary[k]);
            for (col, extra) in out.iter_mut().zip(a) {
                let mut acc = Acc::new();
                acc.add_scaled(col, &one());
                acc.add_scaled(&extra, &one());
                *col = acc.finish();
            }
        }
        out
    }

    /// `□_k = −½ (C_2(V) ⊗ 1 + Σ_a [ξ_a, ξ_a^‡] − Σ_b B_b B_b^‡)` with `B_b` running
    /// over the Levi factor.
    pub fn quabla_casimir(&self, k: usize) -> SparseMat {
        let cas = self.module.casimir(self.g);
        let mut shift = Acc::new();
        for (a, d) in self.dual.iter().enumerate() {
            shift.add_scaled(&self.g.bracket_vec(&[(self.nil[a], one())], d), &one());
        }
        let shift = shift.finish();
        let half = qf(1, 2);
        let space = &self.spaces[k];
        (0..space.dim())
            .into_par_iter()
            .map(|j| {
                let mut acc = Acc::new();
                let m = &space.basis[j];
                for (u, c) in &cas[m.v] {
                    acc.add(space.index[&Mono { word: m.word.clone(), v: *u }], c);
                }
                acc.add_scaled(&self.act(&shift, k, &[(j, one())]), &one());
                for (b, &bb) in self.p.levi.iter().enumerate() {
                    let inner = self.act(&self.p.levi_dual[b], k, &[(j, one())]);
                    acc.add_scaled(&self.act(&[(bb, one())], k, &inner), &-one());
                }
                let col = acc.finish();
                col.into_iter().map(|(i, c)| (i, c * -&half)).collect()
            })
            .collect()
    }

    /// Dense sub-block of an operator between weight blocks.
    pub fn dense_block(op: &SparseMat, rows: &[usize], cols: &[usize]) -> Mat {
        let pos: HashMap<usize, usize> = rows.iter().enumerate().map(|(r, &i)| (i, r)).collect();
        let mut m = linalg::zeros(rows.len(), cols.len());
        for (c, &j) in cols.iter().enumerate() {
            for (i, x) in &op[j] {
                if let Some(&r) = pos.get(i) {
                    m[r][c] = x.clone();
                }
            }
        }
        m
    }

    /// True when `op` maps every weight block of `C_from` into the same weight of `C_to`.
    pub fn is_weight_preserving(&self, op: &SparseMat, from: usize, to: usize) -> bool {
        op.iter().enumerate().all(|(j, col)| col.iter().all(|(i, _)| self.spaces[to].weights[*i] == self.spaces[from].weights[j]))
    }

    pub fn entry(op: &SparseMat, i: usize, j: usize) -> Q {
        get(&op[j], i)
    }
}

/// Whether a column-sparse matrix is zero.
pub fn is_zero(op: &SparseMat) -> bool {
    op.iter().all(|c| c.is_empty())
}

/// `a − b` for equally-shaped column-sparse matrices.
pub fn difference(a: &SparseMat, b: &SparseMat) -> SparseMat {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let mut acc = Acc::new();
            acc.add_scaled(x, &one());
            acc.add_scaled(y, &-one());
            acc.finish()
        })
        .collect()
}
