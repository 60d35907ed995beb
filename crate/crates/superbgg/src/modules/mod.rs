//! Finite-dimensional modules with exact action matrices.

mod irrep;
mod kac;

pub use irrep::{build_even_irrep, build_irrep, build_irrep_over, build_levi_irrep, DEFAULT_MAX_DEPTH};
pub use kac::{build_kac_module, type_one_degree};
pub(crate) use kac::check_type_one;

use crate::algebra::{weight_neg, AdjointOperation, LieSuperalgebra, Parity, Weight};
use crate::linalg::{self, Mat};
use crate::scalar::{one, sign, zero, Q};
use crate::sparse::{get, Acc, SVec};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Column-major sparse matrix: `cols[j]` is the image of basis vector `j`.
pub type SparseMat = Vec<SVec>;

/// A weight module of `g` (or of a subalgebra) in a fixed homogeneous basis.
#[derive(Clone, Debug)]
pub struct Module {
    pub highest_weight: Weight,
    pub weights: Vec<Weight>,
    pub parities: Vec<Parity>,
    /// Action of each algebra basis element; `None` where the module only carries
    /// the action of a subalgebra.
    pub action: Vec<Option<SparseMat>>,
    pub blocks: BTreeMap<Weight, Vec<usize>>,
    /// Rows of the block-diagonal contravariant Gram matrix, when known.
    pub gram: Option<Vec<SVec>>,
    /// `(lowering element, parent)` for every vector but the highest one.
    pub(crate) provenance: Vec<Option<(usize, usize)>>,
}

fn blocks_of(weights: &[Weight]) -> BTreeMap<Weight, Vec<usize>> {
    let mut b: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (i, w) in weights.iter().enumerate() {
        b.entry(w.clone()).or_default().push(i);
    }
    b
}

/// Product `a · b` of column-sparse matrices.
pub fn compose(a: &SparseMat, b: &SparseMat) -> SparseMat {
    b.iter().map(|col| apply_mat(a, col)).collect()
}

pub fn apply_mat(a: &SparseMat, v: &[(usize, Q)]) -> SVec {
    let mut acc = Acc::new();
    for (j, c) in v {
        acc.add_scaled(&a[*j], c);
    }
    acc.finish()
}

impl Module {
    pub(crate) fn new(
        highest_weight: Weight,
        weights: Vec<Weight>,
        parities: Vec<Parity>,
        action: Vec<Option<SparseMat>>,
        gram: Option<Vec<SVec>>,
        provenance: Vec<Option<(usize, usize)>>,
    ) -> Self {
        let blocks = blocks_of(&weights);
        Module { highest_weight, weights, parities, action, blocks, gram, provenance }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// `(even, odd)` dimensions.
    pub fn sdim(&self) -> (usize, usize) {
        let odd = self.parities.iter().filter(|p| p.is_odd()).count();
        (self.dim() - odd, odd)
    }

    pub fn is_defined(&self, i: usize) -> bool {
        self.action[i].is_some()
    }

    /// Matrix of algebra basis element `i`.
    pub fn matrix(&self, i: usize) -> &SparseMat {
        self.action[i].as_ref().expect("action of this element is not part of the module")
    }

    /// Image of basis vector `j` under algebra basis element `i`.
    pub fn act_basis(&self, i: usize, j: usize) -> &SVec {
        &self.matrix(i)[j]
    }

    pub fn act(&self, i: usize, v: &[(usize, Q)]) -> SVec {
        apply_mat(self.matrix(i), v)
    }

    /// Action of a sparse algebra element.
    pub fn act_element(&self, x: &[(usize, Q)], v: &[(usize, Q)]) -> SVec {
        let mut acc = Acc::new();
        for (i, c) in x {
            acc.add_scaled(&self.act(*i, v), c);
        }
        acc.finish()
    }

    /// Representation axiom on all pairs of defined elements whose bracket is defined.
    pub fn check_bracket(&self, g: &LieSuperalgebra) -> bool {
        let d = g.dim();
        for a in (0..d).filter(|&a| self.is_defined(a)) {
            for b in (0..d).filter(|&b| self.is_defined(b)) {
                let br = g.bracket(a, b);
                if br.iter().any(|(i, _)| !self.is_defined(*i)) {
                    continue;
                }
                let s = sign(g.parity(a).bit() * g.parity(b).bit());
                for j in 0..self.dim() {
                    let mut acc = Acc::new();
                    acc.add_scaled(&self.act(a, self.act_basis(b, j)), &one());
                    acc.add_scaled(&self.act(b, self.act_basis(a, j)), &-s.clone());
                    acc.add_scaled(&self.act_element(br, &[(j, one())]), &-one());
                    if !acc.0.is_empty() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Cartan elements act diagonally by the stored weights, and every defined root
    /// vector shifts weights by its root.
    pub fn check_weights(&self, g: &LieSuperalgebra) -> bool {
        for i in (0..g.dim()).filter(|&i| self.is_defined(i)) {
            for j in 0..self.dim() {
                let img = self.act_basis(i, j);
                if g.is_cartan(i) {
                    let ev = g.eval_weight(&self.weights[j], &[(i, one())]);
                    let ok = if ev.is_zero() { img.is_empty() } else { img.len() == 1 && img[0] == (j, ev) };
                    if !ok {
                        return false;
                    }
                } else {
                    let w = crate::algebra::weight_add(&self.weights[j], g.root(i));
                    let p = self.parities[j].add(g.parity(i));
                    if img.iter().any(|(k, _)| self.weights[*k] != w || self.parities[*k] != p) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `⟨u, v⟩` for the stored Gram matrix.
    pub fn pair(&self, u: &[(usize, Q)], v: &[(usize, Q)]) -> Q {
        let gram = self.gram.as_ref().expect("module has no contravariant form");
        let mut s = zero();
        for (i, a) in u {
            for (j, b) in v {
                let x = get(&gram[*i], *j);
                if !x.is_zero() {
                    s += a * b * x;
                }
            }
        }
        s
    }

    /// `⟨A v, w⟩ = ⟨v, A† w⟩` for all defined `A` with defined `A†`, all basis pairs.
    pub fn check_contravariance(&self, g: &LieSuperalgebra, op: &AdjointOperation) -> bool {
        if self.gram.is_none() {
            return false;
        }
        for a in (0..g.dim()).filter(|&a| self.is_defined(a)) {
            let adj = &op.images[a];
            if adj.iter().any(|(i, _)| !self.is_defined(*i)) {
                continue;
            }
            for v in 0..self.dim() {
                let Some(targets) = self.blocks.get(&crate::algebra::weight_add(&self.weights[v], g.root(a))) else {
                    continue;
                };
                for w in targets {
                    let l = self.pair(self.act_basis(a, v), &[(*w, one())]);
                    let r = self.pair(&[(v, one())], &self.act_element(adj, &[(*w, one())]));
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Contravariant Gram matrix for another adjoint operation, rebuilt from the
    /// lowering provenance of the basis.
    pub fn contravariant_gram(&self, op: &AdjointOperation) -> Option<Vec<SVec>> {
        let mut rows: Vec<SVec> = Vec::with_capacity(self.dim());
        for s in 0..self.dim() {
            let row = match self.provenance[s] {
                None => vec![(s, one())],
                Some((f, b)) => {
                    let adj = &op.images[f];
                    if adj.iter().any(|(i, _)| !self.is_defined(*i)) {
                        return None;
                    }
                    let mut acc = Acc::new();
                    for &t in &self.blocks[&self.weights[s]] {
                        let x = self.act_element(adj, &[(t, one())]);
                        let mut val = zero();
                        for (u, c) in &x {
                            let gb = get(&rows[b], *u);
                            if !gb.is_zero() {
                                val += c * gb;
                            }
                        }
                        acc.add(t, &val);
                    }
                    acc.finish()
                }
            };
            rows.push(row);
        }
        Some(rows)
    }

    /// Dense Gram blocks, one per weight, for the given rows.
    pub fn gram_blocks(&self, rows: &[SVec]) -> Vec<(Weight, Mat)> {
        self.blocks
            .iter()
            .map(|(w, idx)| {
                let m: Mat = idx.iter().map(|&i| idx.iter().map(|&j| get(&rows[i], j)).collect()).collect();
                (w.clone(), m)
            })
            .collect()
    }

    /// Positive definiteness of the contravariant form built from `op`.
    pub fn is_star(&self, op: &AdjointOperation) -> bool {
        let Some(rows) = self.contravariant_gram(op) else { return false };
        self.gram_blocks(&rows).iter().all(|(_, m)| {
            let n = m.len();
            (0..n).all(|i| (0..n).all(|j| m[i][j] == m[j][i])) && linalg::is_positive_definite(m)
        })
    }

    /// Dense matrix of `Σ A_i A_i^‡`, the quadratic Casimir.
    pub fn casimir(&self, g: &LieSuperalgebra) -> SparseMat {
        let d = self.dim();
        let mut cols = vec![Acc::new(); d];
        for i in 0..g.dim() {
            for (j, col) in cols.iter_mut().enumerate() {
                let v = self.act_element(g.dual_of(i), &[(j, one())]);
                col.add_scaled(&self.act(i, &v), &one());
            }
        }
        cols.into_iter().map(Acc::finish).collect()
    }
}

/// Dual module with `(Aα)(v) = −(−1)^{|A||α|} α(Av)`; the form is the inverse
/// transpose of the original Gram matrix.
pub fn dual_module(m: &Module) -> Module {
    let d = m.dim();
    let action = m
        .action
        .iter()
        .map(|a| {
            a.as_ref().map(|cols| {
                let pa = element_parity(m, cols);
                let mut out = vec![Acc::new(); d];
                for (j, col) in cols.iter().enumerate() {
                    for (i, x) in col {
                        // M*_{ji} = −(−1)^{|A||v_i|} M_{ij}
                        let s = -sign(pa * m.parities[*i].bit());
                        out[*i].add(j, &(s * x));
                    }
                }
                out.into_iter().map(Acc::finish).collect()
            })
        })
        .collect();
    let weights: Vec<Weight> = m.weights.iter().map(|w| weight_neg(w)).collect();
    let hw = weights.iter().max().cloned().unwrap_or_default();
    let gram = m.gram.as_ref().and_then(|rows| {
        let mut out = vec![Vec::new(); d];
        for (_, idx) in m.blocks.iter() {
            let blk: Mat = idx.iter().map(|&i| idx.iter().map(|&j| get(&rows[i], j)).collect()).collect();
            let inv = linalg::inverse(&blk)?;
            for (a, &i) in idx.iter().enumerate() {
                out[i] = idx.iter().enumerate().filter(|(b, _)| !inv[*b][a].is_zero()).map(|(b, &j)| (j, inv[b][a].clone())).collect();
            }
        }
        Some(out)
    });
    Module::new(hw, weights, m.parities.clone(), action, gram, vec![None; d])
}

/// Parity of the element whose matrix is `cols`, read off from any nonzero entry.
fn element_parity(m: &Module, cols: &SparseMat) -> usize {
    for (j, col) in cols.iter().enumerate() {
        if let Some((i, _)) = col.first() {
            return m.parities[*i].add(m.parities[j]).bit();
        }
    }
    0
}
