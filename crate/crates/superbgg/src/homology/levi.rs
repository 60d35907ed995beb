//! Levi-module structure of block-aligned subquotients of a chain space.

use super::{to_global, to_local, SubspaceBasis};
use crate::algebra::{weight_add, AdjointOperation, LieSuperalgebra, ParabolicDecomposition, Weight};
use crate::chains::Complex;
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, Vector};
use crate::modules::build_levi_irrep;
use crate::scalar::{one, zero, Q};
use std::collections::{BTreeMap, HashMap, VecDeque};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LEntry {
    pub highest_weight: Weight,
    pub hw_vector_count: usize,
    pub irrep_dimension: Option<usize>,
    pub generated_dimension: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LDecomposition {
    pub entries: Vec<LEntry>,
    pub completely_reducible: bool,
    pub total_dimension: usize,
}

impl LDecomposition {
    pub fn multiplicity(&self, w: &[Q]) -> usize {
        self.entries.iter().filter(|e| e.highest_weight == w).map(|e| e.hw_vector_count).sum()
    }

    pub fn weights(&self) -> Vec<Weight> {
        self.entries.iter().map(|e| e.highest_weight.clone()).collect()
    }
}

/// Dimensions of Levi irreducibles by highest weight, built on demand and cached.
pub struct LeviIrreps<'a> {
    g: &'a LieSuperalgebra,
    p: &'a ParabolicDecomposition,
    op: &'a AdjointOperation,
    max_depth: usize,
    cache: HashMap<Weight, Option<usize>>,
}

impl<'a> LeviIrreps<'a> {
    pub fn new(g: &'a LieSuperalgebra, p: &'a ParabolicDecomposition, op: &'a AdjointOperation, max_depth: usize) -> Self {
        LeviIrreps { g, p, op, max_depth, cache: HashMap::new() }
    }

    /// `None` when the builder gives up within its depth guard.
    pub fn dim(&mut self, w: &[Q]) -> Option<usize> {
        if let Some(d) = self.cache.get(w) {
            return *d;
        }
        let d = build_levi_irrep(self.g, self.p, w, self.op, self.max_depth).ok().map(|m| m.dim());
        self.cache.insert(w.to_vec(), d);
        d
    }
}

/// `U/W` inside `C_k`, with `W ⊆ U` both Levi-stable.
struct Quotient<'a, 'c> {
    cx: &'a Complex<'c>,
    k: usize,
    u: &'a SubspaceBasis,
    w: Option<&'a SubspaceBasis>,
}

impl Quotient<'_, '_> {
    fn sub(&self, wt: &[Q]) -> &[Vector] {
        self.w.map(|w| w.block(wt)).unwrap_or(&[])
    }

    fn block_dim(&self, wt: &[Q]) -> usize {
        self.cx.spaces[self.k].block(wt).len()
    }

    /// Image of a block-local vector of weight `wt` under the basis element `z`.
    fn act(&self, z: usize, wt: &[Q], x: &[Q]) -> (Weight, Vector) {
        let space = &self.cx.spaces[self.k];
        let y = self.cx.act(&[(z, one())], self.k, &to_global(space.block(wt), x));
        let target = weight_add(wt, self.cx.g.root(z));
        let local = to_local(space.block(&target), &y).unwrap_or_else(|| vec![zero(); space.block(&target).len()]);
        (target, local)
    }

    fn check_closed(&self) -> Result<()> {
        let levi = self.cx.p.levi_roots(self.cx.g);
        let spans: HashMap<&Weight, Echelon> = self.u.blocks.iter().map(|(w, v)| (w, Echelon::new(v))).collect();
        let empty = Echelon::default();
        for (wt, vecs) in &self.u.blocks {
            for &z in &levi {
                let target = weight_add(wt, self.cx.g.root(z));
                let dest = spans.get(&target).unwrap_or(&empty);
                for x in vecs {
                    let (_, y) = self.act(z, wt, x);
                    if !dest.contains(&y) {
                        return Err(Error::LeviNotClosed(format!("degree {} weight {}", self.k, self.cx.g.fmt_weight(wt))));
                    }
                }
            }
        }
        Ok(())
    }

    /// Representatives, independent modulo `W`, of the highest-weight vectors at `wt`.
    fn highest_weight_vectors(&self, wt: &[Q]) -> Vec<Vector> {
        let basis = self.u.block(wt);
        let t = basis.len();
        let n = self.block_dim(wt);
        // Unknowns: coefficients on U_wt, then for each raising operator the
        // coefficients on W at its target block.
        let raising = self.cx.p.levi_raising(self.cx.g);
        let mut targets = Vec::new();
        let mut total = t;
        for &e in &raising {
            let target = weight_add(wt, self.cx.g.root(e));
            let dim = self.block_dim(&target);
            if dim == 0 {
                continue;
            }
            let images: Vec<Vector> = basis.iter().map(|x| self.act(e, wt, x).1).collect();
            let sub = self.sub(&target).to_vec();
            let offset = total;
            total += sub.len();
            targets.push((dim, images, sub, offset));
        }
        let mut rows: Vec<Vector> = Vec::new();
        for (dim, images, sub, offset) in &targets {
            for r in 0..*dim {
                let mut row = vec![zero(); total];
                for (c, img) in images.iter().enumerate() {
                    row[c] = img[r].clone();
                }
                for (s, v) in sub.iter().enumerate() {
                    row[offset + s] = -v[r].clone();
                }
                rows.push(row);
            }
        }
        let sols: Vec<Vector> = if rows.is_empty() {
            linalg::identity(t)
        } else {
            linalg::kernel(&rows, total).into_iter().map(|v| v[..t].to_vec()).collect()
        };
        let vecs: Vec<Vector> = sols
            .iter()
            .map(|c| {
                let mut x = vec![zero(); n];
                for (coef, b) in c.iter().zip(basis) {
                    for (xi, bi) in x.iter_mut().zip(b) {
                        *xi += coef * bi;
                    }
                }
                x
            })
            .collect();
        independent_mod(&vecs, self.sub(wt))
    }

    /// Dimension modulo `W` of the Levi submodule generated by `seeds`.
    fn generated_dimension(&self, seeds: &[(Weight, Vector)]) -> usize {
        let lowering = self.cx.p.levi_negative(self.cx.g);
        let mut spans: HashMap<Weight, Echelon> = HashMap::new();
        let mut queue: VecDeque<(Weight, Vector)> = VecDeque::new();
        let mut gained = 0;
        let mut grow = |wt: &Weight, x: &Vector| spans.entry(wt.clone()).or_insert_with(|| Echelon::new(self.sub(wt))).insert(x.clone());
        for (wt, x) in seeds {
            if grow(wt, x) {
                gained += 1;
                queue.push_back((wt.clone(), x.clone()));
            }
        }
        while let Some((wt, x)) = queue.pop_front() {
            for &f in &lowering {
                let (target, y) = self.act(f, &wt, &x);
                if !y.is_empty() && grow(&target, &y) {
                    gained += 1;
                    queue.push_back((target, y));
                }
            }
        }
        gained
    }
}

/// Vectors among `vecs` that stay independent modulo `sub`, first-come.
fn independent_mod(vecs: &[Vector], sub: &[Vector]) -> Vec<Vector> {
    let mut span = Echelon::new(sub);
    vecs.iter().filter(|v| span.insert((*v).clone())).cloned().collect()
}

/// Highest weights (with multiplicity) of the Levi module `U/W`, without
/// building any irreducible modules.
pub fn hw_weights_of(cx: &Complex, k: usize, u: &SubspaceBasis, w: Option<&SubspaceBasis>) -> Result<BTreeMap<Weight, Vec<Vector>>> {
    let qt = Quotient { cx, k, u, w };
    qt.check_closed()?;
    let mut out = BTreeMap::new();
    for (wt, vecs) in &u.blocks {
        if vecs.len() == qt.sub(wt).len() {
            continue;
        }
        let hw = qt.highest_weight_vectors(wt);
        if !hw.is_empty() {
            out.insert(wt.clone(), hw);
        }
    }
    Ok(out)
}

/// Decomposes the Levi module `U/W` (`W = None` for `U` itself) into
/// highest-weight constituents, certifying irreducibility by comparison with the
/// abstract Levi irreps.
pub fn decompose_levi(
    cx: &Complex,
    k: usize,
    u: &SubspaceBasis,
    w: Option<&SubspaceBasis>,
    irreps: &mut LeviIrreps,
) -> Result<LDecomposition> {
    let qt = Quotient { cx, k, u, w };
    let total_dimension = u.dim() - w.map(SubspaceBasis::dim).unwrap_or(0);
    let hws = hw_weights_of(cx, k, u, w)?;
    let mut entries = Vec::new();
    let mut all_seeds = Vec::new();
    for (wt, vecs) in &hws {
        let seeds: Vec<(Weight, Vector)> = vecs.iter().map(|v| (wt.clone(), v.clone())).collect();
        let generated_dimension = qt.generated_dimension(&seeds);
        let irrep_dimension = irreps.dim(wt);
        entries.push(LEntry { highest_weight: wt.clone(), hw_vector_count: vecs.len(), irrep_dimension, generated_dimension });
        all_seeds.extend(seeds);
    }
    let spans = qt.generated_dimension(&all_seeds) == total_dimension;
    let abstract_total: Option<usize> =
        entries.iter().map(|e| e.irrep_dimension.map(|d| d * e.hw_vector_count)).sum();
    let completely_reducible = spans && abstract_total == Some(total_dimension);
    Ok(LDecomposition { entries, completely_reducible, total_dimension })
}

/// The multiplicity criterion over consecutive `ker □` decompositions.
/// Returns `None` when it holds and the offending `(k, weight)` otherwise.
pub fn multiplicity_criterion(decompositions: &[LDecomposition]) -> Result<Option<(usize, Weight)>> {
    if let Some(k) = decompositions.iter().position(|d| !d.completely_reducible) {
        return Err(Error::NotCompletelyReducible(k));
    }
    for k in 1..decompositions.len() {
        for e in &decompositions[k].entries {
            let before = decompositions[k - 1].multiplicity(&e.highest_weight);
            if before * e.hw_vector_count > 1 {
                return Ok(Some((k, e.highest_weight.clone())));
            }
        }
    }
    Ok(None)
}

/// Levi highest weights of `C_k` whose Casimir eigenvalue equals that of `lambda`.
pub fn casimir_match(cx: &Complex, k: usize, lambda: &[Q]) -> Result<Vec<Weight>> {
    let space = &cx.spaces[k];
    let full = SubspaceBasis {
        degree: k,
        blocks: space.blocks.iter().map(|(w, idx)| (w.clone(), linalg::identity(idx.len()))).collect(),
    };
    let target = cx.g.casimir_eigenvalue(lambda);
    let hws = hw_weights_of(cx, k, &full, None)?;
    let mut out = Vec::new();
    for (w, vecs) in hws {
        if cx.g.casimir_eigenvalue(&w) == target {
            out.extend(std::iter::repeat_n(w, vecs.len()));
        }
    }
    Ok(out)
}
