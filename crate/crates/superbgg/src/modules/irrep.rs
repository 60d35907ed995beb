//! Irreducible highest-weight modules as quotients by the radical of the
//! contravariant form, built one height level at a time.

use super::{Module, SparseMat};
use crate::algebra::{weight_add, AdjointOperation, LieSuperalgebra, ParabolicDecomposition, Parity, Weight};
use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::scalar::{one, sign, to_i64, zero, Q};
use crate::sparse::{get, Acc, SVec};
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};

pub const DEFAULT_MAX_DEPTH: usize = 64;

/// Irreducible `g`-module of highest weight `lambda`.
pub fn build_irrep(g: &LieSuperalgebra, lambda: &[Q], op: &AdjointOperation, max_depth: usize) -> Result<Module> {
    build_irrep_over(g, lambda, op, &g.positive, max_depth)
}

/// Irreducible module of the even part `g_0`.
pub fn build_even_irrep(g: &LieSuperalgebra, lambda: &[Q], op: &AdjointOperation, max_depth: usize) -> Result<Module> {
    let pos: Vec<usize> = g.positive.iter().copied().filter(|&i| !g.parity(i).is_odd()).collect();
    build_irrep_over(g, lambda, op, &pos, max_depth)
}

/// Irreducible module of the Levi factor of `p`.
pub fn build_levi_irrep(
    g: &LieSuperalgebra,
    p: &ParabolicDecomposition,
    lambda: &[Q],
    op: &AdjointOperation,
    max_depth: usize,
) -> Result<Module> {
    build_irrep_over(g, lambda, op, &p.levi_positive(g), max_depth)
}

struct Builder<'a> {
    g: &'a LieSuperalgebra,
    op: &'a AdjointOperation,
    pos: Vec<usize>,
    neg: Vec<usize>,
    weights: Vec<Weight>,
    parities: Vec<Parity>,
    depth: Vec<usize>,
    prov: Vec<Option<(usize, usize)>>,
    gram: Vec<SVec>,
    /// `raise[e][b]`, indexed by position in `pos`.
    raise: Vec<Vec<SVec>>,
    /// `(negative element, basis vector) → image`.
    lower: HashMap<(usize, usize), SVec>,
    pos_index: HashMap<usize, usize>,
    heights: HashMap<usize, usize>,
    /// Negatives of the simple roots of the chosen subalgebra.
    simple_neg: Vec<usize>,
}

impl Builder<'_> {
    fn lowered(&self, f: usize, b: usize) -> Result<&SVec> {
        self.lower.get(&(f, b)).ok_or_else(|| Error::Internal("lowering requested before its level was built".into()))
    }

    /// Action of `[z]` for a Cartan, raising or lowering basis element on basis vector `b`.
    fn act_known(&self, z: usize, b: usize) -> Result<SVec> {
        if self.g.is_cartan(z) {
            let ev = self.g.eval_weight(&self.weights[b], &[(z, one())]);
            return Ok(if ev.is_zero() { Vec::new() } else { vec![(b, ev)] });
        }
        if let Some(&k) = self.pos_index.get(&z) {
            return Ok(self.raise[k][b].clone());
        }
        if self.neg.contains(&z) {
            return Ok(self.lowered(z, b)?.clone());
        }
        Err(Error::Internal(format!("element {} lies outside the chosen subalgebra", self.g.basis[z].label)))
    }

    /// `E (F b) = [E,F] b + (−1)^{|E||F|} F (E b)`.
    fn raise_candidate(&self, e: usize, f: usize, b: usize) -> Result<SVec> {
        let mut acc = Acc::new();
        for (z, c) in self.g.bracket(e, f) {
            acc.add_scaled(&self.act_known(*z, b)?, c);
        }
        let s = sign(self.g.parity(e).bit() * self.g.parity(f).bit());
        let eb = self.raise[self.pos_index[&e]][b].clone();
        for (u, c) in &eb {
            acc.add_scaled(self.lowered(f, *u)?, &(c * &s));
        }
        Ok(acc.finish())
    }

    fn pair_basis(&self, b: usize, x: &[(usize, Q)]) -> Q {
        let mut s = zero();
        for (u, c) in x {
            let gb = get(&self.gram[b], *u);
            if !gb.is_zero() {
                s += c * gb;
            }
        }
        s
    }
}

/// Highest-weight irreducible module of the subalgebra spanned by the Cartan and the
/// root vectors `±allowed_positive`.
pub fn build_irrep_over(
    g: &LieSuperalgebra,
    lambda: &[Q],
    op: &AdjointOperation,
    allowed_positive: &[usize],
    max_depth: usize,
) -> Result<Module> {
    if lambda.len() != g.rank() {
        return Err(Error::LengthMismatch { expected: g.rank().to_string(), got: lambda.len().to_string() });
    }
    let pos: Vec<usize> = allowed_positive.to_vec();
    let mut neg = Vec::with_capacity(pos.len());
    let mut heights = HashMap::new();
    for &e in &pos {
        let r: Weight = g.root(e).iter().map(|x| -x.clone()).collect();
        let f = g.root_vector(&r).ok_or_else(|| Error::Internal("missing negative root vector".into()))?;
        let h = to_i64(&g.height(e)).filter(|&h| h > 0).ok_or_else(|| Error::Internal("non-integral root height".into()))?;
        heights.insert(f, h as usize);
        neg.push(f);
    }
    let decomposable = |e: usize| pos.iter().any(|&a| pos.iter().any(|&b| weight_add(g.root(a), g.root(b)) == *g.root(e)));
    let simple_neg: Vec<usize> = pos.iter().zip(&neg).filter(|(&e, _)| !decomposable(e)).map(|(_, &f)| f).collect();
    let pos_index: HashMap<usize, usize> = pos.iter().enumerate().map(|(k, &e)| (e, k)).collect();
    let mut bld = Builder {
        g,
        op,
        pos: pos.clone(),
        neg: neg.clone(),
        weights: vec![lambda.to_vec()],
        parities: vec![Parity::Even],
        depth: vec![0],
        prov: vec![None],
        gram: vec![vec![(0, one())]],
        raise: vec![vec![Vec::new()]; pos.len()],
        lower: HashMap::new(),
        pos_index,
        heights,
        simple_neg,
    };

    let mut level = 1;
    loop {
        // Candidates `F b` landing at this level, grouped by weight in first-come order.
        let mut groups: BTreeMap<Weight, Vec<(usize, usize)>> = BTreeMap::new();
        let mut order: Vec<Weight> = Vec::new();
        for b in 0..bld.weights.len() {
            for &f in &neg {
                if bld.depth[b] + bld.heights[&f] != level {
                    continue;
                }
                let w = weight_add(&bld.weights[b], g.root(f));
                let entry = groups.entry(w.clone()).or_default();
                if entry.is_empty() {
                    order.push(w);
                }
                entry.push((f, b));
            }
        }
        if groups.is_empty() {
            break;
        }
        let mut added = 0;
        for w in order {
            let cands = &groups[&w];
            added += process_weight(&mut bld, &w, cands, level)?;
        }
        if added == 0 {
            // Every deeper weight space is generated from this empty level.
            break;
        }
        if level >= max_depth {
            return Err(Error::FiniteDimGuardExceeded(max_depth));
        }
        level += 1;
    }

    let dim = bld.weights.len();
    let mut action: Vec<Option<SparseMat>> = vec![None; g.dim()];
    for &h in &g.cartan {
        action[h] = Some(
            (0..dim)
                .map(|b| {
                    let ev = g.eval_weight(&bld.weights[b], &[(h, one())]);
                    if ev.is_zero() {
                        Vec::new()
                    } else {
                        vec![(b, ev)]
                    }
                })
                .collect(),
        );
    }
    for (k, &e) in bld.pos.iter().enumerate() {
        action[e] = Some(bld.raise[k].clone());
    }
    for &f in &bld.neg {
        action[f] = Some((0..dim).map(|b| bld.lower.get(&(f, b)).cloned().unwrap_or_default()).collect());
    }
    Ok(Module::new(lambda.to_vec(), bld.weights, bld.parities, action, Some(bld.gram), bld.prov))
}

/// Adds the non-radical part of one weight space; returns the number of new vectors.
fn process_weight(bld: &mut Builder, w: &Weight, cands: &[(usize, usize)], level: usize) -> Result<usize> {
    let g = bld.g;
    let nc = cands.len();
    // Raising images of every candidate.
    let mut raised: Vec<Vec<SVec>> = Vec::with_capacity(nc);
    for &(f, b) in cands {
        let mut row = Vec::with_capacity(bld.pos.len());
        for &e in &bld.pos {
            row.push(bld.raise_candidate(e, f, b)?);
        }
        raised.push(row);
    }
    // ⟨F_i b_i, c_j⟩ = ⟨b_i, F_i† c_j⟩.
    let gram_entry = |i: usize, j: usize| -> Result<Q> {
        let (fi, bi) = cands[i];
        let mut s = zero();
        for (e, a) in &bld.op.images[fi] {
            let k = *bld.pos_index.get(e).ok_or_else(|| Error::Internal("adjoint leaves the subalgebra".into()))?;
            let x = bld.pair_basis(bi, &raised[j][k]);
            if !x.is_zero() {
                s += a * x;
            }
        }
        Ok(s)
    };
    // Simple lowerings already span the weight space, so the basis is chosen among them.
    let simple: Vec<usize> = (0..nc).filter(|&i| bld.simple_neg.contains(&cands[i].0)).collect();
    let mut columns: Vec<Vec<Q>> = Vec::with_capacity(simple.len());
    for &j in &simple {
        columns.push(simple.iter().map(|&i| gram_entry(i, j)).collect::<Result<_>>()?);
    }
    let chosen: Vec<usize> = linalg::independent_subset(&columns, simple.len()).into_iter().map(|t| simple[t]).collect();
    // `gm[t][j] = ⟨chosen_t, candidate_j⟩`.
    let mut gm: Mat = Vec::with_capacity(chosen.len());
    for &i in &chosen {
        gm.push((0..nc).map(|j| gram_entry(i, j)).collect::<Result<_>>()?);
    }
    let start = bld.weights.len();
    if chosen.is_empty() {
        for &(f, b) in cands {
            bld.lower.insert((f, b), Vec::new());
        }
        return Ok(0);
    }
    let sub: Mat = gm.iter().map(|row| chosen.iter().map(|&j| row[j].clone()).collect()).collect();
    let inv = linalg::inverse(&sub).ok_or_else(|| Error::Internal("contravariant form degenerate on chosen vectors".into()))?;
    for (tc, &c) in chosen.iter().enumerate() {
        let (f, b) = cands[c];
        bld.weights.push(w.clone());
        bld.parities.push(bld.parities[b].add(g.parity(f)));
        bld.depth.push(level);
        bld.prov.push(Some((f, b)));
        let row: SVec = chosen
            .iter()
            .enumerate()
            .filter(|(_, &j)| !gm[tc][j].is_zero())
            .map(|(t, &j)| (start + t, gm[tc][j].clone()))
            .collect();
        bld.gram.push(row);
        for (k, r) in raised[c].iter().enumerate() {
            bld.raise[k].push(r.clone());
        }
    }
    for (j, &(f, b)) in cands.iter().enumerate() {
        let rhs: Vec<Q> = gm.iter().map(|row| row[j].clone()).collect();
        let x = linalg::mat_vec(&inv, &rhs);
        let img: SVec = x.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(t, c)| (start + t, c)).collect();
        bld.lower.insert((f, b), img);
    }
    Ok(chosen.len())
}
