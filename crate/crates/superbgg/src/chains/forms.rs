//! The evaluation pairing between the two chain sides and the contravariant
//! form on chains.

use super::{Complex, Side};
use crate::algebra::{AdjointOperation, LieSuperalgebra, Parity};
use crate::error::{Error, Result};
use crate::scalar::{one, sign, zero, Q};
use crate::sparse::{get, Acc, SVec};
use num_traits::Zero;

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, k - 1);
            out.push(q);
        }
    }
    out
}

/// `(L_1 ∧ ⋯ ∧ L_k, R_1 ∧ ⋯ ∧ R_k)`: the left word is super-antisymmetrized and
/// paired factorwise with the right word, `(L_1 ⊗ L', R_1 ⊗ R') = (−1)^{|L'||R_1|}(L_1,R_1)(L',R')`.
pub fn wedge_pairing(g: &LieSuperalgebra, left: &[SVec], left_parity: &[Parity], right: &[usize]) -> Q {
    let k = left.len();
    if k != right.len() {
        return zero();
    }
    let mut total = zero();
    for perm in permutations(k) {
        // Koszul sign of reordering the left letters.
        let mut e = 0usize;
        for i in 0..k {
            for j in i + 1..k {
                if perm[i] > perm[j] {
                    e += 1 + left_parity[perm[i]].bit() * left_parity[perm[j]].bit();
                }
            }
        }
        let mut val = sign(e);
        let mut rest_parity: usize = left_parity.iter().map(|p| p.bit()).sum();
        for i in 0..k {
            let l = &left[perm[i]];
            rest_parity -= left_parity[perm[i]].bit();
            let f = g.form(l, &[(right[i], one())]);
            if f.is_zero() {
                val = zero();
                break;
            }
            val *= f * sign(rest_parity * g.parity(right[i]).bit());
        }
        total += val;
    }
    total
}

/// Pairing of `Λ^k n̄ ⊗ V*` (rows) with `Λ^k n ⊗ V` (columns),
/// `(Y ⊗ q, X ⊗ p) = (−1)^{|q||X|} (Y, X)(q, p)`.
pub fn pairing_matrix(opposite: &Complex, nil: &Complex, k: usize) -> Result<Vec<SVec>> {
    if opposite.side != Side::Opposite || nil.side != Side::Nilradical {
        return Err(Error::PreconditionViolated("pairing needs an opposite-side and a nilradical-side complex".into()));
    }
    if opposite.module.dim() != nil.module.dim() {
        return Err(Error::PreconditionViolated("modules are not dual in size".into()));
    }
    let g = opposite.g;
    let sa = &opposite.spaces[k];
    let sb = &nil.spaces[k];
    let rows = sa
        .basis
        .iter()
        .enumerate()
        .map(|(i, y)| {
            let target: Vec<_> = sa.weights[i].iter().map(|x| -x.clone()).collect();
            let left: Vec<SVec> = y.word.iter().map(|&a| vec![(opposite.nil[a], one())]).collect();
            let lp: Vec<Parity> = y.word.iter().map(|&a| g.parity(opposite.nil[a])).collect();
            let mut acc = Acc::new();
            for &j in sb.block(&target) {
                let x = &sb.basis[j];
                if x.v != y.v {
                    continue;
                }
                let right: Vec<usize> = x.word.iter().map(|&a| nil.nil[a]).collect();
                let xp: usize = right.iter().map(|&r| g.parity(r).bit()).sum();
                let s = sign(opposite.module.parities[y.v].bit() * xp);
                acc.add(j, &(wedge_pairing(g, &left, &lp, &right) * s));
            }
            acc.finish()
        })
        .collect();
    Ok(rows)
}

/// Contravariant form `⟨Y_1 ⊗ v, Y_2 ⊗ w⟩ = (−1)^{o(o−1)/2} (Y_1†, Y_2)⟨v, w⟩` on `C_k`,
/// as rows, where `o` counts the odd letters of `Y_1`.
pub fn chain_form_matrix(cx: &Complex, op: &AdjointOperation, k: usize) -> Result<Vec<SVec>> {
    let gram = cx.module.gram.as_ref().ok_or_else(|| Error::PreconditionViolated("module has no contravariant form".into()))?;
    let g = cx.g;
    let sp = &cx.spaces[k];
    let rows = (0..sp.dim())
        .map(|i| {
            let a = &sp.basis[i];
            let left: Vec<SVec> = a.word.iter().map(|&x| op.images[cx.nil[x]].clone()).collect();
            let lp: Vec<Parity> = a.word.iter().map(|&x| g.parity(cx.nil[x])).collect();
            let o: usize = lp.iter().map(|p| p.bit()).sum();
            let s = sign(o * o.saturating_sub(1) / 2);
            let mut acc = Acc::new();
            for &j in sp.block(&sp.weights[i]) {
                let b = &sp.basis[j];
                let mv = get(&gram[a.v], b.v);
                if mv.is_zero() {
                    continue;
                }
                let right: Vec<usize> = b.word.iter().map(|&x| cx.nil[x]).collect();
                acc.add(j, &(wedge_pairing(g, &left, &lp, &right) * mv * &s));
            }
            acc.finish()
        })
        .collect();
    Ok(rows)
}
