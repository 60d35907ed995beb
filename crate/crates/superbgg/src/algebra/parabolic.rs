use super::LieSuperalgebra;
use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::Q;
use crate::sparse::{from_dense, SVec};
use num_traits::Zero;

#[derive(Clone, Debug)]
pub struct ParabolicDecomposition {
    pub levi_simple: Vec<usize>,
    pub nbar: Vec<usize>,
    pub levi: Vec<usize>,
    pub n: Vec<usize>,
    /// `dual_pairing[a]` is `ξ_a^‡ ∈ n̄` with `(ξ_a^‡, ξ_b) = δ_ab`.
    pub dual_pairing: Vec<SVec>,
    /// Dual basis of `l` inside `l`.
    pub levi_dual: Vec<SVec>,
}

impl ParabolicDecomposition {
    /// Positive simple root vectors of the Levi factor.
    pub fn levi_raising(&self, g: &LieSuperalgebra) -> Vec<usize> {
        self.levi_simple.iter().map(|&j| g.simple_vectors[j]).collect()
    }

    pub fn levi_roots(&self, g: &LieSuperalgebra) -> Vec<usize> {
        self.levi.iter().copied().filter(|&i| !g.is_cartan(i)).collect()
    }

    pub fn levi_positive(&self, g: &LieSuperalgebra) -> Vec<usize> {
        g.positive.iter().copied().filter(|i| self.levi.contains(i)).collect()
    }

    pub fn levi_negative(&self, g: &LieSuperalgebra) -> Vec<usize> {
        g.negative.iter().copied().filter(|i| self.levi.contains(i)).collect()
    }

    pub fn n_sdim(&self, g: &LieSuperalgebra) -> (usize, usize) {
        let odd = self.n.iter().filter(|&&i| g.parity(i).is_odd()).count();
        (self.n.len() - odd, odd)
    }
}

/// Basis of the opposite space dual to `basis`: `(dual_a, basis_b) = δ_ab`.
pub fn dual_basis(g: &LieSuperalgebra, basis: &[usize], opposite: &[usize]) -> Result<Vec<SVec>> {
    let k = basis.len();
    if opposite.len() != k {
        return Err(Error::DegenerateForm("pairing blocks of different size".into()));
    }
    if k == 0 {
        return Ok(Vec::new());
    }
    let m: linalg::Mat = opposite.iter().map(|&c| basis.iter().map(|&b| g.gram[c][b].clone()).collect()).collect();
    let x = linalg::inverse(&m).ok_or_else(|| Error::DegenerateForm("pairing block is singular".into()))?;
    Ok(x
        .iter()
        .map(|row| {
            let mut v: SVec = from_dense(row).into_iter().map(|(c, q)| (opposite[c], q)).collect();
            v.sort_by_key(|t| t.0);
            v
        })
        .collect())
}

/// Parabolic subalgebra whose Levi factor is generated by the given simple roots.
pub fn build_parabolic(g: &LieSuperalgebra, levi_simple: &[usize]) -> Result<ParabolicDecomposition> {
    let ns = g.simple_roots.len();
    let mut sel: Vec<usize> = levi_simple.to_vec();
    sel.sort_unstable();
    sel.dedup();
    if let Some(bad) = sel.iter().find(|&&j| j >= ns) {
        return Err(Error::InvalidIndex(format!("simple root index {bad} (algebra has {ns})")));
    }
    let in_levi = |i: usize| -> bool {
        g.root_coeffs[i].iter().enumerate().all(|(j, c): (usize, &Q)| c.is_zero() || sel.contains(&j))
    };
    let mut levi: Vec<usize> = g.cartan.clone();
    let mut n = Vec::new();
    let mut nbar = Vec::new();
    for (&pi, &ni) in g.positive.iter().zip(&g.negative) {
        if in_levi(pi) {
            levi.push(pi);
            levi.push(ni);
        } else {
            n.push(pi);
            nbar.push(ni);
        }
    }
    levi.sort_unstable();
    let dual_pairing = dual_basis(g, &n, &nbar)?;
    let levi_dual = dual_basis(g, &levi, &levi)?;
    Ok(ParabolicDecomposition { levi_simple: sel, nbar, levi, n, dual_pairing, levi_dual })
}
