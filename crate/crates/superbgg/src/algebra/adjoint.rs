use super::{weight_neg, Kind, LieSuperalgebra, ParabolicDecomposition};
use crate::error::Result;
use crate::scalar::{one, sign, Q};
use crate::sparse::{scale, Acc, SVec};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StarType {
    One,
    Two,
    /// Chevalley-type involution on algebras without a type classification.
    Free,
}

/// Even anti-involution `A ↦ A†` of the algebra, as images of the basis.
#[derive(Clone, Debug)]
pub struct AdjointOperation {
    pub star_type: StarType,
    pub images: Vec<SVec>,
}

impl AdjointOperation {
    pub fn apply(&self, x: &[(usize, Q)]) -> SVec {
        let mut acc = Acc::new();
        for (i, c) in x {
            acc.add_scaled(&self.images[*i], c);
        }
        acc.finish()
    }

    /// `[A,B]† = [B†,A†]`, `(A†)† = A` and `(A†,B†) = (B,A)` on all basis pairs.
    pub fn check_invariants(&self, g: &LieSuperalgebra) -> bool {
        let d = g.dim();
        for a in 0..d {
            if self.apply(&self.images[a]) != vec![(a, one())] {
                return false;
            }
            for b in 0..d {
                let lhs = self.apply(g.bracket(a, b));
                let rhs = g.bracket_vec(&self.images[b], &self.images[a]);
                if lhs != rhs {
                    return false;
                }
                if g.form(&self.images[a], &self.images[b]) != g.gram[b][a] {
                    return false;
                }
            }
        }
        true
    }
}

/// Type 1 is the signed transpose of the natural realization; type 2 composes it
/// with `A ↦ (-1)^{|A|} A`. Only gl and osp(2|2n) carry a type; other algebras get
/// the type-free involution.
pub fn build_adjoint_operation(g: &LieSuperalgebra, star_type: u8) -> Result<AdjointOperation> {
    let typed = g.kind == Kind::Gl || (g.kind == Kind::Osp && g.m == 2);
    let st = match (typed, star_type) {
        (false, _) => StarType::Free,
        (true, 2) => StarType::Two,
        (true, _) => StarType::One,
    };
    let p = g.transposer.clone();
    let mut images = Vec::with_capacity(g.dim());
    for i in 0..g.dim() {
        let w = weight_neg(g.root(i));
        let img = g.transform_basis(i, &w, |mat| {
            mat.iter().map(|(a, b, x)| (*b, *a, x * &p[*a] * &p[*b])).collect()
        })?;
        let img = if st == StarType::Two { scale(&img, &sign(g.parity(i).bit())) } else { img };
        images.push(img);
    }
    Ok(AdjointOperation { star_type: st, images })
}

/// `ξ_a† = (-1)^{|ξ_a|} ξ_a^‡` for every basis element of the nilradical.
pub fn check_star_condition(g: &LieSuperalgebra, p: &ParabolicDecomposition, op: &AdjointOperation) -> bool {
    p.n.iter().zip(&p.dual_pairing).all(|(&xi, dual)| op.images[xi] == scale(dual, &sign(g.parity(xi).bit())))
}
