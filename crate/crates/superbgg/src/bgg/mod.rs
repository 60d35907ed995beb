//! BGG-existence verdicts, predicted resolution shapes and the named reproductions.

mod reproduce;
mod weyl;

pub use reproduce::{reproduce, Check, ReproduceOptions, ReproduceReport, SCENARIOS};
pub use weyl::{kac_resolution, weyl_coset, WeylCoset, WeylElement};

use crate::algebra::{check_star_condition, AdjointOperation, LieSuperalgebra, ParabolicDecomposition, Weight};
use crate::chains::{Complex, Side};
use crate::error::{Error, Result};
use crate::homology::{analyze, homology_reports, Analysis, multiplicity_criterion, HomologyReport, LeviIrreps};
use crate::modules::Module;
use crate::scalar::{one, q, zero};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Exists,
    NotExists,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DecisionBasis {
    StarCondition,
    MultiplicityCriterion,
    DirectDisjointness,
    NecessityViolated,
    Truncated,
}

/// Levi highest weights with multiplicities, one list per degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionShape {
    pub degrees: Vec<Vec<(Weight, usize)>>,
    pub truncated: bool,
    pub terminates_at: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct BggVerdict {
    pub status: Status,
    pub basis: DecisionBasis,
    /// Degree where homology fails complete reducibility, for `NotExists`.
    pub witness: Option<usize>,
    pub shape: ResolutionShape,
    pub reports: Vec<HomologyReport>,
}

/// Runs the necessity check and the sufficiency ladder on degrees `0..=k_max`.
pub fn bgg_verdict(
    g: &LieSuperalgebra,
    p: &ParabolicDecomposition,
    module: &Module,
    op: &AdjointOperation,
    k_max: usize,
    max_depth: usize,
) -> Result<BggVerdict> {
    let cx = Complex::build(g, p, module, Side::Opposite, k_max + 1)?;
    verdict_on(&cx, &analyze(&cx), op, max_depth)
}

/// The verdict from an already analyzed opposite-side complex, using degrees
/// below its top.
pub fn verdict_on(cx: &Complex, an: &Analysis, op: &AdjointOperation, max_depth: usize) -> Result<BggVerdict> {
    if cx.side != Side::Opposite || cx.top() == 0 {
        return Err(Error::PreconditionViolated("verdict needs an opposite-side complex of positive top".into()));
    }
    let (g, p, module) = (cx.g, cx.p, cx.module);
    let k_max = cx.top() - 1;
    let mut irreps = LeviIrreps::new(g, p, op, max_depth);
    let reports = homology_reports(cx, an, &mut irreps)?;

    let (even, odd) = p.n_sdim(g);
    let truncated = odd > 0 || k_max < even;
    let degrees: Vec<Vec<(Weight, usize)>> = reports.iter().map(HomologyReport::highest_weights).collect();
    let terminates_at = if truncated { None } else { degrees.iter().rposition(|d| !d.is_empty()) };
    let shape = ResolutionShape { degrees, truncated, terminates_at };

    let verdict = |status, basis, witness| BggVerdict { status, basis, witness, shape: shape.clone(), reports: reports.clone() };

    // Necessity: homology must be completely reducible wherever that is decidable.
    let decided_not_cr = reports.iter().find(|r| {
        let d = &r.homology_decomposition;
        !d.completely_reducible && d.entries.iter().all(|e| e.irrep_dimension.is_some())
    });
    if let Some(r) = decided_not_cr {
        return Ok(verdict(Status::NotExists, DecisionBasis::NecessityViolated, Some(r.degree)));
    }
    if check_star_condition(g, p, op) && module.is_star(op) {
        return Ok(verdict(Status::Exists, DecisionBasis::StarCondition, None));
    }
    let ker_q: Vec<_> = reports.iter().map(|r| r.ker_quabla_decomposition.clone()).collect();
    if let Ok(None) = multiplicity_criterion(&ker_q) {
        return Ok(verdict(Status::Exists, DecisionBasis::MultiplicityCriterion, None));
    }
    let direct = an.degrees.iter().zip(&reports).all(|(d, r)| {
        d.facts.im_b_meets_ker_q
            && d.facts.im_d_meets_ker_q
            && r.homology_decomposition.completely_reducible
            && r.highest_weights() == r.ker_quabla_decomposition.entries.iter().map(|e| (e.highest_weight.clone(), e.hw_vector_count)).collect::<Vec<_>>()
    });
    if direct {
        return Ok(verdict(Status::Exists, DecisionBasis::DirectDisjointness, None));
    }
    Ok(verdict(Status::Unknown, DecisionBasis::Truncated, None))
}

/// Predicted homology of the natural osp(m|2n)-module for the maximal parabolic
/// dropping the first simple root: `ε₁` in degree 0, then `−kε₁ + μ_k`.
pub fn bggtaut_shape(m: usize, n: usize, k_max: usize) -> Result<ResolutionShape> {
    if m < 4 || n <= 1 || m > 2 * n + 1 {
        return Err(Error::PreconditionViolated(format!("closed form needs m ≥ 4, n > 1, m − 2n ≤ 1; got m={m}, n={n}")));
    }
    let d = m / 2;
    let mut degrees = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let mut w = vec![zero(); d + n];
        if k == 0 {
            w[0] = one();
        } else {
            w[0] = -q(k as i64);
            w[1] = q(2);
            let top = if k < d { k } else { d - 1 };
            for x in w.iter_mut().take(top + 1).skip(2) {
                *x = one();
            }
            if k >= d {
                w[d] = q((k - d + 1) as i64);
            }
        }
        degrees.push(vec![(w, 1)]);
    }
    Ok(ResolutionShape { degrees, truncated: true, terminates_at: None })
}
