//! Exact homology, quabla kernels and the disjointness predicates, computed one
//! weight block at a time.

mod levi;

pub use levi::{casimir_match, decompose_levi, hw_weights_of, multiplicity_criterion, LDecomposition, LEntry, LeviIrreps};

use crate::algebra::Weight;
use crate::chains::{Complex, Side};
use crate::error::{Error, Result};
use crate::linalg::{self, Mat, Vector};
use crate::modules::SparseMat;
use crate::scalar::{is_nonneg_int, one, to_i64, Q};
use crate::sparse::SVec;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// Subspace of `C_k` given by a basis in each weight block, in block-local
/// coordinates (ordered as `ChainSpace::blocks`).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SubspaceBasis {
    pub degree: usize,
    pub blocks: BTreeMap<Weight, Vec<Vector>>,
}

impl SubspaceBasis {
    pub fn dim(&self) -> usize {
        self.blocks.values().map(Vec::len).sum()
    }

    pub fn block(&self, w: &[Q]) -> &[Vector] {
        self.blocks.get(w).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Multiplicity of each weight.
    pub fn weight_dims(&self) -> BTreeMap<Weight, usize> {
        self.blocks.iter().filter(|(_, v)| !v.is_empty()).map(|(w, v)| (w.clone(), v.len())).collect()
    }
}

/// Global sparse vector from block-local coordinates.
pub fn to_global(idx: &[usize], local: &[Q]) -> SVec {
    let mut v: SVec = idx.iter().zip(local).filter(|(_, c)| !num_traits::Zero::is_zero(*c)).map(|(&i, c)| (i, c.clone())).collect();
    v.sort_by_key(|t| t.0);
    v
}

/// Block-local coordinates of a global vector supported in `idx`.
pub fn to_local(idx: &[usize], global: &[(usize, Q)]) -> Option<Vector> {
    let mut out = vec![crate::scalar::zero(); idx.len()];
    for (i, c) in global {
        let p = idx.binary_search(i).ok()?;
        out[p] = c.clone();
    }
    Some(out)
}

/// Degree-wise truth values of the ingredients of the disjointness predicates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DegreeFacts {
    /// `im B_{k+1} ∩ ker □_k = 0`
    pub im_b_meets_ker_q: bool,
    /// `im B_{k+1} ∩ C_{k,0} = 0`
    pub im_b_meets_gen_zero: bool,
    /// `C_{k,0} ⊆ ker B_k`
    pub gen_zero_in_ker_b: bool,
    /// `ker B_k ∩ C_{k,0}` maps isomorphically onto `H_k`
    pub homology_is_gen_zero: bool,
    /// `im D_{k−1} ∩ ker □_k = 0`
    pub im_d_meets_ker_q: bool,
    /// `ker D_k ∩ C_{k,0}` maps isomorphically onto `H^k`
    pub cohomology_is_gen_zero: bool,
    /// `im B_{k+1} ∩ ker D_k = 0`
    pub im_b_meets_ker_d: bool,
    /// `im D_{k−1} ∩ ker B_k = 0`
    pub im_d_meets_ker_b: bool,
}

/// The seven statements, each evaluated over the degree window it needs
/// (`None` when the built degrees do not reach that far).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PredicateReport {
    pub degree: usize,
    pub statements: [Option<bool>; 7],
    pub consistent: bool,
}

/// Everything computed at one degree.
#[derive(Clone, Debug)]
pub struct DegreeData {
    pub degree: usize,
    pub ker_b: SubspaceBasis,
    /// `im B_{k+1}`
    pub im_b: SubspaceBasis,
    pub ker_d: SubspaceBasis,
    /// `im D_{k−1}`
    pub im_d: SubspaceBasis,
    pub ker_q: SubspaceBasis,
    pub gen_zero: SubspaceBasis,
    pub facts: DegreeFacts,
}

impl DegreeData {
    pub fn homology_dim(&self) -> usize {
        self.ker_b.dim() - self.im_b.dim()
    }

    pub fn cohomology_dim(&self) -> usize {
        self.ker_d.dim() - self.im_d.dim()
    }

    /// Weight multiplicities of `H^k`, the cohomology of the coboundary.
    pub fn cohomology_weights(&self) -> BTreeMap<Weight, usize> {
        let mut out = BTreeMap::new();
        for (w, k) in &self.ker_d.blocks {
            let d = k.len() - self.im_d.block(w).len();
            if d > 0 {
                out.insert(w.clone(), d);
            }
        }
        out
    }

    /// Weight multiplicities of `H_k`.
    pub fn homology_weights(&self) -> BTreeMap<Weight, usize> {
        let mut out = BTreeMap::new();
        for (w, k) in &self.ker_b.blocks {
            let d = k.len() - self.im_b.block(w).len();
            if d > 0 {
                out.insert(w.clone(), d);
            }
        }
        out
    }
}

/// Homology data for every degree `k < top` of a complex.
pub struct Analysis {
    pub degrees: Vec<DegreeData>,
    /// `im D_{T−1} ∩ ker B_T = 0` at the top degree `T`.
    pub top_im_d_meets_ker_b: bool,
}

fn columns(m: &Mat) -> Vec<Vector> {
    let cols = m.first().map(|r| r.len()).unwrap_or(0);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

fn image(m: &Mat, dim: usize) -> Vec<Vector> {
    linalg::span_basis(&columns(m), dim)
}

fn kernel_of(m: &Mat, cols: usize) -> Vec<Vector> {
    if m.is_empty() {
        return (0..cols).map(|i| (0..cols).map(|j| if i == j { one() } else { crate::scalar::zero() }).collect()).collect();
    }
    linalg::kernel(m, cols)
}

fn block_of(op: &SparseMat, rows: &[usize], cols: &[usize]) -> Mat {
    Complex::dense_block(op, rows, cols)
}

struct BlockResult {
    ker_b: Vec<Vector>,
    im_b: Vec<Vector>,
    ker_d: Vec<Vector>,
    im_d: Vec<Vector>,
    ker_q: Vec<Vector>,
    gen_zero: Vec<Vector>,
    facts: DegreeFacts,
}

fn analyze_block(cx: &Complex, k: usize, quabla: &SparseMat, w: &Weight, idx: &[usize]) -> BlockResult {
    let n = idx.len();
    let below: &[usize] = if k == 0 { &[] } else { cx.spaces[k - 1].block(w) };
    let above = cx.spaces[k + 1].block(w);
    let b_k = if k == 0 { Vec::new() } else { block_of(&cx.boundary[k], below, idx) };
    let ker_b = kernel_of(&b_k, n);
    let im_b = image(&block_of(&cx.boundary[k + 1], idx, above), n);
    let d_k = block_of(&cx.coboundary[k], above, idx);
    let ker_d = kernel_of(&d_k, n);
    let im_d = if k == 0 { Vec::new() } else { image(&block_of(&cx.coboundary[k - 1], idx, below), n) };
    let q = block_of(quabla, idx, idx);
    let ker_q = kernel_of(&q, n);
    let gen_zero = kernel_of(&linalg::mat_pow(&q, n.max(1)), n);

    let meets = |a: &[Vector], b: &[Vector]| linalg::intersection_dim(a, b, n) == 0;
    let kb_g = linalg::intersect(&ker_b, &gen_zero, n);
    let kd_g = linalg::intersect(&ker_d, &gen_zero, n);
    let facts = DegreeFacts {
        im_b_meets_ker_q: meets(&im_b, &ker_q),
        im_b_meets_gen_zero: meets(&im_b, &gen_zero),
        gen_zero_in_ker_b: linalg::contained(&gen_zero, &ker_b, n),
        homology_is_gen_zero: meets(&kb_g, &im_b) && kb_g.len() == ker_b.len() - im_b.len(),
        im_d_meets_ker_q: meets(&im_d, &ker_q),
        cohomology_is_gen_zero: meets(&kd_g, &im_d) && kd_g.len() == ker_d.len() - im_d.len(),
        im_b_meets_ker_d: meets(&im_b, &ker_d),
        im_d_meets_ker_b: meets(&im_d, &ker_b),
    };
    BlockResult { ker_b, im_b, ker_d, im_d, ker_q, gen_zero, facts }
}

/// Computes kernels, images and predicate ingredients for every degree below the top.
pub fn analyze(cx: &Complex) -> Analysis {
    let top = cx.top();
    let mut degrees = Vec::new();
    for k in 0..top {
        let quabla = cx.quabla_direct(k);
        let blocks: Vec<(&Weight, &Vec<usize>)> = cx.spaces[k].blocks.iter().collect();
        let results: Vec<BlockResult> = blocks.par_iter().map(|(w, idx)| analyze_block(cx, k, &quabla, w, idx)).collect();
        let mut d = DegreeData {
            degree: k,
            ker_b: SubspaceBasis { degree: k, ..Default::default() },
            im_b: SubspaceBasis { degree: k, ..Default::default() },
            ker_d: SubspaceBasis { degree: k, ..Default::default() },
            im_d: SubspaceBasis { degree: k, ..Default::default() },
            ker_q: SubspaceBasis { degree: k, ..Default::default() },
            gen_zero: SubspaceBasis { degree: k, ..Default::default() },
            facts: DegreeFacts {
                im_b_meets_ker_q: true,
                im_b_meets_gen_zero: true,
                gen_zero_in_ker_b: true,
                homology_is_gen_zero: true,
                im_d_meets_ker_q: true,
                cohomology_is_gen_zero: true,
                im_b_meets_ker_d: true,
                im_d_meets_ker_b: true,
            },
        };
        for ((w, _), r) in blocks.iter().zip(results) {
            let f = &mut d.facts;
            f.im_b_meets_ker_q &= r.facts.im_b_meets_ker_q;
            f.im_b_meets_gen_zero &= r.facts.im_b_meets_gen_zero;
            f.gen_zero_in_ker_b &= r.facts.gen_zero_in_ker_b;
            f.homology_is_gen_zero &= r.facts.homology_is_gen_zero;
            f.im_d_meets_ker_q &= r.facts.im_d_meets_ker_q;
            f.cohomology_is_gen_zero &= r.facts.cohomology_is_gen_zero;
            f.im_b_meets_ker_d &= r.facts.im_b_meets_ker_d;
            f.im_d_meets_ker_b &= r.facts.im_d_meets_ker_b;
            d.ker_b.blocks.insert((*w).clone(), r.ker_b);
            d.im_b.blocks.insert((*w).clone(), r.im_b);
            d.ker_d.blocks.insert((*w).clone(), r.ker_d);
            d.im_d.blocks.insert((*w).clone(), r.im_d);
            d.ker_q.blocks.insert((*w).clone(), r.ker_q);
            d.gen_zero.blocks.insert((*w).clone(), r.gen_zero);
        }
        degrees.push(d);
    }
    let top_im_d_meets_ker_b = top == 0
        || cx.spaces[top].blocks.par_iter().all(|(w, idx)| {
            let n = idx.len();
            let below = cx.spaces[top - 1].block(w);
            let ker_b = kernel_of(&block_of(&cx.boundary[top], below, idx), n);
            let im_d = image(&block_of(&cx.coboundary[top - 1], idx, below), n);
            linalg::intersection_dim(&ker_b, &im_d, n) == 0
        });
    Analysis { degrees, top_im_d_meets_ker_b }
}

impl Analysis {
    /// Highest degree with homology available.
    pub fn max_degree(&self) -> Option<usize> {
        self.degrees.len().checked_sub(1)
    }

    /// The seven statements at degree `k`, each over the window of degrees it
    /// involves: (1), (2), (4) over `0..=k`, (3), (5), (6) over `0..=k+1`, and
    /// (7) as `im B ∩ ker D = 0` up to `k` with `im D ∩ ker B = 0` up to `k+1`.
    pub fn predicates(&self, k: usize) -> PredicateReport {
        let n = self.degrees.len();
        let upto = |m: usize, f: &dyn Fn(&DegreeFacts) -> bool| -> Option<bool> {
            if m >= n {
                None
            } else {
                Some(self.degrees[..=m].iter().all(|d| f(&d.facts)))
            }
        };
        let seventh = if k >= n {
            None
        } else {
            let first = self.degrees[..=k].iter().all(|d| d.facts.im_b_meets_ker_d);
            let second_inner = self.degrees[..=k].iter().all(|d| d.facts.im_d_meets_ker_b);
            let next = if k + 1 < n { self.degrees[k + 1].facts.im_d_meets_ker_b } else { self.top_im_d_meets_ker_b };
            Some(first && second_inner && next)
        };
        let statements = [
            upto(k, &|f| f.im_b_meets_ker_q),
            upto(k, &|f| f.im_b_meets_gen_zero),
            upto(k + 1, &|f| f.gen_zero_in_ker_b),
            upto(k, &|f| f.homology_is_gen_zero),
            upto(k + 1, &|f| f.im_d_meets_ker_q),
            upto(k + 1, &|f| f.cohomology_is_gen_zero),
            seventh,
        ];
        let decided: Vec<bool> = statements.iter().flatten().copied().collect();
        let consistent = decided.windows(2).all(|p| p[0] == p[1]);
        PredicateReport { degree: k, statements, consistent }
    }
}

/// `Σ (−1)^k dim C_k(μ) = Σ (−1)^k dim H_k(μ)` over every degree where `μ` can
/// occur in the opposite-side complex of a module with highest weight `λ`.
pub fn euler_check(cx: &Complex, an: &Analysis, lambda: &[Q], mu: &[Q]) -> Result<bool> {
    if cx.side != Side::Opposite {
        return Err(Error::PreconditionViolated("Euler check runs on the opposite-side complex".into()));
    }
    let diff = crate::algebra::weight_sub(lambda, mu);
    let coeffs = cx.g.simple_root_coeffs(&diff);
    let height = match coeffs {
        Some(c) if c.iter().all(is_nonneg_int) => c.iter().map(|x| to_i64(x).unwrap_or(0)).sum::<i64>() as usize,
        _ => return Ok(true),
    };
    let built = an.degrees.len().saturating_sub(1);
    if height > built || an.degrees.is_empty() {
        return Err(Error::TruncationTooSmall { needed: height, built });
    }
    let mut lhs: i64 = 0;
    let mut rhs: i64 = 0;
    for k in 0..=height {
        let s = if k % 2 == 0 { 1 } else { -1 };
        lhs += s * cx.spaces[k].block(mu).len() as i64;
        rhs += s * an.degrees[k].homology_weights().get(mu).copied().unwrap_or(0) as i64;
    }
    Ok(lhs == rhs)
}

/// One degree of homology together with its Levi structure.
#[derive(Clone, Debug)]
pub struct HomologyReport {
    pub degree: usize,
    pub dim_ker_boundary: usize,
    pub dim_im_boundary_above: usize,
    pub homology_dimension: usize,
    pub homology_weights: BTreeMap<Weight, usize>,
    pub homology_decomposition: LDecomposition,
    pub ker_quabla_dimension: usize,
    pub ker_quabla_decomposition: LDecomposition,
    pub generalized_zero_dimension: usize,
    pub predicates: PredicateReport,
}

impl HomologyReport {
    /// `(highest weight, multiplicity)` of the homology constituents.
    pub fn highest_weights(&self) -> Vec<(Weight, usize)> {
        self.homology_decomposition.entries.iter().map(|e| (e.highest_weight.clone(), e.hw_vector_count)).collect()
    }
}

/// Complement of `im B_{k+1}` inside `ker B_k`, by first-come pivoting per block.
pub fn homology_complement(d: &DegreeData) -> SubspaceBasis {
    let mut out = SubspaceBasis { degree: d.degree, ..Default::default() };
    for (w, ker) in &d.ker_b.blocks {
        let n = ker.first().map(Vec::len).unwrap_or(0);
        let mut span = d.im_b.block(w).to_vec();
        let mut chosen = Vec::new();
        for v in ker {
            if !linalg::contained(std::slice::from_ref(v), &span, n) {
                span.push(v.clone());
                chosen.push(v.clone());
            }
        }
        if !chosen.is_empty() {
            out.blocks.insert(w.clone(), chosen);
        }
    }
    out
}

/// Full reports for degrees `0..top` of the complex.
pub fn homology_reports(cx: &Complex, an: &Analysis, irreps: &mut LeviIrreps) -> Result<Vec<HomologyReport>> {
    an.degrees
        .iter()
        .map(|d| {
            let k = d.degree;
            Ok(HomologyReport {
                degree: k,
                dim_ker_boundary: d.ker_b.dim(),
                dim_im_boundary_above: d.im_b.dim(),
                homology_dimension: d.homology_dim(),
                homology_weights: d.homology_weights(),
                homology_decomposition: decompose_levi(cx, k, &d.ker_b, Some(&d.im_b), irreps)?,
                ker_quabla_dimension: d.ker_q.dim(),
                ker_quabla_decomposition: decompose_levi(cx, k, &d.ker_q, None, irreps)?,
                generalized_zero_dimension: d.gen_zero.dim(),
                predicates: an.predicates(k),
            })
        })
        .collect()
}
