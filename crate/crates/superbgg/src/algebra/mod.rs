//! Matrix realizations of gl(m|n) and osp(m|2n).

mod adjoint;
mod parabolic;

pub use adjoint::{build_adjoint_operation, check_star_condition, AdjointOperation, StarType};
pub use parabolic::{build_parabolic, dual_basis, ParabolicDecomposition};

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::scalar::{fmt_q, one, qf, sign, zero, Q};
use crate::sparse::{Acc, SVec};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: usize) -> Self {
        if b % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn add(self, o: Parity) -> Parity {
        Parity::from_bit(self.bit() + o.bit())
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }
}

/// Coordinates in the `(ε_1..ε_r | δ_1..δ_s)` basis.
pub type Weight = Vec<Q>;

pub fn weight_add(a: &[Q], b: &[Q]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn weight_sub(a: &[Q], b: &[Q]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn weight_neg(a: &[Q]) -> Weight {
    a.iter().map(|x| -x).collect()
}

pub fn weight_scale(a: &[Q], s: &Q) -> Weight {
    a.iter().map(|x| x * s).collect()
}

pub fn is_zero_weight(a: &[Q]) -> bool {
    a.iter().all(|x| x.is_zero())
}

/// Sign of the first non-zero coordinate: the positivity used for roots.
pub fn lex_sign(a: &[Q]) -> i32 {
    for x in a {
        if x.is_positive() {
            return 1;
        }
        if x.is_negative() {
            return -1;
        }
    }
    0
}

/// `(a1,..,ar|b1,..,bs)`.
pub fn fmt_weight(w: &[Q], r: usize) -> String {
    let a: Vec<String> = w[..r].iter().map(fmt_q).collect();
    let b: Vec<String> = w[r..].iter().map(fmt_q).collect();
    format!("({}|{})", a.join(","), b.join(","))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Kind {
    Gl,
    Osp,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Gl => write!(f, "gl"),
            Kind::Osp => write!(f, "osp"),
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(Kind::Gl),
            "osp" => Ok(Kind::Osp),
            other => Err(Error::UnsupportedAlgebra(other.to_string())),
        }
    }
}

/// Sparse supermatrix on the natural module.
pub type NatMatrix = Vec<(usize, usize, Q)>;

#[derive(Clone, Debug)]
pub struct BasisElement {
    pub label: String,
    pub parity: Parity,
    /// Root; zero for Cartan elements.
    pub root: Weight,
    pub matrix: NatMatrix,
}

#[derive(Clone, Debug)]
pub struct LieSuperalgebra {
    pub kind: Kind,
    pub m: usize,
    pub n: usize,
    pub c: Q,
    pub r: usize,
    pub s: usize,
    pub nat_parity: Vec<Parity>,
    pub nat_weight: Vec<Weight>,
    pub basis: Vec<BasisElement>,
    pub cartan: Vec<usize>,
    /// Positive root vectors ordered by height; `negative[i]` has root `-root(positive[i])`.
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
    pub simple_roots: Vec<Weight>,
    /// Positive root vector of each simple root.
    pub simple_vectors: Vec<usize>,
    pub rho: Weight,
    /// Gram matrix `(A_i, A_j)`.
    pub gram: Mat,
    /// Row `i` holds the coordinates of the dual element `A_i^‡`, `(A_i^‡, A_j) = δ_ij`.
    pub dual: Vec<SVec>,
    /// Form induced on weights: `(λ, μ) = λᵀ W μ`.
    pub weight_form: Mat,
    /// Expansion of each basis root in simple roots (zero for Cartan elements).
    pub root_coeffs: Vec<Vec<Q>>,
    root_index: HashMap<Weight, usize>,
    bracket: Vec<Vec<SVec>>,
    /// Matrix entry that determines the coefficient of each basis element.
    pivot: Vec<(usize, usize)>,
    /// Diagonal signs `P` with `X ↦ P Xᵀ P` preserving the algebra.
    pub transposer: Vec<Q>,
}

fn mat_mul_nat(a: &NatMatrix, b: &NatMatrix) -> HashMap<(usize, usize), Q> {
    let mut out: HashMap<(usize, usize), Q> = HashMap::new();
    for (i, k, x) in a {
        for (k2, j, y) in b {
            if k == k2 {
                *out.entry((*i, *j)).or_insert_with(zero) += x * y;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

impl LieSuperalgebra {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `(dim g_0, dim g_1)`.
    pub fn sdim(&self) -> (usize, usize) {
        let odd = self.basis.iter().filter(|b| b.parity.is_odd()).count();
        (self.dim() - odd, odd)
    }

    pub fn rank(&self) -> usize {
        self.r + self.s
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.basis[i].parity
    }

    pub fn root(&self, i: usize) -> &Weight {
        &self.basis[i].root
    }

    pub fn is_cartan(&self, i: usize) -> bool {
        is_zero_weight(&self.basis[i].root)
    }

    pub fn root_vector(&self, root: &[Q]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    pub fn height(&self, i: usize) -> Q {
        self.root_coeffs[i].iter().fold(zero(), |a, b| a + b)
    }

    pub fn zero_weight(&self) -> Weight {
        vec![zero(); self.rank()]
    }

    pub fn fmt_weight(&self, w: &[Q]) -> String {
        fmt_weight(w, self.r)
    }

    /// `[A_i, A_j]` in basis coordinates.
    pub fn bracket(&self, i: usize, j: usize) -> &SVec {
        &self.bracket[i][j]
    }

    /// Bilinear extension of the bracket to sparse elements.
    pub fn bracket_vec(&self, x: &[(usize, Q)], y: &[(usize, Q)]) -> SVec {
        let mut acc = Acc::new();
        for (i, a) in x {
            for (j, b) in y {
                acc.add_scaled(&self.bracket[*i][*j], &(a * b));
            }
        }
        acc.finish()
    }

    pub fn form(&self, x: &[(usize, Q)], y: &[(usize, Q)]) -> Q {
        let mut s = zero();
        for (i, a) in x {
            for (j, b) in y {
                if !self.gram[*i][*j].is_zero() {
                    s += a * b * &self.gram[*i][*j];
                }
            }
        }
        s
    }

    pub fn weight_pairing(&self, a: &[Q], b: &[Q]) -> Q {
        let mut s = zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() && !self.weight_form[i][j].is_zero() {
                    s += x * y * &self.weight_form[i][j];
                }
            }
        }
        s
    }

    /// `(λ, λ + 2ρ)`.
    pub fn casimir_eigenvalue(&self, lambda: &[Q]) -> Q {
        let two_rho = weight_scale(&self.rho, &Q::from_integer(2.into()));
        self.weight_pairing(lambda, &weight_add(lambda, &two_rho))
    }

    /// Value of a weight on a Cartan element given in basis coordinates.
    pub fn eval_weight(&self, w: &[Q], h: &[(usize, Q)]) -> Q {
        let mut s = zero();
        for (i, c) in h {
            if let Some(k) = self.cartan.iter().position(|x| x == i) {
                s += c * &w[k];
            }
        }
        s
    }

    /// Coefficients of a weight in the simple roots, if it lies in their span.
    pub fn simple_root_coeffs(&self, w: &[Q]) -> Option<Vec<Q>> {
        let dim = self.rank();
        linalg::coordinates(&self.simple_roots, w, dim)
    }

    /// Coordinates of a homogeneous-weight matrix in the basis.
    fn extract(&self, x: &HashMap<(usize, usize), Q>, weight: &[Q]) -> Result<SVec> {
        if x.is_empty() {
            return Ok(Vec::new());
        }
        let candidates: Vec<usize> = if is_zero_weight(weight) {
            self.cartan.clone()
        } else {
            match self.root_index.get(weight) {
                Some(&i) => vec![i],
                None => return Err(Error::Internal(format!("bracket leaves the algebra at weight {weight:?}"))),
            }
        };
        let mut out = Vec::new();
        for &i in &candidates {
            let (a, b) = self.pivot[i];
            let e = self.basis[i].matrix.iter().find(|(p, q, _)| *p == a && *q == b).map(|t| t.2.clone());
            let v = x.get(&(a, b)).cloned().unwrap_or_else(zero);
            if let Some(e) = e {
                if !v.is_zero() {
                    out.push((i, v / e));
                }
            }
        }
        out.sort_by_key(|t| t.0);
        let mut rebuilt: HashMap<(usize, usize), Q> = HashMap::new();
        for (i, c) in &out {
            for (a, b, v) in &self.basis[*i].matrix {
                *rebuilt.entry((*a, *b)).or_insert_with(zero) += c * v;
            }
        }
        rebuilt.retain(|_, v| !v.is_zero());
        if &rebuilt != x {
            return Err(Error::Internal("matrix is not in the span of the basis".into()));
        }
        Ok(out)
    }

    /// Applies a transformation of natural-module matrices to a basis element and
    /// re-expands the result.
    pub(crate) fn transform_basis<F>(&self, i: usize, weight: &[Q], f: F) -> Result<SVec>
    where
        F: Fn(&NatMatrix) -> NatMatrix,
    {
        let t = f(&self.basis[i].matrix);
        let mut h: HashMap<(usize, usize), Q> = HashMap::new();
        for (a, b, v) in t {
            *h.entry((a, b)).or_insert_with(zero) += v;
        }
        h.retain(|_, v| !v.is_zero());
        self.extract(&h, weight)
    }

    fn supertrace_product(&self, a: &NatMatrix, b: &NatMatrix) -> Q {
        let p = mat_mul_nat(a, b);
        let mut s = zero();
        for ((i, j), v) in p {
            if i == j {
                s += sign(self.nat_parity[i].bit()) * v;
            }
        }
        s
    }
}

/// Builds gl(m|n) or osp(m|2n) with form `C · str(XY)`.
pub fn build_algebra(kind: Kind, m: usize, n: usize, c: Q) -> Result<LieSuperalgebra> {
    if c.is_zero() {
        return Err(Error::DegenerateForm("normalization C = 0".into()));
    }
    match kind {
        Kind::Gl => {
            if m == 0 {
                return Err(Error::UnsupportedAlgebra("gl(0|n)".into()));
            }
            if m == n {
                return Err(Error::DegenerateForm(format!("gl({m}|{n}) with m = n is excluded")));
            }
        }
        Kind::Osp => {
            if m == 0 {
                return Err(Error::UnsupportedAlgebra("osp(0|2n)".into()));
            }
            if m + 2 * n < 2 || (n == 0 && m < 3) {
                return Err(Error::UnsupportedAlgebra(format!("osp({m}|{})", 2 * n)));
            }
        }
    }
    construct(kind, m, n, c)
}

/// gl(m|n) without the `m ≠ n` scope check; the supertrace form on gl(n|n) is
/// still non-degenerate (only its simple quotient loses it).
pub fn build_gl_unchecked(m: usize, n: usize, c: Q) -> Result<LieSuperalgebra> {
    if c.is_zero() || m == 0 {
        return Err(Error::DegenerateForm("invalid parameters".into()));
    }
    construct(Kind::Gl, m, n, c)
}

struct Natural {
    parity: Vec<Parity>,
    weight: Vec<Weight>,
    /// Supersymmetric form for osp, absent for gl.
    form: Option<Mat>,
    transposer: Vec<Q>,
}

fn natural(kind: Kind, m: usize, n: usize) -> (usize, usize, Natural) {
    match kind {
        Kind::Gl => {
            let dim = m + n;
            let r = m;
            let s = n;
            let mut weight = Vec::new();
            for a in 0..dim {
                let mut w = vec![zero(); dim];
                w[a] = one();
                weight.push(w);
            }
            let parity = (0..dim).map(|a| Parity::from_bit(usize::from(a >= m))).collect();
            (r, s, Natural { parity, weight, form: None, transposer: vec![one(); dim] })
        }
        Kind::Osp => {
            let d = m / 2;
            let r = d;
            let s = n;
            let dim = m + 2 * n;
            let mut weight = vec![vec![zero(); r + s]; dim];
            let mut parity = vec![Parity::Even; dim];
            let mut form = linalg::zeros(dim, dim);
            let mut transposer = vec![one(); dim];
            for i in 0..d {
                weight[i][i] = one();
                weight[m - 1 - i][i] = -one();
                form[i][m - 1 - i] = one();
                form[m - 1 - i][i] = one();
            }
            if m % 2 == 1 {
                form[d][d] = one();
            }
            for j in 0..n {
                let a = m + j;
                let b = m + 2 * n - 1 - j;
                parity[a] = Parity::Odd;
                parity[b] = Parity::Odd;
                weight[a][r + j] = one();
                weight[b][r + j] = -one();
                form[a][b] = one();
                form[b][a] = -one();
                transposer[b] = -one();
            }
            (r, s, Natural { parity, weight, form: Some(form), transposer })
        }
    }
}

fn proportional(a: &NatMatrix, b: &NatMatrix) -> bool {
    if a.len() != b.len() || a.is_empty() {
        return false;
    }
    let find = |m: &NatMatrix, i: usize, j: usize| m.iter().find(|t| t.0 == i && t.1 == j).map(|t| t.2.clone());
    let Some(rb) = find(b, a[0].0, a[0].1) else { return false };
    let ratio = &a[0].2 / rb;
    a.iter().all(|(i, j, x)| find(b, *i, *j).map(|y| y * &ratio == *x).unwrap_or(false))
}

fn construct(kind: Kind, m: usize, n: usize, c: Q) -> Result<LieSuperalgebra> {
    let (r, s, nat) = natural(kind, m, n);
    let dim = nat.parity.len();
    let rank = r + s;

    // Cartan elements and their pivots.
    let mut cartan_mats: Vec<(NatMatrix, (usize, usize))> = Vec::new();
    match kind {
        Kind::Gl => {
            for a in 0..dim {
                cartan_mats.push((vec![(a, a, one())], (a, a)));
            }
        }
        Kind::Osp => {
            let d = m / 2;
            let mut pos: Vec<usize> = (0..d).collect();
            pos.extend(m..m + n);
            for a in pos {
                let b = if a < m { m - 1 - a } else { 2 * m + 2 * n - 1 - a };
                cartan_mats.push((vec![(a, a, one()), (b, b, -one())], (a, a)));
            }
        }
    }

    // Root vectors: group elementary matrices by weight, solve the defining constraints.
    let mut groups: HashMap<Weight, Vec<(usize, usize)>> = HashMap::new();
    for a in 0..dim {
        for b in 0..dim {
            let w = weight_sub(&nat.weight[a], &nat.weight[b]);
            if !is_zero_weight(&w) {
                groups.entry(w).or_default().push((a, b));
            }
        }
    }
    let mut roots: Vec<(Weight, Parity, NatMatrix)> = Vec::new();
    let mut keys: Vec<Weight> = groups.keys().cloned().collect();
    keys.sort();
    for w in keys {
        let entries = &groups[&w];
        let par = nat.parity[entries[0].0].add(nat.parity[entries[0].1]);
        let vectors: Vec<Vec<Q>> = match &nat.form {
            None => {
                if entries.len() != 1 {
                    return Err(Error::Internal("gl weight space of dimension > 1".into()));
                }
                vec![vec![one()]]
            }
            Some(form) => {
                let mut rows: Mat = Vec::new();
                for u in 0..dim {
                    for wv in 0..dim {
                        let sgn = sign(par.bit() * nat.parity[u].bit());
                        let row: Vec<Q> = entries
                            .iter()
                            .map(|&(a, b)| {
                                let mut x = zero();
                                if b == u {
                                    x += &form[a][wv];
                                }
                                if b == wv {
                                    x += &sgn * &form[u][a];
                                }
                                x
                            })
                            .collect();
                        if row.iter().any(|x| !x.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
                linalg::kernel(&rows, entries.len())
            }
        };
        match vectors.len() {
            0 => continue,
            1 => {}
            _ => return Err(Error::Internal(format!("root space {w:?} has dimension > 1"))),
        }
        let v = &vectors[0];
        let first = v.iter().find(|x| !x.is_zero()).cloned().unwrap_or_else(one);
        let mat: NatMatrix = entries
            .iter()
            .zip(v)
            .filter(|(_, x)| !x.is_zero())
            .map(|(&(a, b), x)| (a, b, x / &first))
            .collect();
        roots.push((w, par, mat));
    }

    let root_set: HashMap<Weight, usize> = roots.iter().enumerate().map(|(i, r)| (r.0.clone(), i)).collect();
    let pos_roots: Vec<usize> = (0..roots.len()).filter(|&i| lex_sign(&roots[i].0) > 0).collect();

    // Simple roots: positive roots that are not sums of two positive roots.
    let pos_set: BTreeSet<Weight> = pos_roots.iter().map(|&i| roots[i].0.clone()).collect();
    let mut simple: Vec<Weight> = pos_roots
        .iter()
        .map(|&i| roots[i].0.clone())
        .filter(|a| !pos_set.iter().any(|b| b != a && pos_set.contains(&weight_sub(a, b))))
        .collect();
    simple.sort_by(|a, b| b.cmp(a));
    simple.dedup();

    // Positive roots in Z-span of simple roots; order by height then lex.
    let coeffs_of = |w: &Weight| -> Result<Vec<Q>> {
        linalg::coordinates(&simple, w, rank).ok_or_else(|| Error::Internal("root outside simple-root span".into()))
    };
    let mut pos_sorted: Vec<(Q, Weight, usize)> = Vec::new();
    for &i in &pos_roots {
        let cf = coeffs_of(&roots[i].0)?;
        let h = cf.iter().fold(zero(), |a, b| a + b);
        pos_sorted.push((h, roots[i].0.clone(), i));
    }
    pos_sorted.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));

    // Assemble basis: Cartan, positive, negative (in matching order).
    let mut basis: Vec<BasisElement> = Vec::new();
    let mut pivot: Vec<(usize, usize)> = Vec::new();
    let mut cartan = Vec::new();
    for (k, (mat, piv)) in cartan_mats.into_iter().enumerate() {
        cartan.push(basis.len());
        basis.push(BasisElement { label: format!("H{}", k + 1), parity: Parity::Even, root: vec![zero(); rank], matrix: mat });
        pivot.push(piv);
    }
    let label = |w: &Weight, mat: &NatMatrix, prefix: &str| -> String {
        match kind {
            Kind::Gl => format!("E{},{}", mat[0].0 + 1, mat[0].1 + 1),
            Kind::Osp => format!("{prefix}{}", fmt_weight(w, r)),
        }
    };
    let mut positive = Vec::new();
    let mut negative = Vec::new();
    let pivot_of = |mat: &NatMatrix| -> (usize, usize) {
        let mut best = (mat[0].0, mat[0].1);
        for (a, b, _) in mat {
            if (*a, *b) < best {
                best = (*a, *b);
            }
        }
        best
    };
    for (_, w, i) in &pos_sorted {
        let (_, par, mat) = &roots[*i];
        positive.push(basis.len());
        pivot.push(pivot_of(mat));
        basis.push(BasisElement { label: label(w, mat, "X"), parity: *par, root: w.clone(), matrix: mat.clone() });
    }
    for (_, w, i) in &pos_sorted {
        let (_, par, mat) = &roots[*i];
        // Negative root vector as the signed transpose of the positive one.
        let t: NatMatrix = mat.iter().map(|(a, b, x)| (*b, *a, x * &nat.transposer[*a] * &nat.transposer[*b])).collect();
        let nw = weight_neg(w);
        let Some(&j) = root_set.get(&nw) else {
            return Err(Error::Internal("negative root missing".into()));
        };
        // The signed transpose must be proportional to the solved root vector of -w.
        if !proportional(&t, &roots[j].2) {
            return Err(Error::Internal(format!("signed transpose leaves the algebra at {nw:?}")));
        }
        negative.push(basis.len());
        pivot.push(pivot_of(&t));
        basis.push(BasisElement { label: label(&nw, &t, "Y"), parity: *par, root: nw, matrix: t });
    }
    if basis.len() != cartan.len() + roots.len() {
        return Err(Error::Internal("root count mismatch".into()));
    }

    let root_index: HashMap<Weight, usize> =
        basis.iter().enumerate().filter(|(_, b)| !is_zero_weight(&b.root)).map(|(i, b)| (b.root.clone(), i)).collect();
    let simple_vectors: Vec<usize> = simple.iter().map(|w| root_index[w]).collect();

    let mut g = LieSuperalgebra {
        kind,
        m,
        n,
        c: c.clone(),
        r,
        s,
        nat_parity: nat.parity.clone(),
        nat_weight: nat.weight.clone(),
        basis,
        cartan,
        positive,
        negative,
        simple_roots: simple.clone(),
        simple_vectors,
        rho: vec![zero(); rank],
        gram: Vec::new(),
        dual: Vec::new(),
        weight_form: Vec::new(),
        root_coeffs: Vec::new(),
        root_index,
        bracket: Vec::new(),
        pivot,
        transposer: nat.transposer.clone(),
    };

    let dimg = g.basis.len();
    // Root coefficients.
    g.root_coeffs = g
        .basis
        .iter()
        .map(|b| if is_zero_weight(&b.root) { Ok(vec![zero(); simple.len()]) } else { coeffs_of(&b.root) })
        .collect::<Result<_>>()?;

    // Bracket table.
    let mut br = vec![vec![Vec::new(); dimg]; dimg];
    for i in 0..dimg {
        for j in 0..dimg {
            let a = &g.basis[i].matrix;
            let b = &g.basis[j].matrix;
            let sg = sign(g.basis[i].parity.bit() * g.basis[j].parity.bit());
            let mut prod = mat_mul_nat(a, b);
            for (k, v) in mat_mul_nat(b, a) {
                *prod.entry(k).or_insert_with(zero) -= &sg * v;
            }
            prod.retain(|_, v| !v.is_zero());
            let w = weight_add(&g.basis[i].root, &g.basis[j].root);
            br[i][j] = g.extract(&prod, &w)?;
        }
    }
    g.bracket = br;

    // Invariant form and duals.
    let mut gram = linalg::zeros(dimg, dimg);
    for i in 0..dimg {
        for j in 0..dimg {
            let v = g.supertrace_product(&g.basis[i].matrix, &g.basis[j].matrix);
            if !v.is_zero() {
                gram[i][j] = &c * v;
            }
        }
    }
    let inv = linalg::inverse(&gram).ok_or_else(|| Error::DegenerateForm("Gram matrix is singular".into()))?;
    // (A_i^‡, A_j) = Σ_k D_ik G_kj = δ_ij  ⇒  D = G^{-1}.
    g.dual = inv.iter().map(|row| crate::sparse::from_dense(row)).collect();
    g.gram = gram;

    let hg: Mat = g.cartan.iter().map(|&i| g.cartan.iter().map(|&j| g.gram[i][j].clone()).collect()).collect();
    g.weight_form = linalg::inverse(&hg).ok_or_else(|| Error::DegenerateForm("form degenerate on the Cartan subalgebra".into()))?;

    let half = qf(1, 2);
    let mut rho = vec![zero(); rank];
    for &i in &g.positive {
        let s = if g.basis[i].parity.is_odd() { -half.clone() } else { half.clone() };
        for (k, x) in g.basis[i].root.iter().enumerate() {
            rho[k] += &s * x;
        }
    }
    g.rho = rho;
    Ok(g)
}

/// Adjoint-representation check helpers used by tests and reports.
impl LieSuperalgebra {
    /// Maximum over basis triples of the super Jacobi defect; `true` when exact.
    pub fn check_jacobi(&self) -> bool {
        let d = self.dim();
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let pa = self.parity(a).bit();
                    let pb = self.parity(b).bit();
                    let pc = self.parity(c).bit();
                    let bc = self.bracket(b, c);
                    let ca = self.bracket(c, a);
                    let ab = self.bracket(a, b);
                    let mut acc = Acc::new();
                    acc.add_scaled(&self.bracket_vec(&[(a, one())], bc), &sign(pa * pc));
                    acc.add_scaled(&self.bracket_vec(&[(b, one())], ca), &sign(pb * pa));
                    acc.add_scaled(&self.bracket_vec(&[(c, one())], ab), &sign(pc * pb));
                    if !acc.0.is_empty() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `([A,B],C) = (A,[B,C])` on all triples.
    pub fn check_form_invariance(&self) -> bool {
        let d = self.dim();
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let l = self.form(self.bracket(a, b), &[(c, one())]);
                    let r = self.form(&[(a, one())], self.bracket(b, c));
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Supersymmetry and consistency of the Gram matrix.
    pub fn check_form_supersymmetric(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let g = &self.gram[i][j];
                if self.parity(i) != self.parity(j) && !g.is_zero() {
                    return false;
                }
                if *g != sign(self.parity(i).bit() * self.parity(j).bit()) * &self.gram[j][i] {
                    return false;
                }
            }
        }
        true
    }

    /// `[H, X_α] = α(H) X_α` for all Cartan `H` and root vectors.
    pub fn check_root_vectors(&self) -> bool {
        for (k, &h) in self.cartan.iter().enumerate() {
            for i in 0..self.dim() {
                let expect = &self.basis[i].root[k];
                let got = self.bracket(h, i);
                let ok = if expect.is_zero() { got.is_empty() } else { got.len() == 1 && got[0].0 == i && &got[0].1 == expect };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    pub fn dual_of(&self, i: usize) -> &SVec {
        &self.dual[i]
    }

}
