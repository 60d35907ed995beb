//! Dense exact linear algebra over the rationals.
//!
//! Matrices are row-major `Vec<Vec<Q>>`; subspaces are lists of vectors in a
//! fixed ambient dimension.

use crate::scalar::{one, zero, Q};
use num_traits::{One, Zero};

pub type Mat = Vec<Vec<Q>>;
pub type Vector = Vec<Q>;

pub fn zeros(rows: usize, cols: usize) -> Mat {
    vec![vec![zero(); cols]; rows]
}

pub fn identity(n: usize) -> Mat {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = one();
    }
    m
}

pub fn is_zero_mat(a: &Mat) -> bool {
    a.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

pub fn transpose(a: &Mat, cols: usize) -> Mat {
    let mut t = zeros(cols, a.len());
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if !x.is_zero() {
                t[j][i] = x.clone();
            }
        }
    }
    t
}

pub fn mat_mul(a: &Mat, b: &Mat, inner: usize, cols: usize) -> Mat {
    let mut c = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate().take(inner) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[k].iter().enumerate() {
                if !y.is_zero() {
                    c[i][j] += x * y;
                }
            }
        }
    }
    c
}

pub fn mat_vec(a: &Mat, v: &[Q]) -> Vector {
    a.iter()
        .map(|row| {
            let mut s = zero();
            for (x, y) in row.iter().zip(v) {
                if !x.is_zero() && !y.is_zero() {
                    s += x * y;
                }
            }
            s
        })
        .collect()
}

/// Reduces `a` to reduced row echelon form in place and returns the pivot columns.
pub fn rref(a: &mut Mat, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = one() / &a[r][c];
        if !inv.is_one() {
            for x in a[r].iter_mut().skip(c) {
                if !x.is_zero() {
                    *x *= &inv;
                }
            }
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (j, y) in pivot_row.iter().enumerate().skip(c) {
                if !y.is_zero() {
                    row[j] -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &Mat, cols: usize) -> usize {
    if a.is_empty() || cols == 0 {
        return 0;
    }
    let mut m = a.clone();
    rref(&mut m, cols).len()
}

/// Basis of `{x : a x = 0}`.
pub fn kernel(a: &Mat, cols: usize) -> Vec<Vector> {
    let mut m = a.clone();
    let pivots = rref(&mut m, cols);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![zero(); cols];
        v[free] = one();
        for (r, &p) in pivots.iter().enumerate() {
            if !m[r][free].is_zero() {
                v[p] = -m[r][free].clone();
            }
        }
        out.push(v);
    }
    out
}

/// Indices of a maximal independent subset of `vectors`, chosen first-come.
pub fn independent_subset(vectors: &[Vector], dim: usize) -> Vec<usize> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let mut m = zeros(dim, vectors.len());
    for (j, v) in vectors.iter().enumerate() {
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                m[i][j] = x.clone();
            }
        }
    }
    rref(&mut m, vectors.len())
}

/// Reduced echelon basis of the span of `vectors`.
pub fn span_basis(vectors: &[Vector], dim: usize) -> Vec<Vector> {
    let mut m: Mat = vectors.to_vec();
    let p = rref(&mut m, dim);
    m.truncate(p.len());
    m
}

pub fn span_dim(vectors: &[Vector], dim: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&vectors.to_vec(), dim)
}

/// Basis of `span(u) ∩ span(v)`.
pub fn intersect(u: &[Vector], v: &[Vector], dim: usize) -> Vec<Vector> {
    if u.is_empty() || v.is_empty() {
        return Vec::new();
    }
    let cols = u.len() + v.len();
    let mut m = zeros(dim, cols);
    for (j, x) in u.iter().enumerate() {
        for i in 0..dim {
            m[i][j] = x[i].clone();
        }
    }
    for (j, x) in v.iter().enumerate() {
        for i in 0..dim {
            m[i][u.len() + j] = -x[i].clone();
        }
    }
    let ker = kernel(&m, cols);
    let vecs: Vec<Vector> = ker
        .iter()
        .map(|c| {
            let mut w = vec![zero(); dim];
            for (j, x) in u.iter().enumerate() {
                if c[j].is_zero() {
                    continue;
                }
                for i in 0..dim {
                    if !x[i].is_zero() {
                        w[i] += &c[j] * &x[i];
                    }
                }
            }
            w
        })
        .collect();
    span_basis(&vecs, dim)
}

pub fn intersection_dim(u: &[Vector], v: &[Vector], dim: usize) -> usize {
    if u.is_empty() || v.is_empty() {
        return 0;
    }
    let mut all = u.to_vec();
    all.extend_from_slice(v);
    span_dim(u, dim) + span_dim(v, dim) - span_dim(&all, dim)
}

/// True iff every vector of `u` lies in `span(v)`.
pub fn contained(u: &[Vector], v: &[Vector], dim: usize) -> bool {
    if u.is_empty() {
        return true;
    }
    let mut all = v.to_vec();
    all.extend_from_slice(u);
    span_dim(v, dim) == span_dim(&all, dim)
}

/// Coordinates of `x` in the (independent) family `basis`, if it lies in the span.
pub fn coordinates(basis: &[Vector], x: &[Q], dim: usize) -> Option<Vector> {
    let n = basis.len();
    let mut m = zeros(dim, n + 1);
    for i in 0..dim {
        for (j, b) in basis.iter().enumerate() {
            m[i][j] = b[i].clone();
        }
        m[i][n] = x[i].clone();
    }
    let piv = rref(&mut m, n + 1);
    if piv.last() == Some(&n) {
        return None;
    }
    let mut c = vec![zero(); n];
    for (r, &p) in piv.iter().enumerate() {
        c[p] = m[r][n].clone();
    }
    Some(c)
}

pub fn inverse(a: &Mat) -> Option<Mat> {
    let n = a.len();
    let mut m = zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            m[i][j] = a[i][j].clone();
        }
        m[i][n + i] = one();
    }
    let piv = rref(&mut m, 2 * n);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(a: &Mat) -> Q {
    let n = a.len();
    let mut m = a.clone();
    let mut det = one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        let inv = one() / &m[c][c];
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..n {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    det
}

/// `a^e` for a square matrix.
pub fn mat_pow(a: &Mat, mut e: usize) -> Mat {
    let n = a.len();
    let mut result = identity(n);
    let mut base = a.clone();
    while e > 0 {
        if e & 1 == 1 {
            result = mat_mul(&result, &base, n, n);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base, n, n);
        }
    }
    result
}

/// Sylvester-style check that all leading pivots of a symmetric matrix are positive.
pub fn is_positive_definite(a: &Mat) -> bool {
    let n = a.len();
    let mut m = a.clone();
    for c in 0..n {
        if m[c][c] <= zero() {
            return false;
        }
        let inv = one() / &m[c][c];
        for i in c + 1..n {
            if m[i][c].is_zero() {
                continue;
            }
            let f = &m[i][c] * &inv;
            for j in c..n {
                let t = &f * &m[c][j];
                m[i][j] -= t;
            }
        }
    }
    true
}


/// Incrementally maintained echelon basis of a growing span.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vector)>,
}

impl Echelon {
    pub fn new(vectors: &[Vector]) -> Self {
        let mut e = Echelon::default();
        for v in vectors {
            e.insert(v.clone());
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Residual of `x` after elimination against the stored rows.
    pub fn reduce(&self, mut x: Vector) -> Vector {
        for (p, row) in &self.rows {
            if x[*p].is_zero() {
                continue;
            }
            let f = x[*p].clone();
            for (xi, ri) in x.iter_mut().zip(row).skip(*p) {
                if !ri.is_zero() {
                    *xi -= &f * ri;
                }
            }
        }
        x
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.reduce(x.to_vec()).iter().all(Q::is_zero)
    }

    /// Adds `x` to the span; returns whether the span grew.
    pub fn insert(&mut self, x: Vector) -> bool {
        let mut r = self.reduce(x);
        let Some(p) = r.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = one() / &r[p];
        for c in r.iter_mut().skip(p) {
            *c *= &inv;
        }
        self.rows.push((p, r));
        true
    }
}
