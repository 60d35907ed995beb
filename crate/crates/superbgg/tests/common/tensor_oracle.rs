//! Homology of `n̄` with coefficients, from the raw boundary recursion on
//! `T(n̄) ⊗ V` projected through the super-antisymmetrizer. Shares nothing with the
//! library's normal-form chain assembly beyond the algebra and module data.

use num_traits::Zero;
use superbgg::algebra::LieSuperalgebra;
use superbgg::linalg::{self, Mat};
use superbgg::modules::Module;
use superbgg::scalar::{one, sign, zero, Q};

pub struct Tensors<'a> {
    pub g: &'a LieSuperalgebra,
    pub nbar: Vec<usize>,
    pub module: &'a Module,
}

impl Tensors<'_> {
    fn d(&self) -> usize {
        self.nbar.len()
    }

    fn dv(&self) -> usize {
        self.module.dim()
    }

    fn odd(&self, a: usize) -> usize {
        self.g.parity(self.nbar[a]).bit()
    }

    pub fn dim(&self, k: usize) -> usize {
        self.d().pow(k as u32) * self.dv()
    }

    fn index(&self, word: &[usize], v: usize) -> usize {
        word.iter().fold(0, |acc, &a| acc * self.d() + a) * self.dv() + v
    }

    fn split(&self, i: usize, k: usize) -> (Vec<usize>, usize) {
        let v = i % self.dv();
        let mut rest = i / self.dv();
        let mut w = vec![0; k];
        for p in (0..k).rev() {
            w[p] = rest % self.d();
            rest /= self.d();
        }
        (w, v)
    }

    /// `x · (y_1 ⊗ … ⊗ y_m ⊗ v)`, acting on every factor with Koszul signs.
    fn act(&self, x: usize, rest: &[usize], v: usize, c: &Q, out: &mut [Q]) {
        let mut before = 0;
        for i in 0..rest.len() {
            let s = sign(self.odd(x) * before);
            for (z, b) in self.g.bracket(self.nbar[x], self.nbar[rest[i]]) {
                let pos = self.nbar.iter().position(|y| y == z).expect("n̄ is a subalgebra");
                let mut w = rest.to_vec();
                w[i] = pos;
                out[self.index(&w, v)] += c * b * &s;
            }
            before += self.odd(rest[i]);
        }
        let s = sign(self.odd(x) * before);
        for (u, b) in self.module.act(self.nbar[x], &[(v, one())]) {
            out[self.index(rest, u)] += c * &b * &s;
        }
    }

    /// `B(x ⊗ f) = −x·f − x ⊗ B(f)`.
    fn boundary(&self, word: &[usize], v: usize) -> Vec<Q> {
        let k = word.len();
        if k == 0 {
            return Vec::new();
        }
        let mut out = vec![zero(); self.dim(k - 1)];
        self.act(word[0], &word[1..], v, &-one(), &mut out);
        let inner = self.boundary(&word[1..], v);
        for (j, c) in inner.iter().enumerate() {
            if !c.is_zero() {
                let (tail, u) = self.split(j, k - 2);
                let mut w = vec![word[0]];
                w.extend(tail);
                out[self.index(&w, u)] -= c;
            }
        }
        out
    }

    pub fn boundary_matrix(&self, k: usize) -> Mat {
        let mut m = linalg::zeros(self.dim(k - 1), self.dim(k));
        for j in 0..self.dim(k) {
            let (w, v) = self.split(j, k);
            for (i, c) in self.boundary(&w, v).into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        m
    }

    pub fn antisymmetrizer(&self, k: usize) -> Mat {
        let n = self.dim(k);
        let mut m = linalg::zeros(n, n);
        let perms = permutations(k);
        for j in 0..n {
            let (w, v) = self.split(j, k);
            for perm in &perms {
                let mut s = one();
                for a in 0..k {
                    for b in a + 1..k {
                        if perm[a] > perm[b] {
                            s *= -sign(self.odd(w[perm[a]]) * self.odd(w[perm[b]]));
                        }
                    }
                }
                let image: Vec<usize> = perm.iter().map(|&p| w[p]).collect();
                m[self.index(&image, v)][j] += s;
            }
        }
        m
    }

    /// `dim H_k` for `k ≤ kmax`, together with whether `B²` vanishes on the
    /// antisymmetric tensors.
    pub fn homology_dims(&self, kmax: usize) -> (Vec<usize>, bool) {
        let anti: Vec<Mat> = (0..=kmax + 1).map(|k| self.antisymmetrizer(k)).collect();
        let restricted: Vec<Option<Mat>> =
            (0..=kmax + 1).map(|k| (k > 0).then(|| product(&anti[k - 1], &product(&self.boundary_matrix(k), &anti[k])))).collect();
        let rank = |k: usize| restricted[k].as_ref().map(|m| linalg::rank(m, self.dim(k))).unwrap_or(0);
        let mut squares = true;
        for k in 2..=kmax + 1 {
            let (a, b) = (restricted[k - 1].as_ref().unwrap(), restricted[k].as_ref().unwrap());
            squares &= linalg::is_zero_mat(&product(a, b));
        }
        let dims = (0..=kmax).map(|k| linalg::rank(&anti[k], self.dim(k)) - rank(k) - rank(k + 1)).collect();
        (dims, squares)
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for i in 0..=p.len() {
            let mut x = p.clone();
            x.insert(i, k - 1);
            out.push(x);
        }
    }
    out
}

fn product(a: &Mat, b: &Mat) -> Mat {
    let inner = b.len();
    let cols = b.first().map(|r| r.len()).unwrap_or(0);
    linalg::mat_mul(a, b, inner, cols)
}
