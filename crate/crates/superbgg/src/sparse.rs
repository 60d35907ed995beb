//! Sparse rational vectors keyed by basis index.

use crate::scalar::Q;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Sorted `(index, coefficient)` pairs with no zero coefficients.
pub type SVec = Vec<(usize, Q)>;

/// Accumulator for building sparse vectors.
#[derive(Clone, Debug, Default)]
pub struct Acc(pub BTreeMap<usize, Q>);

impl Acc {
    pub fn new() -> Self {
        Acc(BTreeMap::new())
    }

    pub fn add(&mut self, i: usize, c: &Q) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(i).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&i);
        }
    }

    pub fn add_scaled(&mut self, v: &[(usize, Q)], s: &Q) {
        if s.is_zero() {
            return;
        }
        for (i, c) in v {
            self.add(*i, &(c * s));
        }
    }

    pub fn finish(self) -> SVec {
        self.0.into_iter().collect()
    }
}

pub fn scale(v: &[(usize, Q)], s: &Q) -> SVec {
    if s.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, c)| (*i, c * s)).collect()
}

pub fn unit(i: usize) -> SVec {
    vec![(i, crate::scalar::one())]
}

pub fn to_dense(v: &[(usize, Q)], dim: usize) -> Vec<Q> {
    let mut d = vec![Q::zero(); dim];
    for (i, c) in v {
        d[*i] = c.clone();
    }
    d
}

pub fn from_dense(v: &[Q]) -> SVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

pub fn get(v: &[(usize, Q)], i: usize) -> Q {
    match v.binary_search_by_key(&i, |(j, _)| *j) {
        Ok(p) => v[p].1.clone(),
        Err(_) => Q::zero(),
    }
}
