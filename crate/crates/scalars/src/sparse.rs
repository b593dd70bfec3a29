//! Sparse coefficient vectors indexed by basis position.

use serde::{Deserialize, Serialize};

use crate::Scalar;

/// Sorted `(index, coefficient)` pairs with no stored zeros.
#[derive(Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SparseVec(Vec<(usize, Scalar)>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(Vec::new())
    }

    pub fn unit(i: usize) -> Self {
        SparseVec(vec![(i, Scalar::one())])
    }

    pub fn single(i: usize, c: Scalar) -> Self {
        if c.is_zero() {
            SparseVec::new()
        } else {
            SparseVec(vec![(i, c)])
        }
    }

    /// Canonicalizes arbitrary terms: sorts, merges repeats, drops zeros.
    pub fn from_terms(mut terms: Vec<(usize, Scalar)>) -> Self {
        if terms.len() <= 1 {
            terms.retain(|(_, c)| !c.is_zero());
            return SparseVec(terms);
        }
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(terms.len());
        for (i, c) in terms {
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += &c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        SparseVec(out)
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec(
            values.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect(),
        )
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); dim];
        for (i, c) in &self.0 {
            out[*i] = c.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<(usize, Scalar)> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Scalar)> {
        self.0.iter()
    }

    pub fn get(&self, i: usize) -> Scalar {
        match self.0.binary_search_by_key(&i, |t| t.0) {
            Ok(p) => self.0[p].1.clone(),
            Err(_) => Scalar::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(usize, Scalar)> {
        self.0.first()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.last().map(|t| t.0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return SparseVec::new();
        }
        if c.is_one() {
            return self.clone();
        }
        SparseVec(self.0.iter().map(|(i, x)| (*i, x * c)).collect())
    }

    pub fn neg(&self) -> Self {
        SparseVec(self.0.iter().map(|(i, x)| (*i, -x)).collect())
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Scalar, other: &SparseVec) -> Self {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, c * y));
                        b.next();
                    } else {
                        let v = x + &(c * y);
                        if !v.is_zero() {
                            out.push((*i, v));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, c * y));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec(out)
    }

    pub fn add(&self, other: &SparseVec) -> Self {
        self.axpy(&Scalar::one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> Self {
        self.axpy(&Scalar::from_int(-1), other)
    }

    /// Shifts every index by `offset * stride + k` style maps.
    pub fn map_indices(&self, f: impl Fn(usize) -> usize) -> Self {
        SparseVec::from_terms(self.0.iter().map(|(i, c)| (f(*i), c.clone())).collect())
    }
}

impl std::fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_map().entries(self.0.iter().map(|(i, c)| (i, c))).finish()
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Scalar)>>(iter: T) -> Self {
        SparseVec::from_terms(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn canonical_merge() {
        let v = SparseVec::from_terms(vec![(3, s(1)), (1, s(2)), (3, s(-1)), (0, s(0))]);
        assert_eq!(v.entries(), &[(1, s(2))]);
    }

    #[test]
    fn axpy_cancels() {
        let a = SparseVec::from_terms(vec![(0, s(1)), (2, s(3))]);
        let b = SparseVec::from_terms(vec![(2, s(1)), (5, s(1))]);
        let c = a.axpy(&s(-3), &b);
        assert_eq!(c.entries(), &[(0, s(1)), (5, s(-3))]);
        assert_eq!(c.get(5), s(-3));
        assert!(c.get(2).is_zero());
    }
}
