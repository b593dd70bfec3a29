//! Linear maps out of tensor products of basis-indexed spaces.

use hp_scalars::{ExactMatrix, SparseVec};
use serde::{Deserialize, Serialize};

/// A linear map `V_1 ⊗ … ⊗ V_p → W`. Columns are indexed by the flattened
/// source tuple, first factor most significant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinMap {
    pub sources: Vec<usize>,
    pub target: usize,
    pub matrix: ExactMatrix,
}

impl LinMap {
    pub fn new(sources: Vec<usize>, target: usize, matrix: ExactMatrix) -> Self {
        assert_eq!(matrix.rows(), target, "target dimension mismatch");
        assert_eq!(matrix.cols(), sources.iter().product::<usize>(), "source dimension mismatch");
        LinMap { sources, target, matrix }
    }

    pub fn zero(sources: Vec<usize>, target: usize) -> Self {
        let n = sources.iter().product();
        LinMap { sources, target, matrix: ExactMatrix::zero(target, n) }
    }

    /// Builds the map from its values on basis tuples.
    pub fn from_fn(sources: Vec<usize>, target: usize, f: impl Fn(&[usize]) -> SparseVec) -> Self {
        let n: usize = sources.iter().product();
        let mut cols = Vec::with_capacity(n);
        let mut idx = vec![0usize; sources.len()];
        for _ in 0..n {
            cols.push(f(&idx));
            for k in (0..sources.len()).rev() {
                idx[k] += 1;
                if idx[k] < sources[k] {
                    break;
                }
                idx[k] = 0;
            }
        }
        LinMap::new(sources, target, ExactMatrix::from_columns(target, cols))
    }

    pub fn from_columns(sources: Vec<usize>, target: usize, cols: Vec<SparseVec>) -> Self {
        LinMap::new(sources, target, ExactMatrix::from_columns(target, cols))
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn col_index(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.sources.len());
        tuple.iter().zip(&self.sources).fold(0, |acc, (i, d)| acc * d + i)
    }

    pub fn split_index(&self, mut col: usize) -> Vec<usize> {
        let mut out = vec![0; self.sources.len()];
        for k in (0..self.sources.len()).rev() {
            out[k] = col % self.sources[k];
            col /= self.sources[k];
        }
        out
    }

    /// Value on a basis tuple.
    pub fn at(&self, tuple: &[usize]) -> &SparseVec {
        self.matrix.column(self.col_index(tuple))
    }

    pub fn columns(&self) -> &[SparseVec] {
        self.matrix.columns()
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.matrix.apply(v)
    }
}
