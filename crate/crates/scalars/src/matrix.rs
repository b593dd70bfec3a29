//! Sparse exact matrices and Gaussian elimination over cyclotomic scalars.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Scalar, ScalarError, SparseVec};

/// A `rows × cols` matrix stored column by column.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    columns: Vec<SparseVec>,
}

impl ExactMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, columns: vec![SparseVec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        ExactMatrix { rows: n, columns: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns.iter().all(|c| c.max_index().map_or(true, |m| m < rows)));
        ExactMatrix { rows, columns }
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triplets(rows: usize, cols: usize, triplets: impl IntoIterator<Item = (usize, usize, Scalar)>) -> Self {
        let mut per_col: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "entry ({r},{c}) outside {rows}x{cols}");
            per_col[c].push((r, v));
        }
        ExactMatrix { rows, columns: per_col.into_iter().map(SparseVec::from_terms).collect() }
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        let trip = rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, v)| (r, c, v.clone())));
        ExactMatrix::from_triplets(nr, nc, trip)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn into_columns(self) -> Vec<SparseVec> {
        self.columns
    }

    pub fn set_column(&mut self, c: usize, v: SparseVec) {
        self.columns[c] = v;
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.columns[c].get(r)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(SparseVec::nnz).sum()
    }

    /// Nonzero entries in canonical (column, row) order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.columns.iter().enumerate().flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (j, x) in v.iter() {
            for (i, y) in self.columns[*j].iter() {
                terms.push((*i, x * y));
            }
        }
        SparseVec::from_terms(terms)
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols(), rhs.rows, "shape mismatch in matrix product");
        ExactMatrix { rows: self.rows, columns: rhs.columns.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn add(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert!(self.rows == rhs.rows && self.cols() == rhs.cols(), "shape mismatch in matrix sum");
        ExactMatrix {
            rows: self.rows,
            columns: self.columns.iter().zip(&rhs.columns).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> ExactMatrix {
        assert!(self.rows == rhs.rows && self.cols() == rhs.cols(), "shape mismatch in matrix difference");
        ExactMatrix {
            rows: self.rows,
            columns: self.columns.iter().zip(&rhs.columns).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        ExactMatrix { rows: self.rows, columns: self.columns.iter().map(|v| v.scale(c)).collect() }
    }

    /// Row-major view: one sparse vector per row.
    pub fn row_vectors(&self) -> Vec<SparseVec> {
        let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col.iter() {
                rows[*r].push((c, v.clone()));
            }
        }
        rows.into_iter().map(SparseVec::from_terms).collect()
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix { rows: self.cols(), columns: self.row_vectors() }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(SparseVec::is_zero)
    }
}

impl std::fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ExactMatrix({}x{}, ", self.rows, self.cols())?;
        f.debug_list().entries(self.entries()).finish()?;
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixWire {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, Scalar)>,
}

impl Serialize for ExactMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MatrixWire {
            rows: self.rows,
            cols: self.cols(),
            entries: self.entries().map(|(r, c, v)| (r, c, v.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = MatrixWire::deserialize(d)?;
        if w.entries.iter().any(|(r, c, _)| *r >= w.rows || *c >= w.cols) {
            return Err(D::Error::custom("matrix entry out of range"));
        }
        Ok(ExactMatrix::from_triplets(w.rows, w.cols, w.entries))
    }
}

/// Incremental row echelon form keyed by pivot column.
///
/// Rows are inserted in order; each row is reduced against existing pivots and,
/// if nonzero, becomes the pivot for its leftmost column. The reduced row
/// echelon form of a matrix is unique, so the final result does not depend on
/// pivot-row choice.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    fn reduce_from(pivots: &BTreeMap<usize, SparseVec>, mut v: SparseVec, from: usize) -> SparseVec {
        let mut pos = from;
        loop {
            let hit = v.iter().find(|(i, _)| *i >= pos && pivots.contains_key(i)).map(|(i, c)| (*i, c.clone()));
            match hit {
                Some((i, c)) => {
                    v = v.axpy(&-c, &pivots[&i]);
                    pos = i + 1;
                }
                None => return v,
            }
        }
    }

    /// Reduces `v` against the current pivots.
    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        Self::reduce_from(&self.pivots, v, 0)
    }

    /// Inserts a row; returns its pivot column if it was independent.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let r = self.reduce(v);
        let (lead, c) = r.leading()?.clone();
        let inv = c.inv().expect("nonzero leading entry");
        self.pivots.insert(lead, r.scale(&inv));
        Some(lead)
    }

    /// Fully reduced rows, sorted by pivot column.
    pub fn into_rref(mut self) -> Vec<(usize, SparseVec)> {
        let keys: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for p in keys {
            let row = self.pivots.remove(&p).unwrap();
            let row = Self::reduce_from(&self.pivots, row, p + 1);
            self.pivots.insert(p, row);
        }
        self.pivots.into_iter().collect()
    }
}

fn rref_of_rows(rows: impl IntoIterator<Item = SparseVec>) -> Vec<(usize, SparseVec)> {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.into_rref()
}

fn kernel_from_rref(rref: &[(usize, SparseVec)], ncols: usize) -> Vec<SparseVec> {
    let mut is_pivot = vec![false; ncols];
    for (p, _) in rref {
        is_pivot[*p] = true;
    }
    let mut per_free: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
    for (f, _) in is_pivot.iter().enumerate().filter(|(_, p)| !**p) {
        per_free.insert(f, vec![(f, Scalar::one())]);
    }
    for (p, row) in rref {
        for (j, c) in row.iter() {
            if *j < ncols && !is_pivot[*j] {
                per_free.get_mut(j).unwrap().push((*p, -c));
            }
        }
    }
    per_free.into_values().map(SparseVec::from_terms).collect()
}

pub fn rank(m: &ExactMatrix) -> usize {
    let mut e = Echelon::new();
    for c in m.columns() {
        e.insert(c.clone());
    }
    e.rank()
}

/// Basis of the null space, one vector per free column in increasing order.
pub fn kernel(m: &ExactMatrix) -> Vec<SparseVec> {
    let rref = rref_of_rows(m.row_vectors());
    kernel_from_rref(&rref, m.cols())
}

/// Result of [`solve_linear`].
#[derive(Clone, Debug)]
pub struct Solution {
    /// Particular solution with free variables set to zero.
    pub solution: ExactMatrix,
    pub kernel_basis: Vec<SparseVec>,
}

/// Solves `m · X = rhs` column by column.
pub fn solve_linear(m: &ExactMatrix, rhs: &ExactMatrix) -> Result<Solution, ScalarError> {
    if m.rows() != rhs.rows() {
        return Err(ScalarError::Shape(format!(
            "matrix has {} rows but right-hand side has {}",
            m.rows(),
            rhs.rows()
        )));
    }
    let n = m.cols();
    let mut rows = m.row_vectors();
    for (r, row) in rhs.row_vectors().into_iter().enumerate() {
        if !row.is_zero() {
            rows[r] = SparseVec::from_terms(
                rows[r].iter().cloned().chain(row.iter().map(|(j, c)| (j + n, c.clone()))).collect(),
            );
        }
    }
    let rref = rref_of_rows(rows);
    if rref.iter().any(|(p, _)| *p >= n) {
        return Err(ScalarError::NoSolution);
    }
    let mut trip = Vec::new();
    for (p, row) in &rref {
        for (j, c) in row.iter() {
            if *j >= n {
                trip.push((*p, j - n, c.clone()));
            }
        }
    }
    Ok(Solution { solution: ExactMatrix::from_triplets(n, rhs.cols(), trip), kernel_basis: kernel_from_rref(&rref, n) })
}

pub fn inverse(m: &ExactMatrix) -> Result<ExactMatrix, ScalarError> {
    if m.rows() != m.cols() {
        return Err(ScalarError::Shape("inverse of a non-square matrix".into()));
    }
    let s = match solve_linear(m, &ExactMatrix::identity(m.rows())) {
        Err(ScalarError::NoSolution) => return Err(ScalarError::Singular),
        r => r?,
    };
    if !s.kernel_basis.is_empty() {
        return Err(ScalarError::Singular);
    }
    Ok(s.solution)
}

/// A subspace of an ambient coordinate space with its reduced echelon basis.
///
/// Coordinates of a member are read off at the pivot positions.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<SparseVec>,
    pivots: Vec<usize>,
    slot: Vec<u32>,
    all_unit: bool,
}

const NO_SLOT: u32 = u32::MAX;

impl Subspace {
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = SparseVec>) -> Self {
        let rref = rref_of_rows(vectors);
        let mut slot = vec![NO_SLOT; ambient];
        let mut pivots = Vec::with_capacity(rref.len());
        let mut basis = Vec::with_capacity(rref.len());
        for (k, (p, v)) in rref.into_iter().enumerate() {
            slot[p] = k as u32;
            pivots.push(p);
            basis.push(v);
        }
        let all_unit = basis.iter().all(|b| b.nnz() == 1);
        Subspace { ambient, basis, pivots, slot, all_unit }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, (0..ambient).map(SparseVec::unit))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// True when every basis vector is a standard unit vector.
    pub fn is_coordinate(&self) -> bool {
        self.all_unit
    }

    pub fn embed(&self, coords: &SparseVec) -> SparseVec {
        if self.all_unit {
            return SparseVec::from_terms(coords.iter().map(|(k, c)| (self.pivots[*k], c.clone())).collect());
        }
        let mut out = SparseVec::new();
        for (k, c) in coords.iter() {
            out = out.axpy(c, &self.basis[*k]);
        }
        out
    }

    /// Coordinates of `v`, or `None` if `v` lies outside the subspace.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        if self.all_unit {
            let mut out = Vec::with_capacity(v.nnz());
            for (i, c) in v.iter() {
                let s = self.slot[*i];
                if s == NO_SLOT {
                    return None;
                }
                out.push((s as usize, c.clone()));
            }
            return Some(SparseVec::from_terms(out));
        }
        let coords: SparseVec = v
            .iter()
            .filter(|(i, _)| self.slot[*i] != NO_SLOT)
            .map(|(i, c)| (self.slot[*i] as usize, c.clone()))
            .collect();
        if &self.embed(&coords) == v {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.coords(v).is_some()
    }

    /// Exact equality of subspaces of the same ambient space.
    pub fn same_as(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}
