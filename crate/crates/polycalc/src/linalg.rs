//! Exact linear algebra over the rationals.
//!
//! Everything works on dense row-major matrices of `Rat` and is fully
//! deterministic: row reduction always picks, for each column scanned left to
//! right, the first row with a nonzero entry (lexicographic pivoting), so
//! kernel bases, particular solutions, and quotient representatives are
//! reproducible across runs and platforms.

use num::traits::Zero;

use crate::rat::{rone, rzero, Rat};

/// Dense rational matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl QMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![rzero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, rone());
        }
        m
    }

    /// Builds from rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        QMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_cols(cols: Vec<Vec<Rat>>, nrows: usize) -> Self {
        let c = cols.len();
        let mut m = QMat::zeros(nrows, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), nrows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        QMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        QMat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Rat) -> QMat {
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = QMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a.clone() * b.clone());
                }
            }
        }
        out
    }

    /// Matrix–vector product (column vector).
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = rzero();
                for (j, vj) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !vj.is_zero() {
                        acc += a.clone() * vj.clone();
                    }
                }
                acc
            })
            .collect()
    }

    /// Reduced row echelon form together with the pivot columns, computed
    /// with lexicographic pivoting.
    pub fn rref(&self) -> (QMat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r >= m.rows {
                break;
            }
            // first nonzero entry at or below row r
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    let a = m.get(r, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = rone() / m.get(r, c).clone();
            for j in 0..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j).clone() - factor.clone() * m.get(r, j).clone();
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel: one vector per free column, free variable
    /// set to 1, in ascending column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut v = vec![rzero(); self.cols];
            v[f] = rone();
            for (row_idx, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(row_idx, f).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// A particular solution of `self · x = rhs` with all free variables set
    /// to zero, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(rhs.len(), self.rows, "rhs length mismatch");
        let mut aug = QMat::zeros(self.rows, self.cols + 1);
        for (i, r) in rhs.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, r.clone());
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the augmented column: inconsistent
        }
        let mut x = vec![rzero(); self.cols];
        for (row_idx, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(row_idx, self.cols).clone();
        }
        Some(x)
    }
}

/// Incremental row-space tracker: feeds vectors one at a time, keeping a
/// reduced spanning set; reports whether each vector enlarged the span.
#[derive(Debug, Clone, Default)]
pub struct SpanTracker {
    rows: Vec<Vec<Rat>>, // reduced, each begins with a 1 in its pivot column
}

impl SpanTracker {
    pub fn new() -> Self {
        SpanTracker::default()
    }

    fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut v = v.to_vec();
        for row in &self.rows {
            let pc = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("stored rows are nonzero");
            if !v[pc].is_zero() {
                let factor = v[pc].clone();
                for (a, b) in v.iter_mut().zip(row) {
                    *a -= factor.clone() * b.clone();
                }
            }
        }
        v
    }

    /// Returns `true` (and remembers the vector) if it is independent of the
    /// span so far.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        let mut red = self.reduce(v);
        let Some(pc) = red.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = rone() / red[pc].clone();
        for a in red.iter_mut() {
            *a = a.clone() * inv.clone();
        }
        // Back-substitute into existing rows to keep reduction cheap.
        for row in self.rows.iter_mut() {
            if !row[pc].is_zero() {
                let factor = row[pc].clone();
                for (a, b) in row.iter_mut().zip(&red) {
                    *a -= factor.clone() * b.clone();
                }
            }
        }
        self.rows.push(red);
        self.rows.sort_by_key(|r| {
            r.iter()
                .position(|x| !x.is_zero())
                .expect("rows stay nonzero")
        });
        true
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// Representatives of `span(cocycles) / span(boundaries)`: the subset of
/// `cocycles`, in order, that enlarges the span beyond the boundaries.
pub fn quotient_representatives(cocycles: &[Vec<Rat>], boundaries: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let mut tracker = SpanTracker::new();
    for b in boundaries {
        tracker.insert(b);
    }
    let mut reps = Vec::new();
    for c in cocycles {
        if tracker.insert(c) {
            reps.push(c.clone());
        }
    }
    reps
}
