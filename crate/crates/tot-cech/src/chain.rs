//! Exact cohomology of bounded cochain complexes of finite-dimensional
//! rational vector spaces.

use polycalc::linalg::QMat;
use polycalc::CalcError;

/// A bounded cochain complex: `dims[i]` is the dimension of the space in
/// degree `first_degree + i` and `maps[i]` is the differential out of it
/// (rows indexed by the next space). Everything outside the stored window is
/// zero. Validated at construction: matrix shapes chain together and
/// consecutive differentials compose to zero.
#[derive(Debug, Clone)]
pub struct ComplexSlice {
    first_degree: i64,
    dims: Vec<usize>,
    maps: Vec<QMat>,
}

impl ComplexSlice {
    /// Builds a complex, checking shapes and `d² = 0`.
    ///
    /// `maps.len()` must be `dims.len() − 1` (the differential out of the
    /// last stored space is zero because the next space is zero).
    pub fn new(first_degree: i64, dims: Vec<usize>, maps: Vec<QMat>) -> Result<Self, CalcError> {
        if dims.is_empty() {
            return Err(CalcError::Invalid("complex needs at least one space".into()));
        }
        if maps.len() + 1 != dims.len() {
            return Err(CalcError::Invalid(format!(
                "{} spaces need {} differentials, found {}",
                dims.len(),
                dims.len() - 1,
                maps.len()
            )));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.ncols() != dims[i] || m.nrows() != dims[i + 1] {
                return Err(CalcError::Invalid(format!(
                    "differential {i} has shape {}×{}, expected {}×{}",
                    m.nrows(),
                    m.ncols(),
                    dims[i + 1],
                    dims[i]
                )));
            }
        }
        for i in 0..maps.len().saturating_sub(1) {
            if !maps[i + 1].mul(&maps[i]).is_zero() {
                return Err(CalcError::Invalid(format!(
                    "differentials {i} and {} do not compose to zero",
                    i + 1
                )));
            }
        }
        Ok(ComplexSlice {
            first_degree,
            dims,
            maps,
        })
    }

    /// Degree of the first stored space.
    pub fn first_degree(&self) -> i64 {
        self.first_degree
    }

    /// Dimensions of the stored spaces.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Cohomology dimensions, one per stored degree:
    /// `dim H^i = dim ker(d_i) − rank(d_{i−1})`, with the differentials
    /// beyond the stored window taken to be zero.
    pub fn cohomology(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.maps.iter().map(QMat::rank).collect();
        (0..self.dims.len())
            .map(|i| {
                let out_rank = if i < ranks.len() { ranks[i] } else { 0 };
                let in_rank = if i > 0 { ranks[i - 1] } else { 0 };
                self.dims[i] - out_rank - in_rank
            })
            .collect()
    }
}

/// Builds the complex and returns its cohomology dimensions in one call.
pub fn complex_cohomology(
    first_degree: i64,
    dims: Vec<usize>,
    maps: Vec<QMat>,
) -> Result<Vec<usize>, CalcError> {
    Ok(ComplexSlice::new(first_degree, dims, maps)?.cohomology())
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycalc::rat::{rat, rint, rzero};

    #[test]
    fn identity_complex_is_acyclic() {
        let h = complex_cohomology(0, vec![1, 1], vec![QMat::identity(1)]).unwrap();
        assert_eq!(h, vec![0, 0]);
    }

    #[test]
    fn zero_maps_give_full_cohomology() {
        let h = complex_cohomology(-1, vec![2, 3], vec![QMat::zeros(3, 2)]).unwrap();
        assert_eq!(h, vec![2, 3]);
    }

    #[test]
    fn polynomial_interval_complex() {
        // 𝕂[t]_{≤3} → 𝕂[t]_{≤2}·dt by d/dt: constants survive in degree 0.
        let d = QMat::from_rows(vec![
            vec![rzero(), rint(1), rzero(), rzero()],
            vec![rzero(), rzero(), rint(2), rzero()],
            vec![rzero(), rzero(), rzero(), rint(3)],
        ]);
        let h = complex_cohomology(0, vec![4, 3], vec![d]).unwrap();
        assert_eq!(h, vec![1, 0]);
    }

    #[test]
    fn three_term_exactness() {
        // 0 → ℚ → ℚ² → ℚ → 0 exact: x ↦ (x,x), (a,b) ↦ a−b.
        let d0 = QMat::from_rows(vec![vec![rint(1)], vec![rint(1)]]);
        let d1 = QMat::from_rows(vec![vec![rint(1), rint(-1)]]);
        let h = complex_cohomology(0, vec![1, 2, 1], vec![d0, d1]).unwrap();
        assert_eq!(h, vec![0, 0, 0]);
    }

    #[test]
    fn square_nonzero_is_rejected() {
        let d0 = QMat::from_rows(vec![vec![rint(1)]]);
        let d1 = QMat::from_rows(vec![vec![rat(1, 2)]]);
        let err = complex_cohomology(0, vec![1, 1, 1], vec![d0, d1]).unwrap_err();
        assert!(err.to_string().contains("compose to zero"), "{err}");
    }

    #[test]
    fn shape_mismatches_are_rejected() {
        let err = complex_cohomology(0, vec![1, 2], vec![QMat::identity(1)]).unwrap_err();
        assert!(err.to_string().contains("shape"), "{err}");
        let err = complex_cohomology(0, vec![1, 1], vec![]).unwrap_err();
        assert!(err.to_string().contains("differentials"), "{err}");
        let err = complex_cohomology(0, vec![], vec![]).unwrap_err();
        assert!(err.to_string().contains("at least one"), "{err}");
    }
}
