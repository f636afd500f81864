//! The cochain complex of a semicosimplicial DGLA: levels reassembled with
//! the alternating face sum.
//!
//! For a diagram `V_0, V_1, …` the cochain space in total degree `p` is
//! `⊕_n V_n^{p−n}` (the level-`n` shift compensates the simplicial
//! direction). The differential of `v ∈ V_n^{p−n}` has two parts,
//!
//! * internal: `(−1)^n d_{V_n}(v)`, staying at level `n`, and
//! * simplicial: `Σ_k (−1)^k ∂_k(v)`, landing at level `n + 1`,
//!
//! and squares to zero by the semicosimplicial identities. The cohomology of
//! this complex is the yardstick the totalization is measured against.

use mc_deform::{Carrier, GVec};
use polycalc::linalg::QMat;
use polycalc::rat::{sign_pow, Rat};
use polycalc::CalcError;

use crate::chain::ComplexSlice;
use crate::scs::ScsDGLA;

/// A homogeneous cochain: `levels[n]` is the component in `V_n^{p−n}` where
/// `p` is the total degree. Every level of the diagram is represented, zero
/// components included.
#[derive(Debug, Clone, PartialEq)]
pub struct CochainElem {
    total_degree: i64,
    levels: Vec<GVec>,
}

impl CochainElem {
    /// The zero cochain of one total degree.
    pub fn zero(scs: &ScsDGLA, total_degree: i64) -> Self {
        CochainElem {
            total_degree,
            levels: (0..scs.len())
                .map(|n| GVec::zero(total_degree - n as i64))
                .collect(),
        }
    }

    /// Wraps per-level components, validating count, degrees, and
    /// membership.
    pub fn from_levels(
        scs: &ScsDGLA,
        total_degree: i64,
        levels: Vec<GVec>,
    ) -> Result<Self, CalcError> {
        if levels.len() != scs.len() {
            return Err(CalcError::Invalid(format!(
                "cochain over {} levels needs {} components, found {}",
                scs.len(),
                scs.len(),
                levels.len()
            )));
        }
        for (n, v) in levels.iter().enumerate() {
            let expected = total_degree - n as i64;
            if v.degree != expected {
                return Err(CalcError::Invalid(format!(
                    "component at level {n} has degree {}, expected {expected}",
                    v.degree
                )));
            }
            scs.level(n)?.check(v, expected)?;
        }
        Ok(CochainElem {
            total_degree,
            levels,
        })
    }

    /// Total degree `p`.
    pub fn total_degree(&self) -> i64 {
        self.total_degree
    }

    /// The component in `V_n^{p−n}`.
    pub fn level(&self, n: usize) -> Result<&GVec, CalcError> {
        self.levels.get(n).ok_or(CalcError::IndexRange {
            index: n,
            n: self.levels.len() - 1,
        })
    }

    /// `true` when every component vanishes.
    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(GVec::is_zero)
    }

    /// Component-wise sum (degrees must agree).
    pub fn add(&self, other: &Self, scs: &ScsDGLA) -> Result<Self, CalcError> {
        if self.total_degree != other.total_degree {
            return Err(CalcError::Invalid(format!(
                "cannot add cochains of total degrees {} and {}",
                self.total_degree, other.total_degree
            )));
        }
        let levels = self
            .levels
            .iter()
            .zip(&other.levels)
            .enumerate()
            .map(|(n, (a, b))| scs.level(n)?.add(a, b))
            .collect::<Result<_, _>>()?;
        Ok(CochainElem {
            total_degree: self.total_degree,
            levels,
        })
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat, scs: &ScsDGLA) -> Result<Self, CalcError> {
        let levels = self
            .levels
            .iter()
            .enumerate()
            .map(|(n, v)| Ok(scs.level(n)?.scale(c, v)))
            .collect::<Result<_, _>>()?;
        Ok(CochainElem {
            total_degree: self.total_degree,
            levels,
        })
    }

    /// Flattens to coordinates in the canonical basis of the total-degree
    /// slice: level 0 block first, then level 1, and so on.
    pub fn coords(&self, scs: &ScsDGLA) -> Result<Vec<Rat>, CalcError> {
        let mut out = Vec::new();
        for (n, v) in self.levels.iter().enumerate() {
            out.extend(scs.level(n)?.coords_vec(v));
        }
        Ok(out)
    }
}

/// Dimension of the cochain space in one total degree.
pub fn cech_dim(scs: &ScsDGLA, total_degree: i64) -> Result<usize, CalcError> {
    let mut dim = 0;
    for n in 0..scs.len() {
        dim += scs.level(n)?.dim(total_degree - n as i64);
    }
    Ok(dim)
}

/// Unflattens coordinates in the canonical basis back to a cochain.
pub fn cochain_from_coords(
    scs: &ScsDGLA,
    total_degree: i64,
    coords: &[Rat],
) -> Result<CochainElem, CalcError> {
    if coords.len() != cech_dim(scs, total_degree)? {
        return Err(CalcError::Invalid(format!(
            "degree-{total_degree} cochain needs {} coordinates, found {}",
            cech_dim(scs, total_degree)?,
            coords.len()
        )));
    }
    let mut levels = Vec::with_capacity(scs.len());
    let mut offset = 0;
    for n in 0..scs.len() {
        let deg = total_degree - n as i64;
        let dim = scs.level(n)?.dim(deg);
        levels.push(scs.level(n)?.from_coords(deg, &coords[offset..offset + dim])?);
        offset += dim;
    }
    CochainElem::from_levels(scs, total_degree, levels)
}

/// The cochain differential: internal part `(−1)^n d` at each level plus the
/// alternating face sum `Σ_k (−1)^k ∂_k` into the next level.
pub fn cech_diff(scs: &ScsDGLA, x: &CochainElem) -> Result<CochainElem, CalcError> {
    let mut out = CochainElem::zero(scs, x.total_degree() + 1);
    for n in 0..scs.len() {
        let alg = scs.level(n)?;
        let mut component = alg.scale(&sign_pow(n as i64), &alg.diff(x.level(n)?)?);
        if n > 0 {
            let below = x.level(n - 1)?;
            for k in 0..=n {
                let face = scs.face_apply(n - 1, k, below)?;
                component = alg.add(&component, &alg.scale(&sign_pow(k as i64), &face))?;
            }
        }
        out.levels[n] = component;
    }
    Ok(out)
}

/// The matrix of the differential out of one total degree, in the canonical
/// bases of the two slices.
pub fn cech_matrix(scs: &ScsDGLA, total_degree: i64) -> Result<QMat, CalcError> {
    let src_dim = cech_dim(scs, total_degree)?;
    let dst_dim = cech_dim(scs, total_degree + 1)?;
    let mut cols = Vec::with_capacity(src_dim);
    for j in 0..src_dim {
        let mut coords = vec![polycalc::rat::rzero(); src_dim];
        coords[j] = polycalc::rat::rone();
        let basis_elem = cochain_from_coords(scs, total_degree, &coords)?;
        cols.push(cech_diff(scs, &basis_elem)?.coords(scs)?);
    }
    Ok(QMat::from_cols(cols, dst_dim))
}

/// The window of total degrees in which the cochain complex can be nonzero.
pub fn cech_degree_window(scs: &ScsDGLA) -> Result<(i64, i64), CalcError> {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for n in 0..scs.len() {
        for deg in scs.level(n)?.degrees() {
            lo = lo.min(deg + n as i64);
            hi = hi.max(deg + n as i64);
        }
    }
    if lo > hi {
        // Every level is the zero algebra.
        lo = 0;
        hi = 0;
    }
    Ok((lo, hi))
}

/// Assembles the full (bounded) cochain complex of the diagram.
pub fn cech_complex(scs: &ScsDGLA) -> Result<ComplexSlice, CalcError> {
    let (lo, hi) = cech_degree_window(scs)?;
    let dims: Vec<usize> = (lo..=hi)
        .map(|p| cech_dim(scs, p))
        .collect::<Result<_, _>>()?;
    let maps: Vec<QMat> = (lo..hi)
        .map(|p| cech_matrix(scs, p))
        .collect::<Result<_, _>>()?;
    ComplexSlice::new(lo, dims, maps)
}

/// Cohomology dimensions of the cochain complex, as
/// `(first degree, dims per degree)`.
pub fn cech_cohomology_dims(scs: &ScsDGLA) -> Result<(i64, Vec<usize>), CalcError> {
    let complex = cech_complex(scs)?;
    Ok((complex.first_degree(), complex.cohomology()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scs::tests::{circle_ser, constant_heisenberg_ser, disc_ser};
    use polycalc::rat::{rint, rone};

    #[test]
    fn circle_cohomology() {
        let scs = ScsDGLA::from_ser(&circle_ser()).unwrap();
        let (first, dims) = cech_cohomology_dims(&scs).unwrap();
        assert_eq!(first, 0);
        assert_eq!(dims, vec![1, 1]);
    }

    #[test]
    fn disc_cohomology() {
        let scs = ScsDGLA::from_ser(&disc_ser()).unwrap();
        let (first, dims) = cech_cohomology_dims(&scs).unwrap();
        assert_eq!(first, 0);
        assert_eq!(dims, vec![0, 2, 0]);
    }

    #[test]
    fn constant_heisenberg_cohomology() {
        let scs = ScsDGLA::from_ser(&constant_heisenberg_ser()).unwrap();
        let (first, dims) = cech_cohomology_dims(&scs).unwrap();
        assert_eq!(first, 0);
        assert_eq!(dims, vec![0, 1, 1]);
    }

    #[test]
    fn differential_squares_to_zero_on_every_basis_cochain() {
        for ser in [circle_ser(), disc_ser(), constant_heisenberg_ser()] {
            let scs = ScsDGLA::from_ser(&ser).unwrap();
            let (lo, hi) = cech_degree_window(&scs).unwrap();
            for p in lo..=hi {
                let dim = cech_dim(&scs, p).unwrap();
                for j in 0..dim {
                    let mut coords = vec![polycalc::rat::rzero(); dim];
                    coords[j] = rone();
                    let x = cochain_from_coords(&scs, p, &coords).unwrap();
                    let ddx = cech_diff(&scs, &cech_diff(&scs, &x).unwrap()).unwrap();
                    assert!(ddx.is_zero(), "d² ≠ 0 in degree {p}, column {j}");
                }
            }
        }
    }

    #[test]
    fn circle_differential_by_hand() {
        let scs = ScsDGLA::from_ser(&circle_ser()).unwrap();
        // δ(u0) = ∂_0(u0) − ∂_1(u0) = 0 − (a+b).
        let u0 = scs.level(0).unwrap().basis_elem("u0").unwrap();
        let x = CochainElem::from_levels(&scs, 0, vec![u0, GVec::zero(-1)]).unwrap();
        let dx = cech_diff(&scs, &x).unwrap();
        let level1 = dx.level(1).unwrap();
        assert_eq!(level1.coords.get("a"), Some(&rint(-1)));
        assert_eq!(level1.coords.get("b"), Some(&rint(-1)));
        assert!(dx.level(0).unwrap().is_zero());
    }

    #[test]
    fn coords_round_trip() {
        let scs = ScsDGLA::from_ser(&disc_ser()).unwrap();
        for p in 0..=2i64 {
            let dim = cech_dim(&scs, p).unwrap();
            for j in 0..dim {
                let mut coords = vec![polycalc::rat::rzero(); dim];
                coords[j] = rone();
                let x = cochain_from_coords(&scs, p, &coords).unwrap();
                assert_eq!(x.coords(&scs).unwrap(), coords);
            }
        }
    }

    #[test]
    fn mismatched_inputs_are_rejected() {
        let scs = ScsDGLA::from_ser(&circle_ser()).unwrap();
        let a = CochainElem::zero(&scs, 0);
        let b = CochainElem::zero(&scs, 1);
        assert!(a.add(&b, &scs).is_err());
        assert!(CochainElem::from_levels(&scs, 0, vec![GVec::zero(0)]).is_err());
        let wrong_degree = vec![GVec::zero(1), GVec::zero(-1)];
        assert!(CochainElem::from_levels(&scs, 0, wrong_degree).is_err());
        assert!(cochain_from_coords(&scs, 0, &[rone()]).is_err());
    }
}
