//! Truncated matrix power series: an independent exponential/logarithm
//! oracle for the degree-by-degree Campbell–Hausdorff expansion.
//!
//! A [`TMat`] is a square-matrix-valued polynomial in `t` truncated at
//! `t^N`. For series with zero constant term the exponential and logarithm
//! are finite sums, so `log(exp(tA)·exp(tB))` can be computed directly from
//! matrix products and compared coefficient-by-coefficient against the
//! combinatorial expansion.

use polycalc::linalg::QMat;
use polycalc::rat::{factorial, rint, sign_pow, Rat};
use polycalc::CalcError;

/// A matrix polynomial `M₀ + M₁t + … + M_{N−1}t^{N−1}` over `ℚ[t]/(t^N)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TMat {
    order: usize,
    size: usize,
    mats: Vec<QMat>,
}

impl TMat {
    /// The zero series over `ℚ[t]/(t^order)`.
    pub fn zero(order: usize, size: usize) -> Self {
        assert!(order >= 1, "the ring needs at least one coefficient");
        TMat {
            order,
            size,
            mats: vec![QMat::zeros(size, size); order],
        }
    }

    /// The constant series `I`.
    pub fn identity(order: usize, size: usize) -> Self {
        let mut s = TMat::zero(order, size);
        s.mats[0] = QMat::identity(size);
        s
    }

    /// The single term `m·t^power`; a power at or beyond the truncation
    /// order yields zero.
    pub fn single(order: usize, size: usize, power: usize, m: QMat) -> Result<Self, CalcError> {
        if m.nrows() != size || m.ncols() != size {
            return Err(CalcError::Invalid(format!(
                "expected a {size}×{size} matrix, found {}×{}",
                m.nrows(),
                m.ncols()
            )));
        }
        let mut s = TMat::zero(order, size);
        if power < order {
            s.mats[power] = m;
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The coefficient of `t^power`.
    pub fn coeff(&self, power: usize) -> &QMat {
        assert!(power < self.order, "power {power} ≥ truncation {}", self.order);
        &self.mats[power]
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(QMat::is_zero)
    }

    fn check_compatible(&self, other: &TMat) -> Result<(), CalcError> {
        if self.order != other.order || self.size != other.size {
            return Err(CalcError::Invalid(format!(
                "mismatched series: {}×{} mod t^{} vs {}×{} mod t^{}",
                self.size, self.size, self.order, other.size, other.size, other.order
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &TMat) -> Result<TMat, CalcError> {
        self.check_compatible(other)?;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(TMat { order: self.order, size: self.size, mats })
    }

    pub fn sub(&self, other: &TMat) -> Result<TMat, CalcError> {
        self.check_compatible(other)?;
        let mats = self
            .mats
            .iter()
            .zip(&other.mats)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(TMat { order: self.order, size: self.size, mats })
    }

    pub fn scale(&self, c: &Rat) -> TMat {
        TMat {
            order: self.order,
            size: self.size,
            mats: self.mats.iter().map(|m| m.scale(c)).collect(),
        }
    }

    /// Product, truncated at `t^order`.
    pub fn mul(&self, other: &TMat) -> Result<TMat, CalcError> {
        self.check_compatible(other)?;
        let mut out = TMat::zero(self.order, self.size);
        for (i, a) in self.mats.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.mats.iter().enumerate() {
                if i + j >= self.order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                out.mats[i + j] = out.mats[i + j].add(&a.mul(b));
            }
        }
        Ok(out)
    }
}

/// Exponential of a series with zero constant term: `Σ_{k≥0} x^k / k!`.
/// The sum is finite because `x^k` has `t`-valuation at least `k`.
pub fn texp(x: &TMat) -> Result<TMat, CalcError> {
    if !x.mats[0].is_zero() {
        return Err(CalcError::Invalid(
            "the exponential needs a zero constant term to truncate".into(),
        ));
    }
    let mut acc = TMat::identity(x.order, x.size);
    let mut power = TMat::identity(x.order, x.size);
    for k in 1..x.order {
        power = power.mul(x)?;
        if power.is_zero() {
            break;
        }
        acc = acc.add(&power.scale(&factorial(k).recip()))?;
    }
    Ok(acc)
}

/// Logarithm of a series with identity constant term:
/// `Σ_{k≥1} (−1)^{k−1} (x − I)^k / k`.
pub fn tlog(x: &TMat) -> Result<TMat, CalcError> {
    let y = x.sub(&TMat::identity(x.order, x.size))?;
    if !y.mats[0].is_zero() {
        return Err(CalcError::Invalid(
            "the logarithm needs an identity constant term to truncate".into(),
        ));
    }
    let mut acc = TMat::zero(x.order, x.size);
    let mut power = TMat::identity(x.order, x.size);
    for k in 1..x.order {
        power = power.mul(&y)?;
        if power.is_zero() {
            break;
        }
        let c = sign_pow((k as i64) - 1) / rint(k as i64);
        acc = acc.add(&power.scale(&c))?;
    }
    Ok(acc)
}
