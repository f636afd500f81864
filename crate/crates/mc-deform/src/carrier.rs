//! Carrier arenas: the differential graded Lie algebras that house
//! Maurer–Cartan and gauge elements.
//!
//! A carrier fixes the element type, the grading, the differential, and the
//! bracket. Three arenas are provided:
//!
//! * [`PvfCarrier`] — polyvector fields on an affine chart with the
//!   Schouten–Nijenhuis bracket and the differential `[π,·]`; the carrier
//!   degree of a `k`-vector is `k − 1`, so gauge elements are vector fields
//!   and Maurer–Cartan elements are bivectors. Optionally constrained to the
//!   subalgebra of fields tangential to the coordinate subspace germ.
//! * [`MatCarrier`] — square rational matrices under the commutator,
//!   concentrated in degree 0 with zero differential; the independent arena
//!   for the Baker–Campbell–Hausdorff oracle.
//! * [`crate::findgla::FinDGLA`] — explicit finite-dimensional structure
//!   constants, validated at load time.

use polycalc::coiso::{in_lz, CoisoSetup};
use polycalc::linalg::QMat;
use polycalc::ops::{lichnerowicz, schouten};
use polycalc::rat::Rat;
use polycalc::{CalcError, PVF};

/// A differential graded Lie algebra presented operationally.
///
/// Degrees are integers; all operations are exact. Implementations must
/// satisfy the DGLA axioms — graded antisymmetry, graded Jacobi, `d² = 0`,
/// and the graded Leibniz rule for `d` — which the identity pools in
/// [`crate::verify`] check on concrete instances.
pub trait Carrier {
    type Elt: Clone + PartialEq + std::fmt::Debug + Send + Sync;

    /// The zero element of the given degree.
    fn zero(&self, degree: i64) -> Self::Elt;

    fn is_zero(&self, e: &Self::Elt) -> bool;

    /// Validates that `e` is a legal element of the carrier of the given
    /// homogeneous degree (zero passes every degree).
    fn check(&self, e: &Self::Elt, degree: i64) -> Result<(), CalcError>;

    fn add(&self, a: &Self::Elt, b: &Self::Elt) -> Result<Self::Elt, CalcError>;

    fn scale(&self, c: &Rat, a: &Self::Elt) -> Self::Elt;

    fn bracket(&self, a: &Self::Elt, b: &Self::Elt) -> Result<Self::Elt, CalcError>;

    fn diff(&self, a: &Self::Elt) -> Result<Self::Elt, CalcError>;

    fn sub(&self, a: &Self::Elt, b: &Self::Elt) -> Result<Self::Elt, CalcError> {
        self.add(a, &self.scale(&polycalc::rat::rint(-1), b))
    }
}

/// Polyvector fields on the chart of `setup`, with degree shifted down by
/// one: carrier degree `g` holds `(g+1)`-vector fields. The differential is
/// `[π,·]` and the bracket is Schouten–Nijenhuis. With `constrained = true`
/// every element must be tangential to the coordinate subspace germ
/// (membership in the graded subalgebra preserved by both operations when
/// the germ is coisotropic).
#[derive(Debug, Clone)]
pub struct PvfCarrier {
    setup: CoisoSetup,
    constrained: bool,
}

impl PvfCarrier {
    pub fn new(setup: CoisoSetup) -> Self {
        PvfCarrier { setup, constrained: false }
    }

    /// Carrier of fields tangential to the germ `z_1 = … = z_p = 0`.
    pub fn constrained(setup: CoisoSetup) -> Self {
        PvfCarrier { setup, constrained: true }
    }

    pub fn setup(&self) -> &CoisoSetup {
        &self.setup
    }

    pub fn is_constrained(&self) -> bool {
        self.constrained
    }
}

impl Carrier for PvfCarrier {
    type Elt = PVF;

    fn zero(&self, _degree: i64) -> PVF {
        PVF::zero(self.setup.n())
    }

    fn is_zero(&self, e: &PVF) -> bool {
        e.is_zero()
    }

    fn check(&self, e: &PVF, degree: i64) -> Result<(), CalcError> {
        if e.nvars() != self.setup.n() {
            return Err(CalcError::VarMismatch {
                left: e.nvars(),
                right: self.setup.n(),
            });
        }
        if e.is_zero() {
            return Ok(());
        }
        let ext = e.ext_degree().ok_or_else(|| {
            CalcError::Invalid(format!("element is not of pure exterior degree: {e}"))
        })?;
        if ext as i64 != degree + 1 {
            return Err(CalcError::Invalid(format!(
                "expected carrier degree {degree} (exterior degree {}), found exterior degree {ext}",
                degree + 1
            )));
        }
        if self.constrained && !in_lz(&self.setup, e) {
            return Err(CalcError::Invalid(format!(
                "element is not tangential to the coordinate subspace germ: {e}"
            )));
        }
        Ok(())
    }

    fn add(&self, a: &PVF, b: &PVF) -> Result<PVF, CalcError> {
        a.add(b)
    }

    fn scale(&self, c: &Rat, a: &PVF) -> PVF {
        a.scale(c)
    }

    fn bracket(&self, a: &PVF, b: &PVF) -> Result<PVF, CalcError> {
        schouten(a, b)
    }

    fn diff(&self, a: &PVF) -> Result<PVF, CalcError> {
        lichnerowicz(&self.setup, a)
    }
}

/// Square rational matrices under the commutator, concentrated in degree 0
/// with zero differential. Gauge elements with entries in the maximal ideal
/// are nilpotent, so `exp`/`log` are polynomial; see [`crate::nilmat`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MatCarrier {
    size: usize,
}

impl MatCarrier {
    pub fn new(size: usize) -> Self {
        MatCarrier { size }
    }

    pub fn size(&self) -> usize {
        self.size
    }
}

impl Carrier for MatCarrier {
    type Elt = QMat;

    fn zero(&self, _degree: i64) -> QMat {
        QMat::zeros(self.size, self.size)
    }

    fn is_zero(&self, e: &QMat) -> bool {
        e.is_zero()
    }

    fn check(&self, e: &QMat, degree: i64) -> Result<(), CalcError> {
        if e.nrows() != self.size || e.ncols() != self.size {
            return Err(CalcError::Invalid(format!(
                "matrix shape {}x{} does not match carrier size {}",
                e.nrows(),
                e.ncols(),
                self.size
            )));
        }
        if degree != 0 && !e.is_zero() {
            return Err(CalcError::Invalid(format!(
                "matrix carrier is concentrated in degree 0, got degree {degree}"
            )));
        }
        Ok(())
    }

    fn add(&self, a: &QMat, b: &QMat) -> Result<QMat, CalcError> {
        Ok(a.add(b))
    }

    fn scale(&self, c: &Rat, a: &QMat) -> QMat {
        a.scale(c)
    }

    fn bracket(&self, a: &QMat, b: &QMat) -> Result<QMat, CalcError> {
        Ok(a.mul(b).sub(&b.mul(a)))
    }

    fn diff(&self, _a: &QMat) -> Result<QMat, CalcError> {
        Ok(QMat::zeros(self.size, self.size))
    }
}
