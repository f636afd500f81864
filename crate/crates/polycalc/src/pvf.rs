//! Polyvector fields on an affine chart.
//!
//! A `PVF` is a polynomial section of the exterior algebra of the tangent
//! bundle: a sparse sum of components `f · ∂_{i_1} ∧ … ∧ ∂_{i_k}` keyed by
//! strictly increasing multi-indices. Functions are the degree-0 case. Mixed
//! exterior degrees are allowed in one value; the graded operations split
//! their inputs internally where the degree enters a sign.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CalcError;
use crate::exterior::{CompSer, Components, MIdx};
use crate::poly::Poly;
use crate::rat::Rat;

/// Polynomial polyvector field, stored canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PVF(pub(crate) Components);

impl PVF {
    /// The zero polyvector field on `nvars` variables.
    pub fn zero(nvars: usize) -> Self {
        PVF(Components::zero(nvars))
    }

    /// A function (degree-0 polyvector field).
    pub fn from_poly(f: Poly) -> Self {
        let mut c = Components::zero(f.nvars());
        c.insert_term(&[], f).expect("empty index list is valid");
        PVF(c)
    }

    /// The coordinate vector field `∂_i` (1-based).
    pub fn partial_dir(nvars: usize, i: usize) -> Result<Self, CalcError> {
        let mut c = Components::zero(nvars);
        c.insert_term(&[i as u8], Poly::one(nvars))?;
        Ok(PVF(c))
    }

    /// Builds a single component `f · ∂_{indices}`; unsorted index lists are
    /// sorted with the sign absorbed into the coefficient, repeated indices
    /// give zero.
    pub fn component(nvars: usize, indices: &[u8], f: Poly) -> Result<Self, CalcError> {
        let mut c = Components::zero(nvars);
        c.insert_term(indices, f)?;
        Ok(PVF(c))
    }

    /// Number of chart variables.
    pub fn nvars(&self) -> usize {
        self.0.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Adds a component in place (same sorting/sign rules as `component`).
    pub fn insert(&mut self, indices: &[u8], f: Poly) -> Result<(), CalcError> {
        self.0.insert_term(indices, f)
    }

    pub fn add(&self, other: &PVF) -> Result<PVF, CalcError> {
        Ok(PVF(self.0.add(&other.0)?))
    }

    pub fn sub(&self, other: &PVF) -> Result<PVF, CalcError> {
        Ok(PVF(self.0.sub(&other.0)?))
    }

    pub fn neg(&self) -> PVF {
        PVF(self.0.neg())
    }

    pub fn scale(&self, c: &Rat) -> PVF {
        PVF(self.0.scale(c))
    }

    /// Multiplies every coefficient by the function `f`.
    pub fn scale_poly(&self, f: &Poly) -> Result<PVF, CalcError> {
        Ok(PVF(self.0.scale_poly(f)?))
    }

    /// Exterior product of polyvector fields.
    pub fn wedge(&self, other: &PVF) -> Result<PVF, CalcError> {
        Ok(PVF(self.0.wedge(&other.0)?))
    }

    /// Exterior degree if homogeneous; `None` for zero or mixed.
    pub fn ext_degree(&self) -> Option<usize> {
        self.0.ext_degree()
    }

    /// Largest exterior degree present (0 for zero).
    pub fn max_ext_degree(&self) -> usize {
        self.0.max_ext_degree()
    }

    /// Splits into exterior-degree-homogeneous parts.
    pub fn ext_split(&self) -> BTreeMap<usize, PVF> {
        self.0.ext_split().into_iter().map(|(k, c)| (k, PVF(c))).collect()
    }

    /// The part of exterior degree `k`.
    pub fn ext_part(&self, k: usize) -> PVF {
        PVF(self.0.ext_part(k))
    }

    /// Splits by coefficient total degree.
    pub fn coeff_degree_split(&self) -> BTreeMap<u32, PVF> {
        self.0
            .coeff_degree_split()
            .into_iter()
            .map(|(d, c)| (d, PVF(c)))
            .collect()
    }

    /// Common coefficient total degree if all coefficients are homogeneous of
    /// one degree (`None` otherwise; `Some(0)` convention does not apply to
    /// the zero field, which returns `None`).
    pub fn coeff_homogeneous_degree(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        self.0.coeff_homogeneous_degree()
    }

    /// Iterates over `(multi-index, coefficient)` pairs in canonical order.
    pub fn components(&self) -> impl Iterator<Item = (&MIdx, &Poly)> {
        self.0.comps.iter()
    }

    /// The coefficient polynomial on `indices` (zero if absent). The list
    /// must be strictly increasing.
    pub fn coeff(&self, indices: &[u8]) -> Poly {
        match MIdx::new(indices.to_vec()) {
            Some(m) => self
                .0
                .comps
                .get(&m)
                .cloned()
                .unwrap_or_else(|| Poly::zero(self.nvars())),
            None => Poly::zero(self.nvars()),
        }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> PVF {
        PVF(self.0.map_coeffs(f))
    }

    /// Serializes to the component-list format.
    pub fn to_ser(&self) -> Vec<CompSer> {
        self.0.to_ser()
    }

    /// Parses the component-list format; index lists must be in range, and
    /// unsorted lists are normalized with the sign absorbed.
    pub fn from_ser(nvars: usize, comps: &[CompSer]) -> Result<Self, CalcError> {
        Ok(PVF(Components::from_ser(nvars, comps)?))
    }
}

impl fmt::Display for PVF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.display_with(f, "∂")
    }
}

impl Serialize for PVF {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_ser().serialize(s)
    }
}

/// Deserialization target carrying no chart size: callers deserialize to
/// `Vec<CompSer>` and use `PVF::from_ser` with the chart's `nvars`.
impl<'de> Deserialize<'de> for PVF {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let comps = Vec::<CompSer>::deserialize(d)?;
        let nvars = comps
            .iter()
            .flat_map(|c| c.indices.iter().copied())
            .max()
            .unwrap_or(0) as usize;
        PVF::from_ser(nvars, &comps).map_err(serde::de::Error::custom)
    }
}
