//! Holomorphic differential forms with polynomial coefficients.
//!
//! A `Form` is a sparse sum of components `f · dz_{i_1} ∧ … ∧ dz_{i_k}` keyed
//! by strictly increasing multi-indices; functions are the degree-0 case.
//! The representation and canonicalization rules mirror `PVF` exactly.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CalcError;
use crate::exterior::{CompSer, Components, MIdx};
use crate::poly::Poly;
use crate::rat::Rat;

/// Polynomial differential form, stored canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form(pub(crate) Components);

impl Form {
    /// The zero form on `nvars` variables.
    pub fn zero(nvars: usize) -> Self {
        Form(Components::zero(nvars))
    }

    /// A function (0-form).
    pub fn from_poly(f: Poly) -> Self {
        let mut c = Components::zero(f.nvars());
        c.insert_term(&[], f).expect("empty index list is valid");
        Form(c)
    }

    /// The coordinate 1-form `dz_i` (1-based).
    pub fn dz(nvars: usize, i: usize) -> Result<Self, CalcError> {
        let mut c = Components::zero(nvars);
        c.insert_term(&[i as u8], Poly::one(nvars))?;
        Ok(Form(c))
    }

    /// Builds a single component `f · dz_{indices}` with sign-absorbing
    /// normalization of unsorted index lists.
    pub fn component(nvars: usize, indices: &[u8], f: Poly) -> Result<Self, CalcError> {
        let mut c = Components::zero(nvars);
        c.insert_term(indices, f)?;
        Ok(Form(c))
    }

    pub fn nvars(&self) -> usize {
        self.0.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn insert(&mut self, indices: &[u8], f: Poly) -> Result<(), CalcError> {
        self.0.insert_term(indices, f)
    }

    pub fn add(&self, other: &Form) -> Result<Form, CalcError> {
        Ok(Form(self.0.add(&other.0)?))
    }

    pub fn sub(&self, other: &Form) -> Result<Form, CalcError> {
        Ok(Form(self.0.sub(&other.0)?))
    }

    pub fn neg(&self) -> Form {
        Form(self.0.neg())
    }

    pub fn scale(&self, c: &Rat) -> Form {
        Form(self.0.scale(c))
    }

    pub fn scale_poly(&self, f: &Poly) -> Result<Form, CalcError> {
        Ok(Form(self.0.scale_poly(f)?))
    }

    /// Exterior product of forms.
    pub fn wedge(&self, other: &Form) -> Result<Form, CalcError> {
        Ok(Form(self.0.wedge(&other.0)?))
    }

    /// Form degree if homogeneous; `None` for zero or mixed.
    pub fn ext_degree(&self) -> Option<usize> {
        self.0.ext_degree()
    }

    pub fn max_ext_degree(&self) -> usize {
        self.0.max_ext_degree()
    }

    pub fn ext_split(&self) -> BTreeMap<usize, Form> {
        self.0.ext_split().into_iter().map(|(k, c)| (k, Form(c))).collect()
    }

    pub fn ext_part(&self, k: usize) -> Form {
        Form(self.0.ext_part(k))
    }

    pub fn coeff_degree_split(&self) -> BTreeMap<u32, Form> {
        self.0
            .coeff_degree_split()
            .into_iter()
            .map(|(d, c)| (d, Form(c)))
            .collect()
    }

    pub fn coeff_homogeneous_degree(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        self.0.coeff_homogeneous_degree()
    }

    pub fn components(&self) -> impl Iterator<Item = (&MIdx, &Poly)> {
        self.0.comps.iter()
    }

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

    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> Form {
        Form(self.0.map_coeffs(f))
    }

    pub fn to_ser(&self) -> Vec<CompSer> {
        self.0.to_ser()
    }

    pub fn from_ser(nvars: usize, comps: &[CompSer]) -> Result<Self, CalcError> {
        Ok(Form(Components::from_ser(nvars, comps)?))
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.display_with(f, "dz")
    }
}

impl Serialize for Form {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_ser().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Form {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let comps = Vec::<CompSer>::deserialize(d)?;
        let nvars = comps
            .iter()
            .flat_map(|c| c.indices.iter().copied())
            .max()
            .unwrap_or(0) as usize;
        Form::from_ser(nvars, &comps).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_is_graded_commutative() {
        let n = 3;
        let dz1 = Form::dz(n, 1).unwrap();
        let dz2 = Form::dz(n, 2).unwrap();
        let a = dz1.wedge(&dz2).unwrap(); // 2-form
        let b = Form::dz(n, 3).unwrap(); // 1-form
        // even·odd: ab = ba
        assert_eq!(a.wedge(&b).unwrap(), b.wedge(&a).unwrap());
        // odd·odd: ab = -ba
        assert_eq!(dz1.wedge(&dz2).unwrap(), dz2.wedge(&dz1).unwrap().neg());
    }

    #[test]
    fn function_times_form() {
        let n = 2;
        let f = Form::from_poly(Poly::var(n, 1));
        let dz2 = Form::dz(n, 2).unwrap();
        let prod = f.wedge(&dz2).unwrap();
        assert_eq!(prod.coeff(&[2]), Poly::var(n, 1));
    }
}
