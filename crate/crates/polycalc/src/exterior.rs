//! Shared sparse-exterior-algebra core used by both polyvector fields and
//! differential forms.
//!
//! A multi-index is a strictly increasing list of 1-based coordinate indices;
//! components are stored canonically as `BTreeMap<MIdx, Poly>`. All wedge and
//! contraction signs are concentrated here so the two public wrappers cannot
//! drift apart.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::CalcError;
use crate::poly::Poly;
use crate::rat::{rone, sign_pow, Rat};

/// Strictly increasing multi-index of 1-based coordinate directions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MIdx(Vec<u8>);

impl MIdx {
    /// The empty multi-index (degree 0).
    pub fn empty() -> Self {
        MIdx(Vec::new())
    }

    /// Builds from an already strictly increasing list; `None` otherwise.
    pub fn new(indices: Vec<u8>) -> Option<Self> {
        if indices.windows(2).all(|w| w[0] < w[1]) && indices.iter().all(|&i| i >= 1) {
            Some(MIdx(indices))
        } else {
            None
        }
    }

    /// Sorts an arbitrary index list into a multi-index, returning the sign
    /// of the sorting permutation; `None` if an index repeats (the exterior
    /// monomial is zero) or an index is 0.
    pub fn sort_signed(indices: &[u8]) -> Option<(Self, i64)> {
        if indices.contains(&0) {
            return None;
        }
        let mut v: Vec<u8> = indices.to_vec();
        // Count inversions with a quadratic pass; index lists are tiny.
        let mut sign = 0i64;
        for i in 0..v.len() {
            for j in (i + 1)..v.len() {
                match v[j].cmp(&v[i]) {
                    std::cmp::Ordering::Less => sign += 1,
                    std::cmp::Ordering::Equal => return None,
                    std::cmp::Ordering::Greater => {}
                }
            }
            let _ = i;
        }
        v.sort_unstable();
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((MIdx(v), if sign % 2 == 0 { 1 } else { -1 }))
    }

    /// Exterior degree (number of directions).
    pub fn deg(&self) -> usize {
        self.0.len()
    }

    /// The underlying strictly increasing index list.
    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    /// Position of `i` in the list, if present.
    pub fn position(&self, i: u8) -> Option<usize> {
        self.0.iter().position(|&j| j == i)
    }

    /// Removes the entry at `pos`, returning `(index, rest)`.
    pub fn remove_at(&self, pos: usize) -> (u8, MIdx) {
        let mut v = self.0.clone();
        let i = v.remove(pos);
        (i, MIdx(v))
    }

    /// Largest index used, or 0 for the empty multi-index.
    pub fn max_index(&self) -> u8 {
        self.0.last().copied().unwrap_or(0)
    }
}

impl fmt::Display for MIdx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// Serialized form of one component: indices plus a polynomial string.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CompSer {
    pub indices: Vec<u8>,
    pub coeff: String,
}

/// Sparse element of the exterior algebra over the polynomial ring:
/// a canonical map from multi-indices to nonzero polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub nvars: usize,
    pub comps: BTreeMap<MIdx, Poly>,
}

impl Components {
    pub fn zero(nvars: usize) -> Self {
        Components {
            nvars,
            comps: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn check_same_vars(&self, other: &Self) -> Result<(), CalcError> {
        if self.nvars != other.nvars {
            return Err(CalcError::VarMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    /// Adds `coeff` on the (possibly unsorted) index list `indices`,
    /// absorbing the sorting sign and dropping repeated-index terms.
    pub fn insert_term(&mut self, indices: &[u8], coeff: Poly) -> Result<(), CalcError> {
        assert_eq!(coeff.nvars(), self.nvars, "coefficient on wrong chart");
        if coeff.is_zero() {
            return Ok(());
        }
        for &i in indices {
            if i as usize > self.nvars || i == 0 {
                return Err(CalcError::IndexRange {
                    index: i as usize,
                    n: self.nvars,
                });
            }
        }
        let Some((midx, sign)) = MIdx::sort_signed(indices) else {
            return Ok(()); // repeated direction: exterior monomial vanishes
        };
        let signed = if sign < 0 { coeff.neg() } else { coeff };
        match self.comps.entry(midx) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(signed);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&signed);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, CalcError> {
        self.check_same_vars(other)?;
        let mut out = self.clone();
        for (idx, c) in &other.comps {
            out.insert_term(idx.indices(), c.clone())?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Components::zero(self.nvars);
        for (idx, c) in &self.comps {
            out.comps.insert(idx.clone(), c.neg());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self, CalcError> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c == &crate::rat::rzero() {
            return Components::zero(self.nvars);
        }
        let mut out = Components::zero(self.nvars);
        for (idx, p) in &self.comps {
            out.comps.insert(idx.clone(), p.scale(c));
        }
        out
    }

    pub fn scale_poly(&self, f: &Poly) -> Result<Self, CalcError> {
        if f.nvars() != self.nvars {
            return Err(CalcError::VarMismatch {
                left: self.nvars,
                right: f.nvars(),
            });
        }
        let mut out = Components::zero(self.nvars);
        for (idx, p) in &self.comps {
            let prod = p.mul(f);
            if !prod.is_zero() {
                out.comps.insert(idx.clone(), prod);
            }
        }
        Ok(out)
    }

    /// Exterior product.
    pub fn wedge(&self, other: &Self) -> Result<Self, CalcError> {
        self.check_same_vars(other)?;
        let mut out = Components::zero(self.nvars);
        for (ia, ca) in &self.comps {
            for (ib, cb) in &other.comps {
                let mut idx: Vec<u8> = ia.indices().to_vec();
                idx.extend_from_slice(ib.indices());
                out.insert_term(&idx, ca.mul(cb))?;
            }
        }
        Ok(out)
    }

    /// Exterior degree if homogeneous (`None` for zero or mixed inputs).
    pub fn ext_degree(&self) -> Option<usize> {
        let mut degs = self.comps.keys().map(|i| i.deg());
        let d0 = degs.next()?;
        if degs.all(|d| d == d0) {
            Some(d0)
        } else {
            None
        }
    }

    /// Largest exterior degree appearing (0 for the zero element).
    pub fn max_ext_degree(&self) -> usize {
        self.comps.keys().map(|i| i.deg()).max().unwrap_or(0)
    }

    /// Splits into exterior-degree-homogeneous pieces.
    pub fn ext_split(&self) -> BTreeMap<usize, Components> {
        let mut out: BTreeMap<usize, Components> = BTreeMap::new();
        for (idx, c) in &self.comps {
            out.entry(idx.deg())
                .or_insert_with(|| Components::zero(self.nvars))
                .comps
                .insert(idx.clone(), c.clone());
        }
        out
    }

    /// The piece of exterior degree `k`.
    pub fn ext_part(&self, k: usize) -> Components {
        let mut out = Components::zero(self.nvars);
        for (idx, c) in &self.comps {
            if idx.deg() == k {
                out.comps.insert(idx.clone(), c.clone());
            }
        }
        out
    }

    /// Applies `f` to every coefficient, dropping zero results.
    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> Components {
        let mut out = Components::zero(self.nvars);
        for (idx, c) in &self.comps {
            let fc = f(c);
            if !fc.is_zero() {
                out.comps.insert(idx.clone(), fc);
            }
        }
        out
    }

    /// True if all coefficients are homogeneous of one common total degree
    /// (zero is vacuously homogeneous).
    pub fn coeff_homogeneous_degree(&self) -> Option<u32> {
        let mut deg: Option<u32> = None;
        for c in self.comps.values() {
            if !c.is_homogeneous() {
                return None;
            }
            let d = c.total_degree().expect("stored coefficients are nonzero");
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 == d => {}
                Some(_) => return None,
            }
        }
        deg
    }

    /// Splits by coefficient total degree: piece `d` collects, from every
    /// component, the homogeneous part of degree `d` of its coefficient.
    pub fn coeff_degree_split(&self) -> BTreeMap<u32, Components> {
        let mut out: BTreeMap<u32, Components> = BTreeMap::new();
        for (idx, c) in &self.comps {
            for (d, part) in c.degree_split() {
                out.entry(d)
                    .or_insert_with(|| Components::zero(self.nvars))
                    .comps
                    .insert(idx.clone(), part);
            }
        }
        out
    }

    pub fn to_ser(&self) -> Vec<CompSer> {
        self.comps
            .iter()
            .map(|(idx, c)| CompSer {
                indices: idx.indices().to_vec(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn from_ser(nvars: usize, comps: &[CompSer]) -> Result<Self, CalcError> {
        let mut out = Components::zero(nvars);
        for comp in comps {
            let poly = crate::parse::parse_poly(&comp.coeff, nvars)
                .map_err(|e| CalcError::Invalid(format!("coefficient '{}': {e}", comp.coeff)))?;
            out.insert_term(&comp.indices, poly)?;
        }
        Ok(out)
    }

    pub fn display_with(&self, f: &mut fmt::Formatter<'_>, basis: &str) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        for (pos, (idx, c)) in self.comps.iter().enumerate() {
            if pos > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{basis}{idx}")?;
        }
        Ok(())
    }
}

/// Sign `(-1)^k` as a polynomial-scaling rational.
pub fn psign(k: i64) -> Rat {
    sign_pow(k)
}

/// Contracts the directions `dirs` (applied right-to-left, innermost last
/// index first) into the multi-index `target`, returning the remaining
/// multi-index and the accumulated sign, or `None` if some direction is
/// absent from `target`.
pub fn contract(dirs: &MIdx, target: &MIdx) -> Option<(MIdx, Rat)> {
    let mut rest = target.clone();
    let mut sign = rone();
    for &i in dirs.indices().iter().rev() {
        let pos = rest.position(i)?;
        sign *= psign(pos as i64);
        let (_, next) = rest.remove_at(pos);
        rest = next;
    }
    Some((rest, sign))
}
