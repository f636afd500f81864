//! Totalization of a semicosimplicial DGLA through simplex forms.
//!
//! The totalization pairs level `n` of a diagram with polynomial forms on
//! the `n`-simplex: an element is a tuple `x = (x_0, x_1, …)` with
//! `x_n ∈ Ω_n ⊗ V_n` whose simplex-form coefficients restrict compatibly,
//!
//! ```text
//! (∂*_k ⊗ Id) x_n = (Id ⊗ ∂_k) x_{n−1}   for all 1 ≤ n, 0 ≤ k ≤ n.
//! ```
//!
//! Unlike the alternating-sum cochain complex, the totalization is a genuine
//! differential graded Lie algebra — the differential is the levelwise
//! tensor differential and the bracket couples the wedge product with the
//! level brackets — and integration over simplices ([`whitney_i`]) carries
//! it onto the cochain complex as a surjective chain map inducing the same
//! cohomology dimensions.
//!
//! Because `Ω_n` is infinite-dimensional, exact linear algebra runs on
//! *weight-bounded slices*: the span of tensors whose form monomial
//! `t^a · dt_S` has weight `Σa + |S| ≤ D`. The differential preserves weight
//! and face restrictions never raise it, so every slice is a subcomplex and
//! all ranks below are exact integers for the stated bound.

use std::collections::BTreeMap;

use mc_deform::{Carrier, GVec};
use polycalc::linalg::QMat;
use polycalc::rat::{rone, rzero, sign_pow, Rat, Zero};
use polycalc::CalcError;

use crate::cech::{cech_dim, CochainElem};
use crate::scs::{ScsDGLA, ScsMorphism};
use crate::sform::{weight_basis, SimplexForm};

/// A homogeneous element of the totalization: `levels[n]` maps basis names
/// of `V_n` to their simplex-form coefficients in `Ω_n`. For total degree
/// `p`, the form attached to a basis vector of degree `g` is homogeneous of
/// form degree `p − g`; zero coefficients are not stored.
#[derive(Debug, Clone, PartialEq)]
pub struct TotElem {
    total_degree: i64,
    levels: Vec<BTreeMap<String, SimplexForm>>,
}

impl TotElem {
    /// The zero element of one total degree.
    pub fn zero(scs: &ScsDGLA, total_degree: i64) -> Self {
        TotElem {
            total_degree,
            levels: vec![BTreeMap::new(); scs.len()],
        }
    }

    /// Wraps per-level coefficient maps, validating names, simplex
    /// dimensions, and form degrees.
    pub fn from_components(
        scs: &ScsDGLA,
        total_degree: i64,
        levels: Vec<BTreeMap<String, SimplexForm>>,
    ) -> Result<Self, CalcError> {
        if levels.len() != scs.len() {
            return Err(CalcError::Invalid(format!(
                "element over {} levels needs {} components, found {}",
                scs.len(),
                scs.len(),
                levels.len()
            )));
        }
        let mut out = TotElem::zero(scs, total_degree);
        for (n, map) in levels.into_iter().enumerate() {
            for (name, form) in map {
                out.set_component(scs, n, &name, form)?;
            }
        }
        Ok(out)
    }

    /// Sets one coefficient, validating it against the diagram.
    pub fn set_component(
        &mut self,
        scs: &ScsDGLA,
        n: usize,
        name: &str,
        form: SimplexForm,
    ) -> Result<(), CalcError> {
        if n >= self.levels.len() {
            return Err(CalcError::IndexRange {
                index: n,
                n: self.levels.len() - 1,
            });
        }
        let g = scs.level(n)?.degree_of(name).ok_or_else(|| {
            CalcError::Invalid(format!("unknown basis name {name} at level {n}"))
        })?;
        if form.nsimplex() != n {
            return Err(CalcError::Invalid(format!(
                "coefficient of {name} at level {n} lives on the {}-simplex",
                form.nsimplex()
            )));
        }
        if form.is_zero() {
            self.levels[n].remove(name);
            return Ok(());
        }
        let expected = self.total_degree - g;
        if form.form_degree() != Some(expected.max(0) as usize) || expected < 0 {
            return Err(CalcError::Invalid(format!(
                "coefficient of {name} at level {n} must be homogeneous of form degree \
                 {expected}, found {form}"
            )));
        }
        self.levels[n].insert(name.to_string(), form);
        Ok(())
    }

    /// Total degree `p`.
    pub fn total_degree(&self) -> i64 {
        self.total_degree
    }

    /// The coefficient of one basis name (zero if absent).
    pub fn component(&self, n: usize, name: &str) -> SimplexForm {
        self.levels
            .get(n)
            .and_then(|m| m.get(name))
            .cloned()
            .unwrap_or_else(|| SimplexForm::zero(n))
    }

    /// Iterates over the nonzero coefficients of one level.
    pub fn level(&self, n: usize) -> impl Iterator<Item = (&String, &SimplexForm)> {
        self.levels.get(n).into_iter().flatten()
    }

    /// `true` when every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.levels.iter().all(BTreeMap::is_empty)
    }

    /// Sum (total degrees must agree).
    pub fn add(&self, other: &Self, scs: &ScsDGLA) -> Result<Self, CalcError> {
        if self.total_degree != other.total_degree {
            return Err(CalcError::Invalid(format!(
                "cannot add elements of total degrees {} and {}",
                self.total_degree, other.total_degree
            )));
        }
        let mut out = self.clone();
        for (n, map) in other.levels.iter().enumerate() {
            for (name, form) in map {
                let sum = out.component(n, name).add(form)?;
                out.set_component(scs, n, name, sum)?;
            }
        }
        Ok(out)
    }

    /// Difference.
    pub fn sub(&self, other: &Self, scs: &ScsDGLA) -> Result<Self, CalcError> {
        self.add(&other.scale(&-rone()), scs)
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return TotElem {
                total_degree: self.total_degree,
                levels: vec![BTreeMap::new(); self.levels.len()],
            };
        }
        TotElem {
            total_degree: self.total_degree,
            levels: self
                .levels
                .iter()
                .map(|m| m.iter().map(|(k, f)| (k.clone(), f.scale(c))).collect())
                .collect(),
        }
    }

    /// Largest form-monomial weight over all coefficients; `None` for zero.
    pub fn max_weight(&self) -> Option<u32> {
        self.levels
            .iter()
            .flat_map(|m| m.values().filter_map(SimplexForm::max_weight))
            .max()
    }
}

/// The mismatch `(∂*_k ⊗ Id) x_n − (Id ⊗ ∂_k) x_{n−1}` as a coefficient map
/// over the level-`n` basis, with values in `Ω_{n−1}`.
pub fn matching_defect(
    scs: &ScsDGLA,
    x: &TotElem,
    n: usize,
    k: usize,
) -> Result<BTreeMap<String, SimplexForm>, CalcError> {
    if n == 0 || n >= scs.len() {
        return Err(CalcError::Invalid(format!(
            "matching conditions pair consecutive levels; level {n} is not paired"
        )));
    }
    let mut defect: BTreeMap<String, SimplexForm> = BTreeMap::new();
    let mut accumulate = |name: &str, form: SimplexForm| -> Result<(), CalcError> {
        let entry = defect
            .remove(name)
            .unwrap_or_else(|| SimplexForm::zero(n - 1));
        let sum = entry.add(&form)?;
        if sum.is_zero() {
            defect.remove(name);
        } else {
            defect.insert(name.to_string(), sum);
        }
        Ok(())
    };
    for (name, form) in x.level(n) {
        accumulate(name, form.face_pullback(k)?)?;
    }
    for (name, form) in x.level(n - 1) {
        let image = scs.face_apply(n - 1, k, &scs.level(n - 1)?.basis_elem(name)?)?;
        for (w, c) in &image.coords {
            accumulate(w, form.scale(&-c.clone()))?;
        }
    }
    Ok(defect)
}

/// `true` when every matching condition holds, i.e. the tuple is a genuine
/// element of the totalization.
pub fn tot_check(scs: &ScsDGLA, x: &TotElem) -> Result<bool, CalcError> {
    for n in 1..scs.len() {
        for k in 0..=n {
            if !matching_defect(scs, x, n, k)?.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The levelwise tensor differential
/// `D(ω ⊗ v) = dω ⊗ v + (−1)^{|ω|} ω ⊗ dv`. It preserves the matching
/// conditions and every weight-bounded slice.
pub fn tot_diff(scs: &ScsDGLA, x: &TotElem) -> Result<TotElem, CalcError> {
    let mut out = TotElem::zero(scs, x.total_degree() + 1);
    for n in 0..scs.len() {
        let alg = scs.level(n)?;
        for (name, form) in x.level(n) {
            let df = form.d();
            if !df.is_zero() {
                let sum = out.component(n, name).add(&df)?;
                out.set_component(scs, n, name, sum)?;
            }
            let dv = alg.diff(&alg.basis_elem(name)?)?;
            if dv.is_zero() {
                continue;
            }
            let sign = sign_pow(form.form_degree().expect("stored forms are homogeneous") as i64);
            for (w, c) in &dv.coords {
                let add = form.scale(&(sign.clone() * c.clone()));
                let sum = out.component(n, w).add(&add)?;
                out.set_component(scs, n, w, sum)?;
            }
        }
    }
    Ok(out)
}

/// The levelwise bracket
/// `[ω ⊗ v, η ⊗ u] = (−1)^{|v|·|η|} (ω ∧ η) ⊗ [v, u]`, making the
/// totalization a differential graded Lie algebra.
pub fn tot_bracket(scs: &ScsDGLA, x: &TotElem, y: &TotElem) -> Result<TotElem, CalcError> {
    let mut out = TotElem::zero(scs, x.total_degree() + y.total_degree());
    for n in 0..scs.len() {
        let alg = scs.level(n)?;
        for (v_name, omega) in x.level(n) {
            let v = alg.basis_elem(v_name)?;
            for (u_name, eta) in y.level(n) {
                let u = alg.basis_elem(u_name)?;
                let vu = alg.bracket(&v, &u)?;
                if vu.is_zero() {
                    continue;
                }
                let wedge = omega.mul(eta)?;
                if wedge.is_zero() {
                    continue;
                }
                let eta_deg = eta.form_degree().expect("stored forms are homogeneous") as i64;
                let sign = sign_pow(v.degree * eta_deg);
                for (w, c) in &vu.coords {
                    let add = wedge.scale(&(sign.clone() * c.clone()));
                    let sum = out.component(n, w).add(&add)?;
                    out.set_component(scs, n, w, sum)?;
                }
            }
        }
    }
    Ok(out)
}

/// Integration over the simplices, levelwise: the form-degree-`n` part of
/// `x_n` integrates to the level-`n` component of a cochain of the same
/// total degree. A surjective chain map onto the alternating-sum complex.
pub fn whitney_i(scs: &ScsDGLA, x: &TotElem) -> Result<CochainElem, CalcError> {
    let p = x.total_degree();
    let mut levels = Vec::with_capacity(scs.len());
    for n in 0..scs.len() {
        let mut v = GVec::zero(p - n as i64);
        for (name, form) in x.level(n) {
            let value = form.simplex_integrate();
            if !value.is_zero() {
                v.coords.insert(name.clone(), value);
            }
        }
        levels.push(v);
    }
    CochainElem::from_levels(scs, p, levels)
}

/// Embeds an equalizer element of level 0 — one with `∂_0 x = ∂_1 x` — as
/// the constant tuple `(1 ⊗ x, 1 ⊗ ∂_0 x, 1 ⊗ ∂_0² x, …)`. The embedding is
/// a morphism of differential graded Lie algebras, and integration takes it
/// back to the corresponding cochain.
pub fn e_map(scs: &ScsDGLA, x: &GVec) -> Result<TotElem, CalcError> {
    scs.level(0)?.check(x, x.degree)?;
    if scs.len() >= 2 {
        let d0 = scs.face_apply(0, 0, x)?;
        let d1 = scs.face_apply(0, 1, x)?;
        if d0 != d1 {
            return Err(CalcError::Invalid(
                "not an equalizer element: the two faces of level 0 differ on it".into(),
            ));
        }
    }
    let mut out = TotElem::zero(scs, x.degree);
    let mut current = x.clone();
    for n in 0..scs.len() {
        for (name, c) in current.coords.clone() {
            out.set_component(scs, n, &name, SimplexForm::constant(n, c))?;
        }
        if n + 1 < scs.len() {
            current = scs.face_apply(n, 0, &current)?;
        }
    }
    Ok(out)
}

/// Applies a levelwise diagram morphism to a totalization element,
/// coefficient map by coefficient map.
pub fn tot_map(
    morphism: &ScsMorphism,
    src: &ScsDGLA,
    dst: &ScsDGLA,
    x: &TotElem,
) -> Result<TotElem, CalcError> {
    let mut out = TotElem::zero(dst, x.total_degree());
    for n in 0..src.len() {
        let alg = src.level(n)?;
        for (name, form) in x.level(n) {
            let image = morphism.apply(n, &alg.basis_elem(name)?, dst)?;
            for (w, c) in &image.coords {
                let sum = out.component(n, w).add(&form.scale(c))?;
                out.set_component(dst, n, w, sum)?;
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Weight-bounded slices and their exact linear algebra
// ---------------------------------------------------------------------------

/// An ordered monomial basis of the weight-bounded ambient space
/// `⊕_n Ω_n^{≤D} ⊗ V_n` in one total degree: entries are
/// `(level, basis name, dt tuple, exponents)`.
#[derive(Debug, Clone)]
pub struct AmbientBasis {
    degree: i64,
    weight_bound: u32,
    entries: Vec<(usize, String, Vec<u8>, Vec<u32>)>,
    index: BTreeMap<(usize, String, Vec<u8>, Vec<u32>), usize>,
}

/// Splits a simplex form into `((dt tuple, exponents), coefficient)` triples.
fn decompose(form: &SimplexForm) -> Vec<((Vec<u8>, Vec<u32>), Rat)> {
    let mut out = Vec::new();
    for (dts, p) in form.parts() {
        for (exps, c) in p.terms() {
            out.push(((dts.clone(), exps.clone()), c.clone()));
        }
    }
    out
}

impl AmbientBasis {
    /// Enumerates the ambient basis for one total degree and weight bound.
    pub fn build(scs: &ScsDGLA, degree: i64, weight_bound: u32) -> Result<Self, CalcError> {
        let mut entries = Vec::new();
        for n in 0..scs.len() {
            let alg = scs.level(n)?;
            for g in alg.degrees().collect::<Vec<_>>() {
                let j = degree - g;
                if j < 0 || j > n as i64 {
                    continue;
                }
                for name in alg.basis_names(g) {
                    for m in weight_basis(n, j as usize, weight_bound) {
                        let ((dts, exps), _) = decompose(&m)
                            .pop()
                            .expect("weight basis elements are single monomials");
                        entries.push((n, name.clone(), dts, exps));
                    }
                }
            }
        }
        let index = entries
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i))
            .collect();
        Ok(AmbientBasis {
            degree,
            weight_bound,
            entries,
            index,
        })
    }

    /// Number of basis monomials.
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// Total degree of the ambient space.
    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// The weight bound.
    pub fn weight_bound(&self) -> u32 {
        self.weight_bound
    }

    /// Coordinates of an element in this basis; fails if any monomial falls
    /// outside the weight bound or the degree differs.
    pub fn coords(&self, scs: &ScsDGLA, x: &TotElem) -> Result<Vec<Rat>, CalcError> {
        if x.total_degree() != self.degree {
            return Err(CalcError::Invalid(format!(
                "element has total degree {}, ambient basis has {}",
                x.total_degree(),
                self.degree
            )));
        }
        let mut out = vec![rzero(); self.entries.len()];
        for n in 0..scs.len() {
            for (name, form) in x.level(n) {
                for ((dts, exps), c) in decompose(form) {
                    let key = (n, name.clone(), dts, exps);
                    let idx = self.index.get(&key).ok_or_else(|| {
                        CalcError::Invalid(format!(
                            "monomial of {} at level {n} exceeds weight bound {}",
                            name, self.weight_bound
                        ))
                    })?;
                    out[*idx] = c;
                }
            }
        }
        Ok(out)
    }

    /// Reassembles an element from coordinates.
    pub fn elem(&self, scs: &ScsDGLA, coords: &[Rat]) -> Result<TotElem, CalcError> {
        if coords.len() != self.entries.len() {
            return Err(CalcError::Invalid(format!(
                "ambient basis has {} monomials, found {} coordinates",
                self.entries.len(),
                coords.len()
            )));
        }
        let mut out = TotElem::zero(scs, self.degree);
        for ((n, name, dts, exps), c) in self.entries.iter().zip(coords) {
            if c.is_zero() {
                continue;
            }
            let m = SimplexForm::monomial(*n, exps, dts, c.clone())?;
            let sum = out.component(*n, name).add(&m)?;
            out.set_component(scs, *n, name, sum)?;
        }
        Ok(out)
    }
}

/// A basis of the weight-bounded slice of the totalization in one total
/// degree: the kernel of all matching conditions inside the ambient space.
#[derive(Debug, Clone)]
pub struct TotSlice {
    ambient: AmbientBasis,
    basis: Vec<Vec<Rat>>,
}

impl TotSlice {
    /// Solves the matching conditions on the ambient space.
    pub fn build(scs: &ScsDGLA, degree: i64, weight_bound: u32) -> Result<Self, CalcError> {
        let ambient = AmbientBasis::build(scs, degree, weight_bound)?;
        // Columns of the constraint matrix: the stacked matching defects of
        // each ambient basis monomial, indexed by rows assigned on first use.
        let mut row_index: BTreeMap<(usize, usize, String, Vec<u8>, Vec<u32>), usize> =
            BTreeMap::new();
        let mut cols: Vec<BTreeMap<usize, Rat>> = Vec::with_capacity(ambient.dim());
        for i in 0..ambient.dim() {
            let mut coords = vec![rzero(); ambient.dim()];
            coords[i] = rone();
            let x = ambient.elem(scs, &coords)?;
            let mut col = BTreeMap::new();
            for n in 1..scs.len() {
                for k in 0..=n {
                    for (w, form) in matching_defect(scs, &x, n, k)? {
                        for ((dts, exps), c) in decompose(&form) {
                            let key = (n, k, w.clone(), dts, exps);
                            let next = row_index.len();
                            let row = *row_index.entry(key).or_insert(next);
                            col.insert(row, c);
                        }
                    }
                }
            }
            cols.push(col);
        }
        let nrows = row_index.len();
        let mut m = QMat::zeros(nrows, ambient.dim());
        for (j, col) in cols.iter().enumerate() {
            for (&i, c) in col {
                m.set(i, j, c.clone());
            }
        }
        let basis = m.kernel_basis();
        Ok(TotSlice { ambient, basis })
    }

    /// The ambient monomial basis this slice lives in.
    pub fn ambient(&self) -> &AmbientBasis {
        &self.ambient
    }

    /// Slice dimension.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The `i`-th basis element, materialized.
    pub fn elem(&self, scs: &ScsDGLA, i: usize) -> Result<TotElem, CalcError> {
        let coords = self.basis.get(i).ok_or(CalcError::IndexRange {
            index: i,
            n: self.basis.len().saturating_sub(1),
        })?;
        self.ambient.elem(scs, coords)
    }

    /// Basis vectors as columns of a matrix over the ambient basis.
    pub fn basis_matrix(&self) -> QMat {
        QMat::from_cols(self.basis.clone(), self.ambient.dim())
    }
}

/// Materializes a basis of the weight-bounded slice in one total degree.
pub fn tot_slice_basis(
    scs: &ScsDGLA,
    degree: i64,
    weight_bound: u32,
) -> Result<Vec<TotElem>, CalcError> {
    let slice = TotSlice::build(scs, degree, weight_bound)?;
    (0..slice.dim()).map(|i| slice.elem(scs, i)).collect()
}

/// The matrix of the differential from one ambient space to the next, in
/// their monomial bases.
pub fn tot_diff_matrix(
    scs: &ScsDGLA,
    src: &AmbientBasis,
    dst: &AmbientBasis,
) -> Result<QMat, CalcError> {
    let mut cols = Vec::with_capacity(src.dim());
    for i in 0..src.dim() {
        let mut coords = vec![rzero(); src.dim()];
        coords[i] = rone();
        let x = src.elem(scs, &coords)?;
        cols.push(dst.coords(scs, &tot_diff(scs, &x)?)?);
    }
    Ok(QMat::from_cols(cols, dst.dim()))
}

/// The window of total degrees in which the totalization can be nonzero.
pub fn tot_degree_window(scs: &ScsDGLA) -> Result<(i64, i64), CalcError> {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for n in 0..scs.len() {
        for g in scs.level(n)?.degrees() {
            lo = lo.min(g);
            hi = hi.max(g + n as i64);
        }
    }
    if lo > hi {
        lo = 0;
        hi = 0;
    }
    Ok((lo, hi))
}

/// Cohomology dimensions of the weight-bounded slice complex, as
/// `(first degree, dims per degree)`. For bounds large enough to span the
/// Whitney images these agree with the cochain-complex dimensions of the
/// diagram; the bound used is part of the answer.
pub fn tot_cohomology_dims(
    scs: &ScsDGLA,
    weight_bound: u32,
) -> Result<(i64, Vec<usize>), CalcError> {
    let (lo, hi) = tot_degree_window(scs)?;
    let mut dims = Vec::with_capacity((hi - lo + 1) as usize);
    let mut previous_image_rank = 0usize;
    let mut slice = TotSlice::build(scs, lo, weight_bound)?;
    for p in lo..=hi {
        let next_ambient = AmbientBasis::build(scs, p + 1, weight_bound)?;
        let d = tot_diff_matrix(scs, slice.ambient(), &next_ambient)?;
        let d_on_slice = d.mul(&slice.basis_matrix());
        let cocycles = slice.dim() - d_on_slice.rank();
        dims.push(cocycles - previous_image_rank);
        previous_image_rank = d_on_slice.rank();
        if p < hi {
            slice = TotSlice::build(scs, p + 1, weight_bound)?;
        }
    }
    Ok((lo, dims))
}

/// The matrix of the integration map [`whitney_i`] from a slice basis to
/// the canonical cochain basis of the same total degree.
pub fn whitney_matrix(scs: &ScsDGLA, slice: &TotSlice) -> Result<QMat, CalcError> {
    let p = slice.ambient().degree();
    let mut cols = Vec::with_capacity(slice.dim());
    for i in 0..slice.dim() {
        let x = slice.elem(scs, i)?;
        cols.push(whitney_i(scs, &x)?.coords(scs)?);
    }
    Ok(QMat::from_cols(cols, cech_dim(scs, p)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cech::{cech_cohomology_dims, cech_diff};
    use crate::scs::tests::{circle_ser, constant_heisenberg_ser, disc_ser};
    use polycalc::rat::rat;

    fn circle() -> ScsDGLA {
        ScsDGLA::from_ser(&circle_ser()).unwrap()
    }

    fn disc() -> ScsDGLA {
        ScsDGLA::from_ser(&disc_ser()).unwrap()
    }

    fn heisenberg2() -> ScsDGLA {
        ScsDGLA::from_ser(&constant_heisenberg_ser()).unwrap()
    }

    /// A hand-built degree-0 element of the circle totalization:
    /// `x_0 = c_0 ⊗ u0 + c_1 ⊗ u1`, `x_1 = f_a(t) ⊗ a + f_b(t) ⊗ b` is
    /// compatible iff `f_a(0) = f_b(0) = c_0` and `f_a(1) = f_b(1) = c_1`.
    fn circle_interpolant() -> (ScsDGLA, TotElem) {
        let scs = circle();
        let mut x = TotElem::zero(&scs, 0);
        x.set_component(&scs, 0, "u0", SimplexForm::constant(0, rat(2, 1)))
            .unwrap();
        x.set_component(&scs, 0, "u1", SimplexForm::constant(0, rat(5, 1)))
            .unwrap();
        // f(t) = 2 + 3t interpolates 2 ↦ 5 on both overlap names.
        let f = SimplexForm::constant(1, rat(2, 1))
            .add(&SimplexForm::t(1, 1).unwrap().scale(&rat(3, 1)))
            .unwrap();
        x.set_component(&scs, 1, "a", f.clone()).unwrap();
        x.set_component(&scs, 1, "b", f).unwrap();
        (scs, x)
    }

    #[test]
    fn matching_conditions_detect_compatibility() {
        let (scs, x) = circle_interpolant();
        assert!(tot_check(&scs, &x).unwrap());
        // Breaking one endpoint breaks exactly the corresponding face.
        let mut y = x.clone();
        let g = SimplexForm::constant(1, rat(2, 1))
            .add(&SimplexForm::t(1, 1).unwrap().scale(&rat(4, 1)))
            .unwrap();
        y.set_component(&scs, 1, "b", g).unwrap();
        assert!(!tot_check(&scs, &y).unwrap());
        assert!(matching_defect(&scs, &y, 1, 1).unwrap().is_empty());
        assert!(!matching_defect(&scs, &y, 1, 0).unwrap().is_empty());
    }

    #[test]
    fn differential_preserves_matching_and_squares_to_zero() {
        let (scs, x) = circle_interpolant();
        let dx = tot_diff(&scs, &x).unwrap();
        assert!(tot_check(&scs, &dx).unwrap());
        assert!(tot_diff(&scs, &dx).unwrap().is_zero());
        // d(2 + 3t) = 3dt on both overlaps.
        assert_eq!(
            dx.component(1, "a"),
            SimplexForm::dt(1, 1).unwrap().scale(&rat(3, 1))
        );
    }

    #[test]
    fn slice_bases_solve_the_matching_conditions() {
        for (scs, bound) in [(circle(), 3u32), (disc(), 3), (heisenberg2(), 3)] {
            let (lo, hi) = tot_degree_window(&scs).unwrap();
            for p in lo..=hi {
                let slice = TotSlice::build(&scs, p, bound).unwrap();
                for i in 0..slice.dim() {
                    let x = slice.elem(&scs, i).unwrap();
                    assert!(tot_check(&scs, &x).unwrap(), "degree {p}, column {i}");
                    assert!(x.max_weight().unwrap_or(0) <= bound);
                }
            }
        }
    }

    #[test]
    fn circle_slice_dimensions() {
        let scs = circle();
        // Degree 0 at weight ≤ 3: interpolants (f_a, f_b) of cubic degree
        // pinned to common endpoints — 4 + 2 free coefficients.
        assert_eq!(TotSlice::build(&scs, 0, 3).unwrap().dim(), 6);
        // Degree 1: unconstrained quadratic-coefficient 1-forms on both
        // overlap names.
        assert_eq!(TotSlice::build(&scs, 1, 3).unwrap().dim(), 6);
    }

    #[test]
    fn totalization_cohomology_matches_cochain_cohomology() {
        for ser in [circle_ser(), disc_ser(), constant_heisenberg_ser()] {
            let scs = ScsDGLA::from_ser(&ser).unwrap();
            let (tot_lo, tot_dims) = tot_cohomology_dims(&scs, 3).unwrap();
            let (cech_lo, cech_dims) = cech_cohomology_dims(&scs).unwrap();
            assert_eq!(tot_lo, cech_lo);
            assert_eq!(tot_dims, cech_dims);
        }
    }

    #[test]
    fn circle_cohomology_by_hand() {
        let (lo, dims) = tot_cohomology_dims(&circle(), 3).unwrap();
        assert_eq!((lo, dims), (0, vec![1, 1]));
    }

    #[test]
    fn integration_is_a_surjective_chain_map() {
        for ser in [circle_ser(), disc_ser(), constant_heisenberg_ser()] {
            let scs = ScsDGLA::from_ser(&ser).unwrap();
            let (lo, hi) = tot_degree_window(&scs).unwrap();
            for p in lo..=hi {
                let slice = TotSlice::build(&scs, p, 3).unwrap();
                // Chain map: I ∘ D = δ ∘ I on every slice basis element.
                for i in 0..slice.dim() {
                    let x = slice.elem(&scs, i).unwrap();
                    let lhs = whitney_i(&scs, &tot_diff(&scs, &x).unwrap()).unwrap();
                    let rhs = cech_diff(&scs, &whitney_i(&scs, &x).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "degree {p}, column {i}");
                }
                // Surjectivity: the integration matrix has full row rank.
                let m = whitney_matrix(&scs, &slice).unwrap();
                assert_eq!(m.rank(), cech_dim(&scs, p).unwrap(), "degree {p}");
            }
        }
    }

    #[test]
    fn bracket_satisfies_the_graded_identities() {
        // The two-level constant Heisenberg diagram has a nonzero bracket;
        // pair slice elements across degrees 0 and 1.
        let scs = heisenberg2();
        let pool: Vec<TotElem> = (0..=2)
            .flat_map(|p| tot_slice_basis(&scs, p, 2).unwrap())
            .collect();
        assert!(pool.iter().any(|x| !x.is_zero()));
        for x in &pool {
            for y in &pool {
                let xy = tot_bracket(&scs, x, y).unwrap();
                // Graded antisymmetry.
                let yx = tot_bracket(&scs, y, x).unwrap();
                let sign = sign_pow(x.total_degree() * y.total_degree() + 1);
                assert_eq!(xy, yx.scale(&sign), "antisymmetry");
                // Bracket of compatible tuples is compatible.
                assert!(tot_check(&scs, &xy).unwrap());
                // Graded Leibniz.
                let lhs = tot_diff(&scs, &xy).unwrap();
                let rhs = tot_bracket(&scs, &tot_diff(&scs, x).unwrap(), y)
                    .unwrap()
                    .add(
                        &tot_bracket(&scs, x, &tot_diff(&scs, y).unwrap())
                            .unwrap()
                            .scale(&sign_pow(x.total_degree())),
                        &scs,
                    )
                    .unwrap();
                assert_eq!(lhs, rhs, "Leibniz");
                for z in &pool {
                    // Graded Jacobi: [x,[y,z]] = [[x,y],z] + (−1)^{x̄ȳ}[y,[x,z]].
                    let lhs = tot_bracket(&scs, x, &tot_bracket(&scs, y, z).unwrap()).unwrap();
                    let rhs = tot_bracket(&scs, &xy, z)
                        .unwrap()
                        .add(
                            &tot_bracket(&scs, y, &tot_bracket(&scs, x, z).unwrap())
                                .unwrap()
                                .scale(&sign_pow(x.total_degree() * y.total_degree())),
                            &scs,
                        )
                        .unwrap();
                    assert_eq!(lhs, rhs, "Jacobi");
                }
            }
        }
    }

    #[test]
    fn equalizer_embedding() {
        let scs = circle();
        // u0 + u1 is the equalizer element of the circle diagram.
        let alg = scs.level(0).unwrap();
        let sum = alg
            .add(
                &alg.basis_elem("u0").unwrap(),
                &alg.basis_elem("u1").unwrap(),
            )
            .unwrap();
        let e = e_map(&scs, &sum).unwrap();
        assert!(tot_check(&scs, &e).unwrap());
        assert_eq!(e.component(0, "u0"), SimplexForm::one(0));
        assert_eq!(e.component(1, "a"), SimplexForm::one(1));
        // Integration recovers the inclusion into the cochain complex.
        let i = whitney_i(&scs, &e).unwrap();
        assert_eq!(i.level(0).unwrap(), &sum);
        // u0 alone is not an equalizer element.
        let err = e_map(&scs, &alg.basis_elem("u0").unwrap()).unwrap_err();
        assert!(err.to_string().contains("equalizer"), "{err}");
    }

    #[test]
    fn equalizer_embedding_preserves_the_bracket() {
        let scs = heisenberg2();
        let alg = scs.level(0).unwrap();
        let e1 = alg.basis_elem("e").unwrap();
        let f1 = alg.basis_elem("f").unwrap();
        let lhs = e_map(&scs, &alg.bracket(&e1, &f1).unwrap()).unwrap();
        let rhs = tot_bracket(
            &scs,
            &e_map(&scs, &e1).unwrap(),
            &e_map(&scs, &f1).unwrap(),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
        // And the differential.
        let lhs = e_map(&scs, &alg.diff(&e1).unwrap()).unwrap();
        let rhs = tot_diff(&scs, &e_map(&scs, &e1).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ambient_round_trip_and_bound_errors() {
        let scs = circle();
        let ambient = AmbientBasis::build(&scs, 0, 3).unwrap();
        assert_eq!(ambient.dim(), 10);
        let (_, x) = circle_interpolant();
        let coords = ambient.coords(&scs, &x).unwrap();
        assert_eq!(ambient.elem(&scs, &coords).unwrap(), x);
        // A quartic coefficient exceeds the bound.
        let mut y = TotElem::zero(&scs, 0);
        y.set_component(
            &scs,
            1,
            "a",
            SimplexForm::monomial(1, &[4], &[], rone()).unwrap(),
        )
        .unwrap();
        assert!(ambient.coords(&scs, &y).is_err());
        // Degree mismatch is rejected.
        assert!(ambient.coords(&scs, &TotElem::zero(&scs, 1)).is_err());
    }

    #[test]
    fn component_validation() {
        let scs = circle();
        let mut x = TotElem::zero(&scs, 0);
        assert!(x
            .set_component(&scs, 0, "zz", SimplexForm::one(0))
            .is_err());
        assert!(x
            .set_component(&scs, 1, "a", SimplexForm::one(0))
            .is_err());
        // Wrong form degree for the total degree.
        assert!(x
            .set_component(&scs, 1, "a", SimplexForm::dt(1, 1).unwrap())
            .is_err());
        let a = TotElem::zero(&scs, 0);
        let b = TotElem::zero(&scs, 1);
        assert!(a.add(&b, &scs).is_err());
    }
}
