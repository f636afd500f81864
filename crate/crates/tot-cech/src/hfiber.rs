//! The homotopy fiber of a DGLA morphism `χ : L → M`.
//!
//! An element of degree `i` is a pair `(l, m(t))` with `l ∈ L^i` and
//! `m ∈ (Ω_1 ⊗ M)^i` — a polynomial path of `M`-elements — subject to the
//! endpoint conditions
//!
//! ```text
//! m(0) = 0      and      m(1) = χ(l),
//! ```
//!
//! where evaluation sets `dt ↦ 0`. Differential and bracket act
//! componentwise (tensor differential and wedge-coupled bracket on the path
//! factor), and both preserve the endpoint conditions, so the homotopy
//! fiber is itself a DGLA. It is isomorphic to the totalization of the
//! two-level diagram `L ⇉ M` with faces `χ` and `0` — [`HFiber::to_scs_ser`]
//! exports that diagram, and the slice machinery here solves the endpoint
//! conditions directly, giving an independent route to the same dimensions.
//!
//! [`HFiber::integrate01`] integrates the path: `(l, p(t) + q(t)·dt) ↦
//! class of ∫_0^1 q` in the cokernel of `χ` (degree shifted down by one,
//! carrying the differential `−d̄`). It is a surjective chain map.

use std::collections::BTreeMap;

use mc_deform::findgla::FinDGLASer;
use mc_deform::{Carrier, FinDGLA, GVec};
use polycalc::linalg::{quotient_representatives, QMat};
use polycalc::rat::{rone, rzero, sign_pow, Rat, Zero};
use polycalc::CalcError;

use crate::scs::{apply_linear, check_dgla_morphism, linear_map_to_ser, parse_linear_map};
use crate::scs::{FaceSer, ScsDGLASer};
use crate::sform::{weight_basis, SimplexForm};

/// A validated DGLA morphism `χ : L → M` together with its two algebras.
#[derive(Debug, Clone)]
pub struct HFiber {
    l: FinDGLA,
    m: FinDGLA,
    chi: BTreeMap<String, GVec>,
}

/// An element `(l, m(t))` of the homotopy fiber: the path component maps
/// basis names of `M` to forms on the 1-simplex. For degree `i`, a basis
/// name of degree `g` carries a form of degree `i − g ∈ {0, 1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct HFiberElem {
    degree: i64,
    l: GVec,
    m: BTreeMap<String, SimplexForm>,
}

impl HFiberElem {
    /// Total degree.
    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// The `L`-component.
    pub fn l(&self) -> &GVec {
        &self.l
    }

    /// The path coefficient of one `M`-basis name (zero if absent).
    pub fn m_component(&self, name: &str) -> SimplexForm {
        self.m
            .get(name)
            .cloned()
            .unwrap_or_else(|| SimplexForm::zero(1))
    }

    /// Iterates over the nonzero path coefficients.
    pub fn m_parts(&self) -> impl Iterator<Item = (&String, &SimplexForm)> {
        self.m.iter()
    }

    /// `true` when both components vanish.
    pub fn is_zero(&self) -> bool {
        self.l.is_zero() && self.m.is_empty()
    }
}

/// Builds and validates the homotopy fiber of `χ : L → M`; the morphism is
/// given by source basis name with omitted names mapping to zero.
pub fn hfiber_build(
    l_ser: &FinDGLASer,
    m_ser: &FinDGLASer,
    chi_ser: &FaceSer,
) -> Result<HFiber, CalcError> {
    let l = FinDGLA::from_ser(l_ser)?;
    let m = FinDGLA::from_ser(m_ser)?;
    let chi = parse_linear_map(&l, &m, chi_ser, "morphism")?;
    check_dgla_morphism(&l, &m, &chi, "morphism")?;
    Ok(HFiber { l, m, chi })
}

impl HFiber {
    /// The source algebra `L`.
    pub fn source(&self) -> &FinDGLA {
        &self.l
    }

    /// The target algebra `M`.
    pub fn target(&self) -> &FinDGLA {
        &self.m
    }

    /// Applies `χ` to a homogeneous element of `L`.
    pub fn chi_apply(&self, v: &GVec) -> Result<GVec, CalcError> {
        self.l.check(v, v.degree)?;
        apply_linear(&self.chi, v, &self.m)
    }

    /// The endpoint defects of a candidate pair: `(m(0), m(1) − χ(l))`,
    /// both elements of `M`. The pair belongs to the fiber iff both vanish.
    fn endpoint_defects(
        &self,
        l: &GVec,
        m: &BTreeMap<String, SimplexForm>,
        degree: i64,
    ) -> Result<(GVec, GVec), CalcError> {
        let mut at0 = GVec::zero(degree);
        let mut at1 = GVec::zero(degree);
        for (name, form) in m {
            // ∂*_1 evaluates at t = 0, ∂*_0 at t = 1; both kill dt terms.
            let v0 = form
                .face_pullback(1)?
                .constant_value()
                .expect("0-simplex forms are constants");
            let v1 = form
                .face_pullback(0)?
                .constant_value()
                .expect("0-simplex forms are constants");
            if !v0.is_zero() {
                at0.coords.insert(name.clone(), v0);
            }
            if !v1.is_zero() {
                at1.coords.insert(name.clone(), v1);
            }
        }
        let chi_l = self.chi_apply(l)?;
        let at1 = self.m.sub(&at1, &chi_l)?;
        Ok((at0, at1))
    }

    /// Wraps a pair after validating degrees, form homogeneity, and the
    /// endpoint conditions.
    pub fn elem(
        &self,
        degree: i64,
        l: GVec,
        m: BTreeMap<String, SimplexForm>,
    ) -> Result<HFiberElem, CalcError> {
        if l.degree != degree {
            return Err(CalcError::Invalid(format!(
                "first component has degree {}, expected {degree}",
                l.degree
            )));
        }
        self.l.check(&l, degree)?;
        let mut stored = BTreeMap::new();
        for (name, form) in m {
            let g = self
                .m
                .degree_of(&name)
                .ok_or_else(|| CalcError::Invalid(format!("unknown target name {name}")))?;
            if form.nsimplex() != 1 {
                return Err(CalcError::Invalid(format!(
                    "path coefficient of {name} must live on the 1-simplex"
                )));
            }
            if form.is_zero() {
                continue;
            }
            let expected = degree - g;
            if !(0..=1).contains(&expected) || form.form_degree() != Some(expected as usize) {
                return Err(CalcError::Invalid(format!(
                    "path coefficient of {name} must be homogeneous of form degree \
                     {expected}, found {form}"
                )));
            }
            stored.insert(name, form);
        }
        let (at0, at1) = self.endpoint_defects(&l, &stored, degree)?;
        if !at0.is_zero() {
            return Err(CalcError::Invalid(
                "endpoint condition fails: the path does not start at 0".into(),
            ));
        }
        if !at1.is_zero() {
            return Err(CalcError::Invalid(
                "endpoint condition fails: the path does not end at the morphism image".into(),
            ));
        }
        Ok(HFiberElem {
            degree,
            l,
            m: stored,
        })
    }

    /// The zero element of one degree.
    pub fn zero(&self, degree: i64) -> HFiberElem {
        HFiberElem {
            degree,
            l: GVec::zero(degree),
            m: BTreeMap::new(),
        }
    }

    /// Sum of two elements of equal degree.
    pub fn add(&self, a: &HFiberElem, b: &HFiberElem) -> Result<HFiberElem, CalcError> {
        if a.degree != b.degree {
            return Err(CalcError::Invalid(format!(
                "cannot add elements of degrees {} and {}",
                a.degree, b.degree
            )));
        }
        let mut m = a.m.clone();
        for (name, form) in &b.m {
            let sum = match m.remove(name) {
                None => form.clone(),
                Some(old) => old.add(form)?,
            };
            if !sum.is_zero() {
                m.insert(name.clone(), sum);
            }
        }
        Ok(HFiberElem {
            degree: a.degree,
            l: self.l.add(&a.l, &b.l)?,
            m,
        })
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat, a: &HFiberElem) -> HFiberElem {
        if c.is_zero() {
            return self.zero(a.degree);
        }
        HFiberElem {
            degree: a.degree,
            l: self.l.scale(c, &a.l),
            m: a.m.iter().map(|(k, f)| (k.clone(), f.scale(c))).collect(),
        }
    }

    /// The differential `D(l, m) = (d_L l, d(m))` with the tensor
    /// differential on the path factor. Preserves the endpoint conditions.
    pub fn diff(&self, z: &HFiberElem) -> Result<HFiberElem, CalcError> {
        let mut m: BTreeMap<String, SimplexForm> = BTreeMap::new();
        let mut accumulate = |name: &str, form: SimplexForm| -> Result<(), CalcError> {
            let sum = match m.remove(name) {
                None => form,
                Some(old) => old.add(&form)?,
            };
            if !sum.is_zero() {
                m.insert(name.to_string(), sum);
            }
            Ok(())
        };
        for (name, form) in &z.m {
            let df = form.d();
            if !df.is_zero() {
                accumulate(name, df)?;
            }
            let dv = self.m.diff(&self.m.basis_elem(name)?)?;
            if dv.is_zero() {
                continue;
            }
            let sign = sign_pow(form.form_degree().expect("stored forms are homogeneous") as i64);
            for (w, c) in &dv.coords {
                accumulate(w, form.scale(&(sign.clone() * c.clone())))?;
            }
        }
        Ok(HFiberElem {
            degree: z.degree + 1,
            l: self.l.diff(&z.l)?,
            m,
        })
    }

    /// The bracket `[(l_1, m_1), (l_2, m_2)] = ([l_1, l_2], [m_1, m_2])`
    /// with the wedge-coupled bracket on the path factor.
    pub fn bracket(&self, a: &HFiberElem, b: &HFiberElem) -> Result<HFiberElem, CalcError> {
        let mut m: BTreeMap<String, SimplexForm> = BTreeMap::new();
        for (v_name, omega) in &a.m {
            let v = self.m.basis_elem(v_name)?;
            for (u_name, eta) in &b.m {
                let u = self.m.basis_elem(u_name)?;
                let vu = self.m.bracket(&v, &u)?;
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
                    let sum = match m.remove(w) {
                        None => add,
                        Some(old) => old.add(&add)?,
                    };
                    if !sum.is_zero() {
                        m.insert(w.clone(), sum);
                    }
                }
            }
        }
        Ok(HFiberElem {
            degree: a.degree + b.degree,
            l: self.l.bracket(&a.l, &b.l)?,
            m,
        })
    }

    /// Names of the standard basis vectors of `M` in one degree that
    /// represent a basis of `coker(χ)` in that degree.
    pub fn coker_rep_names(&self, degree: i64) -> Result<Vec<String>, CalcError> {
        let names = self.m.basis_names(degree);
        let dim = names.len();
        let mut standard = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut e = vec![rzero(); dim];
            e[j] = rone();
            standard.push(e);
        }
        let boundaries: Result<Vec<Vec<Rat>>, CalcError> = self
            .l
            .basis_names(degree)
            .iter()
            .map(|n| Ok(self.m.coords_vec(&self.chi_apply(&self.l.basis_elem(n)?)?)))
            .collect();
        let reps = quotient_representatives(&standard, &boundaries?);
        Ok(reps
            .into_iter()
            .map(|r| {
                let j = r
                    .iter()
                    .position(|c| !c.is_zero())
                    .expect("representatives are standard basis vectors");
                names[j].clone()
            })
            .collect())
    }

    /// The canonical representative of `v + im(χ)`: the unique element of
    /// the span of [`Self::coker_rep_names`] in the class of `v`. The class
    /// is zero iff the result is zero.
    pub fn coker_normalize(&self, v: &GVec) -> Result<GVec, CalcError> {
        self.m.check(v, v.degree)?;
        if v.is_zero() {
            return Ok(GVec::zero(v.degree));
        }
        let degree = v.degree;
        let chi_cols: Result<Vec<Vec<Rat>>, CalcError> = self
            .l
            .basis_names(degree)
            .iter()
            .map(|n| Ok(self.m.coords_vec(&self.chi_apply(&self.l.basis_elem(n)?)?)))
            .collect();
        let chi_cols = chi_cols?;
        let rep_names = self.coker_rep_names(degree)?;
        let names = self.m.basis_names(degree);
        let rep_cols: Vec<Vec<Rat>> = rep_names
            .iter()
            .map(|rn| {
                let j = names.iter().position(|n| n == rn).expect("known name");
                let mut e = vec![rzero(); names.len()];
                e[j] = rone();
                e
            })
            .collect();
        let mut cols = chi_cols.clone();
        cols.extend(rep_cols);
        let system = QMat::from_cols(cols, names.len());
        let target = self.m.coords_vec(v);
        let solution = system
            .solve(&target)
            .expect("morphism image and representatives span the target degree");
        let mut out = GVec::zero(degree);
        for (rep, c) in rep_names.iter().zip(&solution[chi_cols.len()..]) {
            if !c.is_zero() {
                out.coords.insert(rep.clone(), c.clone());
            }
        }
        Ok(out)
    }

    /// The differential induced on the shifted cokernel: the class of `v`
    /// maps to the class of `−d_M v` (the sign is the degree-shift
    /// convention that makes [`Self::integrate01`] a chain map).
    pub fn coker_shifted_diff(&self, v: &GVec) -> Result<GVec, CalcError> {
        let dv = self.m.diff(v)?;
        self.coker_normalize(&self.m.scale(&-rone(), &dv))
    }

    /// Integrates the path over `[0, 1]`: `(l, p(t) + q(t)·dt) ↦ ∫_0^1 q`
    /// as a normalized cokernel class one degree down. A surjective chain
    /// map onto the shifted cokernel.
    pub fn integrate01(&self, z: &HFiberElem) -> Result<GVec, CalcError> {
        let mut raw = GVec::zero(z.degree - 1);
        for (name, form) in &z.m {
            // ∫_0^1 t^a dt = 1/(a+1): integration over the 1-simplex.
            let value = form.simplex_integrate();
            if !value.is_zero() {
                raw.coords.insert(name.clone(), value);
            }
        }
        self.coker_normalize(&raw)
    }

    /// The two-level semicosimplicial diagram `L ⇉ M` with faces `χ` and
    /// `0`, whose totalization this fiber is isomorphic to.
    pub fn to_scs_ser(&self) -> ScsDGLASer {
        ScsDGLASer {
            levels: vec![self.l.to_ser(), self.m.to_ser()],
            faces: vec![vec![linear_map_to_ser(&self.chi), Vec::new()]],
        }
    }

    /// All degrees in which the fiber can be nonzero.
    pub fn degree_window(&self) -> (i64, i64) {
        let mut lo = i64::MAX;
        let mut hi = i64::MIN;
        for g in self.l.degrees() {
            lo = lo.min(g);
            hi = hi.max(g);
        }
        for g in self.m.degrees() {
            lo = lo.min(g);
            hi = hi.max(g + 1);
        }
        if lo > hi {
            (0, 0)
        } else {
            (lo, hi)
        }
    }

    /// A basis of the weight-bounded slice in one degree, solving the
    /// endpoint conditions directly (independently of the totalization
    /// machinery).
    pub fn slice_basis(&self, degree: i64, bound: u32) -> Result<Vec<HFiberElem>, CalcError> {
        // Ambient coordinates: the L-basis in this degree, then for each
        // M-basis name of degree g one coordinate per monomial of form
        // degree `degree − g ∈ {0,1}` and weight ≤ bound.
        let l_names: Vec<String> = self.l.basis_names(degree).to_vec();
        let mut m_entries: Vec<(String, SimplexForm)> = Vec::new();
        for g in self.m.degrees().collect::<Vec<_>>() {
            let j = degree - g;
            if !(0..=1).contains(&j) {
                continue;
            }
            for name in self.m.basis_names(g) {
                for mono in weight_basis(1, j as usize, bound) {
                    m_entries.push((name.clone(), mono));
                }
            }
        }
        let ambient_dim = l_names.len() + m_entries.len();
        // Constraint rows: for each M-basis name of the element degree, the
        // evaluations of its 0-form coefficient at t = 0 and t = 1 − χ(l).
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for w in self.m.basis_names(degree) {
            let mut row0 = vec![rzero(); ambient_dim];
            let mut row1 = vec![rzero(); ambient_dim];
            for (i, (name, mono)) in m_entries.iter().enumerate() {
                if name != w {
                    continue;
                }
                let col = l_names.len() + i;
                if let Some(v) = mono.face_pullback(1)?.constant_value() {
                    row0[col] = v;
                }
                if let Some(v) = mono.face_pullback(0)?.constant_value() {
                    row1[col] = v;
                }
            }
            for (j, ln) in l_names.iter().enumerate() {
                let image = self.chi_apply(&self.l.basis_elem(ln)?)?;
                if let Some(c) = image.coords.get(w) {
                    row1[j] = -c.clone();
                }
            }
            rows.push(row0);
            rows.push(row1);
        }
        let constraints = if rows.is_empty() {
            QMat::zeros(0, ambient_dim)
        } else {
            QMat::from_rows(rows)
        };
        let kernel = constraints.kernel_basis();
        kernel
            .into_iter()
            .map(|coords| {
                let mut l = GVec::zero(degree);
                for (j, ln) in l_names.iter().enumerate() {
                    if !coords[j].is_zero() {
                        l.coords.insert(ln.clone(), coords[j].clone());
                    }
                }
                let mut m: BTreeMap<String, SimplexForm> = BTreeMap::new();
                for (i, (name, mono)) in m_entries.iter().enumerate() {
                    let c = &coords[l_names.len() + i];
                    if c.is_zero() {
                        continue;
                    }
                    let add = mono.scale(c);
                    let sum = match m.remove(name) {
                        None => add,
                        Some(old) => old.add(&add)?,
                    };
                    m.insert(name.clone(), sum);
                }
                self.elem(degree, l, m)
            })
            .collect()
    }

    /// Coordinates of an element over the union of a slice basis — used to
    /// express differentials of slice elements exactly.
    fn coords_in(
        &self,
        z: &HFiberElem,
        basis: &[HFiberElem],
    ) -> Result<Option<Vec<Rat>>, CalcError> {
        // Flatten everything over the (name, monomial) support of basis + z.
        let mut keys: Vec<(Option<String>, String, Vec<u8>, Vec<u32>)> = Vec::new();
        let mut index: BTreeMap<(Option<String>, String, Vec<u8>, Vec<u32>), usize> =
            BTreeMap::new();
        let mut flatten = |e: &HFiberElem| -> Vec<(usize, Rat)> {
            let mut out = Vec::new();
            for (name, c) in &e.l.coords {
                let key = (None, name.clone(), Vec::new(), Vec::new());
                let next = index.len();
                let idx = *index.entry(key.clone()).or_insert_with(|| {
                    keys.push(key);
                    next
                });
                out.push((idx, c.clone()));
            }
            for (name, form) in &e.m {
                for (dts, p) in form.parts() {
                    for (exps, c) in p.terms() {
                        let key = (Some(name.clone()), name.clone(), dts.clone(), exps.clone());
                        let next = index.len();
                        let idx = *index.entry(key.clone()).or_insert_with(|| {
                            keys.push(key);
                            next
                        });
                        out.push((idx, c.clone()));
                    }
                }
            }
            out
        };
        let cols: Vec<Vec<(usize, Rat)>> = basis.iter().map(&mut flatten).collect();
        let target = flatten(z);
        let nrows = index.len();
        let mut mat = QMat::zeros(nrows, basis.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, c) in col {
                mat.set(*i, j, c.clone());
            }
        }
        let mut rhs = vec![rzero(); nrows];
        for (i, c) in target {
            rhs[i] = c;
        }
        Ok(mat.solve(&rhs))
    }

    /// Cohomology dimensions of the weight-bounded slice complex, as
    /// `(first degree, dims per degree)`.
    pub fn cohomology_dims(&self, bound: u32) -> Result<(i64, Vec<usize>), CalcError> {
        let (lo, hi) = self.degree_window();
        let mut dims = Vec::with_capacity((hi - lo + 1) as usize);
        let mut previous_rank = 0usize;
        for p in lo..=hi {
            let basis = self.slice_basis(p, bound)?;
            let next_basis = self.slice_basis(p + 1, bound)?;
            // Matrix of the differential from this slice to the next.
            let mut cols = Vec::with_capacity(basis.len());
            for z in &basis {
                let dz = self.diff(z)?;
                let coords = self.coords_in(&dz, &next_basis)?.ok_or_else(|| {
                    CalcError::Invalid(
                        "differential leaves the weight-bounded slice; raise the bound".into(),
                    )
                })?;
                cols.push(coords);
            }
            let d = QMat::from_cols(cols, next_basis.len());
            let rank = d.rank();
            dims.push(basis.len() - rank - previous_rank);
            previous_rank = rank;
        }
        Ok((lo, dims))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scs::ScsDGLA;
    use crate::tot::{tot_cohomology_dims, TotSlice};
    use mc_deform::findgla::FinDGLASer;
    use polycalc::rat::rat;

    fn combo(pairs: &[(&str, &str)]) -> Vec<(String, String)> {
        pairs
            .iter()
            .map(|(n, c)| (n.to_string(), c.to_string()))
            .collect()
    }

    /// `L = ⟨y'⟩ in degree 1 with zero differential, `M = ⟨x, y⟩ with
    /// `d(x) = y`, and `χ(y') = y`.
    fn contraction_fiber() -> HFiber {
        let l_ser = FinDGLASer {
            basis: vec![("yp".into(), 1)],
            diff: vec![],
            brackets: vec![],
        };
        let m_ser = FinDGLASer {
            basis: vec![("x".into(), 0), ("y".into(), 1)],
            diff: vec![("x".into(), combo(&[("y", "1")]))],
            brackets: vec![],
        };
        let chi: FaceSer = vec![("yp".into(), combo(&[("y", "1")]))];
        hfiber_build(&l_ser, &m_ser, &chi).unwrap()
    }

    /// The fiber of the zero morphism into the Heisenberg algebra — the
    /// smallest fiber with a nonzero bracket.
    fn heisenberg_fiber() -> HFiber {
        let l_ser = FinDGLASer {
            basis: vec![("z".into(), 1)],
            diff: vec![],
            brackets: vec![],
        };
        let m_ser = FinDGLASer {
            basis: vec![("e".into(), 0), ("f".into(), 1), ("g".into(), 1)],
            diff: vec![("e".into(), combo(&[("f", "1")]))],
            brackets: vec![("e".into(), "f".into(), combo(&[("g", "1")]))],
        };
        hfiber_build(&l_ser, &m_ser, &vec![]).unwrap()
    }

    #[test]
    fn morphism_is_validated() {
        let l_ser = FinDGLASer {
            basis: vec![("yp".into(), 1)],
            diff: vec![],
            brackets: vec![],
        };
        let m_ser = FinDGLASer {
            basis: vec![("x".into(), 0), ("y".into(), 1)],
            diff: vec![("x".into(), combo(&[("y", "1")]))],
            brackets: vec![],
        };
        // Sending y' to a degree-0 element is not degree-preserving.
        let bad: FaceSer = vec![("yp".into(), combo(&[("x", "1")]))];
        assert!(hfiber_build(&l_ser, &m_ser, &bad).is_err());
    }

    #[test]
    fn endpoint_conditions_are_enforced() {
        let hf = contraction_fiber();
        let t = SimplexForm::t(1, 1).unwrap();
        // (y', t·y) is a valid element: starts at 0, ends at χ(y') = y.
        let l = hf.source().basis_elem("yp").unwrap();
        let m = BTreeMap::from([("y".to_string(), t.clone())]);
        assert!(hf.elem(1, l.clone(), m).is_ok());
        // (y', t²·y) is also valid; (y', (1−t)·y) starts at y ≠ 0.
        let one_minus_t = SimplexForm::t(1, 0).unwrap();
        let m = BTreeMap::from([("y".to_string(), one_minus_t)]);
        let err = hf.elem(1, l.clone(), m).unwrap_err();
        assert!(err.to_string().contains("start"), "{err}");
        // (y', t·x + …) has the wrong form degree for x in degree 1.
        let m = BTreeMap::from([("x".to_string(), t.clone())]);
        let err = hf.elem(1, l.clone(), m).unwrap_err();
        assert!(err.to_string().contains("form degree"), "{err}");
        // (y', 0) ends at 0 ≠ χ(y') = y.
        let err = hf.elem(1, l, BTreeMap::new()).unwrap_err();
        assert!(err.to_string().contains("end"), "{err}");
    }

    #[test]
    fn path_integration_examples() {
        let hf = contraction_fiber();
        // The zero element integrates to zero.
        assert!(hf.integrate01(&hf.zero(1)).unwrap().is_zero());
        // A pure 0-form path integrates to zero: (y', t·χ(y')).
        let l = hf.source().basis_elem("yp").unwrap();
        let t = SimplexForm::t(1, 1).unwrap();
        let z = hf
            .elem(1, l, BTreeMap::from([("y".to_string(), t)]))
            .unwrap();
        assert!(hf.integrate01(&z).unwrap().is_zero());
        // (0, dt ⊗ x) integrates to the nonzero class of x.
        let dt = SimplexForm::dt(1, 1).unwrap();
        let z = hf
            .elem(1, GVec::zero(1), BTreeMap::from([("x".to_string(), dt)]))
            .unwrap();
        let class = hf.integrate01(&z).unwrap();
        assert_eq!(class.coords.get("x"), Some(&rone()));
        // (0, t·dt ⊗ x) integrates to x/2.
        let tdt = SimplexForm::monomial(1, &[1], &[1], rone()).unwrap();
        let z = hf
            .elem(1, GVec::zero(1), BTreeMap::from([("x".to_string(), tdt)]))
            .unwrap();
        assert_eq!(
            hf.integrate01(&z).unwrap().coords.get("x"),
            Some(&rat(1, 2))
        );
    }

    #[test]
    fn cokernel_normalization() {
        let hf = contraction_fiber();
        // y = χ(y') is trivial in the cokernel; x survives.
        let y = hf.target().basis_elem("y").unwrap();
        assert!(hf.coker_normalize(&y).unwrap().is_zero());
        let x = hf.target().basis_elem("x").unwrap();
        assert_eq!(hf.coker_normalize(&x).unwrap(), x);
        assert_eq!(hf.coker_rep_names(0).unwrap(), vec!["x".to_string()]);
        assert!(hf.coker_rep_names(1).unwrap().is_empty());
    }

    #[test]
    fn integration_is_a_chain_map_to_the_shifted_cokernel() {
        let hf = contraction_fiber();
        let (lo, hi) = hf.degree_window();
        for p in lo..=hi {
            for (i, z) in hf.slice_basis(p, 3).unwrap().iter().enumerate() {
                let lhs = hf.integrate01(&hf.diff(z).unwrap()).unwrap();
                let rhs = hf.coker_shifted_diff(&hf.integrate01(z).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "degree {p}, basis element {i}");
            }
        }
    }

    #[test]
    fn contraction_fiber_cohomology_is_frozen() {
        let hf = contraction_fiber();
        for bound in 1..=3u32 {
            let (lo, dims) = hf.cohomology_dims(bound).unwrap();
            assert_eq!(lo, 0);
            assert_eq!(dims, vec![0, 1, 0], "bound {bound}");
        }
    }

    #[test]
    fn fiber_matches_the_totalization_of_its_diagram() {
        for hf in [contraction_fiber(), heisenberg_fiber()] {
            let scs = ScsDGLA::from_ser(&hf.to_scs_ser()).unwrap();
            let bound = 3u32;
            let (lo, hi) = hf.degree_window();
            for p in lo..=hi {
                let direct = hf.slice_basis(p, bound).unwrap().len();
                let via_tot = TotSlice::build(&scs, p, bound).unwrap().dim();
                assert_eq!(direct, via_tot, "slice dimension in degree {p}");
            }
            let (flo, fdims) = hf.cohomology_dims(bound).unwrap();
            let (tlo, tdims) = tot_cohomology_dims(&scs, bound).unwrap();
            assert_eq!((flo, fdims), (tlo, tdims));
        }
    }

    #[test]
    fn slice_elements_satisfy_the_endpoint_conditions() {
        let hf = contraction_fiber();
        // Degree 1 at bound D: paths q⊗y pinned at both ends plus free
        // r·dt⊗x — dimension 2D.
        for bound in 1..=3u32 {
            let basis = hf.slice_basis(1, bound).unwrap();
            assert_eq!(basis.len(), 2 * bound as usize);
        }
        // Degree 0: paths p⊗x with p(0) = p(1) = 0 — dimension D − 1.
        assert_eq!(hf.slice_basis(0, 3).unwrap().len(), 2);
    }

    #[test]
    fn bracket_closes_and_satisfies_leibniz() {
        let hf = heisenberg_fiber();
        // Elements of the zero-morphism fiber: loops vanishing at both ends.
        let bump = SimplexForm::t(1, 1)
            .unwrap()
            .mul(&SimplexForm::t(1, 0).unwrap())
            .unwrap(); // t(1−t)
        let a = hf
            .elem(
                0,
                GVec::zero(0),
                BTreeMap::from([("e".to_string(), bump.clone())]),
            )
            .unwrap();
        let dt = SimplexForm::dt(1, 1).unwrap();
        let b = hf
            .elem(
                2,
                GVec::zero(2),
                BTreeMap::from([("f".to_string(), dt)]),
            )
            .unwrap();
        let ab = hf.bracket(&a, &b).unwrap();
        // [e,f] = g with a dt-valued coefficient t(1−t)·dt.
        assert!(!ab.is_zero());
        assert_eq!(ab.m_component("g"), bump.mul(&SimplexForm::dt(1, 1).unwrap()).unwrap());
        // The bracket still satisfies the endpoint conditions.
        let revalidated = hf.elem(2, ab.l().clone(), ab.m.clone());
        assert!(revalidated.is_ok());
        // Graded Leibniz: D[a,b] = [Da,b] + (−1)^{|a|}[a,Db].
        let lhs = hf.diff(&ab).unwrap();
        let rhs = hf
            .add(
                &hf.bracket(&hf.diff(&a).unwrap(), &b).unwrap(),
                &hf.scale(
                    &sign_pow(a.degree()),
                    &hf.bracket(&a, &hf.diff(&b).unwrap()).unwrap(),
                ),
            )
            .unwrap();
        assert_eq!(lhs, rhs);
        // D² = 0 on both factors.
        assert!(hf.diff(&hf.diff(&a).unwrap()).unwrap().is_zero());
    }
}
