//! Order-by-order extension of embedded coisotropic deformation data.
//!
//! A deformation of the coordinate subspace `Z = {z₁ = … = z_p = 0}` inside
//! the Poisson chart `(ℂⁿ, π)` is *embedded* when it is cut out by moving
//! `Z` with an ambient flow: the Maurer–Cartan datum is `σ = e^{−η} ∗ 0` for
//! a gauge element `η` in polyvector fields, with every coefficient of `σ`
//! in `ℒ²_Z` (the bivectors whose purely normal part vanishes on `Z`), so
//! that the transported ideal stays coisotropic for the deformed bracket.
//!
//! [`mc_extend`] performs one extension step `ℚ[t]/(t^k) → ℚ[t]/(t^{k+1})`:
//! it reconstructs a generating gauge `η` ([`reconstruct_gauge`]), transports
//! zero one order further, and reads the failure of the new coefficient to
//! stay in `ℒ²_Z` as a cocycle in the normal complex `(⋀^{≥1}𝒩, d̄_π)`. The
//! step succeeds precisely when that cocycle bounds, in which case a normal
//! correction of the gauge removes it; otherwise its nonzero class in the
//! obstruction slice is returned. [`anchor_first_order`] produces first-order
//! data from closed one-forms on `Z` through the anchor map.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use polycalc::coiso::{in_lz, is_coisotropic, normal_dpi, normal_project};
use polycalc::linalg::QMat;
use polycalc::ops::{anchor, holo_d, is_poisson, lichnerowicz};
use polycalc::poly::Poly;
use polycalc::rat::{rone, Rat, Zero};
use polycalc::{CalcError, CoisoSetup, Form, NormalPVF, PVF};

use crate::artin::ArtinA;
use crate::carrier::{Carrier, PvfCarrier};
use crate::mc::{gauge, is_mc, GaugeElem, MCElem};
use crate::slices::{
    combine, exponent_vectors, normal_graded_slice, obstruction_class_in_slice, pi_degree,
    slice_coords,
};

/// Result of one embedded extension step.
#[derive(Debug, Clone)]
pub enum EmbedOutcome {
    /// A lift to the next order. Components below the new power are
    /// unchanged; the new component is again `ℒ²_Z`-constrained, and the
    /// whole element satisfies the Maurer–Cartan equation.
    Extended(MCElem<PVF>),
    /// No embedded lift exists at `t^power`. The normal projection of the
    /// transported residual is a `d̄_π`-cocycle with nonzero class.
    Obstructed {
        power: usize,
        /// The residual cocycle in `⋀²𝒩`.
        cocycle: NormalPVF,
        /// Its class per coefficient degree, as coordinates in the
        /// obstruction-space basis of that degree slice; only degrees with a
        /// nonzero class are listed.
        class: Vec<(u32, Vec<Rat>)>,
    },
}

/// A monomial `z^α ∂_I` of the full polyvector algebra, keyed by `(I, α)`.
type Key = (Vec<u8>, Vec<u32>);

pub(crate) fn theta_keys(n: usize, ext: usize, degree: u32) -> Vec<Key> {
    let exps = exponent_vectors(n, 0, degree);
    (1..=n as u8)
        .combinations(ext)
        .flat_map(|idx| exps.iter().map(move |e| (idx.clone(), e.clone())))
        .collect()
}

pub(crate) fn key_to_pvf(n: usize, key: &Key) -> Result<PVF, CalcError> {
    let powers: Vec<(usize, u32)> = key
        .1
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| (i + 1, e))
        .collect();
    PVF::component(n, &key.0, Poly::monomial(n, &powers, rone()))
}

fn decompose_pvf(x: &PVF) -> BTreeMap<Key, Rat> {
    let mut out = BTreeMap::new();
    for (mi, f) in x.components() {
        for (exps, c) in f.terms() {
            out.insert((mi.indices().to_vec(), exps.clone()), c.clone());
        }
    }
    out
}

/// Solves `d_π(v) = rhs` for a vector field `v` of coefficient degree
/// `src_degree`, where `rhs` is a bivector field. Returns the
/// lexicographically minimal solution, or `None` if the window has none.
fn solve_ambient_window(
    setup: &CoisoSetup,
    rhs: &PVF,
    src_degree: u32,
) -> Result<Option<PVF>, CalcError> {
    let n = setup.n();
    let src_keys = theta_keys(n, 1, src_degree);
    let mut images: Vec<BTreeMap<Key, Rat>> = Vec::with_capacity(src_keys.len());
    let mut row_keys: BTreeSet<Key> = decompose_pvf(rhs).into_keys().collect();
    for key in &src_keys {
        let image = decompose_pvf(&lichnerowicz(setup, &key_to_pvf(n, key)?)?);
        row_keys.extend(image.keys().cloned());
        images.push(image);
    }
    let row_index: BTreeMap<&Key, usize> =
        row_keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut mat = QMat::zeros(row_keys.len(), src_keys.len());
    for (j, image) in images.iter().enumerate() {
        for (k, c) in image {
            mat.set(row_index[k], j, c.clone());
        }
    }
    let mut rhs_coords = vec![polycalc::rat::rzero(); row_keys.len()];
    for (k, c) in decompose_pvf(rhs) {
        rhs_coords[row_index[&k]] = c;
    }
    let Some(sol) = mat.solve(&rhs_coords) else {
        return Ok(None);
    };
    let mut v = PVF::zero(n);
    for (key, c) in src_keys.iter().zip(&sol) {
        if !c.is_zero() {
            v = v.add(&key_to_pvf(n, key)?.scale(c))?;
        }
    }
    Ok(Some(v))
}

fn require_homogeneous(setup: &CoisoSetup) -> Result<u32, CalcError> {
    pi_degree(setup).ok_or_else(|| {
        CalcError::Invalid(
            "this solver needs homogeneous Poisson coefficients (the degree windows \
             of the gauge and normal solves would otherwise be unbounded)"
                .into(),
        )
    })
}

/// Transports zero by `e^{−η}` with the gauge coefficients zero-padded to
/// the given ring.
fn transport_zero(
    ambient: &PvfCarrier,
    ring: &ArtinA,
    eta: &[PVF],
) -> Result<MCElem<PVF>, CalcError> {
    let n = ambient.setup().n();
    let mut comps: Vec<PVF> = eta.iter().map(|e| e.neg()).collect();
    comps.resize(ring.ideal_powers(), PVF::zero(n));
    let moved_by = GaugeElem::new(ambient, ring, comps)?;
    gauge(ambient, ring, &moved_by, &MCElem::zero(ambient, ring))
}

/// Reconstructs a gauge element `η` with `e^{−η} ∗ 0 = x`, order by order.
///
/// Each order solves `d_π(η_j) = x_j − (e^{−η^{<j}} ∗ 0)_j` in the
/// coefficient-degree windows fixed by the homogeneous degree of `π`,
/// taking the lexicographically minimal solution. An unsolvable window
/// means `x` is not in the gauge orbit of `0`, i.e. not an embedded datum,
/// and is reported as an error naming the failing order.
pub fn reconstruct_gauge(
    setup: &CoisoSetup,
    x: &MCElem<PVF>,
) -> Result<GaugeElem<PVF>, CalcError> {
    if !is_poisson(setup.pi())? {
        return Err(CalcError::NotPoisson);
    }
    let c = require_homogeneous(setup)?;
    let ambient = PvfCarrier::new(setup.clone());
    let k = x.order();
    let ring = ArtinA::new(k);
    for (i, comp) in x.comps().iter().enumerate() {
        ambient.check(comp, 1).map_err(|e| {
            CalcError::Invalid(format!("coefficient of t^{}: {e}", i + 1))
        })?;
    }
    let mut eta: Vec<PVF> = vec![PVF::zero(setup.n()); k.saturating_sub(1)];
    for j in 1..k {
        let sigma = transport_zero(&ambient, &ring, &eta[..j - 1])?;
        let y = x.coeff(j).sub(sigma.coeff(j))?;
        if y.is_zero() {
            continue;
        }
        let mut eta_j = PVF::zero(setup.n());
        for (e, y_e) in y.coeff_degree_split() {
            let src_degree = e as i64 + 1 - c as i64;
            let solved = if src_degree < 0 {
                None
            } else {
                solve_ambient_window(setup, &y_e, src_degree as u32)?
            };
            let Some(v) = solved else {
                return Err(CalcError::Invalid(format!(
                    "no ambient gauge transports zero onto the datum at order {j} \
                     (coefficient degree {e}): not an embedded deformation"
                )));
            };
            eta_j = eta_j.add(&v)?;
        }
        eta[j - 1] = eta_j;
    }
    let check = transport_zero(&ambient, &ring, &eta)?;
    if &check != x {
        return Err(CalcError::Invalid(
            "gauge reconstruction failed to reproduce the datum".into(),
        ));
    }
    GaugeElem::new(&ambient, &ring, eta)
}

/// One embedded extension step `ℚ[t]/(t^k) → ℚ[t]/(t^{k+1})`.
///
/// The input must be an `ℒ²_Z`-constrained Maurer–Cartan element of embedded
/// type over its own ring. The step transports zero one order further along
/// the reconstructed gauge; the normal projection `ν` of the new coefficient
/// is always a `d̄_π`-cocycle. If `ν` bounds (`d̄_π μ = −ν`), the gauge is
/// corrected by the lift of `μ` and the extended element is returned with
/// lower orders unchanged; otherwise the nonzero class of `ν` is reported.
pub fn mc_extend(setup: &CoisoSetup, x: &MCElem<PVF>) -> Result<EmbedOutcome, CalcError> {
    if !is_coisotropic(setup)? {
        return Err(CalcError::NotCoisotropic);
    }
    let c = require_homogeneous(setup)?;
    let constrained = PvfCarrier::constrained(setup.clone());
    let k = x.order();
    let ring_k = ArtinA::new(k);
    for (i, comp) in x.comps().iter().enumerate() {
        constrained.check(comp, 1).map_err(|e| {
            CalcError::Invalid(format!("coefficient of t^{}: {e}", i + 1))
        })?;
    }
    if !is_mc(&constrained, &ring_k, x)? {
        return Err(CalcError::Invalid(format!(
            "input does not satisfy the Maurer–Cartan equation over {ring_k}"
        )));
    }
    let eta = reconstruct_gauge(setup, x)?;
    let ambient = PvfCarrier::new(setup.clone());
    let ring_next = ArtinA::new(k + 1);
    let sigma = transport_zero(&ambient, &ring_next, eta.comps())?;
    for j in 1..k {
        if sigma.coeff(j) != x.coeff(j) {
            return Err(CalcError::Invalid(
                "zero-padded transport disturbed an already-fixed order".into(),
            ));
        }
    }
    let nu = normal_project(setup, sigma.coeff(k))?;
    if !normal_dpi(setup, &nu)?.is_zero() {
        return Err(CalcError::Invalid(
            "transported residual is not closed in the normal complex".into(),
        ));
    }
    // Solve d̄_π(μ) = −ν degree slice by degree slice.
    let mut mu = NormalPVF::zero(setup);
    let mut obstructions: Vec<(u32, Vec<Rat>)> = Vec::new();
    for (e, nu_e) in nu.coeff_degree_split() {
        let rhs = slice_coords(setup, &nu_e.neg(), 2, e)?;
        let src_degree = e as i64 + 1 - c as i64;
        let solution = if src_degree < 0 {
            None
        } else {
            let src = normal_graded_slice(setup, 1, src_degree as u32)?;
            src.diff
                .solve(&rhs)
                .map(|sol| combine(setup, &src.basis, &sol))
                .transpose()?
        };
        match solution {
            Some(m) => mu = mu.add(&m)?,
            None => {
                let class = obstruction_class_in_slice(setup, &nu_e, e)?;
                debug_assert!(class.iter().any(|v| !v.is_zero()));
                obstructions.push((e, class));
            }
        }
    }
    if !obstructions.is_empty() {
        return Ok(EmbedOutcome::Obstructed {
            power: k,
            cocycle: nu,
            class: obstructions,
        });
    }
    let mut corrected: Vec<PVF> = eta.comps().to_vec();
    corrected.resize(k.saturating_sub(1), PVF::zero(setup.n()));
    corrected.push(mu.lift());
    let sigma = transport_zero(&ambient, &ring_next, &corrected)?;
    for j in 1..k {
        if sigma.coeff(j) != x.coeff(j) {
            return Err(CalcError::Invalid(
                "normal correction disturbed an already-fixed order".into(),
            ));
        }
    }
    let lifted = MCElem::new(&constrained, &ring_next, sigma.comps().to_vec())?;
    debug_assert!(is_mc(&constrained, &ring_next, &lifted)?);
    Ok(EmbedOutcome::Extended(lifted))
}

/// The first-order embedded coisotropic deformation induced by a closed
/// one-form on `Z` through the anchor map: returns the normal direction
/// `μ = P(π^#(ω)) ∈ ker d̄_π` and the first-order Maurer–Cartan coefficient
/// `x₁ = d_π(π^#(ω)) ∈ ℒ²_Z`.
///
/// The form must be intrinsic to `Z` — components only along
/// `dz_{p+1}, …, dz_n` with coefficients independent of `z₁, …, z_p` — and
/// `∂`-closed; both are validated.
pub fn anchor_first_order(
    setup: &CoisoSetup,
    omega: &Form,
) -> Result<(NormalPVF, PVF), CalcError> {
    if !is_coisotropic(setup)? {
        return Err(CalcError::NotCoisotropic);
    }
    let p = setup.p();
    for (mi, f) in omega.components() {
        if mi.deg() != 1 {
            return Err(CalcError::Invalid(format!(
                "expected a one-form, found a degree-{} component",
                mi.deg()
            )));
        }
        if (mi.indices()[0] as usize) <= p || !f.independent_of_first(p) {
            return Err(CalcError::Invalid(
                "the one-form must be intrinsic to the subspace: components along \
                 the tangent differentials with coefficients constant in the normal \
                 directions"
                    .into(),
            ));
        }
    }
    if !holo_d(omega).is_zero() {
        return Err(CalcError::Invalid(
            "the one-form is not closed, so it induces no deformation datum".into(),
        ));
    }
    let v = anchor(setup, omega)?;
    let mu = normal_project(setup, &v)?;
    let x1 = lichnerowicz(setup, &v)?;
    if !normal_dpi(setup, &mu)?.is_zero() {
        return Err(CalcError::Invalid(
            "anchor image is not closed in the normal complex".into(),
        ));
    }
    if !in_lz(setup, &x1) {
        return Err(CalcError::Invalid(
            "anchor image does not satisfy the coisotropy constraint".into(),
        ));
    }
    Ok((mu, x1))
}
