//! Maurer–Cartan elements, the gauge action, and the
//! Baker–Campbell–Hausdorff product over `ℚ[t]/(t^N)`.
//!
//! Elements are stored as their list of `t`-coefficients. Everything takes
//! coefficients in the maximal ideal `(t)`, so brackets raise `t`-valuation
//! and all exponential series terminate exactly at order `N`.

use polycalc::rat::{factorial, rint, rone, Rat, Zero};
use polycalc::CalcError;

use crate::artin::ArtinA;
use crate::carrier::Carrier;
use crate::findgla::{FinDGLA, GVec};
use crate::slices::class_coordinates;

/// A degree-1 element `x = Σ_{k≥1} x_k t^k` of `L¹ ⊗ (t)` over `ℚ[t]/(t^N)`.
///
/// `comps[i]` is the coefficient of `t^{i+1}`; the list has length `N − 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct MCElem<E> {
    order: usize,
    comps: Vec<E>,
}

/// A degree-0 element `a = Σ_{k≥1} a_k t^k` of `L⁰ ⊗ (t)`, acting on
/// Maurer–Cartan elements through `e^a ∗ −`. Same layout as [`MCElem`].
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeElem<E> {
    order: usize,
    comps: Vec<E>,
}

fn new_element<C: Carrier>(
    carrier: &C,
    ring: &ArtinA,
    comps: Vec<C::Elt>,
    degree: i64,
    what: &str,
) -> Result<(usize, Vec<C::Elt>), CalcError> {
    if comps.len() != ring.ideal_powers() {
        return Err(CalcError::Invalid(format!(
            "{what} over {ring} needs {} coefficients (t¹..t^{}), got {}",
            ring.ideal_powers(),
            ring.ideal_powers(),
            comps.len()
        )));
    }
    for (i, c) in comps.iter().enumerate() {
        carrier.check(c, degree).map_err(|e| {
            CalcError::Invalid(format!("{what}: coefficient of t^{}: {e}", i + 1))
        })?;
    }
    Ok((ring.order(), comps))
}

impl<E> MCElem<E> {
    /// Wraps the coefficients of `t¹, …, t^{N−1}` after checking that each
    /// one is a valid degree-1 element of the carrier.
    pub fn new<C: Carrier<Elt = E>>(
        carrier: &C,
        ring: &ArtinA,
        comps: Vec<E>,
    ) -> Result<Self, CalcError> {
        let (order, comps) = new_element(carrier, ring, comps, 1, "Maurer–Cartan element")?;
        Ok(MCElem { order, comps })
    }

    pub fn zero<C: Carrier<Elt = E>>(carrier: &C, ring: &ArtinA) -> Self {
        MCElem {
            order: ring.order(),
            comps: (0..ring.ideal_powers()).map(|_| carrier.zero(1)).collect(),
        }
    }

    /// The truncation order `N` of the ring `ℚ[t]/(t^N)`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The coefficients of `t¹, …, t^{N−1}` in order.
    pub fn comps(&self) -> &[E] {
        &self.comps
    }

    /// The coefficient of `t^power` (`1 ≤ power < N`).
    pub fn coeff(&self, power: usize) -> &E {
        assert!(
            power >= 1 && power < self.order,
            "power {power} out of range 1..{}",
            self.order
        );
        &self.comps[power - 1]
    }
}

impl<E> GaugeElem<E> {
    /// Wraps the coefficients of `t¹, …, t^{N−1}` after checking that each
    /// one is a valid degree-0 element of the carrier.
    pub fn new<C: Carrier<Elt = E>>(
        carrier: &C,
        ring: &ArtinA,
        comps: Vec<E>,
    ) -> Result<Self, CalcError> {
        let (order, comps) = new_element(carrier, ring, comps, 0, "gauge element")?;
        Ok(GaugeElem { order, comps })
    }

    pub fn zero<C: Carrier<Elt = E>>(carrier: &C, ring: &ArtinA) -> Self {
        GaugeElem {
            order: ring.order(),
            comps: (0..ring.ideal_powers()).map(|_| carrier.zero(0)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn comps(&self) -> &[E] {
        &self.comps
    }

    pub fn coeff(&self, power: usize) -> &E {
        assert!(
            power >= 1 && power < self.order,
            "power {power} out of range 1..{}",
            self.order
        );
        &self.comps[power - 1]
    }
}

// ---------------------------------------------------------------------------
// Truncated t-series arithmetic. A series is a Vec of length N whose k-th
// entry is the coefficient of t^k (entry 0 is the constant term, always zero
// for the series built from MCElem/GaugeElem).
// ---------------------------------------------------------------------------

pub(crate) fn series_zero<C: Carrier>(carrier: &C, order: usize, degree: i64) -> Vec<C::Elt> {
    (0..order).map(|_| carrier.zero(degree)).collect()
}

pub(crate) fn series_from_comps<C: Carrier>(
    carrier: &C,
    order: usize,
    comps: &[C::Elt],
    degree: i64,
) -> Vec<C::Elt> {
    let mut s = series_zero(carrier, order, degree);
    for (i, c) in comps.iter().enumerate() {
        if i + 1 < order {
            s[i + 1] = c.clone();
        }
    }
    s
}

pub(crate) fn series_add<C: Carrier>(
    carrier: &C,
    a: &[C::Elt],
    b: &[C::Elt],
) -> Result<Vec<C::Elt>, CalcError> {
    a.iter().zip(b).map(|(x, y)| carrier.add(x, y)).collect()
}

pub(crate) fn series_scale<C: Carrier>(carrier: &C, c: &Rat, a: &[C::Elt]) -> Vec<C::Elt> {
    a.iter().map(|x| carrier.scale(c, x)).collect()
}

pub(crate) fn series_is_zero<C: Carrier>(carrier: &C, a: &[C::Elt]) -> bool {
    a.iter().all(|x| carrier.is_zero(x))
}

/// Coefficient-wise convolution `[a,b]_k = Σ_{i+j=k} [a_i, b_j]`, truncated
/// at the common order.
pub(crate) fn series_bracket<C: Carrier>(
    carrier: &C,
    a: &[C::Elt],
    b: &[C::Elt],
    degree: i64,
) -> Result<Vec<C::Elt>, CalcError> {
    let order = a.len().min(b.len());
    let mut out = series_zero(carrier, order, degree);
    for i in 0..order {
        if carrier.is_zero(&a[i]) {
            continue;
        }
        for j in 0..order - i {
            if carrier.is_zero(&b[j]) {
                continue;
            }
            let term = carrier.bracket(&a[i], &b[j])?;
            out[i + j] = carrier.add(&out[i + j], &term)?;
        }
    }
    Ok(out)
}

pub(crate) fn series_diff<C: Carrier>(
    carrier: &C,
    a: &[C::Elt],
) -> Result<Vec<C::Elt>, CalcError> {
    a.iter().map(|x| carrier.diff(x)).collect()
}

// ---------------------------------------------------------------------------
// Maurer–Cartan residual and gauge action.
// ---------------------------------------------------------------------------

/// The Maurer–Cartan defect `dx + ½[x,x]` as the list of coefficients of
/// `t¹, …, t^{N−1}` (each a degree-2 element). `x` solves the Maurer–Cartan
/// equation over `ℚ[t]/(t^N)` exactly when every entry is zero.
pub fn mc_residual<C: Carrier>(
    carrier: &C,
    ring: &ArtinA,
    x: &MCElem<C::Elt>,
) -> Result<Vec<C::Elt>, CalcError> {
    if x.order() != ring.order() {
        return Err(CalcError::Invalid(format!(
            "element over order {} does not live in {ring}",
            x.order()
        )));
    }
    let xs = series_from_comps(carrier, ring.order(), x.comps(), 1);
    let half = polycalc::rat::rat(1, 2);
    let quad = series_scale(carrier, &half, &series_bracket(carrier, &xs, &xs, 2)?);
    let full = series_add(carrier, &series_diff(carrier, &xs)?, &quad)?;
    Ok(full.into_iter().skip(1).collect())
}

/// Whether `x` satisfies the Maurer–Cartan equation over `ring`.
pub fn is_mc<C: Carrier>(
    carrier: &C,
    ring: &ArtinA,
    x: &MCElem<C::Elt>,
) -> Result<bool, CalcError> {
    Ok(mc_residual(carrier, ring, x)?
        .iter()
        .all(|r| carrier.is_zero(r)))
}

/// The gauge action `e^a ∗ x = x + Σ_{n≥0} ad_a^n([a,x] − da) / (n+1)!`.
///
/// Because `a` has coefficients in `(t)`, the series terminates: the `n`-th
/// term has `t`-valuation at least `n + 1`.
pub fn gauge<C: Carrier>(
    carrier: &C,
    ring: &ArtinA,
    a: &GaugeElem<C::Elt>,
    x: &MCElem<C::Elt>,
) -> Result<MCElem<C::Elt>, CalcError> {
    if a.order() != ring.order() || x.order() != ring.order() {
        return Err(CalcError::Invalid(format!(
            "gauge element (order {}) and Maurer–Cartan element (order {}) must both live in {ring}",
            a.order(),
            x.order()
        )));
    }
    let order = ring.order();
    let aser = series_from_comps(carrier, order, a.comps(), 0);
    let xser = series_from_comps(carrier, order, x.comps(), 1);
    // u = [a,x] − da
    let u = series_add(
        carrier,
        &series_bracket(carrier, &aser, &xser, 1)?,
        &series_scale(carrier, &rint(-1), &series_diff(carrier, &aser)?),
    )?;
    let mut acc = xser;
    let mut term = u; // ad_a^n(u), starting at n = 0
    let mut n: usize = 0;
    while !series_is_zero(carrier, &term) {
        let coeff = rone() / factorial(n + 1);
        acc = series_add(carrier, &acc, &series_scale(carrier, &coeff, &term))?;
        term = series_bracket(carrier, &aser, &term, 1)?;
        n += 1;
        if n > order {
            return Err(CalcError::Invalid(
                "gauge series failed to terminate: coefficients not in the maximal ideal".into(),
            ));
        }
    }
    if !carrier.is_zero(&acc[0]) {
        return Err(CalcError::Invalid(
            "gauge action produced a nonzero constant term".into(),
        ));
    }
    MCElem::new(carrier, ring, acc.into_iter().skip(1).collect())
}

// ---------------------------------------------------------------------------
// Baker–Campbell–Hausdorff by the explicit Dynkin series.
// ---------------------------------------------------------------------------

/// The Baker–Campbell–Hausdorff product `BCH(a,b) = log(e^a e^b)` for
/// degree-0 elements with coefficients in `(t)`, by the Dynkin formula
///
/// ```text
/// Σ_{n≥1} (−1)^{n−1}/n  Σ  [X^{p₁} Y^{q₁} ⋯ X^{pₙ} Y^{qₙ}]
///                          ───────────────────────────────
///                          (Σᵢ (pᵢ+qᵢ)) · Πᵢ pᵢ! qᵢ!
/// ```
///
/// summed over block sequences with `(pᵢ,qᵢ) ≠ (0,0)`, where the numerator
/// is the right-nested bracket of the word. Words of length `≥ N` vanish in
/// `ℚ[t]/(t^N)`, so only lengths up to `N − 1` are enumerated.
pub fn bch<C: Carrier>(
    carrier: &C,
    ring: &ArtinA,
    a: &GaugeElem<C::Elt>,
    b: &GaugeElem<C::Elt>,
) -> Result<GaugeElem<C::Elt>, CalcError> {
    if a.order() != ring.order() || b.order() != ring.order() {
        return Err(CalcError::Invalid(format!(
            "both factors must live over {ring}"
        )));
    }
    let order = ring.order();
    let max_len = order - 1;
    let aser = series_from_comps(carrier, order, a.comps(), 0);
    let bser = series_from_comps(carrier, order, b.comps(), 0);

    // Right-nested bracket of the word encoded by `blocks`.
    let word_value = |blocks: &[(usize, usize)]| -> Result<Vec<C::Elt>, CalcError> {
        let mut letters: Vec<&[C::Elt]> = Vec::new();
        for &(p, q) in blocks {
            for _ in 0..p {
                letters.push(&aser);
            }
            for _ in 0..q {
                letters.push(&bser);
            }
        }
        let mut value = letters.last().unwrap().to_vec();
        for letter in letters[..letters.len() - 1].iter().rev() {
            value = series_bracket(carrier, letter, &value, 0)?;
        }
        Ok(value)
    };

    let mut acc = series_zero(carrier, order, 0);
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    // Depth-first enumeration of block sequences with total length ≤ max_len.
    fn enumerate<F: FnMut(&[(usize, usize)]) -> Result<(), CalcError>>(
        blocks: &mut Vec<(usize, usize)>,
        remaining: usize,
        emit: &mut F,
    ) -> Result<(), CalcError> {
        if !blocks.is_empty() {
            emit(blocks)?;
        }
        for len in 1..=remaining {
            for p in 0..=len {
                let q = len - p;
                blocks.push((p, q));
                enumerate(blocks, remaining - len, emit)?;
                blocks.pop();
            }
        }
        Ok(())
    }
    {
        let mut emit = |blocks: &[(usize, usize)]| -> Result<(), CalcError> {
            let n = blocks.len() as i64;
            let total: usize = blocks.iter().map(|&(p, q)| p + q).sum();
            let value = word_value(blocks)?;
            if series_is_zero(carrier, &value) {
                return Ok(());
            }
            let mut denom = rint(n) * rint(total as i64);
            for &(p, q) in blocks {
                denom = denom * factorial(p) * factorial(q);
            }
            let coeff = polycalc::rat::sign_pow(n - 1) / denom;
            acc = series_add(carrier, &acc, &series_scale(carrier, &coeff, &value))?;
            Ok(())
        };
        enumerate(&mut blocks, max_len, &mut emit)?;
    }
    if !carrier.is_zero(&acc[0]) {
        return Err(CalcError::Invalid(
            "BCH produced a nonzero constant term".into(),
        ));
    }
    GaugeElem::new(carrier, ring, acc.into_iter().skip(1).collect())
}

/// Checks the composition law of the gauge action:
/// `e^a ∗ (e^b ∗ x) = e^{BCH(a,b)} ∗ x`.
pub fn gauge_compose_check<C: Carrier>(
    carrier: &C,
    ring: &ArtinA,
    a: &GaugeElem<C::Elt>,
    b: &GaugeElem<C::Elt>,
    x: &MCElem<C::Elt>,
) -> Result<bool, CalcError> {
    let lhs = gauge(carrier, ring, a, &gauge(carrier, ring, b, x)?)?;
    let rhs = gauge(carrier, ring, &bch(carrier, ring, a, b)?, x)?;
    Ok(lhs == rhs)
}

// ---------------------------------------------------------------------------
// Order-by-order extension in a finite-dimensional carrier.
// ---------------------------------------------------------------------------

/// Result of one extension step for a Maurer–Cartan element in a
/// finite-dimensional DGLA.
#[derive(Debug, Clone, PartialEq)]
pub enum GenericOutcome {
    /// A lift to the next order, with the new coefficient chosen as the
    /// lexicographically minimal solution of the linear extension problem.
    Extended(MCElem<GVec>),
    /// No lift exists. The residual coefficient of `t^power` is a `d`-closed
    /// degree-2 element whose cohomology class (coordinates in the reduced
    /// row-echelon basis of `H² = ker d² / im d¹`) is nonzero.
    Obstructed {
        power: usize,
        cocycle: GVec,
        class: Vec<Rat>,
    },
}

/// Extends a Maurer–Cartan element over `ℚ[t]/(t^k)` to `ℚ[t]/(t^{k+1})`,
/// or reports the obstruction.
///
/// The input must satisfy the Maurer–Cartan equation exactly over its own
/// ring. The residual coefficient `r_k = ½ Σ_{i+j=k} [x_i, x_j]` at the new
/// power `t^k` is always `d`-closed; the step succeeds iff it is exact,
/// in which case the new coefficient solves `d(x_k) = −r_k`.
pub fn mc_extend_generic(alg: &FinDGLA, x: &MCElem<GVec>) -> Result<GenericOutcome, CalcError> {
    let k = x.order();
    let ring_k = ArtinA::new(k);
    let residual = mc_residual(alg, &ring_k, x)?;
    if residual.iter().any(|r| !alg.is_zero(r)) {
        return Err(CalcError::Invalid(format!(
            "input does not satisfy the Maurer–Cartan equation over {ring_k}"
        )));
    }
    let ring_next = ArtinA::new(k + 1);
    // Zero-extended input over the larger ring; its residual is supported in
    // the single new power t^k.
    let mut comps = x.comps().to_vec();
    comps.push(alg.zero(1));
    let extended = MCElem::new(alg, &ring_next, comps.clone())?;
    let residual_next = mc_residual(alg, &ring_next, &extended)?;
    let r_k = residual_next[k - 1].clone();
    debug_assert!(residual_next[..k - 1].iter().all(|r| alg.is_zero(r)));
    if !alg.is_zero(&alg.diff(&r_k)?) {
        return Err(CalcError::Invalid(
            "extension residual is not d-closed".into(),
        ));
    }
    if alg.is_zero(&r_k) {
        return Ok(GenericOutcome::Extended(extended));
    }
    let rhs: Vec<Rat> = alg
        .coords_vec(&alg.scale(&rint(-1), &r_k))
        .to_vec();
    let d1 = alg.d_matrix(1);
    match d1.solve(&rhs) {
        Some(sol) => {
            let x_k = alg.from_coords(1, &sol)?;
            *comps.last_mut().unwrap() = x_k;
            let lifted = MCElem::new(alg, &ring_next, comps)?;
            debug_assert!(is_mc(alg, &ring_next, &lifted)?);
            Ok(GenericOutcome::Extended(lifted))
        }
        None => {
            let d2 = alg.d_matrix(2);
            let cocycles = d2.kernel_basis();
            let boundaries: Vec<Vec<Rat>> = (0..d1.ncols())
                .map(|j| (0..d1.nrows()).map(|i| d1.get(i, j).clone()).collect())
                .collect();
            let class = class_coordinates(&cocycles, &boundaries, &alg.coords_vec(&r_k))?;
            if class.iter().all(|c| c.is_zero()) {
                return Err(CalcError::Invalid(
                    "unsolvable extension with vanishing obstruction class".into(),
                ));
            }
            Ok(GenericOutcome::Obstructed {
                power: k,
                cocycle: r_k,
                class,
            })
        }
    }
}
