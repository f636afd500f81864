//! Randomized pools and exact invariant checks for the deformation calculus,
//! plus the small named fixtures the checks (and downstream test suites) run
//! against.
//!
//! Everything is exact rational arithmetic over reproducible seeded pools;
//! failure messages carry the offending inputs. Each check accepts a
//! [`Strategy`] so the same pool can run sequentially or data-parallel.

use rand::Rng;

use polycalc::coiso::{in_lz, normal_dpi, normal_project};
use polycalc::ops::lichnerowicz;
use polycalc::linalg::QMat;
use polycalc::par::{try_all, Strategy};
use polycalc::poly::Poly;
use polycalc::rat::Zero;
use polycalc::verify::{pool_rng, random_poly, random_pvf};
use polycalc::{CalcError, CoisoSetup, PVF};

use crate::artin::ArtinA;
use crate::carrier::{Carrier, PvfCarrier};
use crate::embed::{key_to_pvf, mc_extend, theta_keys, EmbedOutcome};
use crate::findgla::{FinDGLA, FinDGLASer};
use crate::mc::{bch, gauge, gauge_compose_check, is_mc, GaugeElem, MCElem};
use crate::slices::{pi_degree, slice_coords, t1_basis};

// ---------------------------------------------------------------------------
// Named finite-dimensional fixtures
// ---------------------------------------------------------------------------

/// Three-element algebra `d(e) = f`, `[e,f] = g`: the smallest carrier on
/// which the gauge action of `exp(t·e)` produces a second-order term.
pub fn heisenberg_dgla() -> FinDGLA {
    FinDGLA::from_ser(&FinDGLASer {
        basis: vec![
            ("e".into(), 0),
            ("f".into(), 1),
            ("g".into(), 1),
        ],
        diff: vec![("e".into(), vec![("f".into(), "1".into())])],
        brackets: vec![("e".into(), "f".into(), vec![("g".into(), "1".into())])],
    })
    .expect("fixture table is consistent")
}

/// Two-element algebra `[u,u] = 2w`, `d = 0`: the first-order datum `t·u`
/// meets an untrimmable obstruction at second order.
pub fn square_obstructed_dgla() -> FinDGLA {
    FinDGLA::from_ser(&FinDGLASer {
        basis: vec![("u".into(), 1), ("w".into(), 2)],
        diff: vec![],
        brackets: vec![("u".into(), "u".into(), vec![("w".into(), "2".into())])],
    })
    .expect("fixture table is consistent")
}

/// Abelian algebra (all brackets zero) with `d(a) = c`, `d(b) = 0`: every
/// closed degree-1 element extends to any order with vanishing higher
/// coefficients.
pub fn abelian_dgla() -> FinDGLA {
    FinDGLA::from_ser(&FinDGLASer {
        basis: vec![("a".into(), 1), ("b".into(), 1), ("c".into(), 2)],
        diff: vec![("a".into(), vec![("c".into(), "1".into())])],
        brackets: vec![],
    })
    .expect("fixture table is consistent")
}

// ---------------------------------------------------------------------------
// Pool generation
// ---------------------------------------------------------------------------

/// A triple of truncated series: two gauge series (vector fields) and one
/// deformation series (bivector fields), each with `order − 1` coefficients.
#[derive(Debug, Clone)]
pub struct GaugePair {
    pub a: Vec<PVF>,
    pub b: Vec<PVF>,
    pub x: Vec<PVF>,
}

/// Seeded pool of random gauge/deformation series on the chart of `setup`.
pub fn gauge_pool(
    setup: &CoisoSetup,
    order: usize,
    max_coeff_deg: u32,
    count: usize,
    seed: u64,
) -> Vec<GaugePair> {
    assert!(order >= 1);
    let mut rng = pool_rng(seed);
    let n = setup.n();
    (0..count)
        .map(|_| {
            let mut series = |ext: usize| -> Vec<PVF> {
                (1..order)
                    .map(|_| random_pvf(&mut rng, n, ext, max_coeff_deg))
                    .collect()
            };
            let a = series(1);
            let b = series(1);
            let x = series(2);
            GaugePair { a, b, x }
        })
        .collect()
}

/// Seeded pool of vector fields tangent to the subspace (components along
/// the normal directions carry coefficients in the coordinate ideal), i.e.
/// elements of `ℒ¹_Z`. Their images under `d_π` are embedded first-order
/// deformation data.
pub fn lz_vector_pool(
    setup: &CoisoSetup,
    max_coeff_deg: u32,
    count: usize,
    seed: u64,
) -> Vec<PVF> {
    let mut rng = pool_rng(seed);
    let n = setup.n();
    let p = setup.p();
    (0..count)
        .map(|_| {
            let mut v = PVF::zero(n);
            for i in 1..=n {
                if rng.gen_range(0..3) == 0 {
                    continue;
                }
                let mut f = random_poly(&mut rng, n, max_coeff_deg, 2);
                if i <= p {
                    let j = rng.gen_range(1..=p);
                    f = f.mul(&Poly::var(n, j));
                }
                if !f.is_zero() {
                    v.insert(&[i as u8], f).expect("index in range");
                }
            }
            v
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Gauge and composition invariants
// ---------------------------------------------------------------------------

fn ambient_pieces(setup: &CoisoSetup, order: usize) -> (PvfCarrier, ArtinA) {
    (PvfCarrier::new(setup.clone()), ArtinA::new(order))
}

/// `mc_residual(gauge(a, x)) = 0` whenever `mc_residual(x) = 0`: transported
/// flat elements stay flat. The pool's flat elements are gauge images of `0`
/// (itself trivially flat), checked flat by the independent residual
/// computation before being transported again.
pub fn check_gauge_preserves_mc(
    setup: &CoisoSetup,
    pool: &[GaugePair],
    strategy: Strategy,
) -> Result<(), String> {
    try_all(strategy, pool, |i, item| {
        let err = |e: CalcError| format!("pool item {i}: {e}");
        let (carrier, ring) = ambient_pieces(setup, item.a.len() + 1);
        let a = GaugeElem::new(&carrier, &ring, item.a.clone()).map_err(err)?;
        let b = GaugeElem::new(&carrier, &ring, item.b.clone()).map_err(err)?;
        let x0 = gauge(&carrier, &ring, &a, &MCElem::zero(&carrier, &ring)).map_err(err)?;
        if !is_mc(&carrier, &ring, &x0).map_err(err)? {
            return Err(format!(
                "gauge image of the zero element fails Maurer–Cartan on pool item {i}"
            ));
        }
        let x1 = gauge(&carrier, &ring, &b, &x0).map_err(err)?;
        if !is_mc(&carrier, &ring, &x1).map_err(err)? {
            return Err(format!(
                "second transport breaks Maurer–Cartan on pool item {i}"
            ));
        }
        Ok(())
    })
}

/// `gauge(a, gauge(b, x)) = gauge(a∙b, x)` with `∙` the
/// Campbell–Hausdorff product, on arbitrary series `x` (the action identity
/// does not need `x` flat).
pub fn check_gauge_action(
    setup: &CoisoSetup,
    pool: &[GaugePair],
    strategy: Strategy,
) -> Result<(), String> {
    try_all(strategy, pool, |i, item| {
        let err = |e: CalcError| format!("pool item {i}: {e}");
        let (carrier, ring) = ambient_pieces(setup, item.a.len() + 1);
        let a = GaugeElem::new(&carrier, &ring, item.a.clone()).map_err(err)?;
        let b = GaugeElem::new(&carrier, &ring, item.b.clone()).map_err(err)?;
        let x = MCElem::new(&carrier, &ring, item.x.clone()).map_err(err)?;
        if !gauge_compose_check(&carrier, &ring, &a, &b, &x).map_err(err)? {
            return Err(format!(
                "composition identity fails on pool item {i}: a={:?}, b={:?}",
                item.a, item.b
            ));
        }
        Ok(())
    })
}

/// Second-order expansion of the orbit of zero:
/// `gauge(t·η, 0) = −t·dη − (t²/2)[η, dη]` over `ℚ[t]/(t³)`, exactly.
pub fn check_gauge_expansion(
    setup: &CoisoSetup,
    etas: &[PVF],
    strategy: Strategy,
) -> Result<(), String> {
    try_all(strategy, etas, |i, eta| {
        let err = |e: CalcError| format!("field {i}: {e}");
        let (carrier, ring) = ambient_pieces(setup, 3);
        let a = GaugeElem::new(&carrier, &ring, vec![eta.clone(), PVF::zero(setup.n())])
            .map_err(err)?;
        let got = gauge(&carrier, &ring, &a, &MCElem::zero(&carrier, &ring)).map_err(err)?;
        let deta = lichnerowicz(setup, eta).map_err(err)?;
        let t1 = deta.neg();
        let t2 = polycalc::ops::schouten(eta, &deta)
            .map_err(err)?
            .scale(&polycalc::rat::rat(-1, 2));
        if got.coeff(1) != &t1 || got.coeff(2) != &t2 {
            return Err(format!(
                "orbit expansion mismatch for η = {eta}: expected t·({t1}) + t²·({t2})"
            ));
        }
        Ok(())
    })
}

/// Negative control: dropping the `½[a,b]` correction from the
/// Campbell–Hausdorff product must be *detected* by the composition check on
/// a non-commuting pair. Returns an error if the corrupted product slips
/// through (i.e. if the check has no teeth).
pub fn corrupted_bch_detected() -> Result<(), String> {
    let n = 2;
    let mut pi = PVF::zero(n);
    pi.insert(&[1, 2], Poly::one(n)).map_err(|e| e.to_string())?;
    let setup = CoisoSetup::new(n, 0, pi).map_err(|e| e.to_string())?;
    let (carrier, ring) = ambient_pieces(&setup, 4);
    let zero = PVF::zero(n);

    let mut va = PVF::zero(n);
    va.insert(&[1], Poly::var(n, 1)).map_err(|e| e.to_string())?;
    let mut vb = PVF::zero(n);
    vb.insert(&[2], Poly::var(n, 1)).map_err(|e| e.to_string())?;
    let mut x1 = PVF::zero(n);
    x1.insert(&[1, 2], Poly::var(n, 2)).map_err(|e| e.to_string())?;

    let a = GaugeElem::new(&carrier, &ring, vec![va, zero.clone(), zero.clone()])
        .map_err(|e| e.to_string())?;
    let b = GaugeElem::new(&carrier, &ring, vec![vb, zero.clone(), zero.clone()])
        .map_err(|e| e.to_string())?;
    let x = MCElem::new(&carrier, &ring, vec![x1, zero.clone(), zero.clone()])
        .map_err(|e| e.to_string())?;

    if !gauge_compose_check(&carrier, &ring, &a, &b, &x).map_err(|e| e.to_string())? {
        return Err("genuine product fails the composition identity".into());
    }

    // The corrupted product: plain coefficient-wise sum, i.e. the
    // Campbell–Hausdorff series with every bracket term dropped.
    let naive: Vec<PVF> = a
        .comps()
        .iter()
        .zip(b.comps())
        .map(|(l, r)| l.add(r))
        .collect::<Result<_, _>>()
        .map_err(|e: CalcError| e.to_string())?;
    let naive = GaugeElem::new(&carrier, &ring, naive).map_err(|e| e.to_string())?;
    let genuine = bch(&carrier, &ring, &a, &b).map_err(|e| e.to_string())?;
    if naive == genuine {
        return Err("control pair commutes; it cannot detect a dropped bracket term".into());
    }
    let composed = gauge(
        &carrier,
        &ring,
        &a,
        &gauge(&carrier, &ring, &b, &x).map_err(|e| e.to_string())?,
    )
    .map_err(|e| e.to_string())?;
    let via_naive = gauge(&carrier, &ring, &naive, &x).map_err(|e| e.to_string())?;
    if via_naive == composed {
        return Err(
            "dropping the ½[a,b] term went undetected: the composition check has no teeth"
                .into(),
        );
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Extension soundness
// ---------------------------------------------------------------------------

/// Drives [`mc_extend`] from the first-order datum `d_π(v)` (for `v` in the
/// pool, tangent to the subspace) up to `target_order`, checking exactly, at
/// every step:
///
/// * a returned lift keeps the already-fixed coefficients, keeps every
///   coefficient in `ℒ²_Z`, and has zero Maurer–Cartan residual;
/// * a returned obstruction is a `d̄_π`-cocycle with a nonzero class.
pub fn check_extension_soundness(
    setup: &CoisoSetup,
    pool: &[PVF],
    target_order: usize,
    strategy: Strategy,
) -> Result<(), String> {
    try_all(strategy, pool, |i, v| {
        let err = |e: CalcError| format!("pool item {i}: {e}");
        if !in_lz(setup, v) {
            return Err(format!("pool item {i} is not tangent to the subspace"));
        }
        let x1 = lichnerowicz(setup, v).map_err(err)?;
        if !in_lz(setup, &x1) {
            return Err(format!(
                "tangency is not preserved by the differential on pool item {i}: \
                 d_π(v) leaves the constrained complex for v = {v}"
            ));
        }
        let constrained = PvfCarrier::constrained(setup.clone());
        let mut x = MCElem::new(&constrained, &ArtinA::new(2), vec![x1]).map_err(err)?;
        while x.order() < target_order {
            match mc_extend(setup, &x).map_err(err)? {
                EmbedOutcome::Extended(next) => {
                    let ring = ArtinA::new(next.order());
                    for j in 1..x.order() {
                        if next.coeff(j) != x.coeff(j) {
                            return Err(format!(
                                "lift of pool item {i} disturbed the t^{j} coefficient"
                            ));
                        }
                    }
                    for comp in next.comps() {
                        if !in_lz(setup, comp) {
                            return Err(format!(
                                "lift of pool item {i} left the constrained complex"
                            ));
                        }
                    }
                    if !is_mc(&constrained, &ring, &next).map_err(err)? {
                        return Err(format!(
                            "lift of pool item {i} has a nonzero residual at order {}",
                            next.order()
                        ));
                    }
                    x = next;
                }
                EmbedOutcome::Obstructed {
                    power,
                    cocycle,
                    class,
                } => {
                    if !normal_dpi(setup, &cocycle).map_err(err)?.is_zero() {
                        return Err(format!(
                            "obstruction at t^{power} for pool item {i} is not a cocycle"
                        ));
                    }
                    if class.is_empty()
                        || !class.iter().any(|(_, c)| c.iter().any(|r| !r.is_zero()))
                    {
                        return Err(format!(
                            "obstruction at t^{power} for pool item {i} reports a zero class"
                        ));
                    }
                    break;
                }
            }
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// First-order counting
// ---------------------------------------------------------------------------

/// Dimensions at coefficient degree `e` of (left) the space of first-order
/// embedded data modulo gauge, computed by ambient linear algebra — vector
/// fields `v` with `d_π(v) ∈ ℒ²_Z`, modulo those that do not move the
/// subspace — and (right) the kernel slice of the normal differential.
pub fn first_order_dims(setup: &CoisoSetup, e: u32) -> Result<(usize, usize), CalcError> {
    let c = pi_degree(setup).ok_or_else(|| {
        CalcError::Invalid("first-order counting needs homogeneous Poisson coefficients".into())
    })?;
    let n = setup.n();
    let keys = theta_keys(n, 1, e);
    let target = e as i64 + c as i64 - 1;
    let mut fixed_subspace = 0usize;
    let mut columns: Vec<Vec<polycalc::Rat>> = Vec::with_capacity(keys.len());
    let mut rows = 0usize;
    for key in &keys {
        let v = key_to_pvf(n, key)?;
        let mu = normal_project(setup, &v)?;
        if mu.is_zero() {
            fixed_subspace += 1;
        }
        let nd = normal_dpi(setup, &mu)?;
        let col = if target < 0 {
            if !nd.is_zero() {
                return Err(CalcError::Invalid(
                    "graded differential produced a negative-degree image".into(),
                ));
            }
            Vec::new()
        } else {
            slice_coords(setup, &nd, 2, target as u32)?
        };
        rows = rows.max(col.len());
        columns.push(col);
    }
    let mut mat = QMat::zeros(rows, keys.len());
    for (j, col) in columns.iter().enumerate() {
        for (i, val) in col.iter().enumerate() {
            mat.set(i, j, val.clone());
        }
    }
    let kernel_dim = keys.len() - mat.rank();
    let t1_dim = t1_basis(setup, e, None)?.dim();
    Ok((kernel_dim - fixed_subspace, t1_dim))
}

/// The two first-order counts of [`first_order_dims`] must agree in every
/// coefficient degree up to `max_degree`.
pub fn check_first_order_bijection(
    setup: &CoisoSetup,
    max_degree: u32,
    strategy: Strategy,
) -> Result<(), String> {
    let degrees: Vec<u32> = (0..=max_degree).collect();
    try_all(strategy, &degrees, |_, &e| {
        let (ambient, slice) = first_order_dims(setup, e).map_err(|err| err.to_string())?;
        if ambient != slice {
            return Err(format!(
                "first-order counts disagree at coefficient degree {e}: \
                 ambient quotient has dimension {ambient}, kernel slice {slice}"
            ));
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Generic-carrier extension fixtures
// ---------------------------------------------------------------------------

/// In the abelian fixture every closed degree-1 element must extend to
/// `target_order` with all higher coefficients zero.
pub fn check_abelian_extension(target_order: usize) -> Result<(), String> {
    use crate::mc::{mc_extend_generic, GenericOutcome};
    let alg = abelian_dgla();
    let d1 = alg.d_matrix(1);
    let kernel = d1.kernel_basis();
    if kernel.is_empty() {
        return Err("abelian fixture lost its closed direction".into());
    }
    for (k, coords) in kernel.iter().enumerate() {
        let x1 = alg.from_coords(1, coords).map_err(|e| e.to_string())?;
        let mut x = MCElem::new(&alg, &ArtinA::new(2), vec![x1]).map_err(|e| e.to_string())?;
        while x.order() < target_order {
            match mc_extend_generic(&alg, &x).map_err(|e| e.to_string())? {
                GenericOutcome::Extended(next) => {
                    let top = next.coeff(next.order() - 1);
                    if !alg.is_zero(top) {
                        return Err(format!(
                            "abelian lift of kernel vector {k} grew a nonzero t^{} \
                             coefficient",
                            next.order() - 1
                        ));
                    }
                    x = next;
                }
                GenericOutcome::Obstructed { power, .. } => {
                    return Err(format!(
                        "abelian carrier reported an obstruction at t^{power} \
                         for kernel vector {k}"
                    ));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symplectic_c4() -> CoisoSetup {
        let n = 4;
        let mut pi = PVF::zero(n);
        pi.insert(&[1, 3], Poly::one(n)).unwrap();
        pi.insert(&[2, 4], Poly::one(n)).unwrap();
        CoisoSetup::new(n, 2, pi).unwrap()
    }

    fn so3_chart() -> CoisoSetup {
        let n = 3;
        let mut pi = PVF::zero(n);
        pi.insert(&[1, 2], Poly::var(n, 3)).unwrap();
        pi.insert(&[1, 3], Poly::var(n, 2).neg()).unwrap();
        pi.insert(&[2, 3], Poly::var(n, 1)).unwrap();
        CoisoSetup::new(n, 0, pi).unwrap()
    }

    fn point_quadratic() -> CoisoSetup {
        let n = 2;
        let mut pi = PVF::zero(n);
        pi.insert(&[1, 2], Poly::monomial(n, &[(1, 2)], polycalc::rat::rint(1)))
            .unwrap();
        CoisoSetup::new(n, 2, pi).unwrap()
    }

    fn hypersurface_c3() -> CoisoSetup {
        let n = 3;
        let mut pi = PVF::zero(n);
        pi.insert(&[1, 2], Poly::var(n, 1)).unwrap();
        CoisoSetup::new(n, 1, pi).unwrap()
    }

    #[test]
    fn fixtures_validate() {
        heisenberg_dgla();
        square_obstructed_dgla();
        abelian_dgla();
    }

    #[test]
    fn gauge_preserves_mc_pool() {
        let s = so3_chart();
        let pool = gauge_pool(&s, 4, 1, 8, 0xD1CE);
        check_gauge_preserves_mc(&s, &pool, Strategy::Sequential).unwrap();
    }

    #[test]
    fn gauge_action_pool() {
        let s = so3_chart();
        let pool = gauge_pool(&s, 4, 1, 8, 0xFEED);
        check_gauge_action(&s, &pool, Strategy::Sequential).unwrap();
    }

    #[test]
    fn gauge_action_pool_matches_parallel() {
        let s = so3_chart();
        let pool = gauge_pool(&s, 4, 1, 5, 0xFADE);
        let seq = check_gauge_action(&s, &pool, Strategy::Sequential);
        let par = check_gauge_action(&s, &pool, Strategy::Parallel);
        assert_eq!(seq, par);
        seq.unwrap();
    }

    #[test]
    fn gauge_expansion_pool() {
        let s = so3_chart();
        let mut rng = pool_rng(0xE7A);
        let etas: Vec<PVF> = (0..10).map(|_| random_pvf(&mut rng, 3, 1, 2)).collect();
        check_gauge_expansion(&s, &etas, Strategy::Sequential).unwrap();
    }

    #[test]
    fn corrupted_bch_control() {
        corrupted_bch_detected().unwrap();
    }

    #[test]
    fn extension_soundness_pools() {
        let lagrangian = symplectic_c4();
        let pool = lz_vector_pool(&lagrangian, 2, 6, 0xBEA7);
        check_extension_soundness(&lagrangian, &pool, 4, Strategy::Sequential).unwrap();

        let point = point_quadratic();
        let pool = lz_vector_pool(&point, 2, 6, 0xC0DE);
        check_extension_soundness(&point, &pool, 4, Strategy::Sequential).unwrap();

        let hyper = hypersurface_c3();
        let pool = lz_vector_pool(&hyper, 2, 6, 0xFACE);
        check_extension_soundness(&hyper, &pool, 4, Strategy::Sequential).unwrap();
    }

    #[test]
    fn first_order_bijection_symplectic() {
        let s = symplectic_c4();
        check_first_order_bijection(&s, 3, Strategy::Sequential).unwrap();
        // Freeze the actual counts at low degree: two constant normal
        // fields, and three of the four linear ones.
        assert_eq!(first_order_dims(&s, 0).unwrap(), (2, 2));
        assert_eq!(first_order_dims(&s, 1).unwrap(), (3, 3));
    }

    #[test]
    fn first_order_bijection_quadratic_point() {
        let s = point_quadratic();
        check_first_order_bijection(&s, 3, Strategy::Sequential).unwrap();
    }

    #[test]
    fn first_order_bijection_hypersurface() {
        let s = hypersurface_c3();
        check_first_order_bijection(&s, 3, Strategy::Sequential).unwrap();
    }

    #[test]
    fn abelian_extension_to_fifth_order() {
        check_abelian_extension(5).unwrap();
    }
}
