//! Randomized pools and exact identity checks.
//!
//! Each check evaluates a graded identity *exactly* (no tolerances — the
//! arithmetic is rational) over a reproducible, seeded pool of polyvector
//! fields or forms, sequentially or in parallel. Failure messages carry the
//! offending inputs so a red run is immediately diagnosable.
//!
//! Degree conventions: for the bracket identities on polyvector fields the
//! *shifted* degree of a `k`-vector is `k − 1`; for the form-side identities
//! the shifted degree of an `i`-form is `i − 1`. The cyclic sum of a
//! trilinear expression `f` is
//!
//! ```text
//! ∮f(a,b,c) = f(a,b,c) + (−1)^{ā(b̄+c̄)} f(b,c,a) + (−1)^{c̄(ā+b̄)} f(c,a,b)
//! ```
//!
//! with bars denoting shifted degrees.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coiso::{in_iz, in_lz, is_coisotropic, CoisoSetup};
use crate::error::CalcError;
use crate::form::Form;
use crate::ops::{anchor, h_op, holo_d, interior, is_poisson, koszul, lichnerowicz, schouten};
use crate::par::{try_all, Strategy};
use crate::poly::Poly;
use crate::pvf::PVF;
use crate::rat::{rat, sign_pow, Rat};

// ---------------------------------------------------------------------------
// Pool generation
// ---------------------------------------------------------------------------

/// Seeded RNG used by every pool: reproducible across runs and platforms.
pub fn pool_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random polynomial with `1..=max_terms` terms of total degree `<= max_deg`
/// and small rational coefficients. May cancel to zero, which is fine for
/// identity pools.
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, max_deg: u32, max_terms: usize) -> Poly {
    let mut p = Poly::zero(nvars);
    let terms = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..terms {
        let deg = rng.gen_range(0..=max_deg);
        let mut exps = vec![0u32; nvars];
        for _ in 0..deg {
            let v = rng.gen_range(0..nvars);
            exps[v] += 1;
        }
        let num: i64 = loop {
            let k = rng.gen_range(-3..=3);
            if k != 0 {
                break k;
            }
        };
        let den: i64 = rng.gen_range(1..=2);
        p.add_term(exps, rat(num, den));
    }
    p
}

/// Random polyvector field of pure exterior degree `ext` (possibly zero if
/// coefficients cancel).
pub fn random_pvf(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    ext: usize,
    max_coeff_deg: u32,
) -> PVF {
    assert!(ext <= nvars);
    let mut out = PVF::zero(nvars);
    let comps = rng.gen_range(1..=2);
    for _ in 0..comps {
        let mut idx: Vec<u8> = (1..=nvars as u8).collect();
        idx.shuffle(rng);
        idx.truncate(ext);
        idx.sort_unstable();
        out.insert(&idx, random_poly(rng, nvars, max_coeff_deg, 2))
            .expect("indices in range by construction");
    }
    out
}

/// Random form of pure degree `ext`.
pub fn random_form(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    ext: usize,
    max_coeff_deg: u32,
) -> Form {
    assert!(ext <= nvars);
    let mut out = Form::zero(nvars);
    let comps = rng.gen_range(1..=2);
    for _ in 0..comps {
        let mut idx: Vec<u8> = (1..=nvars as u8).collect();
        idx.shuffle(rng);
        idx.truncate(ext);
        idx.sort_unstable();
        out.insert(&idx, random_poly(rng, nvars, max_coeff_deg, 2))
            .expect("indices in range by construction");
    }
    out
}

/// Pool of homogeneous polyvector-field triples with exterior degrees
/// `1..=max_ext` each (degree-0 elements enter via the Leibniz slots).
pub fn pvf_triple_pool(
    nvars: usize,
    max_ext: usize,
    max_coeff_deg: u32,
    count: usize,
    seed: u64,
) -> Vec<(PVF, PVF, PVF)> {
    let mut rng = pool_rng(seed);
    (0..count)
        .map(|_| {
            let da = rng.gen_range(0..=max_ext.min(nvars));
            let db = rng.gen_range(0..=max_ext.min(nvars));
            let dc = rng.gen_range(0..=max_ext.min(nvars));
            (
                random_pvf(&mut rng, nvars, da, max_coeff_deg),
                random_pvf(&mut rng, nvars, db, max_coeff_deg),
                random_pvf(&mut rng, nvars, dc, max_coeff_deg),
            )
        })
        .collect()
}

/// Pool of homogeneous form triples with degrees `0..=max_deg`.
pub fn form_triple_pool(
    nvars: usize,
    max_deg: usize,
    max_coeff_deg: u32,
    count: usize,
    seed: u64,
) -> Vec<(Form, Form, Form)> {
    let mut rng = pool_rng(seed);
    (0..count)
        .map(|_| {
            let da = rng.gen_range(0..=max_deg.min(nvars));
            let db = rng.gen_range(0..=max_deg.min(nvars));
            let dc = rng.gen_range(0..=max_deg.min(nvars));
            (
                random_form(&mut rng, nvars, da, max_coeff_deg),
                random_form(&mut rng, nvars, db, max_coeff_deg),
                random_form(&mut rng, nvars, dc, max_coeff_deg),
            )
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Sign helpers
// ---------------------------------------------------------------------------

fn shifted(ext: usize) -> i64 {
    ext as i64 - 1
}

/// Cyclic-sum signs for `(a,b,c)` with shifted degrees: returns the signs of
/// the `(b,c,a)` and `(c,a,b)` summands.
fn cyclic_signs(abar: i64, bbar: i64, cbar: i64) -> (Rat, Rat) {
    (sign_pow(abar * (bbar + cbar)), sign_pow(cbar * (abar + bbar)))
}

// ---------------------------------------------------------------------------
// Gerstenhaber-algebra identities for the Schouten bracket
// ---------------------------------------------------------------------------

/// Graded antisymmetry `[a,b] = −(−1)^{āb̄}[b,a]` (shifted degrees).
fn antisymmetry_residual(a: &PVF, b: &PVF) -> Result<PVF, CalcError> {
    let abar = shifted(a.max_ext_degree());
    let bbar = shifted(b.max_ext_degree());
    let ab = schouten(a, b)?;
    let ba = schouten(b, a)?.scale(&sign_pow(abar * bbar));
    ab.add(&ba)
}

/// Cyclic Jacobi `∮ [[a,b],c] = 0` (shifted degrees).
fn jacobi_residual(a: &PVF, b: &PVF, c: &PVF) -> Result<PVF, CalcError> {
    let (abar, bbar, cbar) = (
        shifted(a.max_ext_degree()),
        shifted(b.max_ext_degree()),
        shifted(c.max_ext_degree()),
    );
    let (s1, s2) = cyclic_signs(abar, bbar, cbar);
    let t0 = schouten(&schouten(a, b)?, c)?;
    let t1 = schouten(&schouten(b, c)?, a)?.scale(&s1);
    let t2 = schouten(&schouten(c, a)?, b)?.scale(&s2);
    t0.add(&t1)?.add(&t2)
}

/// Odd Leibniz in the right slot:
/// `[a, b∧c] = [a,b]∧c + (−1)^{(|a|−1)|b|} b∧[a,c]` (plain degrees).
fn leibniz_right_residual(a: &PVF, b: &PVF, c: &PVF) -> Result<PVF, CalcError> {
    let s = sign_pow(shifted(a.max_ext_degree()) * b.max_ext_degree() as i64);
    let lhs = schouten(a, &b.wedge(c)?)?;
    let rhs = schouten(a, b)?
        .wedge(c)?
        .add(&b.wedge(&schouten(a, c)?)?.scale(&s))?;
    lhs.sub(&rhs)
}

/// Odd Leibniz in the left slot:
/// `[a∧b, c] = a∧[b,c] + (−1)^{(|c|−1)|b|} [a,c]∧b`.
fn leibniz_left_residual(a: &PVF, b: &PVF, c: &PVF) -> Result<PVF, CalcError> {
    let s = sign_pow(shifted(c.max_ext_degree()) * b.max_ext_degree() as i64);
    let lhs = schouten(&a.wedge(b)?, c)?;
    let rhs = a
        .wedge(&schouten(b, c)?)?
        .add(&schouten(a, c)?.wedge(b)?.scale(&s))?;
    lhs.sub(&rhs)
}

/// Checks antisymmetry, cyclic Jacobi, and both Leibniz identities on every
/// triple of the pool. Triples must be exterior-degree homogeneous.
pub fn check_gerstenhaber(
    pool: &[(PVF, PVF, PVF)],
    strategy: Strategy,
) -> Result<(), String> {
    try_all(strategy, pool, |i, (a, b, c)| {
        let anti = antisymmetry_residual(a, b).map_err(|e| e.to_string())?;
        if !anti.is_zero() {
            return Err(format!("antisymmetry fails on triple {i}: a={a}, b={b}"));
        }
        let jac = jacobi_residual(a, b, c).map_err(|e| e.to_string())?;
        if !jac.is_zero() {
            return Err(format!("Jacobi fails on triple {i}: a={a}, b={b}, c={c}"));
        }
        let lr = leibniz_right_residual(a, b, c).map_err(|e| e.to_string())?;
        if !lr.is_zero() {
            return Err(format!(
                "right Leibniz fails on triple {i}: a={a}, b={b}, c={c}"
            ));
        }
        let ll = leibniz_left_residual(a, b, c).map_err(|e| e.to_string())?;
        if !ll.is_zero() {
            return Err(format!(
                "left Leibniz fails on triple {i}: a={a}, b={b}, c={c}"
            ));
        }
        Ok(())
    })
}

/// For each bivector: `d_π² = 0` on every witness iff `is_poisson(π)`.
/// The witness list must be rich enough to expose a nonzero square for the
/// non-Poisson members (coordinate functions, coordinate fields, and linear
/// fields suffice for polynomial bivectors of the pool sizes used here).
pub fn check_dpi_square_iff_poisson(
    pis: &[PVF],
    strategy: Strategy,
) -> Result<(), String> {
    try_all(strategy, pis, |i, pi| {
        let n = pi.nvars();
        let setup = CoisoSetup::new(n, 0, pi.clone()).map_err(|e| e.to_string())?;
        let poisson = is_poisson(pi).map_err(|e| e.to_string())?;
        let mut witnesses: Vec<PVF> = Vec::new();
        for v in 1..=n {
            witnesses.push(PVF::from_poly(Poly::var(n, v)));
            witnesses.push(PVF::partial_dir(n, v).map_err(|e| e.to_string())?);
            for w in 1..=n {
                witnesses.push(
                    PVF::component(n, &[w as u8], Poly::var(n, v)).map_err(|e| e.to_string())?,
                );
            }
        }
        let mut all_zero = true;
        for xi in &witnesses {
            let sq = lichnerowicz(&setup, &lichnerowicz(&setup, xi).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?;
            if !sq.is_zero() {
                all_zero = false;
                break;
            }
        }
        // d_π² = ½[[π,π],·], so the exact statement is an iff.
        if poisson && !all_zero {
            return Err(format!("pi #{i} is Poisson but d_π² ≠ 0: pi={pi}"));
        }
        if !poisson && all_zero {
            return Err(format!(
                "pi #{i} is not Poisson but no witness detects d_π² ≠ 0: pi={pi}"
            ));
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Anchor as a morphism of differential graded algebras
// ---------------------------------------------------------------------------

/// `π^#([α,β]_π) = [π^#α, π^#β]` and `π^#(∂α) = d_π(π^#α)`, exactly.
pub fn check_anchor_morphism(
    setup: &CoisoSetup,
    pool: &[(Form, Form)],
    strategy: Strategy,
) -> Result<(), String> {
    try_all(strategy, pool, |i, (a, b)| {
        let err = |e: CalcError| e.to_string();
        let lhs = anchor(setup, &koszul(setup, a, b).map_err(err)?).map_err(err)?;
        let rhs = schouten(&anchor(setup, a).map_err(err)?, &anchor(setup, b).map_err(err)?)
            .map_err(err)?;
        if lhs != rhs {
            return Err(format!(
                "anchor fails bracket compatibility on pair {i}: α={a}, β={b}"
            ));
        }
        let lhs = anchor(setup, &holo_d(a)).map_err(err)?;
        let rhs = lichnerowicz(setup, &anchor(setup, a).map_err(err)?).map_err(err)?;
        if lhs != rhs {
            return Err(format!(
                "anchor fails differential compatibility on pair {i}: α={a}"
            ));
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// The h operator: antisymmetry, homotopy formula, cyclic compatibility
// ---------------------------------------------------------------------------

fn form_shift(x: &Form) -> i64 {
    shifted(x.max_ext_degree())
}

/// Condition (1): `h(a,b) = −(−1)^{āb̄} h(b,a)`.
fn h_antisym_residual(setup: &CoisoSetup, a: &Form, b: &Form) -> Result<Form, CalcError> {
    let s = sign_pow(form_shift(a) * form_shift(b));
    h_op(setup, a, b)?.add(&h_op(setup, b, a)?.scale(&s))
}

/// Condition (2): `[a,b]_π = dh(a,b) + h(da,b) + (−1)^{ā} h(a,db)` where `d`
/// is the DGLA differential of the *shifted* form complex, `d = −∂` (the
/// usual sign of a shift; with `+∂` the identity provably fails on
/// `(dz₁, z₂)` for `π = ∂₁∧∂₂`). Equivalently the residual below is
/// `[a,b]_π + ∂h(a,b) + h(∂a,b) + (−1)^{ā} h(a,∂b)`.
fn h_homotopy_residual(setup: &CoisoSetup, a: &Form, b: &Form) -> Result<Form, CalcError> {
    let s = sign_pow(form_shift(a));
    let rhs = holo_d(&h_op(setup, a, b)?)
        .add(&h_op(setup, &holo_d(a), b)?)?
        .add(&h_op(setup, a, &holo_d(b))?.scale(&s))?;
    koszul(setup, a, b)?.add(&rhs)
}

/// Condition (3): `∮ [h(a,b),c]_π + ∮ h([a,b]_π, c) = 0`.
fn h_cyclic_residual(
    setup: &CoisoSetup,
    a: &Form,
    b: &Form,
    c: &Form,
) -> Result<Form, CalcError> {
    let (abar, bbar, cbar) = (form_shift(a), form_shift(b), form_shift(c));
    let (s1, s2) = cyclic_signs(abar, bbar, cbar);
    let term = |x: &Form, y: &Form, z: &Form| -> Result<Form, CalcError> {
        koszul(setup, &h_op(setup, x, y)?, z)?.add(&h_op(setup, &koszul(setup, x, y)?, z)?)
    };
    term(a, b, c)?
        .add(&term(b, c, a)?.scale(&s1))?
        .add(&term(c, a, b)?.scale(&s2))
}

/// Checks conditions (1)–(3) on every homogeneous form triple of the pool.
pub fn check_h_conditions(
    setup: &CoisoSetup,
    pool: &[(Form, Form, Form)],
    strategy: Strategy,
) -> Result<(), String> {
    try_all(strategy, pool, |i, (a, b, c)| {
        let err = |e: CalcError| e.to_string();
        if !h_antisym_residual(setup, a, b).map_err(err)?.is_zero() {
            return Err(format!("h antisymmetry fails on triple {i}: a={a}, b={b}"));
        }
        if !h_homotopy_residual(setup, a, b).map_err(err)?.is_zero() {
            return Err(format!("h homotopy formula fails on triple {i}: a={a}, b={b}"));
        }
        if !h_cyclic_residual(setup, a, b, c).map_err(err)?.is_zero() {
            return Err(format!(
                "h cyclic compatibility fails on triple {i}: a={a}, b={b}, c={c}"
            ));
        }
        Ok(())
    })
}

/// DGLA axioms for `(Ω*[1], [·,·]_π, ∂)` over a Poisson bivector:
/// antisymmetry, cyclic Jacobi, and the derivation property of `∂`.
pub fn check_koszul_dgla(
    setup: &CoisoSetup,
    pool: &[(Form, Form, Form)],
    strategy: Strategy,
) -> Result<(), String> {
    try_all(strategy, pool, |i, (a, b, c)| {
        let err = |e: CalcError| e.to_string();
        let (abar, bbar, cbar) = (form_shift(a), form_shift(b), form_shift(c));
        // antisymmetry
        let anti = koszul(setup, a, b)
            .map_err(err)?
            .add(&koszul(setup, b, a).map_err(err)?.scale(&sign_pow(abar * bbar)))
            .map_err(err)?;
        if !anti.is_zero() {
            return Err(format!("Koszul antisymmetry fails on triple {i}: a={a}, b={b}"));
        }
        // cyclic Jacobi
        let (s1, s2) = cyclic_signs(abar, bbar, cbar);
        let jac = koszul(setup, &koszul(setup, a, b).map_err(err)?, c)
            .map_err(err)?
            .add(
                &koszul(setup, &koszul(setup, b, c).map_err(err)?, a)
                    .map_err(err)?
                    .scale(&s1),
            )
            .map_err(err)?
            .add(
                &koszul(setup, &koszul(setup, c, a).map_err(err)?, b)
                    .map_err(err)?
                    .scale(&s2),
            )
            .map_err(err)?;
        if !jac.is_zero() {
            return Err(format!("Koszul Jacobi fails on triple {i}: a={a}, b={b}, c={c}"));
        }
        // ∂ is a degree-1 derivation of the bracket
        let der = holo_d(&koszul(setup, a, b).map_err(err)?)
            .sub(&koszul(setup, &holo_d(a), b).map_err(err)?)
            .map_err(err)?
            .sub(&koszul(setup, a, &holo_d(b)).map_err(err)?.scale(&sign_pow(abar)))
            .map_err(err)?;
        if !der.is_zero() {
            return Err(format!("∂ fails to derive the Koszul bracket on triple {i}: a={a}, b={b}"));
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Operator identity for iterated interior-product commutators
// ---------------------------------------------------------------------------

/// `𝒊_{π^#(α)} = [𝒊_π, ·]^k / k! (α∧·)` as operators, for `α` of degree
/// `k ≤ 2`, evaluated on every form in `betas`.
pub fn check_anchor_contraction_identity(
    setup: &CoisoSetup,
    alphas: &[Form],
    betas: &[Form],
    strategy: Strategy,
) -> Result<(), String> {
    let pairs: Vec<(Form, Form)> = alphas
        .iter()
        .flat_map(|a| betas.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    try_all(strategy, &pairs, |i, (alpha, beta)| {
        let err = |e: CalcError| e.to_string();
        let k = alpha.ext_degree().unwrap_or(0);
        if k > 2 {
            return Err(format!("identity pool restricted to k ≤ 2, got {k}"));
        }
        let lhs = interior(&anchor(setup, alpha).map_err(err)?, beta).map_err(err)?;
        let pi = setup.pi();
        // [𝒊_π, ·]^k (α∧·) applied to β, then divided by k!.
        let wedge_then = |x: &Form| -> Result<Form, CalcError> { alpha.wedge(x) };
        let rhs_unscaled = match k {
            0 => wedge_then(beta).map_err(err)?,
            1 => {
                let t1 = interior(pi, &wedge_then(beta).map_err(err)?).map_err(err)?;
                let t2 = wedge_then(&interior(pi, beta).map_err(err)?).map_err(err)?;
                t1.sub(&t2).map_err(err)?
            }
            2 => {
                let ib = interior(pi, beta).map_err(err)?;
                let iib = interior(pi, &ib).map_err(err)?;
                let t1 = interior(pi, &interior(pi, &wedge_then(beta).map_err(err)?).map_err(err)?)
                    .map_err(err)?;
                let t2 = interior(pi, &wedge_then(&ib).map_err(err)?)
                    .map_err(err)?
                    .scale(&rat(2, 1));
                let t3 = wedge_then(&iib).map_err(err)?;
                t1.sub(&t2).map_err(err)?.add(&t3).map_err(err)?
            }
            _ => unreachable!(),
        };
        let rhs = rhs_unscaled.scale(&(rat(1, 1) / crate::rat::factorial(k)));
        if lhs != rhs {
            return Err(format!(
                "contraction identity fails on pair {i}: α={alpha}, β={beta}"
            ));
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Coisotropy characterizations
// ---------------------------------------------------------------------------

/// The four characterizations of coisotropy, each evaluated independently on
/// the ideal generators `S = {z_j, dz_i}_{1≤i,j≤p}`:
///
/// 1. every `π_{ij}` with `i < j ≤ p` lies in `(z_1,…,z_p)`;
/// 2. `ℐ*_Z` is closed under the Koszul bracket;
/// 3. `ℐ*_Z` is closed under `h`;
/// 4. `π^#(ℐ*_Z) ⊆ ℒ*_Z`.
///
/// Requires `π` Poisson. Returns the four booleans.
pub fn coisotropy_characterizations(setup: &CoisoSetup) -> Result<[bool; 4], CalcError> {
    if !is_poisson(setup.pi())? {
        return Err(CalcError::NotPoisson);
    }
    let n = setup.n();
    let p = setup.p();
    let mut gens: Vec<Form> = Vec::new();
    for j in 1..=p {
        gens.push(Form::from_poly(Poly::var(n, j)));
        gens.push(Form::dz(n, j)?);
    }

    // (1) coefficient condition — evaluated via the coisotropy predicate.
    let cond1 = is_coisotropic(setup).unwrap_or(false);

    // (2) Koszul closure on generator pairs.
    let mut cond2 = true;
    'outer2: for a in &gens {
        for b in &gens {
            if !in_iz(setup, &koszul(setup, a, b)?) {
                cond2 = false;
                break 'outer2;
            }
        }
    }

    // (3) h closure on generator pairs.
    let mut cond3 = true;
    'outer3: for a in &gens {
        for b in &gens {
            if !in_iz(setup, &h_op(setup, a, b)?) {
                cond3 = false;
                break 'outer3;
            }
        }
    }

    // (4) anchor maps generators into ℒ*_Z.
    let mut cond4 = true;
    for a in &gens {
        if !in_lz(setup, &anchor(setup, a)?) {
            cond4 = false;
            break;
        }
    }

    Ok([cond1, cond2, cond3, cond4])
}

/// All four characterizations must agree on every setup of the pool.
pub fn check_coisotropy_equivalences(
    setups: &[CoisoSetup],
    strategy: Strategy,
) -> Result<(), String> {
    try_all(strategy, setups, |i, setup| {
        let chars = coisotropy_characterizations(setup).map_err(|e| e.to_string())?;
        if chars.iter().any(|&c| c != chars[0]) {
            return Err(format!(
                "characterizations disagree on setup {i} (n={}, p={}): {:?}",
                setup.n(),
                setup.p(),
                chars
            ));
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: usize, i: usize) -> PVF {
        PVF::partial_dir(n, i).unwrap()
    }

    fn pi_so3() -> PVF {
        let n = 3;
        let mut pi = PVF::zero(n);
        pi.insert(&[1, 2], Poly::var(n, 3)).unwrap();
        pi.insert(&[1, 3], Poly::var(n, 2).neg()).unwrap();
        pi.insert(&[2, 3], Poly::var(n, 1)).unwrap();
        pi
    }

    fn pi_sympl4() -> PVF {
        let n = 4;
        d(n, 1)
            .wedge(&d(n, 3))
            .unwrap()
            .add(&d(n, 2).wedge(&d(n, 4)).unwrap())
            .unwrap()
    }

    #[test]
    fn gerstenhaber_pool_small() {
        let pool = pvf_triple_pool(3, 3, 2, 40, 0xA11CE);
        check_gerstenhaber(&pool, Strategy::Sequential).unwrap();
    }

    #[test]
    fn gerstenhaber_pool_matches_parallel() {
        let pool = pvf_triple_pool(4, 3, 2, 25, 0xB0B);
        let seq = check_gerstenhaber(&pool, Strategy::Sequential);
        let par = check_gerstenhaber(&pool, Strategy::Parallel);
        assert_eq!(seq, par);
        seq.unwrap();
    }

    #[test]
    fn dpi_square_iff_poisson_pool() {
        let n = 3;
        // [π,π] = −2 z₂ ∂₁∧∂₂∧∂₃ ≠ 0 for π = z₁∂₁∧∂₂ + z₂∂₁∧∂₃.
        let mut non_poisson = PVF::zero(n);
        non_poisson.insert(&[1, 2], Poly::var(n, 1)).unwrap();
        non_poisson.insert(&[1, 3], Poly::var(n, 2)).unwrap();
        assert!(!is_poisson(&non_poisson).unwrap());
        let pis = vec![
            pi_so3(),
            d(3, 1).wedge(&d(3, 2)).unwrap(),
            PVF::zero(3),
            non_poisson,
        ];
        check_dpi_square_iff_poisson(&pis, Strategy::Sequential).unwrap();
    }

    #[test]
    fn anchor_morphism_pool() {
        let setup = CoisoSetup::new(3, 3, pi_so3()).unwrap();
        let mut rng = pool_rng(7);
        let pool: Vec<(Form, Form)> = (0..20)
            .map(|_| {
                let (da, db) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
                (
                    random_form(&mut rng, 3, da, 2),
                    random_form(&mut rng, 3, db, 2),
                )
            })
            .collect();
        check_anchor_morphism(&setup, &pool, Strategy::Sequential).unwrap();
    }

    #[test]
    fn h_conditions_pool() {
        let setup = CoisoSetup::new(3, 3, pi_so3()).unwrap();
        let pool = form_triple_pool(3, 3, 2, 25, 99);
        check_h_conditions(&setup, &pool, Strategy::Sequential).unwrap();
        check_koszul_dgla(&setup, &pool, Strategy::Sequential).unwrap();
    }

    #[test]
    fn h_conditions_pool_symplectic() {
        let setup = CoisoSetup::new(4, 2, pi_sympl4()).unwrap();
        let pool = form_triple_pool(4, 3, 2, 15, 1234);
        check_h_conditions(&setup, &pool, Strategy::Sequential).unwrap();
        check_koszul_dgla(&setup, &pool, Strategy::Sequential).unwrap();
    }

    #[test]
    fn contraction_identity_pool() {
        let setup = CoisoSetup::new(3, 3, pi_so3()).unwrap();
        let mut rng = pool_rng(21);
        let mut alphas = Vec::new();
        for k in 0..=2 {
            for _ in 0..3 {
                alphas.push(random_form(&mut rng, 3, k, 2));
            }
        }
        let betas: Vec<Form> = (0..6)
            .map(|_| {
                let k = rng.gen_range(0..=3);
                random_form(&mut rng, 3, k, 2)
            })
            .collect();
        check_anchor_contraction_identity(&setup, &alphas, &betas, Strategy::Sequential).unwrap();
    }

    #[test]
    fn coisotropy_equivalences_pool() {
        let mut setups = vec![
            CoisoSetup::new(4, 2, pi_sympl4()).unwrap(), // coisotropic
            CoisoSetup::new(4, 1, pi_sympl4()).unwrap(), // hypersurface: always
            CoisoSetup::new(2, 2, d(2, 1).wedge(&d(2, 2)).unwrap()).unwrap(), // designed to fail
            CoisoSetup::new(3, 1, pi_so3()).unwrap(),
            CoisoSetup::new(3, 2, pi_so3()).unwrap(),
        ];
        // A linear hypersurface-adapted structure and its failing twin.
        let n = 3;
        let mut good = PVF::zero(n);
        good.insert(&[1, 2], Poly::var(n, 1)).unwrap();
        good.insert(&[1, 3], Poly::var(n, 1)).unwrap();
        setups.push(CoisoSetup::new(n, 2, good).unwrap());
        check_coisotropy_equivalences(&setups, Strategy::Sequential).unwrap();
        // Verify the pool actually contains both answers.
        let answers: Vec<bool> = setups
            .iter()
            .map(|s| coisotropy_characterizations(s).unwrap()[0])
            .collect();
        assert!(answers.contains(&true));
        assert!(answers.contains(&false));
    }
}
