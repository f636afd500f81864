//! Randomized pools and exact structural checks for the totalization
//! machinery, plus the named diagram fixtures shared with downstream suites.
//!
//! Everything is exact rational arithmetic over reproducible seeded pools;
//! failure messages carry the offending inputs. Each pooled check accepts a
//! [`Strategy`] so the same pool can run sequentially or data-parallel.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use mc_deform::findgla::{ComboSer, FinDGLASer};
use polycalc::linalg::QMat;
use polycalc::par::{try_all, Strategy};
use polycalc::rat::{rat, sign_pow, Zero};
use polycalc::verify::pool_rng;
use polycalc::CalcError;

use crate::cech::{cech_cohomology_dims, cech_diff, cech_dim};
use crate::hfiber::{hfiber_build, HFiber};
use crate::scs::{FaceSer, ScsDGLA, ScsDGLASer, SesData, SesSer};
use crate::sform::{weight_basis, SimplexForm};
use crate::tot::{
    tot_bracket, tot_check, tot_cohomology_dims, tot_degree_window, tot_diff, tot_map,
    whitney_i, whitney_matrix, AmbientBasis, TotElem, TotSlice,
};

// ---------------------------------------------------------------------------
// Named diagram fixtures
// ---------------------------------------------------------------------------

fn combo(pairs: &[(&str, &str)]) -> ComboSer {
    pairs
        .iter()
        .map(|(n, c)| (n.to_string(), c.to_string()))
        .collect()
}

/// Two abelian levels covering a circle by two arcs: both overlap components
/// receive the sum of the arc functions, in opposite face slots. Cohomology
/// `(1, 1)` in degrees `0..=1` — the 0-sphere Betti numbers of the nerve.
pub fn circle_ser() -> ScsDGLASer {
    ScsDGLASer {
        levels: vec![
            FinDGLASer {
                basis: vec![("u0".into(), 0), ("u1".into(), 0)],
                diff: vec![],
                brackets: vec![],
            },
            FinDGLASer {
                basis: vec![("a".into(), 0), ("b".into(), 0)],
                diff: vec![],
                brackets: vec![],
            },
        ],
        faces: vec![vec![
            vec![("u1".into(), combo(&[("a", "1"), ("b", "1")]))],
            vec![("u0".into(), combo(&[("a", "1"), ("b", "1")]))],
        ]],
    }
}

/// Three abelian levels shaped like a disc covered by three patches, with a
/// contractible extra summand `d(f_i) = w_i` at level 0. Cohomology
/// `(0, 2, 0)` in degrees `0..=2`.
pub fn disc_ser() -> ScsDGLASer {
    let level0 = FinDGLASer {
        basis: vec![
            ("f0".into(), 0),
            ("f1".into(), 0),
            ("f2".into(), 0),
            ("w0".into(), 1),
            ("w1".into(), 1),
            ("w2".into(), 1),
        ],
        diff: vec![
            ("f0".into(), combo(&[("w0", "1")])),
            ("f1".into(), combo(&[("w1", "1")])),
            ("f2".into(), combo(&[("w2", "1")])),
        ],
        brackets: vec![],
    };
    let level1 = FinDGLASer {
        basis: vec![("g01".into(), 0), ("g02".into(), 0), ("g12".into(), 0)],
        diff: vec![],
        brackets: vec![],
    };
    let level2 = FinDGLASer {
        basis: vec![("h".into(), 0)],
        diff: vec![],
        brackets: vec![],
    };
    ScsDGLASer {
        levels: vec![level0, level1, level2],
        faces: vec![
            vec![
                // ∂_0 drops the first patch index: f_k lands on overlaps (i,j) with j = k.
                vec![
                    ("f1".into(), combo(&[("g01", "1")])),
                    ("f2".into(), combo(&[("g02", "1"), ("g12", "1")])),
                ],
                // ∂_1 drops the second: f_k lands on overlaps with i = k.
                vec![
                    ("f0".into(), combo(&[("g01", "1"), ("g02", "1")])),
                    ("f1".into(), combo(&[("g12", "1")])),
                ],
            ],
            vec![
                vec![("g12".into(), combo(&[("h", "1")]))],
                vec![("g02".into(), combo(&[("h", "1")]))],
                vec![("g01".into(), combo(&[("h", "1")]))],
            ],
        ],
    }
}

/// Two copies of the Heisenberg algebra `d(e) = f`, `[e,f] = g` with both
/// faces the identity — the smallest diagram whose totalization has a
/// nonzero bracket. Cohomology `(0, 1, 1)` in degrees `0..=2`.
pub fn constant_heisenberg_ser() -> ScsDGLASer {
    let level = FinDGLASer {
        basis: vec![("e".into(), 0), ("f".into(), 1), ("g".into(), 1)],
        diff: vec![("e".into(), combo(&[("f", "1")]))],
        brackets: vec![("e".into(), "f".into(), combo(&[("g", "1")]))],
    };
    ScsDGLASer {
        levels: vec![level.clone(), level],
        faces: vec![vec![
            vec![
                ("e".into(), combo(&[("e", "1")])),
                ("f".into(), combo(&[("f", "1")])),
                ("g".into(), combo(&[("g", "1")])),
            ],
            vec![
                ("e".into(), combo(&[("e", "1")])),
                ("f".into(), combo(&[("f", "1")])),
                ("g".into(), combo(&[("g", "1")])),
            ],
        ]],
    }
}

/// Serialized parts of the contraction fiber: `L = ⟨y'⟩` in degree 1 with
/// zero differential, `M = ⟨x, y⟩` with `d(x) = y`, and `χ(y') = y`. Its
/// homotopy fiber has cohomology `(0, 1, 0)` in degrees `0..=2` at every
/// weight bound.
pub fn contraction_fiber_parts() -> (FinDGLASer, FinDGLASer, FaceSer) {
    let l = FinDGLASer {
        basis: vec![("yp".into(), 1)],
        diff: vec![],
        brackets: vec![],
    };
    let m = FinDGLASer {
        basis: vec![("x".into(), 0), ("y".into(), 1)],
        diff: vec![("x".into(), combo(&[("y", "1")]))],
        brackets: vec![],
    };
    let chi: FaceSer = vec![("yp".into(), combo(&[("y", "1")]))];
    (l, m, chi)
}

/// The validated homotopy fiber of [`contraction_fiber_parts`].
pub fn contraction_fiber() -> HFiber {
    let (l, m, chi) = contraction_fiber_parts();
    hfiber_build(&l, &m, &chi).expect("fixture table is consistent")
}

/// The homotopy fiber of the zero morphism from a one-dimensional abelian
/// algebra into the Heisenberg algebra — the smallest fiber with a nonzero
/// bracket; its path components are loops vanishing at both endpoints.
pub fn heisenberg_loop_fiber() -> HFiber {
    let l = FinDGLASer {
        basis: vec![("z".into(), 1)],
        diff: vec![],
        brackets: vec![],
    };
    let m = FinDGLASer {
        basis: vec![("e".into(), 0), ("f".into(), 1), ("g".into(), 1)],
        diff: vec![("e".into(), combo(&[("f", "1")]))],
        brackets: vec![("e".into(), "f".into(), combo(&[("g", "1")]))],
    };
    hfiber_build(&l, &m, &vec![]).expect("fixture table is consistent")
}

/// A levelwise-split but face-twisted short exact sequence of two-level
/// abelian diagrams: the middle's second face sends `b ↦ b' − a'`, so the
/// sequence does not split as diagrams. Exact at every level and, for any
/// weight bound ≥ 1, on every slice.
pub fn twisted_extension_ses() -> SesSer {
    let sub = ScsDGLASer {
        levels: vec![
            FinDGLASer {
                basis: vec![("v".into(), 0)],
                diff: vec![],
                brackets: vec![],
            },
            FinDGLASer {
                basis: vec![("vp".into(), 0)],
                diff: vec![],
                brackets: vec![],
            },
        ],
        faces: vec![vec![vec![("v".into(), combo(&[("vp", "1")]))], vec![]]],
    };
    let mid = ScsDGLASer {
        levels: vec![
            FinDGLASer {
                basis: vec![("a".into(), 0), ("b".into(), 0)],
                diff: vec![],
                brackets: vec![],
            },
            FinDGLASer {
                basis: vec![("ap".into(), 0), ("bp".into(), 0)],
                diff: vec![],
                brackets: vec![],
            },
        ],
        faces: vec![vec![
            vec![
                ("a".into(), combo(&[("ap", "1")])),
                ("b".into(), combo(&[("ap", "1"), ("bp", "1")])),
            ],
            vec![("b".into(), combo(&[("ap", "-1"), ("bp", "1")]))],
        ]],
    };
    let quot = ScsDGLASer {
        levels: vec![
            FinDGLASer {
                basis: vec![("u".into(), 0)],
                diff: vec![],
                brackets: vec![],
            },
            FinDGLASer {
                basis: vec![("up".into(), 0)],
                diff: vec![],
                brackets: vec![],
            },
        ],
        faces: vec![vec![
            vec![("u".into(), combo(&[("up", "1")]))],
            vec![("u".into(), combo(&[("up", "1")]))],
        ]],
    };
    SesSer {
        sub,
        mid,
        quot,
        inject: vec![
            vec![("v".into(), combo(&[("a", "1")]))],
            vec![("vp".into(), combo(&[("ap", "1")]))],
        ],
        project: vec![
            vec![("b".into(), combo(&[("u", "1")]))],
            vec![("bp".into(), combo(&[("up", "1")]))],
        ],
    }
}

// ---------------------------------------------------------------------------
// Pool generation
// ---------------------------------------------------------------------------

/// A random form on the `n`-simplex: a short combination of weight-bounded
/// monomials of one form degree.
pub fn random_sform(
    rng: &mut ChaCha8Rng,
    n: usize,
    form_degree: usize,
    weight_bound: u32,
) -> SimplexForm {
    let basis = weight_basis(n, form_degree, weight_bound);
    let mut f = SimplexForm::zero(n);
    if basis.is_empty() {
        return f;
    }
    let terms = rng.gen_range(1..=3usize.min(basis.len()));
    for _ in 0..terms {
        let i = rng.gen_range(0..basis.len());
        let num: i64 = loop {
            let k = rng.gen_range(-3..=3);
            if k != 0 {
                break k;
            }
        };
        let den: i64 = rng.gen_range(1..=2);
        f = f
            .add(&basis[i].scale(&rat(num, den)))
            .expect("all monomials live on the same simplex");
    }
    f
}

/// Forms of one degree below the top over simplex dimensions `1..=max_n`,
/// so that both sides of the boundary identity integrate something.
pub fn stokes_pool(max_n: usize, weight_bound: u32, count: usize, seed: u64) -> Vec<SimplexForm> {
    let mut rng = pool_rng(seed);
    (0..count)
        .map(|i| {
            let n = 1 + (i % max_n.max(1));
            random_sform(&mut rng, n, n - 1, weight_bound)
        })
        .collect()
}

/// Pairs of forms on a common simplex, of mixed form degrees.
pub fn sform_pair_pool(
    max_n: usize,
    weight_bound: u32,
    count: usize,
    seed: u64,
) -> Vec<(SimplexForm, SimplexForm)> {
    let mut rng = pool_rng(seed);
    (0..count)
        .map(|i| {
            let n = 1 + (i % max_n.max(1));
            let p = rng.gen_range(0..=n);
            let q = rng.gen_range(0..=n);
            let f = random_sform(&mut rng, n, p, weight_bound);
            let g = random_sform(&mut rng, n, q, weight_bound);
            (f, g)
        })
        .collect()
}

/// A random combination of slice basis elements — always a genuine
/// totalization element of the slice's degree.
fn random_slice_elem(
    rng: &mut ChaCha8Rng,
    scs: &ScsDGLA,
    slice: &TotSlice,
) -> Result<TotElem, CalcError> {
    let mut out = TotElem::zero(scs, slice.ambient().degree());
    for i in 0..slice.dim() {
        if rng.gen_range(0..2) == 0 {
            continue;
        }
        let num: i64 = rng.gen_range(-3..=3);
        if num == 0 {
            continue;
        }
        let den: i64 = rng.gen_range(1..=2);
        out = out.add(&slice.elem(scs, i)?.scale(&rat(num, den)), scs)?;
    }
    Ok(out)
}

/// A triple of totalization elements of (independently) random degrees.
#[derive(Debug, Clone)]
pub struct TotTriple {
    pub x: TotElem,
    pub y: TotElem,
    pub z: TotElem,
}

/// Seeded pool of random triples drawn from the nonzero weight-bounded
/// slices of a diagram.
pub fn tot_triple_pool(
    scs: &ScsDGLA,
    weight_bound: u32,
    count: usize,
    seed: u64,
) -> Result<Vec<TotTriple>, CalcError> {
    let mut rng = pool_rng(seed);
    let (lo, hi) = tot_degree_window(scs)?;
    let mut slices = Vec::new();
    for p in lo..=hi {
        let s = TotSlice::build(scs, p, weight_bound)?;
        if s.dim() > 0 {
            slices.push(s);
        }
    }
    if slices.is_empty() {
        return Err(CalcError::Invalid(
            "every weight-bounded slice of the diagram is zero".into(),
        ));
    }
    let mut pick = |rng: &mut ChaCha8Rng| {
        let s = &slices[rng.gen_range(0..slices.len())];
        random_slice_elem(rng, scs, s)
    };
    (0..count)
        .map(|_| {
            Ok(TotTriple {
                x: pick(&mut rng)?,
                y: pick(&mut rng)?,
                z: pick(&mut rng)?,
            })
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Simplex-form identities
// ---------------------------------------------------------------------------

/// The boundary identity `∫ dφ = Σ_k (−1)^k ∫ ∂*_k φ` on every pool form.
pub fn check_stokes(pool: &[SimplexForm], strategy: Strategy) -> Result<(), String> {
    try_all(strategy, pool, |i, phi| {
        let n = phi.nsimplex();
        if n == 0 {
            return Err(format!("form {i} lives on the point; nothing to check"));
        }
        let lhs = phi.d().simplex_integrate();
        let mut rhs = polycalc::rat::rzero();
        for k in 0..=n {
            let face = phi
                .face_pullback(k)
                .map_err(|e| format!("form {i}: {e}"))?;
            rhs += sign_pow(k as i64) * face.simplex_integrate();
        }
        if lhs != rhs {
            return Err(format!(
                "boundary identity fails for φ = {phi}: interior {lhs}, boundary {rhs}"
            ));
        }
        Ok(())
    })
}

/// Face pullbacks are morphisms of differential graded algebras:
/// `∂*_k (φ·ψ) = ∂*_k φ · ∂*_k ψ` and `∂*_k (dφ) = d(∂*_k φ)`.
pub fn check_face_morphism(
    pool: &[(SimplexForm, SimplexForm)],
    strategy: Strategy,
) -> Result<(), String> {
    try_all(strategy, pool, |i, (phi, psi)| {
        let err = |e: CalcError| format!("pair {i}: {e}");
        let n = phi.nsimplex();
        for k in 0..=n {
            let product = phi.mul(psi).map_err(err)?.face_pullback(k).map_err(err)?;
            let factors = phi
                .face_pullback(k)
                .map_err(err)?
                .mul(&psi.face_pullback(k).map_err(err)?)
                .map_err(err)?;
            if product != factors {
                return Err(format!(
                    "face {k} is not multiplicative on pair {i}: φ = {phi}, ψ = {psi}"
                ));
            }
            let d_then_face = phi.d().face_pullback(k).map_err(err)?;
            let face_then_d = phi.face_pullback(k).map_err(err)?.d();
            if d_then_face != face_then_d {
                return Err(format!(
                    "face {k} does not commute with d on pair {i}: φ = {phi}"
                ));
            }
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Totalization structure
// ---------------------------------------------------------------------------

/// The totalization is a differential graded Lie algebra: every structure
/// map keeps the matching conditions, the differential squares to zero, and
/// the bracket satisfies graded antisymmetry, Leibniz, and Jacobi on every
/// pool triple.
pub fn check_tot_dgla(
    scs: &ScsDGLA,
    pool: &[TotTriple],
    strategy: Strategy,
) -> Result<(), String> {
    try_all(strategy, pool, |i, TotTriple { x, y, z }| {
        let err = |e: CalcError| format!("pool item {i}: {e}");
        let dx = tot_diff(scs, x).map_err(err)?;
        if !tot_check(scs, &dx).map_err(err)? {
            return Err(format!(
                "pool item {i}: the differential broke the matching conditions"
            ));
        }
        if !tot_diff(scs, &dx).map_err(err)?.is_zero() {
            return Err(format!(
                "pool item {i}: the differential does not square to zero"
            ));
        }
        let xy = tot_bracket(scs, x, y).map_err(err)?;
        if !tot_check(scs, &xy).map_err(err)? {
            return Err(format!(
                "pool item {i}: the bracket broke the matching conditions"
            ));
        }
        let p = x.total_degree();
        let q = y.total_degree();
        let yx = tot_bracket(scs, y, x).map_err(err)?;
        if xy != yx.scale(&sign_pow(p * q + 1)) {
            return Err(format!("pool item {i}: graded antisymmetry fails"));
        }
        let lhs = tot_diff(scs, &xy).map_err(err)?;
        let dy = tot_diff(scs, y).map_err(err)?;
        let rhs = tot_bracket(scs, &dx, y)
            .map_err(err)?
            .add(&tot_bracket(scs, x, &dy).map_err(err)?.scale(&sign_pow(p)), scs)
            .map_err(err)?;
        if lhs != rhs {
            return Err(format!("pool item {i}: the Leibniz identity fails"));
        }
        let yz = tot_bracket(scs, y, z).map_err(err)?;
        let xz = tot_bracket(scs, x, z).map_err(err)?;
        let lhs = tot_bracket(scs, x, &yz).map_err(err)?;
        let rhs = tot_bracket(scs, &xy, z)
            .map_err(err)?
            .add(
                &tot_bracket(scs, y, &xz).map_err(err)?.scale(&sign_pow(p * q)),
                scs,
            )
            .map_err(err)?;
        if lhs != rhs {
            return Err(format!("pool item {i}: the Jacobi identity fails"));
        }
        Ok(())
    })
}

/// Integration over the simplices is a surjective chain map from the
/// totalization onto the cochain complex: it intertwines the differentials
/// on every slice basis element, and its matrix has full target rank in
/// every degree.
pub fn check_whitney(scs: &ScsDGLA, weight_bound: u32, strategy: Strategy) -> Result<(), String> {
    let (lo, hi) = tot_degree_window(scs).map_err(|e| e.to_string())?;
    let degrees: Vec<i64> = (lo..=hi).collect();
    try_all(strategy, &degrees, |_, &p| {
        let err = |e: CalcError| format!("degree {p}: {e}");
        let slice = TotSlice::build(scs, p, weight_bound).map_err(err)?;
        for i in 0..slice.dim() {
            let z = slice.elem(scs, i).map_err(err)?;
            let lhs = whitney_i(scs, &tot_diff(scs, &z).map_err(err)?).map_err(err)?;
            let rhs = cech_diff(scs, &whitney_i(scs, &z).map_err(err)?).map_err(err)?;
            if lhs != rhs {
                return Err(format!(
                    "integration is not a chain map on slice element {i} of degree {p}"
                ));
            }
        }
        let rank = whitney_matrix(scs, &slice).map_err(err)?.rank();
        let want = cech_dim(scs, p).map_err(err)?;
        if rank != want {
            return Err(format!(
                "integration is not surjective in degree {p}: rank {rank}, \
                 target dimension {want}"
            ));
        }
        Ok(())
    })
}

/// The two cohomology routes agree: weight-bounded totalization slices and
/// the cochain complex produce identical dimensions in every degree.
pub fn check_tot_matches_cech(scs: &ScsDGLA, weight_bound: u32) -> Result<(), String> {
    let tot = tot_cohomology_dims(scs, weight_bound).map_err(|e| e.to_string())?;
    let cech = cech_cohomology_dims(scs).map_err(|e| e.to_string())?;
    if tot != cech {
        return Err(format!(
            "cohomology routes disagree at weight bound {weight_bound}: \
             totalization {tot:?}, cochain complex {cech:?}"
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Short exact sequences of diagrams
// ---------------------------------------------------------------------------

/// Exactness of a short sequence of diagrams on every weight-bounded slice:
/// dimensions are additive, the inclusion is injective, the composite is
/// zero, the projection is surjective, and the kernel of the projection has
/// exactly the dimension of the included image.
pub fn check_ses_exactness(
    ses: &SesSer,
    weight_bound: u32,
    strategy: Strategy,
) -> Result<(), String> {
    let data = SesData::from_ser(ses).map_err(|e| e.to_string())?;
    let (lo, hi) = tot_degree_window(&data.mid).map_err(|e| e.to_string())?;
    let degrees: Vec<i64> = (lo..=hi).collect();
    try_all(strategy, &degrees, |_, &p| {
        let err = |e: CalcError| format!("degree {p}: {e}");
        let s_sub = TotSlice::build(&data.sub, p, weight_bound).map_err(err)?;
        let s_mid = TotSlice::build(&data.mid, p, weight_bound).map_err(err)?;
        let s_quot = TotSlice::build(&data.quot, p, weight_bound).map_err(err)?;
        if s_sub.dim() + s_quot.dim() != s_mid.dim() {
            return Err(format!(
                "slice dimensions are not additive in degree {p}: \
                 {} + {} ≠ {}",
                s_sub.dim(),
                s_quot.dim(),
                s_mid.dim()
            ));
        }
        let mid_amb = AmbientBasis::build(&data.mid, p, weight_bound).map_err(err)?;
        let quot_amb = AmbientBasis::build(&data.quot, p, weight_bound).map_err(err)?;
        let mut inject_cols = Vec::with_capacity(s_sub.dim());
        for i in 0..s_sub.dim() {
            let x = s_sub.elem(&data.sub, i).map_err(err)?;
            let y = tot_map(&data.inject, &data.sub, &data.mid, &x).map_err(err)?;
            if !tot_check(&data.mid, &y).map_err(err)? {
                return Err(format!(
                    "inclusion image of slice element {i} breaks the matching \
                     conditions in degree {p}"
                ));
            }
            let composite = tot_map(&data.project, &data.mid, &data.quot, &y).map_err(err)?;
            if !composite.is_zero() {
                return Err(format!(
                    "composite of inclusion and projection is nonzero on slice \
                     element {i} in degree {p}"
                ));
            }
            inject_cols.push(mid_amb.coords(&data.mid, &y).map_err(err)?);
        }
        let inject_mat = QMat::from_cols(inject_cols, mid_amb.dim());
        if inject_mat.rank() != s_sub.dim() {
            return Err(format!(
                "inclusion is not injective on the degree-{p} slice"
            ));
        }
        let mut project_cols = Vec::with_capacity(s_mid.dim());
        for i in 0..s_mid.dim() {
            let x = s_mid.elem(&data.mid, i).map_err(err)?;
            let y = tot_map(&data.project, &data.mid, &data.quot, &x).map_err(err)?;
            project_cols.push(quot_amb.coords(&data.quot, &y).map_err(err)?);
        }
        let project_mat = QMat::from_cols(project_cols, quot_amb.dim());
        let project_rank = project_mat.rank();
        if project_rank != s_quot.dim() {
            return Err(format!(
                "projection is not surjective onto the degree-{p} slice: \
                 rank {project_rank}, target dimension {}",
                s_quot.dim()
            ));
        }
        let kernel_dim = s_mid.dim() - project_rank;
        if kernel_dim != s_sub.dim() {
            return Err(format!(
                "kernel of the projection has dimension {kernel_dim} in degree \
                 {p}, but the included image has dimension {}",
                s_sub.dim()
            ));
        }
        Ok(())
    })
}

// ---------------------------------------------------------------------------
// Homotopy fibers
// ---------------------------------------------------------------------------

/// Path integration intertwines the fiber differential with the shifted
/// cokernel differential on every slice basis element.
pub fn check_fiber_chain_map(
    fiber: &HFiber,
    weight_bound: u32,
    strategy: Strategy,
) -> Result<(), String> {
    let (lo, hi) = fiber.degree_window();
    let degrees: Vec<i64> = (lo..=hi).collect();
    try_all(strategy, &degrees, |_, &p| {
        let err = |e: CalcError| format!("degree {p}: {e}");
        for (i, z) in fiber
            .slice_basis(p, weight_bound)
            .map_err(err)?
            .iter()
            .enumerate()
        {
            let lhs = fiber
                .integrate01(&fiber.diff(z).map_err(err)?)
                .map_err(err)?;
            let rhs = fiber
                .coker_shifted_diff(&fiber.integrate01(z).map_err(err)?)
                .map_err(err)?;
            if lhs != rhs {
                return Err(format!(
                    "path integration is not a chain map on slice element {i} \
                     of degree {p}"
                ));
            }
        }
        Ok(())
    })
}

/// The fiber's direct endpoint-constrained slices agree with the
/// weight-bounded slices of its two-level diagram, dimension by dimension
/// and in cohomology.
pub fn check_fiber_matches_totalization(
    fiber: &HFiber,
    weight_bound: u32,
) -> Result<(), String> {
    let scs = ScsDGLA::from_ser(&fiber.to_scs_ser()).map_err(|e| e.to_string())?;
    let (lo, hi) = fiber.degree_window();
    for p in lo..=hi {
        let direct = fiber
            .slice_basis(p, weight_bound)
            .map_err(|e| e.to_string())?
            .len();
        let via_tot = TotSlice::build(&scs, p, weight_bound)
            .map_err(|e| e.to_string())?
            .dim();
        if direct != via_tot {
            return Err(format!(
                "slice dimensions disagree in degree {p}: endpoint route \
                 {direct}, totalization route {via_tot}"
            ));
        }
    }
    let direct = fiber
        .cohomology_dims(weight_bound)
        .map_err(|e| e.to_string())?;
    let via_tot = tot_cohomology_dims(&scs, weight_bound).map_err(|e| e.to_string())?;
    if direct != via_tot {
        return Err(format!(
            "cohomology routes disagree: endpoint route {direct:?}, \
             totalization route {via_tot:?}"
        ));
    }
    Ok(())
}
