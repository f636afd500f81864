//! Coisotropy of coordinate-subspace germs and the normal-bundle complex.
//!
//! Throughout, the germ is the linear subspace `Z = {z_1 = … = z_p = 0}` of
//! the chart. The ideal of functions vanishing on `Z` is the monomial ideal
//! `(z_1, …, z_p)`; `ℒ*_Z ⊂ ⋀*Θ` is the kernel of the restriction to the
//! exterior algebra of the normal bundle, and `ℐ*_Z ⊂ Ω*` is the
//! multiplicative ideal generated by `z_1, …, z_p, dz_1, …, dz_p`.
//!
//! When the germ is coisotropic for a Poisson bivector `π`, the Lichnerowicz
//! differential descends to the normal complex `(⋀*𝒩, d̄_π)`, represented
//! here by `NormalPVF`: components use only the normal directions
//! `∂_1, …, ∂_p` and coefficients use only the tangential variables
//! `z_{p+1}, …, z_n` (the canonical representatives of the quotient).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::CalcError;
use crate::exterior::{CompSer, Components, MIdx};
use crate::form::Form;
use crate::ops;
use crate::poly::Poly;
use crate::pvf::PVF;
use crate::rat::Rat;

/// A chart with a distinguished coordinate subspace and a bivector field:
/// the triple (ℂⁿ, Z = {z_1 = … = z_p = 0}, π).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoisoSetup {
    n: usize,
    p: usize,
    pi: PVF,
}

impl CoisoSetup {
    /// Validates `p ≤ n`, the chart size of `pi`, and that `pi` is a pure
    /// bivector (every component of exterior degree 2; zero is allowed).
    pub fn new(n: usize, p: usize, pi: PVF) -> Result<Self, CalcError> {
        if p > n {
            return Err(CalcError::Invalid(format!(
                "codimension {p} exceeds chart dimension {n}"
            )));
        }
        if pi.nvars() != n {
            return Err(CalcError::VarMismatch {
                left: n,
                right: pi.nvars(),
            });
        }
        for (mi, _) in pi.components() {
            if mi.deg() != 2 {
                return Err(CalcError::NotBivector { found: mi.deg() });
            }
        }
        Ok(CoisoSetup { n, p, pi })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn pi(&self) -> &PVF {
        &self.pi
    }

    pub(crate) fn check_chart_pvf(&self, x: &PVF) -> Result<(), CalcError> {
        if x.nvars() != self.n {
            return Err(CalcError::VarMismatch {
                left: self.n,
                right: x.nvars(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_chart_form(&self, x: &Form) -> Result<(), CalcError> {
        if x.nvars() != self.n {
            return Err(CalcError::VarMismatch {
                left: self.n,
                right: x.nvars(),
            });
        }
        Ok(())
    }
}

/// True iff the germ is coisotropic: every coefficient `π_{ij}` with both
/// indices `≤ p` lies in the ideal `(z_1, …, z_p)`. Errors if `π` is not
/// Poisson — a non-integrable bivector has no coisotropy theory to speak of,
/// and silently answering would mask the mistake.
pub fn is_coisotropic(setup: &CoisoSetup) -> Result<bool, CalcError> {
    if !ops::is_poisson(setup.pi())? {
        return Err(CalcError::NotPoisson);
    }
    Ok(pi_vanishes_on_conormal_pairs(setup))
}

/// The coefficient condition alone, with no Poisson check.
fn pi_vanishes_on_conormal_pairs(setup: &CoisoSetup) -> bool {
    let p = setup.p();
    setup
        .pi()
        .components()
        .all(|(mi, c)| mi.max_index() as usize > p || c.in_coordinate_ideal(p))
}

/// Membership in `ℒ*_Z`, the kernel of the restriction `⋀*Θ → ⋀*𝒩`: every
/// component whose directions are all `≤ p` must have its coefficient in
/// `(z_1, …, z_p)`.
pub fn in_lz(setup: &CoisoSetup, xi: &PVF) -> bool {
    let p = setup.p();
    xi.components()
        .all(|(mi, c)| mi.max_index() as usize > p || c.in_coordinate_ideal(p))
}

/// Membership in `ℐ*_Z ⊂ Ω*`, the multiplicative ideal generated by
/// `z_1, …, z_p` and `dz_1, …, dz_p`: every component with no differential
/// in the first `p` directions must have its coefficient in `(z_1, …, z_p)`.
pub fn in_iz(setup: &CoisoSetup, alpha: &Form) -> bool {
    let p = setup.p();
    alpha.components().all(|(mi, c)| {
        mi.indices().iter().any(|&i| (i as usize) <= p) || c.in_coordinate_ideal(p)
    })
}

/// Section of `⋀*𝒩_{Z|X}` in canonical representatives: components keyed by
/// multi-indices with all directions `≤ p`, coefficients polynomial in
/// `z_{p+1}, …, z_n` only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalPVF {
    setup: CoisoSetup,
    comps: Components,
}

impl NormalPVF {
    /// The zero section.
    pub fn zero(setup: &CoisoSetup) -> Self {
        NormalPVF {
            setup: setup.clone(),
            comps: Components::zero(setup.n()),
        }
    }

    /// Builds a single component, validating the representative conditions.
    pub fn component(setup: &CoisoSetup, indices: &[u8], f: Poly) -> Result<Self, CalcError> {
        let mut out = NormalPVF::zero(setup);
        out.insert(indices, f)?;
        Ok(out)
    }

    /// Adds a component in place; errors if a direction exceeds `p` or the
    /// coefficient involves `z_1, …, z_p`.
    pub fn insert(&mut self, indices: &[u8], f: Poly) -> Result<(), CalcError> {
        let p = self.setup.p();
        for &i in indices {
            if i as usize > p {
                return Err(CalcError::Invalid(format!(
                    "normal direction {i} exceeds codimension {p}"
                )));
            }
        }
        if !f.independent_of_first(p) {
            return Err(CalcError::Invalid(
                "normal-complex coefficient involves a conormal variable".into(),
            ));
        }
        self.comps.insert_term(indices, f)
    }

    pub fn setup(&self) -> &CoisoSetup {
        &self.setup
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_zero()
    }

    pub fn add(&self, other: &NormalPVF) -> Result<NormalPVF, CalcError> {
        if self.setup != other.setup {
            return Err(CalcError::Invalid("normal sections over different setups".into()));
        }
        Ok(NormalPVF {
            setup: self.setup.clone(),
            comps: self.comps.add(&other.comps)?,
        })
    }

    pub fn sub(&self, other: &NormalPVF) -> Result<NormalPVF, CalcError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NormalPVF {
        NormalPVF {
            setup: self.setup.clone(),
            comps: self.comps.neg(),
        }
    }

    pub fn scale(&self, c: &Rat) -> NormalPVF {
        NormalPVF {
            setup: self.setup.clone(),
            comps: self.comps.scale(c),
        }
    }

    /// Exterior product in `⋀*𝒩`.
    pub fn wedge(&self, other: &NormalPVF) -> Result<NormalPVF, CalcError> {
        if self.setup != other.setup {
            return Err(CalcError::Invalid("normal sections over different setups".into()));
        }
        Ok(NormalPVF {
            setup: self.setup.clone(),
            comps: self.comps.wedge(&other.comps)?,
        })
    }

    /// Exterior degree if homogeneous.
    pub fn ext_degree(&self) -> Option<usize> {
        self.comps.ext_degree()
    }

    pub fn components(&self) -> impl Iterator<Item = (&MIdx, &Poly)> {
        self.comps.comps.iter()
    }

    /// The canonical lift to a polyvector field on the chart (representatives
    /// are already polynomial sections, so this is the inclusion).
    pub fn lift(&self) -> PVF {
        let mut out = PVF::zero(self.setup.n());
        for (mi, c) in self.components() {
            out.insert(mi.indices(), c.clone())
                .expect("validated on insertion");
        }
        out
    }

    /// Splits by coefficient total degree (in the tangential variables).
    pub fn coeff_degree_split(&self) -> BTreeMap<u32, NormalPVF> {
        self.comps
            .coeff_degree_split()
            .into_iter()
            .map(|(d, c)| {
                (
                    d,
                    NormalPVF {
                        setup: self.setup.clone(),
                        comps: c,
                    },
                )
            })
            .collect()
    }

    pub fn to_ser(&self) -> Vec<CompSer> {
        self.comps.to_ser()
    }

    pub fn from_ser(setup: &CoisoSetup, comps: &[CompSer]) -> Result<Self, CalcError> {
        let mut out = NormalPVF::zero(setup);
        for comp in comps {
            let poly = crate::parse::parse_poly(&comp.coeff, setup.n())
                .map_err(|e| CalcError::Invalid(format!("coefficient '{}': {e}", comp.coeff)))?;
            out.insert(&comp.indices, poly)?;
        }
        Ok(out)
    }
}

impl fmt::Display for NormalPVF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.comps.display_with(f, "∂̄")
    }
}

/// Restriction `⋀*Θ → ⋀*𝒩`: drops components with any tangential direction
/// (index `> p`) and sets `z_1 = … = z_p = 0` in the surviving coefficients.
/// `normal_project(ξ)` is zero exactly when `in_lz(ξ)` holds.
pub fn normal_project(setup: &CoisoSetup, xi: &PVF) -> Result<NormalPVF, CalcError> {
    setup.check_chart_pvf(xi)?;
    let p = setup.p();
    let conormal: Vec<usize> = (1..=p).collect();
    let mut out = NormalPVF::zero(setup);
    for (mi, c) in xi.components() {
        if mi.max_index() as usize > p {
            continue;
        }
        let reduced = c.set_vars_to_zero(&conormal);
        if !reduced.is_zero() {
            out.insert(mi.indices(), reduced)?;
        }
    }
    Ok(out)
}

/// The induced differential on the normal complex:
/// `d̄_π(ν) = normal_project(d_π(lift ν))`. Requires a coisotropic setup —
/// that is exactly the condition making the value independent of the lift.
pub fn normal_dpi(setup: &CoisoSetup, nu: &NormalPVF) -> Result<NormalPVF, CalcError> {
    if !is_coisotropic(setup)? {
        return Err(CalcError::NotCoisotropic);
    }
    let image = ops::lichnerowicz(setup, &nu.lift())?;
    normal_project(setup, &image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::{is_poisson, lichnerowicz};
    use crate::rat::rint;

    fn d(n: usize, i: usize) -> PVF {
        PVF::partial_dir(n, i).unwrap()
    }

    fn z(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    /// Constant symplectic-type bivector on ℂ⁴: ∂₁∧∂₃ + ∂₂∧∂₄.
    fn pi_sympl4() -> PVF {
        let n = 4;
        d(n, 1)
            .wedge(&d(n, 3))
            .unwrap()
            .add(&d(n, 2).wedge(&d(n, 4)).unwrap())
            .unwrap()
    }

    #[test]
    fn coisotropy_examples() {
        // p = 1 is always coisotropic (no conormal pairs).
        let s = CoisoSetup::new(2, 1, d(2, 1).wedge(&d(2, 2)).unwrap()).unwrap();
        assert!(is_coisotropic(&s).unwrap());
        // π = ∂₁∧∂₂ with p = 2: π₁₂ = 1 is not in (z₁,z₂).
        let s = CoisoSetup::new(2, 2, d(2, 1).wedge(&d(2, 2)).unwrap()).unwrap();
        assert!(!is_coisotropic(&s).unwrap());
        // π = ∂₁∧∂₃ + ∂₂∧∂₄ with p = 2: π₁₂ = 0.
        let s = CoisoSetup::new(4, 2, pi_sympl4()).unwrap();
        assert!(is_coisotropic(&s).unwrap());
        // Non-Poisson input is an error, not a boolean:
        // [π,π] = −2 z₂ ∂₁∧∂₂∧∂₃ for π = z₁∂₁∧∂₂ + z₂∂₁∧∂₃.
        let n = 3;
        let mut q = PVF::zero(n);
        q.insert(&[1, 2], z(n, 1)).unwrap();
        q.insert(&[1, 3], z(n, 2)).unwrap();
        assert!(!is_poisson(&q).unwrap());
        let s = CoisoSetup::new(n, 1, q).unwrap();
        assert_eq!(is_coisotropic(&s).unwrap_err(), CalcError::NotPoisson);
    }

    #[test]
    fn ideal_memberships() {
        let n = 3;
        let p = 2;
        let s = CoisoSetup::new(n, p, PVF::zero(n)).unwrap();
        // ∂_{p+1} is tangential, ∂₁ is not.
        assert!(in_lz(&s, &d(n, 3)));
        assert!(!in_lz(&s, &d(n, 1)));
        // z₁·g ∈ ℐ*_Z for any form g; dz₃ restricts to a nonzero form on Z.
        for g in [
            Form::dz(n, 3).unwrap(),
            Form::dz(n, 3).unwrap().wedge(&Form::dz(n, 2).unwrap()).unwrap(),
            Form::from_poly(z(n, 3)),
        ] {
            assert!(in_iz(&s, &g.scale_poly(&z(n, 1)).unwrap()));
        }
        assert!(!in_iz(&s, &Form::dz(n, 3).unwrap()));
        // dz₁ ∈ ℐ*_Z, and z₃·dz₃ is not.
        assert!(in_iz(&s, &Form::dz(n, 1).unwrap()));
        let a = Form::component(n, &[3], z(n, 3)).unwrap();
        assert!(!in_iz(&s, &a));
    }

    #[test]
    fn projection_rules() {
        let n = 3;
        let p = 2;
        let s = CoisoSetup::new(n, p, PVF::zero(n)).unwrap();
        // ∂₁ survives; z₁∂₁ dies; mixed example keeps only its normal part.
        assert!(!normal_project(&s, &d(n, 1)).unwrap().is_zero());
        let dead = PVF::component(n, &[1], z(n, 1)).unwrap();
        assert!(normal_project(&s, &dead).unwrap().is_zero());
        let mixed = PVF::component(n, &[1, 2], z(n, 3))
            .unwrap()
            .add(&PVF::component(n, &[2, 3], Poly::one(n)).unwrap())
            .unwrap();
        let proj = normal_project(&s, &mixed).unwrap();
        let expected = NormalPVF::component(&s, &[1, 2], z(n, 3)).unwrap();
        assert_eq!(proj, expected);
        // Projection kernel is exactly ℒ*_Z on a slate of samples.
        let samples = [
            d(n, 1),
            d(n, 3),
            dead.clone(),
            mixed.clone(),
            PVF::component(n, &[1], z(n, 2).mul(&z(n, 1))).unwrap(),
            PVF::component(n, &[1], z(n, 3).mul(&z(n, 3))).unwrap(),
        ];
        for xi in &samples {
            assert_eq!(normal_project(&s, xi).unwrap().is_zero(), in_lz(&s, xi));
        }
    }

    #[test]
    fn normal_representative_validation() {
        let n = 3;
        let s = CoisoSetup::new(n, 2, PVF::zero(n)).unwrap();
        assert!(NormalPVF::component(&s, &[3], Poly::one(n)).is_err());
        assert!(NormalPVF::component(&s, &[1], z(n, 1)).is_err());
        let ok = NormalPVF::component(&s, &[2, 1], z(n, 3)).unwrap();
        // sign absorbed on sorting
        assert_eq!(ok.components().next().unwrap().1, &z(n, 3).neg());
    }

    #[test]
    fn induced_differential() {
        // Constant symplectic pairing: normal constants are closed.
        let s = CoisoSetup::new(4, 2, pi_sympl4()).unwrap();
        let nu = NormalPVF::component(&s, &[1], Poly::one(4))
            .unwrap()
            .add(&NormalPVF::component(&s, &[2], Poly::constant(4, rint(5))).unwrap())
            .unwrap();
        assert!(normal_dpi(&s, &nu).unwrap().is_zero());
        // Well-definedness: d̄_π ∘ P = P ∘ d_π on chart fields.
        let n = 4;
        let samples = [
            PVF::component(n, &[1], z(n, 3)).unwrap(),
            PVF::component(n, &[2], z(n, 4).mul(&z(n, 4))).unwrap(),
            PVF::component(n, &[1, 2], z(n, 3).mul(&z(n, 4))).unwrap(),
            PVF::component(n, &[3], z(n, 3)).unwrap(),
            PVF::component(n, &[1, 3], Poly::one(n)).unwrap(),
        ];
        for xi in &samples {
            let route_a = normal_dpi(&s, &normal_project(&s, xi).unwrap()).unwrap();
            let route_b = normal_project(&s, &lichnerowicz(&s, xi).unwrap()).unwrap();
            assert_eq!(route_a, route_b);
        }
        // d̄_π² = 0 on samples.
        for xi in &samples {
            let nu = normal_project(&s, xi).unwrap();
            let twice = normal_dpi(&s, &normal_dpi(&s, &nu).unwrap()).unwrap();
            assert!(twice.is_zero());
        }
        // Non-coisotropic setup refuses.
        let bad = CoisoSetup::new(2, 2, d(2, 1).wedge(&d(2, 2)).unwrap()).unwrap();
        let nu = NormalPVF::component(&bad, &[1], Poly::one(2)).unwrap();
        assert_eq!(normal_dpi(&bad, &nu).unwrap_err(), CalcError::NotCoisotropic);
    }
}
