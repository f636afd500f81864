//! Polynomial differential forms on standard simplices.
//!
//! `Ω_n` is the differential graded-commutative algebra of polynomial forms
//! on the `n`-simplex: generators `t_0, …, t_n` in degree `0` and
//! `dt_0, …, dt_n` in degree `1`, subject to `t_0 + … + t_n = 1` and
//! `dt_0 + … + dt_n = 0`, with differential `t_i ↦ dt_i`. This module works
//! in the *reduced* coordinates `t_1, …, t_n` — `t_0` and `dt_0` are
//! eliminated through the relations — so every form has a unique normal form
//! and equality of forms is literal equality of terms.
//!
//! The two operations that make `Ω_•` useful downstream are
//!
//! * [`SimplexForm::face_pullback`] — restriction to the `k`-th codimension-1
//!   face (insert `0` at position `k` and renumber), the structure maps of
//!   the simplicial DG algebra `Ω_•`, and
//! * [`SimplexForm::simplex_integrate`] — exact integration over the
//!   simplex, `∫ t_1^{a_1}⋯t_n^{a_n} dt_1∧…∧dt_n = a_1!⋯a_n!/(n+Σa_i)!`,
//!   which together satisfy the Stokes identity
//!   `∫ dφ = Σ_k (−1)^k ∫ ∂*_k φ`.
//!
//! All arithmetic is exact rational.

use std::collections::BTreeMap;
use std::fmt;

use polycalc::poly::Poly;
use polycalc::rat::{factorial, rat_string, rone, rzero, Rat, Zero};
use polycalc::CalcError;

/// A polynomial differential form on the `n`-simplex, stored as a map from
/// each strictly increasing tuple of reduced 1-form generators
/// `dt_{i_1}∧…∧dt_{i_p}` (indices in `1..=n`) to its polynomial coefficient
/// in `t_1, …, t_n`.
///
/// Zero coefficients are never stored, so derived equality is semantic
/// equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplexForm {
    n: usize,
    parts: BTreeMap<Vec<u8>, Poly>,
}

/// `dt_i ∧ dt_S` for strictly increasing `S`: `None` if `i ∈ S`, otherwise
/// the sorted tuple together with the sign `(−1)^{#{j ∈ S : j < i}}`.
fn wedge_into(dts: &[u8], i: u8) -> Option<(Vec<u8>, bool)> {
    if dts.contains(&i) {
        return None;
    }
    let below = dts.iter().filter(|&&j| j < i).count();
    let mut out = dts.to_vec();
    out.push(i);
    out.sort_unstable();
    Some((out, below % 2 == 1))
}

/// `dt_S ∧ dt_T` for strictly increasing `S`, `T`: `None` on overlap,
/// otherwise the merged tuple and the Koszul sign of the sorting shuffle,
/// `(−1)^{#{(s,t) ∈ S×T : s > t}}`.
fn merge_dts(s: &[u8], t: &[u8]) -> Option<(Vec<u8>, bool)> {
    let mut inversions = 0usize;
    for &a in s {
        for &b in t {
            if a == b {
                return None;
            }
            if a > b {
                inversions += 1;
            }
        }
    }
    let mut out = Vec::with_capacity(s.len() + t.len());
    out.extend_from_slice(s);
    out.extend_from_slice(t);
    out.sort_unstable();
    Some((out, inversions % 2 == 1))
}

impl SimplexForm {
    /// The zero form on the `n`-simplex.
    pub fn zero(n: usize) -> Self {
        SimplexForm {
            n,
            parts: BTreeMap::new(),
        }
    }

    /// The constant function `1`.
    pub fn one(n: usize) -> Self {
        Self::constant(n, rone())
    }

    /// The constant function `c`.
    pub fn constant(n: usize, c: Rat) -> Self {
        let mut f = Self::zero(n);
        f.add_part(vec![], Poly::constant(n, c));
        f
    }

    /// Wraps a polynomial in `t_1, …, t_n` as a 0-form.
    pub fn from_poly(p: Poly) -> Self {
        let mut f = Self::zero(p.nvars());
        f.add_part(vec![], p);
        f
    }

    /// The coordinate `t_i` for `i ∈ 0..=n`; `t_0` is expanded through the
    /// relation `t_0 = 1 − t_1 − … − t_n`.
    pub fn t(n: usize, i: usize) -> Result<Self, CalcError> {
        if i > n {
            return Err(CalcError::IndexRange { index: i, n });
        }
        if i == 0 {
            let mut p = Poly::one(n);
            for j in 1..=n {
                p = p.sub(&Poly::var(n, j));
            }
            Ok(Self::from_poly(p))
        } else {
            Ok(Self::from_poly(Poly::var(n, i)))
        }
    }

    /// The 1-form `dt_i` for `i ∈ 0..=n`; `dt_0` is expanded through the
    /// relation `dt_0 = −dt_1 − … − dt_n`.
    pub fn dt(n: usize, i: usize) -> Result<Self, CalcError> {
        if i > n {
            return Err(CalcError::IndexRange { index: i, n });
        }
        let mut f = Self::zero(n);
        if i == 0 {
            for j in 1..=n {
                f.add_part(vec![j as u8], Poly::constant(n, -rone()));
            }
        } else {
            f.add_part(vec![i as u8], Poly::one(n));
        }
        Ok(f)
    }

    /// The single term `c · t^exps · dt_{i_1}∧…∧dt_{i_p}` with reduced
    /// generator indices; `dts` must be strictly increasing within `1..=n`
    /// and `exps` must list all `n` exponents.
    pub fn monomial(n: usize, exps: &[u32], dts: &[u8], c: Rat) -> Result<Self, CalcError> {
        if exps.len() != n {
            return Err(CalcError::Invalid(format!(
                "monomial on the {n}-simplex needs {n} exponents, found {}",
                exps.len()
            )));
        }
        if !dts.windows(2).all(|w| w[0] < w[1]) {
            return Err(CalcError::Invalid(format!(
                "generator tuple {dts:?} is not strictly increasing"
            )));
        }
        if let Some(&i) = dts.iter().find(|&&i| i == 0 || i as usize > n) {
            return Err(CalcError::IndexRange {
                index: i as usize,
                n,
            });
        }
        let mut f = Self::zero(n);
        let powers: Vec<(usize, u32)> = exps
            .iter()
            .enumerate()
            .map(|(idx, &e)| (idx + 1, e))
            .collect();
        f.add_part(dts.to_vec(), Poly::monomial(n, &powers, c));
        f
            .parts
            .retain(|_, p| !p.is_zero());
        Ok(f)
    }

    /// Simplex dimension `n`.
    pub fn nsimplex(&self) -> usize {
        self.n
    }

    /// `true` when no term is stored.
    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    fn add_part(&mut self, dts: Vec<u8>, p: Poly) {
        if p.is_zero() {
            return;
        }
        match self.parts.remove(&dts) {
            None => {
                self.parts.insert(dts, p);
            }
            Some(old) => {
                let sum = old.add(&p);
                if !sum.is_zero() {
                    self.parts.insert(dts, sum);
                }
            }
        }
    }

    /// Iterates over `(dt tuple, polynomial coefficient)` pairs.
    pub fn parts(&self) -> impl Iterator<Item = (&Vec<u8>, &Poly)> {
        self.parts.iter()
    }

    /// The polynomial coefficient of one `dt` tuple (zero if absent).
    pub fn coeff(&self, dts: &[u8]) -> Poly {
        self.parts
            .get(dts)
            .cloned()
            .unwrap_or_else(|| Poly::zero(self.n))
    }

    fn check_same(&self, other: &Self) -> Result<(), CalcError> {
        if self.n != other.n {
            return Err(CalcError::VarMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Sum of two forms on the same simplex.
    pub fn add(&self, other: &Self) -> Result<Self, CalcError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (dts, p) in &other.parts {
            out.add_part(dts.clone(), p.clone());
        }
        Ok(out)
    }

    /// Difference of two forms on the same simplex.
    pub fn sub(&self, other: &Self) -> Result<Self, CalcError> {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        SimplexForm {
            n: self.n,
            parts: self.parts.iter().map(|(k, p)| (k.clone(), p.neg())).collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        SimplexForm {
            n: self.n,
            parts: self
                .parts
                .iter()
                .map(|(k, p)| (k.clone(), p.scale(c)))
                .collect(),
        }
    }

    /// Wedge product. Polynomial coefficients commute; the Koszul sign comes
    /// from sorting the concatenated `dt` tuples.
    pub fn mul(&self, other: &Self) -> Result<Self, CalcError> {
        self.check_same(other)?;
        let mut out = Self::zero(self.n);
        for (s, p) in &self.parts {
            for (t, q) in &other.parts {
                if let Some((dts, negative)) = merge_dts(s, t) {
                    let pq = p.mul(q);
                    out.add_part(dts, if negative { pq.neg() } else { pq });
                }
            }
        }
        Ok(out)
    }

    /// Exterior derivative: `d(p · dt_S) = Σ_i (∂p/∂t_i) dt_i ∧ dt_S`.
    pub fn d(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (dts, p) in &self.parts {
            for i in 1..=self.n {
                let pi = p.partial(i);
                if pi.is_zero() {
                    continue;
                }
                if let Some((new_dts, negative)) = wedge_into(dts, i as u8) {
                    out.add_part(new_dts, if negative { pi.neg() } else { pi });
                }
            }
        }
        out
    }

    /// Restriction to the `k`-th codimension-1 face (`0 ≤ k ≤ n`, `n ≥ 1`):
    /// the full coordinates pull back as `t_j ↦ t_j` for `j < k`,
    /// `t_k ↦ 0`, `t_j ↦ t_{j−1}` for `j > k`, and `dt_j` follows `t_j`.
    /// These are the structure maps of the simplicial DG algebra `Ω_•`; they
    /// are algebra morphisms and commute with `d`.
    pub fn face_pullback(&self, k: usize) -> Result<Self, CalcError> {
        if self.n == 0 {
            return Err(CalcError::Invalid(
                "the 0-simplex has no faces to restrict to".into(),
            ));
        }
        if k > self.n {
            return Err(CalcError::IndexRange {
                index: k,
                n: self.n,
            });
        }
        let m = self.n - 1;
        // Images of the reduced source generators t_1,…,t_n in the reduced
        // target coordinates; the j-th entry is the image of t_j.
        let mut t_img: Vec<Poly> = Vec::with_capacity(self.n);
        for j in 1..=self.n {
            let image = match j.cmp(&k) {
                std::cmp::Ordering::Less => Poly::var(m, j),
                std::cmp::Ordering::Equal => Poly::zero(m),
                std::cmp::Ordering::Greater => {
                    if j == 1 {
                        // k = 0: t_1 ↦ t_0 = 1 − t_1 − … − t_m on the face.
                        let mut p = Poly::one(m);
                        for l in 1..=m {
                            p = p.sub(&Poly::var(m, l));
                        }
                        p
                    } else {
                        Poly::var(m, j - 1)
                    }
                }
            };
            t_img.push(image);
        }
        let dt_img: Vec<SimplexForm> = t_img
            .iter()
            .map(|p| SimplexForm::from_poly(p.clone()).d())
            .collect();
        let mut out = Self::zero(m);
        for (dts, p) in &self.parts {
            let mut term = SimplexForm::from_poly(p.substitute(&t_img));
            for &i in dts {
                term = term.mul(&dt_img[i as usize - 1])?;
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Exact integral over the simplex, by the closed formula
    /// `∫ t_1^{a_1}⋯t_n^{a_n} dt_1∧…∧dt_n = a_1!⋯a_n!/(n + Σa_i)!`.
    /// Terms of non-top form degree integrate to zero; on the 0-simplex the
    /// integral is evaluation of the constant.
    pub fn simplex_integrate(&self) -> Rat {
        let top: Vec<u8> = (1..=self.n as u8).collect();
        let Some(p) = self.parts.get(&top) else {
            return rzero();
        };
        let mut total = rzero();
        for (exps, c) in p.terms() {
            let mut num = rone();
            let mut sum = self.n;
            for &a in exps {
                num *= factorial(a as usize);
                sum += a as usize;
            }
            total += c.clone() * num / factorial(sum);
        }
        total
    }

    /// Form degree when every term agrees; `None` for zero or mixed forms.
    pub fn form_degree(&self) -> Option<usize> {
        let mut degrees = self.parts.keys().map(|dts| dts.len());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// The part of pure form degree `p`.
    pub fn form_part(&self, p: usize) -> Self {
        SimplexForm {
            n: self.n,
            parts: self
                .parts
                .iter()
                .filter(|(dts, _)| dts.len() == p)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Largest weight over all monomial terms, where the weight of
    /// `t^a · dt_S` is `Σa + |S|`; `None` for the zero form. The
    /// differential preserves weight and face restrictions never raise it,
    /// so truncation by weight yields subcomplexes.
    pub fn max_weight(&self) -> Option<u32> {
        self.parts
            .iter()
            .flat_map(|(dts, p)| {
                p.terms()
                    .map(move |(exps, _)| exps.iter().sum::<u32>() + dts.len() as u32)
            })
            .max()
    }

    /// The value of a 0-simplex form, or of any constant form; `None` when a
    /// non-constant term is present.
    pub fn constant_value(&self) -> Option<Rat> {
        if self.parts.is_empty() {
            return Some(rzero());
        }
        if self.parts.len() > 1 {
            return None;
        }
        let (dts, p) = self.parts.iter().next().expect("checked non-empty");
        if !dts.is_empty() || p.total_degree() != Some(0) {
            return None;
        }
        Some(p.coefficient(&vec![0u32; self.n]))
    }
}

impl fmt::Display for SimplexForm {
    /// Human-readable normal form, e.g. `(1 - t1)·dt2 + (3/2)·dt1∧dt2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        for (pos, (dts, p)) in self.parts.iter().enumerate() {
            if pos > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", poly_in_t(p))?;
            for (j, &i) in dts.iter().enumerate() {
                write!(f, "{}dt{}", if j == 0 { "·" } else { "∧" }, i)?;
            }
        }
        Ok(())
    }
}

/// Renders a coefficient polynomial with `t`-named variables.
fn poly_in_t(p: &Poly) -> String {
    let mut out = String::new();
    let mut first = true;
    for (exps, c) in p.terms() {
        let neg = polycalc::rat::is_negative(c);
        let mag = if neg { -c.clone() } else { c.clone() };
        out.push_str(if first {
            if neg {
                "-"
            } else {
                ""
            }
        } else if neg {
            " - "
        } else {
            " + "
        });
        first = false;
        let is_const = exps.iter().all(|&e| e == 0);
        let mut wrote = false;
        if is_const || mag != rone() {
            out.push_str(&rat_string(&mag));
            wrote = true;
        }
        for (idx, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if wrote {
                out.push('*');
            }
            wrote = true;
            out.push_str(&format!("t{}", idx + 1));
            if e > 1 {
                out.push_str(&format!("^{e}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Enumerates the monomial basis of the weight-`≤ bound` slice of `Ω_n` in
/// one form degree: all `t^a · dt_S` with `|S| = form_degree` and
/// `Σa + |S| ≤ bound`, in deterministic order.
pub fn weight_basis(n: usize, form_degree: usize, bound: u32) -> Vec<SimplexForm> {
    if form_degree > n || (form_degree as u32) > bound {
        return Vec::new();
    }
    let mut out = Vec::new();
    let poly_bound = bound - form_degree as u32;
    for dts in subsets(n, form_degree) {
        for exps in bounded_exponents(n, poly_bound) {
            out.push(
                SimplexForm::monomial(n, &exps, &dts, rone())
                    .expect("enumerated monomial data is valid"),
            );
        }
    }
    out
}

/// All strictly increasing `k`-subsets of `{1,…,n}`.
fn subsets(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: u8, n: u8, k: usize, current: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..=n {
            current.push(i);
            rec(i + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(1, n as u8, k, &mut current, &mut out);
    out
}

/// All exponent tuples of length `n` with total degree `≤ bound`, in
/// deterministic order.
fn bounded_exponents(n: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fn rec(pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos == current.len() {
            out.push(current.clone());
            return;
        }
        for e in 0..=left {
            current[pos] = e;
            rec(pos + 1, left - e, current, out);
        }
        current[pos] = 0;
    }
    rec(0, bound, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycalc::rat::rat;

    /// Independent integration oracle: plain Fubini. Starting from the
    /// monomial `t^a`, repeatedly integrate out the last remaining variable
    /// over `[0, 1 − t_1 − … − t_{k−1}]` — antiderivative, then substitute
    /// the upper limit — until a constant remains. Never touches the closed
    /// factorial formula.
    fn fubini_integral(a: &[u32]) -> Rat {
        let n = a.len();
        let powers: Vec<(usize, u32)> = a.iter().enumerate().map(|(i, &e)| (i + 1, e)).collect();
        let mut p = Poly::monomial(n, &powers, rone());
        for k in (1..=n).rev() {
            // Antiderivative in variable k.
            let mut anti = Poly::zero(n);
            for (exps, c) in p.terms() {
                let mut e = exps.clone();
                e[k - 1] += 1;
                anti.add_term(e.clone(), c.clone() / rat(e[k - 1] as i64, 1));
            }
            // Evaluate at the upper limit t_k = 1 − t_1 − … − t_{k−1};
            // the lower limit 0 contributes nothing.
            let mut upper = Poly::one(n);
            for j in 1..k {
                upper = upper.sub(&Poly::var(n, j));
            }
            let images: Vec<Poly> = (1..=n)
                .map(|j| if j == k { upper.clone() } else { Poly::var(n, j) })
                .collect();
            p = anti.substitute(&images);
        }
        p.coefficient(&vec![0u32; n])
    }

    fn top_monomial(n: usize, exps: &[u32]) -> SimplexForm {
        let dts: Vec<u8> = (1..=n as u8).collect();
        SimplexForm::monomial(n, exps, &dts, rone()).expect("valid monomial")
    }

    #[test]
    fn volume_integrals() {
        assert_eq!(SimplexForm::one(0).simplex_integrate(), rone());
        assert_eq!(top_monomial(1, &[0]).simplex_integrate(), rone());
        assert_eq!(top_monomial(1, &[1]).simplex_integrate(), rat(1, 2));
        assert_eq!(top_monomial(2, &[0, 0]).simplex_integrate(), rat(1, 2));
        assert_eq!(top_monomial(2, &[1, 1]).simplex_integrate(), rat(1, 24));
        assert_eq!(top_monomial(3, &[0, 0, 0]).simplex_integrate(), rat(1, 6));
    }

    #[test]
    fn integration_matches_iterated_fubini() {
        for n in 1..=3usize {
            for exps in bounded_exponents(n, 4) {
                assert_eq!(
                    top_monomial(n, &exps).simplex_integrate(),
                    fubini_integral(&exps),
                    "monomial exponents {exps:?} on the {n}-simplex"
                );
            }
        }
    }

    #[test]
    fn non_top_terms_integrate_to_zero() {
        let f = SimplexForm::monomial(2, &[3, 1], &[1], rat(7, 2)).unwrap();
        assert_eq!(f.simplex_integrate(), rzero());
        let g = SimplexForm::monomial(2, &[1, 0], &[], rone()).unwrap();
        assert_eq!(g.simplex_integrate(), rzero());
    }

    #[test]
    fn coordinate_relations_hold() {
        for n in 0..=3usize {
            let mut tsum = SimplexForm::zero(n);
            let mut dtsum = SimplexForm::zero(n);
            for i in 0..=n {
                tsum = tsum.add(&SimplexForm::t(n, i).unwrap()).unwrap();
                dtsum = dtsum.add(&SimplexForm::dt(n, i).unwrap()).unwrap();
            }
            assert_eq!(tsum, SimplexForm::one(n));
            assert!(dtsum.is_zero());
        }
    }

    #[test]
    fn d_of_t_is_dt() {
        for n in 1..=3usize {
            for i in 0..=n {
                assert_eq!(
                    SimplexForm::t(n, i).unwrap().d(),
                    SimplexForm::dt(n, i).unwrap()
                );
            }
        }
    }

    #[test]
    fn face_restriction_of_vanishing_coordinate() {
        // On the face where a coordinate vanishes, that coordinate restricts
        // to zero; the others renumber. On the 1-simplex the two faces are
        // evaluation points, so t_1 restricts to the constants 1 and 0.
        let t0 = SimplexForm::t(1, 0).unwrap();
        let t1 = SimplexForm::t(1, 1).unwrap();
        assert!(t0.face_pullback(0).unwrap().is_zero());
        assert_eq!(t1.face_pullback(0).unwrap(), SimplexForm::one(0));
        assert_eq!(t0.face_pullback(1).unwrap(), SimplexForm::one(0));
        assert!(t1.face_pullback(1).unwrap().is_zero());
        // On the 2-simplex, the face missing the last vertex keeps t_1.
        let u1 = SimplexForm::t(2, 1).unwrap();
        assert_eq!(u1.face_pullback(2).unwrap(), SimplexForm::t(1, 1).unwrap());
        // dt follows t through every restriction.
        for k in 0..=2usize {
            for i in 0..=2usize {
                assert_eq!(
                    SimplexForm::dt(2, i).unwrap().face_pullback(k).unwrap(),
                    SimplexForm::t(2, i).unwrap().face_pullback(k).unwrap().d(),
                    "face {k}, coordinate {i}"
                );
            }
        }
    }

    /// Every monomial of `Ω_n` with weight `≤ bound`, over all form degrees.
    fn weight_pool(n: usize, bound: u32) -> Vec<SimplexForm> {
        (0..=n)
            .flat_map(|p| weight_basis(n, p, bound))
            .collect()
    }

    #[test]
    fn simplicial_identities_for_faces() {
        // ∂*_l ∘ ∂*_{k+1} = ∂*_k ∘ ∂*_l for l ≤ k, as maps Ω_{n+1} → Ω_{n−1}.
        for n in 1..=3usize {
            for phi in weight_pool(n + 1, 3) {
                for k in 0..=n {
                    for l in 0..=k {
                        let lhs = phi.face_pullback(k + 1).unwrap().face_pullback(l).unwrap();
                        let rhs = phi.face_pullback(l).unwrap().face_pullback(k).unwrap();
                        assert_eq!(lhs, rhs, "n={n}, k={k}, l={l}, phi={phi}");
                    }
                }
            }
        }
    }

    #[test]
    fn faces_are_dg_algebra_morphisms() {
        for n in 1..=2usize {
            let pool = weight_pool(n, 2);
            for k in 0..=n {
                for phi in &pool {
                    assert_eq!(
                        phi.d().face_pullback(k).unwrap(),
                        phi.face_pullback(k).unwrap().d(),
                        "d commutes with face {k}: {phi}"
                    );
                    for psi in &pool {
                        assert_eq!(
                            phi.mul(psi).unwrap().face_pullback(k).unwrap(),
                            phi.face_pullback(k)
                                .unwrap()
                                .mul(&psi.face_pullback(k).unwrap())
                                .unwrap(),
                            "face {k} is multiplicative on {phi}, {psi}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn d_squares_to_zero_and_leibniz() {
        for n in 1..=3usize {
            let pool = weight_pool(n, 3);
            for phi in &pool {
                assert!(phi.d().d().is_zero(), "d² on {phi}");
            }
            for phi in &pool {
                for psi in &pool {
                    let lhs = phi.mul(psi).unwrap().d();
                    let sign = if phi.form_degree().unwrap() % 2 == 1 {
                        -rone()
                    } else {
                        rone()
                    };
                    let rhs = phi
                        .d()
                        .mul(psi)
                        .unwrap()
                        .add(&phi.mul(&psi.d()).unwrap().scale(&sign))
                        .unwrap();
                    assert_eq!(lhs, rhs, "Leibniz on {phi}, {psi}");
                }
            }
        }
    }

    #[test]
    fn graded_commutativity() {
        for n in 1..=3usize {
            let pool = weight_pool(n, 3);
            for phi in &pool {
                for psi in &pool {
                    let pq = phi.mul(psi).unwrap();
                    let sign = if phi.form_degree().unwrap() * psi.form_degree().unwrap() % 2 == 1
                    {
                        -rone()
                    } else {
                        rone()
                    };
                    assert_eq!(pq, psi.mul(phi).unwrap().scale(&sign));
                }
            }
        }
    }

    #[test]
    fn stokes_identity() {
        // ∫_Δⁿ dφ = Σ_k (−1)^k ∫_Δ^{n−1} ∂*_k φ for every monomial (n−1)-form.
        for n in 1..=3usize {
            for phi in weight_basis(n, n - 1, 5) {
                let lhs = phi.d().simplex_integrate();
                let mut rhs = rzero();
                let mut sign = rone();
                for k in 0..=n {
                    rhs += sign.clone() * phi.face_pullback(k).unwrap().simplex_integrate();
                    sign = -sign;
                }
                assert_eq!(lhs, rhs, "Stokes on {phi}");
            }
        }
    }

    #[test]
    fn weight_is_preserved_by_d_and_not_raised_by_faces() {
        for n in 1..=3usize {
            for phi in weight_pool(n, 4) {
                let w = phi.max_weight().unwrap();
                if let Some(dw) = phi.d().max_weight() {
                    assert_eq!(dw, w, "d changes weight of {phi}");
                }
                for k in 0..=n {
                    if let Some(fw) = phi.face_pullback(k).unwrap().max_weight() {
                        assert!(fw <= w, "face {k} raises weight of {phi}");
                    }
                }
            }
        }
    }

    #[test]
    fn display_round_trip_examples() {
        let f = SimplexForm::t(2, 0)
            .unwrap()
            .mul(&SimplexForm::dt(2, 2).unwrap())
            .unwrap();
        assert_eq!(f.to_string(), "(1 - t2 - t1)·dt2");
        let g = SimplexForm::monomial(2, &[0, 0], &[1, 2], rat(3, 2)).unwrap();
        assert_eq!(g.to_string(), "(3/2)·dt1∧dt2");
        assert_eq!(SimplexForm::zero(1).to_string(), "0");
    }

    #[test]
    fn wedge_signs() {
        let dt1 = SimplexForm::dt(2, 1).unwrap();
        let dt2 = SimplexForm::dt(2, 2).unwrap();
        let a = dt1.mul(&dt2).unwrap();
        let b = dt2.mul(&dt1).unwrap();
        assert_eq!(a, b.neg());
        assert!(dt1.mul(&dt1).unwrap().is_zero());
    }

    #[test]
    fn constant_values() {
        assert_eq!(SimplexForm::zero(0).constant_value(), Some(rzero()));
        assert_eq!(SimplexForm::constant(0, rat(5, 3)).constant_value(), Some(rat(5, 3)));
        assert_eq!(SimplexForm::constant(2, rat(5, 3)).constant_value(), Some(rat(5, 3)));
        assert_eq!(SimplexForm::t(2, 1).unwrap().constant_value(), None);
        assert_eq!(SimplexForm::dt(1, 1).unwrap().constant_value(), None);
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        assert!(SimplexForm::t(2, 3).is_err());
        assert!(SimplexForm::monomial(2, &[1], &[], rone()).is_err());
        assert!(SimplexForm::monomial(2, &[0, 0], &[2, 1], rone()).is_err());
        assert!(SimplexForm::monomial(2, &[0, 0], &[3], rone()).is_err());
        assert!(SimplexForm::zero(0).face_pullback(0).is_err());
        assert!(SimplexForm::zero(2).face_pullback(3).is_err());
        let a = SimplexForm::one(1);
        let b = SimplexForm::one(2);
        assert!(a.add(&b).is_err());
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn weight_basis_counts() {
        // 0-forms of weight ≤ 2 on the 2-simplex: 1, t1, t2, t1², t1t2, t2².
        assert_eq!(weight_basis(2, 0, 2).len(), 6);
        // 1-forms of weight ≤ 2: {1, t1, t2} × {dt1, dt2}.
        assert_eq!(weight_basis(2, 1, 2).len(), 6);
        // 2-forms of weight ≤ 2: dt1∧dt2 only.
        assert_eq!(weight_basis(2, 2, 2).len(), 1);
        // Form degree above the bound or the dimension: empty.
        assert!(weight_basis(2, 3, 5).is_empty());
        assert!(weight_basis(1, 1, 0).is_empty());
    }
}
