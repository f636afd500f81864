//! Sparse multivariate polynomials over the rationals.
//!
//! A `Poly` on `nvars` variables stores its nonzero terms in a `BTreeMap`
//! from exponent vectors (length `nvars`) to rational coefficients, so the
//! term order — and therefore printing and serialization — is canonical.
//! Variables are 1-based everywhere in the public API, matching the textual
//! grammar `z1, z2, …`.

use std::collections::BTreeMap;
use std::fmt;

use num::traits::Zero;

use crate::rat::{rat_string, rint, rone, Rat};

/// Sparse polynomial in `nvars` variables with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Poly {
    /// The zero polynomial on `nvars` variables.
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `c`.
    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The constant polynomial `1`.
    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, rone())
    }

    /// The coordinate polynomial `z_i` (1-based). Panics if `i` is out of range.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= nvars, "variable index {i} out of 1..={nvars}");
        let mut exps = vec![0u32; nvars];
        exps[i - 1] = 1;
        let mut p = Poly::zero(nvars);
        p.terms.insert(exps, rone());
        p
    }

    /// The monomial `c * prod z_i^{e_i}` from 1-based `(var, exponent)` pairs.
    pub fn monomial(nvars: usize, powers: &[(usize, u32)], c: Rat) -> Self {
        let mut exps = vec![0u32; nvars];
        for &(i, e) in powers {
            assert!(i >= 1 && i <= nvars, "variable index {i} out of 1..={nvars}");
            exps[i - 1] += e;
        }
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Number of chart variables.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// True if this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over `(exponent vector, coefficient)` pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Adds `c * z^exps` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        assert_eq!(exps.len(), self.nvars, "exponent vector length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn assert_same_vars(&self, other: &Poly) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials on different variable counts"
        );
    }

    /// Sum of two polynomials on the same chart.
    pub fn add(&self, other: &Poly) -> Poly {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    /// Difference of two polynomials on the same chart.
    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    /// Product of two polynomials on the same chart.
    pub fn mul(&self, other: &Poly) -> Poly {
        self.assert_same_vars(other);
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Scalar multiple `c * self`.
    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = Poly::zero(self.nvars);
        for (e, k) in &self.terms {
            out.terms.insert(e.clone(), k.clone() * c.clone());
        }
        out
    }

    /// Partial derivative with respect to `z_i` (1-based).
    pub fn partial(&self, i: usize) -> Poly {
        assert!(
            i >= 1 && i <= self.nvars,
            "variable index {i} out of 1..={}",
            self.nvars
        );
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[i - 1];
            if k == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[i - 1] = k - 1;
            out.add_term(exps, c.clone() * rint(k as i64));
        }
        out
    }

    /// Substitutes `z_i ↦ images[i-1]`; `images` must have length `nvars` and
    /// all images must share a common variable count, which becomes the
    /// variable count of the result.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars, "need one image per variable");
        let out_vars = images
            .first()
            .map(|p| p.nvars)
            .unwrap_or(0);
        for img in images {
            assert_eq!(img.nvars, out_vars, "substitution images on mixed charts");
        }
        let mut out = Poly::zero(out_vars);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(out_vars, c.clone());
            for (idx, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term = term.mul(&images[idx]);
                }
            }
            out = out.add(&term);
        }
        out
    }

    /// Sets the listed (1-based) variables to zero.
    pub fn set_vars_to_zero(&self, vars: &[usize]) -> Poly {
        let mut out = Poly::zero(self.nvars);
        'terms: for (e, c) in &self.terms {
            for &v in vars {
                assert!(v >= 1 && v <= self.nvars);
                if e[v - 1] > 0 {
                    continue 'terms;
                }
            }
            out.terms.insert(e.clone(), c.clone());
        }
        out
    }

    /// Total degree of the polynomial, or `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// True if all terms have the same total degree (vacuously true for zero).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Splits into homogeneous parts, keyed by total degree.
    pub fn degree_split(&self) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = e.iter().sum::<u32>();
            out.entry(d)
                .or_insert_with(|| Poly::zero(self.nvars))
                .terms
                .insert(e.clone(), c.clone());
        }
        out
    }

    /// The homogeneous part of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() == d {
                out.terms.insert(e.clone(), c.clone());
            }
        }
        out
    }

    /// True if every term is divisible by some `z_i` with `i <= p`, i.e. the
    /// polynomial lies in the monomial ideal `(z_1, …, z_p)`.
    pub fn in_coordinate_ideal(&self, p: usize) -> bool {
        self.terms
            .keys()
            .all(|e| e.iter().take(p).any(|&k| k > 0))
    }

    /// True if no term involves any of `z_1, …, z_p`.
    pub fn independent_of_first(&self, p: usize) -> bool {
        self.terms.keys().all(|e| e.iter().take(p).all(|&k| k == 0))
    }

    /// Coefficient of the exponent vector `exps` (zero if absent).
    pub fn coefficient(&self, exps: &[u32]) -> Rat {
        self.terms
            .get(exps)
            .cloned()
            .unwrap_or_else(num::traits::Zero::zero)
    }

    /// Evaluates at a rational point (for spot checks in tests).
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc: Rat = num::traits::Zero::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (idx, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term *= point[idx].clone();
                }
            }
            acc += term;
        }
        acc
    }
}

/// Prints one monomial in the textual grammar, without a leading sign; the
/// coefficient is omitted when it is `1` and the monomial is non-constant.
fn write_term(f: &mut fmt::Formatter<'_>, exps: &[u32], coeff: &Rat) -> fmt::Result {
    let is_const = exps.iter().all(|&e| e == 0);
    let coeff_is_one = *coeff == rone();
    let mut wrote = false;
    if is_const || !coeff_is_one {
        write!(f, "{}", rat_string(coeff))?;
        wrote = true;
    }
    for (idx, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if wrote {
            write!(f, "*")?;
        }
        wrote = true;
        write!(f, "z{}", idx + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    /// Canonical textual form: terms in the canonical exponent order joined
    /// by `+`/`-`, e.g. `3/2*z1^2*z2 - z3 + 1`. `parse_poly` accepts every
    /// string produced here and returns an equal polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (pos, (e, c)) in self.terms.iter().enumerate() {
            let (sep, c_abs);
            if crate::rat::is_negative(c) {
                sep = if pos == 0 { "-" } else { " - " };
                c_abs = -c.clone();
            } else {
                sep = if pos == 0 { "" } else { " + " };
                c_abs = c.clone();
            }
            write!(f, "{sep}")?;
            write_term(f, e, &c_abs)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn z(i: usize) -> Poly {
        Poly::var(3, i)
    }

    #[test]
    fn arithmetic_basics() {
        let p = z(1).mul(&z(2)).add(&Poly::constant(3, rat(1, 2)));
        let q = p.sub(&p);
        assert!(q.is_zero());
        assert_eq!(p.scale(&rint(2)).coefficient(&[1, 1, 0]), rint(2));
    }

    #[test]
    fn partial_derivative() {
        // d/dz1 (z1^2 z2 + z3) = 2 z1 z2
        let p = Poly::monomial(3, &[(1, 2), (2, 1)], rone()).add(&z(3));
        let dp = p.partial(1);
        assert_eq!(dp, Poly::monomial(3, &[(1, 1), (2, 1)], rint(2)));
        assert!(p.partial(3).sub(&Poly::one(3)).is_zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Poly::zero(2).to_string(), "0");
        assert_eq!(Poly::one(2).to_string(), "1");
        let p = Poly::monomial(3, &[(1, 2), (2, 1)], rat(3, 2))
            .sub(&z(3))
            .add(&Poly::one(3));
        assert_eq!(p.to_string(), "1 - z3 + 3/2*z1^2*z2");
        assert_eq!(z(2).neg().to_string(), "-z2");
    }

    #[test]
    fn homogeneity_and_ideal_membership() {
        let p = z(1).mul(&z(2)).add(&z(3).mul(&z(3)));
        assert!(p.is_homogeneous());
        assert_eq!(p.total_degree(), Some(2));
        assert!(!p.in_coordinate_ideal(2));
        assert!(z(1).mul(&z(3)).in_coordinate_ideal(1));
        assert!(z(3).independent_of_first(2));
        let split = p.add(&Poly::one(3)).degree_split();
        assert_eq!(split.len(), 2);
        assert_eq!(split[&0], Poly::one(3));
    }

    #[test]
    fn substitution() {
        // z1 z2 under z1 -> t1, z2 -> 1 - t1 (into a 1-variable chart)
        let p = Poly::var(2, 1).mul(&Poly::var(2, 2));
        let t1 = Poly::var(1, 1);
        let img = p.substitute(&[t1.clone(), Poly::one(1).sub(&t1)]);
        let expected = t1.sub(&t1.mul(&t1));
        assert_eq!(img, expected);
    }

    #[test]
    fn eval_spot_check() {
        let p = Poly::monomial(2, &[(1, 2)], rone()).add(&Poly::var(2, 2));
        assert_eq!(p.eval(&[rat(1, 2), rint(3)]), rat(13, 4));
    }
}
