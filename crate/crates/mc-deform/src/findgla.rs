//! Finite-dimensional differential graded Lie algebras given by explicit
//! structure constants, fully validated at load time.
//!
//! A [`FinDGLA`] stores a named basis per degree, the differential of each
//! basis vector, and the brackets of basis pairs. Loading checks every axiom
//! exactly: graded antisymmetry (including the forced vanishing of `[x,x]`
//! in even degree), the graded Jacobi identity on all basis triples,
//! `d² = 0`, and the graded Leibniz rule for `d` on all basis pairs. A value
//! of this type is therefore a DGLA by construction, which makes it a safe
//! fixture format for the deformation and totalization machinery.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use polycalc::linalg::QMat;
use polycalc::rat::{parse_rat, rat_string, rzero, sign_pow, Rat, Zero};
use polycalc::CalcError;

use crate::carrier::Carrier;

/// An element of a [`FinDGLA`]: a homogeneous degree and sparse coordinates
/// in the named basis of that degree. Zero coordinates are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GVec {
    pub degree: i64,
    pub coords: BTreeMap<String, Rat>,
}

impl GVec {
    pub fn zero(degree: i64) -> Self {
        GVec { degree, coords: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    fn insert(&mut self, name: &str, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coords.entry(name.to_string()) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    e.insert(v);
                }
            }
        }
    }
}

impl std::fmt::Display for GVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (name, c) in &self.coords {
            let cs = rat_string(c);
            if first {
                first = false;
                if cs == "1" {
                    write!(f, "{name}")?;
                } else if cs == "-1" {
                    write!(f, "-{name}")?;
                } else {
                    write!(f, "{cs}*{name}")?;
                }
            } else if let Some(tail) = cs.strip_prefix('-') {
                if tail == "1" {
                    write!(f, " - {name}")?;
                } else {
                    write!(f, " - {tail}*{name}")?;
                }
            } else if cs == "1" {
                write!(f, " + {name}")?;
            } else {
                write!(f, " + {cs}*{name}")?;
            }
        }
        Ok(())
    }
}

/// A linear combination in serialized form: `(basis name, coefficient)`
/// pairs with the coefficient written as a rational string like `"-3/2"`.
pub type ComboSer = Vec<(String, String)>;

/// Serialization form: rationals as strings, maps as pair lists.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FinDGLASer {
    /// `(name, degree)` for every basis vector.
    pub basis: Vec<(String, i64)>,
    /// `(source, combination)`; omitted sources have `d = 0`.
    pub diff: Vec<(String, ComboSer)>,
    /// `(left, right, combination)`; omitted pairs bracket to zero, and each
    /// pair may be given in either order (the other is forced by graded
    /// antisymmetry).
    pub brackets: Vec<(String, String, ComboSer)>,
}

/// A finite-dimensional DGLA with named basis, validated on construction.
#[derive(Debug, Clone, PartialEq)]
pub struct FinDGLA {
    degrees: BTreeMap<i64, Vec<String>>,
    name_degree: BTreeMap<String, i64>,
    diff: BTreeMap<String, BTreeMap<String, Rat>>,
    bracket: BTreeMap<(String, String), BTreeMap<String, Rat>>,
}

impl FinDGLA {
    /// Builds and validates the algebra from its serialization form.
    pub fn from_ser(ser: &FinDGLASer) -> Result<Self, CalcError> {
        let mut degrees: BTreeMap<i64, Vec<String>> = BTreeMap::new();
        let mut name_degree = BTreeMap::new();
        for (name, deg) in &ser.basis {
            if name.is_empty() {
                return Err(CalcError::Invalid("empty basis name".into()));
            }
            if name_degree.insert(name.clone(), *deg).is_some() {
                return Err(CalcError::Invalid(format!("duplicate basis name {name}")));
            }
            degrees.entry(*deg).or_default().push(name.clone());
        }
        let parse_combo = |pairs: &[(String, String)],
                           expected_degree: i64,
                           what: &str|
         -> Result<BTreeMap<String, Rat>, CalcError> {
            let mut out: BTreeMap<String, Rat> = BTreeMap::new();
            for (target, coeff) in pairs {
                let deg = name_degree
                    .get(target)
                    .ok_or_else(|| CalcError::Invalid(format!("{what}: unknown name {target}")))?;
                if *deg != expected_degree {
                    return Err(CalcError::Invalid(format!(
                        "{what}: target {target} has degree {deg}, expected {expected_degree}"
                    )));
                }
                let c = parse_rat(coeff).ok_or_else(|| {
                    CalcError::Invalid(format!("{what}: bad rational {coeff:?}"))
                })?;
                if c.is_zero() {
                    continue;
                }
                if out.insert(target.clone(), c).is_some() {
                    return Err(CalcError::Invalid(format!(
                        "{what}: duplicate target {target}"
                    )));
                }
            }
            Ok(out)
        };

        let mut diff = BTreeMap::new();
        for (src, pairs) in &ser.diff {
            let deg = *name_degree
                .get(src)
                .ok_or_else(|| CalcError::Invalid(format!("diff: unknown name {src}")))?;
            let combo = parse_combo(pairs, deg + 1, &format!("d({src})"))?;
            if diff.insert(src.clone(), combo).is_some() {
                return Err(CalcError::Invalid(format!("diff: duplicate source {src}")));
            }
        }

        let mut bracket: BTreeMap<(String, String), BTreeMap<String, Rat>> = BTreeMap::new();
        for (l, r, pairs) in &ser.brackets {
            let dl = *name_degree
                .get(l)
                .ok_or_else(|| CalcError::Invalid(format!("bracket: unknown name {l}")))?;
            let dr = *name_degree
                .get(r)
                .ok_or_else(|| CalcError::Invalid(format!("bracket: unknown name {r}")))?;
            let combo = parse_combo(pairs, dl + dr, &format!("[{l},{r}]"))?;
            if bracket.insert((l.clone(), r.clone()), combo).is_some() {
                return Err(CalcError::Invalid(format!(
                    "bracket: duplicate pair [{l},{r}]"
                )));
            }
        }

        // Complete by graded antisymmetry [b,a] = −(−1)^{|a||b|}[a,b] and
        // check consistency where both orders were given.
        let given: Vec<(String, String)> = bracket.keys().cloned().collect();
        for (l, r) in given {
            let dl = name_degree[&l];
            let dr = name_degree[&r];
            if l == r && dl % 2 == 0 && !bracket[&(l.clone(), r.clone())].is_empty() {
                return Err(CalcError::Invalid(format!(
                    "[{l},{l}] must vanish in even degree"
                )));
            }
            let s = sign_pow(dl * dr + 1); // −(−1)^{|l||r|}
            let flipped: BTreeMap<String, Rat> = bracket[&(l.clone(), r.clone())]
                .iter()
                .map(|(k, v)| (k.clone(), v.clone() * s.clone()))
                .collect();
            match bracket.get(&(r.clone(), l.clone())) {
                None => {
                    bracket.insert((r.clone(), l.clone()), flipped);
                }
                Some(existing) => {
                    if *existing != flipped {
                        return Err(CalcError::Invalid(format!(
                            "brackets [{l},{r}] and [{r},{l}] violate graded antisymmetry"
                        )));
                    }
                }
            }
        }

        let alg = FinDGLA { degrees, name_degree, diff, bracket };
        alg.validate()?;
        Ok(alg)
    }

    /// The serialization form (diff and brackets in canonical name order,
    /// with antisymmetry-redundant bracket entries retained).
    pub fn to_ser(&self) -> FinDGLASer {
        let basis = self
            .degrees
            .iter()
            .flat_map(|(d, names)| names.iter().map(move |n| (n.clone(), *d)))
            .collect();
        let ser_combo = |m: &BTreeMap<String, Rat>| -> Vec<(String, String)> {
            m.iter().map(|(k, v)| (k.clone(), rat_string(v))).collect()
        };
        let diff = self
            .diff
            .iter()
            .filter(|(_, m)| !m.is_empty())
            .map(|(s, m)| (s.clone(), ser_combo(m)))
            .collect();
        let brackets = self
            .bracket
            .iter()
            .filter(|(_, m)| !m.is_empty())
            .map(|((l, r), m)| (l.clone(), r.clone(), ser_combo(m)))
            .collect();
        FinDGLASer { basis, diff, brackets }
    }

    fn validate(&self) -> Result<(), CalcError> {
        let names: Vec<&String> = self.name_degree.keys().collect();
        // [x,x] = 0 is forced in even degree.
        for &n in &names {
            if self.name_degree[n] % 2 == 0 {
                if let Some(m) = self.bracket.get(&(n.clone(), n.clone())) {
                    if !m.is_empty() {
                        return Err(CalcError::Invalid(format!(
                            "[{n},{n}] must vanish in even degree"
                        )));
                    }
                }
            }
        }
        // d² = 0.
        for &n in &names {
            let e = self.basis_elem(n)?;
            let dde = self.diff_elt(&self.diff_elt(&e)?)?;
            if !dde.is_zero() {
                return Err(CalcError::Invalid(format!("d²({n}) = {dde} ≠ 0")));
            }
        }
        // Leibniz: d[a,b] = [da,b] + (−1)^{|a|}[a,db].
        for &a in &names {
            for &b in &names {
                let ea = self.basis_elem(a)?;
                let eb = self.basis_elem(b)?;
                let lhs = self.diff_elt(&self.bracket_elt(&ea, &eb)?)?;
                let rhs = self.add_elt(
                    &self.bracket_elt(&self.diff_elt(&ea)?, &eb)?,
                    &self.scale_elt(
                        &sign_pow(self.name_degree[a]),
                        &self.bracket_elt(&ea, &self.diff_elt(&eb)?)?,
                    ),
                )?;
                if lhs != rhs {
                    return Err(CalcError::Invalid(format!(
                        "Leibniz fails on ({a},{b}): d[a,b] = {lhs}, expected {rhs}"
                    )));
                }
            }
        }
        // Graded Jacobi: [a,[b,c]] = [[a,b],c] + (−1)^{|a||b|}[b,[a,c]].
        for &a in &names {
            for &b in &names {
                for &c in &names {
                    let (ea, eb, ec) =
                        (self.basis_elem(a)?, self.basis_elem(b)?, self.basis_elem(c)?);
                    let lhs = self.bracket_elt(&ea, &self.bracket_elt(&eb, &ec)?)?;
                    let rhs = self.add_elt(
                        &self.bracket_elt(&self.bracket_elt(&ea, &eb)?, &ec)?,
                        &self.scale_elt(
                            &sign_pow(self.name_degree[a] * self.name_degree[b]),
                            &self.bracket_elt(&eb, &self.bracket_elt(&ea, &ec)?)?,
                        ),
                    )?;
                    if lhs != rhs {
                        return Err(CalcError::Invalid(format!(
                            "Jacobi fails on ({a},{b},{c}): got {lhs}, expected {rhs}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.degrees.keys().copied()
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.degrees.get(&degree).map_or(0, |v| v.len())
    }

    pub fn basis_names(&self, degree: i64) -> &[String] {
        self.degrees.get(&degree).map_or(&[], |v| v.as_slice())
    }

    pub fn degree_of(&self, name: &str) -> Option<i64> {
        self.name_degree.get(name).copied()
    }

    /// The basis vector with the given name.
    pub fn basis_elem(&self, name: &str) -> Result<GVec, CalcError> {
        let deg = self
            .name_degree
            .get(name)
            .ok_or_else(|| CalcError::Invalid(format!("unknown basis name {name}")))?;
        let mut v = GVec::zero(*deg);
        v.insert(name, polycalc::rat::rone());
        Ok(v)
    }

    /// Dense coordinates of a homogeneous element in the basis order of its
    /// degree.
    pub fn coords_vec(&self, e: &GVec) -> Vec<Rat> {
        self.basis_names(e.degree)
            .iter()
            .map(|n| e.coords.get(n).cloned().unwrap_or_else(rzero))
            .collect()
    }

    pub fn from_coords(&self, degree: i64, coords: &[Rat]) -> Result<GVec, CalcError> {
        let names = self.basis_names(degree);
        if names.len() != coords.len() {
            return Err(CalcError::Invalid(format!(
                "coordinate length {} does not match dim {} in degree {degree}",
                coords.len(),
                names.len()
            )));
        }
        let mut v = GVec::zero(degree);
        for (n, c) in names.iter().zip(coords) {
            v.insert(n, c.clone());
        }
        Ok(v)
    }

    /// The matrix of `d` from `degree` to `degree + 1` (rows indexed by the
    /// target basis, columns by the source basis).
    pub fn d_matrix(&self, degree: i64) -> QMat {
        let src = self.basis_names(degree);
        let tgt = self.basis_names(degree + 1);
        let mut m = QMat::zeros(tgt.len(), src.len());
        for (j, s) in src.iter().enumerate() {
            if let Some(combo) = self.diff.get(s) {
                for (t, c) in combo {
                    let i = tgt.iter().position(|n| n == t).expect("validated target");
                    m.set(i, j, c.clone());
                }
            }
        }
        m
    }

    fn check_elt(&self, e: &GVec) -> Result<(), CalcError> {
        for name in e.coords.keys() {
            match self.name_degree.get(name) {
                None => {
                    return Err(CalcError::Invalid(format!("unknown basis name {name}")));
                }
                Some(d) if *d != e.degree => {
                    return Err(CalcError::Invalid(format!(
                        "basis vector {name} has degree {d}, element claims {}",
                        e.degree
                    )));
                }
                _ => {}
            }
        }
        Ok(())
    }

    fn add_elt(&self, a: &GVec, b: &GVec) -> Result<GVec, CalcError> {
        if a.is_zero() {
            return Ok(b.clone());
        }
        if b.is_zero() {
            return Ok(a.clone());
        }
        if a.degree != b.degree {
            return Err(CalcError::Invalid(format!(
                "cannot add degrees {} and {}",
                a.degree, b.degree
            )));
        }
        let mut out = a.clone();
        for (n, c) in &b.coords {
            out.insert(n, c.clone());
        }
        Ok(out)
    }

    fn scale_elt(&self, c: &Rat, a: &GVec) -> GVec {
        if c.is_zero() {
            return GVec::zero(a.degree);
        }
        GVec {
            degree: a.degree,
            coords: a
                .coords
                .iter()
                .map(|(n, v)| (n.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    fn bracket_elt(&self, a: &GVec, b: &GVec) -> Result<GVec, CalcError> {
        self.check_elt(a)?;
        self.check_elt(b)?;
        let mut out = GVec::zero(a.degree + b.degree);
        for (na, ca) in &a.coords {
            for (nb, cb) in &b.coords {
                if let Some(combo) = self.bracket.get(&(na.clone(), nb.clone())) {
                    let s = ca.clone() * cb.clone();
                    for (t, c) in combo {
                        out.insert(t, c.clone() * s.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    fn diff_elt(&self, a: &GVec) -> Result<GVec, CalcError> {
        self.check_elt(a)?;
        let mut out = GVec::zero(a.degree + 1);
        for (n, c) in &a.coords {
            if let Some(combo) = self.diff.get(n) {
                for (t, v) in combo {
                    out.insert(t, v.clone() * c.clone());
                }
            }
        }
        Ok(out)
    }
}

impl Carrier for FinDGLA {
    type Elt = GVec;

    fn zero(&self, degree: i64) -> GVec {
        GVec::zero(degree)
    }

    fn is_zero(&self, e: &GVec) -> bool {
        e.is_zero()
    }

    fn check(&self, e: &GVec, degree: i64) -> Result<(), CalcError> {
        self.check_elt(e)?;
        if !e.is_zero() && e.degree != degree {
            return Err(CalcError::Invalid(format!(
                "expected degree {degree}, element has degree {}",
                e.degree
            )));
        }
        Ok(())
    }

    fn add(&self, a: &GVec, b: &GVec) -> Result<GVec, CalcError> {
        self.add_elt(a, b)
    }

    fn scale(&self, c: &Rat, a: &GVec) -> GVec {
        self.scale_elt(c, a)
    }

    fn bracket(&self, a: &GVec, b: &GVec) -> Result<GVec, CalcError> {
        self.bracket_elt(a, b)
    }

    fn diff(&self, a: &GVec) -> Result<GVec, CalcError> {
        self.diff_elt(a)
    }
}

/// A three-dimensional test algebra: `e` in degree 0 and `f`, `g` in
/// degree 1, with `d(e) = f` and `[e,f] = g` the only nonzero structure.
#[cfg(test)]
pub(crate) fn heisenberg_like() -> FinDGLA {
    // e (deg 0), f (deg 1), g (deg 1): d(e) = f, [e,f] = g, all else zero.
    FinDGLA::from_ser(&FinDGLASer {
        basis: vec![
            ("e".into(), 0),
            ("f".into(), 1),
            ("g".into(), 1),
        ],
        diff: vec![("e".into(), vec![("f".into(), "1".into())])],
        brackets: vec![("e".into(), "f".into(), vec![("g".into(), "1".into())])],
    })
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycalc::rat::{rat, rint};

    #[test]
    fn loads_and_validates() {
        let alg = heisenberg_like();
        assert_eq!(alg.dim(0), 1);
        assert_eq!(alg.dim(1), 2);
        let e = alg.basis_elem("e").unwrap();
        let f = alg.basis_elem("f").unwrap();
        let g = alg.basis_elem("g").unwrap();
        assert_eq!(alg.diff(&e).unwrap(), f);
        assert_eq!(alg.bracket(&e, &f).unwrap(), g);
        // Antisymmetry was auto-completed: [f,e] = −(−1)^{1·0}[e,f] = −g.
        assert_eq!(alg.bracket(&f, &e).unwrap(), alg.scale(&rint(-1), &g));
    }

    #[test]
    fn rejects_broken_leibniz() {
        // With d(g) = h the derivation rule on (e,f) demands
        // d[e,f] = d(g) = h to equal [de,f] + [e,df] = [f,f] = 0.
        let bad = FinDGLASer {
            basis: vec![
                ("e".into(), 0),
                ("f".into(), 1),
                ("g".into(), 1),
                ("h".into(), 2),
            ],
            diff: vec![
                ("e".into(), vec![("f".into(), "1".into())]),
                ("g".into(), vec![("h".into(), "1".into())]),
            ],
            brackets: vec![("e".into(), "f".into(), vec![("g".into(), "1".into())])],
        };
        let err = FinDGLA::from_ser(&bad).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("Leibniz"), "unexpected error: {msg}");
    }

    #[test]
    fn rejects_broken_jacobi() {
        // For odd u the graded Jacobi identity forces [u,[u,u]] = 0, but
        // [u,[u,u]] = 2[u,w] = 2t here.
        let bad = FinDGLASer {
            basis: vec![("u".into(), 1), ("w".into(), 2), ("t".into(), 3)],
            diff: vec![],
            brackets: vec![
                ("u".into(), "u".into(), vec![("w".into(), "2".into())]),
                ("u".into(), "w".into(), vec![("t".into(), "1".into())]),
            ],
        };
        let err = FinDGLA::from_ser(&bad).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("Jacobi"), "unexpected error: {msg}");
    }

    #[test]
    fn rejects_even_degree_self_bracket() {
        let bad = FinDGLASer {
            basis: vec![("e".into(), 0)],
            diff: vec![],
            brackets: vec![("e".into(), "e".into(), vec![("e".into(), "1".into())])],
        };
        let err = FinDGLA::from_ser(&bad).unwrap_err();
        assert!(err.to_string().contains("even degree"), "{err}");
    }

    #[test]
    fn rejects_broken_antisymmetry() {
        let bad = FinDGLASer {
            basis: vec![("e".into(), 0), ("f".into(), 1), ("g".into(), 1)],
            diff: vec![("e".into(), vec![("f".into(), "1".into())])],
            brackets: vec![
                ("e".into(), "f".into(), vec![("g".into(), "1".into())]),
                ("f".into(), "e".into(), vec![("g".into(), "1".into())]),
            ],
        };
        let err = FinDGLA::from_ser(&bad).unwrap_err();
        assert!(err.to_string().contains("antisymmetry"), "{err}");
    }

    #[test]
    fn serialization_round_trip() {
        let alg = heisenberg_like();
        let ser = alg.to_ser();
        let json = serde_json::to_string_pretty(&ser).unwrap();
        let back: FinDGLASer = serde_json::from_str(&json).unwrap();
        let alg2 = FinDGLA::from_ser(&back).unwrap();
        assert_eq!(alg, alg2);
    }

    #[test]
    fn coordinate_round_trip_and_d_matrix() {
        let alg = heisenberg_like();
        let v = alg
            .from_coords(1, &[rat(1, 2), rint(-3)])
            .unwrap();
        assert_eq!(alg.coords_vec(&v), vec![rat(1, 2), rint(-3)]);
        let d0 = alg.d_matrix(0);
        assert_eq!(d0.nrows(), 2);
        assert_eq!(d0.ncols(), 1);
        // d(e) = f = first basis vector of degree 1.
        assert_eq!(*d0.get(0, 0), rint(1));
        assert_eq!(*d0.get(1, 0), rint(0));
        assert!(alg.d_matrix(1).is_zero());
    }
}
