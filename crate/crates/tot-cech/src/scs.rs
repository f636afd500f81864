//! Semicosimplicial diagrams of finite-dimensional differential graded Lie
//! algebras, and levelwise morphisms between them.
//!
//! A diagram holds levels `V_0, V_1, …, V_m` with `i + 2` face maps
//! `∂_0, …, ∂_{i+1} : V_i → V_{i+1}` between consecutive levels. Loading a
//! diagram validates everything once and for all:
//!
//! * each level is a valid finite-dimensional DGLA (delegated to
//!   [`FinDGLA::from_ser`]),
//! * each face is a degree-preserving DGLA morphism — it commutes with the
//!   differentials and preserves brackets on every basis pair,
//! * the semicosimplicial identities `∂_{k+1} ∂_l = ∂_l ∂_k` hold for all
//!   `l ≤ k` wherever the composites exist.
//!
//! [`ScsMorphism`] is a levelwise map between two diagrams of the same
//! shape, validated to preserve degrees, differentials, brackets, and to
//! commute with every face. Short exact sequences of diagrams are shipped as
//! [`SesSer`] triples and checked rank-by-rank downstream.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use mc_deform::findgla::{ComboSer, FinDGLASer};
use mc_deform::{Carrier, FinDGLA, GVec};
use polycalc::linalg::QMat;
use polycalc::rat::parse_rat;
use polycalc::rat::Zero;
use polycalc::CalcError;

/// One linear map in serialized form: `(source basis name, image
/// combination)` pairs; omitted sources map to zero.
pub type FaceSer = Vec<(String, ComboSer)>;

/// Serialization form of a semicosimplicial diagram: `levels[i]` is the
/// `i`-th DGLA and `faces[i]` lists the `i + 2` face maps from level `i` to
/// level `i + 1`, each as a [`FaceSer`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScsDGLASer {
    pub levels: Vec<FinDGLASer>,
    pub faces: Vec<Vec<FaceSer>>,
}

/// A levelwise morphism of diagrams in serialized form: one [`FaceSer`] per
/// level.
pub type MorphismSer = Vec<FaceSer>;

/// A short exact sequence of diagrams `0 → sub → mid → quot → 0` in
/// serialized form, with the inclusion and the projection as levelwise
/// morphisms.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SesSer {
    pub sub: ScsDGLASer,
    pub mid: ScsDGLASer,
    pub quot: ScsDGLASer,
    pub inject: MorphismSer,
    pub project: MorphismSer,
}

/// A validated semicosimplicial diagram of finite-dimensional DGLAs.
#[derive(Debug, Clone)]
pub struct ScsDGLA {
    levels: Vec<FinDGLA>,
    faces: Vec<Vec<BTreeMap<String, GVec>>>,
}

/// A parsed and validated short exact sequence of diagrams. Validation here
/// covers structure (three diagrams, two levelwise morphisms commuting with
/// the faces); levelwise exactness of the sequence itself is a property the
/// rank checks in [`crate::verify::check_ses_exactness`] establish.
#[derive(Debug, Clone)]
pub struct SesData {
    pub sub: ScsDGLA,
    pub mid: ScsDGLA,
    pub quot: ScsDGLA,
    pub inject: ScsMorphism,
    pub project: ScsMorphism,
}

impl SesData {
    /// Parses all five components of a serialized sequence.
    pub fn from_ser(ses: &SesSer) -> Result<Self, CalcError> {
        let sub = ScsDGLA::from_ser(&ses.sub)?;
        let mid = ScsDGLA::from_ser(&ses.mid)?;
        let quot = ScsDGLA::from_ser(&ses.quot)?;
        let inject = ScsMorphism::from_ser(&sub, &mid, &ses.inject)?;
        let project = ScsMorphism::from_ser(&mid, &quot, &ses.project)?;
        Ok(SesData {
            sub,
            mid,
            quot,
            inject,
            project,
        })
    }
}

/// Parses one serialized linear map whose source basis lives in `src` and
/// whose images live in `dst`, checking degree preservation.
pub(crate) fn parse_linear_map(
    src: &FinDGLA,
    dst: &FinDGLA,
    ser: &FaceSer,
    what: &str,
) -> Result<BTreeMap<String, GVec>, CalcError> {
    let mut out: BTreeMap<String, GVec> = BTreeMap::new();
    for (name, combo) in ser {
        let degree = src
            .degree_of(name)
            .ok_or_else(|| CalcError::Invalid(format!("{what}: unknown source name {name}")))?;
        let mut image = GVec::zero(degree);
        for (target, coeff) in combo {
            let tdeg = dst.degree_of(target).ok_or_else(|| {
                CalcError::Invalid(format!("{what}: unknown image name {target}"))
            })?;
            if tdeg != degree {
                return Err(CalcError::Invalid(format!(
                    "{what}: image term {target} has degree {tdeg}, source {name} has degree {degree}"
                )));
            }
            let c = parse_rat(coeff)
                .ok_or_else(|| CalcError::Invalid(format!("{what}: bad rational {coeff:?}")))?;
            if c.is_zero() {
                continue;
            }
            if image.coords.insert(target.clone(), c).is_some() {
                return Err(CalcError::Invalid(format!(
                    "{what}: duplicate image term {target} for source {name}"
                )));
            }
        }
        if out.insert(name.clone(), image).is_some() {
            return Err(CalcError::Invalid(format!(
                "{what}: duplicate source name {name}"
            )));
        }
    }
    Ok(out)
}

/// Applies a stored linear map to a homogeneous element; missing source
/// names map to zero.
pub(crate) fn apply_linear(
    map: &BTreeMap<String, GVec>,
    v: &GVec,
    dst: &FinDGLA,
) -> Result<GVec, CalcError> {
    let mut out = GVec::zero(v.degree);
    for (name, c) in &v.coords {
        if let Some(image) = map.get(name) {
            out = dst.add(&out, &dst.scale(c, image))?;
        }
    }
    Ok(out)
}

/// Serializes a stored linear map back to pair lists in canonical order,
/// omitting zero images.
pub(crate) fn linear_map_to_ser(map: &BTreeMap<String, GVec>) -> FaceSer {
    map.iter()
        .filter(|(_, image)| !image.is_zero())
        .map(|(name, image)| {
            let combo: ComboSer = image
                .coords
                .iter()
                .map(|(t, c)| (t.clone(), polycalc::rat::rat_string(c)))
                .collect();
            (name.clone(), combo)
        })
        .collect()
}

/// Checks that a parsed linear map `f : src_alg → dst_alg` is a DGLA
/// morphism: degree-preserving (already enforced by the parser), commuting
/// with the differentials, and preserving brackets on every basis pair.
pub(crate) fn check_dgla_morphism(
    src_alg: &FinDGLA,
    dst_alg: &FinDGLA,
    map: &BTreeMap<String, GVec>,
    what: &str,
) -> Result<(), CalcError> {
    let degrees: Vec<i64> = src_alg.degrees().collect();
    for &deg in &degrees {
        for name in src_alg.basis_names(deg) {
            let x = src_alg.basis_elem(name)?;
            let fx = apply_linear(map, &x, dst_alg)?;
            let lhs = apply_linear(map, &src_alg.diff(&x)?, dst_alg)?;
            let rhs = dst_alg.diff(&fx)?;
            if lhs != rhs {
                return Err(CalcError::Invalid(format!(
                    "{what} does not commute with the differential on {name}"
                )));
            }
        }
    }
    for &dl in &degrees {
        for &dr in &degrees {
            for l in src_alg.basis_names(dl) {
                for r in src_alg.basis_names(dr) {
                    let x = src_alg.basis_elem(l)?;
                    let y = src_alg.basis_elem(r)?;
                    let lhs = apply_linear(map, &src_alg.bracket(&x, &y)?, dst_alg)?;
                    let rhs = dst_alg.bracket(
                        &apply_linear(map, &x, dst_alg)?,
                        &apply_linear(map, &y, dst_alg)?,
                    )?;
                    if lhs != rhs {
                        return Err(CalcError::Invalid(format!(
                            "{what} does not preserve the bracket [{l},{r}]"
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

impl ScsDGLA {
    /// Builds and validates a diagram from its serialization form.
    pub fn from_ser(ser: &ScsDGLASer) -> Result<Self, CalcError> {
        if ser.levels.is_empty() {
            return Err(CalcError::Invalid("diagram needs at least one level".into()));
        }
        let levels: Vec<FinDGLA> = ser
            .levels
            .iter()
            .map(FinDGLA::from_ser)
            .collect::<Result<_, _>>()?;
        if ser.faces.len() != levels.len() - 1 {
            return Err(CalcError::Invalid(format!(
                "{} levels need {} face families, found {}",
                levels.len(),
                levels.len() - 1,
                ser.faces.len()
            )));
        }
        let mut faces = Vec::with_capacity(ser.faces.len());
        for (i, family) in ser.faces.iter().enumerate() {
            if family.len() != i + 2 {
                return Err(CalcError::Invalid(format!(
                    "level {i} needs {} face maps, found {}",
                    i + 2,
                    family.len()
                )));
            }
            let mut parsed = Vec::with_capacity(family.len());
            for (k, face_ser) in family.iter().enumerate() {
                let what = format!("face {k} at level {i}");
                let map = parse_linear_map(&levels[i], &levels[i + 1], face_ser, &what)?;
                check_dgla_morphism(&levels[i], &levels[i + 1], &map, &what)?;
                parsed.push(map);
            }
            faces.push(parsed);
        }
        let diagram = ScsDGLA { levels, faces };
        diagram.check_semicosimplicial_identities()?;
        Ok(diagram)
    }

    /// `∂_{k+1} ∂_l = ∂_l ∂_k` for `l ≤ k` on every basis element, wherever
    /// the composites into level `i + 2` exist.
    fn check_semicosimplicial_identities(&self) -> Result<(), CalcError> {
        for i in 0..self.faces.len().saturating_sub(1) {
            for k in 0..=i + 1 {
                for l in 0..=k {
                    for deg in self.levels[i].degrees().collect::<Vec<_>>() {
                        for name in self.levels[i].basis_names(deg) {
                            let x = self.levels[i].basis_elem(name)?;
                            let lhs =
                                self.face_apply(i + 1, k + 1, &self.face_apply(i, l, &x)?)?;
                            let rhs = self.face_apply(i + 1, l, &self.face_apply(i, k, &x)?)?;
                            if lhs != rhs {
                                return Err(CalcError::Invalid(format!(
                                    "semicosimplicial identity fails at level {i} on {name}: \
                                     face {} after face {l} differs from face {l} after face {k}",
                                    k + 1
                                )));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The serialization form, with faces in canonical order and zero images
    /// omitted.
    pub fn to_ser(&self) -> ScsDGLASer {
        ScsDGLASer {
            levels: self.levels.iter().map(FinDGLA::to_ser).collect(),
            faces: self
                .faces
                .iter()
                .map(|family| family.iter().map(linear_map_to_ser).collect())
                .collect(),
        }
    }

    /// Number of levels.
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    /// `true` for a diagram with no levels — never produced by the
    /// constructor, present for completeness.
    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// The DGLA at one level.
    pub fn level(&self, i: usize) -> Result<&FinDGLA, CalcError> {
        self.levels.get(i).ok_or(CalcError::IndexRange {
            index: i,
            n: self.levels.len() - 1,
        })
    }

    /// Applies the face map `∂_k : V_i → V_{i+1}` to a homogeneous element.
    pub fn face_apply(&self, i: usize, k: usize, v: &GVec) -> Result<GVec, CalcError> {
        let family = self.faces.get(i).ok_or(CalcError::Invalid(format!(
            "no faces leave level {i} in a diagram of {} levels",
            self.levels.len()
        )))?;
        let map = family.get(k).ok_or(CalcError::IndexRange {
            index: k,
            n: family.len() - 1,
        })?;
        self.levels[i].check(v, v.degree)?;
        apply_linear(map, v, &self.levels[i + 1])
    }

    /// The matrix of `∂_k : V_i → V_{i+1}` in one degree, columns indexed by
    /// the source basis and rows by the target basis.
    pub fn face_matrix(&self, i: usize, k: usize, degree: i64) -> Result<QMat, CalcError> {
        let src = self.level(i)?;
        let dst = self.level(i + 1)?;
        let cols: Result<Vec<Vec<polycalc::rat::Rat>>, CalcError> = src
            .basis_names(degree)
            .iter()
            .map(|name| {
                let image = self.face_apply(i, k, &src.basis_elem(name)?)?;
                Ok(dst.coords_vec(&image))
            })
            .collect();
        Ok(QMat::from_cols(cols?, dst.dim(degree)))
    }

    /// All degrees that occur in any level.
    pub fn degrees(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self
            .levels
            .iter()
            .flat_map(|l| l.degrees().collect::<Vec<_>>())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// A validated levelwise morphism between two diagrams of equal length.
#[derive(Debug, Clone)]
pub struct ScsMorphism {
    maps: Vec<BTreeMap<String, GVec>>,
}

impl ScsMorphism {
    /// Parses and validates a levelwise morphism `src → dst`: every level
    /// map must be a degree-preserving DGLA morphism, and the square with
    /// every face map must commute.
    pub fn from_ser(
        src: &ScsDGLA,
        dst: &ScsDGLA,
        ser: &MorphismSer,
    ) -> Result<Self, CalcError> {
        if src.len() != dst.len() {
            return Err(CalcError::Invalid(format!(
                "morphism needs diagrams of equal length, found {} and {}",
                src.len(),
                dst.len()
            )));
        }
        if ser.len() != src.len() {
            return Err(CalcError::Invalid(format!(
                "morphism over {} levels needs {} maps, found {}",
                src.len(),
                src.len(),
                ser.len()
            )));
        }
        let mut maps = Vec::with_capacity(ser.len());
        for (i, level_ser) in ser.iter().enumerate() {
            let what = format!("morphism at level {i}");
            let map = parse_linear_map(src.level(i)?, dst.level(i)?, level_ser, &what)?;
            check_dgla_morphism(src.level(i)?, dst.level(i)?, &map, &what)?;
            maps.push(map);
        }
        let morphism = ScsMorphism { maps };
        // Compatibility with the faces: f_{i+1} ∘ ∂_k = ∂_k ∘ f_i.
        for i in 0..src.len() - 1 {
            for k in 0..=i + 1 {
                for deg in src.level(i)?.degrees().collect::<Vec<_>>() {
                    for name in src.level(i)?.basis_names(deg) {
                        let x = src.level(i)?.basis_elem(name)?;
                        let lhs = morphism.apply(i + 1, &src.face_apply(i, k, &x)?, dst)?;
                        let rhs = dst.face_apply(i, k, &morphism.apply(i, &x, dst)?)?;
                        if lhs != rhs {
                            return Err(CalcError::Invalid(format!(
                                "morphism does not commute with face {k} at level {i} on {name}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(morphism)
    }

    /// Applies the level-`i` map to a homogeneous element of the source.
    pub fn apply(&self, i: usize, v: &GVec, dst: &ScsDGLA) -> Result<GVec, CalcError> {
        let map = self.maps.get(i).ok_or(CalcError::IndexRange {
            index: i,
            n: self.maps.len() - 1,
        })?;
        apply_linear(map, v, dst.level(i)?)
    }

    /// The matrix of the level-`i` map in one degree, columns indexed by the
    /// source basis and rows by the target basis.
    pub fn matrix(
        &self,
        i: usize,
        degree: i64,
        src: &ScsDGLA,
        dst: &ScsDGLA,
    ) -> Result<QMat, CalcError> {
        let src_alg = src.level(i)?;
        let dst_alg = dst.level(i)?;
        let cols: Result<Vec<Vec<polycalc::rat::Rat>>, CalcError> = src_alg
            .basis_names(degree)
            .iter()
            .map(|name| {
                let image = self.apply(i, &src_alg.basis_elem(name)?, dst)?;
                Ok(dst_alg.coords_vec(&image))
            })
            .collect();
        Ok(QMat::from_cols(cols?, dst_alg.dim(degree)))
    }

    /// The serialization form.
    pub fn to_ser(&self) -> MorphismSer {
        self.maps.iter().map(linear_map_to_ser).collect()
    }
}
