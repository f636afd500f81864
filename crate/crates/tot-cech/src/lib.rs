//! Totalization and Čech machinery for semicosimplicial differential graded
//! Lie algebras.
//!
//! A semicosimplicial diagram assigns a finite-dimensional DGLA to every
//! level `n` and face morphisms `∂_0, …, ∂_{n+1}` between consecutive
//! levels, subject to `∂_{k+1} ∂_l = ∂_l ∂_k` for `l ≤ k`. Two global
//! objects are built from such a diagram:
//!
//! * the **cochain complex** ([`cech`]) — the levelwise direct sum with the
//!   alternating face differential, a plain complex computing the diagram's
//!   cohomology;
//! * the **totalization** ([`tot`]) — tuples of polynomial-form-valued
//!   elements, one per level, matching under the simplex face pullbacks.
//!   This carries a full DGLA structure, and integration over the simplices
//!   ([`tot::whitney_i`]) maps it onto the cochain complex as a surjective
//!   chain map.
//!
//! Polynomial differential forms on the standard simplices live in
//! [`sform`]; diagrams, their morphisms, and short exact sequences in
//! [`scs`]; homotopy fibers of DGLA morphisms — totalizations of two-level
//! diagrams, with their path-integration comparison map — in [`hfiber`].
//! All linear algebra is exact over the rationals, restricted to
//! finite-dimensional slices cut by a weight bound on the form
//! coefficients. Reusable invariant checks and the named fixtures live in
//! [`verify`].

pub mod cech;
pub mod chain;
pub mod hfiber;
pub mod scs;
pub mod sform;
pub mod tot;
pub mod verify;

pub use cech::{
    cech_cohomology_dims, cech_complex, cech_degree_window, cech_diff, cech_dim, cech_matrix,
    CochainElem,
};
pub use chain::{complex_cohomology, ComplexSlice};
pub use hfiber::{hfiber_build, HFiber, HFiberElem};
pub use scs::{FaceSer, MorphismSer, ScsDGLA, ScsDGLASer, ScsMorphism, SesData, SesSer};
pub use sform::SimplexForm;
pub use tot::{
    e_map, tot_bracket, tot_check, tot_cohomology_dims, tot_degree_window, tot_diff, tot_map,
    whitney_i, whitney_matrix, AmbientBasis, TotElem, TotSlice,
};
