//! Maurer–Cartan, gauge, and Baker–Campbell–Hausdorff calculus over the
//! truncated polynomial rings `ℚ[t]/(t^N)`, together with first-order
//! deformation spaces and an order-by-order obstruction/extension solver for
//! embedded coisotropic deformations of coordinate subspaces.
//!
//! The deformation-theoretic objects live in a *carrier*: a differential
//! graded Lie algebra presented either by polyvector fields on an affine
//! chart (via [`polycalc`]), by square matrices under the commutator, or by
//! an explicit finite-dimensional table of structure constants that is fully
//! validated at load time. Over `ℚ[t]/(t^N)` every series below is a finite
//! sum, so all results are exact rational values.
//!
//! The crate provides
//!
//! * [`MCElem`]/[`GaugeElem`] — degree-1 and degree-0 elements with
//!   coefficients in the maximal ideal `(t)`,
//! * [`mc_residual`] — the Maurer–Cartan defect `dx + ½[x,x]`,
//! * [`gauge`] — the gauge action `e^a ∗ x`, and [`bch`] — the
//!   Baker–Campbell–Hausdorff product by the explicit Dynkin series, with an
//!   independent `exp∘log` oracle on nilpotent matrices in [`nilmat`],
//! * [`t1_basis`]/[`obstruction_space_basis`] — exact bases of the
//!   first-order deformation space and the obstruction space of the normal
//!   complex, sliced by polynomial coefficient degree,
//! * [`mc_extend`] — one order-by-order extension step for embedded
//!   coisotropic deformation data, returning either a lift or the
//!   obstruction cocycle with its class,
//! * [`anchor_first_order`] — the first-order deformation datum induced by a
//!   closed one-form through the anchor map.

pub mod artin;
pub mod carrier;
pub mod embed;
pub mod findgla;
pub mod mc;
pub mod nilmat;
pub mod slices;
pub mod verify;

pub use artin::ArtinA;
pub use carrier::{Carrier, MatCarrier, PvfCarrier};
pub use embed::{anchor_first_order, mc_extend, reconstruct_gauge, EmbedOutcome};
pub use findgla::{FinDGLA, GVec};
pub use mc::{
    bch, gauge, gauge_compose_check, is_mc, mc_extend_generic, mc_residual, GaugeElem,
    GenericOutcome, MCElem,
};
pub use nilmat::{texp, tlog, TMat};
pub use slices::{obstruction_space_basis, t1_basis, normal_graded_slice, GradedSlice, SliceBasis};
