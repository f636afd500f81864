//! Exact symbolic calculus for polynomial polyvector fields and holomorphic
//! forms on one affine chart of complex affine space.
//!
//! Everything is computed over the rationals with no floating point anywhere:
//! polynomials are sparse maps from exponent vectors to `BigRational`
//! coefficients, and polyvector fields / differential forms are sparse maps
//! from strictly increasing multi-indices to polynomials.
//!
//! The crate provides
//!
//! * the Schouten–Nijenhuis bracket on polyvector fields and the classical
//!   Gerstenhaber-algebra identities it satisfies,
//! * interior products, the holomorphic de Rham differential, and Lie
//!   derivatives along polyvector fields,
//! * for a fixed bivector field: the Lichnerowicz differential, the Poisson
//!   bracket of functions, the Koszul bracket of forms, the anchor map, and
//!   the bilinear `h` operator that controls the homotopy-abelianity
//!   criterion implemented downstream,
//! * predicates and projections for the coordinate subspace germ
//!   `z_1 = … = z_p = 0`: coisotropy, membership in the associated
//!   multiplicative/differential ideals, and the normal-bundle complex with
//!   its induced differential,
//! * an exact rational linear-algebra kit (RREF, kernels, quotients) used by
//!   the deformation-theoretic crates,
//! * randomized pools of polyvector fields and forms together with exact
//!   identity checks over those pools, runnable sequentially or in parallel.

pub mod coiso;
pub mod error;
mod exterior;
pub mod form;
pub mod linalg;
pub mod ops;
pub mod par;
pub mod parse;
pub mod poly;
pub mod pvf;
pub mod rat;
pub mod verify;

pub use coiso::{CoisoSetup, NormalPVF};
pub use error::CalcError;
pub use exterior::{CompSer, MIdx};
pub use form::Form;
pub use ops::{
    anchor, h_op, holo_d, interior, is_poisson, koszul, lichnerowicz, lie_deriv, poisson_bracket,
    schouten,
};
pub use parse::{parse_poly, ParseError};
pub use poly::Poly;
pub use pvf::PVF;
pub use rat::Rat;
