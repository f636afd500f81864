//! Error type shared by the calculus operations.

use thiserror::Error;

/// Errors reported by the symbolic operations.
///
/// Mathematical *falsehood* (a bivector failing to be Poisson, a germ failing
/// to be coisotropic) is a successful `false` answer from the corresponding
/// predicate; `CalcError` is reserved for operations whose preconditions make
/// the requested computation meaningless.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalcError {
    /// Two operands live on charts with different numbers of variables.
    #[error("operands have mismatched variable counts: {left} vs {right}")]
    VarMismatch { left: usize, right: usize },

    /// A coordinate index is outside `1..=n`.
    #[error("coordinate index {index} out of range 1..={n}")]
    IndexRange { index: usize, n: usize },

    /// An operation requiring a bivector received mixed or wrong degrees.
    #[error("expected a bivector field, found a component of exterior degree {found}")]
    NotBivector { found: usize },

    /// An operation requiring a Poisson bivector received a non-Poisson one.
    #[error("bivector is not Poisson: [pi,pi] != 0")]
    NotPoisson,

    /// An operation on the normal complex requires the germ to be coisotropic.
    #[error("subspace germ is not coisotropic for the given bivector")]
    NotCoisotropic,

    /// Input fails a structural validity requirement.
    #[error("invalid input: {0}")]
    Invalid(String),
}
