//! The coefficient ring `A = ℚ[t]/(t^N)`.
//!
//! `A` is a local ring with maximal ideal `m = (t)` satisfying `m^N = 0`;
//! its residue map to `ℚ` is evaluation at `t = 0`. Deformation data carry
//! coefficients in `m`, so every bracket/differential series in this crate
//! truncates after finitely many terms and is evaluated exactly.

use serde::{Deserialize, Serialize};

/// The ring `ℚ[t]/(t^N)`, identified by the truncation order `N ≥ 1`.
///
/// Elements of `A` itself appear only through per-power component lists
/// (`Vec` of carrier elements indexed by the exponent of `t`); this type
/// records the order and the arithmetic of exponents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArtinA {
    order: usize,
}

impl ArtinA {
    /// The ring `ℚ[t]/(t^N)`. Panics if `N = 0` (not a ring with 1 ≠ 0 in
    /// our indexing).
    pub fn new(order: usize) -> Self {
        assert!(order >= 1, "truncation order must be at least 1");
        ArtinA { order }
    }

    /// The truncation order `N`: `t^N = 0`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of nonzero powers of `t` in the maximal ideal: `t¹,…,t^{N−1}`.
    pub fn ideal_powers(&self) -> usize {
        self.order - 1
    }
}

impl std::fmt::Display for ArtinA {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Q[t]/(t^{})", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let a = ArtinA::new(4);
        assert_eq!(a.order(), 4);
        assert_eq!(a.ideal_powers(), 3);
        assert_eq!(a.to_string(), "Q[t]/(t^4)");
    }

    #[test]
    #[should_panic]
    fn zero_order_rejected() {
        let _ = ArtinA::new(0);
    }
}
