//! Exact rational scalars.
//!
//! `Rat` is an alias for `num::BigRational`; the helpers here exist so the
//! rest of the workspace can build and print scalars without repeating the
//! `BigInt` plumbing.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed};

/// Re-exported so callers can use `Rat::is_zero` without a direct `num`
/// dependency.
pub use num::traits::Zero;

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rat = BigRational;

/// The rational `p / q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `p` as a rational.
pub fn rint(p: i64) -> Rat {
    Rat::from_integer(BigInt::from(p))
}

/// `0`.
pub fn rzero() -> Rat {
    Rat::zero()
}

/// `1`.
pub fn rone() -> Rat {
    Rat::one()
}

/// `(-1)^k` as a rational.
pub fn sign_pow(k: i64) -> Rat {
    if k.rem_euclid(2) == 0 {
        rone()
    } else {
        -rone()
    }
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rat {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rat::from_integer(acc)
}

/// Parses `"p"` or `"p/q"` (optionally signed) into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                None
            } else {
                Some(Rat::new(num, den))
            }
        }
        None => {
            let num: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(num))
        }
    }
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise, lowest terms.
pub fn rat_string(r: &Rat) -> String {
    r.to_string()
}

/// True if `r` is a negative number (used by the polynomial printer).
pub fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}
