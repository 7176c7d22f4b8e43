//! Exact rational arithmetic and sparse multivariate polynomials over the
//! jet-variable universe `x{j}_{i}`.
//!
//! A variable is indexed by its generator `j >= 1` and its level `i >= 1`;
//! level 1 variables are the coordinates of the base ring. The weight of a
//! variable is its level, so the weight of a monomial is the conformal weight
//! of the corresponding element of the jet ring.

mod monomial;
mod order;
mod parse;
mod poly;

pub use monomial::{Monomial, VarId};
pub use order::{MonomialOrder, OrderKind};
pub use parse::{parse_polynomial, parse_scalar, VarNames};
pub use poly::Polynomial;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar. Always reduced with a positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// `n!` as an exact scalar.
pub fn factorial(n: u32) -> Scalar {
    let mut acc = BigInt::from(1);
    for k in 2..=n {
        acc *= k;
    }
    Scalar::from_integer(acc)
}

/// Rising factorial `m (m+1) ... (m+k-1)`; equals 1 for `k = 0`.
pub fn rising(m: u32, k: u32) -> Scalar {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc *= m + i;
    }
    Scalar::from_integer(acc)
}

pub fn binomial(n: u32, k: u32) -> Scalar {
    if k > n {
        return int(0);
    }
    rising(n - k + 1, k) / factorial(k)
}

/// Renders a scalar as `p` or `p/q`.
pub fn format_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}
