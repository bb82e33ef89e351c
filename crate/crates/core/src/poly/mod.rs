//! Univariate and bivariate polynomials over GF(2^m), term orderings and
//! Hasse derivatives.

mod bi;
mod order;
mod uni;

pub use bi::{binom_odd, BiPoly};
pub use order::{Monomial, TermOrder};
pub use uni::{UniPoly, DEFAULT_KARATSUBA_CUTOFF};

pub(crate) use uni::check_distinct;
