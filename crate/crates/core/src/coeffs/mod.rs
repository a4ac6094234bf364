//! Exact coefficient arithmetic: Q, the polynomial ring Q[x1..xn], and its
//! fraction field Q(x1..xn).
//!
//! Every value carries its ambient dimension; binary operations check it.

mod monomial;
mod polynomial;
mod ratfun;

pub use monomial::Monomial;
pub use polynomial::Polynomial;
pub use ratfun::RationalFunction;

/// Arbitrary-precision rational scalar, always stored reduced with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Rational `p/q`; panics when `q = 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}
