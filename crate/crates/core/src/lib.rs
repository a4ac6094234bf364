//! An exact symbolic exterior-calculus kernel over the rational function
//! field Q(x1..xn).
//!
//! The building blocks are sparse polynomials and rational functions with
//! arbitrary-precision coefficients ([`coeffs`]), the graded exterior
//! algebra of differential forms and multivector fields ([`exterior`]),
//! the radial homotopy operator producing explicit exactness witnesses and
//! certificates for wedge splittings of exact forms ([`poincare`]),
//! phase-flow machinery — flux forms, Nambu brackets, first integrals,
//! Pfaff integrability ([`dynamics`]) — and the merge-coarsening diagrams
//! of integer partitions ([`partitions`]). Everything is computed exactly;
//! there is no floating point anywhere.

pub mod coeffs;
pub mod display;
pub mod dynamics;
mod error;
pub mod exterior;
pub mod parse;
pub mod partitions;
pub mod poincare;
pub mod registry;
pub mod sample;

pub use coeffs::{Monomial, Polynomial, Rational, RationalFunction};
pub use dynamics::PhaseFlow;
pub use error::Error;
pub use exterior::{DifferentialForm, IndexTuple, MultiVector};
pub use partitions::{Partition, PartitionDag};
pub use poincare::{SplittingCertificate, WedgeIdentity};
