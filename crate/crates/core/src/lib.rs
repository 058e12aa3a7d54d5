//! Exact integer counting of lattice paths.
//!
//! Four path families are covered, all starting at (0,0) in a grid whose
//! first coordinate `p` grows downward and second coordinate `q` grows to
//! the right:
//!
//! * rectangular paths (right/down steps), counted by binomials;
//! * subdiagonal rectangular paths (`q <= p` throughout), counted by the
//!   Catalan triangle;
//! * HVD paths (right/down/diagonal steps), counted by Delannoy numbers;
//! * subdiagonal HVD paths, counted by the Schroder triangle.
//!
//! Every family is computed three independent ways — recurrence tables
//! ([`tables`]), closed forms ([`closedform`]) and a brute-force
//! enumeration oracle ([`oracle`]) — and an identity registry
//! ([`identities`]) cross-checks the published relations between them,
//! including the matrix factorizations of the rectangular and Delannoy
//! arrays through the Pascal matrix. All arithmetic is exact; there is no
//! floating point anywhere in this crate.

pub mod arith;
pub mod closedform;
pub mod error;
pub mod family;
pub mod format;
pub mod identities;
pub mod matrix;
pub mod oracle;
pub mod tables;

pub use error::Error;
pub use matrix::{CountMatrix, CountTriangle};

/// Arbitrary-precision signed integer carrying every count in this crate.
pub type ExactInt = num_bigint::BigInt;

/// Exact rational, always in lowest terms with a positive denominator.
pub type ExactRatio = num_rational::BigRational;
