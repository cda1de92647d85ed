//! Exact-arithmetic library for divisor-class arithmetic on odd hyperelliptic
//! curves (Mumford presentations, Cantor reduction), multiplication profiles
//! and torsion orders of point classes, and the numerical-semigroup
//! classification machinery built on them.
//!
//! All computation is exact, over Q or one quadratic extension Q(sqrt(d)).

pub mod constructions;
pub mod curve;
pub mod field;
pub mod jacobian;
pub mod linalg;
pub mod poly;
pub mod profile;
pub mod records;
pub mod rspace;
pub mod semigroup;

pub use curve::{AffinePoint, HyperellipticCurve};
pub use field::{FieldCtx, FieldElement, Rational};
pub use jacobian::MumfordDivisor;
pub use poly::{HankelSpec, Poly, Series};
pub use profile::{MultiplicationProfile, ProfilePattern};
pub use semigroup::{AVector, CoverParams, NumericalSemigroup};
