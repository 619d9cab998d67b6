//! Exact computations with monomial ideals, Macaulay inverse systems and
//! homogeneous artinian Gorenstein ideals.
//!
//! The combinatorial half ([`monomial_ideal`]) works with minimal generating
//! antichains of exponent vectors: docles, inverse ideals, the closure
//! operator and the unique `I = J ∩ H` decomposition. The linear-algebra half
//! ([`graded`], [`gorenstein`]) handles homogeneous zero-dimensional ideals one
//! graded slice at a time, without Gröbner bases.
//!
//! All coefficient arithmetic is generic over an exact [`Field`]; the aliases
//! at the crate root fix it to arbitrary-precision rationals.

pub mod cli;
pub mod error;
pub mod exponents;
pub mod field;
pub mod gorenstein;
pub mod graded;
pub mod linalg;
pub mod monomial_ideal;
pub mod oracle;
pub mod polynomial;
pub mod staircase;
pub mod text;

pub use error::{Error, Result};
pub use exponents::{Ambient, ExponentVector};
pub use field::Field;
pub use monomial_ideal::{Antichain, Closure, MonomialIdeal};

/// Arbitrary-precision rationals, the coefficient field used throughout.
pub type Rational = num_rational::BigRational;

/// Polynomial over [`Rational`].
pub type Poly = polynomial::Polynomial<Rational>;
/// Homogeneous ideal presentation over [`Rational`].
pub type Ideal = graded::HomogeneousIdeal<Rational>;
/// Graded slice over [`Rational`].
pub type Slice = graded::GradedSlice<Rational>;
/// Gorenstein data `((x₁ᵏ,…,x_dᵏ):p)` over [`Rational`].
pub type Spec = gorenstein::GorensteinSpec<Rational>;
/// Truncated power series over [`Rational`].
pub type Series = gorenstein::SeriesSpec<Rational>;
