//! Exact multivariate polynomials over the rationals.

mod context;
mod map;
mod monomial;
mod order;
mod polynomial;
pub mod text;

pub use context::RingContext;
pub use map::{is_weighted_homogeneous, substitute_linear, weighted_degree_split, RingMap, WeightSplit};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use polynomial::Polynomial;
pub(crate) use polynomial::{fmt_rational, primitive_scale};
pub use text::{parse_generators, render_ideal, IdealText};

/// Arbitrary-precision exact rational number.
pub type Rational = num_rational::BigRational;
