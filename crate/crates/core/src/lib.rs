//! Exact computer algebra for torus-fixed rational curves on the quintic
//! del Pezzo threefold `X5 ⊂ P^6`.
//!
//! Layers, bottom-up:
//!
//! * [`poly`]: sparse rational polynomials, term orders, ring maps
//! * [`groebner`]: division, Buchberger with cofactors, syzygies
//! * [`ideal`]: ideal arithmetic, saturation, elimination, comparison
//! * [`hilbert`]: Hilbert functions, series numerators, Hilbert polynomials
//! * [`homspaces`]: degree-zero graded Hom spaces and tangent dimensions
//! * [`dp5`]: the threefold, its fixed curves and residual quartics
//! * [`report`], [`suite`], [`properties`]: the verification runner
//!
//! Parallel sections go through [`par`]; build without the `parallel`
//! feature, or call [`par::set_execution`], to run sequentially.

pub mod dp5;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod homspaces;
pub mod ideal;
pub mod linalg;
pub mod par;
pub mod poly;
pub mod properties;
pub mod report;
pub mod suite;

pub use error::{Error, Result};
pub use ideal::Ideal;
pub use poly::{Monomial, MonomialOrder, Polynomial, Rational, RingContext};
