//! The quintic del Pezzo threefold `X5 ⊂ P^6` and its torus-fixed curves.

pub mod checks;
pub mod fixed;
pub mod model;
pub mod residual;
pub mod tables;
pub mod wedge;

pub use checks::{coordinate_change_check, hom_bound_check, rnc_example_checks, x5_global_check};
pub use fixed::{fixed_curves, linear_span_dim, torus_fixed_grassmannian, FixedCurveRecord, GrassmannFixedPoints};
pub use model::Dp5Model;
pub use residual::{enumerate_fixed_quartics, residual_quartic, QuarticEnumeration, ResidualQuartic};
pub use wedge::invariant_subspace_check;
