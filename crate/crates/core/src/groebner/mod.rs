//! Division, reduced Gröbner bases with cofactors, and syzygies.

mod buchberger;
mod division;
pub(crate) mod sorted;
mod syzygy;

pub use buchberger::{normal_form, reduced_groebner_basis, GroebnerBasis};
pub use division::{divide, reduce, Division};
pub use syzygy::{syzygy_basis, SyzygyBasis};
