//! Integral alternating forms: symplectic normal form, invariant factors,
//! self-duality and modularity, and the hermitian self-dual existence test.

mod form;
mod hermitian;
mod normal_form;

pub use form::{determinant, AlternatingForm, Matrix};
pub use hermitian::{hermitian_self_dual_exists, Parity};
pub use normal_form::{symplectic_normal_form, SymplecticDecomposition};
