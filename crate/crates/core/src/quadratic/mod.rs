//! Invariants of quadratic fields consumed by the census formulas.
//!
//! Each quantity that feeds a formula is computed twice by unrelated
//! algorithms, and the two results must agree before anything is returned:
//! imaginary class numbers by reduced-form counting and by the Dirichlet
//! class number formula, `ζ_F(-1)` by Siegel's divisor sum and by the
//! generalized Bernoulli number `B_{2,χ}`.

mod imaginary;
mod profile;
mod real;
mod unit;
mod zeta;

pub use imaginary::{class_number_imaginary, dirichlet_class_number, reduced_forms};
pub use profile::{class_number_order_a, real_quadratic_profile, unit_index_varpi, RealQuadraticProfile};
pub use real::{class_number_real, narrow_class_number, reduced_indefinite_forms};
pub use unit::{fundamental_unit, smaller_unit_exists, unit_of_discriminant, QuadraticUnit, PERIOD_BOUND};
pub use zeta::{zeta_bernoulli, zeta_f_minus1, zeta_siegel};
