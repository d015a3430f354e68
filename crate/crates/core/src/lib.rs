//! Exact census of principally polarized superspecial abelian surfaces in the
//! isogeny class attached to the Weil numbers `±√q`.
//!
//! Every count is a closed-form rational expression in a handful of
//! quadratic-field invariants: `ζ_F(-1)` for `F = Q(√p)`, class numbers of
//! `Q(√-p)`, `Q(√-2p)`, `Q(√-3p)`, the fundamental unit of `F` and the unit
//! index `ϖ`. [`quadratic`] computes those invariants (each by two
//! independent routes), [`census`] evaluates the formulas and checks the
//! identities tying them together, and [`report`] flattens the result for
//! output.
//!
//! ```
//! use ppsp_census::{census, PrimeInput};
//!
//! let report = census(PrimeInput::new(13)?)?;
//! assert_eq!(report.h_pp, 3);
//! assert_eq!(report.t_pp, 3);
//! assert_eq!((report.lambda1_pp, report.lambda16_pp), (1, Some(2)));
//! # Ok::<(), ppsp_census::Error>(())
//! ```
//!
//! [`symplectic`] is a separate toolkit for integral alternating forms.

pub mod arith;
pub mod census;
mod error;
pub mod quadratic;
pub mod report;
pub mod symplectic;

pub use arith::{ExactRational, PrimeInput};
pub use census::{census, CensusReport};
pub use error::{Error, Result};
pub use quadratic::RealQuadraticProfile;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/arithmetic.md")]
    mod arithmetic {}
    #[doc = include_str!("../../../book/src/quadratic.md")]
    mod quadratic {}
    #[doc = include_str!("../../../book/src/census.md")]
    mod census {}
    #[doc = include_str!("../../../book/src/refined.md")]
    mod refined {}
    #[doc = include_str!("../../../book/src/masses.md")]
    mod masses {}
    #[doc = include_str!("../../../book/src/symplectic.md")]
    mod symplectic {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
