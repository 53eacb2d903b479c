//! Exact arithmetic for bubble skein expansions.
//!
//! Everything is computed over arbitrary-precision integers in a single
//! formal variable `A`:
//!
//! * [`poly`] and [`rational`]: Laurent polynomials and reduced rational
//!   functions in `A`;
//! * [`quantum`]: quantum integers, `Δ_n`, Gaussian binomials, `α`, `β`;
//! * [`bubble`]: bubble expansion coefficients (three routes), full
//!   expansions and theta evaluations;
//! * [`series`]: truncated q-series with tracked validity windows;
//! * [`tail`]: the colored Jones tail of the `8_5` family;
//! * [`verify`]: property grids shared by the CLI and the test suites.

pub mod bubble;
pub mod error;
pub mod poly;
pub mod quantum;
pub mod rational;
pub mod series;
pub mod tail;
pub mod verify;

pub use bubble::{
    bubble_coeff, bubble_coeff_closed, bubble_coeff_quantum, bubble_coeff_recursive, bubble_expand, theta,
    BubbleParams, ExpansionTerm, Method, RecursiveCoeffs,
};
pub use error::{Error, Result};
pub use poly::LaurentPoly;
pub use rational::RationalFn;
pub use series::TruncatedSeries;
