//! Exact computer algebra for Drinfeld modular forms over F_q[θ].
//!
//! The crate is layered bottom-up:
//!
//! - [`algebra`]: F_q, A = F_q[θ], K = F_q(θ), A/℘^M and the constants
//!   [i], D_i, L_i, Π_m.
//! - [`series`]: truncated power and Laurent series with hyperderivatives.
//! - [`carlitz`]: the Carlitz module, its exponential, u_a and ζ_C(k)/π̃^k.
//! - [`goss`]: Goss polynomials for arbitrary F_q-lattices.
//! - [`forms`]: u-expansions of Eisenstein series, g_d, the false Eisenstein
//!   series and Petrov's A-expansions.
//! - [`operators`]: Θ^r, Serre operators and Hecke operators.
//! - [`vadic`]: weights in Z/(q^d-1) × Z_p, a^s, ℘-adic series and
//!   convergence experiments.
//! - [`check`]: the identity suites, runnable from the command line.

pub mod algebra;
pub mod carlitz;
pub mod check;
pub mod error;
pub mod forms;
pub mod goss;
pub mod operators;
pub mod series;
pub mod vadic;

pub use error::{Error, Result};
