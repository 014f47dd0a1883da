//! The Carlitz module, its exponential, u_a, the ratios ζ_C(k)/π̃^k and
//! F_q-lattice specs.

pub mod exp;
pub mod infinite;
pub mod lattice;
pub mod twisted;

pub use exp::{carlitz_exp, u_a_series, z_over_exp, zeta_ratio};
pub use infinite::{pi_power_inf, zeta_cross_check, zeta_inf_partial, zeta_tail_bound};
pub use lattice::{span, LatticeSpec};
pub use twisted::{carlitz_action, TwistedPoly};
