//! The v-adic layer: weights in Z/(q^d - 1) × Z_p, a^s, ℘-adic orders of
//! u-expansions, Goss's families and convergence experiments.

mod converge;
mod family;
mod vseries;
mod weight;

pub use converge::{boost_experiment, convergence_experiment, petrov_goss_experiment, ConvergenceReport, ConvergenceRow};
pub use family::{false_e_decomposition_check, false_e_mod_prime, family_hypotheses, fhat_11, goss_family, Family};
pub use vseries::{vord_frac, VOrd, VSeries};
pub use weight::{a_pow_s, prec_for, teichmuller, WeightS};
