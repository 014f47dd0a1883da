//! Goss polynomials for F_q-lattices: three constructions, the lattice-sum
//! oracle and the hyperderivative identities.

pub mod identities;
pub mod oracle;
pub mod table;

pub use identities::{
    check_diffs_a, check_diffs_b, check_diffs_c, check_frobenius, check_genfundiff, check_lem1b,
    check_t_derivative, t_laurent,
};
pub use oracle::{goss_denominator, lattice_sum_oracle, pi_times_goss_integral};
pub use table::{goss_closed, goss_genseries, goss_recursion, GossTable};
