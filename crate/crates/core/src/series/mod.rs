//! Truncated power series, Laurent series and dense polynomials over a
//! coefficient ring, with hyperderivatives.

pub mod dense;
pub mod laurent;
pub mod rules;
pub mod useries;

pub use dense::DensePoly;
pub use laurent::{InfLaurent, Laurent, PRINCIPAL_CAP};
pub use rules::{
    check_composition_rule, check_digit_factorization, check_product_rule, check_pth_power_rule, Hyper,
};
pub use useries::USeries;
