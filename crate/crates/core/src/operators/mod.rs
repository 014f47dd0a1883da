//! Θ^r, Serre operators and Hecke operators on truncated u-expansions.

mod hecke;
mod serre;
mod theta;

pub use hecke::{
    hecke_t, hecke_t_s, hecke_u, hecke_u_frac, hecke_u_polys, hecke_u_v, hecke_u_window, hecke_v, hecke_v_frac,
};
pub use serre::serre_d;
pub use theta::{pi_theta_integral, theta_coeffwise, theta_iterate, theta_r, theta_r_monomial};

use serde_json::{json, Value};

use crate::algebra::Frac;
use crate::series::USeries;

/// The result of applying an operator, with the certified window.
#[derive(Clone, Debug)]
pub struct OperatorReport {
    pub input_label: String,
    pub input_weight: Option<i64>,
    pub input_type: Option<u64>,
    pub operator: String,
    pub params: Value,
    pub output: USeries<Frac>,
    pub output_weight: Option<i64>,
    pub output_type: Option<u64>,
}

impl OperatorReport {
    pub fn window(&self) -> usize {
        self.output.trunc()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "input": { "label": self.input_label, "weight": self.input_weight, "type": self.input_type },
            "operator": self.operator,
            "params": self.params,
            "window": self.window(),
            "output": {
                "weight": self.output_weight,
                "type": self.output_type,
                "series": self.output.to_json_with("u", Frac::to_json),
            },
        })
    }
}
