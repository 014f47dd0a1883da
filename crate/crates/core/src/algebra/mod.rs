//! Exact arithmetic in F_q, A = F_q[θ], K = F_q(θ) and A/℘^M.

pub mod coeff;
pub mod felem;
pub mod field;
pub mod frac;
pub mod modp;
pub mod order;
pub mod poly;
pub mod special;

pub use coeff::Coeff;
pub use felem::FqElem;
pub use field::{FieldParams, Fq};
pub use frac::Frac;
pub use modp::{ModP, PrimePower};
pub use order::Order;
pub use poly::{monic_enum, monic_iter, Poly};
pub use special::{
    base_digits, big_d, big_l, binom_mod_p, bracket, carlitz_factorial, ord_v, ord_v_poly,
};
