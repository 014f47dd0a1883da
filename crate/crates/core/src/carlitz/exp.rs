//! The Carlitz exponential, the parameters u_a and the ratios ζ_C(k)/π̃^k.

use super::twisted::{carlitz_action, TwistedPoly};
use crate::algebra::{big_d, Fq, Frac, Poly};
use crate::error::{Error, Result};
use crate::series::USeries;

/// e_C(z) = Σ_{i≤J} z^{q^i}/D_i as a twisted polynomial.
pub fn carlitz_exp(field: &Fq, j_max: u32) -> TwistedPoly {
    let coeffs = (0..=j_max).map(|i| Frac::inv_poly(&big_d(field, i)).expect("D_i ≠ 0")).collect();
    TwistedPoly::new(field, coeffs)
}

/// u_a = u^{q^d}/R_a(u) with R_a(u) = Σ_i c_i u^{q^d - q^i}, where
/// C_a = Σ c_i τ^i and d = deg a. Exact modulo u^trunc, coefficients in A.
pub fn u_a_series(a: &Poly, trunc: usize) -> Result<USeries<Poly>> {
    if !a.is_monic() {
        return Err(Error::NotMonic(a.to_string()));
    }
    let field = a.field();
    let d = a.degree().unwrap() as u32;
    let q = field.q() as usize;
    let qd = q.pow(d);
    let zero = Poly::zero(field);
    if qd >= trunc {
        return Ok(USeries::zero(&zero, trunc));
    }
    let ca = carlitz_action(a);
    let len = trunc - qd;
    let mut r = vec![zero.clone(); len];
    for (i, c) in ca.coeffs().iter().enumerate() {
        let e = qd - q.pow(i as u32);
        if e < len {
            r[e] = c.as_poly().expect("C_a has coefficients in A").clone();
        }
    }
    let inv = USeries::new(&zero, r, len).inverse()?;
    Ok(inv.shift(qd))
}

/// z/e_C(z), exact modulo z^trunc.
pub fn z_over_exp(field: &Fq, trunc: usize) -> USeries<Frac> {
    let q = field.q() as usize;
    let zero = Frac::zero(field);
    let mut c = vec![zero.clone(); trunc];
    let mut i = 0u32;
    while trunc > 0 && q.pow(i) - 1 < trunc {
        c[q.pow(i) - 1] = Frac::inv_poly(&big_d(field, i)).unwrap();
        i += 1;
    }
    USeries::new(&zero, c, trunc).inverse().expect("constant term 1")
}

/// ζ_C(k)/π̃^k ∈ K, the z^k coefficient of z/e_C(z); needs (q-1) | k.
pub fn zeta_ratio(field: &Fq, k: u64) -> Result<Frac> {
    let q1 = field.q() as u64 - 1;
    if k == 0 || k % q1 != 0 {
        return Err(Error::arg(format!("zeta ratio needs k > 0 divisible by q - 1 = {q1}, got {k}")));
    }
    Ok(z_over_exp(field, k as usize + 1).coeff(k as usize).unwrap().clone())
}
