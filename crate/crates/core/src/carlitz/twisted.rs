//! Twisted polynomials K{τ} with τc = c^q τ, and the Carlitz module.

use std::fmt;

use serde_json::{json, Value};

use crate::algebra::{Fq, Frac, Poly};
use crate::series::USeries;

/// Σ c_i τ^i with coefficients in K; trailing zeros removed.
#[derive(Clone, PartialEq)]
pub struct TwistedPoly {
    field: Fq,
    coeffs: Vec<Frac>,
}

impl TwistedPoly {
    pub fn new(field: &Fq, mut coeffs: Vec<Frac>) -> Self {
        while coeffs.last().is_some_and(Frac::is_zero) {
            coeffs.pop();
        }
        TwistedPoly { field: field.clone(), coeffs }
    }

    pub fn constant(c: Frac) -> Self {
        let f = c.field().clone();
        Self::new(&f, vec![c])
    }

    pub fn tau(field: &Fq) -> Self {
        Self::new(field, vec![Frac::zero(field), Frac::one(field)])
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }
    pub fn coeffs(&self) -> &[Frac] {
        &self.coeffs
    }
    pub fn coeff(&self, i: usize) -> Frac {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Frac::zero(&self.field))
    }
    /// τ-degree; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(&self.field, (0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(&self.field, (0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }

    /// Twisted product: (a τ^i)(b τ^j) = a b^{q^i} τ^{i+j}.
    pub fn mul(&self, o: &Self) -> Self {
        self.mul_trunc(o, usize::MAX)
    }

    /// Product keeping only τ-degrees ≤ max_deg.
    pub fn mul_trunc(&self, o: &Self, max_deg: usize) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::new(&self.field, Vec::new());
        }
        let n = (self.coeffs.len() + o.coeffs.len() - 1).min(max_deg.saturating_add(1));
        let mut out = vec![Frac::zero(&self.field); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(&b.frobenius(i as u32)));
                }
            }
        }
        Self::new(&self.field, out)
    }

    /// Σ c_i x^{q^i}.
    pub fn apply(&self, x: &Frac) -> Frac {
        self.coeffs
            .iter()
            .enumerate()
            .fold(Frac::zero(&self.field), |acc, (i, c)| acc.add(&c.mul(&x.frobenius(i as u32))))
    }

    /// Σ c_i s^{q^i} for a power series s; in characteristic p the i-th term
    /// is known modulo u^{N q^i}, so the window is N.
    pub fn apply_series(&self, s: &USeries<Frac>) -> USeries<Frac> {
        let n = s.trunc();
        let q = self.field.q() as usize;
        let zero = Frac::zero(&self.field);
        let mut out = vec![zero.clone(); n];
        let mut qi = 1usize;
        for (i, c) in self.coeffs.iter().enumerate() {
            if qi >= n.max(1) && i > 0 {
                break;
            }
            if !c.is_zero() {
                for (m, a) in s.coeffs().iter().enumerate() {
                    let e = m * qi;
                    if e >= n {
                        break;
                    }
                    if !a.is_zero() {
                        out[e] = out[e].add(&c.mul(&a.frobenius(i as u32)));
                    }
                }
            }
            qi = qi.saturating_mul(q);
        }
        USeries::new(&zero, out, n)
    }

    /// z ↦ Σ c_i z^{q^i} as a power series in z, exact modulo z^trunc.
    pub fn to_series(&self, trunc: usize) -> USeries<Frac> {
        let zero = Frac::zero(&self.field);
        let mut out = vec![zero.clone(); trunc];
        let q = self.field.q() as usize;
        let mut qi = 1usize;
        for c in &self.coeffs {
            if qi >= trunc {
                break;
            }
            out[qi] = c.clone();
            qi = qi.saturating_mul(q);
        }
        USeries::new(&zero, out, trunc)
    }

    pub fn to_json(&self) -> Value {
        json!({ "tau": self.coeffs.iter().map(Frac::to_json).collect::<Vec<_>>() })
    }
}

impl fmt::Display for TwistedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})τ")?,
                _ => write!(f, "({c})τ^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TwistedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// C_a, the image of a under the homomorphism fixed by C_θ = θ + τ.
pub fn carlitz_action(a: &Poly) -> TwistedPoly {
    let field = a.field();
    let c_theta = TwistedPoly::new(field, vec![Frac::from_poly(Poly::theta(field)), Frac::one(field)]);
    let mut acc = TwistedPoly::new(field, Vec::new());
    for &c in a.coeffs().iter().rev() {
        acc = acc.mul(&c_theta).add(&TwistedPoly::constant(Frac::from_poly(Poly::constant(field, c))));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monic_enum;

    #[test]
    fn c_theta_and_c_theta_squared() {
        let f = Fq::prime(3).unwrap();
        let theta = Poly::theta(&f);
        let ct = carlitz_action(&theta);
        assert_eq!(ct.coeffs(), &[Frac::from_poly(theta.clone()), Frac::one(&f)]);
        // C_{θ^2} = θ^2 + (θ^q + θ)τ + τ^2
        let c2 = carlitz_action(&theta.pow(2));
        let mid = Poly::monomial(&f, 1, 3).add(&theta);
        assert_eq!(c2.coeffs(), &[Frac::from_poly(theta.pow(2)), Frac::from_poly(mid), Frac::one(&f)]);
        assert_eq!(carlitz_action(&Poly::one(&f)), TwistedPoly::constant(Frac::one(&f)));
    }

    #[test]
    fn homomorphism() {
        let f = Fq::prime(2).unwrap();
        let mut all = Vec::new();
        for d in 0..=2 {
            all.extend(monic_enum(&f, d));
        }
        for a in &all {
            for b in &all {
                let (ca, cb) = (carlitz_action(a), carlitz_action(b));
                assert_eq!(carlitz_action(&a.mul(b)), ca.mul(&cb));
                assert_eq!(carlitz_action(&a.add(b)), ca.add(&cb));
                assert_eq!(ca.degree(), a.degree());
            }
        }
    }
}
