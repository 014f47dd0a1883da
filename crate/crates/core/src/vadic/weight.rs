//! The weight space S = Z/(q^d - 1) × Z_p and the exponentials a^s.

use std::fmt;

use serde_json::{json, Value};

use crate::algebra::{ModP, Poly, PrimePower};
use crate::error::{Error, Result};

/// Smallest j with p^j ≥ m: the number of p-adic digits of y that a^s
/// modulo ℘^m depends on.
pub fn prec_for(p: u32, m: u32) -> u32 {
    let mut j = 0u32;
    let mut pj = 1u64;
    while pj < m as u64 {
        pj *= p as u64;
        j += 1;
    }
    j
}

/// s = (x, y) with x mod q^d - 1 and y a p-adic integer known mod p^prec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightS {
    x: u64,
    y: u128,
    x_mod: u64,
    p: u32,
    prec: u32,
}

impl WeightS {
    fn moduli(prime: &Poly, prec: u32) -> Result<(u64, u32)> {
        let d = prime.degree().filter(|&d| d > 0).ok_or_else(|| Error::arg("℘ must have positive degree"))?;
        let p = prime.field().p();
        if (p as f64).powi(prec as i32) >= 1e36 {
            return Err(Error::arg(format!("p-adic precision {prec} is too large")));
        }
        Ok(((prime.field().q() as u64).pow(d as u32) - 1, p))
    }

    fn y_mod(&self) -> u128 {
        (self.p as u128).pow(self.prec)
    }

    pub fn new(prime: &Poly, x: u64, y: u128, prec: u32) -> Result<Self> {
        let (x_mod, p) = Self::moduli(prime, prec)?;
        let mut s = WeightS { x: x % x_mod, y: 0, x_mod, p, prec };
        s.y = y % s.y_mod();
        Ok(s)
    }

    /// The image of n ∈ Z.
    pub fn embed(prime: &Poly, n: i64, prec: u32) -> Result<Self> {
        let (x_mod, p) = Self::moduli(prime, prec)?;
        let ym = (p as i128).pow(prec);
        Ok(WeightS { x: n.rem_euclid(x_mod as i64) as u64, y: (n as i128).rem_euclid(ym) as u128, x_mod, p, prec })
    }

    pub fn x(&self) -> u64 {
        self.x
    }
    pub fn y(&self) -> u128 {
        self.y
    }
    pub fn prec(&self) -> u32 {
        self.prec
    }
    /// q^d - 1.
    pub fn x_modulus(&self) -> u64 {
        self.x_mod
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if self.x_mod != o.x_mod || self.p != o.p {
            return Err(Error::RingMismatch);
        }
        let prec = self.prec.min(o.prec);
        let ym = (self.p as u128).pow(prec);
        Ok(WeightS { x: (self.x + o.x) % self.x_mod, y: (self.y % ym + o.y % ym) % ym, x_mod: self.x_mod, p: self.p, prec })
    }

    /// Agreement in Z/(q^d - 1) × Z/p^j.
    pub fn agrees_mod(&self, o: &Self, j: u32) -> bool {
        let ym = (self.p as u128).pow(j.min(self.prec).min(o.prec));
        self.x_mod == o.x_mod && self.x == o.x && self.y % ym == o.y % ym
    }

    pub fn to_json(&self) -> Value {
        json!({ "x": self.x, "x_mod": self.x_mod, "y": self.y.to_string(), "p": self.p, "prec": self.prec })
    }
}

impl fmt::Display for WeightS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} mod {}, {} mod {}^{})", self.x, self.x_mod, self.y, self.p, self.prec)
    }
}

fn unit(a: &Poly, ring: &PrimePower) -> Result<ModP> {
    if a.is_zero() || ring.prime().divides(a) {
        return Err(Error::NotInvertible(format!("℘ = {} divides {a}", ring.prime())));
    }
    Ok(ring.reduce(a))
}

/// The (q^d - 1)-st root of unity a_1 ≡ a mod ℘, as the fixed point of
/// x ↦ x^{q^d}.
pub fn teichmuller(a: &Poly, ring: &PrimePower) -> Result<ModP> {
    let mut x = unit(a, ring)?;
    let qd = (ring.prime().field().q() as u64).pow(ring.prime().degree().unwrap() as u32);
    loop {
        let y = x.pow(qd);
        if y == x {
            return Ok(x);
        }
        x = y;
    }
}

/// a^s = a_1^x a_2^y modulo ℘^M, where a_2 = a/a_1 ≡ 1 mod ℘. Only y mod p^j
/// matters, with p^j ≥ M, since a_2^{p^j} ≡ 1 mod ℘^{p^j}.
pub fn a_pow_s(a: &Poly, s: &WeightS, ring: &PrimePower) -> Result<ModP> {
    let p = ring.prime().field().p();
    let q = ring.prime().field().q() as u64;
    let x_mod = q.pow(ring.prime().degree().unwrap() as u32) - 1;
    if s.p != p || s.x_mod != x_mod {
        return Err(Error::RingMismatch);
    }
    let j = prec_for(p, ring.prec());
    if s.prec < j {
        return Err(Error::InsufficientPrecision(format!(
            "a^s mod ℘^{} needs y mod {p}^{j}, weight known mod {p}^{}",
            ring.prec(),
            s.prec
        )));
    }
    let a1 = teichmuller(a, ring)?;
    let a2 = unit(a, ring)?.mul(&a1.pow(x_mod - 1));
    let y = (s.y % (p as u128).pow(j)) as u64;
    Ok(a1.pow(s.x).mul(&a2.pow(y)))
}
