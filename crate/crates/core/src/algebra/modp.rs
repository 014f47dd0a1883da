//! Quotient rings A/℘^M, the finite truncations of the completion A_v.

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use super::coeff::Coeff;
use super::frac::Frac;
use super::order::Order;
use super::poly::{forward_binop, Poly};
use crate::error::{Error, Result};

struct ModCtx {
    prime: Poly,
    prec: u32,
    modulus: Poly,
}

/// The ring A/℘^M for a fixed monic irreducible ℘ and precision M >= 1.
#[derive(Clone)]
pub struct PrimePower(Arc<ModCtx>);

impl PartialEq for PrimePower {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.prec == other.0.prec && self.0.prime == other.0.prime)
    }
}
impl Eq for PrimePower {}

impl fmt::Debug for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A/({})^{}", self.0.prime, self.0.prec)
    }
}

impl PrimePower {
    pub fn new(prime: &Poly, prec: u32) -> Result<Self> {
        if !prime.is_monic() || !prime.is_irreducible() {
            return Err(Error::NotIrreducible(prime.to_string()));
        }
        if prec == 0 {
            return Err(Error::arg("precision must be >= 1"));
        }
        Ok(Self::new_unchecked(prime, prec))
    }

    pub(crate) fn new_unchecked(prime: &Poly, prec: u32) -> Self {
        PrimePower(Arc::new(ModCtx { prime: prime.clone(), prec, modulus: prime.pow(prec as u64) }))
    }

    pub fn prime(&self) -> &Poly {
        &self.0.prime
    }
    pub fn prec(&self) -> u32 {
        self.0.prec
    }
    pub fn modulus(&self) -> &Poly {
        &self.0.modulus
    }
    /// Same prime at a different precision.
    pub fn with_prec(&self, prec: u32) -> Self {
        if prec == self.prec() {
            self.clone()
        } else {
            Self::new_unchecked(self.prime(), prec)
        }
    }

    pub fn reduce(&self, a: &Poly) -> ModP {
        ModP { rep: a.rem(self.modulus()).expect("nonzero modulus"), ring: self.clone() }
    }
    pub fn zero(&self) -> ModP {
        ModP { rep: Poly::zero(self.prime().field()), ring: self.clone() }
    }
    pub fn one(&self) -> ModP {
        self.reduce(&Poly::one(self.prime().field()))
    }

    /// Image of x ∈ K with ord_℘(x) >= 0.
    pub fn reduce_frac(&self, x: &Frac) -> Result<ModP> {
        if x.is_zero() {
            return Ok(self.zero());
        }
        match x.ord(self.prime()) {
            Order::Finite(e) if e < 0 => {
                Err(Error::NotInvertible(format!("{x} has a pole at {}", self.prime())))
            }
            _ => {
                let (_, den) = x.den().split_valuation(self.prime()).unwrap();
                let (e, num) = x.num().split_valuation(self.prime()).unwrap();
                let den_inv = self.reduce(&den).inv()?;
                let pe = if e as u32 >= self.prec() { self.zero() } else { self.reduce(&self.prime().pow(e as u64)) };
                Ok(self.reduce(&num).mul(&den_inv).mul(&pe))
            }
        }
    }
}

/// An element of A/℘^M, stored as its remainder of degree < M·deg ℘.
#[derive(Clone, PartialEq, Eq)]
pub struct ModP {
    rep: Poly,
    ring: PrimePower,
}

impl ModP {
    pub fn rep(&self) -> &Poly {
        &self.rep
    }
    pub fn ring(&self) -> &PrimePower {
        &self.ring
    }
    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn add(&self, o: &ModP) -> ModP {
        debug_assert!(self.ring == o.ring);
        ModP { rep: self.rep.add(&o.rep), ring: self.ring.clone() }
    }
    pub fn sub(&self, o: &ModP) -> ModP {
        ModP { rep: self.rep.sub(&o.rep), ring: self.ring.clone() }
    }
    pub fn neg(&self) -> ModP {
        ModP { rep: self.rep.neg(), ring: self.ring.clone() }
    }
    pub fn mul(&self, o: &ModP) -> ModP {
        debug_assert!(self.ring == o.ring);
        self.ring.reduce(&self.rep.mul(&o.rep))
    }
    pub fn pow(&self, n: u64) -> ModP {
        ModP { rep: self.rep.pow_mod(n, self.ring.modulus()).unwrap(), ring: self.ring.clone() }
    }

    /// Inverse of a unit (℘ ∤ rep).
    pub fn inv(&self) -> Result<ModP> {
        let (g, s, _) = self.rep.ext_gcd(self.ring.modulus());
        if !g.is_one() {
            return Err(Error::NotInvertible(format!("{} mod {:?}", self.rep, self.ring)));
        }
        Ok(self.ring.reduce(&s))
    }

    /// ℘-adic valuation of the representative, capped: zero gives `Infinity`,
    /// meaning "divisible by ℘^M".
    pub fn ord(&self) -> Order {
        match self.rep.split_valuation(self.ring.prime()) {
            None => Order::Infinity,
            Some((e, _)) => Order::Finite(e),
        }
    }

    /// Reduce to a lower precision.
    pub fn lower(&self, prec: u32) -> ModP {
        self.ring.with_prec(prec).reduce(&self.rep)
    }

    pub fn to_json(&self) -> Value {
        json!({ "rep": self.rep.to_json(), "prime": self.ring.prime().to_json(), "prec": self.ring.prec() })
    }
}

impl fmt::Display for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod ({})^{}", self.rep, self.ring.prime(), self.ring.prec())
    }
}

impl fmt::Debug for ModP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl Coeff for ModP {
    fn zero_like(&self) -> Self {
        self.ring.zero()
    }
    fn one_like(&self) -> Self {
        self.ring.one()
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        ModP::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        ModP::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        ModP::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        ModP::mul(self, rhs)
    }
    fn from_int(&self, n: i64) -> Self {
        self.ring.reduce(&self.rep.from_int(n))
    }
    fn characteristic(&self) -> u32 {
        self.ring.prime().field().p()
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn pow(&self, n: u64) -> Self {
        ModP::pow(self, n)
    }
}

forward_binop!(ModP, Add, add);
forward_binop!(ModP, Sub, sub);
forward_binop!(ModP, Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Fq;

    #[test]
    fn modulus_is_zero() {
        let f = Fq::prime(3).unwrap();
        let r = PrimePower::new(&Poly::theta(&f), 2).unwrap();
        assert!(r.reduce(&Poly::monomial(&f, 1, 2)).is_zero());
    }

    #[test]
    fn geometric_series_inverse() {
        // (1+θ)^{-1} ≡ 1 - θ mod θ^2 over F_3
        let f = Fq::prime(3).unwrap();
        let r = PrimePower::new(&Poly::theta(&f), 2).unwrap();
        let x = r.reduce(&Poly::from_ints(&f, &[1, 1]));
        assert_eq!(x.inv().unwrap().rep(), &Poly::from_ints(&f, &[1, -1]));
        assert!(r.reduce(&Poly::theta(&f)).inv().is_err());
    }

    #[test]
    fn reduce_fraction() {
        let f = Fq::prime(2).unwrap();
        let p = Poly::from_ints(&f, &[1, 1, 1]);
        let r = PrimePower::new(&p, 3).unwrap();
        let x = Frac::new(p.mul(&Poly::theta(&f)), Poly::from_ints(&f, &[1, 1])).unwrap();
        let red = r.reduce_frac(&x).unwrap();
        let back = red.mul(&r.reduce(&Poly::from_ints(&f, &[1, 1])));
        assert_eq!(back, r.reduce(&p.mul(&Poly::theta(&f))));
        assert_eq!(red.ord(), Order::Finite(1));
        assert!(r.reduce_frac(&Frac::inv_poly(&p).unwrap()).is_err());
        assert!(PrimePower::new(&Poly::from_ints(&f, &[1, 0, 1]), 2).is_err());
    }
}
