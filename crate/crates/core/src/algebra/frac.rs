//! The fraction field K = F_q(θ).

use std::fmt;

use serde_json::{json, Value};

use super::coeff::Coeff;
use super::field::Fq;
use super::order::Order;
use super::poly::{forward_binop, Poly};
use crate::error::{Error, Result};

/// A reduced fraction with monic denominator; equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Frac {
    num: Poly,
    den: Poly,
}

impl Frac {
    pub fn new(num: Poly, den: Poly) -> Result<Frac> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Frac {
        let field = num.field().clone();
        if num.is_zero() {
            return Frac { num, den: Poly::one(&field) };
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lc = d.lead();
        if lc != 1 {
            let inv = field.inv(lc).unwrap();
            n = n.scale(inv);
            d = d.scale(inv);
        }
        Frac { num: n, den: d }
    }

    pub fn from_poly(p: Poly) -> Frac {
        let one = Poly::one(p.field());
        Frac { num: p, den: one }
    }
    pub fn zero(field: &Fq) -> Frac {
        Frac::from_poly(Poly::zero(field))
    }
    pub fn one(field: &Fq) -> Frac {
        Frac::from_poly(Poly::one(field))
    }
    pub fn inv_poly(p: &Poly) -> Result<Frac> {
        Frac::new(Poly::one(p.field()), p.clone())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }
    pub fn den(&self) -> &Poly {
        &self.den
    }
    pub fn field(&self) -> &Fq {
        self.num.field()
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }
    /// The polynomial value, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly> {
        self.is_integral().then_some(&self.num)
    }

    pub fn add(&self, o: &Frac) -> Frac {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Frac::from_poly(self.num.add(&o.num));
            }
            return Self::reduce(self.num.add(&o.num), self.den.clone());
        }
        if o.den.is_one() {
            return Frac { num: self.num.add(&o.num.mul(&self.den)), den: self.den.clone() };
        }
        if self.den.is_one() {
            return Frac { num: o.num.add(&self.num.mul(&o.den)), den: o.den.clone() };
        }
        let g = self.den.gcd(&o.den);
        let a = self.den.div_exact(&g).unwrap();
        let b = o.den.div_exact(&g).unwrap();
        let num = self.num.mul(&b).add(&o.num.mul(&a));
        Self::reduce(num, a.mul(&o.den))
    }

    pub fn neg(&self) -> Frac {
        Frac { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Frac) -> Frac {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Frac) -> Frac {
        if self.is_zero() || o.is_zero() {
            return Frac::zero(self.field());
        }
        if self.den.is_one() && o.den.is_one() {
            return Frac::from_poly(self.num.mul(&o.num));
        }
        // cross-cancel keeps operands small
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = o.den.div_exact(&g1).unwrap();
        let n2 = o.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let lc = den.lead();
        let inv = self.field().inv(lc).unwrap();
        Frac { num: num.scale(inv), den: den.scale(inv) }
    }

    pub fn mul_poly(&self, p: &Poly) -> Frac {
        self.mul(&Frac::from_poly(p.clone()))
    }

    pub fn inv(&self) -> Result<Frac> {
        Frac::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Frac) -> Result<Frac> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow_i(&self, n: i64) -> Result<Frac> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        Ok(Coeff::pow(&base, n.unsigned_abs()))
    }

    /// x^{q^i}.
    pub fn frobenius(&self, i: u32) -> Frac {
        Frac { num: self.num.frobenius(i), den: self.den.frobenius(i) }
    }

    /// ℘-adic valuation; `prime` is assumed monic irreducible.
    pub fn ord(&self, prime: &Poly) -> Order {
        match self.num.split_valuation(prime) {
            None => Order::Infinity,
            Some((a, _)) => {
                let (b, _) = self.den.split_valuation(prime).unwrap();
                Order::Finite(a - b)
            }
        }
    }

    /// Valuation at the infinite place: deg(den) - deg(num).
    pub fn ord_inf(&self) -> Order {
        if self.is_zero() {
            Order::Infinity
        } else {
            Order::Finite(self.den.deg_i() - self.num.deg_i())
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }

    /// Accepts a fraction object, a bare polynomial object, or a field element.
    pub fn from_json(field: &Fq, v: &Value) -> Result<Frac> {
        if let (Some(n), Some(d)) = (v.get("num"), v.get("den")) {
            let (n, d) = (Poly::from_json(field, n)?, Poly::from_json(field, d)?);
            let f = Frac::new(n.clone(), d.clone())?;
            if f.num != n || f.den != d {
                return Err(Error::json(format!("fraction {v} is not in canonical form")));
            }
            return Ok(f);
        }
        if v.get("coeffs").is_some() {
            return Ok(Frac::from_poly(Poly::from_json(field, v)?));
        }
        Ok(Frac::from_poly(Poly::constant(field, field.elem_from_json(v)?)))
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<Poly> for Frac {
    fn from(p: Poly) -> Frac {
        Frac::from_poly(p)
    }
}

impl Coeff for Frac {
    fn zero_like(&self) -> Self {
        Frac::zero(self.field())
    }
    fn one_like(&self) -> Self {
        Frac::one(self.field())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        Frac::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Frac::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        Frac::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Frac::mul(self, rhs)
    }
    fn from_int(&self, n: i64) -> Self {
        Frac::from_poly(self.num.from_int(n))
    }
    fn characteristic(&self) -> u32 {
        self.field().p()
    }
    fn try_inv(&self) -> Option<Self> {
        self.inv().ok()
    }
    fn scale_int(&self, n: i64) -> Self {
        let c = self.field().from_int(n);
        if c == 0 {
            Frac::zero(self.field())
        } else {
            Frac { num: self.num.scale(c), den: self.den.clone() }
        }
    }
}

forward_binop!(Frac, Add, add);
forward_binop!(Frac, Sub, sub);
forward_binop!(Frac, Mul, mul);

impl std::ops::Neg for &Frac {
    type Output = Frac;
    fn neg(self) -> Frac {
        Frac::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let f = Fq::prime(3).unwrap();
        // (2θ^2+2θ)/(2θ) = θ+1
        let a = Frac::new(Poly::from_ints(&f, &[0, 2, 2]), Poly::from_ints(&f, &[0, 2])).unwrap();
        assert_eq!(a, Frac::from_poly(Poly::from_ints(&f, &[1, 1])));
        let b = Frac::new(Poly::one(&f), Poly::from_ints(&f, &[1, 2])).unwrap();
        assert!(b.den().is_monic());
        assert_eq!(b.num(), &Poly::from_ints(&f, &[2]));
        assert_eq!(Frac::new(Poly::one(&f), Poly::zero(&f)), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_ops() {
        let f = Fq::prime(5).unwrap();
        let a = Frac::new(Poly::from_ints(&f, &[1, 1]), Poly::from_ints(&f, &[0, 0, 1])).unwrap();
        let b = Frac::new(Poly::from_ints(&f, &[3]), Poly::from_ints(&f, &[1, 1])).unwrap();
        assert_eq!(&(&a + &b) - &b, a);
        assert_eq!((&a * &b).div(&b).unwrap(), a);
        assert_eq!(&a * &a.inv().unwrap(), Frac::one(&f));
    }

    #[test]
    fn valuations() {
        let f = Fq::prime(3).unwrap();
        let theta = Poly::theta(&f);
        let x = Frac::new(Poly::monomial(&f, 1, 3), Poly::from_ints(&f, &[1, 1])).unwrap();
        assert_eq!(x.ord(&theta), Order::Finite(3));
        let y = Frac::inv_poly(&Poly::monomial(&f, 1, 2)).unwrap();
        assert_eq!(y.ord(&theta), Order::Finite(-2));
        assert_eq!(Frac::zero(&f).ord(&theta), Order::Infinity);
        assert_eq!(x.ord_inf(), Order::Finite(-2));
    }

    #[test]
    fn json_forms() {
        let f = Fq::prime(3).unwrap();
        let x = Frac::new(Poly::one(&f), Poly::theta(&f)).unwrap();
        let v = x.to_json();
        assert_eq!(v.to_string(), r#"{"den":{"coeffs":[0,1]},"num":{"coeffs":[1]}}"#);
        assert_eq!(Frac::from_json(&f, &v).unwrap(), x);
        assert_eq!(Frac::from_json(&f, &serde_json::json!(2)).unwrap(), Frac::from_poly(Poly::constant(&f, 2)));
        let noncanon = serde_json::json!({"num":{"coeffs":[0,1]},"den":{"coeffs":[0,1]}});
        assert!(Frac::from_json(&f, &noncanon).is_err());
    }
}
