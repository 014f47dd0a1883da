//! Dense polynomials over F_q: the ring A = F_q[θ].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde_json::{json, Value};

use super::coeff::Coeff;
use super::field::Fq;
use crate::error::{Error, Result};

/// Operand length above which multiplication switches to Karatsuba.
const KARATSUBA_THRESHOLD: usize = 48;

/// An element of A = F_q[θ]. Coefficients are ascending; no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    field: Fq,
    coeffs: Vec<u32>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}
impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl Poly {
    pub fn from_coeffs(field: &Fq, mut coeffs: Vec<u32>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < field.q()));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    /// Coefficients given as integers, reduced into the prime subfield.
    pub fn from_ints(field: &Fq, ints: &[i64]) -> Self {
        Self::from_coeffs(field, ints.iter().map(|&n| field.from_int(n)).collect())
    }

    pub fn zero(field: &Fq) -> Self {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }
    pub fn one(field: &Fq) -> Self {
        Self::constant(field, 1)
    }
    pub fn constant(field: &Fq, c: u32) -> Self {
        Self::from_coeffs(field, vec![c])
    }
    /// The variable θ.
    pub fn theta(field: &Fq) -> Self {
        Self::monomial(field, 1, 1)
    }
    pub fn monomial(field: &Fq, c: u32, n: usize) -> Self {
        let mut v = vec![0; n + 1];
        v[n] = c;
        Self::from_coeffs(field, v)
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    /// Degree with deg(0) = -1, convenient for comparisons.
    pub fn deg_i(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }
    pub fn lead(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }
    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }
    /// Order of vanishing at θ = 0.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    fn same_field(&self, other: &Poly) {
        debug_assert!(self.field == other.field, "operands over different fields");
    }

    pub fn add(&self, other: &Poly) -> Poly {
        self.same_field(other);
        let f = &self.field;
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() { (self, other) } else { (other, self) };
        let mut v = long.coeffs.clone();
        for (i, &c) in short.coeffs.iter().enumerate() {
            v[i] = f.add(v[i], c);
        }
        Poly::from_coeffs(f, v)
    }

    pub fn neg(&self) -> Poly {
        let f = &self.field;
        Poly { field: f.clone(), coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u32) -> Poly {
        let f = &self.field;
        Poly::from_coeffs(f, self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }

    /// Multiplication by θ^n.
    pub fn shift(&self, n: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![0; n];
        v.extend_from_slice(&self.coeffs);
        Poly { field: self.field.clone(), coeffs: v }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        self.same_field(other);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let v = mul_slices(&self.field, &self.coeffs, &other.coeffs);
        Poly::from_coeffs(&self.field, v)
    }

    pub fn square(&self) -> Poly {
        self.mul(self)
    }

    pub fn pow(&self, mut n: u64) -> Poly {
        let mut acc = Poly::one(&self.field);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// a^{q^i}, computed as a(θ^{q^i}) since coefficients are fixed by Frobenius.
    pub fn frobenius(&self, i: u32) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let step = (self.field.q() as usize).pow(i);
        let mut v = vec![0; (self.coeffs.len() - 1) * step + 1];
        for (j, &c) in self.coeffs.iter().enumerate() {
            v[j * step] = c;
        }
        Poly { field: self.field.clone(), coeffs: v }
    }

    /// Euclidean division: `(quotient, remainder)` with deg(rem) < deg(divisor).
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let db = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv_lead = f.inv(divisor.lead()).expect("nonzero leading coefficient");
        let mut r = self.coeffs.clone();
        let mut quot = vec![0u32; r.len() - db];
        for k in (0..quot.len()).rev() {
            let c = f.mul(r[k + db], inv_lead);
            quot[k] = c;
            if c != 0 {
                for (i, &d) in divisor.coeffs.iter().enumerate() {
                    r[k + i] = f.sub(r[k + i], f.mul(c, d));
                }
            }
        }
        r.truncate(db);
        Ok((Poly::from_coeffs(f, quot), Poly::from_coeffs(f, r)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Quotient when `divisor` is known to divide `self`.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(divisor)?;
        if !r.is_zero() {
            return Err(Error::arg(format!("{divisor} does not divide {self}")));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Poly) -> bool {
        !self.is_zero() && other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Normalize to leading coefficient 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.field.inv(self.lead()) {
            Some(inv) if inv != 1 => self.scale(inv),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclid: returns (g, s, t) with s·self + t·other = g, g monic.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (qt, r) = r0.divmod(&r1).expect("nonzero divisor");
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&qt.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&qt.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match f.inv(r0.lead()) {
            Some(inv) => (r0.scale(inv), s0.scale(inv), t0.scale(inv)),
            None => (r0, s0, t0),
        }
    }

    /// self^n mod m.
    pub fn pow_mod(&self, mut n: u64, m: &Poly) -> Result<Poly> {
        let mut acc = Poly::one(&self.field).rem(m)?;
        let mut base = self.rem(m)?;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.square().rem(m)?;
            }
        }
        Ok(acc)
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Composition self(g).
    pub fn compose(&self, g: &Poly) -> Poly {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(f), |acc, &c| acc.mul(g).add(&Poly::constant(f, c)))
    }

    /// Rabin's test: θ^{q^n} ≡ θ mod f and gcd(θ^{q^{n/r}} - θ, f) = 1 for primes r | n.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let f = &self.field;
        let q = f.q() as u64;
        let theta = Poly::theta(f);
        let mut frob = vec![theta.rem(self).unwrap()];
        for _ in 0..n {
            let next = frob.last().unwrap().pow_mod(q, self).unwrap();
            frob.push(next);
        }
        if frob[n] != theta.rem(self).unwrap() {
            return false;
        }
        let mut m = n;
        let mut primes = Vec::new();
        let mut d = 2;
        while d * d <= m {
            if m % d == 0 {
                primes.push(d);
                while m % d == 0 {
                    m /= d;
                }
            }
            d += 1;
        }
        if m > 1 {
            primes.push(m);
        }
        primes.into_iter().all(|r| frob[n / r].sub(&theta).gcd(self).is_one())
    }

    /// Largest e with ℘^e | self, and the cofactor. `None` for zero.
    pub fn split_valuation(&self, prime: &Poly) -> Option<(i64, Poly)> {
        if self.is_zero() {
            return None;
        }
        let mut e = 0;
        let mut cur = self.clone();
        loop {
            let (qt, r) = cur.divmod(prime).expect("nonzero prime");
            if !r.is_zero() {
                return Some((e, cur));
            }
            cur = qt;
            e += 1;
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "coeffs": self.coeffs.iter().map(|&c| self.field.elem_to_json(c)).collect::<Vec<_>>() })
    }

    pub fn from_json(field: &Fq, v: &Value) -> Result<Poly> {
        let arr = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::json(format!("expected {{\"coeffs\":[...]}}, got {v}")))?;
        let coeffs = arr.iter().map(|c| field.elem_from_json(c)).collect::<Result<Vec<_>>>()?;
        Ok(Poly::from_coeffs(field, coeffs))
    }

    /// Lexicographic comparison of (degree, coefficients from the top).
    pub fn cmp_lex(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

fn mul_slices(f: &Fq, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) < KARATSUBA_THRESHOLD {
        return schoolbook(f, a, b);
    }
    karatsuba(f, a, b)
}

fn schoolbook(f: &Fq, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[i + j] = f.add(out[i + j], f.mul(x, y));
            }
        }
    }
    out
}

fn add_into(f: &Fq, dst: &mut [u32], src: &[u32]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = f.add(*d, s);
    }
}

fn sub_into(f: &Fq, dst: &mut [u32], src: &[u32]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = f.sub(*d, s);
    }
}

fn karatsuba(f: &Fq, a: &[u32], b: &[u32]) -> Vec<u32> {
    let n = a.len().max(b.len());
    let half = n / 2;
    let split = |x: &[u32]| -> (Vec<u32>, Vec<u32>) {
        if x.len() <= half {
            (x.to_vec(), Vec::new())
        } else {
            (x[..half].to_vec(), x[half..].to_vec())
        }
    };
    let (a0, a1) = split(a);
    let (b0, b1) = split(b);
    let z0 = mul_slices(f, &a0, &b0);
    let z2 = mul_slices(f, &a1, &b1);
    let sum = |x: &[u32], y: &[u32]| -> Vec<u32> {
        let mut s = vec![0u32; x.len().max(y.len())];
        add_into(f, &mut s, x);
        add_into(f, &mut s, y);
        s
    };
    let mut z1 = mul_slices(f, &sum(&a0, &a1), &sum(&b0, &b1));
    sub_into(f, &mut z1, &z0);
    sub_into(f, &mut z1, &z2);
    let mut out = vec![0u32; a.len() + b.len() - 1];
    add_into(f, &mut out, &z0);
    add_into(f, &mut out[half..], &z1);
    if !z2.is_empty() {
        add_into(f, &mut out[2 * half..], &z2);
    }
    out
}

/// All monic polynomials of degree `d`, ordered lexicographically by their
/// coefficient tuples read from the top (θ^d, θ^d+1, ..., for q = 2).
pub fn monic_enum(field: &Fq, d: usize) -> Vec<Poly> {
    monic_iter(field, d).collect()
}

/// Lazy form of [`monic_enum`].
pub fn monic_iter(field: &Fq, d: usize) -> impl Iterator<Item = Poly> + '_ {
    let q = field.q() as u64;
    (0..q.pow(d as u32)).map(move |mut idx| {
        let mut v = Vec::with_capacity(d + 1);
        for _ in 0..d {
            v.push((idx % q) as u32);
            idx /= q;
        }
        v.push(1);
        Poly::from_coeffs(field, v)
    })
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = if self.field.is_prime_field() {
                c.to_string()
            } else {
                format!("{:?}", self.field.digits(c))
            };
            match (i, c) {
                (0, _) => write!(f, "{cs}")?,
                (1, 1) => write!(f, "θ")?,
                (1, _) => write!(f, "{cs}θ")?,
                (_, 1) => write!(f, "θ^{i}")?,
                _ => write!(f, "{cs}θ^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Coeff for Poly {
    fn zero_like(&self) -> Self {
        Poly::zero(&self.field)
    }
    fn one_like(&self) -> Self {
        Poly::one(&self.field)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        Poly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Poly::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Poly::mul(self, rhs)
    }
    fn from_int(&self, n: i64) -> Self {
        Poly::constant(&self.field, self.field.from_int(n))
    }
    fn characteristic(&self) -> u32 {
        self.field.p()
    }
    fn try_inv(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.field.inv(self.coeffs[0]).map(|c| Poly::constant(&self.field, c))
        } else {
            None
        }
    }
    fn pow(&self, n: u64) -> Self {
        Poly::pow(self, n)
    }
    fn scale_int(&self, n: i64) -> Self {
        self.scale(self.field.from_int(n))
    }
}

macro_rules! forward_binop {
    ($ty:ty, $tr:ident, $m:ident) => {
        impl std::ops::$tr<&$ty> for &$ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                <$ty>::$m(self, rhs)
            }
        }
    };
}
pub(crate) use forward_binop;

forward_binop!(Poly, Add, add);
forward_binop!(Poly, Sub, sub);
forward_binop!(Poly, Mul, mul);

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(f: &Fq, c: &[i64]) -> Poly {
        Poly::from_ints(f, c)
    }

    #[test]
    fn freshmans_dream_f2() {
        let f = Fq::prime(2).unwrap();
        let a = p(&f, &[1, 1]);
        assert_eq!(&a * &a, p(&f, &[1, 0, 1]));
    }

    #[test]
    fn gcd_common_factor() {
        let f = Fq::prime(3).unwrap();
        let a = p(&f, &[0, -1, 1]);
        assert_eq!(a.gcd(&Poly::theta(&f)), Poly::theta(&f));
    }

    #[test]
    fn long_division_by_hand() {
        // θ^3 = θ(θ^2+1) + θ over F_2
        let f = Fq::prime(2).unwrap();
        let (q, r) = p(&f, &[0, 0, 0, 1]).divmod(&p(&f, &[1, 0, 1])).unwrap();
        assert_eq!(q, Poly::theta(&f));
        assert_eq!(r, Poly::theta(&f));
        assert_eq!(p(&f, &[1]).divmod(&Poly::zero(&f)), Err(Error::DivisionByZero));
    }

    #[test]
    fn monic_enumeration_order() {
        let f2 = Fq::prime(2).unwrap();
        assert_eq!(monic_enum(&f2, 1), vec![p(&f2, &[0, 1]), p(&f2, &[1, 1])]);
        assert_eq!(
            monic_enum(&f2, 2),
            vec![p(&f2, &[0, 0, 1]), p(&f2, &[1, 0, 1]), p(&f2, &[0, 1, 1]), p(&f2, &[1, 1, 1])]
        );
        let f3 = Fq::prime(3).unwrap();
        assert_eq!(monic_enum(&f3, 0), vec![Poly::one(&f3)]);
        assert_eq!(monic_enum(&f3, 3).len(), 27);
    }

    #[test]
    fn karatsuba_matches_schoolbook() {
        let f = Fq::from_q(9).unwrap();
        let a: Vec<u32> = (0..131).map(|i| (i * 7 + 3) % 9).collect();
        let b: Vec<u32> = (0..97).map(|i| (i * i + 1) % 9).collect();
        assert_eq!(karatsuba(&f, &a, &b), schoolbook(&f, &a, &b));
    }

    #[test]
    fn irreducibility() {
        let f = Fq::prime(2).unwrap();
        assert!(p(&f, &[1, 1, 1]).is_irreducible());
        assert!(!p(&f, &[1, 0, 1]).is_irreducible());
        assert!(p(&f, &[1, 1, 0, 1]).is_irreducible());
        let f3 = Fq::prime(3).unwrap();
        assert!(p(&f3, &[1, 0, 1]).is_irreducible());
        assert!(!p(&f3, &[2, 0, 1]).is_irreducible());
        let count = monic_enum(&f3, 2).iter().filter(|a| a.is_irreducible()).count();
        assert_eq!(count, 3);
    }

    #[test]
    fn frobenius_is_q_power() {
        let f = Fq::from_q(4).unwrap();
        let a = Poly::from_coeffs(&f, vec![2, 3, 1]);
        assert_eq!(a.frobenius(1), a.pow(4));
        assert_eq!(a.frobenius(2), a.pow(16));
    }

    #[test]
    fn ext_gcd_bezout() {
        let f = Fq::prime(5).unwrap();
        let a = p(&f, &[1, 2, 3, 4]);
        let b = p(&f, &[3, 0, 1]);
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn json_round_trip() {
        let f = Fq::prime(3).unwrap();
        let a = p(&f, &[1, 0, 2]);
        assert_eq!(a.to_json().to_string(), r#"{"coeffs":[1,0,2]}"#);
        assert_eq!(Poly::from_json(&f, &a.to_json()).unwrap(), a);
    }
}
