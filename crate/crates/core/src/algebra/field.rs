//! The constant field F_q.
//!
//! An element of F_q = F_p[x]/(m(x)) is stored as a `u32` whose base-p digits
//! are the coefficients of its residue, lowest degree first. The prime subfield
//! is therefore encoded as `0..p`, and for `e = 1` the encoding is the residue.
//! Multiplication goes through discrete log tables built from a generator
//! found by exhaustive search, so every field is cheap to copy and compare.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field size we are willing to tabulate.
pub const MAX_Q: u32 = 1 << 12;

/// Parameters fixing a concrete model of F_q, q = p^e.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldParams {
    pub p: u32,
    pub e: u32,
    /// Monic irreducible modulus over F_p, ascending coefficients, length e+1.
    pub modulus: Vec<u32>,
}

impl FieldParams {
    /// Prime field F_p.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// F_{p^e}; `modulus` defaults to the smallest irreducible in the
    /// ordering used by [`monic_polys_fp`].
    pub fn new(p: u32, e: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidField("extension degree must be >= 1".into()));
        }
        let q = (p as u64).checked_pow(e).filter(|&q| q <= MAX_Q as u64);
        if q.is_none() {
            return Err(Error::InvalidField(format!("{p}^{e} exceeds {MAX_Q}")));
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != e as usize + 1 || m[e as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidField(format!(
                        "modulus {m:?} is not a monic degree-{e} polynomial over F_{p}"
                    )));
                }
                if !is_irreducible_fp(&m, p) {
                    return Err(Error::InvalidField(format!("modulus {m:?} is reducible over F_{p}")));
                }
                m
            }
            None => monic_polys_fp(p, e as usize)
                .find(|m| is_irreducible_fp(m, p))
                .expect("irreducible polynomials exist in every degree"),
        };
        Ok(FieldParams { p, e, modulus })
    }

    /// Parse q as a prime power and use the default modulus.
    pub fn from_q(q: u32) -> Result<Self> {
        for p in 2..=q {
            if q % p == 0 {
                let mut e = 0;
                let mut r = q;
                while r % p == 0 {
                    r /= p;
                    e += 1;
                }
                if r != 1 {
                    break;
                }
                return Self::new(p, e, None);
            }
        }
        Err(Error::InvalidField(format!("{q} is not a prime power")))
    }

    pub fn q(&self) -> u32 {
        self.p.pow(self.e)
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Monic degree-`deg` polynomials over F_p, ascending coefficient vectors,
/// ordered by the integer `sum c_i p^i` of their lower coefficients.
pub(crate) fn monic_polys_fp(p: u32, deg: usize) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(deg as u32);
    (0..count).map(move |mut idx| {
        let mut v = Vec::with_capacity(deg + 1);
        for _ in 0..deg {
            v.push((idx % p as u64) as u32);
            idx /= p as u64;
        }
        v.push(1);
        v
    })
}

fn fp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv_lead = fp_inv(b[db], p);
    while r.len() > db {
        let lead = r[r.len() - 1];
        if lead != 0 {
            let f = lead * inv_lead % p;
            let shift = r.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - f * bc % p) % p;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn fp_inv(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Trial division by every monic polynomial of degree <= deg/2.
fn is_irreducible_fp(m: &[u32], p: u32) -> bool {
    let deg = m.len() - 1;
    (1..=deg / 2).all(|d| monic_polys_fp(p, d).all(|f| !fp_rem(m, &f, p).is_empty()))
}

struct FieldData {
    params: FieldParams,
    q: u32,
    /// exp[i] = g^i for i in 0..2(q-1)
    exp: Vec<u32>,
    /// log[a] for a != 0
    log: Vec<u32>,
    /// digit-wise addition table, only for proper extensions
    add: Option<Vec<u32>>,
    neg: Vec<u32>,
}

/// Shared handle to a tabulated model of F_q. Cloning is a reference bump.
#[derive(Clone)]
pub struct Fq(Arc<FieldData>);

impl PartialEq for Fq {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.params == other.0.params
    }
}
impl Eq for Fq {}

impl fmt::Debug for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q())
    }
}

impl Fq {
    pub fn new(params: FieldParams) -> Self {
        let p = params.p;
        let e = params.e as usize;
        let q = params.q();
        let to_digits = |mut a: u32| -> Vec<u32> {
            (0..e)
                .map(|_| {
                    let d = a % p;
                    a /= p;
                    d
                })
                .collect()
        };
        let from_digits = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let slow_mul = |a: u32, b: u32| -> u32 {
            let (da, db) = (to_digits(a), to_digits(b));
            let mut prod = vec![0u32; 2 * e];
            for (i, &x) in da.iter().enumerate() {
                for (j, &y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let mut r = fp_rem(&prod, &params.modulus, p);
            r.resize(e, 0);
            from_digits(&r)
        };
        let order = |g: u32| -> u32 {
            let mut x = g;
            let mut k = 1;
            while x != 1 {
                x = slow_mul(x, g);
                k += 1;
            }
            k
        };
        let generator = (1..q).find(|&g| order(g) == q - 1).expect("F_q^* is cyclic");
        let mut exp = vec![0u32; 2 * (q as usize - 1)];
        let mut log = vec![0u32; q as usize];
        let mut x = 1;
        for i in 0..(q as usize - 1) {
            exp[i] = x;
            exp[i + q as usize - 1] = x;
            log[x as usize] = i as u32;
            x = slow_mul(x, generator);
        }
        let add = (e > 1).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                let da = to_digits(a);
                for b in 0..q {
                    let db = to_digits(b);
                    let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                    t[(a * q + b) as usize] = from_digits(&s);
                }
            }
            t
        });
        let neg = (0..q)
            .map(|a| {
                let d: Vec<u32> = to_digits(a).iter().map(|&c| (p - c) % p).collect();
                from_digits(&d)
            })
            .collect();
        Fq(Arc::new(FieldData { params, q, exp, log, add, neg }))
    }

    pub fn prime(p: u32) -> Result<Self> {
        Ok(Self::new(FieldParams::prime(p)?))
    }

    pub fn from_q(q: u32) -> Result<Self> {
        Ok(Self::new(FieldParams::from_q(q)?))
    }

    pub fn params(&self) -> &FieldParams {
        &self.0.params
    }
    #[inline]
    pub fn p(&self) -> u32 {
        self.0.params.p
    }
    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }
    pub fn degree(&self) -> u32 {
        self.0.params.e
    }
    pub fn is_prime_field(&self) -> bool {
        self.0.add.is_none()
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.0.add {
            None => {
                let s = a + b;
                if s >= self.0.q {
                    s - self.0.q
                } else {
                    s
                }
            }
            Some(t) => t[(a * self.0.q + b) as usize],
        }
    }
    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.0.neg[a as usize]
    }
    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }
    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let d = &*self.0;
        d.exp[(d.log[a as usize] + d.log[b as usize]) as usize]
    }
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let d = &*self.0;
        let l = d.log[a as usize];
        Some(if l == 0 { 1 } else { d.exp[(d.q - 1 - l) as usize] })
    }
    pub fn pow(&self, a: u32, n: u64) -> u32 {
        if n == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let d = &*self.0;
        let l = (d.log[a as usize] as u64 * (n % (d.q as u64 - 1))) % (d.q as u64 - 1);
        d.exp[l as usize]
    }
    /// Image of an integer under Z -> F_p -> F_q.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p() as i64) as u32
    }
    /// Base-p digits of an encoded element (coefficients over F_p).
    pub fn digits(&self, a: u32) -> Vec<u32> {
        let p = self.p();
        let mut a = a;
        (0..self.degree())
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }
    pub fn from_digits(&self, d: &[u32]) -> Result<u32> {
        let p = self.p();
        if d.len() != self.degree() as usize || d.iter().any(|&c| c >= p) {
            return Err(Error::json(format!("{d:?} is not an element of {self:?}")));
        }
        Ok(d.iter().rev().fold(0, |acc, &c| acc * p + c))
    }
    /// All elements, in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q()
    }

    pub fn elem_to_json(&self, a: u32) -> serde_json::Value {
        if self.is_prime_field() {
            serde_json::Value::from(a)
        } else {
            serde_json::Value::from(self.digits(a))
        }
    }

    pub fn elem_from_json(&self, v: &serde_json::Value) -> Result<u32> {
        match v {
            serde_json::Value::Number(n) => {
                let x = n.as_i64().ok_or_else(|| Error::json(format!("bad field element {n}")))?;
                if self.is_prime_field() {
                    if x < 0 || x >= self.q() as i64 {
                        return Err(Error::json(format!("{x} out of range for {self:?}")));
                    }
                    Ok(x as u32)
                } else {
                    // integers denote prime-subfield elements
                    if x < 0 || x >= self.p() as i64 {
                        return Err(Error::json(format!("{x} is not in the prime field of {self:?}")));
                    }
                    Ok(x as u32)
                }
            }
            serde_json::Value::Array(a) => {
                let d = a
                    .iter()
                    .map(|x| x.as_u64().map(|x| x as u32).ok_or_else(|| Error::json("bad digit")))
                    .collect::<Result<Vec<_>>>()?;
                self.from_digits(&d)
            }
            other => Err(Error::json(format!("expected a field element, got {other}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli() {
        assert_eq!(FieldParams::new(2, 2, None).unwrap().modulus, vec![1, 1, 1]);
        assert_eq!(FieldParams::new(3, 2, None).unwrap().modulus, vec![1, 0, 1]);
        assert!(FieldParams::new(2, 2, Some(vec![1, 0, 1])).is_err());
        assert!(FieldParams::new(4, 1, None).is_err());
        assert_eq!(FieldParams::from_q(9).unwrap().e, 2);
        assert!(FieldParams::from_q(12).is_err());
    }

    #[test]
    fn field_axioms_exhaustive() {
        for q in [2, 3, 4, 5, 8, 9] {
            let f = Fq::from_q(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                // Frobenius x -> x^q is the identity on F_q
                assert_eq!(f.pow(a, q as u64), a);
                for b in f.elements() {
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn json_elements() {
        let f = Fq::from_q(4).unwrap();
        let v = f.elem_to_json(3);
        assert_eq!(v, serde_json::json!([1, 1]));
        assert_eq!(f.elem_from_json(&v).unwrap(), 3);
        assert!(f.elem_from_json(&serde_json::json!([2, 0])).is_err());
    }
}
