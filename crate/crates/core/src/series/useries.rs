//! Truncated power series Σ_{n<N} c_n u^n + O(u^N).

use std::fmt;

use serde_json::{json, Value};

use crate::algebra::{binom_mod_p, Coeff};
use crate::error::{Error, Result};

/// A power series known exactly modulo u^N, where N = `trunc()`.
///
/// Every operation reports the largest window it can certify from the
/// windows of its inputs; nothing beyond u^{N-1} is ever claimed.
#[derive(Clone, PartialEq)]
pub struct USeries<C: Coeff> {
    coeffs: Vec<C>,
    zero: C,
}

impl<C: Coeff> USeries<C> {
    /// Coefficients `coeffs` padded with zeros (or cut) to length `trunc`.
    pub fn new(zero: &C, mut coeffs: Vec<C>, trunc: usize) -> Self {
        coeffs.resize(trunc, zero.zero_like());
        USeries { coeffs, zero: zero.zero_like() }
    }

    pub fn zero(zero: &C, trunc: usize) -> Self {
        Self::new(zero, Vec::new(), trunc)
    }

    pub fn constant(c: C, trunc: usize) -> Self {
        let z = c.zero_like();
        Self::new(&z, vec![c], trunc)
    }

    pub fn one(zero: &C, trunc: usize) -> Self {
        Self::constant(zero.one_like(), trunc)
    }

    /// c·u^n, exact modulo u^trunc.
    pub fn monomial(c: C, n: usize, trunc: usize) -> Self {
        let z = c.zero_like();
        let mut v = vec![z.clone(); n.min(trunc)];
        v.push(c);
        Self::new(&z, v, trunc)
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len()
    }
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }
    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }
    pub fn zero_elem(&self) -> &C {
        &self.zero
    }
    /// Coefficient of u^n; `None` outside the certified window.
    pub fn coeff(&self, n: usize) -> Option<&C> {
        self.coeffs.get(n)
    }
    pub fn set_coeff(&mut self, n: usize, c: C) {
        if n < self.coeffs.len() {
            self.coeffs[n] = c;
        }
    }

    /// Index of the first nonzero coefficient, or `trunc()` if none is known.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.trunc())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_zero)
    }

    /// Reduce the window to min(trunc, n).
    pub fn truncate(&self, n: usize) -> Self {
        let mut s = self.clone();
        s.coeffs.truncate(n);
        s
    }

    /// Equality on the common window.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let n = self.trunc().min(other.trunc());
        self.coeffs[..n] == other.coeffs[..n]
    }

    pub fn map<D: Coeff>(&self, zero: &D, f: impl Fn(&C) -> D) -> USeries<D> {
        USeries { coeffs: self.coeffs.iter().map(f).collect(), zero: zero.zero_like() }
    }

    pub fn try_map<D: Coeff>(&self, zero: &D, f: impl Fn(&C) -> Result<D>) -> Result<USeries<D>> {
        Ok(USeries { coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()?, zero: zero.zero_like() })
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.trunc().min(o.trunc());
        let coeffs = (0..n).map(|i| self.coeffs[i].add(&o.coeffs[i])).collect();
        USeries { coeffs, zero: self.zero.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.trunc().min(o.trunc());
        let coeffs = (0..n).map(|i| self.coeffs[i].sub(&o.coeffs[i])).collect();
        USeries { coeffs, zero: self.zero.clone() }
    }

    pub fn neg(&self) -> Self {
        USeries { coeffs: self.coeffs.iter().map(Coeff::neg).collect(), zero: self.zero.clone() }
    }

    pub fn scale(&self, c: &C) -> Self {
        USeries { coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(), zero: self.zero.clone() }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        USeries { coeffs: self.coeffs.iter().map(|x| x.scale_int(n)).collect(), zero: self.zero.clone() }
    }

    /// Multiplication by u^k; the window grows by k.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![self.zero.clone(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        USeries { coeffs, zero: self.zero.clone() }
    }

    /// Window of a product: (f + O(u^Nf))(g + O(u^Ng)) is known modulo
    /// u^{min(Nf + v(g), Ng + v(f))}.
    pub fn product_window(&self, o: &Self) -> usize {
        (self.trunc() + o.valuation()).min(o.trunc() + self.valuation())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.product_window(o);
        let mut out = vec![self.zero.clone(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(n - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        USeries { coeffs: out, zero: self.zero.clone() }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(&self.zero, self.trunc());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.trunc();
        if n == 0 {
            return Ok(self.clone());
        }
        let c0_inv = self.coeffs[0]
            .try_inv()
            .ok_or_else(|| Error::NotInvertible(format!("constant term {:?}", self.coeffs[0])))?;
        let support: Vec<usize> = (1..n).filter(|&i| !self.coeffs[i].is_zero()).collect();
        let mut out: Vec<C> = Vec::with_capacity(n);
        out.push(c0_inv.clone());
        for k in 1..n {
            let mut acc = self.zero.clone();
            for &i in support.iter().take_while(|&&i| i <= k) {
                acc = acc.add(&self.coeffs[i].mul(&out[k - i]));
            }
            out.push(acc.mul(&c0_inv).neg());
        }
        Ok(USeries { coeffs: out, zero: self.zero.clone() })
    }

    /// self(inner), with inner(0) = 0. Horner evaluation; the window is
    /// min(N_self · v(inner), N_inner).
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.trunc() > 0 && !inner.coeffs[0].is_zero() {
            return Err(Error::arg("inner series of a composition must have zero constant term"));
        }
        let v = inner.valuation().max(1);
        let n = self.trunc().saturating_mul(v).min(inner.trunc());
        let inner = inner.truncate(n);
        let mut acc = Self::zero(&self.zero, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&inner);
            let mut padded = acc.coeffs;
            padded.resize(n, self.zero.clone());
            if n > 0 {
                padded[0] = padded[0].add(c);
            }
            acc = USeries { coeffs: padded, zero: self.zero.clone() };
        }
        Ok(acc.truncate(n))
    }

    /// Hyperderivative ∂_u^j: u^n ↦ binom(n, j) u^{n-j}. The window drops by j.
    pub fn hyperderivative(&self, j: usize) -> Self {
        let p = self.zero.characteristic();
        let n = self.trunc().saturating_sub(j);
        let coeffs = (0..n)
            .map(|m| {
                let b = binom_mod_p((m + j) as i64, j as u64, p);
                self.coeffs[m + j].scale_int(b as i64)
            })
            .collect();
        USeries { coeffs, zero: self.zero.clone() }
    }

    pub fn to_json_with(&self, var: &str, enc: impl Fn(&C) -> Value) -> Value {
        json!({
            "var": var,
            "tail": 0,
            "trunc": self.trunc(),
            "coeffs": self.coeffs.iter().map(enc).collect::<Vec<_>>(),
        })
    }

    /// Parses `{"var", "tail", "trunc", "coeffs"}`. A missing `trunc` means the
    /// coefficients form an exact polynomial, padded to `default_trunc`.
    pub fn from_json_with(
        v: &Value,
        zero: &C,
        default_trunc: usize,
        dec: impl Fn(&Value) -> Result<C>,
    ) -> Result<Self> {
        let arr = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::json("series needs a \"coeffs\" array"))?;
        if let Some(t) = v.get("tail") {
            if t.as_i64() != Some(0) {
                return Err(Error::json("power series must have tail 0"));
            }
        }
        let coeffs = arr.iter().map(dec).collect::<Result<Vec<_>>>()?;
        let trunc = match v.get("trunc") {
            Some(t) => {
                let t = t.as_u64().ok_or_else(|| Error::json("trunc must be a non-negative integer"))? as usize;
                if t != coeffs.len() {
                    return Err(Error::json(format!("trunc {t} disagrees with {} coefficients", coeffs.len())));
                }
                t
            }
            None => {
                if coeffs.len() > default_trunc {
                    coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1).max(default_trunc)
                } else {
                    default_trunc
                }
            }
        };
        Ok(Self::new(zero, coeffs, trunc))
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for USeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·u")?,
                _ => write!(f, "({c})·u^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(u^{})", self.trunc())
    }
}

impl<C: Coeff> fmt::Debug for USeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} + O(u^{})", self.coeffs, self.trunc())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fq, Frac, FqElem, Poly};

    fn fs(f: &Fq, c: &[u32], n: usize) -> USeries<FqElem> {
        let z = FqElem::new(f, 0);
        USeries::new(&z, c.iter().map(|&x| FqElem::new(f, x)).collect(), n)
    }

    #[test]
    fn geometric_series() {
        let f = Fq::prime(5).unwrap();
        let one_minus_u = fs(&f, &[1, 4], 4);
        assert_eq!(one_minus_u.inverse().unwrap(), fs(&f, &[1, 1, 1, 1], 4));
        assert!(fs(&f, &[0, 1], 4).inverse().is_err());
    }

    #[test]
    fn composition_by_hand() {
        // u^2 ∘ (u + u^2) = u^2 + 2u^3 + u^4
        let f = Fq::prime(5).unwrap();
        let outer = fs(&f, &[0, 0, 1], 4);
        let inner = fs(&f, &[0, 1, 1], 4);
        assert_eq!(outer.compose(&inner).unwrap(), fs(&f, &[0, 0, 1, 2], 4));
        assert!(outer.compose(&fs(&f, &[1, 1], 4)).is_err());
    }

    #[test]
    fn composition_window() {
        // f known mod u^3 composed with g = u^2 + ...: window min(3·2, 8) = 6
        let f = Fq::prime(3).unwrap();
        let outer = fs(&f, &[1, 1, 1], 3);
        let inner = fs(&f, &[0, 0, 1, 1], 8);
        assert_eq!(outer.compose(&inner).unwrap().trunc(), 6);
    }

    #[test]
    fn product_window_is_certified() {
        let f = Fq::prime(3).unwrap();
        let a = fs(&f, &[0, 0, 1], 5); // u^2 + O(u^5)
        let b = fs(&f, &[1, 1], 10);
        // (u^2 + O(u^5))(1 + u + O(u^10)) is known mod u^5
        assert_eq!(a.mul(&b).trunc(), 5);
        let c = fs(&f, &[0, 0, 0, 1], 10); // valuation 3
        assert_eq!(a.mul(&c).trunc(), 8);
    }

    #[test]
    fn hyperderivatives() {
        let f = Fq::prime(2).unwrap();
        let u2 = fs(&f, &[0, 0, 1], 6);
        assert!(u2.hyperderivative(1).is_zero());
        assert_eq!(u2.hyperderivative(0), u2);
        let f3 = Fq::prime(3).unwrap();
        assert_eq!(fs(&f3, &[0, 0, 1], 6).hyperderivative(1), fs(&f3, &[0, 2], 5));
    }

    #[test]
    fn json_round_trip() {
        let f = Fq::prime(3).unwrap();
        let z = Frac::zero(&f);
        let s = USeries::new(&z, vec![Frac::one(&f), Frac::inv_poly(&Poly::theta(&f)).unwrap()], 3);
        let v = s.to_json_with("u", Frac::to_json);
        let back = USeries::from_json_with(&v, &z, 0, |x| Frac::from_json(&f, x)).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_json_with("u", Frac::to_json).to_string(), v.to_string());
        let exact = serde_json::json!({"coeffs":[0,1]});
        let p = USeries::from_json_with(&exact, &z, 8, |x| Frac::from_json(&f, x)).unwrap();
        assert_eq!(p.trunc(), 8);
    }
}
