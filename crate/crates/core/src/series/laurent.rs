//! Truncated Laurent series Σ_{n=t}^{P-1} c_n x^n + O(x^P).

use std::fmt;

use serde_json::{json, Value};

use super::useries::USeries;
use crate::algebra::{binom_mod_p, Coeff, FqElem, Frac, Poly};
use crate::error::{Error, Result};

/// Largest admissible principal part: the tail never drops below -64.
pub const PRINCIPAL_CAP: i64 = 64;

/// A Laurent series known for exponents `tail..prec`.
///
/// # Panics
///
/// Operations panic if a result would need a principal part longer than
/// [`PRINCIPAL_CAP`]; this is a capacity limit, like an allocation failure.
#[derive(Clone, PartialEq)]
pub struct Laurent<C: Coeff> {
    tail: i64,
    coeffs: Vec<C>,
    zero: C,
}

/// Elements of K_∞ = F_q((1/θ)), as Laurent series in x = 1/θ.
pub type InfLaurent = Laurent<FqElem>;

impl<C: Coeff> Laurent<C> {
    pub fn new(zero: &C, tail: i64, coeffs: Vec<C>) -> Self {
        Laurent { tail, coeffs, zero: zero.zero_like() }.checked()
    }

    pub fn zero(zero: &C, prec: i64) -> Self {
        let tail = prec.min(0);
        Self::new(zero, tail, vec![zero.zero_like(); (prec - tail) as usize])
    }

    /// c·x^e, exact below x^prec.
    pub fn monomial(c: C, e: i64, prec: i64) -> Self {
        let z = c.zero_like();
        if e >= prec {
            return Self::zero(&z, prec);
        }
        let mut v = vec![c];
        v.resize((prec - e) as usize, z.clone());
        Self::new(&z, e, v)
    }

    /// x^shift · s.
    pub fn from_series(s: &USeries<C>, shift: i64) -> Self {
        Self::new(s.zero_elem(), shift, s.coeffs().to_vec())
    }

    fn checked(mut self) -> Self {
        let lead = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.coeffs.len());
        if lead > 0 && self.tail < 0 {
            // drop known-zero principal terms so the cap reflects the true pole order
            let drop = lead.min((-self.tail) as usize);
            self.coeffs.drain(..drop);
            self.tail += drop as i64;
        }
        assert!(self.tail >= -PRINCIPAL_CAP, "principal part exceeds cap ({})", self.tail);
        self
    }

    pub fn tail(&self) -> i64 {
        self.tail
    }
    /// First unknown exponent.
    pub fn prec(&self) -> i64 {
        self.tail + self.coeffs.len() as i64
    }
    pub fn zero_elem(&self) -> &C {
        &self.zero
    }
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of x^e; zero below the tail, `None` from `prec()` on.
    pub fn coeff(&self, e: i64) -> Option<C> {
        if e >= self.prec() {
            None
        } else if e < self.tail {
            Some(self.zero.clone())
        } else {
            Some(self.coeffs[(e - self.tail) as usize].clone())
        }
    }

    /// Exponent of the first nonzero coefficient, or `prec()` if none is known.
    pub fn valuation(&self) -> i64 {
        self.tail + self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.coeffs.len()) as i64
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coeff::is_zero)
    }

    /// Reduce the window to exponents below min(prec, p).
    pub fn truncate(&self, p: i64) -> Self {
        let mut s = self.clone();
        let keep = (p - s.tail).clamp(0, s.coeffs.len() as i64) as usize;
        s.coeffs.truncate(keep);
        s
    }

    /// Equality on the common window.
    pub fn agrees_with(&self, o: &Self) -> bool {
        let lo = self.tail.min(o.tail);
        let hi = self.prec().min(o.prec());
        (lo..hi).all(|e| self.coeff(e) == o.coeff(e))
    }

    fn from_fn(&self, tail: i64, prec: i64, f: impl Fn(i64) -> C) -> Self {
        let coeffs = (tail..prec.max(tail)).map(f).collect();
        Laurent { tail, coeffs, zero: self.zero.clone() }.checked()
    }

    pub fn add(&self, o: &Self) -> Self {
        let (t, p) = (self.tail.min(o.tail), self.prec().min(o.prec()));
        self.from_fn(t, p, |e| self.coeff(e).unwrap().add(&o.coeff(e).unwrap()))
    }

    pub fn sub(&self, o: &Self) -> Self {
        let (t, p) = (self.tail.min(o.tail), self.prec().min(o.prec()));
        self.from_fn(t, p, |e| self.coeff(e).unwrap().sub(&o.coeff(e).unwrap()))
    }

    pub fn neg(&self) -> Self {
        Laurent { tail: self.tail, coeffs: self.coeffs.iter().map(Coeff::neg).collect(), zero: self.zero.clone() }
    }

    pub fn scale(&self, c: &C) -> Self {
        Laurent { tail: self.tail, coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(), zero: self.zero.clone() }
            .checked()
    }

    /// x^k · self.
    pub fn shift(&self, k: i64) -> Self {
        Laurent { tail: self.tail + k, coeffs: self.coeffs.clone(), zero: self.zero.clone() }.checked()
    }

    /// The part from x^v on, as (v, power series in x with window prec - v).
    fn split(&self) -> (i64, USeries<C>) {
        let v = self.valuation();
        let start = (v - self.tail) as usize;
        let len = self.coeffs.len() - start;
        (v, USeries::new(&self.zero, self.coeffs[start..].to_vec(), len))
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (va, a) = self.split();
        let (vb, b) = o.split();
        Self::from_series(&a.mul(&b), va + vb)
    }

    /// Inverse; the leading known coefficient must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let (v, s) = self.split();
        if s.trunc() == 0 {
            return Err(Error::InsufficientPrecision("no nonzero coefficient in window".into()));
        }
        Ok(Self::from_series(&s.inverse()?, -v))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        if e == 0 {
            let rel = self.prec() - self.valuation();
            return Self::monomial(self.zero.one_like(), 0, rel);
        }
        let mut acc: Option<Self> = None;
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc.unwrap()
    }

    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inverse()?.pow(e.unsigned_abs()))
        }
    }

    /// ∂_x^j: x^n ↦ binom(n, j) x^{n-j}, negative n included.
    pub fn hyperderivative(&self, j: usize) -> Self {
        let p = self.zero.characteristic();
        let j64 = j as i64;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.scale_int(binom_mod_p(self.tail + i as i64, j as u64, p) as i64))
            .collect();
        Laurent { tail: self.tail - j64, coeffs, zero: self.zero.clone() }.checked()
    }

    /// The power series part, provided there is no principal part.
    pub fn to_series(&self) -> Result<USeries<C>> {
        if self.valuation() < 0 {
            return Err(Error::arg("Laurent series has a nonzero principal part"));
        }
        let n = self.prec().max(0) as usize;
        Ok(USeries::new(&self.zero, (0..n as i64).map(|e| self.coeff(e).unwrap()).collect(), n))
    }

    pub fn map<D: Coeff>(&self, zero: &D, f: impl Fn(&C) -> D) -> Laurent<D> {
        Laurent { tail: self.tail, coeffs: self.coeffs.iter().map(f).collect(), zero: zero.zero_like() }.checked()
    }

    pub fn to_json_with(&self, var: &str, enc: impl Fn(&C) -> Value) -> Value {
        json!({
            "var": var,
            "tail": self.tail,
            "trunc": self.prec(),
            "coeffs": self.coeffs.iter().map(enc).collect::<Vec<_>>(),
        })
    }

    pub fn from_json_with(v: &Value, zero: &C, dec: impl Fn(&Value) -> Result<C>) -> Result<Self> {
        let tail = v.get("tail").and_then(Value::as_i64).ok_or_else(|| Error::json("missing integer \"tail\""))?;
        let arr = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::json("series needs a \"coeffs\" array"))?;
        let coeffs = arr.iter().map(dec).collect::<Result<Vec<_>>>()?;
        if let Some(t) = v.get("trunc") {
            if t.as_i64() != Some(tail + coeffs.len() as i64) {
                return Err(Error::json("trunc disagrees with tail and coefficient count"));
            }
        }
        if tail < -PRINCIPAL_CAP {
            return Err(Error::json("principal part exceeds cap"));
        }
        let out = Laurent { tail, coeffs, zero: zero.zero_like() };
        Ok(out)
    }
}

impl<C: Coeff> fmt::Debug for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{}·{:?} + O(x^{})", self.tail, self.coeffs, self.prec())
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for Laurent<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                write!(f, "({c})·x^{} + ", self.tail + i as i64)?;
            }
        }
        write!(f, "O(x^{})", self.prec())
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

impl InfLaurent {
    /// A polynomial at the infinite place: θ^d ã(x) with ã the reversal,
    /// known to `rel` coefficients past the leading one.
    pub fn from_poly(a: &Poly, rel: usize) -> Result<Self> {
        let field = a.field();
        let z = FqElem::new(field, 0);
        let Some(d) = a.degree() else {
            return Err(Error::arg("zero has no expansion with relative precision"));
        };
        let coeffs = (0..rel).map(|i| FqElem::new(field, if i <= d { a.coeff(d - i) } else { 0 })).collect();
        Ok(Laurent { tail: -(d as i64), coeffs, zero: z })
    }

    /// x ∈ K expanded in 1/θ with `rel` coefficients from the leading term.
    pub fn from_frac(x: &Frac, rel: usize) -> Result<Self> {
        let n = Self::from_poly(x.num(), rel)?;
        let d = Self::from_poly(x.den(), rel)?;
        Ok(n.mul(&d.inverse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Fq;

    fn fe(f: &Fq, v: u32) -> FqElem {
        FqElem::new(f, v)
    }

    #[test]
    fn hyperderivative_of_inverse() {
        // ∂^j(z^{-1}) = (-1)^j z^{-1-j}
        for p in [2u32, 3, 5] {
            let f = Fq::prime(p).unwrap();
            let zinv = Laurent::monomial(fe(&f, 1), -1, 10);
            for j in 0..8 {
                let d = zinv.hyperderivative(j);
                let sign = if j % 2 == 0 { 1 } else { p - 1 };
                assert_eq!(d.coeff(-1 - j as i64), Some(fe(&f, sign)));
                assert_eq!(d.valuation(), -1 - j as i64);
                assert_eq!(d.prec(), 10 - j as i64);
            }
        }
    }

    #[test]
    fn inverse_and_windows() {
        let f = Fq::prime(3).unwrap();
        // z + z^2 + O(z^6), inverse z^{-1}(1 - z + z^2 - ...) + O(z^4)
        let s = Laurent::new(&fe(&f, 0), 1, vec![fe(&f, 1), fe(&f, 1), fe(&f, 0), fe(&f, 0), fe(&f, 0)]);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.tail(), -1);
        assert_eq!(inv.prec(), 4);
        let one = s.mul(&inv);
        assert_eq!(one.coeff(0), Some(fe(&f, 1)));
        assert!((1..one.prec()).all(|e| one.coeff(e).unwrap().is_zero()));
    }

    #[test]
    fn infinite_place_expansion() {
        let f = Fq::prime(3).unwrap();
        // 1/(θ - 1) = x/(1 - x) = x + x^2 + ...
        let x = Frac::inv_poly(&Poly::from_ints(&f, &[-1, 1])).unwrap();
        let e = InfLaurent::from_frac(&x, 5).unwrap();
        assert_eq!(e.tail(), 1);
        assert_eq!(e.prec(), 6);
        assert!((1..6).all(|k| e.coeff(k) == Some(fe(&f, 1))));
    }

    #[test]
    #[should_panic(expected = "principal part")]
    fn cap_is_enforced() {
        let f = Fq::prime(2).unwrap();
        let _ = Laurent::monomial(fe(&f, 1), -40, 0).pow(2);
    }

    #[test]
    fn json_round_trip() {
        let f = Fq::prime(5).unwrap();
        let s = Laurent::new(&fe(&f, 0), -2, vec![fe(&f, 3), fe(&f, 0), fe(&f, 4)]);
        let v = s.to_json_with("z", |c| json!(c.value()));
        let back = Laurent::from_json_with(&v, &fe(&f, 0), |x| Ok(fe(&f, x.as_u64().unwrap() as u32))).unwrap();
        assert_eq!(back, s);
    }
}
