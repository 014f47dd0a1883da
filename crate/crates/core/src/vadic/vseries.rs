//! Series in K ⊗ A_v[[u]] with bounded denominators, and their ℘-adic orders.

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Frac, ModP, Order, Poly, PrimePower};
use crate::error::{Error, Result};
use crate::goss::GossTable;
use crate::operators::theta_coeffwise;
use crate::series::USeries;

/// ℘^{-den_exp} · g with g ∈ (A/℘^M)[[u]] known modulo u^N. Coefficients are
/// therefore known modulo ℘^{M - den_exp}.
#[derive(Clone, Debug, PartialEq)]
pub struct VSeries {
    series: USeries<ModP>,
    den_exp: u32,
}

/// A ℘-adic order read off from finitely many coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "ord", rename_all = "snake_case")]
pub enum VOrd {
    /// Attained, and no coefficient can go lower.
    Exact(i64),
    /// Attained inside the window; coefficients outside it may go lower.
    AtMost(i64),
    /// Every known coefficient vanishes to the working precision.
    AtLeast(i64),
}

impl VOrd {
    /// The numeric value used for comparisons with a congruence schedule.
    pub fn value(self) -> i64 {
        match self {
            VOrd::Exact(n) | VOrd::AtMost(n) | VOrd::AtLeast(n) => n,
        }
    }
}

/// min_n ord_℘(c_n) over the known coefficients; infinite for zero.
pub fn vord_frac(f: &USeries<Frac>, prime: &Poly) -> Order {
    f.coeffs().iter().map(|c| c.ord(prime)).min().unwrap_or(Order::Infinity)
}

fn lift(x: &ModP, shift: u32, ring: &PrimePower) -> ModP {
    let rep = if shift == 0 { x.rep().clone() } else { x.rep().mul(&ring.prime().pow(shift as u64)) };
    ring.reduce(&rep)
}

impl VSeries {
    pub fn new(series: USeries<ModP>, den_exp: u32) -> Self {
        VSeries { series, den_exp }
    }

    /// Reduces f modulo ℘^M after clearing the largest ℘-denominator seen.
    pub fn from_frac(f: &USeries<Frac>, ring: &PrimePower) -> Result<Self> {
        let den = match vord_frac(f, ring.prime()) {
            Order::Finite(e) if e < 0 => (-e) as u32,
            _ => 0,
        };
        let pe = Frac::from_poly(ring.prime().pow(den as u64));
        let series = f.try_map(&ring.zero(), |c| ring.reduce_frac(&c.mul(&pe)))?;
        Ok(VSeries { series, den_exp: den })
    }

    pub fn from_poly(f: &USeries<Poly>, ring: &PrimePower) -> Self {
        VSeries { series: f.map(&ring.zero(), |c| ring.reduce(c)), den_exp: 0 }
    }

    pub fn ring(&self) -> &PrimePower {
        self.series.zero_elem().ring()
    }
    pub fn series(&self) -> &USeries<ModP> {
        &self.series
    }
    pub fn den_exp(&self) -> u32 {
        self.den_exp
    }
    pub fn trunc(&self) -> usize {
        self.series.trunc()
    }
    /// Coefficients are known modulo ℘ to this power.
    pub fn abs_prec(&self) -> i64 {
        self.ring().prec() as i64 - self.den_exp as i64
    }

    /// Same element with denominator ℘^{-den} and precision M.
    fn align(&self, den: u32, prec: u32) -> USeries<ModP> {
        debug_assert!(den >= self.den_exp && prec <= self.ring().prec() + den - self.den_exp);
        let ring = self.ring().with_prec(prec);
        self.series.map(&ring.zero(), |c| lift(c, den - self.den_exp, &ring))
    }

    fn common(&self, o: &Self) -> Result<(u32, u32)> {
        if self.ring().prime() != o.ring().prime() {
            return Err(Error::RingMismatch);
        }
        let den = self.den_exp.max(o.den_exp);
        let prec = self.abs_prec().min(o.abs_prec()) + den as i64;
        if prec < 1 {
            return Err(Error::InsufficientPrecision("no ℘-adic digits survive".into()));
        }
        Ok((den, prec as u32))
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        let (den, prec) = self.common(o)?;
        Ok(VSeries { series: self.align(den, prec).add(&o.align(den, prec)), den_exp: den })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        let (den, prec) = self.common(o)?;
        Ok(VSeries { series: self.align(den, prec).sub(&o.align(den, prec)), den_exp: den })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.ring().prime() != o.ring().prime() {
            return Err(Error::RingMismatch);
        }
        let prec = self.ring().prec().min(o.ring().prec());
        let a = self.align(self.den_exp, prec);
        let b = o.align(o.den_exp, prec);
        Ok(VSeries { series: a.mul(&b), den_exp: self.den_exp + o.den_exp })
    }

    pub fn truncate(&self, n: usize) -> Self {
        VSeries { series: self.series.truncate(n), den_exp: self.den_exp }
    }

    /// Drop to relative precision `prec`.
    pub fn lower(&self, prec: u32) -> Self {
        VSeries { series: self.align(self.den_exp, prec.min(self.ring().prec())), den_exp: self.den_exp }
    }

    /// ℘^k·f for k ≥ 0; precision is kept, the denominator shrinks first.
    pub fn mul_prime_pow(&self, k: u32) -> Self {
        let drop = k.min(self.den_exp);
        let rest = k - drop;
        let ring = self.ring().clone();
        VSeries { series: self.series.map(&ring.zero(), |c| lift(c, rest, &ring)), den_exp: self.den_exp - drop }
    }

    /// min ord_℘ over the window.
    pub fn window_ord(&self) -> VOrd {
        let m = self.series.coeffs().iter().filter_map(|c| c.ord().finite()).min();
        match m {
            None => VOrd::AtLeast(self.abs_prec()),
            Some(e) => VOrd::Exact(e - self.den_exp as i64),
        }
    }

    /// ord_v over the whole series, using den_exp as a global bound: exact
    /// when the window attains -den_exp, otherwise only an upper bound.
    pub fn vnorm(&self) -> VOrd {
        match self.window_ord() {
            VOrd::Exact(e) if e == -(self.den_exp as i64) => VOrd::Exact(e),
            VOrd::Exact(e) => VOrd::AtMost(e),
            other => other,
        }
    }

    /// Θ^r computed coefficientwise; denominators of β_{r,·} raise den_exp.
    pub fn theta(&self, table: &mut GossTable, r: usize) -> Result<Self> {
        if !table.lattice().is_carlitz() {
            return Err(Error::arg("Θ^r uses the Goss table of the Carlitz lattice"));
        }
        table.extend_to(r + 1);
        let ring = self.ring().clone();
        let e = table
            .row(r)
            .iter()
            .filter_map(|b| b.ord(ring.prime()).finite())
            .map(|o| (-o).max(0) as u32)
            .max()
            .unwrap_or(0);
        let pe = Frac::from_poly(ring.prime().pow(e as u64));
        let row = table.row(r).iter().map(|b| ring.reduce_frac(&b.mul(&pe))).collect::<Result<Vec<_>>>()?;
        Ok(VSeries { series: theta_coeffwise(&row, &self.series), den_exp: self.den_exp + e })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "prime": self.ring().prime().to_json(),
            "prec": self.ring().prec(),
            "den_exp": self.den_exp,
            "series": self.series.to_json_with("u", |c| c.rep().to_json()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Fq;

    #[test]
    fn orders_and_arithmetic() {
        let f = Fq::prime(3).unwrap();
        let th = Poly::theta(&f);
        let ring = PrimePower::new(&th, 5).unwrap();
        let s = USeries::new(
            &Frac::zero(&f),
            vec![Frac::one(&f), Frac::inv_poly(&th).unwrap(), Frac::from_poly(th.clone())],
            3,
        );
        let v = VSeries::from_frac(&s, &ring).unwrap();
        assert_eq!(v.den_exp(), 1);
        assert_eq!(v.vnorm(), VOrd::Exact(-1));
        assert_eq!(v.abs_prec(), 4);
        let w = v.mul_prime_pow(1);
        assert_eq!(w.window_ord(), VOrd::Exact(0));
        assert!(v.sub(&v).unwrap().series().is_zero());
        let sq = v.mul(&v).unwrap();
        assert_eq!(sq.window_ord(), VOrd::Exact(-2));
        let back = VSeries::from_frac(&s.mul(&s), &ring).unwrap();
        assert_eq!(sq.sub(&back).unwrap().window_ord(), VOrd::AtLeast(3));
    }
}
