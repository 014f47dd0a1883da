//! Dense univariate polynomials over a generic coefficient ring.

use std::fmt;

use super::laurent::Laurent;
use super::useries::USeries;
use crate::algebra::{binom_mod_p, Coeff};

/// Σ c_i t^i with no trailing zeros.
#[derive(Clone, PartialEq)]
pub struct DensePoly<C: Coeff> {
    coeffs: Vec<C>,
    zero: C,
}

impl<C: Coeff> DensePoly<C> {
    pub fn new(zero: &C, mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Coeff::is_zero) {
            coeffs.pop();
        }
        DensePoly { coeffs, zero: zero.zero_like() }
    }
    pub fn zero(zero: &C) -> Self {
        Self::new(zero, Vec::new())
    }
    pub fn constant(c: C) -> Self {
        let z = c.zero_like();
        Self::new(&z, vec![c])
    }
    pub fn monomial(c: C, n: usize) -> Self {
        let z = c.zero_like();
        let mut v = vec![z.clone(); n];
        v.push(c);
        Self::new(&z, v)
    }
    /// The variable t.
    pub fn var(zero: &C) -> Self {
        Self::monomial(zero.one_like(), 1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }
    pub fn zero_elem(&self) -> &C {
        &self.zero
    }
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn lead(&self) -> Option<&C> {
        self.coeffs.last()
    }
    /// Exponent of the lowest nonzero term.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(&self.zero, (0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }
    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(&self.zero, (0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }
    pub fn neg(&self) -> Self {
        DensePoly { coeffs: self.coeffs.iter().map(Coeff::neg).collect(), zero: self.zero.clone() }
    }
    pub fn scale(&self, c: &C) -> Self {
        Self::new(&self.zero, self.coeffs.iter().map(|x| x.mul(c)).collect())
    }
    pub fn scale_int(&self, n: i64) -> Self {
        Self::new(&self.zero, self.coeffs.iter().map(|x| x.scale_int(n)).collect())
    }
    /// t^k · self.
    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut v = vec![self.zero.clone(); k];
        v.extend(self.coeffs.iter().cloned());
        DensePoly { coeffs: v, zero: self.zero.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::zero(&self.zero);
        }
        let mut out = vec![self.zero.clone(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        Self::new(&self.zero, out)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::constant(self.zero.one_like());
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

    /// ∂_t^j: t^n ↦ binom(n, j) t^{n-j}.
    pub fn hyperderivative(&self, j: usize) -> Self {
        let p = self.zero.characteristic();
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(j)
            .map(|(n, c)| c.scale_int(binom_mod_p(n as i64, j as u64, p) as i64))
            .collect();
        Self::new(&self.zero, v)
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs.iter().rev().fold(self.zero.clone(), |acc, c| acc.mul(x).add(c))
    }

    /// self(g).
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(&self.zero), |acc, c| acc.mul(g).add(&Self::constant(c.clone())))
    }

    /// self(s) for a power series s, by Horner's rule.
    pub fn eval_series(&self, s: &USeries<C>) -> USeries<C> {
        let n = s.trunc();
        let mut acc = USeries::zero(&self.zero, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(s).add(&USeries::constant(c.clone(), n));
        }
        acc
    }

    /// self(s) for a Laurent series s, summing powers (which handles poles).
    pub fn eval_laurent(&self, s: &Laurent<C>) -> Laurent<C> {
        let mut acc: Option<Laurent<C>> = None;
        let mut power = s.pow(0);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = power.mul(s);
            }
            if c.is_zero() {
                continue;
            }
            let term = power.scale(c);
            acc = Some(match acc {
                None => term,
                Some(a) => a.add(&term),
            });
        }
        acc.unwrap_or_else(|| Laurent::zero(&self.zero, s.prec() - s.valuation()))
    }

    pub fn map<D: Coeff>(&self, zero: &D, f: impl Fn(&C) -> D) -> DensePoly<D> {
        DensePoly::new(zero, self.coeffs.iter().map(f).collect())
    }
}

impl<C: Coeff> fmt::Debug for DensePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for DensePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<C: Coeff> Coeff for DensePoly<C> {
    fn zero_like(&self) -> Self {
        Self::zero(&self.zero)
    }
    fn one_like(&self) -> Self {
        Self::constant(self.zero.one_like())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        DensePoly::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        DensePoly::sub(self, rhs)
    }
    fn neg(&self) -> Self {
        DensePoly::neg(self)
    }
    fn mul(&self, rhs: &Self) -> Self {
        DensePoly::mul(self, rhs)
    }
    fn from_int(&self, n: i64) -> Self {
        Self::constant(self.zero.from_int(n))
    }
    fn characteristic(&self) -> u32 {
        self.zero.characteristic()
    }
    fn try_inv(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].try_inv().map(Self::constant)
        } else {
            None
        }
    }
    fn scale_int(&self, n: i64) -> Self {
        DensePoly::scale_int(self, n)
    }
}
