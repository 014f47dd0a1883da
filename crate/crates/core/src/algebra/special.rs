//! Arithmetic constants of A: brackets [i], D_i, L_i, Carlitz factorials,
//! valuations and binomial coefficients reduced mod p.

use super::field::Fq;
use super::frac::Frac;
use super::order::Order;
use super::poly::Poly;
use crate::error::{Error, Result};

/// [i] = θ^{q^i} - θ, defined for i >= 1.
pub fn bracket(field: &Fq, i: u32) -> Result<Poly> {
    if i == 0 {
        return Err(Error::arg("[0] is undefined"));
    }
    let q = field.q() as usize;
    Ok(Poly::monomial(field, 1, q.pow(i)).sub(&Poly::theta(field)))
}

/// D_i = [i] D_{i-1}^q, D_0 = 1.
pub fn big_d(field: &Fq, i: u32) -> Poly {
    (1..=i).fold(Poly::one(field), |d, k| bracket(field, k).unwrap().mul(&d.frobenius(1)))
}

/// L_i = -[i] L_{i-1}, L_0 = 1.
pub fn big_l(field: &Fq, i: u32) -> Poly {
    (1..=i).fold(Poly::one(field), |l, k| bracket(field, k).unwrap().mul(&l).neg())
}

/// Base-q digits of m, least significant first.
pub fn base_digits(mut m: u64, base: u64) -> Vec<u64> {
    let mut d = Vec::new();
    while m > 0 {
        d.push(m % base);
        m /= base;
    }
    d
}

/// Carlitz factorial Π_m = ∏ D_i^{m_i} over the base-q digits of m.
pub fn carlitz_factorial(field: &Fq, m: u64) -> Poly {
    base_digits(m, field.q() as u64)
        .into_iter()
        .enumerate()
        .filter(|&(_, mi)| mi > 0)
        .fold(Poly::one(field), |acc, (i, mi)| acc.mul(&big_d(field, i as u32).pow(mi)))
}

fn small_binom(n: u64, k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    // den is a product of values < p, hence a unit
    let mut inv = 1u64;
    let mut b = den;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            inv = inv * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    num * inv % p
}

/// binom(n, j) mod p via Lucas's theorem; for n < 0 the convention
/// binom(-m, j) = (-1)^j binom(m + j - 1, j) applies.
pub fn binom_mod_p(n: i64, j: u64, p: u32) -> u32 {
    let p64 = p as u64;
    if j == 0 {
        return 1 % p;
    }
    if n < 0 {
        let m = n.unsigned_abs();
        let b = binom_mod_p((m + j - 1) as i64, j, p) as u64;
        return if j % 2 == 1 { ((p64 - b) % p64) as u32 } else { b as u32 };
    }
    let (mut n, mut j) = (n as u64, j);
    let mut acc = 1u64;
    while j > 0 {
        let (nd, jd) = (n % p64, j % p64);
        if jd > nd {
            return 0;
        }
        acc = acc * small_binom(nd, jd, p64) % p64;
        n /= p64;
        j /= p64;
    }
    acc as u32
}

fn check_prime(prime: &Poly) -> Result<()> {
    if !prime.is_monic() || !prime.is_irreducible() {
        return Err(Error::NotIrreducible(prime.to_string()));
    }
    Ok(())
}

/// ord_℘ on A, validating ℘.
pub fn ord_v_poly(x: &Poly, prime: &Poly) -> Result<Order> {
    check_prime(prime)?;
    Ok(match x.split_valuation(prime) {
        None => Order::Infinity,
        Some((e, _)) => Order::Finite(e),
    })
}

/// ord_℘ on K, validating ℘.
pub fn ord_v(x: &Frac, prime: &Poly) -> Result<Order> {
    check_prime(prime)?;
    Ok(x.ord(prime))
}
