//! The differentiation rules for hyperderivatives, as executable checks.
//! Each returns whether the identity holds on the certified window.

use super::laurent::Laurent;
use super::useries::USeries;
use crate::algebra::{base_digits, binom_mod_p, Coeff};

/// Series kinds that carry hyperderivatives.
pub trait Hyper: Clone {
    fn hyper(&self, j: usize) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn plus(&self, o: &Self) -> Self;
    fn times_int(&self, n: i64) -> Self;
    fn power(&self, n: u64) -> Self;
    fn agrees(&self, o: &Self) -> bool;
    fn char_p(&self) -> u32;
}

impl<C: Coeff> Hyper for USeries<C> {
    fn hyper(&self, j: usize) -> Self {
        self.hyperderivative(j)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn times_int(&self, n: i64) -> Self {
        self.scale_int(n)
    }
    fn power(&self, n: u64) -> Self {
        self.pow(n)
    }
    fn agrees(&self, o: &Self) -> bool {
        self.agrees_with(o)
    }
    fn char_p(&self) -> u32 {
        self.zero_elem().characteristic()
    }
}

impl<C: Coeff> Hyper for Laurent<C> {
    fn hyper(&self, j: usize) -> Self {
        self.hyperderivative(j)
    }
    fn times(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn plus(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn times_int(&self, n: i64) -> Self {
        self.scale(&self.zero_elem().from_int(n))
    }
    fn power(&self, n: u64) -> Self {
        self.pow(n)
    }
    fn agrees(&self, o: &Self) -> bool {
        self.agrees_with(o)
    }
    fn char_p(&self) -> u32 {
        self.zero_elem().characteristic()
    }
}

/// ∂^j(fg) = Σ_k ∂^k f · ∂^{j-k} g.
pub fn check_product_rule<S: Hyper>(f: &S, g: &S, j: usize) -> bool {
    let lhs = f.times(g).hyper(j);
    let rhs = (1..=j).fold(f.times(&g.hyper(j)), |acc, k| acc.plus(&f.hyper(k).times(&g.hyper(j - k))));
    lhs.agrees(&rhs)
}

/// ∂^j ∘ ∂^k = binom(j+k, j) ∂^{j+k}.
pub fn check_composition_rule<S: Hyper>(f: &S, j: usize, k: usize) -> bool {
    let b = binom_mod_p((j + k) as i64, j as u64, f.char_p());
    f.hyper(k).hyper(j).agrees(&f.hyper(j + k).times_int(b as i64))
}

/// ∂^j(f^{p^s}) = (∂^ℓ f)^{p^s} when j = ℓ p^s, and 0 otherwise.
pub fn check_pth_power_rule<S: Hyper>(f: &S, s: u32, j: usize) -> bool {
    let ps = (f.char_p() as usize).pow(s);
    let lhs = f.power(ps as u64).hyper(j);
    if j % ps == 0 {
        lhs.agrees(&f.hyper(j / ps).power(ps as u64))
    } else {
        lhs.agrees(&lhs.times_int(0))
    }
}

/// ∂^j equals the composite of ∂^{b_i p^i} over the base-p digits b_i of j.
pub fn check_digit_factorization<S: Hyper>(f: &S, j: usize) -> bool {
    let p = f.char_p() as u64;
    let mut g = f.clone();
    let mut scale = 1usize;
    for b in base_digits(j as u64, p) {
        g = g.hyper(b as usize * scale);
        scale *= p as usize;
    }
    g.agrees(&f.hyper(j))
}
