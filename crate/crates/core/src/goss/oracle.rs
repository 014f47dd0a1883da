//! Independent checks of Goss polynomials against their defining property
//! and the denominator bound Π_{k-1}.

use super::table::GossTable;
use crate::algebra::{carlitz_factorial, Frac};
use crate::carlitz::LatticeSpec;
use crate::error::{Error, Result};
use crate::series::DensePoly;

/// Decides S_{k,Λ}(z) = G_{k,Λ}(1/e_Λ(z)) as an identity of rational
/// functions in z, summing over every lattice point. With P(z) = ∏(z - μ),
///   S_k = Σ_λ ∏_{μ≠λ} (z - μ)^k / P^k  and  G_k(1/e) = Σ_j g_j e^{k-j} / e^k,
/// compared by cross-multiplication.
pub fn lattice_sum_oracle(lattice: &LatticeSpec, table: &mut GossTable, k: usize) -> Result<bool> {
    let basis = lattice.basis().ok_or_else(|| Error::arg("lattice sum oracle needs an explicit basis"))?;
    if basis.len() > 2 {
        return Err(Error::arg("lattice sum oracle is limited to dimension ≤ 2"));
    }
    if k == 0 {
        return Err(Error::arg("k must be >= 1"));
    }
    if table.lattice() != lattice {
        return Err(Error::arg("table belongs to a different lattice"));
    }
    table.extend_to(k);
    let field = lattice.field();
    let zero = Frac::zero(field);
    let points = lattice.points().unwrap();
    let z = DensePoly::var(&zero);
    let lin: Vec<DensePoly<Frac>> = points.iter().map(|m| z.sub(&DensePoly::constant(m.clone()))).collect();
    let powk: Vec<DensePoly<Frac>> = lin.iter().map(|l| l.pow(k as u64)).collect();

    let mut num = DensePoly::zero(&zero);
    for i in 0..points.len() {
        let term = powk
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(DensePoly::constant(Frac::one(field)), |acc, (_, f)| acc.mul(f));
        num = num.add(&term);
    }
    let den = powk.iter().fold(DensePoly::constant(Frac::one(field)), |acc, f| acc.mul(f));

    let q = field.q() as usize;
    let mut e = DensePoly::zero(&zero);
    for j in 0..=basis.len() {
        e = e.add(&DensePoly::monomial(lattice.alpha(j), q.pow(j as u32)));
    }
    let g = table.goss(k);
    let mut gnum = DensePoly::zero(&zero);
    for j in 0..=k {
        let c = g.coeff(j);
        if !c.is_zero() {
            gnum = gnum.add(&e.pow((k - j) as u64).scale(&c));
        }
    }
    let gden = e.pow(k as u64);
    Ok(num.mul(&gden) == gnum.mul(&den))
}

/// Whether Π_{k-1}·G_k has all coefficients in A (Carlitz lattice).
pub fn pi_times_goss_integral(table: &mut GossTable, k: usize) -> Result<bool> {
    if !table.lattice().is_carlitz() {
        return Err(Error::arg("the Π_{k-1} bound concerns the Carlitz lattice"));
    }
    if k == 0 {
        return Err(Error::arg("k must be >= 1"));
    }
    table.extend_to(k);
    let pi = carlitz_factorial(table.lattice().field(), k as u64 - 1);
    Ok(table.goss(k).coeffs().iter().all(|c| c.mul_poly(&pi).is_integral()))
}

/// Least common denominator of the coefficients of G_k, for reporting.
pub fn goss_denominator(table: &mut GossTable, k: usize) -> crate::algebra::Poly {
    table.extend_to(k);
    let field = table.lattice().field().clone();
    table.goss(k).coeffs().iter().fold(crate::algebra::Poly::one(&field), |l, c| {
        let d = c.den();
        l.mul(d).div_exact(&l.gcd(d)).unwrap()
    })
}
