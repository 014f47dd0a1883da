//! Hecke operators U_ℓ, V_ℓ, T_ℓ on u-expansions.

use crate::algebra::{Coeff, Frac, Poly};
use crate::carlitz::{u_a_series, LatticeSpec};
use crate::error::{Error, Result};
use crate::goss::GossTable;
use crate::series::USeries;
use crate::vadic::{a_pow_s, VSeries, WeightS};

fn check_ell(ell: &Poly) -> Result<usize> {
    if !ell.is_monic() {
        return Err(Error::NotMonic(ell.to_string()));
    }
    if !ell.is_irreducible() {
        return Err(Error::NotIrreducible(ell.to_string()));
    }
    Ok(ell.degree().unwrap())
}

/// Window on which U_ℓ(f) is determined by f mod u^N: G_{n,Λ_ℓ}(ℓu) is
/// divisible by u^{⌈(n-1)/q^e⌉+1}, so the unknown c_n with n ≥ N only reach
/// exponents ≥ ⌈(N-1)/q^e⌉ + 1.
pub fn hecke_u_window(ell: &Poly, n: usize) -> Result<usize> {
    let e = check_ell(ell)?;
    if n == 0 {
        return Ok(0);
    }
    let qe = (ell.field().q() as usize).pow(e as u32);
    Ok(((n - 1).div_ceil(qe) + 1).min(n))
}

/// The polynomials G_{n,Λ_ℓ}(ℓu) ∈ A[u] for 1 ≤ n < n_max, cut at u^window.
/// Entry n - 1 holds the coefficient list.
pub fn hecke_u_polys(ell: &Poly, n_max: usize, window: usize) -> Result<Vec<Vec<Poly>>> {
    check_ell(ell)?;
    let field = ell.field();
    let lattice = LatticeSpec::division(ell)?;
    let table = GossTable::build(&lattice, n_max.saturating_sub(1));
    let ell_f = Frac::from_poly(ell.clone());
    (1..n_max)
        .map(|n| {
            let mut out = vec![Poly::zero(field); window];
            let mut lp = ell_f.clone();
            for (j, b) in table.row(n - 1).iter().enumerate() {
                if j + 1 >= window {
                    break;
                }
                if j > 0 {
                    lp = lp.mul(&ell_f);
                }
                if b.is_zero() {
                    continue;
                }
                let c = b.mul(&lp);
                out[j + 1] = c
                    .as_poly()
                    .cloned()
                    .ok_or_else(|| Error::Falsified(format!("G_{n},Λ_ℓ(ℓu) has a non-integral coefficient {c}")))?;
            }
            Ok(out)
        })
        .collect()
}

/// U_ℓ(Σ c_n u^n) = Σ_{n≥1} c_n G_{n,Λ_ℓ}(ℓu); the constant term is dropped.
/// Exact on [`hecke_u_window`].
pub fn hecke_u<C: Coeff>(f: &USeries<C>, ell: &Poly, embed: impl Fn(&Poly) -> C) -> Result<USeries<C>> {
    let n = f.trunc();
    let w = hecke_u_window(ell, n)?;
    let zero = f.zero_elem();
    let polys = hecke_u_polys(ell, n, w)?;
    let mut out = vec![zero.clone(); w];
    for (i, g) in polys.iter().enumerate() {
        let c = f.coeff(i + 1).unwrap();
        if c.is_zero() {
            continue;
        }
        for (m, a) in g.iter().enumerate() {
            if !a.is_zero() {
                out[m] = out[m].add(&c.mul(&embed(a)));
            }
        }
    }
    Ok(USeries::new(zero, out, w))
}

/// V_ℓ(Σ c_n u^n) = Σ c_n u_ℓ^n, exact modulo u^N.
pub fn hecke_v<C: Coeff>(f: &USeries<C>, ell: &Poly, embed: impl Fn(&Poly) -> C) -> Result<USeries<C>> {
    check_ell(ell)?;
    let zero = f.zero_elem();
    let ul = u_a_series(ell, f.trunc())?.map(zero, embed);
    f.compose(&ul)
}

fn frac_embed(a: &Poly) -> Frac {
    Frac::from_poly(a.clone())
}

pub fn hecke_u_frac(f: &USeries<Frac>, ell: &Poly) -> Result<USeries<Frac>> {
    hecke_u(f, ell, frac_embed)
}

pub fn hecke_v_frac(f: &USeries<Frac>, ell: &Poly) -> Result<USeries<Frac>> {
    hecke_v(f, ell, frac_embed)
}

/// T_ℓ = ℓ^k V_ℓ + U_ℓ in weight k, exact on the U_ℓ window.
pub fn hecke_t(f: &USeries<Frac>, ell: &Poly, k: u64) -> Result<USeries<Frac>> {
    let u = hecke_u_frac(f, ell)?;
    let v = hecke_v_frac(f, ell)?;
    let lk = Frac::from_poly(ell.pow(k));
    Ok(v.scale(&lk).add(&u).truncate(u.trunc()))
}

/// T_ℓ = ℓ^s V_ℓ + U_ℓ on a ℘-adic series, ℓ ≠ ℘.
pub fn hecke_t_s(f: &VSeries, ell: &Poly, s: &WeightS) -> Result<VSeries> {
    let ring = f.ring().clone();
    if ell == ring.prime() {
        return Err(Error::arg("ℓ^s is undefined for ℓ = ℘"));
    }
    let embed = |a: &Poly| ring.reduce(a);
    let u = hecke_u(f.series(), ell, embed)?;
    let v = hecke_v(f.series(), ell, embed)?;
    let ls = a_pow_s(ell, s, &ring)?;
    let series = v.scale(&ls).add(&u).truncate(u.trunc());
    Ok(VSeries::new(series, f.den_exp()))
}

/// U_ℓ and V_ℓ on a ℘-adic series; ℓ = ℘ is allowed.
pub fn hecke_u_v(f: &VSeries, ell: &Poly) -> Result<(VSeries, VSeries)> {
    let ring = f.ring().clone();
    let embed = |a: &Poly| ring.reduce(a);
    let u = hecke_u(f.series(), ell, embed)?;
    let v = hecke_v(f.series(), ell, embed)?;
    Ok((VSeries::new(u, f.den_exp()), VSeries::new(v, f.den_exp())))
}
