//! Θ^r = (-π̃)^{-r} ∂_z^r on u-expansions, through the Carlitz Goss
//! coefficients β_{r,j}.

use crate::algebra::{binom_mod_p, carlitz_factorial, Coeff, Frac, Poly};
use crate::error::{Error, Result};
use crate::goss::GossTable;
use crate::series::{DensePoly, Laurent, USeries};

fn ensure_carlitz(table: &GossTable) -> Result<()> {
    if !table.lattice().is_carlitz() {
        return Err(Error::arg("Θ^r uses the Goss table of the Carlitz lattice"));
    }
    Ok(())
}

/// Θ^r(f) = Σ_j β_{r,j} u^{j+1} ∂_u^j(u^{j-1} f), exact modulo u^N.
pub fn theta_r(table: &mut GossTable, f: &USeries<Frac>, r: usize) -> Result<USeries<Frac>> {
    ensure_carlitz(table)?;
    table.extend_to(r + 1);
    let n = f.trunc();
    let lifted = Laurent::from_series(f, 0);
    let mut acc = Laurent::zero(f.zero_elem(), n as i64);
    for (j, b) in table.row(r).iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        let term = lifted.shift(j as i64 - 1).hyperderivative(j).shift(j as i64 + 1).scale(b);
        acc = acc.add(&term);
    }
    let out = acc.to_series()?;
    Ok(out.truncate(n))
}

/// Coefficientwise Θ^r over any coefficient ring that receives the row
/// β_{r,·}: the u^m coefficient is Σ_j β_{r,j} binom(m-1, j) c_{m-j}.
pub fn theta_coeffwise<C: Coeff>(row: &[C], f: &USeries<C>) -> USeries<C> {
    let zero = f.zero_elem();
    let p = zero.characteristic();
    let n = f.trunc();
    let coeffs = (0..n)
        .map(|m| {
            let mut acc = zero.clone();
            for (j, b) in row.iter().enumerate().take(m + 1) {
                let c = f.coeff(m - j).unwrap();
                if b.is_zero() || c.is_zero() {
                    continue;
                }
                let bin = binom_mod_p(m as i64 - 1, j as u64, p);
                if bin != 0 {
                    acc = acc.add(&b.mul(c).scale_int(bin as i64));
                }
            }
            acc
        })
        .collect();
    USeries::new(zero, coeffs, n)
}

/// Θ^r(u^n) = u^n ∂_u^{n-1}(u^{n-2} G_{r+1}(u)), checked against
/// Σ_j binom(n+j-1, j) β_{r,j} u^{n+j}. Exact: the window is n + r + 1.
pub fn theta_r_monomial(table: &mut GossTable, n: usize, r: usize) -> Result<USeries<Frac>> {
    ensure_carlitz(table)?;
    if n == 0 {
        return Err(Error::arg("theta_r_monomial needs n >= 1"));
    }
    table.extend_to(r + 1);
    let g = table.goss(r + 1);
    let zero = g.zero_elem().clone();
    let inner = if n == 1 {
        DensePoly::new(&zero, g.coeffs().iter().skip(1).cloned().collect())
    } else {
        g.shift(n - 2)
    };
    let a = inner.hyperderivative(n - 1).shift(n);
    let window = n + r + 1;
    let p = zero.characteristic();
    let mut b = vec![zero.clone(); window];
    for (j, beta) in table.row(r).iter().enumerate() {
        let bin = binom_mod_p((n + j) as i64 - 1, j as u64, p);
        b[n + j] = beta.scale_int(bin as i64);
    }
    let b = USeries::new(&zero, b, window);
    let mut a_coeffs = a.coeffs().to_vec();
    let fits = a_coeffs.len() <= window;
    a_coeffs.resize(window, zero.clone());
    if !fits || USeries::new(&zero, a_coeffs, window) != b {
        return Err(Error::Falsified(format!("the two formulas for Θ^{r}(u^{n}) disagree")));
    }
    Ok(b)
}

/// Θ = u^2 ∂_u applied r times.
pub fn theta_iterate<C: Coeff>(f: &USeries<C>, r: usize) -> USeries<C> {
    let mut out = f.clone();
    for _ in 0..r {
        out = out.hyperderivative(1).shift(2).truncate(f.trunc());
    }
    out
}

/// Π_r·Θ^r(f) for integral f; a surviving denominator is a falsification.
pub fn pi_theta_integral(table: &mut GossTable, f: &USeries<Poly>, r: usize) -> Result<USeries<Poly>> {
    let field = f.zero_elem().field().clone();
    let fz = Frac::zero(&field);
    let lifted = f.map(&fz, |c| Frac::from_poly(c.clone()));
    let pi = carlitz_factorial(&field, r as u64);
    let out = theta_r(table, &lifted, r)?;
    out.try_map(f.zero_elem(), |c| {
        c.mul_poly(&pi)
            .as_poly()
            .cloned()
            .ok_or_else(|| Error::Falsified(format!("Π_{r}·Θ^{r} left the denominator of {c}")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Fq;
    use crate::carlitz::LatticeSpec;

    fn table(q: u32) -> (Fq, GossTable) {
        let f = Fq::prime(q).unwrap();
        let t = GossTable::new(&LatticeSpec::carlitz(&f));
        (f, t)
    }

    #[test]
    fn theta_one_is_u2_d() {
        let (f, mut t) = table(3);
        let s = USeries::new(
            &Frac::zero(&f),
            (0..12).map(|i| Frac::from_poly(Poly::monomial(&f, 1, i % 3))).collect(),
            12,
        );
        assert_eq!(theta_r(&mut t, &s, 1).unwrap(), s.hyperderivative(1).shift(2).truncate(12));
        assert_eq!(theta_r(&mut t, &s, 0).unwrap(), s);
    }

    #[test]
    fn monomial_formulas_agree() {
        let (f, mut t) = table(3);
        for n in 1..=8 {
            for r in 0..=8 {
                let m = theta_r_monomial(&mut t, n, r).unwrap();
                let s = USeries::monomial(Frac::one(&f), n, n + r + 1);
                assert_eq!(theta_r(&mut t, &s, r).unwrap(), m);
                let row = t.row(r).to_vec();
                assert_eq!(theta_coeffwise(&row, &s), m);
            }
        }
    }

    #[test]
    fn constants_are_killed() {
        let (f, mut t) = table(2);
        let c = USeries::constant(Frac::from_poly(Poly::theta(&f)), 6);
        for r in 1..5 {
            assert!(theta_r(&mut t, &c, r).unwrap().is_zero());
        }
    }

    #[test]
    fn pi_theta_clears_d1() {
        let (f, mut t) = table(3);
        let s = USeries::new(&Poly::zero(&f), (0..10).map(|_| Poly::one(&f)).collect(), 10);
        let out = pi_theta_integral(&mut t, &s, 3).unwrap();
        let raw = theta_r(&mut t, &s.map(&Frac::zero(&f), |c| Frac::from_poly(c.clone())), 3).unwrap();
        assert!(!raw.coeffs().iter().all(Frac::is_integral));
        assert_eq!(out.coeff(2).unwrap(), &Poly::one(&f));
    }
}
