//! Expansions at the infinite place: π̃^k for (q-1) | k and partial sums of ζ_C(k).

use super::exp::zeta_ratio;
use crate::algebra::{monic_iter, Coeff, Fq, FqElem};
use crate::error::{Error, Result};
use crate::series::{InfLaurent, Laurent, USeries};

/// π̃^k in F_q((1/θ)) with `rel` coefficients from the leading term, from
/// π̃^{q-1} = -θ^q ∏_{i≥1} (1 - θ^{1-q^i})^{-(q-1)}.
pub fn pi_power_inf(field: &Fq, k: u64, rel: usize) -> Result<InfLaurent> {
    let q = field.q() as u64;
    if k == 0 || k % (q - 1) != 0 {
        return Err(Error::arg(format!("π̃^k is only computed for k > 0 divisible by q - 1, got {k}")));
    }
    if rel == 0 {
        return Err(Error::arg("precision must be >= 1"));
    }
    let z = FqElem::new(field, 0);
    let one = z.one_like();
    let mut prod = USeries::one(&z, rel);
    let mut qi = q as usize;
    while qi - 1 < rel {
        let factor = USeries::new(&z, vec![one.clone()], rel).sub(&USeries::monomial(one.clone(), qi - 1, rel));
        prod = prod.mul(&factor.inverse()?.pow(q - 1));
        qi *= q as usize;
    }
    let base = Laurent::from_series(&prod.scale(&one.neg()), -(q as i64));
    Ok(base.pow(k / (q - 1)))
}

/// Exponent below which Σ_{deg a ≤ D} a^{-k} agrees with ζ_C(k): the block of
/// monic a of degree d has valuation ≥ d(k + q - 1) at ∞, because power sums
/// over A_{<d} vanish in exponents below d(q-1).
pub fn zeta_tail_bound(field: &Fq, k: u64, d_max: usize) -> i64 {
    (d_max as i64 + 1) * (k as i64 + field.q() as i64 - 1)
}

/// Σ_{a monic, deg a ≤ D} a^{-k} at ∞, known below min(prec, tail bound).
pub fn zeta_inf_partial(field: &Fq, k: u64, d_max: usize, prec: i64) -> Result<InfLaurent> {
    if k == 0 {
        return Err(Error::arg("k must be >= 1"));
    }
    let window = prec.min(zeta_tail_bound(field, k, d_max)).max(1);
    let z = FqElem::new(field, 0);
    let mut acc = Laurent::monomial(z.one_like(), 0, window);
    for d in 1..=d_max {
        let vd = (d as u64 * k) as i64;
        if vd >= window {
            break;
        }
        let rel = (window - vd) as usize;
        for a in monic_iter(field, d) {
            // a^{-k} = x^{dk} / ã(x)^k with ã the reversal of a
            let rev: Vec<FqElem> = (0..=d).map(|i| FqElem::new(field, a.coeff(d - i))).collect();
            let s = USeries::new(&z, rev, rel).pow(k).inverse()?;
            acc = acc.add(&Laurent::from_series(&s, vd));
        }
    }
    Ok(acc)
}

/// Compares the rational ζ_C(k)/π̃^k with the partial zeta sum through degree
/// D divided by π̃^k, on `rel` coefficients from the leading term.
pub fn zeta_cross_check(field: &Fq, k: u64, d_max: usize, rel: usize) -> Result<bool> {
    if zeta_tail_bound(field, k, d_max) < rel as i64 {
        return Err(Error::InsufficientPrecision(format!("degree {d_max} certifies fewer than {rel} terms")));
    }
    let rational = InfLaurent::from_frac(&zeta_ratio(field, k)?, rel)?;
    let partial = zeta_inf_partial(field, k, d_max, rel as i64)?;
    let analytic = partial.mul(&pi_power_inf(field, k, rel)?.inverse()?);
    let covers = |x: &InfLaurent| x.prec() - x.valuation() >= rel as i64;
    Ok(covers(&rational) && covers(&analytic) && rational.agrees_with(&analytic))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_leading_terms() {
        for q in [2u32, 3, 5] {
            let f = Fq::prime(q).unwrap();
            let p = pi_power_inf(&f, q as u64 - 1, 10).unwrap();
            assert_eq!(p.valuation(), -(q as i64));
            assert_eq!(p.coeff(-(q as i64)).unwrap().value(), q - 1);
            let sq = pi_power_inf(&f, 2 * (q as u64 - 1), 10).unwrap();
            assert!(sq.agrees_with(&p.mul(&p)));
        }
        let f3 = Fq::prime(3).unwrap();
        assert_eq!(pi_power_inf(&f3, 2, 5).unwrap().valuation(), -3);
        assert!(pi_power_inf(&f3, 3, 5).is_err());
    }

    #[test]
    fn zeta_partial_stabilizes() {
        let f = Fq::prime(3).unwrap();
        let a = zeta_inf_partial(&f, 2, 3, 30).unwrap();
        let b = zeta_inf_partial(&f, 2, 5, 30).unwrap();
        assert_eq!(a.prec(), zeta_tail_bound(&f, 2, 3));
        assert!(a.agrees_with(&b));
        assert!(a.coeff(0).unwrap().is_one());
    }

    #[test]
    fn rational_and_analytic_agree() {
        let f = Fq::prime(3).unwrap();
        assert!(zeta_cross_check(&f, 2, 4, 12).unwrap());
        assert!(zeta_cross_check(&f, 2, 0, 12).is_err());
    }
}
