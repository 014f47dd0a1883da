//! Goss's families f̂_{s,n} = Σ_{a monic, ℘∤a} a^s G_n(u_a) and the
//! decomposition of the false Eisenstein series.

use std::cell::RefCell;

use serde_json::{json, Value};

use super::vseries::{vord_frac, VSeries};
use super::weight::{a_pow_s, prec_for, WeightS};
use crate::algebra::{Frac, Order, Poly, PrimePower};
use crate::carlitz::LatticeSpec;
use crate::error::{Error, Result};
use crate::forms::{a_expansion, false_eisenstein};
use crate::goss::GossTable;
use crate::operators::hecke_v_frac;
use crate::series::USeries;

/// f̂_{s,n} modulo (u^N, ℘^M) with the hypothesis flag of the v-adic
/// modularity theorem.
#[derive(Clone, Debug)]
pub struct Family {
    pub s: WeightS,
    pub n: u64,
    pub series: VSeries,
    /// x ≡ n mod (q - 1) and y ≡ 0 mod q^{⌈log_q n⌉} (to the known precision).
    pub hypotheses: bool,
}

impl Family {
    pub fn to_json(&self) -> Value {
        json!({
            "s": self.s.to_json(),
            "n": self.n,
            "hypotheses": self.hypotheses,
            "series": self.series.to_json(),
        })
    }
}

/// Whether s satisfies x ≡ n mod (q - 1) and y ≡ 0 mod q^{⌈log_q n⌉}.
pub fn family_hypotheses(prime: &Poly, s: &WeightS, n: u64) -> bool {
    let field = prime.field();
    let q = field.q() as u128;
    let p = field.p() as u128;
    if s.x() % (q as u64 - 1) != n % (q as u64 - 1) {
        return false;
    }
    let mut c = 1u128;
    while c < n as u128 {
        c *= q;
    }
    let known = p.pow(s.prec());
    s.y() % c.min(known) == 0
}

/// f̂_{s,n} modulo (u^N, ℘^M). Denominators of G_n are cleared by a power
/// of ℘ recorded as the series' denominator exponent.
pub fn goss_family(prime: &Poly, s: &WeightS, n: u64, trunc: usize, m: u32) -> Result<Family> {
    if n == 0 {
        return Err(Error::arg("families need n >= 1"));
    }
    let field = prime.field();
    let table = GossTable::build(&LatticeSpec::carlitz(field), n as usize);
    let row = table.row(n as usize - 1);
    let e = row
        .iter()
        .filter_map(|b| b.ord(prime).finite())
        .map(|o| (-o).max(0) as u32)
        .max()
        .unwrap_or(0);
    let ring = PrimePower::new(prime, m + e)?;
    if s.prec() < prec_for(field.p(), m + e) {
        return Err(Error::InsufficientPrecision(format!(
            "f̂_{{s,{n}}} mod ℘^{m} needs y mod {}^{}",
            field.p(),
            prec_for(field.p(), m + e)
        )));
    }
    let pe = Frac::from_poly(prime.pow(e as u64));
    let betas = row.iter().map(|b| ring.reduce_frac(&b.mul(&pe))).collect::<Result<Vec<_>>>()?;
    let zero = ring.zero();
    let err = RefCell::new(None);
    let series = a_expansion(field, trunc, &betas, &zero, |a| ring.reduce(a), |a| {
        if prime.divides(a) {
            return None;
        }
        match a_pow_s(a, s, &ring) {
            Ok(v) => Some(v),
            Err(x) => {
                err.borrow_mut().get_or_insert(x);
                None
            }
        }
    })?;
    if let Some(x) = err.into_inner() {
        return Err(x);
    }
    Ok(Family { s: s.clone(), n, series: VSeries::new(series, e), hypotheses: family_hypotheses(prime, s, n) })
}

/// f̂_{1,1} = Σ_{℘∤a} a·u_a exactly modulo u^N.
pub fn fhat_11(prime: &Poly, trunc: usize) -> Result<USeries<Frac>> {
    let field = prime.field();
    let zero = Frac::zero(field);
    let emb = |a: &Poly| Frac::from_poly(a.clone());
    a_expansion(field, trunc, &[Frac::one(field)], &zero, emb, |a| (!prime.divides(a)).then(|| emb(a)))
}

/// E = Σ_{j<J} ℘^j V_℘^{∘j}(f̂_{1,1}) exactly in A modulo u^N. The terms with
/// j ≥ J start at u^{q^{dJ}}, so J must satisfy q^{dJ} ≥ N.
pub fn false_e_decomposition_check(prime: &Poly, trunc: usize, j_max: u32) -> Result<bool> {
    let field = prime.field();
    let d = prime.degree().ok_or_else(|| Error::arg("℘ must be nonzero"))? as u32;
    let reach = (field.q() as u128).checked_pow(d * j_max).unwrap_or(u128::MAX);
    if reach < trunc as u128 {
        return Err(Error::arg(format!("q^(dJ) = {reach} < N = {trunc}: the tail is not negligible")));
    }
    let fhat = fhat_11(prime, trunc)?;
    let mut acc = fhat.clone();
    let mut cur = fhat;
    for j in 1..j_max {
        cur = hecke_v_frac(&cur, prime)?;
        acc = acc.add(&cur.scale(&Frac::from_poly(prime.pow(j as u64))));
    }
    Ok(acc == false_eisenstein(field, trunc)?.series)
}

/// ord_℘(E - f̂_{1,1}) over the window (≥ 1 by the decomposition).
pub fn false_e_mod_prime(prime: &Poly, trunc: usize) -> Result<Order> {
    let diff = false_eisenstein(prime.field(), trunc)?.series.sub(&fhat_11(prime, trunc)?);
    Ok(vord_frac(&diff, prime))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Fq;
    use crate::forms::petrov_form;

    #[test]
    fn decomposition_small() {
        let f = Fq::prime(3).unwrap();
        let th = Poly::theta(&f);
        assert!(false_e_decomposition_check(&th, 3, 1).unwrap());
        assert!(false_e_decomposition_check(&th, 9, 2).unwrap());
        assert!(false_e_decomposition_check(&th, 10, 2).is_err());
        assert!(false_e_mod_prime(&th, 20).unwrap() >= Order::Finite(1));
    }

    #[test]
    fn family_matches_petrov_away_from_prime() {
        let f = Fq::prime(3).unwrap();
        let prime = Poly::from_ints(&f, &[1, 1]);
        let (k, n, trunc, m) = (8u64, 2u64, 20usize, 4u32);
        let s = WeightS::embed(&prime, (k - n) as i64, 4).unwrap();
        let fam = goss_family(&prime, &s, n, trunc, m).unwrap();
        assert!(fam.hypotheses == family_hypotheses(&prime, &s, n));
        let row = GossTable::build(&LatticeSpec::carlitz(&f), n as usize).row(n as usize - 1).to_vec();
        let direct = a_expansion(&f, trunc, &row, &Frac::zero(&f), |a| Frac::from_poly(a.clone()), |a| {
            (!prime.divides(a)).then(|| Frac::from_poly(a.pow(k - n)))
        })
        .unwrap();
        let ring = PrimePower::new(&prime, m).unwrap();
        let diff = fam.series.sub(&VSeries::from_frac(&direct, &ring).unwrap()).unwrap();
        assert!(diff.series().is_zero());
        // the full Petrov form differs by the ℘-divisible a, which are ℘-adically small
        let full = petrov_form(&f, k, n, trunc).unwrap();
        assert!(vord_frac(&full.series.sub(&direct), &prime) >= Order::Finite((k - n) as i64));
    }

    #[test]
    fn fhat_coefficient_of_u() {
        let f = Fq::prime(2).unwrap();
        let prime = Poly::from_ints(&f, &[1, 1, 1]);
        let s = WeightS::embed(&prime, 1, 3).unwrap();
        let fam = goss_family(&prime, &s, 1, 10, 4).unwrap();
        assert!(fam.series.series().coeff(1).unwrap().rep().is_one());
        assert!(fam.hypotheses);
    }
}
