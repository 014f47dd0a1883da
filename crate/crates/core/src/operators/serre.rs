//! Serre operators 𝒟^r.

use super::theta::theta_r;
use crate::algebra::binom_mod_p;
use crate::error::{Error, Result};
use crate::forms::{false_eisenstein, FormExpansion};
use crate::goss::GossTable;

/// 𝒟^r(f) = Θ^r(f) + Σ_{i=1}^r (-1)^i binom(k+r-1, i) Θ^{r-i}(f)·Θ^{i-1}(E),
/// with weight k + 2r and type m + r. Exact modulo u^N.
pub fn serre_d(table: &mut GossTable, f: &FormExpansion, r: usize) -> Result<FormExpansion> {
    if f.weight < 0 {
        return Err(Error::arg("Serre operators need a non-negative weight"));
    }
    let field = f.field().clone();
    let n = f.series.trunc();
    let p = field.p();
    let q1 = field.q() as u64 - 1;
    let e = false_eisenstein(&field, n)?.series;
    let mut out = theta_r(table, &f.series, r)?;
    for i in 1..=r {
        let b = binom_mod_p(f.weight + r as i64 - 1, i as u64, p) as i64;
        if b == 0 {
            continue;
        }
        let sign = if i % 2 == 0 { b } else { -b };
        let term = theta_r(table, &f.series, r - i)?.mul(&theta_r(table, &e, i - 1)?);
        out = out.add(&term.scale_int(sign));
    }
    Ok(FormExpansion {
        series: out.truncate(n),
        weight: f.weight + 2 * r as i64,
        typ: (f.typ + r as u64) % q1,
        label: format!("D^{r}({})", f.label),
        modular: f.modular,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Fq;
    use crate::carlitz::LatticeSpec;
    use crate::forms::eisenstein;

    #[test]
    fn serre_one_and_support() {
        let f = Fq::prime(3).unwrap();
        let mut t = GossTable::new(&LatticeSpec::carlitz(&f));
        let e4 = eisenstein(&f, 4, 20).unwrap();
        assert_eq!(serre_d(&mut t, &e4, 0).unwrap().series, e4.series);
        let d1 = serre_d(&mut t, &e4, 1).unwrap();
        let e = false_eisenstein(&f, 20).unwrap().series;
        let th = super::super::theta::theta_r(&mut t, &e4.series, 1).unwrap();
        assert_eq!(d1.series, th.sub(&e.mul(&e4.series).scale_int(4)).truncate(20));
        for r in 0..=4 {
            let d = serre_d(&mut t, &e4, r).unwrap();
            assert!(d.support_ok(), "r={r}");
            assert_eq!(d.weight, 4 + 2 * r as i64);
        }
    }
}
