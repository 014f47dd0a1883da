//! u-expansions of Eisenstein series, g_d, the false Eisenstein series and
//! Petrov's forms with A-expansions.

use serde_json::{json, Value};

use crate::algebra::{big_l, monic_iter, Coeff, Fq, Frac, Poly};
use crate::carlitz::{u_a_series, zeta_ratio, LatticeSpec};
use crate::error::{Error, Result};
use crate::goss::GossTable;
use crate::series::USeries;

/// A truncated u-expansion with weight, type and a descriptive label.
#[derive(Clone, Debug, PartialEq)]
pub struct FormExpansion {
    pub series: USeries<Frac>,
    pub weight: i64,
    /// Residue of the type modulo q - 1.
    pub typ: u64,
    pub label: String,
    /// Whether the parameters give a genuine modular form (as opposed to a
    /// quasi-modular or unconstrained expansion).
    pub modular: bool,
}

impl FormExpansion {
    pub fn field(&self) -> &Fq {
        self.series.zero_elem().field()
    }

    /// c_n ≠ 0 only for n ≡ type mod (q - 1).
    pub fn support_ok(&self) -> bool {
        let q1 = self.field().q() as u64 - 1;
        self.series.coeffs().iter().enumerate().all(|(n, c)| c.is_zero() || n as u64 % q1 == self.typ % q1)
    }

    /// Coefficients in A, if there are no denominators.
    pub fn integral_series(&self) -> Option<USeries<Poly>> {
        let zero = Poly::zero(self.field());
        let coeffs = self.series.coeffs().iter().map(|c| c.as_poly().cloned()).collect::<Option<Vec<_>>>()?;
        Some(USeries::new(&zero, coeffs, self.series.trunc()))
    }

    /// Product of expansions: weights and types add.
    pub fn mul(&self, o: &Self) -> Self {
        let q1 = self.field().q() as u64 - 1;
        FormExpansion {
            series: self.series.mul(&o.series),
            weight: self.weight + o.weight,
            typ: (self.typ + o.typ) % q1,
            label: format!("({})*({})", self.label, o.label),
            modular: self.modular && o.modular,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "weight": self.weight,
            "type": self.typ,
            "modular": self.modular,
            "series": self.series.to_json_with("u", Frac::to_json),
        })
    }
}

/// Σ_a w(a) G(u_a) over monic a with q^{deg a} < trunc, where
/// G(t) = Σ_j β_j t^{j+1}; terms with larger deg a vanish modulo u^trunc.
/// `weight` returns `None` to skip an a.
pub fn a_expansion<C: Coeff>(
    field: &Fq,
    trunc: usize,
    betas: &[C],
    zero: &C,
    embed: impl Fn(&Poly) -> C,
    weight: impl Fn(&Poly) -> Option<C>,
) -> Result<USeries<C>> {
    let q = field.q() as usize;
    let mut acc = USeries::zero(zero, trunc);
    let mut d = 0usize;
    while q.pow(d as u32) < trunc {
        for a in monic_iter(field, d) {
            let Some(w) = weight(&a) else { continue };
            if w.is_zero() {
                continue;
            }
            let ua = u_a_series(&a, trunc)?.map(zero, &embed);
            let mut g = USeries::zero(zero, trunc);
            let mut power = ua.clone();
            for (j, b) in betas.iter().enumerate() {
                if j > 0 {
                    power = power.mul(&ua);
                }
                if power.valuation() >= trunc {
                    break;
                }
                if !b.is_zero() {
                    g = g.add(&power.scale(b));
                }
            }
            acc = acc.add(&g.scale(&w));
        }
        d += 1;
    }
    Ok(acc)
}

fn frac_embed(a: &Poly) -> Frac {
    Frac::from_poly(a.clone())
}

fn carlitz_row(field: &Fq, n: usize) -> Vec<Frac> {
    GossTable::build(&LatticeSpec::carlitz(field), n).row(n - 1).to_vec()
}

/// E_k = -ζ_C(k)/π̃^k - Σ_{a monic} G_k(u_a), exact modulo u^trunc.
pub fn eisenstein(field: &Fq, k: u64, trunc: usize) -> Result<FormExpansion> {
    let zeta = zeta_ratio(field, k)?;
    let zero = Frac::zero(field);
    let betas = carlitz_row(field, k as usize);
    let sum = a_expansion(field, trunc, &betas, &zero, frac_embed, |_| Some(Frac::one(field)))?;
    let series = USeries::constant(zeta.neg(), trunc).sub(&sum);
    Ok(FormExpansion { series, weight: k as i64, typ: 0, label: format!("eisenstein {k}"), modular: true })
}

/// g_d = -L_d E_{q^d - 1}; its coefficients are checked to lie in A.
pub fn g_form(field: &Fq, d: u32, trunc: usize) -> Result<FormExpansion> {
    if d == 0 {
        return Err(Error::arg("g_d needs d >= 1"));
    }
    let k = (field.q() as u64).pow(d) - 1;
    let e = eisenstein(field, k, trunc)?;
    let ld = Frac::from_poly(big_l(field, d).neg());
    let out = FormExpansion { series: e.series.scale(&ld), weight: k as i64, typ: 0, label: format!("g_{d}"), modular: true };
    if out.integral_series().is_none() {
        return Err(Error::Falsified(format!("g_{d} has a non-integral coefficient")));
    }
    Ok(out)
}

/// E = Σ_{a monic} a·u_a, exact modulo u^trunc (weight 2, type 1, quasi-modular).
pub fn false_eisenstein(field: &Fq, trunc: usize) -> Result<FormExpansion> {
    let zero = Frac::zero(field);
    let series = a_expansion(field, trunc, &[Frac::one(field)], &zero, frac_embed, |a| Some(frac_embed(a)))?;
    let q1 = field.q() as u64 - 1;
    Ok(FormExpansion { series, weight: 2, typ: 1 % q1, label: "falseE".into(), modular: false })
}

/// Petrov's conditions k - 2n > 0, k ≡ 2n mod (q - 1), n ≤ p^{ord_p(k - n)}.
pub fn petrov_conditions(field: &Fq, k: u64, n: u64) -> bool {
    let q1 = field.q() as u64 - 1;
    let p = field.p() as u64;
    if k <= 2 * n || (k - 2 * n) % q1 != 0 {
        return false;
    }
    let mut m = k - n;
    let mut pe = 1u64;
    while m % p == 0 {
        m /= p;
        pe = pe.saturating_mul(p);
    }
    n <= pe
}

/// f_{k,n} = Σ_{a monic} a^{k-n} G_n(u_a), flagged modular when Petrov's
/// conditions hold.
pub fn petrov_form(field: &Fq, k: u64, n: u64, trunc: usize) -> Result<FormExpansion> {
    if k == 0 || n == 0 {
        return Err(Error::arg("petrov form needs k, n >= 1"));
    }
    let zero = Frac::zero(field);
    let betas = carlitz_row(field, n as usize);
    let e = k as i64 - n as i64;
    let series = a_expansion(field, trunc, &betas, &zero, frac_embed, |a| frac_embed(a).pow_i(e).ok())?;
    let q1 = field.q() as u64 - 1;
    Ok(FormExpansion {
        series,
        weight: k as i64,
        typ: n % q1,
        label: format!("petrov({k},{n})"),
        modular: petrov_conditions(field, k, n),
    })
}
