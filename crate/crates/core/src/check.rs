//! Identity suites over small parameters, seeded for reproducibility. The
//! command-line `check` subcommand runs these.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{
    big_d, big_l, binom_mod_p, bracket, carlitz_factorial, Fq, Frac, Poly, PrimePower,
};
use crate::carlitz::{zeta_cross_check, LatticeSpec};
use crate::error::{Error, Result};
use crate::forms::g_form;
use crate::goss::{
    check_diffs_a, check_diffs_b, check_diffs_c, check_frobenius, check_genfundiff, check_lem1b,
    check_t_derivative, goss_closed, goss_genseries, goss_recursion, lattice_sum_oracle, pi_times_goss_integral,
    t_laurent, GossTable,
};
use crate::operators::{
    hecke_t, hecke_t_s, hecke_u_frac, hecke_v_frac, pi_theta_integral, theta_iterate, theta_r, theta_r_monomial,
};
use crate::series::{check_composition_rule, check_digit_factorization, check_pth_power_rule, check_product_rule, USeries};
use crate::vadic::{a_pow_s, false_e_decomposition_check, petrov_goss_experiment, prec_for, VSeries, WeightS};

pub const SUITES: &[&str] = &[
    "algebra",
    "series",
    "goss",
    "lattice",
    "diffs",
    "theta",
    "integrality",
    "eisenstein",
    "zeta",
    "vadic",
    "hecke",
];

/// Parameters shared by the suites.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub field: Fq,
    /// Largest Goss index / operator order exercised.
    pub k: usize,
    pub trunc: usize,
    pub seed: u64,
    pub prime: Poly,
    pub prec: u32,
}

impl CheckConfig {
    pub fn new(field: &Fq) -> Self {
        CheckConfig { field: field.clone(), k: 12, trunc: 20, seed: 0, prime: Poly::theta(field), prec: 6 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub lines: Vec<CheckLine>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.lines.iter().all(|l| l.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({ "suite": self.suite, "passed": self.passed(), "checks": self.lines })
    }
}

struct Lines(Vec<CheckLine>);

impl Lines {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(CheckLine { name: name.into(), passed, detail: detail.into() });
    }

    /// Records the first failing parameter of an exhaustive loop.
    fn all<I: IntoIterator<Item = (String, Result<bool>)>>(&mut self, name: &str, cases: I) -> Result<()> {
        let mut count = 0usize;
        for (label, r) in cases {
            count += 1;
            match r {
                Ok(true) => {}
                Ok(false) => {
                    self.push(name, false, format!("fails at {label}"));
                    return Ok(());
                }
                Err(e) if e.is_falsification() => {
                    self.push(name, false, format!("{label}: {e}"));
                    return Ok(());
                }
                Err(e) => return Err(e),
            }
        }
        self.push(name, true, format!("{count} cases"));
        Ok(())
    }
}

pub fn random_poly(rng: &mut impl Rng, field: &Fq, max_deg: usize) -> Poly {
    let coeffs = (0..=max_deg).map(|_| rng.gen_range(0..field.q())).collect();
    Poly::from_coeffs(field, coeffs)
}

pub fn random_monic(rng: &mut impl Rng, field: &Fq, deg: usize) -> Poly {
    let mut c: Vec<u32> = (0..deg).map(|_| rng.gen_range(0..field.q())).collect();
    c.push(1);
    Poly::from_coeffs(field, c)
}

pub fn random_series(rng: &mut impl Rng, field: &Fq, trunc: usize, max_deg: usize) -> USeries<Poly> {
    let coeffs = (0..trunc).map(|_| random_poly(rng, field, max_deg)).collect();
    USeries::new(&Poly::zero(field), coeffs, trunc)
}

fn to_frac(s: &USeries<Poly>) -> USeries<Frac> {
    s.map(&Frac::zero(s.zero_elem().field()), |c| Frac::from_poly(c.clone()))
}

/// Monic irreducibles of degree 1 and 2.
pub fn small_irreducibles(field: &Fq) -> Vec<Poly> {
    (1..=2).flat_map(|d| crate::algebra::monic_enum(field, d)).filter(Poly::is_irreducible).collect()
}

pub fn test_lattices(field: &Fq, rng: &mut impl Rng) -> Result<Vec<LatticeSpec>> {
    let mut out = vec![LatticeSpec::carlitz(field), LatticeSpec::division(&Poly::theta(field))?];
    let ell2 = crate::algebra::monic_enum(field, 2).into_iter().find(Poly::is_irreducible).unwrap();
    out.push(LatticeSpec::division(&ell2)?);
    let alphas = vec![
        Frac::one(field),
        Frac::from_poly(random_poly(rng, field, 2)),
        Frac::new(random_poly(rng, field, 1), random_monic(rng, field, 1))?,
    ];
    out.push(LatticeSpec::finite(field, alphas)?);
    Ok(out)
}

fn suite_algebra(cfg: &CheckConfig, rng: &mut ChaCha8Rng, out: &mut Lines) -> Result<()> {
    let f = &cfg.field;
    out.all(
        "D_i = [i] D_{i-1}^q, L_i = -[i] L_{i-1}",
        (1..=4u32).map(|i| {
            let b = bracket(f, i);
            let ok = b.map(|b| {
                big_d(f, i) == b.mul(&big_d(f, i - 1).pow(f.q() as u64)) && big_l(f, i) == b.mul(&big_l(f, i - 1)).neg()
            });
            (format!("i={i}"), ok)
        }),
    )?;
    let p = f.p();
    out.all(
        "Lucas binomials",
        (0..40i64).flat_map(|n| (0..=n as u64).map(move |j| (n, j))).map(|(n, j)| {
            let mut exact = 1u128;
            for i in 0..j as u128 {
                exact = exact * (n as u128 - i) / (i + 1);
            }
            (format!("n={n} j={j}"), Ok(binom_mod_p(n, j, p) as u128 == exact % p as u128))
        }),
    )?;
    let cases: Vec<_> = (0..30)
        .map(|i| {
            let a = random_poly(rng, f, 8);
            let b = random_poly(rng, f, 4);
            let ok = if b.is_zero() {
                Ok(true)
            } else {
                b.divmod(&a).map(|_| true).and_then(|_| {
                    let (qq, r) = a.divmod(&b)?;
                    Ok(qq.mul(&b).add(&r) == a && r.degree().is_none_or(|d| Some(d) < b.degree()))
                })
            };
            (format!("sample {i}"), ok)
        })
        .collect();
    out.all("division with remainder", cases)?;
    let ring = PrimePower::new(&cfg.prime, cfg.prec)?;
    let cases: Vec<_> = (0..30)
        .map(|i| {
            let a = random_poly(rng, f, 6);
            let ok = if cfg.prime.divides(&a) {
                Ok(true)
            } else {
                let x = ring.reduce(&a);
                x.inv().map(|y| x.mul(&y).rep().is_one())
            };
            (format!("sample {i}"), ok)
        })
        .collect();
    out.all("units of A/℘^M", cases)?;
    let pi = carlitz_factorial(f, (f.q() as u64).pow(2) - 1);
    out.push("Π_{q^2-1} = D_1^{q-1}", pi == big_d(f, 1).pow(f.q() as u64 - 1), "");
    Ok(())
}

fn suite_series(cfg: &CheckConfig, rng: &mut ChaCha8Rng, out: &mut Lines) -> Result<()> {
    let f = &cfg.field;
    let a = to_frac(&random_series(rng, f, cfg.trunc, 2));
    let b = to_frac(&random_series(rng, f, cfg.trunc, 2));
    let j_max = cfg.k.min(cfg.trunc.saturating_sub(1));
    out.all("product rule", (0..=j_max).map(|j| (format!("j={j}"), Ok(check_product_rule(&a, &b, j)))))?;
    out.all(
        "composition rule",
        (0..=j_max.min(6)).flat_map(|j| (0..=6).map(move |k| (j, k))).map(|(j, k)| {
            (format!("j={j} k={k}"), Ok(check_composition_rule(&a, j, k)))
        }),
    )?;
    out.all("p-th power rule", (0..=j_max).map(|j| (format!("j={j}"), Ok(check_pth_power_rule(&a, 1, j)))))?;
    out.all("digit factorization", (0..=j_max).map(|j| (format!("j={j}"), Ok(check_digit_factorization(&a, j)))))?;
    let mut unit = b.clone();
    unit.set_coeff(0, Frac::one(f));
    let inv = unit.inverse()?;
    out.push("series inverse", unit.mul(&inv) == USeries::one(&Frac::zero(f), cfg.trunc), "");
    Ok(())
}

fn suite_goss(cfg: &CheckConfig, rng: &mut ChaCha8Rng, out: &mut Lines) -> Result<()> {
    for lat in test_lattices(&cfg.field, rng)? {
        let rec = goss_recursion(&lat, cfg.k);
        let gen = goss_genseries(&lat, cfg.k);
        let name = format!("recursion = generating series = closed form on {}", lat.label());
        let agree = rec == gen;
        out.all(&name, (0..cfg.k).map(|k| (format!("k={}", k + 1), Ok(agree && goss_closed(&lat, k) == rec.goss(k + 1)))))?;
    }
    Ok(())
}

fn suite_lattice(cfg: &CheckConfig, _rng: &mut ChaCha8Rng, out: &mut Lines) -> Result<()> {
    let f = &cfg.field;
    let th = Frac::from_poly(Poly::theta(f));
    for basis in [vec![Frac::one(f)], vec![Frac::one(f), th]] {
        let lat = LatticeSpec::from_basis(f, &basis)?;
        let mut t = GossTable::new(&lat);
        let k_max = cfg.k.min(10);
        let name = format!("S_k = G_k(1/e) on {}", lat.label());
        out.all(&name, (1..=k_max).map(|k| (format!("k={k}"), lattice_sum_oracle(&lat, &mut t, k))))?;
    }
    Ok(())
}

fn suite_diffs(cfg: &CheckConfig, rng: &mut ChaCha8Rng, out: &mut Lines) -> Result<()> {
    let f = &cfg.field;
    let lats = test_lattices(f, rng)?;
    let n_max = cfg.k;
    for lat in &lats[..3] {
        let mut t = GossTable::new(lat);
        let name = format!("identity (c) on {}", lat.label());
        let cases: Vec<_> = (1..=n_max)
            .flat_map(|n| (0..=n_max).map(move |r| (n, r)))
            .map(|(n, r)| (format!("n={n} r={r}"), Ok(check_diffs_c(&mut t, n, r))))
            .collect();
        out.all(&name, cases)?;
        let cases: Vec<_> = (1..=n_max)
            .map(|k| (format!("k={k}"), Ok(check_t_derivative(&mut t, k) && check_frobenius(&mut t, k))))
            .collect();
        out.all(&format!("t^2 ∂_t and Frobenius on {}", lat.label()), cases)?;
    }
    let lat = LatticeSpec::from_basis(f, &[Frac::one(f), Frac::from_poly(Poly::theta(f))])?;
    let mut t = GossTable::new(&lat);
    let tl = t_laurent(&lat, 60);
    let m = n_max.min(8);
    let cases: Vec<_> = (1..=m)
        .flat_map(|n| (0..=m).map(move |r| (n, r)))
        .map(|(n, r)| {
            let ok = check_diffs_a(&mut t, &tl, n, r) && check_diffs_b(&mut t, &tl, n, r) && check_lem1b(&mut t, &tl, n, r);
            (format!("n={n} r={r}"), Ok(ok))
        })
        .collect();
    out.all(&format!("identities (a), (b) and ∂^r S_n on {}", lat.label()), cases)?;
    let cases: Vec<_> = (1..=m).map(|n| (format!("n={n}"), Ok(check_genfundiff(&mut t, n, 20)))).collect();
    out.all("generating function derivatives", cases)?;
    Ok(())
}

fn suite_theta(cfg: &CheckConfig, rng: &mut ChaCha8Rng, out: &mut Lines) -> Result<()> {
    let f = &cfg.field;
    let mut t = GossTable::new(&LatticeSpec::carlitz(f));
    let m = cfg.k;
    let cases: Vec<_> = (1..=m)
        .flat_map(|n| (0..=m).map(move |r| (n, r)))
        .map(|(n, r)| {
            let ok = theta_r_monomial(&mut t, n, r).and_then(|a| {
                let b = theta_r(&mut t, &USeries::monomial(Frac::one(f), n, n + r + 1), r)?;
                Ok(a == b)
            });
            (format!("n={n} r={r}"), ok)
        })
        .collect();
    out.all("Θ^r(u^n): both formulas", cases)?;
    let cases: Vec<_> = (0..100)
        .map(|i| {
            let s = to_frac(&random_series(rng, f, 12, 2));
            let ok = theta_r(&mut t, &s, 1).map(|th| th == s.hyperderivative(1).shift(2).truncate(12));
            (format!("sample {i}"), ok)
        })
        .collect();
    out.all("Θ^1 = u^2 ∂_u", cases)?;
    let p = f.p() as usize;
    let ones = USeries::new(&Frac::zero(f), (0..16).map(|n| if n == 0 { Frac::zero(f) } else { Frac::one(f) }).collect(), 16);
    let cases: Vec<_> = (p..p + 3)
        .map(|r| {
            let ok = theta_r(&mut t, &ones, r).map(|th| theta_iterate(&ones, r).is_zero() && !th.is_zero());
            (format!("r={r}"), ok)
        })
        .collect();
    out.all("Θ^{∘r} = 0 while Θ^r ≠ 0 for r ≥ p", cases)?;
    let s = to_frac(&random_series(rng, f, 16, 1));
    let cases: Vec<_> = (0..=4)
        .flat_map(|j| (0..=4).map(move |k| (j, k)))
        .map(|(j, k)| {
            let ok = (|| {
                let inner = theta_r(&mut t, &s, k)?;
                let lhs = theta_r(&mut t, &inner, j)?;
                let b = binom_mod_p((j + k) as i64, j as u64, f.p());
                Ok(lhs == theta_r(&mut t, &s, j + k)?.scale_int(b as i64))
            })();
            (format!("j={j} k={k}"), ok)
        })
        .collect();
    out.all("Θ^j Θ^k = binom(j+k, j) Θ^{j+k}", cases)?;
    Ok(())
}

fn suite_integrality(cfg: &CheckConfig, rng: &mut ChaCha8Rng, out: &mut Lines) -> Result<()> {
    let f = &cfg.field;
    let q = f.q() as usize;
    let mut t = GossTable::new(&LatticeSpec::carlitz(f));
    let k_max = cfg.k.max(q * q + 1);
    let cases: Vec<_> = (1..=k_max).map(|k| (format!("k={k}"), pi_times_goss_integral(&mut t, k))).collect();
    out.all("Π_{k-1} G_k integral", cases)?;
    let mut i_max = 0u32;
    while q.pow(i_max + 1) < 400 && i_max < 3 {
        i_max += 1;
    }
    t.extend_to(q.pow(i_max) + 1);
    out.all(
        "u^2 coefficient of G_{q^i+1} is 1/D_i",
        (1..=i_max).map(|i| {
            let g = t.goss(q.pow(i) + 1);
            (format!("i={i}"), Frac::inv_poly(&big_d(f, i)).map(|x| g.coeff(2) == x))
        }),
    )?;
    out.all(
        "G_{q^j} = t^{q^j}",
        (0..=i_max).map(|j| {
            let n = q.pow(j);
            (format!("j={j}"), Ok(t.goss(n) == crate::series::DensePoly::monomial(Frac::one(f), n)))
        }),
    )?;
    let cases: Vec<_> = (0..=q * q)
        .flat_map(|r| (0..3).map(move |i| (r, i)))
        .map(|(r, i)| {
            let s = random_series(rng, f, 12, 2);
            (format!("r={r} sample {i}"), pi_theta_integral(&mut t, &s, r).map(|_| true))
        })
        .collect();
    out.all("Π_r Θ^r preserves integrality", cases)?;
    Ok(())
}

fn suite_eisenstein(cfg: &CheckConfig, _rng: &mut ChaCha8Rng, out: &mut Lines) -> Result<()> {
    let f = &cfg.field;
    let trunc = cfg.trunc;
    let cases: Vec<_> = (1..=2u32)
        .map(|d| {
            let ok = g_form(f, d, trunc).and_then(|g| {
                let b = bracket(f, d)?;
                let s = g.integral_series().ok_or_else(|| Error::Falsified("g_d not integral".into()))?;
                Ok(s.coeffs().iter().enumerate().all(|(n, c)| {
                    let target = if n == 0 { Poly::one(f) } else { Poly::zero(f) };
                    b.divides(&c.sub(&target))
                }))
            });
            (format!("d={d}"), ok)
        })
        .collect();
    out.all("g_d integral and ≡ 1 mod [d]", cases)?;
    Ok(())
}

fn suite_zeta(cfg: &CheckConfig, _rng: &mut ChaCha8Rng, out: &mut Lines) -> Result<()> {
    let f = &cfg.field;
    let q1 = f.q() as u64 - 1;
    let rel = 20usize;
    let cases: Vec<_> = (1..=2u64)
        .map(|m| {
            let k = m * q1;
            let mut d = 1usize;
            while crate::carlitz::zeta_tail_bound(f, k, d) < rel as i64 {
                d += 1;
            }
            (format!("k={k} D={d}"), zeta_cross_check(f, k, d, rel))
        })
        .collect();
    out.all("ζ_C(k)/π̃^k: rational vs. infinite place", cases)?;
    Ok(())
}

fn suite_vadic(cfg: &CheckConfig, rng: &mut ChaCha8Rng, out: &mut Lines) -> Result<()> {
    let f = &cfg.field;
    let prime = &cfg.prime;
    let ring = PrimePower::new(prime, cfg.prec)?;
    let j = prec_for(f.p(), cfg.prec);
    let cases: Vec<_> = (0..50)
        .map(|i| {
            let a = loop {
                let deg = rng.gen_range(0..4);
                let a = random_monic(rng, f, deg);
                if !prime.divides(&a) {
                    break a;
                }
            };
            let n = rng.gen_range(0..200i64);
            let ok = WeightS::embed(prime, n, j)
                .and_then(|s| a_pow_s(&a, &s, &ring))
                .map(|x| x == ring.reduce(&a.pow(n as u64)));
            (format!("sample {i}"), ok)
        })
        .collect();
    out.all("a^s at integer s", cases)?;
    let d = prime.degree().unwrap() as u32;
    let q = f.q() as u64;
    let mut jj = 1u32;
    while q.pow(d * jj) < cfg.trunc as u64 {
        jj += 1;
    }
    out.all(
        "E = Σ_j ℘^j V_℘^j(f̂_{1,1})",
        [(format!("N={} J={jj}", cfg.trunc), false_e_decomposition_check(prime, cfg.trunc, jj))],
    )?;
    let r = petrov_goss_experiment(prime, 2, cfg.trunc, 3 * cfg.prec.max(10), None)?;
    out.push("Petrov → Goss depths increase", r.strictly_increasing(), format!("{:?}", r.depths()));
    Ok(())
}

fn suite_hecke(cfg: &CheckConfig, rng: &mut ChaCha8Rng, out: &mut Lines) -> Result<()> {
    let f = &cfg.field;
    let ells = small_irreducibles(f);
    let cases: Vec<_> = (0..20)
        .map(|i| {
            let s = to_frac(&random_series(rng, f, cfg.trunc, 2));
            let ell = ells[i % ells.len()].clone();
            let ok = (|| {
                let u = hecke_u_frac(&s, &ell)?;
                let v = hecke_v_frac(&s, &ell)?;
                Ok(u.coeffs().iter().chain(v.coeffs()).all(Frac::is_integral))
            })();
            (format!("ℓ={ell} sample {i}"), ok)
        })
        .collect();
    out.all("U_ℓ, V_ℓ preserve integrality", cases)?;
    let ring = PrimePower::new(&cfg.prime, cfg.prec)?;
    let cases: Vec<_> = ells
        .iter()
        .filter(|l| *l != &cfg.prime)
        .take(4)
        .map(|ell| {
            let k = rng.gen_range(1..30u64);
            let s = random_series(rng, f, cfg.trunc, 2);
            let ok = (|| {
                let w = WeightS::embed(&cfg.prime, k as i64, prec_for(f.p(), cfg.prec))?;
                let ts = hecke_t_s(&VSeries::from_poly(&s, &ring), ell, &w)?;
                let tk = VSeries::from_frac(&hecke_t(&to_frac(&s), ell, k)?, &ring)?;
                Ok(ts.sub(&tk)?.series().is_zero())
            })();
            (format!("ℓ={ell} k={k}"), ok)
        })
        .collect();
    out.all("T_ℓ at s = embed(k) matches ℓ^k V_ℓ + U_ℓ", cases)?;
    Ok(())
}

/// Runs one suite, or every suite for `"all"`.
pub fn run_suite(name: &str, cfg: &CheckConfig) -> Result<Vec<SuiteReport>> {
    if name == "all" {
        return SUITES.iter().map(|s| run_one(s, cfg)).collect();
    }
    Ok(vec![run_one(name, cfg)?])
}

fn run_one(name: &str, cfg: &CheckConfig) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Lines(Vec::new());
    let run = match name {
        "algebra" => suite_algebra,
        "series" => suite_series,
        "goss" => suite_goss,
        "lattice" => suite_lattice,
        "diffs" => suite_diffs,
        "theta" => suite_theta,
        "integrality" => suite_integrality,
        "eisenstein" => suite_eisenstein,
        "zeta" => suite_zeta,
        "vadic" => suite_vadic,
        "hecke" => suite_hecke,
        other => return Err(Error::arg(format!("unknown suite {other:?}; expected one of {SUITES:?} or all"))),
    };
    run(cfg, &mut rng, &mut out)?;
    Ok(SuiteReport { suite: name.into(), lines: out.0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        let f = Fq::prime(2).unwrap();
        let mut cfg = CheckConfig::new(&f);
        cfg.k = 6;
        cfg.trunc = 12;
        for s in ["algebra", "series", "goss", "lattice", "theta", "zeta", "hecke"] {
            let r = run_suite(s, &cfg).unwrap();
            assert!(r[0].passed(), "{}", r[0].to_json());
        }
        assert!(run_suite("nope", &cfg).is_err());
    }
}
