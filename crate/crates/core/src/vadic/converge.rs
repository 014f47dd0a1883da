//! ℘-adic convergence of K-rational u-expansions to a target series.

use serde::Serialize;
use serde_json::{json, Value};

use super::family::goss_family;
use super::vseries::{VOrd, VSeries};
use super::weight::{prec_for, WeightS};
use crate::algebra::{Poly, PrimePower};
use crate::error::{Error, Result};
use crate::forms::{g_form, petrov_form, FormExpansion};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceRow {
    pub i: usize,
    pub weight: i64,
    pub modular: bool,
    pub depth: VOrd,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvergenceReport {
    pub label: String,
    pub rows: Vec<ConvergenceRow>,
    pub schedule: Option<Vec<i64>>,
    /// First index whose depth is below the schedule.
    pub failing: Option<usize>,
}

impl ConvergenceReport {
    pub fn depths(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.depth.value()).collect()
    }

    pub fn ok(&self) -> bool {
        self.failing.is_none()
    }

    pub fn strictly_increasing(&self) -> bool {
        self.depths().windows(2).all(|w| w[0] < w[1])
    }

    pub fn to_json(&self) -> Value {
        json!({
            "label": self.label,
            "rows": self.rows,
            "schedule": self.schedule,
            "failing": self.failing,
            "ok": self.ok(),
        })
    }
}

/// Tabulates ord_℘(f_i - f) for the approximants f_i and checks each depth
/// against `schedule` when one is given.
pub fn convergence_experiment(
    label: &str,
    target: &VSeries,
    approximants: &[FormExpansion],
    schedule: Option<&[i64]>,
) -> Result<ConvergenceReport> {
    if let Some(s) = schedule {
        if s.len() != approximants.len() {
            return Err(Error::arg("schedule length differs from the number of approximants"));
        }
    }
    let ring = target.ring().clone();
    let mut rows = Vec::with_capacity(approximants.len());
    let mut failing = None;
    for (i, f) in approximants.iter().enumerate() {
        let fi = VSeries::from_frac(&f.series.truncate(target.trunc()), &ring)?;
        let depth = fi.sub(target)?.window_ord();
        if let Some(s) = schedule {
            if depth.value() < s[i] && failing.is_none() {
                failing = Some(i);
            }
        }
        rows.push(ConvergenceRow { i, weight: f.weight, modular: f.modular, depth });
    }
    Ok(ConvergenceReport { label: label.into(), rows, schedule: schedule.map(<[i64]>::to_vec), failing })
}

/// f_{k_i,1} → f̂_{(0,0),1} with k_i = 1 + (q^d - 1)p^i, i = 0..=i_max.
pub fn petrov_goss_experiment(
    prime: &Poly,
    i_max: u32,
    trunc: usize,
    m: u32,
    schedule: Option<&[i64]>,
) -> Result<ConvergenceReport> {
    let field = prime.field();
    let d = prime.degree().ok_or_else(|| Error::arg("℘ must be nonzero"))? as u32;
    let qd1 = (field.q() as u64).pow(d) - 1;
    let p = field.p() as u64;
    let s = WeightS::new(prime, 0, 0, prec_for(field.p(), m))?;
    let target = goss_family(prime, &s, 1, trunc, m)?.series;
    let approximants = (0..=i_max)
        .map(|i| petrov_form(field, 1 + qd1 * p.pow(i), 1, trunc))
        .collect::<Result<Vec<_>>>()?;
    convergence_experiment("petrov(1+(q^d-1)p^i, 1) -> fhat((0,0), 1)", &target, &approximants, schedule)
}

/// f·g_d^{q^i} → f, where d = deg ℘ so that ℘ | [d]. The schedule is
/// q^i + ord_℘(f), capped by the working precision.
pub fn boost_experiment(f: &FormExpansion, prime: &Poly, i_max: u32, m: u32) -> Result<ConvergenceReport> {
    let field = prime.field();
    let d = prime.degree().ok_or_else(|| Error::arg("℘ must be nonzero"))? as u32;
    let trunc = f.series.trunc();
    let ring = PrimePower::new(prime, m)?;
    let target = VSeries::from_frac(&f.series, &ring)?;
    let g = g_form(field, d, trunc)?;
    let q = field.q() as u64;
    let approximants: Vec<FormExpansion> = (0..=i_max)
        .map(|i| {
            let e = q.pow(i);
            FormExpansion {
                series: f.series.mul(&g.series.pow(e)),
                weight: f.weight + g.weight * e as i64,
                typ: f.typ,
                label: format!("{} * g_{d}^{e}", f.label),
                modular: f.modular,
            }
        })
        .collect();
    let base = target.window_ord().value();
    let cap = target.abs_prec();
    let schedule: Vec<i64> = (0..=i_max).map(|i| (q.pow(i) as i64 + base).min(cap)).collect();
    convergence_experiment(&format!("{} * g_{d}^(q^i) -> {}", f.label, f.label), &target, &approximants, Some(&schedule))
}
