//! Hyperderivative identities among Goss polynomials, as executable checks.
//! Each returns whether the identity holds exactly (on the certified window
//! for series identities).

use super::table::GossTable;
use crate::algebra::{binom_mod_p, Coeff, Frac};
use crate::carlitz::LatticeSpec;
use crate::series::{DensePoly, Laurent, USeries};

fn sign(r: usize, field_zero: &Frac) -> Frac {
    if r % 2 == 0 {
        field_zero.one_like()
    } else {
        field_zero.one_like().neg()
    }
}

/// t^{-1}·g for a polynomial divisible by t.
fn div_t(g: &DensePoly<Frac>) -> DensePoly<Frac> {
    debug_assert!(g.coeff(0).is_zero());
    DensePoly::new(g.zero_elem(), g.coeffs().iter().skip(1).cloned().collect())
}

/// t^m·g with m ≥ -1 (m = -1 needs t | g).
fn shift_t(g: &DensePoly<Frac>, m: i64) -> DensePoly<Frac> {
    if m < 0 {
        div_t(g)
    } else {
        g.shift(m as usize)
    }
}

/// t^2 ∂_t G_k = k G_{k+1}.
pub fn check_t_derivative(table: &mut GossTable, k: usize) -> bool {
    table.extend_to(k + 1);
    let lhs = table.goss(k).hyperderivative(1).shift(2);
    lhs == table.goss(k + 1).scale_int(k as i64)
}

/// G_{pk} = G_k^p.
pub fn check_frobenius(table: &mut GossTable, k: usize) -> bool {
    let p = table.lattice().field().p() as usize;
    table.extend_to(p * k);
    table.goss(p * k) == table.goss(k).pow(p as u64)
}

/// binom(n+r-1, r) G_{n+r} = Σ_j β_{r,j} t^{j+1} ∂_t^j(t^{j-1} G_n), n ≥ 1.
pub fn check_diffs_c(table: &mut GossTable, n: usize, r: usize) -> bool {
    table.extend_to(n + r);
    let p = table.lattice().field().p();
    let b = binom_mod_p((n + r - 1) as i64, r as u64, p);
    let lhs = table.goss(n + r).scale_int(b as i64);
    let gn = table.goss(n);
    let mut rhs = DensePoly::zero(gn.zero_elem());
    for j in 0..=r {
        let beta = table.beta(r, j);
        if beta.is_zero() {
            continue;
        }
        let inner = shift_t(&gn, j as i64 - 1).hyperderivative(j).shift(j + 1);
        rhs = rhs.add(&inner.scale(beta));
    }
    lhs == rhs
}

/// t_Λ(z) = 1/e_Λ(z) as a z-Laurent series known below z^{window - 1}.
pub fn t_laurent(lattice: &LatticeSpec, window: usize) -> Laurent<Frac> {
    let q = lattice.field().q() as usize;
    let mut j = 0usize;
    while q.pow(j as u32 + 1) <= window + 1 {
        j += 1;
    }
    let e = lattice.exp_twisted(j).to_series(window + 1);
    Laurent::from_series(&e, 0).inverse().expect("e_Λ has a simple zero at 0")
}

/// ∂_z^r(t^n) = (-1)^r t^n ∂_t^{n-1}(t^{n-2} G_{r+1}(t)), n ≥ 1.
pub fn check_diffs_a(table: &mut GossTable, t: &Laurent<Frac>, n: usize, r: usize) -> bool {
    table.extend_to(r + 1);
    let lhs = t.pow(n as u64).hyperderivative(r);
    let g = table.goss(r + 1);
    let zero = g.zero_elem().clone();
    let inner = shift_t(&g, n as i64 - 2).hyperderivative(n - 1).shift(n).scale(&sign(r, &zero));
    lhs.agrees_with(&inner.eval_laurent(t))
}

/// ∂_z^r(t^n) = (-1)^r Σ_j β_{r,j} binom(n+j-1, j) t^{n+j}, n ≥ 0.
pub fn check_diffs_b(table: &mut GossTable, t: &Laurent<Frac>, n: usize, r: usize) -> bool {
    table.extend_to(r + 1);
    let p = table.lattice().field().p();
    let lhs = t.pow(n as u64).hyperderivative(r);
    let zero = table.beta(0, 0).zero_like();
    let mut poly = DensePoly::zero(&zero);
    for j in 0..=r {
        let b = binom_mod_p(n as i64 + j as i64 - 1, j as u64, p);
        poly = poly.add(&DensePoly::monomial(table.beta(r, j).scale_int(b as i64), n + j));
    }
    lhs.agrees_with(&poly.scale(&sign(r, &zero)).eval_laurent(t))
}

/// ∂_z^r(S_n) = (-1)^{n+r-1} ∂_z^{n-1}(S_{r+1}), with S_m = G_m(t).
pub fn check_lem1b(table: &mut GossTable, t: &Laurent<Frac>, n: usize, r: usize) -> bool {
    table.extend_to(n.max(r + 1));
    let zero = table.beta(0, 0).zero_like();
    let sn = table.goss(n).eval_laurent(t);
    let sr = table.goss(r + 1).eval_laurent(t);
    let lhs = sn.hyperderivative(r);
    let rhs = sr.hyperderivative(n - 1).scale(&sign(n + r - 1, &zero));
    lhs.agrees_with(&rhs)
}

/// x/(1 - t e_Λ(x))^n = ∂_t^{n-1}(t^{n-2} 𝒢_Λ(t, x)) in K[t][[x]] modulo x^window.
pub fn check_genfundiff(table: &mut GossTable, n: usize, window: usize) -> bool {
    let lattice = table.lattice().clone();
    let field = lattice.field();
    let zero = Frac::zero(field);
    let pzero = DensePoly::zero(&zero);
    let t = DensePoly::var(&zero);
    let q = field.q() as usize;
    let mut d = vec![pzero.clone(); window];
    d[0] = DensePoly::constant(Frac::one(field));
    let (mut qj, mut j) = (1usize, 0usize);
    while qj < window {
        d[qj] = t.scale(&lattice.alpha(j)).neg();
        qj *= q;
        j += 1;
    }
    let base = USeries::new(&pzero, d, window).inverse().expect("constant term 1");
    let lhs = base.pow(n as u64).shift(1).truncate(window);
    table.extend_to(window);
    let coeffs = (0..window).map(|k| shift_t(&table.goss(k), n as i64 - 2).hyperderivative(n - 1)).collect();
    let rhs = USeries::new(&pzero, coeffs, window);
    lhs.agrees_with(&rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Fq, Poly};

    #[test]
    fn identities_small() {
        let f = Fq::prime(3).unwrap();
        let lat = LatticeSpec::from_basis(&f, &[Frac::one(&f), Frac::from_poly(Poly::theta(&f))]).unwrap();
        let mut tab = GossTable::new(&lat);
        let t = t_laurent(&lat, 30);
        for n in 1..=4 {
            for r in 0..=4 {
                assert!(check_diffs_c(&mut tab, n, r), "c n={n} r={r}");
                assert!(check_diffs_a(&mut tab, &t, n, r), "a n={n} r={r}");
                assert!(check_diffs_b(&mut tab, &t, n, r), "b n={n} r={r}");
                assert!(check_lem1b(&mut tab, &t, n, r), "lem1b n={n} r={r}");
            }
            assert!(check_genfundiff(&mut tab, n, 20));
        }
        assert!(check_diffs_b(&mut tab, &t, 0, 3));
        for k in 1..=12 {
            assert!(check_t_derivative(&mut tab, k));
            assert!(check_frobenius(&mut tab, k));
        }
    }
}
