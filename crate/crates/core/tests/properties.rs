use proptest::prelude::*;

use drinfeld::algebra::{ord_v_poly, Fq, Frac, Order, Poly, PrimePower};
use drinfeld::carlitz::LatticeSpec;
use drinfeld::forms::{eisenstein, petrov_form};
use drinfeld::goss::{check_genfundiff, check_lem1b, check_t_derivative, t_laurent, GossTable};
use drinfeld::operators::{hecke_u_frac, hecke_u_v, hecke_v_frac, theta_iterate, theta_r};
use drinfeld::series::USeries;
use drinfeld::vadic::{a_pow_s, prec_for, VOrd, VSeries, WeightS};

fn field(q: u32) -> Fq {
    Fq::from_q(q).unwrap()
}

fn poly(f: &Fq, raw: &[u32]) -> Poly {
    Poly::from_coeffs(f, raw.iter().map(|c| c % f.q()).collect())
}

fn series(f: &Fq, raw: &[Vec<u32>], trunc: usize) -> USeries<Frac> {
    let coeffs = raw.iter().take(trunc).map(|c| Frac::from_poly(poly(f, c))).collect();
    USeries::new(&Frac::zero(f), coeffs, trunc)
}

fn int_series(f: &Fq, raw: &[Vec<u32>], trunc: usize) -> USeries<Poly> {
    let coeffs = raw.iter().take(trunc).map(|c| poly(f, c)).collect();
    USeries::new(&Poly::zero(f), coeffs, trunc)
}

fn raw_poly(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..64, 0..=max_len)
}

fn raw_series(len: usize, deg: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    prop::collection::vec(raw_poly(deg + 1), len)
}

/// Pascal's triangle mod p, independent of the library's Lucas routine.
fn pascal(n: usize, p: u32) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i64>> = vec![vec![1]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let row = (0..=i)
            .map(|j| {
                let a = if j > 0 { prev[j - 1] } else { 0 };
                let b = if j < i { prev[j] } else { 0 };
                (a + b) % p as i64
            })
            .collect();
        rows.push(row);
    }
    rows
}

fn scalar(f: &Fq, raw: &[u32]) -> Frac {
    Frac::from_poly(poly(f, raw))
}

fn vord_at_least(o: VOrd, bound: i64) -> bool {
    matches!(o, VOrd::AtLeast(_)) || o.value() >= bound
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn ord_is_a_valuation(q in prop::sample::select(vec![2u32, 3, 4, 5]), x in raw_poly(6), y in raw_poly(6), shift in 0u32..2) {
        let f = field(q);
        let prime = if shift == 0 { Poly::theta(&f) } else { Poly::from_ints(&f, &[1, 1]) };
        let (a, b) = (poly(&f, &x), poly(&f, &y));
        let (oa, ob) = (ord_v_poly(&a, &prime).unwrap(), ord_v_poly(&b, &prime).unwrap());
        prop_assert_eq!(ord_v_poly(&a.mul(&b), &prime).unwrap(), oa + ob);
        prop_assert!(ord_v_poly(&a.add(&b), &prime).unwrap() >= oa.min(ob));
    }

    #[test]
    fn hyperderivative_coefficients(q in prop::sample::select(vec![2u32, 3, 5]), raw in raw_series(16, 2), j in 0usize..8) {
        let f = field(q);
        let s = series(&f, &raw, 16);
        let d = s.hyperderivative(j);
        prop_assert_eq!(d.trunc(), 16 - j);
        let tri = pascal(20, f.p());
        for m in 0..d.trunc() {
            let want = s.coeff(m + j).unwrap().mul(&Frac::from_poly(Poly::constant(&f, tri[m + j][j] as u32)));
            prop_assert_eq!(d.coeff(m).unwrap(), &want);
        }
    }

    #[test]
    fn hyperderivatives_linear_and_commuting(
        q in prop::sample::select(vec![2u32, 3]),
        a in raw_series(16, 2),
        b in raw_series(16, 2),
        c in raw_poly(2),
        j in 0usize..=6,
        k in 0usize..=6,
    ) {
        let f = field(q);
        let (s, t) = (series(&f, &a, 16), series(&f, &b, 16));
        let c = scalar(&f, &c);
        let lhs = s.scale(&c).add(&t).hyperderivative(j);
        prop_assert_eq!(lhs, s.hyperderivative(j).scale(&c).add(&t.hyperderivative(j)));
        let tri = pascal(12, f.p());
        let jk = s.hyperderivative(k).hyperderivative(j);
        prop_assert_eq!(&jk, &s.hyperderivative(j).hyperderivative(k));
        prop_assert_eq!(jk, s.hyperderivative(j + k).scale_int(tri[j + k][j]));
    }

    #[test]
    fn truncation_is_sound(q in prop::sample::select(vec![2u32, 3]), a in raw_series(24, 1), b in raw_series(24, 1)) {
        let f = field(q);
        let run = |n: usize| {
            let s = series(&f, &a, n);
            let mut t = series(&f, &b, n);
            t.set_coeff(0, Frac::one(&f));
            let inner = series(&f, &a, n).shift(1);
            let out = s.mul(&t.inverse().unwrap()).hyperderivative(2);
            out.compose(&inner).unwrap().add(&s.pow(3))
        };
        let small = run(12);
        let big = run(24);
        prop_assert!(small.trunc() <= big.trunc());
        prop_assert_eq!(big.truncate(small.trunc()), small);
    }

    #[test]
    fn goss_identities_on_finite_lattices(q in prop::sample::select(vec![2u32, 3]), a1 in raw_poly(3), a2 in raw_poly(2)) {
        let f = field(q);
        let lat = LatticeSpec::finite(&f, vec![Frac::one(&f), scalar(&f, &a1), scalar(&f, &a2)]).unwrap();
        let mut t = GossTable::new(&lat);
        for k in 1..=40 {
            prop_assert!(check_t_derivative(&mut t, k), "k={}", k);
        }
        for n in 1..=6 {
            prop_assert!(check_genfundiff(&mut t, n, 16), "n={}", n);
        }
    }

    #[test]
    fn theta_composition_and_support(q in prop::sample::select(vec![2u32, 3, 4]), raw in raw_series(16, 1), j in 0usize..=6, k in 0usize..=6, m in 0u64..3) {
        let f = field(q);
        let q1 = f.q() as u64 - 1;
        let mut t = GossTable::new(&LatticeSpec::carlitz(&f));
        let mut s = series(&f, &raw, 16);
        for n in 0..16 {
            if n as u64 % q1 != m % q1 {
                s.set_coeff(n, Frac::zero(&f));
            }
        }
        let inner = theta_r(&mut t, &s, k).unwrap();
        let lhs = theta_r(&mut t, &inner, j).unwrap();
        let tri = pascal(12, f.p());
        prop_assert_eq!(lhs, theta_r(&mut t, &s, j + k).unwrap().scale_int(tri[j + k][j]));
        let out = theta_r(&mut t, &s, j).unwrap();
        for (n, c) in out.coeffs().iter().enumerate() {
            prop_assert!(c.is_zero() || n as u64 % q1 == (m + j as u64) % q1, "u^{} in Θ^{}", n, j);
        }
        for (jj, b) in t.row(j).iter().enumerate() {
            prop_assert!(b.is_zero() || jj as u64 % q1 == j as u64 % q1);
        }
    }

    #[test]
    fn hecke_linear_and_integral(
        q in prop::sample::select(vec![2u32, 3]),
        a in raw_series(14, 2),
        b in raw_series(14, 2),
        c in raw_poly(2),
        ell in prop::sample::select(vec![vec![0i64, 1], vec![1, 1], vec![1, 1, 1], vec![2, 0, 1]]),
    ) {
        let f = field(q);
        let ell = Poly::from_ints(&f, &ell);
        prop_assume!(ell.is_irreducible());
        let (s, t) = (series(&f, &a, 14), series(&f, &b, 14));
        let c = scalar(&f, &c);
        let comb = s.scale(&c).add(&t);
        let us = hecke_u_frac(&s, &ell).unwrap();
        prop_assert_eq!(hecke_u_frac(&comb, &ell).unwrap(), us.scale(&c).add(&hecke_u_frac(&t, &ell).unwrap()));
        let vs = hecke_v_frac(&s, &ell).unwrap();
        prop_assert_eq!(hecke_v_frac(&comb, &ell).unwrap(), vs.scale(&c).add(&hecke_v_frac(&t, &ell).unwrap()));
        prop_assert!(us.coeffs().iter().chain(vs.coeffs()).all(Frac::is_integral));
    }

    #[test]
    fn hecke_at_prime_keeps_norm(raw in raw_series(12, 3), m in 1u32..4) {
        let f = field(3);
        let prime = Poly::theta(&f);
        let ring = PrimePower::new(&prime, 8).unwrap();
        let s = int_series(&f, &raw, 12);
        let v = VSeries::from_poly(&s.map(&Poly::zero(&f), |c| c.mul(&prime.pow(m as u64))), &ring);
        let base = v.window_ord().value();
        let (u, vv) = hecke_u_v(&v, &prime).unwrap();
        prop_assert!(vord_at_least(u.window_ord(), base));
        prop_assert!(vord_at_least(vv.window_ord(), base));
    }

    #[test]
    fn a_pow_s_is_multiplicative_and_additive(
        a in raw_poly(4),
        b in raw_poly(4),
        x1 in 0u64..1000,
        y1 in 0u64..100_000,
        x2 in 0u64..1000,
        y2 in 0u64..100_000,
        which in 0usize..3,
    ) {
        let (q, prime) = [(3u32, vec![0i64, 1]), (2, vec![1, 1, 1]), (5, vec![2, 1])][which].clone();
        let f = field(q);
        let prime = Poly::from_ints(&f, &prime);
        let mut a = poly(&f, &a);
        let mut b = poly(&f, &b);
        if prime.divides(&a) { a = a.add(&Poly::one(&f)); }
        if prime.divides(&b) { b = b.add(&Poly::one(&f)); }
        prop_assume!(!prime.divides(&a) && !prime.divides(&b));
        let m = 6;
        let ring = PrimePower::new(&prime, m).unwrap();
        let j = prec_for(f.p(), m);
        let s = WeightS::new(&prime, x1, y1 as u128, j).unwrap();
        let t = WeightS::new(&prime, x2, y2 as u128, j).unwrap();
        let ab = a_pow_s(&a.mul(&b), &s, &ring).unwrap();
        prop_assert_eq!(ab, a_pow_s(&a, &s, &ring).unwrap().mul(&a_pow_s(&b, &s, &ring).unwrap()));
        let st = a_pow_s(&a, &s.add(&t).unwrap(), &ring).unwrap();
        prop_assert_eq!(st, a_pow_s(&a, &s, &ring).unwrap().mul(&a_pow_s(&a, &t, &ring).unwrap()));
    }

    #[test]
    fn gauss_lemma(a in raw_poly(6), b in raw_poly(6), ga in raw_series(6, 3), gb in raw_series(6, 3)) {
        // exact polynomials in u with ℘-denominators, so nothing is lost to truncation
        let f = field(3);
        let prime = Poly::from_ints(&f, &[1, 1]);
        let ring = PrimePower::new(&prime, 12).unwrap();
        let mk = |raw: &[Vec<u32>], d: &[u32]| {
            let den = prime.pow(d.len() as u64 % 3);
            let mut s = series(&f, raw, 14);
            for n in 0..raw.len() {
                let c = s.coeff(n).unwrap().mul(&Frac::inv_poly(&den).unwrap());
                s.set_coeff(n, c);
            }
            s
        };
        let (s, t) = (mk(&ga, &a), mk(&gb, &b));
        prop_assume!(!s.is_zero() && !t.is_zero());
        let vs = VSeries::from_frac(&s, &ring).unwrap();
        let vt = VSeries::from_frac(&t, &ring).unwrap();
        let prod = vs.mul(&vt).unwrap();
        prop_assert_eq!(prod.window_ord().value(), vs.window_ord().value() + vt.window_ord().value());
        prop_assert_eq!(VSeries::from_frac(&s.mul(&t), &ring).unwrap().window_ord(), prod.window_ord());
    }

    #[test]
    fn theta_commutes_with_reduction(raw in raw_series(14, 2), den in 0u64..3, r in 0usize..=3) {
        let f = field(3);
        let prime = Poly::theta(&f);
        let ring = PrimePower::new(&prime, 10).unwrap();
        let inv = Frac::inv_poly(&prime.pow(den)).unwrap();
        let s = series(&f, &raw, 14).scale(&inv);
        let mut t = GossTable::new(&LatticeSpec::carlitz(&f));
        let direct = VSeries::from_frac(&theta_r(&mut t, &s, r).unwrap(), &ring).unwrap();
        let reduced = VSeries::from_frac(&s, &ring).unwrap().theta(&mut t, r).unwrap();
        let diff = reduced.sub(&direct).unwrap();
        prop_assert!(diff.series().is_zero(), "{:?}", diff.window_ord());
    }

    #[test]
    fn json_round_trips(q in prop::sample::select(vec![2u32, 3, 4, 9]), raw in raw_series(8, 3), den in raw_poly(3)) {
        let f = field(q);
        let p = poly(&f, &raw[0]);
        let v = p.to_json();
        prop_assert_eq!(Poly::from_json(&f, &v).unwrap().to_json().to_string(), v.to_string());
        let d = poly(&f, &den);
        if !d.is_zero() {
            let x = Frac::new(p.clone(), d).unwrap();
            let v = x.to_json();
            prop_assert_eq!(Frac::from_json(&f, &v).unwrap(), x);
        }
        let s = series(&f, &raw, 8);
        let v = s.to_json_with("u", Frac::to_json);
        let back = USeries::from_json_with(&v, &Frac::zero(&f), 3, |c| Frac::from_json(&f, c)).unwrap();
        prop_assert_eq!(back.to_json_with("u", Frac::to_json).to_string(), v.to_string());
    }
}

#[test]
fn lemma_duality_on_finite_lattices() {
    for q in [2, 3] {
        let f = field(q);
        let th = Frac::from_poly(Poly::theta(&f));
        for basis in [vec![Frac::one(&f)], vec![Frac::one(&f), th.clone()]] {
            let lat = LatticeSpec::from_basis(&f, &basis).unwrap();
            let mut t = GossTable::new(&lat);
            let tl = t_laurent(&lat, 40);
            for n in 1..=6 {
                for r in 0..=6 {
                    assert!(check_lem1b(&mut t, &tl, n, r), "q={q} n={n} r={r}");
                }
            }
        }
    }
}

#[test]
fn iterate_versus_hyper_on_monomials() {
    for q in [2u32, 3, 5] {
        let f = field(q);
        let p = f.p();
        let tri = pascal(40, p);
        let mut t = GossTable::new(&LatticeSpec::carlitz(&f));
        for n in 1..=12usize {
            for r in 0..=8usize {
                let x = USeries::monomial(Frac::one(&f), n, n + r + 1);
                let fact = (1..=r as i64).fold(1i64, |acc, i| acc * i % p as i64);
                let coef = fact * tri[n + r - 1][r] % p as i64;
                let want = USeries::monomial(Frac::one(&f), n + r, n + r + 1).scale_int(coef);
                assert_eq!(theta_iterate(&x, r), want, "q={q} n={n} r={r}");
                if r >= p as usize {
                    assert!(theta_iterate(&x, r).is_zero());
                }
                // r!·Θ^r = Θ^{∘r}
                assert_eq!(theta_r(&mut t, &x, r).unwrap().scale_int(fact), want, "q={q} n={n} r={r}");
            }
        }
    }
}

#[test]
fn forms_support_and_windows() {
    for q in [2u32, 3, 4] {
        let f = field(q);
        let q1 = q as u64 - 1;
        for k in (1..=4).map(|m| m * q1) {
            let e = eisenstein(&f, k, 12).unwrap();
            assert!(e.support_ok(), "q={q} k={k}");
            assert_eq!(eisenstein(&f, k, 24).unwrap().series.truncate(12), e.series);
            let sq = e.mul(&e);
            assert_eq!(sq.weight, 2 * k as i64);
            assert!(sq.support_ok());
        }
        for (k, n) in [(q as u64 + 1, 1), (2 * q as u64, 2), (7, 3)] {
            let pf = petrov_form(&f, k, n, 12).unwrap();
            assert!(pf.support_ok(), "q={q} k={k} n={n}");
            assert_eq!(petrov_form(&f, k, n, 24).unwrap().series.truncate(12), pf.series);
        }
    }
}

#[test]
fn valuation_of_zero() {
    let f = field(3);
    assert_eq!(ord_v_poly(&Poly::zero(&f), &Poly::theta(&f)).unwrap(), Order::Infinity);
}
