//! Goss polynomials G_{k,Λ}(t) and the coefficient table β_{r,j}, where
//! G_{r+1,Λ}(t) = Σ_j β_{r,j} t^{j+1}.

use serde_json::{json, Value};

use crate::algebra::{binom_mod_p, Coeff, Frac};
use crate::carlitz::LatticeSpec;
use crate::series::{DensePoly, USeries};

/// Rows β_{r,·} for r < len(), built append-only by the recursion
/// G_k = t Σ_j α_j G_{k-q^j}.
#[derive(Clone, Debug)]
pub struct GossTable {
    lattice: LatticeSpec,
    alphas: Vec<Frac>,
    rows: Vec<Vec<Frac>>,
}

impl PartialEq for GossTable {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
    }
}

impl GossTable {
    pub fn new(lattice: &LatticeSpec) -> Self {
        GossTable { lattice: lattice.clone(), alphas: Vec::new(), rows: Vec::new() }
    }

    /// Rows 0..k, i.e. G_1, ..., G_k.
    pub fn build(lattice: &LatticeSpec, k: usize) -> Self {
        let mut t = Self::new(lattice);
        t.extend_to(k);
        t
    }

    pub fn lattice(&self) -> &LatticeSpec {
        &self.lattice
    }

    /// Number of rows (G_1..G_len are available).
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn alpha(&mut self, j: usize) -> Frac {
        while self.alphas.len() <= j {
            let next = self.lattice.alpha(self.alphas.len());
            self.alphas.push(next);
        }
        self.alphas[j].clone()
    }

    /// Ensure rows 0..k exist.
    pub fn extend_to(&mut self, k: usize) {
        let field = self.lattice.field().clone();
        let q = field.q() as usize;
        let zero = Frac::zero(&field);
        while self.rows.len() < k {
            let r = self.rows.len();
            let mut row = vec![zero.clone(); r + 1];
            if r == 0 {
                row[0] = Frac::one(&field);
            } else {
                // β_{r,j} = Σ_i α_i β_{r-q^i, j-1}
                let mut qi = 1usize;
                let mut i = 0usize;
                while qi <= r {
                    let a = self.alpha(i);
                    if !a.is_zero() {
                        let prev = &self.rows[r - qi];
                        for (j, b) in prev.iter().enumerate() {
                            if !b.is_zero() {
                                row[j + 1] = row[j + 1].add(&a.mul(b));
                            }
                        }
                    }
                    qi *= q;
                    i += 1;
                }
            }
            self.rows.push(row);
        }
    }

    pub fn row(&self, r: usize) -> &[Frac] {
        &self.rows[r]
    }

    pub fn beta(&self, r: usize, j: usize) -> &Frac {
        &self.rows[r][j]
    }

    pub fn rows(&self) -> &[Vec<Frac>] {
        &self.rows
    }

    /// G_k as a polynomial in t; G_0 = 0. Needs k ≤ len().
    pub fn goss(&self, k: usize) -> DensePoly<Frac> {
        let zero = Frac::zero(self.lattice.field());
        if k == 0 {
            return DensePoly::zero(&zero);
        }
        DensePoly::new(&zero, self.rows[k - 1].clone()).shift(1)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lattice": self.lattice.to_json(),
            "rows": self.rows.iter().map(|r| r.iter().map(Frac::to_json).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// The table of G_1..G_k via the recursion.
pub fn goss_recursion(lattice: &LatticeSpec, k: usize) -> GossTable {
    GossTable::build(lattice, k)
}

/// The table of G_1..G_k read off from tx/(1 - t e_Λ(x)).
pub fn goss_genseries(lattice: &LatticeSpec, k: usize) -> GossTable {
    let field = lattice.field();
    let zero = Frac::zero(field);
    let pzero = DensePoly::zero(&zero);
    let n = k + 1;
    let t = DensePoly::var(&zero);
    // 1 - t e_Λ(x)
    let mut d = vec![pzero.clone(); n];
    d[0] = DensePoly::constant(Frac::one(field));
    let q = field.q() as usize;
    let (mut qj, mut j) = (1usize, 0usize);
    while qj < n {
        d[qj] = t.scale(&lattice.alpha(j)).neg();
        qj *= q;
        j += 1;
    }
    let inv = USeries::new(&pzero, d, n).inverse().expect("constant term 1");
    // G_m is the x^{m-1} coefficient of t/(1 - t e_Λ(x))
    let rows = (1..=k)
        .map(|m| {
            let g = inv.coeff(m - 1).unwrap().mul(&t);
            (1..=m).map(|i| g.coeff(i)).collect()
        })
        .collect();
    GossTable { lattice: lattice.clone(), alphas: Vec::new(), rows }
}

/// G_{k+1} from the multinomial expansion: the coefficient of t^{j+1} is
/// Σ binom(j; i_0, ..., i_s) ∏ α_r^{i_r} over Σ i_r = j, Σ i_r q^r = k.
pub fn goss_closed(lattice: &LatticeSpec, k: usize) -> DensePoly<Frac> {
    let field = lattice.field();
    let zero = Frac::zero(field);
    let q = field.q() as usize;
    let p = field.p();
    let mut s = 0usize;
    while q.pow(s as u32 + 1) <= k {
        s += 1;
    }
    let alphas: Vec<Frac> = (0..=s).map(|r| lattice.alpha(r)).collect();
    let mut out = vec![zero.clone(); k + 2];
    let mut tuple = vec![0usize; s + 1];
    dfs(s, k, q, p, &alphas, &mut tuple, &mut out);
    DensePoly::new(&zero, out)
}

fn dfs(r: usize, rem: usize, q: usize, p: u32, alphas: &[Frac], tuple: &mut [usize], out: &mut [Frac]) {
    if r == 0 {
        tuple[0] = rem;
        let j: usize = tuple.iter().sum();
        // multinomial mod p as a product of binomials of partial sums
        let mut m = 1u32;
        let mut partial = 0usize;
        for &i in tuple.iter() {
            partial += i;
            m = m * binom_mod_p(partial as i64, i as u64, p) % p;
            if m == 0 {
                return;
            }
        }
        let mut c = alphas[0].pow(tuple[0] as u64).scale_int(m as i64);
        for (a, &i) in alphas.iter().zip(tuple.iter()).skip(1) {
            if i > 0 {
                c = c.mul(&a.pow(i as u64));
            }
        }
        out[j + 1] = out[j + 1].add(&c);
        return;
    }
    let qr = q.pow(r as u32);
    if alphas[r].is_zero() {
        tuple[r] = 0;
        dfs(r - 1, rem, q, p, alphas, tuple, out);
        return;
    }
    for i in 0..=rem / qr {
        tuple[r] = i;
        dfs(r - 1, rem - i * qr, q, p, alphas, tuple, out);
    }
    tuple[r] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{big_d, Fq, Poly};

    #[test]
    fn small_goss_polynomials() {
        let f = Fq::prime(3).unwrap();
        let c = LatticeSpec::carlitz(&f);
        let t = GossTable::build(&c, 10);
        let zero = Frac::zero(&f);
        for k in 1..=3 {
            assert_eq!(t.goss(k), DensePoly::monomial(Frac::one(&f), k));
        }
        // G_{q+1} = t^{q+1} + t^2/D_1
        let g4 = DensePoly::monomial(Frac::one(&f), 4)
            .add(&DensePoly::monomial(Frac::inv_poly(&big_d(&f, 1)).unwrap(), 2));
        assert_eq!(t.goss(4), g4);
        assert!(t.goss(0).is_zero());
        assert_eq!(t.goss(1).coeffs(), &[zero, Frac::one(&f)]);
    }

    #[test]
    fn three_constructions_agree() {
        for q in [2u32, 3] {
            let f = Fq::prime(q).unwrap();
            for lat in [LatticeSpec::carlitz(&f), LatticeSpec::division(&Poly::from_ints(&f, &[1, 1])).unwrap()] {
                let a = goss_recursion(&lat, 20);
                let b = goss_genseries(&lat, 20);
                assert_eq!(a, b);
                for k in 0..20 {
                    assert_eq!(goss_closed(&lat, k), a.goss(k + 1), "q={q} k={k}");
                }
            }
        }
    }
}
