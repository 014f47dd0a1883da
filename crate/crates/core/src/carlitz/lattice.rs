//! F_q-lattices described through the coefficients of their exponential
//! e_Λ(z) = Σ α_j z^{q^j}.

use serde_json::{json, Value};

use super::twisted::{carlitz_action, TwistedPoly};
use crate::algebra::{big_d, Coeff, Fq, Frac, Poly};
use crate::error::{Error, Result};
use crate::series::DensePoly;

#[derive(Clone, Debug, PartialEq)]
enum Kind {
    /// α_j = 1/D_j.
    Carlitz,
    /// e_Λ = C_ℓ/ℓ.
    Division(Poly),
    /// The F_q-span of an explicit basis.
    Basis(Vec<Frac>),
    /// A bare list of α_j.
    Finite,
}

/// A lattice spec: α_0 = 1 and α_j the coefficient of z^{q^j} in e_Λ.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeSpec {
    field: Fq,
    kind: Kind,
    alphas: Vec<Frac>,
}

impl LatticeSpec {
    /// The Carlitz lattice A·π̃ (normalized by π̃), with α_j = 1/D_j.
    pub fn carlitz(field: &Fq) -> Self {
        LatticeSpec { field: field.clone(), kind: Kind::Carlitz, alphas: vec![Frac::one(field)] }
    }

    /// The ℓ-torsion lattice Λ_ℓ, with e_Λ(z) = C_ℓ(z)/ℓ.
    pub fn division(ell: &Poly) -> Result<Self> {
        if ell.is_zero() {
            return Err(Error::arg("division lattice needs ℓ ≠ 0"));
        }
        let inv = Frac::inv_poly(ell)?;
        let alphas = carlitz_action(ell).coeffs().iter().map(|c| c.mul(&inv)).collect();
        Ok(LatticeSpec { field: ell.field().clone(), kind: Kind::Division(ell.clone()), alphas })
    }

    /// An explicit α list; α_0 must be 1.
    pub fn finite(field: &Fq, mut alphas: Vec<Frac>) -> Result<Self> {
        if alphas.first().map(Frac::is_one) != Some(true) {
            return Err(Error::arg("α_0 must equal 1"));
        }
        while alphas.len() > 1 && alphas.last().is_some_and(Frac::is_zero) {
            alphas.pop();
        }
        Ok(LatticeSpec { field: field.clone(), kind: Kind::Finite, alphas })
    }

    /// The F_q-span of `basis`, with e_Λ(z) = z ∏_{λ≠0} (1 - z/λ).
    pub fn from_basis(field: &Fq, basis: &[Frac]) -> Result<Self> {
        let points = span(field, basis);
        let mut sorted: Vec<String> = points.iter().map(|p| p.to_json().to_string()).collect();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != points.len() {
            return Err(Error::arg("lattice basis is not F_q-linearly independent"));
        }
        let zero = Frac::zero(field);
        let mut e = DensePoly::var(&zero);
        for lam in points.iter().filter(|l| !l.is_zero()) {
            let factor = DensePoly::new(&zero, vec![Frac::one(field), lam.inv()?.neg()]);
            e = e.mul(&factor);
        }
        let q = field.q() as usize;
        let alphas = (0..=basis.len()).map(|j| e.coeff(q.pow(j as u32))).collect();
        Ok(LatticeSpec { field: field.clone(), kind: Kind::Basis(basis.to_vec()), alphas })
    }

    pub fn field(&self) -> &Fq {
        &self.field
    }

    pub fn is_carlitz(&self) -> bool {
        self.kind == Kind::Carlitz
    }

    /// α_j.
    pub fn alpha(&self, j: usize) -> Frac {
        match self.kind {
            Kind::Carlitz => Frac::inv_poly(&big_d(&self.field, j as u32)).expect("D_j ≠ 0"),
            _ => self.alphas.get(j).cloned().unwrap_or_else(|| Frac::zero(&self.field)),
        }
    }

    /// Largest j with α_j possibly nonzero; `None` for the Carlitz lattice.
    pub fn dim(&self) -> Option<usize> {
        match self.kind {
            Kind::Carlitz => None,
            _ => Some(self.alphas.len() - 1),
        }
    }

    /// The explicit basis, for lattices given by one.
    pub fn basis(&self) -> Option<&[Frac]> {
        match &self.kind {
            Kind::Basis(b) => Some(b),
            _ => None,
        }
    }

    /// All lattice points, for lattices given by a basis.
    pub fn points(&self) -> Option<Vec<Frac>> {
        self.basis().map(|b| span(&self.field, b))
    }

    /// e_Λ truncated at τ-degree `max_j`.
    pub fn exp_twisted(&self, max_j: usize) -> TwistedPoly {
        let top = self.dim().map_or(max_j, |d| d.min(max_j));
        TwistedPoly::new(&self.field, (0..=top).map(|j| self.alpha(j)).collect())
    }

    pub fn label(&self) -> String {
        match &self.kind {
            Kind::Carlitz => "carlitz".into(),
            Kind::Division(l) => format!("division:{l}"),
            Kind::Basis(_) => "basis".into(),
            Kind::Finite => "finite".into(),
        }
    }

    pub fn to_json(&self) -> Value {
        match &self.kind {
            Kind::Carlitz => json!({"kind": "carlitz"}),
            Kind::Division(l) => json!({"kind": "division", "ell": l.to_json()}),
            Kind::Basis(b) => json!({"kind": "basis", "basis": b.iter().map(Frac::to_json).collect::<Vec<_>>()}),
            Kind::Finite => {
                json!({"kind": "finite", "alphas": self.alphas.iter().map(Frac::to_json).collect::<Vec<_>>()})
            }
        }
    }
}

/// All F_q-combinations of `basis`, in lexicographic order of coefficient tuples.
pub fn span(field: &Fq, basis: &[Frac]) -> Vec<Frac> {
    let mut pts = vec![Frac::zero(field)];
    for b in basis {
        let mut next = Vec::with_capacity(pts.len() * field.q() as usize);
        for c in field.elements() {
            let cb = b.mul(&Frac::from_poly(Poly::constant(field, c)));
            next.extend(pts.iter().map(|p| p.add(&cb)));
        }
        pts = next;
    }
    pts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_exponential_by_hand() {
        let f = Fq::prime(3).unwrap();
        let one = Frac::one(&f);
        let l = LatticeSpec::from_basis(&f, &[one.clone()]).unwrap();
        // e(z) = z(1 - z)(1 + z) = z - z^3 over F_3
        assert_eq!(l.alpha(0), one);
        assert_eq!(l.alpha(1), one.neg());
        assert!(l.alpha(2).is_zero());
        assert_eq!(l.dim(), Some(1));
        assert!(LatticeSpec::from_basis(&f, &[one.clone(), one.clone()]).is_err());
    }

    #[test]
    fn division_alphas() {
        let f = Fq::prime(2).unwrap();
        let theta = Poly::theta(&f);
        let l = LatticeSpec::division(&theta).unwrap();
        assert!(l.alpha(0).is_one());
        assert_eq!(l.alpha(1), Frac::inv_poly(&theta).unwrap());
        let c = LatticeSpec::carlitz(&f);
        assert_eq!(c.alpha(1), Frac::inv_poly(&Poly::from_ints(&f, &[0, 1, 1])).unwrap());
        assert!(LatticeSpec::finite(&f, vec![Frac::zero(&f)]).is_err());
    }
}
