use std::fmt;

use super::coeff::Coeff;
use super::field::Fq;

/// A single element of F_q bundled with its field, for use as a series
/// coefficient (expansions at the infinite place live in F_q((1/θ))).
#[derive(Clone, PartialEq, Eq)]
pub struct FqElem {
    field: Fq,
    value: u32,
}

impl FqElem {
    pub fn new(field: &Fq, value: u32) -> Self {
        debug_assert!(value < field.q());
        FqElem { field: field.clone(), value }
    }
    pub fn value(&self) -> u32 {
        self.value
    }
    pub fn field(&self) -> &Fq {
        &self.field
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Coeff for FqElem {
    fn zero_like(&self) -> Self {
        FqElem::new(&self.field, 0)
    }
    fn one_like(&self) -> Self {
        FqElem::new(&self.field, 1)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        FqElem::new(&self.field, self.field.add(self.value, rhs.value))
    }
    fn sub(&self, rhs: &Self) -> Self {
        FqElem::new(&self.field, self.field.sub(self.value, rhs.value))
    }
    fn neg(&self) -> Self {
        FqElem::new(&self.field, self.field.neg(self.value))
    }
    fn mul(&self, rhs: &Self) -> Self {
        FqElem::new(&self.field, self.field.mul(self.value, rhs.value))
    }
    fn from_int(&self, n: i64) -> Self {
        FqElem::new(&self.field, self.field.from_int(n))
    }
    fn characteristic(&self) -> u32 {
        self.field.p()
    }
    fn try_inv(&self) -> Option<Self> {
        self.field.inv(self.value).map(|v| FqElem::new(&self.field, v))
    }
}
