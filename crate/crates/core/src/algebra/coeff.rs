//! The coefficient-ring interface shared by series and dense polynomials.

use std::fmt::Debug;

/// A commutative ring of characteristic p whose elements carry their own
/// context (field, modulus), so that neutral elements can be produced from
/// any existing element.
pub trait Coeff: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// The image of an integer in this ring.
    fn from_int(&self, n: i64) -> Self;
    /// Multiplicative inverse, when it exists.
    fn try_inv(&self) -> Option<Self>;
    /// The prime p.
    fn characteristic(&self) -> u32;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut n: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplication by the image of an integer (used for binomial factors).
    fn scale_int(&self, n: i64) -> Self {
        self.mul(&self.from_int(n))
    }
}
