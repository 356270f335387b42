//! Minimal field abstraction shared by Q, Q(i) and the small prime fields
//! used in tests. Elements carry whatever context they need, so zero/one are
//! instance methods rather than associated constants.

use super::rat::Rat;
use num_traits::{One, Zero};

pub trait Field: Clone + PartialEq + std::fmt::Debug {
    fn zero(&self) -> Self;
    fn one(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` exactly when `self` is zero.
    fn inv(&self) -> Option<Self>;
    fn is_zero(&self) -> bool;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul(&i))
    }
    fn square(&self) -> Self {
        self.mul(self)
    }
    /// Small scalar multiple, handy for derivative coefficients.
    fn mul_usize(&self, n: usize) -> Self {
        let mut acc = self.zero();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.add(&base);
            }
            base = base.add(&base);
            n >>= 1;
        }
        acc
    }
}

impl Field for Rat {
    fn zero(&self) -> Self {
        <Rat as Zero>::zero()
    }
    fn one(&self) -> Self {
        <Rat as One>::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

/// Q(i) as pairs of rationals with i^2 = -1; the only algebraic extension the
/// marked-point tables require.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }
    pub fn from_rat(re: Rat) -> Self {
        GaussRat {
            re,
            im: <Rat as Zero>::zero(),
        }
    }
    pub fn i() -> Self {
        GaussRat {
            re: <Rat as Zero>::zero(),
            im: <Rat as One>::one(),
        }
    }
    /// Complex conjugation, the nontrivial automorphism of Q(i)/Q.
    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }
    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }
    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.im)
    }
}

impl Field for GaussRat {
    fn zero(&self) -> Self {
        GaussRat::from_rat(<Rat as Zero>::zero())
    }
    fn one(&self) -> Self {
        GaussRat::from_rat(<Rat as One>::one())
    }
    fn add(&self, other: &Self) -> Self {
        GaussRat::new(&self.re + &other.re, &self.im + &other.im)
    }
    fn sub(&self, other: &Self) -> Self {
        GaussRat::new(&self.re - &other.re, &self.im - &other.im)
    }
    fn mul(&self, other: &Self) -> Self {
        GaussRat::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }
    fn neg(&self) -> Self {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return None;
        }
        let ninv = n.recip();
        Some(GaussRat::new(&self.re * &ninv, -(&self.im * &ninv)))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;

    #[test]
    fn gauss_arithmetic() {
        let i = GaussRat::i();
        assert_eq!(i.mul(&i), GaussRat::from_rat(rat(-1, 1)));
        let z = GaussRat::new(rat(3, 1), rat(-2, 1));
        let w = z.mul(&z.inv().unwrap());
        assert_eq!(w, z.one());
        assert_eq!(z.conj().conj(), z);
    }
}
