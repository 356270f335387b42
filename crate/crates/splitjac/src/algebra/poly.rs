//! Dense univariate polynomials over a field, lowest-degree coefficient first.
//!
//! Carries exactly the ring operations the constructions need: arithmetic,
//! composition, euclidean division, gcd, resultant, discriminant, modular
//! inverse. No factorization.

use super::field::Field;
use super::rat::{format_rat, Rat};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum PolyError {
    #[error("operation requires degree >= {needed}, got degree {got:?}")]
    DegreeTooSmall { needed: usize, got: Option<usize> },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("element is not invertible modulo the given polynomial")]
    NotInvertible,
}

/// Invariant: no trailing zero coefficients; the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> Poly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: K) -> Self {
        Poly::new(vec![c])
    }

    /// The monomial c * x^n.
    pub fn monomial(c: K, n: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![c.zero(); n + 1];
        coeffs[n] = c;
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&K> {
        self.coeffs.get(i)
    }

    /// Coefficient of x^i, materializing a zero of matching context from `like`.
    pub fn coeff_or_zero(&self, i: usize, like: &K) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(|| like.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn lc(&self) -> Option<&K> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().map_or(false, |c| c == &c.one())
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = x.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(c);
        }
        Poly::new(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let z = self.coeffs[0].zero();
        let mut out = vec![z; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &K) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul_usize(i))
            .collect();
        Poly::new(out)
    }

    /// self(g(x)).
    pub fn compose(&self, g: &Self) -> Self {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&Poly::constant(c.clone()));
        }
        acc
    }

    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let dlc = divisor.lc().ok_or(PolyError::DivisionByZero)?;
        let dinv = dlc.inv().ok_or(PolyError::DivisionByZero)?;
        let ddeg = divisor.degree().unwrap();
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        while let Some(rdeg) = rem.degree() {
            if rdeg < ddeg {
                break;
            }
            let c = rem.lc().unwrap().mul(&dinv);
            let t = Poly::monomial(c, rdeg - ddeg);
            quo = quo.add(&t);
            rem = rem.sub(&t.mul(divisor));
        }
        Ok((quo, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, PolyError> {
        Ok(self.divrem(divisor)?.1)
    }

    pub fn monic(&self) -> Option<Self> {
        let inv = self.lc()?.inv()?;
        Some(self.scale(&inv))
    }

    /// Monic gcd by the euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic().unwrap()
        }
    }

    /// gcd(p, p') has degree 0.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Resultant via the euclidean remainder chain.
    pub fn resultant(&self, other: &Self) -> K {
        let sample = self
            .coeffs
            .first()
            .or_else(|| other.coeffs.first())
            .expect("resultant of two zero polynomials");
        let zero = sample.zero();
        let one = sample.one();

        fn go<K: Field>(a: &Poly<K>, b: &Poly<K>, zero: &K, one: &K) -> K {
            let m = match a.degree() {
                None => return zero.clone(),
                Some(m) => m,
            };
            let n = match b.degree() {
                None => return zero.clone(),
                Some(n) => n,
            };
            if n == 0 {
                // res(a, c) = c^deg(a)
                let mut acc = one.clone();
                let c = b.lc().unwrap();
                for _ in 0..m {
                    acc = acc.mul(c);
                }
                return acc;
            }
            if m < n {
                let r = go(b, a, zero, one);
                return if (m * n) % 2 == 1 { r.neg() } else { r };
            }
            let rem = a.rem(b).expect("nonzero divisor");
            let d = rem.degree();
            // res(a,b) = (-1)^{mn} lc(b)^{m - deg r} res(b, r)
            let mut scale = one.clone();
            let lcb = b.lc().unwrap();
            let drop = m - d.map_or(0, |d| d);
            for _ in 0..drop {
                scale = scale.mul(lcb);
            }
            let tail = match d {
                None => zero.clone(),
                Some(_) => go(b, &rem, zero, one),
            };
            let r = scale.mul(&tail);
            if (m * n) % 2 == 1 {
                r.neg()
            } else {
                r
            }
        }
        go(self, other, &zero, &one)
    }

    /// disc(p) = (-1)^{n(n-1)/2} res(p, p') / lc(p).
    pub fn discriminant(&self) -> Result<K, PolyError> {
        let n = self.degree().filter(|&n| n >= 2).ok_or(PolyError::DegreeTooSmall {
            needed: 2,
            got: self.degree(),
        })?;
        let res = self.resultant(&self.derivative());
        let lcinv = self.lc().unwrap().inv().expect("nonzero leading coefficient");
        let d = res.mul(&lcinv);
        Ok(if (n * (n - 1) / 2) % 2 == 1 { d.neg() } else { d })
    }

    /// Inverse of `self` modulo `m` via the extended euclidean algorithm.
    pub fn inv_mod(&self, m: &Self) -> Result<Self, PolyError> {
        let a = self.rem(m)?;
        if a.is_zero() {
            return Err(PolyError::NotInvertible);
        }
        let one = a.coeffs[0].one();
        // Invariants: r0 = s0 * self (mod m), r1 = s1 * self (mod m)
        let mut r0 = m.clone();
        let mut r1 = a;
        let mut s0 = Poly::zero();
        let mut s1 = Poly::constant(one.clone());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            s0 = s1;
            r1 = r;
            s1 = s;
        }
        if r0.degree() != Some(0) {
            return Err(PolyError::NotInvertible);
        }
        let c = r0.lc().unwrap().inv().ok_or(PolyError::NotInvertible)?;
        s0.scale(&c).rem(m)
    }

    /// x -> x + c.
    pub fn translate(&self, c: &K) -> Self {
        let shift = Poly::new(vec![c.clone(), c.one()]);
        self.compose(&shift)
    }
}

impl Poly<Rat> {
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from(num_bigint::BigInt::from(c))).collect())
    }

    pub fn from_rats(coeffs: &[Rat]) -> Self {
        Poly::new(coeffs.to_vec())
    }
}

impl std::fmt::Display for Poly<Rat> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if Zero::is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", format_rat(c))?,
                _ => {
                    if c != &c.one() {
                        write!(f, "{}*", format_rat(c))?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat_i, Rat};

    fn p(coeffs: &[i64]) -> Poly<Rat> {
        Poly::from_i64(coeffs)
    }

    #[test]
    fn gcd_example() {
        // gcd((x^2-1)(x+2), x-1) = x-1
        let f = p(&[-1, 0, 1]).mul(&p(&[2, 1]));
        let g = p(&[-1, 1]);
        assert_eq!(f.gcd(&g), p(&[-1, 1]));
    }

    #[test]
    fn resultant_of_coprime_quadratics() {
        // res(x^2-2, x^2-3) = (2-3)^2 = 1
        let f = p(&[-2, 0, 1]);
        let g = p(&[-3, 0, 1]);
        assert_eq!(f.resultant(&g), rat_i(1));
    }

    #[test]
    fn discriminants() {
        // x^3 - x: -4p^3 - 27q^2 with p=-1, q=0 gives 4
        assert_eq!(p(&[0, -1, 0, 1]).discriminant().unwrap(), rat_i(4));
        // x^2 - 2: b^2 - 4ac = 8
        assert_eq!(p(&[-2, 0, 1]).discriminant().unwrap(), rat_i(8));
        // degree guard
        assert!(p(&[1, 1]).discriminant().is_err());
    }

    #[test]
    fn squarefree_detection() {
        assert!(!p(&[0, 0, 1]).is_squarefree());
        assert!(p(&[-1, 0, 1]).is_squarefree());
    }

    #[test]
    fn compose_translate() {
        let f = p(&[0, 0, 1]); // x^2
        let g = f.translate(&rat_i(3)); // (x+3)^2
        assert_eq!(g, p(&[9, 6, 1]));
        let h = f.compose(&p(&[1, 0, 1])); // (x^2+1)^2
        assert_eq!(h, p(&[1, 0, 2, 0, 1]));
    }

    #[test]
    fn inv_mod_cubic() {
        let m = p(&[845, -169, 0, 1]); // x^3 - 169x + 845
        let a = p(&[0, 0, 1]); // x^2
        let inv = a.inv_mod(&m).unwrap();
        let check = a.mul(&inv).rem(&m).unwrap();
        assert_eq!(check, p(&[1]));
        // zero is not invertible
        assert!(Poly::<Rat>::zero().inv_mod(&m).is_err());
    }

    #[test]
    fn resultant_matches_root_product_for_split_cubics() {
        // res(f,g) = lc(g)^deg f * prod f(beta_j) for monic g with roots beta_j
        let f = p(&[0, -1, 0, 1]); // x(x-1)(x+1)
        let g = p(&[0, -4, 0, 1]); // x(x-2)(x+2)
        let direct: Rat = [0i64, 2, -2]
            .iter()
            .map(|&b| f.eval(&rat_i(b)))
            .fold(rat_i(1), |a, b| a * b);
        assert_eq!(f.resultant(&g), direct);
    }
}
