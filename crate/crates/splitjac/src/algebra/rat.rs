//! Exact rational scalars and square / squarefree-class arithmetic.
//!
//! Everything downstream (curve coefficients, gluing data, twisting factors)
//! is a `Rat`, so this module also owns the "modulo squares" machinery:
//! perfect-square testing with an exact root, and the squarefree-class
//! decomposition `r = sign * squarefree * cofactor^2`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rat = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum RatError {
    #[error("squarefree part of zero is undefined")]
    ZeroInput,
    #[error("squarefree decomposition inconclusive: residual {residual} has no factor <= {bound} and is not a perfect square")]
    Inconclusive { residual: BigUint, bound: u64 },
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}

/// Trial-division bound used when none is given. Large enough for every
/// discriminant handled here; beyond it we fail loudly rather than guess.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_i(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// Wire format: `"num/den"`, the `/den` omitted when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Result<Rat, RatError> {
    let s = s.trim();
    let mk_err = || RatError::Parse(s.to_string());
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rat::from).map_err(|_| mk_err()),
        Some((n, d)) => {
            let n = n.trim().parse::<BigInt>().map_err(|_| mk_err())?;
            let d = d.trim().parse::<BigInt>().map_err(|_| mk_err())?;
            if d.is_zero() {
                return Err(mk_err());
            }
            Ok(Rat::new(n, d))
        }
    }
}

/// max(|numerator|, denominator), the naive height of a reduced rational.
pub fn height(r: &Rat) -> BigUint {
    r.numer().magnitude().max(r.denom().magnitude()).clone()
}

/// Floor square root, `None` when the input is not a perfect square.
pub fn exact_sqrt_uint(n: &BigUint) -> Option<BigUint> {
    let root = n.sqrt();
    if &root * &root == *n {
        Some(root)
    } else {
        None
    }
}

/// Exact square test with witness: `Some(s)` with `s >= 0` and `s^2 = r`.
pub fn is_square(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let num = exact_sqrt_uint(r.numer().magnitude())?;
    let den = exact_sqrt_uint(r.denom().magnitude())?;
    Some(Rat::new(BigInt::from(num), BigInt::from(den)))
}

/// Image of a nonzero rational in Q*/Q*^2, together with the extracted root.
///
/// Invariant: `sign * squarefree * cofactor^2` reproduces the original value,
/// `squarefree` is a positive squarefree integer and `sign` is +-1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeClass {
    pub sign: i8,
    pub squarefree: BigUint,
    pub cofactor: Rat,
}

impl SquarefreeClass {
    pub fn recombine(&self) -> Rat {
        let sf = Rat::from(BigInt::from(self.squarefree.clone()));
        let sq = &self.cofactor * &self.cofactor;
        let v = sf * sq;
        if self.sign < 0 {
            -v
        } else {
            v
        }
    }

    /// Equality in Q*/Q*^2 (the cofactor is irrelevant).
    pub fn same_class(&self, other: &SquarefreeClass) -> bool {
        self.sign == other.sign && self.squarefree == other.squarefree
    }

    pub fn is_trivial(&self) -> bool {
        self.sign > 0 && self.squarefree.is_one()
    }

    /// Product in Q*/Q*^2. Exact without any factoring: common primes of two
    /// squarefree numbers square away through the gcd.
    pub fn class_mul(&self, other: &SquarefreeClass) -> SquarefreeClass {
        let g = self.squarefree.gcd(&other.squarefree);
        let sf = (&self.squarefree / &g) * (&other.squarefree / &g);
        SquarefreeClass {
            sign: self.sign * other.sign,
            squarefree: sf,
            cofactor: Rat::one(),
        }
    }

    pub fn label(&self) -> String {
        let s = if self.sign < 0 { "-" } else { "+" };
        format!("({}1, {})", s, self.squarefree)
    }
}

/// Squarefree decomposition of `r` by trial division of numerator*denominator
/// up to `bound`, then a perfect-square check on what is left. A residual that
/// is neither prime-sized (< bound^2) nor a square is reported as inconclusive
/// rather than silently misclassified.
pub fn squarefree_part_bounded(r: &Rat, bound: u64) -> Result<SquarefreeClass, RatError> {
    if r.is_zero() {
        return Err(RatError::ZeroInput);
    }
    let sign: i8 = if r.is_negative() { -1 } else { 1 };
    // n/d ~ n*d modulo squares; track the square part exactly.
    let n = r.numer().magnitude().clone();
    let d = r.denom().magnitude().clone();
    let mut m = &n * &d;
    let mut sf = BigUint::one();
    let mut cof_num = BigUint::one();

    let mut p: u64 = 2;
    while p <= bound {
        let pb = BigUint::from(p);
        if &pb * &pb > m {
            break;
        }
        if (&m % &pb).is_zero() {
            let mut e = 0u64;
            while (&m % &pb).is_zero() {
                m /= &pb;
                e += 1;
            }
            if e % 2 == 1 {
                sf *= &pb;
            }
            for _ in 0..(e / 2) {
                cof_num *= &pb;
            }
        }
        p = if p == 2 { 3 } else { p + 2 };
    }

    if !m.is_one() {
        if let Some(root) = exact_sqrt_uint(&m) {
            cof_num *= root;
        } else {
            let bb = BigUint::from(bound);
            if m < &bb * &bb {
                // no factor <= bound and below bound^2: prime
                sf *= &m;
            } else {
                return Err(RatError::Inconclusive { residual: m, bound });
            }
        }
    }

    // r = sign * sf * (cof_num / d)^2  since n*d = sf * cof_num^2.
    let cofactor = Rat::new(BigInt::from(cof_num), BigInt::from(d));
    Ok(SquarefreeClass {
        sign,
        squarefree: sf,
        cofactor,
    })
}

pub fn squarefree_part(r: &Rat) -> Result<SquarefreeClass, RatError> {
    squarefree_part_bounded(r, DEFAULT_FACTOR_BOUND)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squarefree_12() {
        let c = squarefree_part(&rat_i(12)).unwrap();
        assert_eq!(c.sign, 1);
        assert_eq!(c.squarefree, BigUint::from(3u32));
        assert_eq!(c.cofactor, rat_i(2));
        assert_eq!(c.recombine(), rat_i(12));
    }

    #[test]
    fn squarefree_minus_2964() {
        // 2964 = 4 * 741, 741 = 3 * 13 * 19
        let c = squarefree_part(&rat_i(-2964)).unwrap();
        assert_eq!(c.sign, -1);
        assert_eq!(c.squarefree, BigUint::from(741u32));
        assert_eq!(c.cofactor, rat_i(2));
        assert_eq!(c.recombine(), rat_i(-2964));
    }

    #[test]
    fn squarefree_zero_rejected() {
        assert_eq!(squarefree_part(&Rat::zero()), Err(RatError::ZeroInput));
    }

    #[test]
    fn squarefree_recombines_on_samples() {
        let samples = [
            rat(360, 49),
            rat(-75, 8),
            rat(1, 997),
            rat(123456, 7),
            rat_i(1),
            rat_i(-1),
        ];
        for r in &samples {
            let c = squarefree_part(r).unwrap();
            assert_eq!(&c.recombine(), r, "recombine failed for {}", r);
            // squarefree part really is squarefree (trial division oracle)
            let mut m = c.squarefree.clone();
            let mut p = 2u64;
            while BigUint::from(p) * BigUint::from(p) <= m {
                let pb = BigUint::from(p);
                if (&m % &pb).is_zero() {
                    m /= &pb;
                    assert!(!(&m % &pb).is_zero(), "square factor {} in {}", p, c.squarefree);
                }
                p += 1;
            }
        }
    }

    #[test]
    fn square_tests() {
        assert_eq!(is_square(&rat(49, 4)), Some(rat(7, 2)));
        assert_eq!(is_square(&rat_i(1024)), Some(rat_i(32)));
        assert_eq!(is_square(&rat_i(-741)), None);
        assert_eq!(is_square(&rat(2, 3)), None);
        assert_eq!(is_square(&Rat::zero()), Some(Rat::zero()));
    }

    #[test]
    fn class_mul_is_exact() {
        let a = squarefree_part(&rat_i(6)).unwrap();
        let b = squarefree_part(&rat_i(-10)).unwrap();
        let c = a.class_mul(&b);
        // 6 * -10 = -60 ~ -15 mod squares
        let d = squarefree_part(&rat_i(-60)).unwrap();
        assert!(c.same_class(&d));
    }

    #[test]
    fn wire_format_round_trip() {
        for s in ["3/4", "-22", "0", "25/169"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(parse_rat("6/4").unwrap(), rat(3, 2));
        assert!(parse_rat("1/0").is_err());
    }
}
