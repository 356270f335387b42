//! Root machinery in two flavours.
//!
//! Exact side: rational roots of monic polynomials of degree <= 3, found by
//! sign-change bisection with big-integer arithmetic (a rational root of a
//! monic integer polynomial is an integer, so after clearing denominators the
//! search is over integers and every verification is exact).
//!
//! Numeric side: complex roots to a requested precision, as dyadic
//! fixed-point numbers refined by Newton iteration from f64 seeds. These are
//! only ever hints; callers must verify any reconstruction exactly.

use super::poly::Poly;
use super::rat::Rat;
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// ---------- exact rational roots (degree <= 3) ----------

fn eval_int(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Floor square root of a nonnegative BigInt.
fn isqrt(n: &BigInt) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n.magnitude().sqrt())
}

/// Integer roots of a monic integer polynomial of degree 1..=3, ascending.
pub fn integer_roots_monic(coeffs: &[BigInt]) -> Vec<BigInt> {
    let deg = coeffs.len() - 1;
    assert!(coeffs[deg].is_one(), "polynomial must be monic");
    assert!((1..=3).contains(&deg), "degree must be 1..=3");
    match deg {
        1 => vec![-coeffs[0].clone()],
        2 => {
            // x^2 + a x + b: roots (-a +- sqrt(a^2-4b))/2 when the radicand is square
            let a = &coeffs[1];
            let b = &coeffs[0];
            let disc: BigInt = a * a - b * 4;
            if disc.is_negative() {
                return vec![];
            }
            let s = isqrt(&disc);
            if &s * &s != disc {
                return vec![];
            }
            let mut out = vec![];
            for sgn in [-1, 1] {
                let num: BigInt = -a + &s * sgn;
                let (q, r) = num.div_rem(&BigInt::from(2));
                if r.is_zero() {
                    out.push(q);
                }
            }
            out.sort();
            out.dedup();
            out
        }
        3 => cubic_integer_roots(coeffs),
        _ => unreachable!(),
    }
}

fn cubic_integer_roots(coeffs: &[BigInt]) -> Vec<BigInt> {
    // x^3 + a x^2 + b x + c; critical points at (-a +- sqrt(a^2 - 3b)) / 3.
    let a = coeffs[2].clone();
    let b = coeffs[1].clone();
    let big = coeffs
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero);
    let bound = big + BigInt::one(); // Cauchy bound for a monic polynomial
    let mut candidates: Vec<BigInt> = Vec::new();
    let mut intervals: Vec<(BigInt, BigInt)> = Vec::new();

    let d: BigInt = &a * &a - &b * 3;
    if d.is_positive() {
        let s = isqrt(&d);
        // generous integer brackets around each critical point
        let c1 = (-&a - &s).div_floor(&BigInt::from(3)) - 2;
        let c2 = (-&a + &s).div_ceil(&BigInt::from(3)) + 2;
        for z in [&c1, &c2] {
            for off in -2..=2 {
                candidates.push(z + BigInt::from(off));
            }
        }
        let lo = -&bound;
        let hi = bound.clone();
        if lo < c1 {
            intervals.push((lo, c1.clone()));
        }
        if c1 < c2 {
            intervals.push((c1, c2.clone()));
        }
        if c2 < hi {
            intervals.push((c2, hi));
        }
    } else {
        // monotone on all of R
        intervals.push((-&bound, bound.clone()));
    }

    for (mut lo, mut hi) in intervals {
        let flo = eval_int(coeffs, &lo);
        let fhi = eval_int(coeffs, &hi);
        if flo.is_zero() {
            candidates.push(lo.clone());
        }
        if fhi.is_zero() {
            candidates.push(hi.clone());
        }
        if flo.sign() == fhi.sign() {
            continue;
        }
        let slo = flo.sign();
        while &hi - &lo > BigInt::one() {
            let mid = (&lo + &hi) >> 1;
            let fm = eval_int(coeffs, &mid);
            if fm.is_zero() {
                candidates.push(mid);
                break;
            }
            if fm.sign() == slo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        candidates.push(lo.clone());
        candidates.push(hi.clone());
    }

    let mut out: Vec<BigInt> = candidates
        .into_iter()
        .filter(|r| eval_int(coeffs, r).is_zero())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Rational roots of a monic polynomial over Q of degree 1..=3, ascending.
///
/// Substituting x = X/m for m the lcm of the coefficient denominators turns
/// the problem into integer roots of a monic integer polynomial.
pub fn rational_roots_monic(p: &Poly<Rat>) -> Vec<Rat> {
    let deg = p.degree().expect("nonzero polynomial");
    assert!((1..=3).contains(&deg));
    assert!(p.is_monic());
    let mut m = BigInt::one();
    for c in p.coeffs() {
        m = m.lcm(c.denom());
    }
    // X^deg + sum m^(deg-i) c_i X^i
    let mut ic: Vec<BigInt> = Vec::with_capacity(deg + 1);
    for i in 0..=deg {
        let c = p.coeff_or_zero(i, &Rat::one());
        let scaled = c * Rat::from(m.pow((deg - i) as u32));
        debug_assert!(scaled.denom().is_one());
        ic.push(scaled.numer().clone());
    }
    integer_roots_monic(&ic)
        .into_iter()
        .map(|r| Rat::new(r, m.clone()))
        .collect()
}

/// ---------- dyadic fixed point and complex Newton refinement ----------

/// Value = mant * 2^(-prec). All values in one computation share `prec`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dy {
    pub mant: BigInt,
    pub prec: u32,
}

impl Dy {
    pub fn from_rat(r: &Rat, prec: u32) -> Dy {
        let mant = (r.numer() << prec).div_floor(r.denom());
        Dy { mant, prec }
    }
    pub fn from_f64(x: f64, prec: u32) -> Option<Dy> {
        if !x.is_finite() {
            return None;
        }
        // x = m * 2^e with m a 53-bit integer
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1i64 } else { 1 };
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if exp == 0 {
            (frac, -1074i64)
        } else {
            (frac | (1u64 << 52), exp - 1075)
        };
        let mut mant = BigInt::from(m) * sign;
        let shift = e + prec as i64;
        if shift >= 0 {
            mant <<= shift as usize;
        } else {
            mant >>= (-shift) as usize;
        }
        Some(Dy { mant, prec })
    }
    pub fn zero(prec: u32) -> Dy {
        Dy {
            mant: BigInt::zero(),
            prec,
        }
    }
    pub fn add(&self, o: &Dy) -> Dy {
        Dy {
            mant: &self.mant + &o.mant,
            prec: self.prec,
        }
    }
    pub fn sub(&self, o: &Dy) -> Dy {
        Dy {
            mant: &self.mant - &o.mant,
            prec: self.prec,
        }
    }
    pub fn mul(&self, o: &Dy) -> Dy {
        Dy {
            mant: (&self.mant * &o.mant) >> self.prec,
            prec: self.prec,
        }
    }
    pub fn neg(&self) -> Dy {
        Dy {
            mant: -&self.mant,
            prec: self.prec,
        }
    }
    /// |self| < 2^-bits ?
    pub fn is_small(&self, bits: u32) -> bool {
        self.mant.magnitude().bits() <= (self.prec.saturating_sub(bits)) as u64
    }
    pub fn to_rat(&self) -> Rat {
        Rat::new(self.mant.clone(), BigInt::one() << self.prec)
    }

    /// Best rational approximation with denominator <= `den_bound`, by walking
    /// the continued fraction of the exact dyadic value.
    pub fn reconstruct_rational(&self, den_bound: &BigUint) -> Rat {
        let mut num = self.mant.clone();
        let mut den = BigInt::one() << self.prec;
        // convergents
        let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
        let (mut p1, mut q1) = (BigInt::zero(), BigInt::one());
        loop {
            if den.is_zero() {
                break;
            }
            let (a, r) = num.div_mod_floor(&den);
            let p2 = &a * &p0 + &p1;
            let q2 = &a * &q0 + &q1;
            if q2.magnitude() > den_bound && !q0.is_zero() {
                break;
            }
            p1 = p0;
            q1 = q0;
            p0 = p2;
            q0 = q2;
            num = den;
            den = r;
            if q0.magnitude() > den_bound {
                // first convergent already too big; fall back to rounding
                break;
            }
        }
        if q0.is_zero() {
            return self.to_rat();
        }
        Rat::new(p0, q0)
    }
}

/// Complex dyadic number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CDy {
    pub re: Dy,
    pub im: Dy,
}

impl CDy {
    pub fn new(re: Dy, im: Dy) -> CDy {
        CDy { re, im }
    }
    pub fn from_f64(re: f64, im: f64, prec: u32) -> Option<CDy> {
        Some(CDy {
            re: Dy::from_f64(re, prec)?,
            im: Dy::from_f64(im, prec)?,
        })
    }
    pub fn add(&self, o: &CDy) -> CDy {
        CDy::new(self.re.add(&o.re), self.im.add(&o.im))
    }
    pub fn sub(&self, o: &CDy) -> CDy {
        CDy::new(self.re.sub(&o.re), self.im.sub(&o.im))
    }
    pub fn mul(&self, o: &CDy) -> CDy {
        CDy::new(
            self.re.mul(&o.re).sub(&self.im.mul(&o.im)),
            self.re.mul(&o.im).add(&self.im.mul(&o.re)),
        )
    }
    pub fn div(&self, o: &CDy) -> Option<CDy> {
        let prec = self.re.prec;
        let n2 = &o.re.mant * &o.re.mant + &o.im.mant * &o.im.mant;
        if n2.is_zero() {
            return None;
        }
        // (a/2^p) / (n2/2^2p) = a * 2^p / n2
        let rnum = (&self.re.mant * &o.re.mant + &self.im.mant * &o.im.mant) << prec;
        let inum = (&self.im.mant * &o.re.mant - &self.re.mant * &o.im.mant) << prec;
        Some(CDy::new(
            Dy {
                mant: rnum / &n2,
                prec,
            },
            Dy {
                mant: inum / &n2,
                prec,
            },
        ))
    }
    pub fn is_small(&self, bits: u32) -> bool {
        self.re.is_small(bits) && self.im.is_small(bits)
    }
}

fn eval_cdy(coeffs: &[CDy], z: &CDy) -> CDy {
    let prec = z.re.prec;
    let mut acc = CDy::new(Dy::zero(prec), Dy::zero(prec));
    for c in coeffs.iter().rev() {
        acc = acc.mul(z).add(c);
    }
    acc
}

/// Complex roots of a polynomial with rational coefficients, refined to
/// roughly `prec` bits. Seeds come from f64 arithmetic; each seed is polished
/// by Newton iteration in dyadic arithmetic. Returns `None` when seeding or
/// convergence fails (callers treat that as "no hint available").
pub fn complex_roots(p: &Poly<Rat>, prec: u32) -> Option<Vec<CDy>> {
    let deg = p.degree()?;
    let fc: Vec<f64> = p.coeffs().iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    if fc.iter().any(|c| !c.is_finite()) {
        return None;
    }
    let seeds = f64_roots(&fc, deg)?;
    let work = prec + 64;
    let cds: Vec<CDy> = p
        .coeffs()
        .iter()
        .map(|c| CDy::new(Dy::from_rat(c, work), Dy::zero(work)))
        .collect();
    let dcoeffs: Vec<CDy> = p
        .derivative()
        .coeffs()
        .iter()
        .map(|c| CDy::new(Dy::from_rat(c, work), Dy::zero(work)))
        .collect();
    let mut out = Vec::with_capacity(deg);
    for (sre, sim) in seeds {
        let mut z = CDy::from_f64(sre, sim, work)?;
        let mut converged = false;
        for _ in 0..80 {
            let fz = eval_cdy(&cds, &z);
            if fz.is_small(prec + 16) {
                converged = true;
                break;
            }
            let dz = eval_cdy(&dcoeffs, &z);
            let step = fz.div(&dz)?;
            z = z.sub(&step);
        }
        if !converged {
            let fz = eval_cdy(&cds, &z);
            if !fz.is_small(prec / 2) {
                return None;
            }
        }
        out.push(z);
    }
    Some(out)
}

/// f64 roots of a low-degree polynomial (only used for seeding).
fn f64_roots(c: &[f64], deg: usize) -> Option<Vec<(f64, f64)>> {
    match deg {
        1 => Some(vec![(-c[0] / c[1], 0.0)]),
        2 => {
            let (a, b, cc) = (c[2], c[1], c[0]);
            let d = b * b - 4.0 * a * cc;
            if d >= 0.0 {
                let s = d.sqrt();
                Some(vec![((-b - s) / (2.0 * a), 0.0), ((-b + s) / (2.0 * a), 0.0)])
            } else {
                let s = (-d).sqrt();
                Some(vec![
                    (-b / (2.0 * a), -s / (2.0 * a)),
                    (-b / (2.0 * a), s / (2.0 * a)),
                ])
            }
        }
        3 => {
            // normalize and depress: x = t - a/3
            let a = c[2] / c[3];
            let b = c[1] / c[3];
            let d = c[0] / c[3];
            let p = b - a * a / 3.0;
            let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + d;
            let shift = -a / 3.0;
            let disc = -4.0 * p * p * p - 27.0 * q * q;
            let roots = if disc > 0.0 {
                // three real roots, trigonometric form
                let m = 2.0 * (-p / 3.0).sqrt();
                let theta = (3.0 * q / (p * m)).clamp(-1.0, 1.0).acos() / 3.0;
                vec![
                    (m * theta.cos() + shift, 0.0),
                    (m * (theta - 2.0 * std::f64::consts::PI / 3.0).cos() + shift, 0.0),
                    (m * (theta - 4.0 * std::f64::consts::PI / 3.0).cos() + shift, 0.0),
                ]
            } else {
                // one real root via Cardano, complex pair from the quadratic factor
                let half_q = q / 2.0;
                let r = (half_q * half_q + p * p * p / 27.0).sqrt();
                let u = cbrt(-half_q + r);
                let v = cbrt(-half_q - r);
                let t0 = u + v;
                // t^3 + pt + q = (t - t0)(t^2 + t0 t + (t0^2 + p))
                let bb = t0;
                let cc2 = t0 * t0 + p;
                let dd = bb * bb - 4.0 * cc2;
                let s = (-dd).max(0.0).sqrt();
                vec![
                    (t0 + shift, 0.0),
                    (-bb / 2.0 + shift, -s / 2.0),
                    (-bb / 2.0 + shift, s / 2.0),
                ]
            };
            Some(roots)
        }
        _ => None,
    }
}

fn cbrt(x: f64) -> f64 {
    if x >= 0.0 {
        x.powf(1.0 / 3.0)
    } else {
        -(-x).powf(1.0 / 3.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, rat_i};

    #[test]
    fn integer_roots_of_factored_cubic() {
        // (x-2)(x+5)(x-11)
        let p = Poly::from_i64(&[110, -43, -8, 1]);
        let coeffs: Vec<BigInt> = p.coeffs().iter().map(|c| c.numer().clone()).collect();
        assert_eq!(
            integer_roots_monic(&coeffs),
            vec![BigInt::from(-5), BigInt::from(2), BigInt::from(11)]
        );
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (x - 1/2)(x + 3)(x - 7/3) = x^3 + ... with denominators
        let f = Poly::from_rats(&[-rat(1, 2), rat_i(1)]);
        let g = Poly::from_i64(&[3, 1]);
        let h = Poly::from_rats(&[rat(-7, 3), rat_i(1)]);
        let p = f.mul(&g).mul(&h);
        let roots = rational_roots_monic(&p);
        assert_eq!(roots, vec![rat_i(-3), rat(1, 2), rat(7, 3)]);
    }

    #[test]
    fn irrational_cubic_has_no_rational_roots() {
        let p = Poly::from_i64(&[845, -169, 0, 1]);
        assert!(rational_roots_monic(&p).is_empty());
    }

    #[test]
    fn huge_coefficients_still_exact() {
        // (x - 10^20)(x^2 + 3)
        let r = BigInt::from(10u8).pow(20);
        let p = Poly::from_rats(&[
            Rat::from(-3 * &r),
            rat_i(3),
            Rat::from(-r.clone()),
            rat_i(1),
        ]);
        let roots = rational_roots_monic(&p);
        assert_eq!(roots, vec![Rat::from(r)]);
    }

    #[test]
    fn newton_refines_sqrt2() {
        let p = Poly::from_i64(&[-2, 0, 1]);
        let roots = complex_roots(&p, 200).unwrap();
        // both roots real, +-sqrt(2); squaring the dyadic approximation gives 2
        for z in &roots {
            assert!(z.im.is_small(190));
            let sq = z.re.mul(&z.re);
            let err = sq.sub(&Dy::from_rat(&rat_i(2), z.re.prec));
            assert!(err.is_small(190));
        }
    }

    #[test]
    fn reconstruct_small_rational() {
        let r = rat(-14, 13);
        let d = Dy::from_rat(&r, 256);
        let back = d.reconstruct_rational(&BigUint::from(1_000_000u64));
        assert_eq!(back, r);
    }
}
