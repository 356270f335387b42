//! The splitting algebra of a monic cubic.
//!
//! For monic squarefree f, this is the 6-dimensional commutative Q-algebra
//! Q[u,v] / (f(u), q(u,v)) with q(u,v) = (f(v) - f(u)) / (v - u). The classes
//! of u and v behave as two distinct roots of f, and w = -c2 - u - v as the
//! third, so any symmetric expression in the roots reduces to a rational
//! constant. All gluing arithmetic runs here, which turns the rationality
//! claims of the construction into runtime checks.

use super::poly::Poly;
use super::rat::{rat_i, Rat};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Clone)]
pub enum SplitAlgError {
    #[error("expected a monic cubic, got degree {0:?}")]
    NotMonicCubic(Option<usize>),
    #[error("cubic must be squarefree")]
    NotSquarefree,
    #[error("division by a zero divisor: {0}")]
    ZeroDivisor(String),
    #[error("element is not a rational constant: {0}")]
    NotConstant(String),
}

/// Context: the cubic x^3 + c2 x^2 + c1 x + c0 and its reduction data.
#[derive(Debug, Clone)]
pub struct SplitAlgebra {
    f: Poly<Rat>,
    c2: Rat,
    c1: Rat,
}

/// Element p0(u) + p1(u) v with deg p0, p1 <= 2.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitElem {
    p0: Poly<Rat>,
    p1: Poly<Rat>,
}

impl SplitElem {
    fn coords(&self) -> [Rat; 6] {
        let one = rat_i(1);
        [
            self.p0.coeff_or_zero(0, &one),
            self.p0.coeff_or_zero(1, &one),
            self.p0.coeff_or_zero(2, &one),
            self.p1.coeff_or_zero(0, &one),
            self.p1.coeff_or_zero(1, &one),
            self.p1.coeff_or_zero(2, &one),
        ]
    }

    pub fn describe(&self) -> String {
        format!("({}) + ({})*v", self.p0, self.p1)
    }
}

impl SplitAlgebra {
    pub fn new(f: &Poly<Rat>) -> Result<SplitAlgebra, SplitAlgError> {
        if f.degree() != Some(3) || !f.is_monic() {
            return Err(SplitAlgError::NotMonicCubic(f.degree()));
        }
        if !f.is_squarefree() {
            return Err(SplitAlgError::NotSquarefree);
        }
        let one = rat_i(1);
        Ok(SplitAlgebra {
            c2: f.coeff_or_zero(2, &one),
            c1: f.coeff_or_zero(1, &one),
            f: f.clone(),
        })
    }

    pub fn cubic(&self) -> &Poly<Rat> {
        &self.f
    }

    pub fn zero(&self) -> SplitElem {
        SplitElem {
            p0: Poly::zero(),
            p1: Poly::zero(),
        }
    }

    pub fn constant(&self, c: Rat) -> SplitElem {
        SplitElem {
            p0: Poly::constant(c),
            p1: Poly::zero(),
        }
    }

    pub fn one(&self) -> SplitElem {
        self.constant(rat_i(1))
    }

    /// The first root u.
    pub fn root_u(&self) -> SplitElem {
        SplitElem {
            p0: Poly::from_i64(&[0, 1]),
            p1: Poly::zero(),
        }
    }

    /// The second root v.
    pub fn root_v(&self) -> SplitElem {
        SplitElem {
            p0: Poly::zero(),
            p1: Poly::from_i64(&[1]),
        }
    }

    /// The third root -c2 - u - v.
    pub fn third_root(&self) -> SplitElem {
        SplitElem {
            p0: Poly::from_rats(&[-self.c2.clone(), -rat_i(1)]),
            p1: Poly::from_i64(&[-1]),
        }
    }

    pub fn add(&self, a: &SplitElem, b: &SplitElem) -> SplitElem {
        SplitElem {
            p0: a.p0.add(&b.p0),
            p1: a.p1.add(&b.p1),
        }
    }

    pub fn sub(&self, a: &SplitElem, b: &SplitElem) -> SplitElem {
        SplitElem {
            p0: a.p0.sub(&b.p0),
            p1: a.p1.sub(&b.p1),
        }
    }

    pub fn neg(&self, a: &SplitElem) -> SplitElem {
        SplitElem {
            p0: a.p0.neg(),
            p1: a.p1.neg(),
        }
    }

    pub fn mul(&self, a: &SplitElem, b: &SplitElem) -> SplitElem {
        // v^2 = -(u + c2) v - (u^2 + c2 u + c1)
        let red_v = Poly::from_rats(&[-self.c2.clone(), -rat_i(1)]); // -(c2 + u)
        let red_c = Poly::from_rats(&[-self.c1.clone(), -self.c2.clone(), -rat_i(1)]);
        let q00 = a.p0.mul(&b.p0);
        let q01 = a.p0.mul(&b.p1).add(&a.p1.mul(&b.p0));
        let q11 = a.p1.mul(&b.p1);
        let p0 = q00.add(&q11.mul(&red_c));
        let p1 = q01.add(&q11.mul(&red_v));
        SplitElem {
            p0: p0.rem(&self.f).expect("cubic is nonzero"),
            p1: p1.rem(&self.f).expect("cubic is nonzero"),
        }
    }

    pub fn scale(&self, a: &SplitElem, c: &Rat) -> SplitElem {
        SplitElem {
            p0: a.p0.scale(c),
            p1: a.p1.scale(c),
        }
    }

    pub fn is_zero(&self, a: &SplitElem) -> bool {
        a.p0.is_zero() && a.p1.is_zero()
    }

    /// Rational constant when all non-constant coordinates vanish.
    pub fn as_constant(&self, a: &SplitElem) -> Result<Rat, SplitAlgError> {
        let c = a.coords();
        if c[1..].iter().all(|x| Zero::is_zero(x)) {
            Ok(c[0].clone())
        } else {
            Err(SplitAlgError::NotConstant(a.describe()))
        }
    }

    /// Evaluate a rational-coefficient polynomial at an algebra element.
    pub fn eval_poly(&self, p: &Poly<Rat>, x: &SplitElem) -> SplitElem {
        let mut acc = self.zero();
        for c in p.coeffs().iter().rev() {
            acc = self.add(&self.mul(&acc, x), &self.constant(c.clone()));
        }
        acc
    }

    /// Solve b * y = a. Fails with the offending element when b is a zero
    /// divisor, which is how degenerate gluing data surfaces.
    pub fn div(&self, a: &SplitElem, b: &SplitElem) -> Result<SplitElem, SplitAlgError> {
        // columns of the multiplication-by-b matrix in the monomial basis
        let basis = self.basis();
        let mut mat: Vec<[Rat; 6]> = Vec::with_capacity(6);
        for e in &basis {
            mat.push(self.mul(b, e).coords());
        }
        let rhs = a.coords();
        // solve sum_j y_j * mat[j] = rhs by gaussian elimination over Q
        let mut m = vec![vec![rat_i(0); 7]; 6];
        for (j, col) in mat.iter().enumerate() {
            for i in 0..6 {
                m[i][j] = col[i].clone();
            }
        }
        for i in 0..6 {
            m[i][6] = rhs[i].clone();
        }
        let mut row = 0;
        let mut pivots = Vec::new();
        for col in 0..6 {
            let piv = (row..6).find(|&r| !Zero::is_zero(&m[r][col]));
            let piv = match piv {
                Some(p) => p,
                None => continue,
            };
            m.swap(row, piv);
            let inv = m[row][col].clone().recip();
            for k in col..7 {
                m[row][k] = &m[row][k] * &inv;
            }
            for r in 0..6 {
                if r != row && !Zero::is_zero(&m[r][col]) {
                    let factor = m[r][col].clone();
                    for k in col..7 {
                        let sub = &factor * &m[row][k];
                        m[r][k] = &m[r][k] - &sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == 6 {
                break;
            }
        }
        if pivots.len() < 6 {
            return Err(SplitAlgError::ZeroDivisor(b.describe()));
        }
        let mut y = [
            rat_i(0),
            rat_i(0),
            rat_i(0),
            rat_i(0),
            rat_i(0),
            rat_i(0),
        ];
        for (r, &col) in pivots.iter().enumerate() {
            y[col] = m[r][6].clone();
        }
        let p0 = Poly::from_rats(&[y[0].clone(), y[1].clone(), y[2].clone()]);
        let p1 = Poly::from_rats(&[y[3].clone(), y[4].clone(), y[5].clone()]);
        Ok(SplitElem { p0, p1 })
    }

    fn basis(&self) -> [SplitElem; 6] {
        let mk = |i: usize, j: usize| {
            let up = Poly::monomial(rat_i(1), i);
            if j == 0 {
                SplitElem {
                    p0: up,
                    p1: Poly::zero(),
                }
            } else {
                SplitElem {
                    p0: Poly::zero(),
                    p1: up,
                }
            }
        };
        [mk(0, 0), mk(1, 0), mk(2, 0), mk(0, 1), mk(1, 1), mk(2, 1)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::{rat, rat_i};
    use crate::rng::SplitMix64;

    fn sample_cubics(n: usize, seed: u64) -> Vec<Poly<Rat>> {
        let mut rng = SplitMix64::new(seed);
        let mut out = Vec::new();
        while out.len() < n {
            let c2 = rat(rng.i64_in(-9, 9), rng.i64_in(1, 4));
            let c1 = rat(rng.i64_in(-9, 9), rng.i64_in(1, 4));
            let c0 = rat(rng.i64_in(-9, 9), rng.i64_in(1, 4));
            let f = Poly::from_rats(&[c0, c1, c2, rat_i(1)]);
            if f.is_squarefree() {
                out.push(f);
            }
        }
        out
    }

    #[test]
    fn symmetric_functions_reduce_to_coefficients() {
        for f in sample_cubics(200, 0x5eed) {
            let alg = SplitAlgebra::new(&f).unwrap();
            let u = alg.root_u();
            let v = alg.root_v();
            let w = alg.third_root();
            let one = rat_i(1);
            let e1 = alg.add(&alg.add(&u, &v), &w);
            let e2 = alg.add(
                &alg.add(&alg.mul(&u, &v), &alg.mul(&u, &w)),
                &alg.mul(&v, &w),
            );
            let e3 = alg.mul(&alg.mul(&u, &v), &w);
            assert_eq!(alg.as_constant(&e1).unwrap(), -f.coeff_or_zero(2, &one));
            assert_eq!(alg.as_constant(&e2).unwrap(), f.coeff_or_zero(1, &one));
            assert_eq!(alg.as_constant(&e3).unwrap(), -f.coeff_or_zero(0, &one));
        }
    }

    #[test]
    fn root_differences_square_to_discriminant() {
        for f in sample_cubics(40, 0xd15c) {
            let alg = SplitAlgebra::new(&f).unwrap();
            let u = alg.root_u();
            let v = alg.root_v();
            let w = alg.third_root();
            let d1 = alg.sub(&u, &v);
            let d2 = alg.sub(&u, &w);
            let d3 = alg.sub(&v, &w);
            let prod = alg.mul(&alg.mul(&d1, &d2), &d3);
            let sq = alg.mul(&prod, &prod);
            assert_eq!(
                alg.as_constant(&sq).unwrap(),
                f.discriminant().unwrap(),
                "failed for {}",
                f
            );
        }
    }

    #[test]
    fn division_round_trips() {
        let f = Poly::from_i64(&[845, -169, 0, 1]);
        let alg = SplitAlgebra::new(&f).unwrap();
        let u = alg.root_u();
        let v = alg.root_v();
        let x = alg.sub(&u, &v); // u - v is invertible (roots distinct)
        let y = alg.add(&alg.mul(&u, &u), &alg.constant(rat_i(7)));
        let q = alg.div(&y, &x).unwrap();
        assert_eq!(alg.mul(&q, &x), y);
    }

    #[test]
    fn division_by_zero_divisor_fails() {
        let f = Poly::from_i64(&[0, -1, 0, 1]); // x(x-1)(x+1): split algebra has zero divisors
        let alg = SplitAlgebra::new(&f).unwrap();
        let u = alg.root_u();
        // u*(u-1)*(u+1) = f(u) = 0, so (u - 1) kills u(u+1): it is a zero divisor
        let zd = alg.sub(&u, &alg.one());
        let err = alg.div(&alg.one(), &zd).unwrap_err();
        match err {
            SplitAlgError::ZeroDivisor(_) => {}
            other => panic!("expected zero divisor error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SplitAlgebra::new(&Poly::from_i64(&[1, 2, 1])).is_err());
        assert!(SplitAlgebra::new(&Poly::from_i64(&[0, 0, 0, 1])).is_err());
    }
}
