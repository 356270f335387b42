//! The genus-3 constructions: three curves y^2 = x(x^2 + A_i x + B_i) with
//! marked 2-torsion data glue into a hyperelliptic curve when the twisting
//! factor vanishes and into a plane quartic otherwise; the twisting factor
//! also decides over which quadratic extension the Jacobian identification
//! holds.
//!
//! The gluing data is carried by the product R of the chosen square roots of
//! the Delta_i. Every formula below depends only on (A_i, B_i, R), which is
//! what makes triples with individually irrational square roots but rational
//! product (conjugate choices on a pair of curves) work exactly.

use crate::algebra::rat::{is_square, rat_i, squarefree_part, Rat, SquarefreeClass};
use crate::elliptic::BFormCurve;
use crate::ffcount::models::{quartic_nonsingularity, CurveModel};
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Clone)]
pub enum Glue3Error {
    #[error("square-root data does not match: {0}")]
    BadRootData(String),
    #[error("the product of the Delta_i must be a rational square; got {0}")]
    DeltaProductNotSquare(String),
    #[error("operation requires twisting factor zero, got {0}")]
    TwistNotZero(String),
    #[error("operation requires nonzero twisting factor (use the hyperelliptic construction)")]
    TwistZero,
    #[error("B_{i} B_{j} = {val} is not a rational square, contradicting the vanishing twisting factor")]
    ProductNotSquare { i: usize, j: usize, val: String },
    #[error("no sign choice satisfies the three compatibility relations")]
    NoSignChoice,
    #[error("nonsingularity failure: {0} = 0")]
    Singular(String),
    #[error("parameter solver: {0}")]
    Solver(String),
}

/// Three B-form curves with chosen square-root data for their Delta_i.
///
/// `roots` records rational d_i when each Delta_i is itself a square; `r` is
/// always the rational product d_1 d_2 d_3 and is the only thing the
/// constructions consume. r^2 = Delta_1 Delta_2 Delta_3 exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct GlueTriple {
    pub curves: [BFormCurve; 3],
    pub roots: [Option<Rat>; 3],
    pub r: Rat,
}

impl GlueTriple {
    /// Build from individually rational square roots (sign free per slot).
    pub fn from_square_roots(
        curves: [BFormCurve; 3],
        d: [Rat; 3],
    ) -> Result<GlueTriple, Glue3Error> {
        for (i, (c, di)) in curves.iter().zip(d.iter()).enumerate() {
            if di * di != c.delta() {
                return Err(Glue3Error::BadRootData(format!(
                    "d_{}^2 = {} but Delta_{} = {}",
                    i + 1,
                    di * di,
                    i + 1,
                    c.delta()
                )));
            }
        }
        let r = &d[0] * &d[1] * &d[2];
        Ok(GlueTriple {
            curves,
            roots: [Some(d[0].clone()), Some(d[1].clone()), Some(d[2].clone())],
            r,
        })
    }

    /// Build from the product root alone: r with r^2 = Delta_1 Delta_2 Delta_3.
    /// This is how conjugate square-root choices on a pair of curves (d_1, d_2
    /// irrational, d_1 d_2 rational) enter.
    pub fn from_product_root(curves: [BFormCurve; 3], r: Rat) -> Result<GlueTriple, Glue3Error> {
        let prod = curves[0].delta() * curves[1].delta() * curves[2].delta();
        if &r * &r != prod {
            return Err(Glue3Error::BadRootData(format!(
                "r^2 = {} but Delta_1 Delta_2 Delta_3 = {}",
                &r * &r,
                prod
            )));
        }
        let roots = curves
            .iter()
            .map(|c| is_square(&c.delta()))
            .collect::<Vec<_>>();
        Ok(GlueTriple {
            curves,
            roots: [roots[0].clone(), roots[1].clone(), roots[2].clone()],
            r,
        })
    }

    /// The same data with the choice of square root on slot `i` negated
    /// (equivalently, the other 2-torsion point marked there).
    pub fn flip_sign(&self, i: usize) -> GlueTriple {
        let mut roots = self.roots.clone();
        if let Some(d) = &roots[i] {
            roots[i] = Some(-d.clone());
        }
        GlueTriple {
            curves: self.curves.clone(),
            roots,
            r: -self.r.clone(),
        }
    }

    pub fn deltas(&self) -> [Rat; 3] {
        [
            self.curves[0].delta(),
            self.curves[1].delta(),
            self.curves[2].delta(),
        ]
    }
}

/// T = R (A1^2/D1 + A2^2/D2 + A3^2/D3 - 1) - 2 A1 A2 A3, computed along two
/// algebraically distinct routes that are asserted equal.
pub fn twisting_factor(tr: &GlueTriple) -> Rat {
    let [e1, e2, e3] = &tr.curves;
    let d = tr.deltas();
    let sum = &e1.a * &e1.a / &d[0] + &e2.a * &e2.a / &d[1] + &e3.a * &e3.a / &d[2];
    let t1 = &tr.r * (sum - rat_i(1)) - rat_i(2) * &e1.a * &e2.a * &e3.a;

    // lambda route: R(l1^2 + l2^2 + l3^2 - 2 l1 l2 l3 - 1) with l_i^2 = A_i^2/D_i
    // and l1 l2 l3 = A1 A2 A3 / R
    let l_sq: Vec<Rat> = tr
        .curves
        .iter()
        .zip(d.iter())
        .map(|(e, di)| &e.a * &e.a / di)
        .collect();
    let l_prod = &e1.a * &e2.a * &e3.a / &tr.r;
    let t2 = &tr.r * (&l_sq[0] + &l_sq[1] + &l_sq[2] - rat_i(2) * &l_prod - rat_i(1));
    assert_eq!(t1, t2, "the two twisting-factor expressions disagree");
    t1
}

/// The hyperelliptic composite W^2 Z^2 = a X^4 + b Y^4 + c Z^4 on the conic
/// d X^2 + e Y^2 + f Z^2 = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperComposite {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
    pub e: Rat,
    pub f: Rat,
}

impl HyperComposite {
    pub fn model(&self) -> CurveModel {
        CurveModel::ConicDouble {
            a: self.a.clone(),
            b: self.b.clone(),
            c: self.c.clone(),
            d: self.d.clone(),
            e: self.e.clone(),
            f: self.f.clone(),
        }
    }
}

/// Genus-3 gluing in the T = 0 case.
pub fn glue_hyper(tr: &GlueTriple) -> Result<HyperComposite, Glue3Error> {
    let t = twisting_factor(tr);
    if !Zero::is_zero(&t) {
        return Err(Glue3Error::TwistNotZero(crate::algebra::rat::format_rat(&t)));
    }
    let [e1, e2, e3] = &tr.curves;
    let d = tr.deltas();
    let half_r = &tr.r / rat_i(2);
    let q1 = &e1.b / &d[0];
    let q2 = &e2.b / &d[1];
    let q3 = &e3.b / &d[2];
    let a = &half_r * &e1.b * (-&q1 + &q2 + &q3);
    let b = &half_r * &e2.b * (&q1 - &q2 + &q3);
    let c = &half_r * &e3.b * (&q1 + &q2 - &q3);

    // |d| = 1/sqrt(B2 B3) etc.; the products must be squares when T = 0
    let mut mags = Vec::with_capacity(3);
    for (i, j) in [(1usize, 2usize), (0, 2), (0, 1)] {
        let prod = &tr.curves[i].b * &tr.curves[j].b;
        let root = is_square(&prod).ok_or_else(|| Glue3Error::ProductNotSquare {
            i: i + 1,
            j: j + 1,
            val: crate::algebra::rat::format_rat(&prod),
        })?;
        mags.push(root.recip());
    }
    // resolve the eight sign vectors against A1 = -aef, A2 = -bdf, A3 = -cde
    for signs in 0..8u8 {
        let s = |k: u8| if signs >> k & 1 == 1 { rat_i(-1) } else { rat_i(1) };
        let dv = &mags[0] * s(0);
        let ev = &mags[1] * s(1);
        let fv = &mags[2] * s(2);
        if e1.a == -(&a * &ev * &fv) && e2.a == -(&b * &dv * &fv) && e3.a == -(&c * &dv * &ev) {
            return Ok(HyperComposite {
                a,
                b,
                c,
                d: dv,
                e: ev,
                f: fv,
            });
        }
    }
    Err(Glue3Error::NoSignChoice)
}

/// The plane quartic B1 X^4 + B2 Y^4 + B3 Z^4 + d X^2Y^2 + e X^2Z^2 + f Y^2Z^2
/// produced in the T != 0 case, tagged with the twisting factor.
#[derive(Debug, Clone, PartialEq)]
pub struct QuarticCurve {
    pub b1: Rat,
    pub b2: Rat,
    pub b3: Rat,
    pub d: Rat,
    pub e: Rat,
    pub f: Rat,
    pub twisting_factor: Rat,
    /// `Some(sqrt)` exactly when the Jacobian identification holds over Q.
    pub sqrt_twist: Option<Rat>,
}

impl QuarticCurve {
    pub fn model(&self) -> CurveModel {
        CurveModel::Quartic {
            b1: self.b1.clone(),
            b2: self.b2.clone(),
            b3: self.b3.clone(),
            d: self.d.clone(),
            e: self.e.clone(),
            f: self.f.clone(),
        }
    }

    pub fn coeffs(&self) -> [Rat; 6] {
        [
            self.b1.clone(),
            self.b2.clone(),
            self.b3.clone(),
            self.d.clone(),
            self.e.clone(),
            self.f.clone(),
        ]
    }

    /// The quadratic class of the field over which the identification holds.
    pub fn twist_class(&self) -> Option<SquarefreeClass> {
        squarefree_part(&self.twisting_factor).ok()
    }

    /// Projective equality: all pairwise cross products of coefficients agree.
    pub fn projectively_equal(&self, other: &[Rat; 6]) -> bool {
        let mine = self.coeffs();
        for i in 0..6 {
            for j in (i + 1)..6 {
                if &mine[i] * &other[j] != &mine[j] * &other[i] {
                    return false;
                }
            }
        }
        true
    }
}

/// Genus-3 gluing in the T != 0 case.
pub fn glue_quartic(tr: &GlueTriple) -> Result<QuarticCurve, Glue3Error> {
    let t = twisting_factor(tr);
    if Zero::is_zero(&t) {
        return Err(Glue3Error::TwistZero);
    }
    let [e1, e2, e3] = &tr.curves;
    let dl = tr.deltas();
    let half = rat_i(1) / rat_i(2);
    let d = &half * (-(&e1.a * &e2.a) + &e3.a * &tr.r / &dl[2]);
    let e = &half * (-(&e1.a * &e3.a) + &e2.a * &tr.r / &dl[1]);
    let f = &half * (-(&e2.a * &e3.a) + &e1.a * &tr.r / &dl[0]);
    for (name, v) in quartic_nonsingularity(&e1.b, &e2.b, &e3.b, &d, &e, &f) {
        if Zero::is_zero(&v) {
            return Err(Glue3Error::Singular(name));
        }
    }
    let sqrt_twist = if t.is_positive() { is_square(&t) } else { None };
    Ok(QuarticCurve {
        b1: e1.b.clone(),
        b2: e2.b.clone(),
        b3: e3.b.clone(),
        d,
        e,
        f,
        twisting_factor: t,
        sqrt_twist,
    })
}

/// Verify the exact relations the hyperelliptic composite must satisfy:
/// B2 B3 d^2 = 1 (cyclically) and the three sign relations.
pub fn hyper_relations_hold(tr: &GlueTriple, h: &HyperComposite) -> bool {
    let [e1, e2, e3] = &tr.curves;
    let one = rat_i(1);
    &e2.b * &e3.b * &h.d * &h.d == one
        && &e1.b * &e3.b * &h.e * &h.e == one
        && &e1.b * &e2.b * &h.f * &h.f == one
        && e1.a == -(&h.a * &h.e * &h.f)
        && e2.a == -(&h.b * &h.d * &h.f)
        && e3.a == -(&h.c * &h.d * &h.e)
}

/// Good-reduction data shared by the product checks: all Delta_i and B_i plus
/// the composite's own nonsingularity quantities.
pub fn triple_good_primes(tr: &GlueTriple, model: &CurveModel, limit: u64, want: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 3u64;
    while p <= limit && out.len() < want {
        let ok = crate::ffcount::good_reduction(model, p).is_ok()
            && tr.curves.iter().all(|c| {
                let f = crate::ffcount::Fq::new(p, 1).unwrap();
                matches!(f.from_rat(&c.b), Ok(v) if !f.is_zero(&v))
                    && matches!(f.from_rat(&c.delta()), Ok(v) if !f.is_zero(&v))
                    && f.from_rat(&c.a).is_ok()
            })
            && {
                let f = crate::ffcount::Fq::new(p, 1).unwrap();
                f.from_rat(&tr.r).is_ok()
            };
        if ok {
            out.push(p);
        }
        p += 2;
        while !primal(p) {
            p += 2;
        }
    }
    out
}

fn primal(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Closed-form parameter solvers for assembling T = 0 or square-T triples.
pub mod sections {
    use super::*;

    /// Solve (t+1)/(t-1) = rho for the third-curve parameter of the
    /// (A = -1-t, B = t) family. rho = (A1 A2 +- 4 s)/r with s^2 = B1 B2 and
    /// r^2 = Delta_1 Delta_2.
    pub fn t_from_22(rho: &Rat) -> Result<Rat, Glue3Error> {
        let one = rat_i(1);
        if rho == &one || rho == &(-&one) {
            return Err(Glue3Error::Solver(format!(
                "(t+1)/(t-1) = {} has no usable solution",
                crate::algebra::rat::format_rat(rho)
            )));
        }
        Ok((rho + &one) / (rho - &one))
    }

    /// t = (A1 +- 2 sqrt(B1))(A2 +- 2 sqrt(B2)) / sqrt(Delta1 Delta2), defined
    /// whenever B1, B2 and Delta1*Delta2 are squares.
    pub fn t_from_24(
        e1: &BFormCurve,
        e2: &BFormCurve,
        sign1: bool,
        sign2: bool,
        sign_r: bool,
    ) -> Result<Rat, Glue3Error> {
        let rb1 = is_square(&e1.b).ok_or_else(|| {
            Glue3Error::Solver(format!("B1 = {} is not a square", crate::algebra::rat::format_rat(&e1.b)))
        })?;
        let rb2 = is_square(&e2.b).ok_or_else(|| {
            Glue3Error::Solver(format!("B2 = {} is not a square", crate::algebra::rat::format_rat(&e2.b)))
        })?;
        let dd = e1.delta() * e2.delta();
        let rd = is_square(&dd).ok_or_else(|| {
            Glue3Error::Solver(format!(
                "Delta1*Delta2 = {} is not a square",
                crate::algebra::rat::format_rat(&dd)
            ))
        })?;
        let s1 = if sign1 { rat_i(2) } else { rat_i(-2) };
        let s2 = if sign2 { rat_i(2) } else { rat_i(-2) };
        let r = if sign_r { rd } else { -rd };
        Ok((&e1.a + s1 * rb1) * (&e2.a + s2 * rb2) / r)
    }

    /// The square condition for a (4,2)-type third curve: t is rational
    /// exactly when 2(1-rho) is a square, rho as in `t_from_22`.
    pub fn square_condition_42(rho: &Rat) -> Rat {
        rat_i(2) * (rat_i(1) - rho)
    }

    /// Both roots of (rho+1) t^2 + (6-2 rho) t + (rho+1) = 0 when the square
    /// condition holds.
    pub fn t_from_42(rho: &Rat) -> Result<[Rat; 2], Glue3Error> {
        let cond = square_condition_42(rho);
        let w = is_square(&cond).ok_or_else(|| {
            Glue3Error::Solver(format!(
                "2(1-rho) = {} is not a square",
                crate::algebra::rat::format_rat(&cond)
            ))
        })?;
        let one = rat_i(1);
        if rho == &(-&one) {
            return Err(Glue3Error::Solver("rho = -1 degenerates the quadratic".into()));
        }
        let den = rho + &one;
        let base = rho - rat_i(3);
        Ok([
            (&base + rat_i(2) * &w) / &den,
            (&base - rat_i(2) * &w) / &den,
        ])
    }

    /// Parameterization of w^2 = 4(t-1)^2 A1^2 + 16 t Delta_1 by z != 0:
    /// the (4,2)-type square-twist family for a doubled first curve.
    pub fn t_param_42(z: &Rat, a1: &Rat, b1: &Rat) -> Result<(Rat, Rat), Glue3Error> {
        if Zero::is_zero(z) || Zero::is_zero(a1) {
            return Err(Glue3Error::Solver("z and A1 must be nonzero".into()));
        }
        let delta1 = a1 * a1 - rat_i(4) * b1;
        let t = (z + rat_i(4) * b1) * (z - &delta1) / (a1 * a1 * z);
        let w = rat_i(2) * (z * z + rat_i(4) * b1 * &delta1) / (a1 * z);
        Ok((t, w))
    }

    /// Self-pair twisting class: for E1 = E2 = E3 with d^2 = Delta, the
    /// twisting factor is -(2A + d) modulo squares.
    pub fn selfpair_condition(a: &Rat, d: &Rat) -> Rat {
        -(rat_i(2) * a + d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;
    use crate::families::{instantiate, FamilyLabel};
    use crate::rng::SplitMix64;

    fn all_same_triple(d_sign: i64) -> GlueTriple {
        let e = BFormCurve::new(rat_i(2), rat_i(-3)).unwrap();
        GlueTriple::from_square_roots(
            [e.clone(), e.clone(), e],
            [rat_i(4 * d_sign), rat_i(4 * d_sign), rat_i(4 * d_sign)],
        )
        .unwrap()
    }

    #[test]
    fn twisting_factor_specializations() {
        assert_eq!(twisting_factor(&all_same_triple(-1)), rat_i(0));
        assert_eq!(twisting_factor(&all_same_triple(1)), rat_i(-32));
    }

    #[test]
    fn twisting_factor_cor_3_4_data() {
        // E1 = E2: A=-11, B=32 (Delta = -7); E3: A=-31, B=240 with P3 = (15,0),
        // so d3 = -(A3 + 2*15) = 1; R = d1 d2 d3 = -7.
        let e1 = BFormCurve::new(rat_i(-11), rat_i(32)).unwrap();
        let e3 = BFormCurve::new(rat_i(-31), rat_i(240)).unwrap();
        let tr = GlueTriple::from_product_root([e1.clone(), e1, e3], rat_i(-7)).unwrap();
        assert_eq!(twisting_factor(&tr), rat_i(1024));
        let q = glue_quartic(&tr).unwrap();
        assert_eq!(q.sqrt_twist, Some(rat_i(32)));
        assert!(q.projectively_equal(&[
            rat_i(2),
            rat_i(2),
            rat_i(15),
            rat_i(3),
            rat_i(-11),
            rat_i(-11)
        ]));
    }

    #[test]
    fn hyper_specialization_minus_18() {
        let tr = all_same_triple(-1);
        let h = glue_hyper(&tr).unwrap();
        assert_eq!(h.a, rat_i(-18));
        assert_eq!(h.b, rat_i(-18));
        assert_eq!(h.c, rat_i(-18));
        assert_eq!(&h.d * &h.d, rat(1, 9));
        assert!(hyper_relations_hold(&tr, &h));
        // T != 0 refuses the hyperelliptic path
        assert!(matches!(
            glue_hyper(&all_same_triple(1)),
            Err(Glue3Error::TwistNotZero(_))
        ));
        // and T = 0 refuses the quartic path
        assert!(matches!(glue_quartic(&tr), Err(Glue3Error::TwistZero)));
    }

    #[test]
    fn quartic_864_from_the_2x6_family() {
        // E1 = E2 = E3 from the (2,6) row at t = 19/6, d = 16t
        let t = rat(19, 6);
        let inst = instantiate(FamilyLabel::B2x(6), &t).unwrap();
        let e = inst.bform().unwrap().clone();
        let d = rat_i(16) * &t;
        assert_eq!(&d * &d, e.delta());
        let tr = GlueTriple::from_square_roots(
            [e.clone(), e.clone(), e],
            [d.clone(), d.clone(), d],
        )
        .unwrap();
        let tf = twisting_factor(&tr);
        assert!(is_square(&tf).is_some(), "T = {} not square", tf);
        let q = glue_quartic(&tr).unwrap();
        assert!(q.projectively_equal(&[
            rat_i(15625),
            rat_i(15625),
            rat_i(15625),
            rat_i(-96914),
            rat_i(-96914),
            rat_i(-96914)
        ]));
    }

    #[test]
    fn twisting_factor_sign_flips() {
        let mut rng = SplitMix64::new(0x51f7);
        for _ in 0..200 {
            let mut curves = Vec::new();
            let mut ds = Vec::new();
            while curves.len() < 3 {
                let a = rat_i(rng.i64_in(-9, 9));
                let d = rat_i(rng.i64_in(1, 9));
                let b = (&a * &a - &d * &d) / rat_i(4);
                if Zero::is_zero(&b) || Zero::is_zero(&(&d * &d)) {
                    continue;
                }
                if let Ok(c) = BFormCurve::new(a, b) {
                    curves.push(c);
                    ds.push(d);
                }
            }
            let tr = GlueTriple::from_square_roots(
                [curves[0].clone(), curves[1].clone(), curves[2].clone()],
                [ds[0].clone(), ds[1].clone(), ds[2].clone()],
            )
            .unwrap();
            // all 8 sign choices give at most 2 distinct twisting factors
            let mut ts = Vec::new();
            for mask in 0..8 {
                let mut t2 = tr.clone();
                for i in 0..3 {
                    if mask >> i & 1 == 1 {
                        t2 = t2.flip_sign(i);
                    }
                }
                ts.push(twisting_factor(&t2));
            }
            ts.dedup();
            let mut uniq = ts.clone();
            uniq.sort();
            uniq.dedup();
            assert!(uniq.len() <= 2, "more than two twist values: {uniq:?}");
            // flipping one sign equals negating r
            let f0 = tr.flip_sign(0);
            assert_eq!(f0.r, -tr.r.clone());
        }
    }

    #[test]
    fn section_solvers_feed_back_to_valid_twists() {
        // (2,4)-type: F_{2,8} pair has all data square, any parameters work
        let u = rat_i(3);
        let v = rat(1, 2);
        let e1 = instantiate(FamilyLabel::B2x(8), &u).unwrap().bform().unwrap().clone();
        let e2 = instantiate(FamilyLabel::B2x(8), &v).unwrap().bform().unwrap().clone();
        let t = sections::t_from_24(&e1, &e2, true, true, true).unwrap();
        let e3 = instantiate(FamilyLabel::B2x(4), &t).unwrap().bform().unwrap().clone();
        let d1 = is_square(&e1.delta()).unwrap();
        let d2 = is_square(&e2.delta()).unwrap();
        let d3 = rat_i(4) * &t; // the table's choice for the (2,4) row
        let tr = GlueTriple::from_square_roots([e1, e2, e3], [d1, d2, d3]).unwrap();
        assert_eq!(twisting_factor(&tr), rat_i(0));

        // (4,2)-type square-T family: every z gives a square twisting factor
        let e1 = instantiate(FamilyLabel::B(10), &rat_i(2)).unwrap().bform().unwrap().clone();
        for z in [rat_i(1), rat_i(5), rat(-7, 3)] {
            let (t, _w) = sections::t_param_42(&z, &e1.a, &e1.b).unwrap();
            if instantiate(FamilyLabel::Bx2(4), &t).is_err() {
                continue;
            }
            let e3 = instantiate(FamilyLabel::Bx2(4), &t).unwrap().bform().unwrap().clone();
            let d3 = (&t - rat_i(1)) * (&t - rat_i(1));
            let r = e1.delta() * &d3; // d1 = d2 conjugate pair with product Delta_1
            let tr = GlueTriple::from_product_root([e1.clone(), e1.clone(), e3], r).unwrap();
            let tf = twisting_factor(&tr);
            assert!(is_square(&tf).is_some(), "z = {z}: T = {tf} not a square");
        }
    }

    #[test]
    fn selfpair_condition_matches_table_row_2x6() {
        // A = -2t^4 + 12t^2 + 6, d = 16t: the condition is a square times
        // t^4 - 6t^2 - 4t - 3
        let t = rat(19, 6);
        let inst = instantiate(FamilyLabel::B2x(6), &t).unwrap();
        let e = inst.bform().unwrap();
        let d = rat_i(16) * &t;
        let cls1 = squarefree_part(&sections::selfpair_condition(&e.a, &d)).unwrap();
        let poly_val = &t * &t * &t * &t - rat_i(6) * &t * &t - rat_i(4) * &t - rat_i(3);
        let cls2 = squarefree_part(&poly_val).unwrap();
        assert!(cls1.same_class(&cls2));
    }
}
