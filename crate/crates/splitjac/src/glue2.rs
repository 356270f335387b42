//! The genus-2 construction: from two elliptic curves y^2 = f, y^2 = g and a
//! 2-torsion matching, build the sextic y^2 = h whose Jacobian is the
//! quotient of E_f x E_g by the graph of the matching, together with the
//! quotient-cover data that certifies the construction.
//!
//! All arithmetic runs inside the splitting algebra of f, with the matching
//! realizing the roots of g; every quantity the theory asserts to be rational
//! is reduced to a rational constant at runtime, so an invalid matching
//! cannot slip through. For fully split inputs a plain rational fast path
//! computes the same data; tests cross-check the two paths.

use crate::algebra::matching::{match_roots, MatchError, MatchKind, Matching};
use crate::algebra::poly::Poly;
use crate::algebra::rat::{rat_i, squarefree_part, Rat};
use crate::algebra::splitalg::{SplitAlgError, SplitAlgebra, SplitElem};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Clone)]
pub enum GlueError {
    #[error("inputs must be monic squarefree cubics")]
    BadInput,
    #[error("matching comes from an isomorphism of curves ({0} vanishes); the quotient is not a Jacobian")]
    IsomorphismMatching(&'static str),
    #[error("invalid matching: {0} did not reduce to a rational constant")]
    NotRational(String),
    #[error("internal identity failed: {0}")]
    IdentityFailed(&'static str),
    #[error("glued sextic is not separable")]
    NotSeparable,
    #[error(transparent)]
    Algebra(#[from] SplitAlgError),
    #[error(transparent)]
    Matching(#[from] MatchError),
    #[error("self-gluing requires an irreducible 2-division cubic with square discriminant; {0}")]
    RotationNotEquivariant(String),
}

/// A genus-2 curve y^2 = h with h a separable sextic.
#[derive(Debug, Clone, PartialEq)]
pub struct Genus2Curve {
    pub h: Poly<Rat>,
}

impl Genus2Curve {
    pub fn new(h: Poly<Rat>) -> Result<Self, GlueError> {
        if h.degree() != Some(6) || !h.is_squarefree() {
            return Err(GlueError::NotSeparable);
        }
        Ok(Genus2Curve { h })
    }
}

/// Output of the gluing: the curve, the coefficients A, B, the four cyclic
/// sums they came from (normalized by the Vandermonde of the root order, so
/// each is a well-defined rational; A = disc_g a1/a2 and B = disc_f b1/b2 do
/// not depend on the normalization), the two auxiliary cubics, and the cover
/// maps' affine data (z -> t1 z + t2 identifies v^2 = gbar with y^2 = g, and
/// s1, s2 play the same role for fbar and f).
#[derive(Debug, Clone, PartialEq)]
pub struct GlueResult {
    pub curve: Genus2Curve,
    pub a_coeff: Rat,
    pub b_coeff: Rat,
    pub a1: Rat,
    pub a2: Rat,
    pub b1: Rat,
    pub b2: Rat,
    pub fbar: Poly<Rat>,
    pub gbar: Poly<Rat>,
    pub t1: Rat,
    pub t2: Rat,
    pub s1: Rat,
    pub s2: Rat,
    pub disc_f: Rat,
    pub disc_g: Rat,
}

struct AlgebraScratch<'a> {
    alg: &'a SplitAlgebra,
    alpha: [SplitElem; 3],
    beta: [SplitElem; 3],
}

impl<'a> AlgebraScratch<'a> {
    fn diff_a(&self, i: usize, j: usize) -> SplitElem {
        self.alg.sub(&self.alpha[i], &self.alpha[j])
    }
    fn diff_b(&self, i: usize, j: usize) -> SplitElem {
        self.alg.sub(&self.beta[i], &self.beta[j])
    }
}

/// Glue y^2 = f and y^2 = g along a verified matching.
pub fn glue(f: &Poly<Rat>, g: &Poly<Rat>, m: &Matching) -> Result<GlueResult, GlueError> {
    if f.degree() != Some(3) || g.degree() != Some(3) || !f.is_monic() || !g.is_monic() {
        return Err(GlueError::BadInput);
    }
    if !f.is_squarefree() || !g.is_squarefree() {
        return Err(GlueError::BadInput);
    }
    let alg = SplitAlgebra::new(f)?;
    let alpha = [alg.root_u(), alg.root_v(), alg.third_root()];
    let beta = m.betas(&alg);
    let sc = AlgebraScratch {
        alg: &alg,
        alpha,
        beta,
    };
    let disc_f = f.discriminant().expect("cubic");
    let disc_g = g.discriminant().expect("cubic");

    // the four cyclic sums; each must be a rational constant
    let cyc = [(2usize, 1usize), (1, 0), (0, 2)];
    let mut a1 = alg.zero();
    let mut b1 = alg.zero();
    let mut a2 = alg.zero();
    let mut b2 = alg.zero();
    let mut t2n = alg.zero();
    let mut s2n = alg.zero();
    for &(i, j) in &cyc {
        let da = sc.diff_a(i, j);
        let db = sc.diff_b(i, j);
        let k = 3 - i - j; // the index not in {i, j}
        a1 = alg.add(&a1, &alg.div(&alg.mul(&da, &da), &db)?);
        b1 = alg.add(&b1, &alg.div(&alg.mul(&db, &db), &da)?);
        a2 = alg.add(&a2, &alg.mul(&sc.alpha[k], &db));
        b2 = alg.add(&b2, &alg.mul(&sc.beta[k], &da));
        // t2 ~ sum beta_k (beta_i - beta_j)^2 / (alpha_i - alpha_j)
        t2n = alg.add(&t2n, &alg.div(&alg.mul(&sc.beta[k], &alg.mul(&db, &db)), &da)?);
        s2n = alg.add(&s2n, &alg.div(&alg.mul(&sc.alpha[k], &alg.mul(&da, &da)), &db)?);
    }
    let rational = |e: &SplitElem, what: &str| -> Result<Rat, GlueError> {
        alg.as_constant(e)
            .map_err(|_| GlueError::NotRational(format!("{what} = {}", e.describe())))
    };
    // The four sums change sign under odd relabelings of the roots, so they
    // are rational multiples of the Vandermonde delta = (a1-a2)(a1-a3)(a2-a3)
    // rather than constants. Normalizing by delta makes each of them a
    // well-defined rational; every downstream formula uses only ratios, which
    // are independent of the normalization.
    let delta = alg.mul(
        &alg.mul(&sc.diff_a(0, 1), &sc.diff_a(0, 2)),
        &sc.diff_a(1, 2),
    );
    let by_delta = |e: &SplitElem, what: &str| -> Result<Rat, GlueError> {
        let q = alg.div(e, &delta)?;
        rational(&q, what)
    };
    let a1 = by_delta(&a1, "a1")?;
    let b1 = by_delta(&b1, "b1")?;
    let a2 = by_delta(&a2, "a2")?;
    let b2 = by_delta(&b2, "b2")?;
    let t2n = by_delta(&t2n, "t2 numerator")?;
    let s2n = by_delta(&s2n, "s2 numerator")?;
    for (v, name) in [(&a1, "a1"), (&a2, "a2"), (&b1, "b1"), (&b2, "b2")] {
        if Zero::is_zero(v) {
            return Err(GlueError::IsomorphismMatching(match name {
                "a1" => "a1",
                "a2" => "a2",
                "b1" => "b1",
                _ => "b2",
            }));
        }
    }
    let a_coeff = &disc_g * &a1 / &a2;
    let b_coeff = &disc_f * &b1 / &b2;

    // h = -prod over cyclic pairs of (A (alpha_i - alpha_j)(alpha_j - alpha_k') ... )
    // factors: indices (21)(13), (32)(21), (13)(32) as displayed
    let pairs = [((1, 0), (0, 2)), ((2, 1), (1, 0)), ((0, 2), (2, 1))];
    let mut gbar_c = [alg.zero(), alg.zero(), alg.zero(), alg.zero()];
    gbar_c[0] = alg.constant(rat_i(-1));
    // build as product of linear (in u) polynomials with algebra coefficients:
    // -(A d_a u + B d_b) over the three pairs, tracked via coefficient lists
    let mut acc: Vec<SplitElem> = vec![alg.constant(rat_i(-1))];
    for &((i, j), (k, l)) in &pairs {
        let da = alg.mul(&sc.diff_a(i, j), &sc.diff_a(k, l));
        let db = alg.mul(&sc.diff_b(i, j), &sc.diff_b(k, l));
        let lin = [
            alg.scale(&db, &b_coeff),
            alg.scale(&da, &a_coeff),
        ];
        // acc *= lin
        let mut next = vec![alg.zero(); acc.len() + 1];
        for (ai, av) in acc.iter().enumerate() {
            for (bi, bv) in lin.iter().enumerate() {
                next[ai + bi] = alg.add(&next[ai + bi], &alg.mul(av, bv));
            }
        }
        acc = next;
    }
    let mut gbar_coeffs = Vec::with_capacity(4);
    for (idx, c) in acc.iter().enumerate() {
        gbar_coeffs.push(rational(c, &format!("gbar coefficient {idx}"))?);
    }
    let gbar = Poly::from_rats(&gbar_coeffs);
    let _ = &mut gbar_c;

    // fbar: same product with the constant/linear roles of the two terms swapped
    let mut acc: Vec<SplitElem> = vec![alg.constant(rat_i(-1))];
    for &((i, j), (k, l)) in &pairs {
        let da = alg.mul(&sc.diff_a(i, j), &sc.diff_a(k, l));
        let db = alg.mul(&sc.diff_b(i, j), &sc.diff_b(k, l));
        let lin = [
            alg.scale(&da, &a_coeff),
            alg.scale(&db, &b_coeff),
        ];
        let mut next = vec![alg.zero(); acc.len() + 1];
        for (ai, av) in acc.iter().enumerate() {
            for (bi, bv) in lin.iter().enumerate() {
                next[ai + bi] = alg.add(&next[ai + bi], &alg.mul(av, bv));
            }
        }
        acc = next;
    }
    let mut fbar_coeffs = Vec::with_capacity(4);
    for (idx, c) in acc.iter().enumerate() {
        fbar_coeffs.push(rational(c, &format!("fbar coefficient {idx}"))?);
    }
    let fbar = Poly::from_rats(&fbar_coeffs);

    // h(x) = gbar(x^2)
    let mut h_coeffs = vec![rat_i(0); 7];
    for (i, c) in gbar.coeffs().iter().enumerate() {
        h_coeffs[2 * i] = c.clone();
    }
    let curve = Genus2Curve::new(Poly::from_rats(&h_coeffs))?;

    let t1 = -(&a_coeff / &b_coeff) * (&b2 / &b1);
    let t2 = &t2n / &b1;
    let s1 = -(&b_coeff / &a_coeff) * (&a2 / &a1);
    let s2 = &s2n / &a1;

    let result = GlueResult {
        curve,
        a_coeff,
        b_coeff,
        a1,
        a2,
        b1,
        b2,
        fbar,
        gbar,
        t1,
        t2,
        s1,
        s2,
        disc_f,
        disc_g,
    };
    cover_identities(&result, f, g)?;
    Ok(result)
}

/// Exact checks tying the construction together:
/// g(t1 u + t2) = (disc_f / B^3)^2 gbar(u),
/// f(s1 u + s2) = (disc_g / A^3)^2 fbar(u),
/// h(x) = gbar(x^2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub gbar_identity: bool,
    pub fbar_identity: bool,
    pub h_is_gbar_of_x2: bool,
}

pub fn cover_identities(r: &GlueResult, f: &Poly<Rat>, g: &Poly<Rat>) -> Result<CoverReport, GlueError> {
    let b3 = &r.b_coeff * &r.b_coeff * &r.b_coeff;
    let a3 = &r.a_coeff * &r.a_coeff * &r.a_coeff;
    let cf = &r.disc_f / &b3;
    let cg = &r.disc_g / &a3;

    let sub_t = Poly::from_rats(&[r.t2.clone(), r.t1.clone()]);
    let lhs_g = g.compose(&sub_t);
    let rhs_g = r.gbar.scale(&(&cf * &cf));
    let gbar_identity = lhs_g == rhs_g;

    let sub_s = Poly::from_rats(&[r.s2.clone(), r.s1.clone()]);
    let lhs_f = f.compose(&sub_s);
    let rhs_f = r.fbar.scale(&(&cg * &cg));
    let fbar_identity = lhs_f == rhs_f;

    let x2 = Poly::from_i64(&[0, 0, 1]);
    let h_is_gbar_of_x2 = r.gbar.compose(&x2) == r.curve.h;

    if !(gbar_identity && fbar_identity && h_is_gbar_of_x2) {
        return Err(GlueError::IdentityFailed(
            "cover identity between the glued curve and its elliptic quotients",
        ));
    }
    Ok(CoverReport {
        gbar_identity,
        fbar_identity,
        h_is_gbar_of_x2,
    })
}

/// Plain-rational gluing for fully split inputs; must agree with the algebra
/// path (cross-checked in tests).
pub fn glue_split_fast(
    f: &Poly<Rat>,
    g: &Poly<Rat>,
    alphas: &[Rat; 3],
    betas: &[Rat; 3],
) -> Result<(Rat, Rat, Poly<Rat>), GlueError> {
    let cyc = [(2usize, 1usize), (1, 0), (0, 2)];
    let mut a1 = rat_i(0);
    let mut a2 = rat_i(0);
    let mut b1 = rat_i(0);
    let mut b2 = rat_i(0);
    for &(i, j) in &cyc {
        let da = &alphas[i] - &alphas[j];
        let db = &betas[i] - &betas[j];
        let k = 3 - i - j;
        a1 = a1 + &da * &da / &db;
        b1 = b1 + &db * &db / &da;
        a2 = a2 + &alphas[k] * &db;
        b2 = b2 + &betas[k] * &da;
    }
    if Zero::is_zero(&a1) || Zero::is_zero(&a2) || Zero::is_zero(&b1) || Zero::is_zero(&b2) {
        return Err(GlueError::IsomorphismMatching("a cyclic sum"));
    }
    let disc_f = f.discriminant().expect("cubic");
    let disc_g = g.discriminant().expect("cubic");
    let a = &disc_g * &a1 / &a2;
    let b = &disc_f * &b1 / &b2;
    let pairs = [((1usize, 0usize), (0usize, 2usize)), ((2, 1), (1, 0)), ((0, 2), (2, 1))];
    let mut h = Poly::from_i64(&[-1]);
    for &((i, j), (k, l)) in &pairs {
        let da = (&alphas[i] - &alphas[j]) * (&alphas[k] - &alphas[l]);
        let db = (&betas[i] - &betas[j]) * (&betas[k] - &betas[l]);
        h = h.mul(&Poly::from_rats(&[&b * &db, rat_i(0), &a * &da]));
    }
    Ok((a, b, h))
}

/// Matchings usable for gluing, ordered deterministically: every verified
/// matching except those whose gluing degenerates (the excluded isomorphism
/// case is reported by `glue` itself).
pub fn usable_matchings(
    f: &Poly<Rat>,
    g: &Poly<Rat>,
    precision_bits: u32,
    height_bound: u64,
) -> Result<Vec<Matching>, GlueError> {
    let mut ms = match_roots(f, g, precision_bits, height_bound)?;
    ms.sort_by_key(crate::algebra::matching::matching_complexity);
    Ok(ms)
}

/// Self-gluing along a rotation of the 2-torsion: valid exactly when the
/// 2-division cubic is irreducible with square discriminant (cyclic cubic
/// splitting field), so the rotations are themselves Galois-equivariant.
pub fn self_glue_rotation(f: &Poly<Rat>) -> Result<GlueResult, GlueError> {
    if f.degree() != Some(3) || !f.is_monic() || !f.is_squarefree() {
        return Err(GlueError::BadInput);
    }
    let info = crate::elliptic::two_torsion(f);
    use crate::algebra::matching::TwoTorsionPattern as P;
    if info.pattern != P::Irreducible {
        return Err(GlueError::RotationNotEquivariant(format!(
            "2-division cubic has pattern {:?}",
            info.pattern
        )));
    }
    let disc = f.discriminant().expect("cubic");
    let cls = squarefree_part(&disc).map_err(|e| GlueError::RotationNotEquivariant(e.to_string()))?;
    if !cls.is_trivial() {
        return Err(GlueError::RotationNotEquivariant(format!(
            "discriminant class {} is not a square",
            cls.label()
        )));
    }
    let ms = match_roots(
        f,
        f,
        crate::algebra::matching::DEFAULT_PRECISION_BITS,
        crate::algebra::matching::DEFAULT_HEIGHT_BOUND,
    )?;
    let rot = ms
        .into_iter()
        .find(|m| !m.is_identity())
        .ok_or(MatchError::NoMatchingFound)?;
    glue(f, f, &rot)
}

/// The swap matching on a curve with exactly one rational 2-torsion point:
/// identity on the rational root, conjugate-exchange on the quadratic factor.
pub fn semisplit_swap_matching(f: &Poly<Rat>) -> Result<Matching, GlueError> {
    let ms = match_roots(
        f,
        f,
        crate::algebra::matching::DEFAULT_PRECISION_BITS,
        crate::algebra::matching::DEFAULT_HEIGHT_BOUND,
    )?;
    ms.into_iter()
        .find(|m| matches!(m.kind, MatchKind::Semisplit { flip: true }))
        .ok_or(GlueError::Matching(MatchError::NoMatchingFound))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;
    use crate::ffcount::{jacobian_order, models::count_curve, CurveModel};

    fn count_product_ok(r: &GlueResult, f: &Poly<Rat>, g: &Poly<Rat>, primes: &[u64]) {
        let ch = CurveModel::Hyper {
            poly: r.curve.h.clone(),
        };
        let ef = CurveModel::Elliptic { cubic: f.clone() };
        let eg = CurveModel::Elliptic { cubic: g.clone() };
        let mut tested = 0;
        for &p in primes {
            if crate::ffcount::good_reduction(&ch, p).is_err()
                || crate::ffcount::good_reduction(&ef, p).is_err()
                || crate::ffcount::good_reduction(&eg, p).is_err()
            {
                continue;
            }
            let n1 = count_curve(&ch, p, 1).unwrap();
            let n2 = count_curve(&ch, p, 2).unwrap();
            let cert = jacobian_order(&[n1, n2], p, 2).unwrap();
            let nf = count_curve(&ef, p, 1).unwrap();
            let ng = count_curve(&eg, p, 1).unwrap();
            assert_eq!(
                cert.jacobian_order,
                num_bigint::BigUint::from(nf) * num_bigint::BigUint::from(ng),
                "product check failed at p = {p}"
            );
            tested += 1;
        }
        assert!(tested >= 2, "not enough good primes among {primes:?}");
    }

    #[test]
    fn split_pair_glues_and_counts() {
        let f = Poly::from_i64(&[0, -1, 0, 1]); // x(x-1)(x+1)
        let g = Poly::from_i64(&[0, -4, 0, 1]); // x(x-2)(x+2)
        let ms = usable_matchings(&f, &g, 128, 1_000_000).unwrap();
        // the two matchings fixing 0 come from the quartic-twist isomorphism
        // and must be rejected; the other four glue
        let mut ok = 0;
        let mut iso = 0;
        for m in &ms {
            match glue(&f, &g, m) {
                Ok(r) => {
                    ok += 1;
                    count_product_ok(&r, &f, &g, &[5, 7, 11, 13, 17, 19]);
                    // h separable sextic
                    assert_eq!(r.curve.h.degree(), Some(6));
                }
                Err(GlueError::IsomorphismMatching(_)) => iso += 1,
                Err(e) => panic!("unexpected error {e}"),
            }
        }
        assert_eq!(ok, 4);
        assert_eq!(iso, 2);
    }

    #[test]
    fn split_fast_path_agrees_with_algebra_path() {
        let f = Poly::from_i64(&[0, -1, 0, 1]);
        let g = Poly::from_i64(&[0, -4, 0, 1]);
        let ms = usable_matchings(&f, &g, 128, 1_000_000).unwrap();
        for m in &ms {
            let MatchKind::Split { perm } = m.kind else {
                panic!("split expected")
            };
            let alphas = [rat_i(-1), rat_i(0), rat_i(1)];
            let roots_g = [rat_i(-2), rat_i(0), rat_i(2)];
            let betas = [
                roots_g[perm[0]].clone(),
                roots_g[perm[1]].clone(),
                roots_g[perm[2]].clone(),
            ];
            // match_roots sorts f-roots ascending; realign to (u, v, w) order
            // used by the algebra path via the match polynomial itself
            let betas_from_poly = [
                m.match_poly.eval(&alphas[0]),
                m.match_poly.eval(&alphas[1]),
                m.match_poly.eval(&alphas[2]),
            ];
            assert_eq!(betas, betas_from_poly);
            match (glue(&f, &g, m), glue_split_fast(&f, &g, &alphas, &betas)) {
                (Ok(r), Ok((a, b, h))) => {
                    assert_eq!(r.a_coeff, a);
                    assert_eq!(r.b_coeff, b);
                    // fast path builds h with the same normalization
                    assert_eq!(r.curve.h, h);
                }
                (Err(GlueError::IsomorphismMatching(_)), Err(GlueError::IsomorphismMatching(_))) => {}
                (x, y) => panic!("paths disagree: {x:?} vs {y:?}"),
            }
        }
    }

    fn kubert_cubic(b: &Rat, c: &Rat) -> Poly<Rat> {
        let one = rat_i(1);
        let lin = Poly::from_rats(&[-b.clone(), &one - c]);
        let sq = lin.mul(&lin).scale(&rat(1, 4));
        Poly::from_rats(&[rat_i(0), rat_i(0), -b.clone(), one]).add(&sq)
    }

    fn e7_cubic(t: &Rat) -> Poly<Rat> {
        let b = t * t * (t - rat_i(1));
        let c = t * (t - rat_i(1));
        kubert_cubic(&b, &c)
    }

    fn e9_cubic(t: &Rat) -> Poly<Rat> {
        let t2 = t * t;
        let t3 = &t2 * t;
        let t4 = &t3 * t;
        let t5 = &t4 * t;
        let b = &t5 - rat_i(2) * &t4 + rat_i(2) * &t3 - &t2;
        let c = &t3 - &t2;
        kubert_cubic(&b, &c)
    }

    #[test]
    fn glued_63_torsion_curve_has_63_points_at_5() {
        let f = e7_cubic(&rat(-16, 3));
        let g = e9_cubic(&rat_i(4));
        let ms = usable_matchings(&f, &g, 256, 1_000_000_000_000).unwrap();
        let r = glue(&f, &g, &ms[0]).unwrap();
        let ch = CurveModel::Hyper {
            poly: r.curve.h.clone(),
        };
        assert!(crate::ffcount::good_reduction(&ch, 5).is_ok());
        let n1 = count_curve(&ch, 5, 1).unwrap();
        let n2 = count_curve(&ch, 5, 2).unwrap();
        let cert = jacobian_order(&[n1, n2], 5, 2).unwrap();
        assert_eq!(cert.jacobian_order, num_bigint::BigUint::from(63u32));
    }

    #[test]
    fn glued_49_torsion_curve_has_49_points_at_5() {
        let f = e7_cubic(&rat_i(7));
        let g = e7_cubic(&rat(-14, 13));
        let ms = usable_matchings(&f, &g, 256, 1_000_000_000_000).unwrap();
        let r = glue(&f, &g, &ms[0]).unwrap();
        let ch = CurveModel::Hyper {
            poly: r.curve.h.clone(),
        };
        let n1 = count_curve(&ch, 5, 1).unwrap();
        let n2 = count_curve(&ch, 5, 2).unwrap();
        let cert = jacobian_order(&[n1, n2], 5, 2).unwrap();
        assert_eq!(cert.jacobian_order, num_bigint::BigUint::from(49u32));
    }

    #[test]
    fn self_glue_square_discriminant_cubic() {
        let f = Poly::from_i64(&[845, -169, 0, 1]);
        let r = self_glue_rotation(&f).unwrap();
        count_product_ok(&r, &f, &f, &[3, 7, 11, 17, 19]);
        // wrong pattern rejected
        let split = Poly::from_i64(&[0, -1, 0, 1]);
        assert!(matches!(
            self_glue_rotation(&split),
            Err(GlueError::RotationNotEquivariant(_))
        ));
    }
}
