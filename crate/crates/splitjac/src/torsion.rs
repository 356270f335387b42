//! Descent bookkeeping for curves with full rational 2-torsion: the
//! coordinate-difference map into (Q*/Q*^2)^3, the halving criterion that
//! predicts extra rational 2-power torsion on a glued Jacobian, the fields
//! where halves of 2-torsion points live, quotient group structures by Smith
//! normal form, and the companion construction that pairs any curve having
//! irreducible 2-division cubic with a 3-torsion family member sharing its
//! 2-torsion field.

use crate::algebra::poly::Poly;
use crate::algebra::rat::{rat_i, squarefree_part, Rat, SquarefreeClass};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Clone)]
pub enum TorsionError {
    #[error("operation requires all three 2-torsion points rational")]
    NotSplit,
    #[error("the point at infinity has no descent image")]
    InfinitePoint,
    #[error("x-coordinate {0} is a 2-torsion abscissa; pass the point by index instead")]
    IsTwoTorsion(String),
    #[error("squarefree classes could not be computed: {0}")]
    Class(String),
    #[error("identification data is not the graph of an isomorphism of 2-torsion groups")]
    NotAGraph,
    #[error("group must have full 2-torsion rank 2 for this identification")]
    BadRank,
    #[error("companion construction requires A != 0 and B != 0")]
    ZeroCoefficient,
    #[error("companion construction requires an irreducible squarefree cubic")]
    BadCubic,
}

/// The three rational 2-torsion abscissae of y^2 = (x - x1)(x - x2)(x - x3),
/// in a fixed labeling order (T1, T2, T3).
#[derive(Debug, Clone, PartialEq)]
pub struct SplitTwoTorsion {
    pub xs: [Rat; 3],
}

impl SplitTwoTorsion {
    pub fn new(xs: [Rat; 3]) -> Result<Self, TorsionError> {
        if xs[0] == xs[1] || xs[0] == xs[2] || xs[1] == xs[2] {
            return Err(TorsionError::NotSplit);
        }
        Ok(SplitTwoTorsion { xs })
    }
}

/// Argument to the descent map: either a rational point given by its
/// x-coordinate, or one of the marked 2-torsion points by index.
#[derive(Debug, Clone, PartialEq)]
pub enum DescentPoint {
    General { x: Rat },
    TwoTorsion { index: usize },
}

/// Value in (Q*/Q*^2)^3, one class per 2-torsion point; the product of the
/// three classes is trivial.
#[derive(Debug, Clone, PartialEq)]
pub struct IotaValue {
    pub classes: [SquarefreeClass; 3],
}

impl IotaValue {
    pub fn norm_is_trivial(&self) -> bool {
        self.classes[0]
            .class_mul(&self.classes[1])
            .class_mul(&self.classes[2])
            .is_trivial()
    }
}

/// The coordinate-difference descent map. For a non-2-torsion rational point
/// the i-th component is the class of x_P - x_{T_i}; for P = T_j the two
/// defined components are the differences and the j-th is forced by the norm
/// condition.
pub fn iota(tors: &SplitTwoTorsion, p: &DescentPoint) -> Result<IotaValue, TorsionError> {
    let class = |v: &Rat| {
        squarefree_part(v).map_err(|e| TorsionError::Class(e.to_string()))
    };
    match p {
        DescentPoint::General { x } => {
            if tors.xs.iter().any(|t| t == x) {
                return Err(TorsionError::IsTwoTorsion(crate::algebra::rat::format_rat(x)));
            }
            let c0 = class(&(x - &tors.xs[0]))?;
            let c1 = class(&(x - &tors.xs[1]))?;
            let c2 = class(&(x - &tors.xs[2]))?;
            Ok(IotaValue {
                classes: [c0, c1, c2],
            })
        }
        DescentPoint::TwoTorsion { index } => {
            let j = *index;
            if j > 2 {
                return Err(TorsionError::NotSplit);
            }
            let others: Vec<usize> = (0..3).filter(|&i| i != j).collect();
            let ca = class(&(&tors.xs[j] - &tors.xs[others[0]]))?;
            let cb = class(&(&tors.xs[j] - &tors.xs[others[1]]))?;
            let forced = ca.class_mul(&cb);
            let mut classes = [forced.clone(), forced.clone(), forced];
            classes[others[0]] = ca;
            classes[others[1]] = cb;
            Ok(IotaValue { classes })
        }
    }
}

/// Prop-style halving criterion: a point over the quotient abelian surface
/// halving (P, Q) exists exactly when the descent values correspond under the
/// matching-induced reindexing. `perm[i]` is the index of the 2-torsion point
/// of the second curve matched with T_i of the first.
pub fn halving_condition(
    e_tors: &SplitTwoTorsion,
    f_tors: &SplitTwoTorsion,
    perm: [usize; 3],
    p: &DescentPoint,
    q: &DescentPoint,
) -> Result<bool, TorsionError> {
    {
        let mut seen = [false; 3];
        for &i in &perm {
            if i > 2 || seen[i] {
                return Err(TorsionError::NotAGraph);
            }
            seen[i] = true;
        }
    }
    let ip = iota(e_tors, p)?;
    let iq = iota(f_tors, q)?;
    Ok((0..3).all(|i| ip.classes[i].same_class(&iq.classes[perm[i]])))
}

/// The biquadratic field where a half of the 2-torsion point S lives:
/// classes of x_S - x_T and x_S - x_U under the fixed labeling (S = index).
pub fn halving_field(
    tors: &SplitTwoTorsion,
    s_index: usize,
) -> Result<(SquarefreeClass, SquarefreeClass), TorsionError> {
    if s_index > 2 {
        return Err(TorsionError::NotSplit);
    }
    let others: Vec<usize> = (0..3).filter(|&i| i != s_index).collect();
    let c1 = squarefree_part(&(&tors.xs[s_index] - &tors.xs[others[0]]))
        .map_err(|e| TorsionError::Class(e.to_string()))?;
    let c2 = squarefree_part(&(&tors.xs[s_index] - &tors.xs[others[1]]))
        .map_err(|e| TorsionError::Class(e.to_string()))?;
    Ok((c1, c2))
}

/// Finite abelian group in invariant-factor form (each factor divides the
/// next; 1s dropped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbGroup {
    pub factors: Vec<u64>,
}

impl AbGroup {
    pub fn new(factors: &[u64]) -> AbGroup {
        // normalize arbitrary cyclic decompositions through the SNF of the
        // diagonal relation matrix
        let n = factors.len();
        let mut rel = vec![vec![BigInt::zero(); n]; n];
        for (i, &f) in factors.iter().enumerate() {
            rel[i][i] = BigInt::from(f);
        }
        let inv = smith_invariants(rel, n);
        AbGroup { factors: inv }
    }

    pub fn order(&self) -> BigInt {
        self.factors
            .iter()
            .fold(BigInt::one(), |a, &f| a * BigInt::from(f))
    }

    pub fn label(&self) -> String {
        if self.factors.is_empty() {
            return "trivial".into();
        }
        self.factors
            .iter()
            .map(|f| format!("Z/{f}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }

    /// Number of even invariant factors = 2-torsion rank.
    fn two_rank(&self) -> usize {
        self.factors.iter().filter(|&&f| f % 2 == 0).count()
    }
}

/// Invariant factors (> 1, ascending divisibility) of Z^n / rowspan(rel).
pub fn smith_invariants(mut m: Vec<Vec<BigInt>>, cols: usize) -> Vec<u64> {
    let rows = m.len();
    let mut r = 0usize;
    let mut c = 0usize;
    let mut diag: Vec<BigInt> = Vec::new();
    while r < rows && c < cols {
        // find a nonzero pivot
        let mut piv = None;
        'search: for i in r..rows {
            for j in c..cols {
                if !m[i][j].is_zero() {
                    piv = Some((i, j));
                    break 'search;
                }
            }
        }
        let (pi, pj) = match piv {
            None => break,
            Some(p) => p,
        };
        m.swap(r, pi);
        for row in m.iter_mut() {
            row.swap(c, pj);
        }
        // reduce until the pivot divides its row and column
        loop {
            // clear column by euclidean steps
            let mut changed = false;
            for i in (r + 1)..rows {
                if m[i][c].is_zero() {
                    continue;
                }
                let q = m[i][c].div_floor(&m[r][c]);
                if !q.is_zero() {
                    for j in c..cols {
                        let sub = &q * &m[r][j];
                        m[i][j] -= sub;
                    }
                }
                if !m[i][c].is_zero() {
                    m.swap(r, i);
                    changed = true;
                }
            }
            for j in (c + 1)..cols {
                if m[r][j].is_zero() {
                    continue;
                }
                let q = m[r][j].div_floor(&m[r][c]);
                if !q.is_zero() {
                    for row in m.iter_mut().skip(r) {
                        let sub = &q * &row[c];
                        row[j] -= sub;
                    }
                }
                if !m[r][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(c, j);
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        diag.push(m[r][c].abs());
        r += 1;
        c += 1;
    }
    // enforce the divisibility chain
    let mut i = 0;
    while i < diag.len() {
        let mut j = i + 1;
        while j < diag.len() {
            if !(&diag[j] % &diag[i]).is_zero() {
                let g = diag[i].gcd(&diag[j]);
                let l = (&diag[i] * &diag[j]) / &g;
                diag[i] = g;
                diag[j] = l;
                i = 0;
                j = 0;
                continue;
            }
            j += 1;
        }
        i += 1;
    }
    diag.sort();
    let mut out: Vec<u64> = Vec::new();
    let free = cols.saturating_sub(diag.len());
    assert_eq!(free, 0, "quotient of a finite group cannot be infinite");
    for d in diag {
        if d > BigInt::one() {
            out.push(u64::try_from(&d).expect("small invariant factor"));
        }
    }
    out
}

/// Structure of (GE x GF) / graph(psi), where psi identifies the 2-torsion of
/// GE with the 2-torsion of GF. Both groups must have 2-torsion (Z/2)^2; the
/// bases are (u1, u2) with u1 the involution in the order-2 invariant factor
/// and u2 the "special" point, half the maximal even order times the larger
/// generator. `psi` is an invertible 2x2 matrix over F_2 taking the GE basis
/// to the GF basis (psi[i] = image of u_{i+1} in coordinates of (v1, v2)).
pub fn torsion_image_structure(
    ge: &AbGroup,
    gf: &AbGroup,
    psi: [[u8; 2]; 2],
) -> Result<AbGroup, TorsionError> {
    if ge.two_rank() != 2 || gf.two_rank() != 2 {
        return Err(TorsionError::BadRank);
    }
    // invertibility over F_2
    let det = (psi[0][0] & 1) * (psi[1][1] & 1) ^ (psi[0][1] & 1) * (psi[1][0] & 1);
    if det != 1 {
        return Err(TorsionError::NotAGraph);
    }
    let ge_f = &ge.factors;
    let gf_f = &gf.factors;
    let n1 = ge_f.len();
    let n2 = gf_f.len();
    let n = n1 + n2;
    // 2-torsion basis of a group (f1 | f2, both even): u1 = (f1/2, 0),
    // u2 = (0, f2/2) in generator coordinates. For longer factor lists the
    // two even factors are the last two.
    let even_idx = |fs: &Vec<u64>| -> Vec<usize> {
        fs.iter().enumerate().filter(|(_, f)| *f % 2 == 0).map(|(i, _)| i).collect()
    };
    let e1 = even_idx(ge_f);
    let e2 = even_idx(gf_f);
    let basis = |fs: &Vec<u64>, idx: &Vec<usize>, offset: usize, n: usize| -> [Vec<BigInt>; 2] {
        let mut u1 = vec![BigInt::zero(); n];
        let mut u2 = vec![BigInt::zero(); n];
        u1[offset + idx[0]] = BigInt::from(fs[idx[0]] / 2);
        u2[offset + idx[1]] = BigInt::from(fs[idx[1]] / 2);
        [u1, u2]
    };
    let [ue1, ue2] = basis(ge_f, &e1, 0, n);
    let [vf1, vf2] = basis(gf_f, &e2, n1, n);

    // relation rows: generator orders, plus graph generators
    // (u_i, psi(u_i)) for i = 1, 2
    let mut rel: Vec<Vec<BigInt>> = Vec::new();
    for (i, &f) in ge_f.iter().enumerate() {
        let mut row = vec![BigInt::zero(); n];
        row[i] = BigInt::from(f);
        rel.push(row);
    }
    for (i, &f) in gf_f.iter().enumerate() {
        let mut row = vec![BigInt::zero(); n];
        row[n1 + i] = BigInt::from(f);
        rel.push(row);
    }
    for i in 0..2 {
        let u = if i == 0 { &ue1 } else { &ue2 };
        let mut row = u.clone();
        for (j, coord) in [&vf1, &vf2].iter().enumerate() {
            if psi[i][j] & 1 == 1 {
                for k in 0..n {
                    row[k] += &coord[k];
                }
            }
        }
        rel.push(row);
    }
    let inv = smith_invariants(rel, n);
    Ok(AbGroup { factors: inv })
}

/// Certificate for the 3-torsion companion: specializing the 3-torsion family
/// at t = -B^2/A^3 yields a curve whose 2-division field matches that of
/// y^2 = x^3 + Ax + B, witnessed by the exact algebraic identity that
/// s = -(B/(A r))^2 is a root of x^3 + (x - t)^2 whenever r is a root of the
/// original cubic.
#[derive(Debug, Clone, PartialEq)]
pub struct Add3Certificate {
    pub t: Rat,
    /// s as a polynomial in the root r, reduced mod x^3 + Ax + B.
    pub s_poly: Poly<Rat>,
}

pub fn add3torsion_partner(a: &Rat, b: &Rat) -> Result<Add3Certificate, TorsionError> {
    if Zero::is_zero(a) || Zero::is_zero(b) {
        return Err(TorsionError::ZeroCoefficient);
    }
    let f = Poly::from_rats(&[b.clone(), a.clone(), rat_i(0), rat_i(1)]);
    if !f.is_squarefree() || !crate::elliptic::two_torsion(&f).xs.is_empty() {
        return Err(TorsionError::BadCubic);
    }
    let t = -(b * b) / (a * a * a);
    // s = -(B / (A r))^2 = -(B^2/A^2) r^{-2} mod f
    let rinv2 = Poly::from_i64(&[0, 0, 1])
        .inv_mod(&f)
        .map_err(|_| TorsionError::BadCubic)?;
    let s_poly = rinv2.scale(&(-(b * b) / (a * a)));
    // the certificate: s^3 + (s + t)^2 = 0 mod f (the companion cubic is
    // x^3 + (x + t)^2)
    let s2 = s_poly.mul(&s_poly).rem(&f).expect("nonzero modulus");
    let s3 = s2.mul(&s_poly).rem(&f).expect("nonzero modulus");
    let lin = s_poly.add(&Poly::from_rats(&[t.clone()]));
    let check = s3.add(&lin.mul(&lin)).rem(&f).expect("nonzero modulus");
    if !check.is_zero() {
        return Err(TorsionError::BadCubic);
    }
    Ok(Add3Certificate { t, s_poly })
}

/// The companion's 2-division cubic x^3 + (x + t)^2 (monic, for matching).
pub fn companion_cubic(t: &Rat) -> Poly<Rat> {
    Poly::from_rats(&[t * t, rat_i(2) * t, rat_i(1), rat_i(1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat::rat;
    use crate::families::{instantiate, FamilyLabel};
    use crate::rng::SplitMix64;

    fn tors_of_family(label: FamilyLabel, t: &Rat) -> SplitTwoTorsion {
        let inst = instantiate(label, t).unwrap();
        let xs = inst.two_torsion_x.clone();
        SplitTwoTorsion::new([xs[0].clone(), xs[1].clone(), xs[2].clone()]).unwrap()
    }

    #[test]
    fn iota_on_the_2x8_family_matches_the_tabulated_classes() {
        // at t = 3: iota(T2) = (-1, -(8t^2-1)(8t^2+8t+1), (8t^2-1)(8t^2+8t+1))
        let t = rat_i(3);
        let tors = tors_of_family(FamilyLabel::KubertDouble(8), &t);
        let v = iota(&tors, &DescentPoint::TwoTorsion { index: 1 }).unwrap();
        assert!(v.norm_is_trivial());
        let c = rat_i(8 * 9 - 1) * rat_i(8 * 9 + 8 * 3 + 1); // 71 * 97
        let exp0 = squarefree_part(&rat_i(-1)).unwrap();
        let exp1 = squarefree_part(&-c.clone()).unwrap();
        let exp2 = squarefree_part(&c).unwrap();
        assert!(v.classes[0].same_class(&exp0));
        assert!(v.classes[1].same_class(&exp1));
        assert!(v.classes[2].same_class(&exp2));
    }

    #[test]
    fn iota_on_the_2x6_family_matches_the_tabulated_classes() {
        // at t = 0: iota(T1) = (2(t-3)(t+3)(t-5), (t+3)(t-5), 2(t-3))
        let t = rat_i(0);
        let tors = tors_of_family(FamilyLabel::KubertDouble(6), &t);
        let v = iota(&tors, &DescentPoint::TwoTorsion { index: 0 }).unwrap();
        assert!(v.norm_is_trivial());
        let e0 = squarefree_part(&rat_i(2 * -3 * 3 * -5)).unwrap();
        let e1 = squarefree_part(&rat_i(3 * -5)).unwrap();
        let e2 = squarefree_part(&rat_i(2 * -3)).unwrap();
        assert!(v.classes[0].same_class(&e0), "{:?}", v.classes[0].label());
        assert!(v.classes[1].same_class(&e1));
        assert!(v.classes[2].same_class(&e2));
    }

    #[test]
    fn iota_simple_split_curve() {
        let tors = SplitTwoTorsion::new([rat_i(0), rat_i(1), rat_i(-1)]).unwrap();
        let v = iota(&tors, &DescentPoint::TwoTorsion { index: 0 }).unwrap();
        // components at T2, T3: classes of -1 and 1; forced at T1: -1
        assert_eq!(v.classes[1].sign, -1);
        assert!(v.classes[2].is_trivial());
        assert_eq!(v.classes[0].sign, -1);
        assert!(v.norm_is_trivial());
    }

    #[test]
    fn halving_diagonal_is_always_true_for_2x8() {
        let mut rng = SplitMix64::new(0x2b8);
        for _ in 0..50 {
            let t = crate::families::random_parameter(FamilyLabel::KubertDouble(8), &mut rng);
            let tors = tors_of_family(FamilyLabel::KubertDouble(8), &t);
            let ok = halving_condition(
                &tors,
                &tors,
                [0, 1, 2],
                &DescentPoint::TwoTorsion { index: 1 },
                &DescentPoint::TwoTorsion { index: 1 },
            )
            .unwrap();
            assert!(ok, "diagonal halving failed at t = {t}");
        }
    }

    #[test]
    fn halving_for_the_rotated_2x6_2x8_matching() {
        // t = 3 - (2/9)^2 / 2 = 241/81, u = 1/3, matching T1->T2', T2->T3', T3->T1'
        let t = rat(241, 81);
        let u = rat(1, 3);
        let e = tors_of_family(FamilyLabel::KubertDouble(6), &t);
        let f = tors_of_family(FamilyLabel::KubertDouble(8), &u);
        let ok = halving_condition(
            &e,
            &f,
            [1, 2, 0],
            &DescentPoint::TwoTorsion { index: 0 },
            &DescentPoint::TwoTorsion { index: 1 },
        )
        .unwrap();
        assert!(ok);
        // the identity matching does not halve this pair
        let not = halving_condition(
            &e,
            &f,
            [0, 1, 2],
            &DescentPoint::TwoTorsion { index: 0 },
            &DescentPoint::TwoTorsion { index: 1 },
        )
        .unwrap();
        assert!(!not);
    }

    #[test]
    fn halving_fields_for_the_a_variants() {
        // (2,4) at t = -s^2: x_S - x_U is a square, x_S - x_T is -1 mod squares
        for s in [rat_i(2), rat(3, 2), rat_i(5)] {
            let t = -(&s * &s);
            let inst = instantiate(FamilyLabel::B2x(4), &t).unwrap();
            // table order: (0, T1 = -(t-1)^2, T2 = -(t+1)^2); at t = -s^2 the
            // point with a gaussian half is S = T2, and U = T1
            let tors = SplitTwoTorsion::new([
                inst.two_torsion_x[2].clone(),
                inst.two_torsion_x[0].clone(),
                inst.two_torsion_x[1].clone(),
            ])
            .unwrap();
            let (c_t, c_u) = halving_field(&tors, 0).unwrap();
            assert_eq!(c_t.sign, -1);
            assert_eq!(c_t.squarefree, num_bigint::BigUint::one());
            assert!(c_u.is_trivial());
        }
        // F_{2,8}: x_S = -16u^4 vs x_T = 0 differs from -1 by a square
        let u = rat_i(3);
        let inst = instantiate(FamilyLabel::B2x(8), &u).unwrap();
        let tors = SplitTwoTorsion::new([
            inst.two_torsion_x[1].clone(),
            inst.two_torsion_x[0].clone(),
            inst.two_torsion_x[2].clone(),
        ])
        .unwrap();
        let (c1, _c2) = halving_field(&tors, 0).unwrap();
        assert_eq!(c1.sign, -1);
        assert_eq!(c1.squarefree, num_bigint::BigUint::one());
        // plain example: y^2 = x(x-1)(x-4), S = (0,0): classes of (-1, -4)
        let t3 = SplitTwoTorsion::new([rat_i(0), rat_i(1), rat_i(4)]).unwrap();
        let (a, b) = halving_field(&t3, 0).unwrap();
        assert_eq!(a.sign, -1);
        assert!(a.squarefree.is_one());
        assert_eq!(b.sign, -1);
        assert!(b.squarefree.is_one());
    }

    #[test]
    fn image_structure_dichotomy() {
        let g = AbGroup::new(&[2, 8]);
        // special points identified: psi = identity
        let a = torsion_image_structure(&g, &g, [[1, 0], [0, 1]]).unwrap();
        assert_eq!(a.factors, vec![2, 4, 8]);
        // special points not identified: swap
        let b = torsion_image_structure(&g, &g, [[0, 1], [1, 0]]).unwrap();
        assert_eq!(b.factors, vec![8, 8]);
        // order is always |GE| |GF| / 4
        assert_eq!(a.order(), BigInt::from(64));
        assert_eq!(b.order(), BigInt::from(64));
    }

    #[test]
    fn image_structure_mixed_cases() {
        let g26 = AbGroup::new(&[2, 6]);
        let g28 = AbGroup::new(&[2, 8]);
        let c = torsion_image_structure(&g26, &g28, [[1, 0], [0, 1]]).unwrap();
        assert_eq!(c.factors, vec![2, 24]);
        let d = torsion_image_structure(&g26, &g26, [[1, 0], [0, 1]]).unwrap();
        assert_eq!(d.factors, vec![6, 6]);
        // invalid identification rejected
        assert!(torsion_image_structure(&g26, &g28, [[1, 0], [1, 0]]).is_err());
        assert!(torsion_image_structure(&AbGroup::new(&[3]), &g28, [[1, 0], [0, 1]]).is_err());
    }

    #[test]
    fn image_structure_order_invariant_sampled() {
        let mut rng = SplitMix64::new(0xab6);
        let psis = [
            [[1u8, 0u8], [0u8, 1u8]],
            [[0, 1], [1, 0]],
            [[1, 1], [0, 1]],
            [[1, 0], [1, 1]],
            [[1, 1], [1, 0]],
            [[0, 1], [1, 1]],
        ];
        for _ in 0..40 {
            let f1 = 2 * rng.i64_in(1, 6) as u64;
            let f2 = f1 * rng.i64_in(1, 3) as u64;
            let g1 = 2 * rng.i64_in(1, 6) as u64;
            let g2 = g1 * rng.i64_in(1, 3) as u64;
            let ge = AbGroup::new(&[f1, f2]);
            let gf = AbGroup::new(&[g1, g2]);
            let psi = psis[rng.usize_below(6)];
            let q = torsion_image_structure(&ge, &gf, psi).unwrap();
            assert_eq!(q.order() * 4, ge.order() * gf.order());
        }
    }

    #[test]
    fn companion_certificate_for_the_square_disc_curve() {
        let cert = add3torsion_partner(&rat_i(-169), &rat_i(845)).unwrap();
        assert_eq!(cert.t, rat(714025, 4826809)); // reduces to 25/169
        assert_eq!(cert.t, rat(25, 169));
        // certificate is checked inside the constructor; the companion cubic
        // shares the discriminant class with the original
        let f = Poly::from_rats(&[rat_i(845), rat_i(-169), rat_i(0), rat_i(1)]);
        let g = companion_cubic(&cert.t);
        let cf = squarefree_part(&f.discriminant().unwrap()).unwrap();
        let cg = squarefree_part(&g.discriminant().unwrap()).unwrap();
        assert!(cf.same_class(&cg));
    }

    #[test]
    fn companion_simple_and_error_cases() {
        let cert = add3torsion_partner(&rat_i(1), &rat_i(1)).unwrap();
        assert_eq!(cert.t, rat_i(-1));
        assert!(add3torsion_partner(&rat_i(0), &rat_i(1)).is_err());
        // reducible cubic rejected: x^3 - x has rational roots (A=-1, B=0 is
        // already rejected for B=0; use A=-7, B=6 -> roots 1, 2, -3)
        assert!(matches!(
            add3torsion_partner(&rat_i(-7), &rat_i(6)),
            Err(TorsionError::BadCubic)
        ));
    }
}
