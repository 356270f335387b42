//! Jacobian orders from point counts: Newton's identities recover the
//! elementary symmetric functions of the Frobenius eigenvalues from the
//! counts over F_{p^j}, and the functional equation supplies the rest.
//! Exactness of every division and membership in the Weil interval are
//! asserted, so a miscount can never silently produce a certificate.

use super::models::{count_curve, CurveModel};
use super::{CountError};
use crate::algebra::rat::Rat;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Counts N_1..N_g over F_{p^j}, reconstructed symmetric functions, and the
/// resulting group order #J(F_p).
#[derive(Debug, Clone, PartialEq)]
pub struct ZetaCertificate {
    pub genus: u32,
    pub p: u64,
    pub counts: Vec<u64>,
    pub power_sums: Vec<BigInt>,
    pub elementary: Vec<BigInt>,
    pub jacobian_order: BigUint,
}

/// #J(F_p) from counts over F_p, ..., F_{p^genus}.
pub fn jacobian_order(counts: &[u64], p: u64, genus: u32) -> Result<ZetaCertificate, CountError> {
    if counts.len() != genus as usize || !(1..=3).contains(&genus) {
        return Err(CountError::InconsistentCounts(format!(
            "need exactly {genus} counts, got {}",
            counts.len()
        )));
    }
    let pb = BigInt::from(p);
    // s_j = p^j + 1 - N_j is the j-th power sum of the 2g eigenvalues
    let s: Vec<BigInt> = counts
        .iter()
        .enumerate()
        .map(|(i, &n)| pb.pow(i as u32 + 1) + 1 - BigInt::from(n))
        .collect();
    let exact_div = |num: BigInt, den: i64, what: &str| -> Result<BigInt, CountError> {
        let (q, r) = num.div_rem(&BigInt::from(den));
        if r.is_zero() {
            Ok(q)
        } else {
            Err(CountError::InconsistentCounts(format!(
                "{what} is not an integer"
            )))
        }
    };
    let mut e: Vec<BigInt> = vec![s[0].clone()];
    if genus >= 2 {
        e.push(exact_div(&s[0] * &s[0] - &s[1], 2, "e2 = (s1^2 - s2)/2")?);
    }
    if genus >= 3 {
        let num = &s[0] * &s[0] * &s[0] - 3 * (&s[0] * &s[1]) + 2 * &s[2];
        e.push(exact_div(num, 6, "e3 = (s1^3 - 3 s1 s2 + 2 s3)/6")?);
    }
    let order: BigInt = match genus {
        1 => BigInt::from(counts[0]),
        2 => {
            // 1 - e1 + e2 - p e1 + p^2 (functional equation: e3 = p e1, e4 = p^2)
            BigInt::one() - &e[0] + &e[1] - &pb * &e[0] + &pb * &pb
        }
        3 => {
            // 1 - e1 + e2 - e3 + p e2 - p^2 e1 + p^3
            BigInt::one() - &e[0] + &e[1] - &e[2] + &pb * &e[1] - &pb * &pb * &e[0]
                + &pb * &pb * &pb
        }
        _ => unreachable!(),
    };
    if order.is_negative() || order.is_zero() {
        return Err(CountError::InconsistentCounts(format!(
            "jacobian order {order} is not positive"
        )));
    }
    let order = order.magnitude().clone();
    if !weil_interval_contains(&order, p, genus) {
        return Err(CountError::InconsistentCounts(format!(
            "jacobian order {order} lies outside the Weil interval for p={p}, g={genus}"
        )));
    }
    Ok(ZetaCertificate {
        genus,
        p,
        counts: counts.to_vec(),
        power_sums: s,
        elementary: e,
        jacobian_order: order,
    })
}

/// (1 + sqrt(p))^{2g} = a + b sqrt(p) with integers a, b.
fn weil_bound_parts(p: u64, genus: u32) -> (BigInt, BigInt) {
    let mut a = BigInt::one();
    let mut b = BigInt::zero();
    let pb = BigInt::from(p);
    for _ in 0..2 * genus {
        // (a + b sqrt p)(1 + sqrt p) = (a + b p) + (a + b) sqrt p
        let na = &a + &b * &pb;
        let nb = &a + &b;
        a = na;
        b = nb;
    }
    (a, b)
}

/// n <= a + b*sqrt(p), exactly.
fn le_upper(n: &BigInt, a: &BigInt, b: &BigInt, p: u64) -> bool {
    let d = n - a;
    if !d.is_positive() {
        return true;
    }
    &d * &d <= b * b * BigInt::from(p)
}

/// n >= a - b*sqrt(p), exactly.
fn ge_lower(n: &BigInt, a: &BigInt, b: &BigInt, p: u64) -> bool {
    let d = a - n;
    if !d.is_positive() {
        return true;
    }
    &d * &d <= b * b * BigInt::from(p)
}

/// Membership of n in [(sqrt p - 1)^{2g}, (sqrt p + 1)^{2g}], in exact
/// integer arithmetic ((sqrt p - 1)^{2g} = a - b sqrt p for the same a, b).
pub fn weil_interval_contains(n: &BigUint, p: u64, genus: u32) -> bool {
    let (a, b) = weil_bound_parts(p, genus);
    let n = BigInt::from(n.clone());
    ge_lower(&n, &a, &b, p) && le_upper(&n, &a, &b, p)
}

/// True when m = n is the only positive multiple of n inside the Weil
/// interval (the "unique multiple" upgrade).
pub fn weil_unique_multiple(n: &BigUint, p: u64, genus: u32) -> bool {
    if !weil_interval_contains(n, p, genus) {
        return false;
    }
    let (a, b) = weil_bound_parts(p, genus);
    let two_n = BigInt::from(n * 2u32);
    !le_upper(&two_n, &a, &b, p)
}

/// Outcome of comparing #Jac(C / F_p) with a product of elliptic counts.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductCheck {
    pub p: u64,
    pub jacobian_order: BigUint,
    pub factor_counts: Vec<u64>,
    pub twisted: bool,
    pub equal: bool,
}

/// Compare #Jac_C(F_p) against prod #E_i'(F_p), where E_i' is E_i itself or,
/// when a twisting factor T is supplied and T is a nonsquare mod p, the
/// quadratic twist of E_i by T.
pub fn product_check(
    curve: &CurveModel,
    factors: &[crate::elliptic::BFormCurve],
    p: u64,
    twist: Option<&Rat>,
) -> Result<ProductCheck, CountError> {
    let genus = curve.genus();
    if factors.len() != genus as usize {
        return Err(CountError::BadModel(format!(
            "genus {genus} curve needs {genus} elliptic factors, got {}",
            factors.len()
        )));
    }
    let mut counts = Vec::with_capacity(genus as usize);
    for j in 1..=genus {
        counts.push(count_curve(curve, p, j)?);
    }
    let cert = jacobian_order(&counts, p, genus)?;

    let fq = super::Fq::new(p, 1)?;
    let twisted = match twist {
        None => false,
        Some(t) => {
            let tv = fq.from_rat(t)?;
            if fq.is_zero(&tv) {
                return Err(CountError::BadReduction {
                    p,
                    what: "twisting factor".into(),
                });
            }
            fq.chi(&tv) == -1
        }
    };
    let mut factor_counts = Vec::with_capacity(factors.len());
    let mut prod = BigUint::one();
    for e in factors {
        let e = if twisted {
            e.quadratic_twist(twist.unwrap())
                .map_err(|_| CountError::BadModel("twist produced a singular curve".into()))?
        } else {
            e.clone()
        };
        let n = count_curve(&CurveModel::Elliptic { cubic: e.rhs() }, p, 1)?;
        factor_counts.push(n);
        prod *= BigUint::from(n);
    }
    Ok(ProductCheck {
        p,
        equal: cert.jacobian_order == prod,
        jacobian_order: cert.jacobian_order,
        factor_counts,
        twisted,
    })
}

/// Divisibility certificate: N | #Jac(F_p) at each good odd p given, plus the
/// unique-multiple flag wherever it holds. Rational torsion injects into
/// J(F_p) at odd primes of good reduction, so a failed division refutes the
/// torsion claim outright.
#[derive(Debug, Clone, PartialEq)]
pub struct DivisibilityCertificate {
    pub claimed: u64,
    pub per_prime: Vec<(u64, BigUint, bool)>,
    pub unique_at: Option<u64>,
    pub all_divisible: bool,
}

pub fn torsion_divisibility(
    curve: &CurveModel,
    claimed: u64,
    primes: &[u64],
) -> Result<DivisibilityCertificate, CountError> {
    if primes.len() < 2 {
        return Err(CountError::BadModel(
            "need at least two good odd primes for a divisibility certificate".into(),
        ));
    }
    let genus = curve.genus();
    let mut per_prime = Vec::new();
    let mut unique_at = None;
    let mut all = true;
    for &p in primes {
        let mut counts = Vec::new();
        for j in 1..=genus {
            counts.push(count_curve(curve, p, j)?);
        }
        let cert = jacobian_order(&counts, p, genus)?;
        let divisible = (&cert.jacobian_order % BigUint::from(claimed)).is_zero();
        all &= divisible;
        if divisible
            && unique_at.is_none()
            && cert.jacobian_order == BigUint::from(claimed)
            && weil_unique_multiple(&cert.jacobian_order, p, genus)
        {
            unique_at = Some(p);
        }
        per_prime.push((p, cert.jacobian_order, divisible));
    }
    Ok(DivisibilityCertificate {
        claimed,
        per_prime,
        unique_at,
        all_divisible: all,
    })
}

/// Convenience: #J over F_p for a model, counting over the k <= genus
/// extensions it needs.
pub fn jacobian_order_of(curve: &CurveModel, p: u64) -> Result<ZetaCertificate, CountError> {
    let genus = curve.genus();
    let mut counts = Vec::new();
    for j in 1..=genus {
        counts.push(count_curve(curve, p, j)?);
    }
    jacobian_order(&counts, p, genus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly::Poly;

    #[test]
    fn genus_one_order_is_the_count() {
        let cert = jacobian_order(&[9], 5, 1).unwrap();
        assert_eq!(cert.jacobian_order, BigUint::from(9u32));
    }

    #[test]
    fn the_63_curve_over_f5() {
        let c = CurveModel::Hyper {
            poly: Poly::from_i64(&[-146398496, 0, 79136353, 0, -197570, 0, 897]),
        };
        let n1 = count_curve(&c, 5, 1).unwrap();
        let n2 = count_curve(&c, 5, 2).unwrap();
        let cert = jacobian_order(&[n1, n2], 5, 2).unwrap();
        assert_eq!(cert.jacobian_order, BigUint::from(63u32));
        assert!(weil_unique_multiple(&cert.jacobian_order, 5, 2));
    }

    #[test]
    fn the_49_curve_over_f5() {
        let c = CurveModel::Hyper {
            poly: Poly::from_i64(&[869675859, 0, 3232987, 0, 3025, 0, 1]),
        };
        let cert = jacobian_order_of(&c, 5).unwrap();
        assert_eq!(cert.jacobian_order, BigUint::from(49u32));
        // the uniqueness step runs on the elliptic factors: 7 is the only
        // multiple of 7 in the genus-1 Hasse interval at p = 5
        assert!(weil_unique_multiple(&BigUint::from(7u32), 5, 1));
        assert!(!weil_unique_multiple(&cert.jacobian_order, 5, 2));
    }

    #[test]
    fn weil_interval_exact_comparisons() {
        // (1+sqrt5)^4 ~ 109.66: 63 in, 126 out; (sqrt5-1)^4 ~ 2.33: 2 out
        assert!(weil_interval_contains(&BigUint::from(63u32), 5, 2));
        assert!(!weil_interval_contains(&BigUint::from(126u32), 5, 2));
        assert!(!weil_interval_contains(&BigUint::from(2u32), 5, 2));
        assert!(weil_interval_contains(&BigUint::from(3u32), 5, 2));
    }

    #[test]
    fn inconsistent_counts_rejected() {
        // impossible pair: N1 far outside Hasse for p=5
        assert!(jacobian_order(&[20, 20], 5, 2).is_err());
    }
}
