//! Point counting and Jacobian orders: count a genus-2 curve over F_p and
//! F_{p^2}, reconstruct the Frobenius data, and read off #Jac(F_p) together
//! with its position in the Weil interval.

use splitjac::algebra::Poly;
use splitjac::ffcount::models::{count_curve, CurveModel};
use splitjac::ffcount::zeta::{jacobian_order, weil_unique_multiple};

fn main() {
    // the genus-2 curve whose Jacobian has a rational point of order 63
    let c = CurveModel::Hyper {
        poly: Poly::from_i64(&[-146398496, 0, 79136353, 0, -197570, 0, 897]),
    };
    let n1 = count_curve(&c, 5, 1).unwrap();
    let n2 = count_curve(&c, 5, 2).unwrap();
    println!("#C(F_5) = {n1}, #C(F_25) = {n2}");

    let cert = jacobian_order(&[n1, n2], 5, 2).unwrap();
    println!("power sums of Frobenius: {:?}", cert.power_sums);
    println!("elementary symmetric functions: {:?}", cert.elementary);
    println!("#Jac(F_5) = {}", cert.jacobian_order);
    println!(
        "63 is the unique multiple of 63 in the Weil interval: {}",
        weil_unique_multiple(&cert.jacobian_order, 5, 2)
    );

    // a genus-3 count through the conic-double-cover pipeline
    let composite = CurveModel::ConicDouble {
        a: splitjac::algebra::rat::rat_i(-18),
        b: splitjac::algebra::rat::rat_i(-18),
        c: splitjac::algebra::rat::rat_i(-18),
        d: splitjac::algebra::rat::rat(1, 3),
        e: splitjac::algebra::rat::rat(1, 3),
        f: splitjac::algebra::rat::rat(1, 3),
    };
    for p in [5u64, 7, 11] {
        if splitjac::ffcount::good_reduction(&composite, p).is_err() {
            continue;
        }
        let counts: Vec<u64> = (1..=3)
            .map(|k| count_curve(&composite, p, k).unwrap())
            .collect();
        let cert = jacobian_order(&counts, p, 3).unwrap();
        println!(
            "hyperelliptic composite at p = {p}: counts {:?}, #Jac = {}",
            counts, cert.jacobian_order
        );
    }
}
