//! Gluing a curve with itself: a 2-division cubic that is irreducible with
//! square discriminant has cyclic splitting field, so rotating its roots is
//! Galois-equivariant and the quotient of E x E by the rotation graph is a
//! genus-2 Jacobian. The companion construction then produces a 3-torsion
//! family member with the same 2-division field.

use splitjac::algebra::rat::rat_i;
use splitjac::algebra::Poly;
use splitjac::ffcount::models::{count_curve, CurveModel};
use splitjac::ffcount::zeta::jacobian_order_of;
use splitjac::glue2::self_glue_rotation;
use splitjac::torsion::{add3torsion_partner, companion_cubic};

fn main() {
    let f = Poly::from_i64(&[845, -169, 0, 1]);
    println!("E: y^2 = {f}");
    println!("disc = {} (a fourth power)", splitjac::algebra::rat::format_rat(&f.discriminant().unwrap()));

    let glued = self_glue_rotation(&f).expect("irreducible with square discriminant");
    println!("rotation gluing: y^2 = {}", glued.curve.h);

    let ch = CurveModel::Hyper {
        poly: glued.curve.h.clone(),
    };
    for p in [3u64, 7, 11] {
        if splitjac::ffcount::good_reduction(&ch, p).is_err() {
            continue;
        }
        let jac = jacobian_order_of(&ch, p).unwrap().jacobian_order;
        let ne = count_curve(&CurveModel::Elliptic { cubic: f.clone() }, p, 1).unwrap();
        println!("p = {p}: #Jac = {jac} = {ne}^2 -> {}", jac == (ne * ne).into());
    }

    // the 3-torsion companion shares the 2-division field
    let cert = add3torsion_partner(&rat_i(-169), &rat_i(845)).unwrap();
    println!(
        "3-torsion companion parameter t = {}",
        splitjac::algebra::rat::format_rat(&cert.t)
    );
    let g = companion_cubic(&cert.t);
    println!("companion division cubic: {g}");
}
