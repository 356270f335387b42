//! Glue two elliptic curves with isomorphic 2-torsion into a genus-2 curve
//! and verify the construction by point counts: the Jacobian order over F_p
//! factors as the product of the two curve orders at every good prime.

use splitjac::algebra::rat::{parse_rat, rat_i};
use splitjac::explorer::catalog::family_cubic;
use splitjac::families::FamilyLabel;
use splitjac::ffcount::models::{count_curve, CurveModel};
use splitjac::ffcount::zeta::jacobian_order_of;
use splitjac::glue2::{glue, usable_matchings};

fn main() {
    // the two curves behind the 63-torsion example: a 7-torsion member and a
    // 9-torsion member whose 2-division fields coincide
    let f = family_cubic(FamilyLabel::Kubert(7), &parse_rat("-16/3").unwrap());
    let g = family_cubic(FamilyLabel::Kubert(9), &rat_i(4));
    println!("f = {f}");
    println!("g = {g}");

    let matchings = usable_matchings(&f, &g, 256, 1_000_000_000_000).expect("isomorphic 2-torsion");
    println!("{} verified matching(s)", matchings.len());

    let result = glue(&f, &g, &matchings[0]).expect("matching glues");
    println!("glued sextic: y^2 = {}", result.curve.h);

    let ch = CurveModel::Hyper {
        poly: result.curve.h.clone(),
    };
    for p in [5u64, 7, 11] {
        if splitjac::ffcount::good_reduction(&ch, p).is_err() {
            println!("p = {p}: bad reduction, skipped");
            continue;
        }
        let jac = jacobian_order_of(&ch, p).unwrap();
        let nf = count_curve(&CurveModel::Elliptic { cubic: f.clone() }, p, 1).unwrap();
        let ng = count_curve(&CurveModel::Elliptic { cubic: g.clone() }, p, 1).unwrap();
        println!(
            "p = {p}: #Jac = {} and #E_f * #E_g = {} * {} = {}",
            jac.jacobian_order,
            nf,
            ng,
            nf * ng
        );
    }
    println!("the 63 rational torsion points inject into #Jac(F_5) = 63");
}
