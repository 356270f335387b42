//! Glue three B-form curves with a nonzero twisting factor into a plane
//! quartic. A square twisting factor keeps the Jacobian identification over
//! Q; this example rebuilds the quartic whose Jacobian has 864 rational
//! torsion points and re-derives its order over F_7.

use splitjac::algebra::rat::{is_square, parse_rat, rat_i};
use splitjac::families::{instantiate, FamilyLabel};
use splitjac::ffcount::zeta::jacobian_order_of;
use splitjac::glue3::{glue_quartic, twisting_factor, GlueTriple};

fn main() {
    let t = parse_rat("19/6").unwrap();
    let e = instantiate(FamilyLabel::B2x(6), &t)
        .unwrap()
        .bform()
        .unwrap()
        .clone();
    println!(
        "member of the (2,6) family at t = 19/6: y^2 = x(x^2 + {} x + {})",
        splitjac::algebra::rat::format_rat(&e.a),
        splitjac::algebra::rat::format_rat(&e.b)
    );

    // all three factors equal, square roots chosen as d = 16t
    let d = rat_i(16) * &t;
    let tr = GlueTriple::from_square_roots([e.clone(), e.clone(), e], [d.clone(), d.clone(), d])
        .unwrap();
    let tw = twisting_factor(&tr);
    println!(
        "twisting factor {} (square: {})",
        splitjac::algebra::rat::format_rat(&tw),
        is_square(&tw).is_some()
    );

    let quartic = glue_quartic(&tr).expect("nonzero twisting factor");
    assert!(quartic.projectively_equal(&[
        rat_i(15625),
        rat_i(15625),
        rat_i(15625),
        rat_i(-96914),
        rat_i(-96914),
        rat_i(-96914),
    ]));
    println!("projectively equal to 15625(X^4+Y^4+Z^4) - 96914(X^2Y^2+X^2Z^2+Y^2Z^2) = 0");

    let cert = jacobian_order_of(&quartic.model(), 7).unwrap();
    println!(
        "counts over F_7, F_49, F_343: {:?} so #Jac(F_7) = {} = 12^3",
        cert.counts, cert.jacobian_order
    );
    println!("864 | 1728, so all 864 rational torsion points survive reduction");
}
