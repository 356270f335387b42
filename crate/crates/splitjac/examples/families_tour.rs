//! Walk the torsion families: instantiate one member of every tabulated row,
//! print its model, and re-verify the tabulated data (marked-point orders,
//! 2-torsion roots, discriminant relations).

use splitjac::algebra::rat::rat;
use splitjac::families::{consistency_check, instantiate, random_parameter, FamilyLabel, FamilyModel};
use splitjac::rng::SplitMix64;

fn main() {
    let mut rng = SplitMix64::new(2026);
    for label in FamilyLabel::all() {
        let t = random_parameter(label, &mut rng);
        let inst = instantiate(label, &t).unwrap();
        let desc = match &inst.model {
            FamilyModel::BForm(e) => format!(
                "y^2 = x(x^2 + {} x + {})",
                splitjac::algebra::rat::format_rat(&e.a),
                splitjac::algebra::rat::format_rat(&e.b)
            ),
            FamilyModel::Long(_) => "long Weierstrass model".to_string(),
        };
        let rep = consistency_check(label, &t).unwrap();
        println!(
            "{:6} t = {:>8}  order-{:<2} marked point  {}  [{}]",
            label.name(),
            splitjac::algebra::rat::format_rat(&t),
            inst.max_order,
            desc,
            if rep.all_ok() { "consistent" } else { "INCONSISTENT" }
        );
    }

    // degeneracy screening names the vanishing factor
    match instantiate(FamilyLabel::B(6), &rat(-1, 9)) {
        Err(e) => println!("\ndegenerate parameter rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
