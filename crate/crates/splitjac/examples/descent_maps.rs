//! Descent bookkeeping on curves with full rational 2-torsion: the
//! coordinate-difference map into (Q*/Q*^2)^3, the halving criterion that
//! predicts extra 2-power torsion on a glued Jacobian, and the group
//! structures of torsion images.

use splitjac::algebra::rat::{parse_rat, rat_i};
use splitjac::families::{instantiate, FamilyLabel};
use splitjac::torsion::{
    halving_condition, iota, torsion_image_structure, AbGroup, DescentPoint, SplitTwoTorsion,
};

fn tors(label: FamilyLabel, t: &splitjac::algebra::Rat) -> SplitTwoTorsion {
    let inst = instantiate(label, t).unwrap();
    SplitTwoTorsion::new([
        inst.two_torsion_x[0].clone(),
        inst.two_torsion_x[1].clone(),
        inst.two_torsion_x[2].clone(),
    ])
    .unwrap()
}

fn main() {
    // descent image of the distinguished 2-torsion point on a (2,8) member
    let e = tors(FamilyLabel::KubertDouble(8), &rat_i(3));
    let v = iota(&e, &DescentPoint::TwoTorsion { index: 1 }).unwrap();
    println!(
        "iota(T2) on the (2,8) member at t = 3: ({}, {}, {})",
        v.classes[0].label(),
        v.classes[1].label(),
        v.classes[2].label()
    );
    println!("norm condition holds: {}", v.norm_is_trivial());

    // the halving criterion along the diagonal of the (2,8) pairing surface
    let ok = halving_condition(
        &e,
        &e,
        [0, 1, 2],
        &DescentPoint::TwoTorsion { index: 1 },
        &DescentPoint::TwoTorsion { index: 1 },
    )
    .unwrap();
    println!("diagonal halving condition: {ok}");

    // a cross-family halving with a rotated matching
    let e26 = tors(FamilyLabel::KubertDouble(6), &parse_rat("241/81").unwrap());
    let e28 = tors(FamilyLabel::KubertDouble(8), &parse_rat("1/3").unwrap());
    let ok = halving_condition(
        &e26,
        &e28,
        [1, 2, 0],
        &DescentPoint::TwoTorsion { index: 0 },
        &DescentPoint::TwoTorsion { index: 1 },
    )
    .unwrap();
    println!("rotated (2,6)/(2,8) halving at the found fiber: {ok}");

    // torsion-image structures: what survives of Z/2 x Z/8 times Z/2 x Z/8
    let g = AbGroup::new(&[2, 8]);
    let same = torsion_image_structure(&g, &g, [[1, 0], [0, 1]]).unwrap();
    let crossed = torsion_image_structure(&g, &g, [[0, 1], [1, 0]]).unwrap();
    println!("special points identified: {}", same.label());
    println!("special points crossed:    {}", crossed.label());
}
