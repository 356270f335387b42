//! Bounded-height searches over the parameterizing equations: squarefree-class
//! matches between tabulated discriminants (which yield gluable pairs of
//! curves) and square values of one-variable conditions.

use splitjac::algebra::Poly;
use splitjac::explorer::{search, Exclusion, SearchSpec, Solution};

fn main() {
    // pairs (t, u) with Delta_7(t) and Delta_9(u) equal modulo squares: each
    // gives a 7-torsion and a 9-torsion curve with matching 2-division fields
    let spec = SearchSpec::SquareClassPair {
        n: 7,
        m: 9,
        height: 20,
        exclusions: vec![],
    };
    let sols = search(&spec);
    println!("Delta_7 ~ Delta_9 matches of height <= 20: {}", sols.len());
    for s in sols.iter().take(6) {
        if let Solution::Pair { t, u, class, .. } = s {
            println!(
                "  (t, u) = ({}, {})  class {}",
                splitjac::algebra::rat::format_rat(t),
                splitjac::algebra::rat::format_rat(u),
                class.label()
            );
        }
    }

    // same-family search needs the retorsioning exclusions
    let spec = SearchSpec::SquareClassPair {
        n: 7,
        m: 7,
        height: 20,
        exclusions: vec![
            Exclusion::Diagonal,
            Exclusion::OneOverOneMinusT,
            Exclusion::TMinusOneOverT,
        ],
    };
    let sols = search(&spec);
    println!("nontrivial Delta_7 ~ Delta_7 matches of height <= 20: {}", sols.len());

    // the seed of the 864-torsion quartic: a square value of an octic
    let spec = SearchSpec::QuarticSquare {
        poly: Poly::from_i64(&[3, 0, 56, 0, 6, 0, 0, 0, -1]),
        height: 10,
    };
    for s in search(&spec) {
        if let Solution::Square { t, w } = s {
            println!(
                "octic square at s = {} with w = {}",
                splitjac::algebra::rat::format_rat(&t),
                splitjac::algebra::rat::format_rat(&w)
            );
        }
    }
}
