//! The acceptance suite: one test per criterion, each printing its pass/fail
//! line. Run with `cargo test --release --test acceptance -- --nocapture` to
//! see the full report.

use splitjac::explorer::acceptance::criteria;

fn run(number: u32) {
    let c = criteria().into_iter().find(|c| c.number == number).unwrap();
    let report = (c.run)();
    let status = if report.all_pass() { "PASS" } else { "FAIL" };
    println!("criterion {:>2} [{}] {}", c.number, status, c.name);
    if !report.all_pass() {
        println!("{}", report.render_text());
    }
    assert!(report.all_pass(), "criterion {} failed", c.number);
}

#[test]
fn criterion_01_torsion_63() { run(1); }
#[test]
fn criterion_02_torsion_49() { run(2); }
#[test]
fn criterion_03_quartic_864() { run(3); }
#[test]
fn criterion_04_modular_sextic_identity() { run(4); }
#[test]
fn criterion_05_conductor_2940_data() { run(5); }
#[test]
fn criterion_06_twisting_specializations() { run(6); }
#[test]
fn criterion_07_genus2_product_master() { run(7); }
#[test]
fn criterion_08_genus3_product_master() { run(8); }
#[test]
fn criterion_09_table_suite() { run(9); }
#[test]
fn criterion_10_point_ledger() { run(10); }
#[test]
fn criterion_11_search_reproduction() { run(11); }
#[test]
fn criterion_12_structure_calculator() { run(12); }
#[test]
fn criterion_13_isotropic_census() { run(13); }
