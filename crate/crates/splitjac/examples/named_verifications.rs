//! Run the named-example catalog: every headline construction rebuilt from
//! scratch with its expected facts re-verified, plus the curve/point ledger.

use splitjac::explorer::catalog::verify_all;
use splitjac::explorer::sections::verify_sections;

fn main() {
    let mut pass = true;
    for report in verify_all() {
        pass &= report.all_pass();
        print!("{}", report.render_text());
    }
    let ledger = verify_sections();
    pass &= ledger.all_pass();
    print!("{}", ledger.render_text());
    println!("\noverall: {}", if pass { "PASS" } else { "FAIL" });
    std::process::exit(if pass { 0 } else { 1 });
}
