use splitjac::explorer::catalog::verify_all;

#[test]
fn every_named_example_passes() {
    let mut bad = Vec::new();
    for r in verify_all() {
        if !r.all_pass() {
            bad.push(r.render_text());
        }
    }
    assert!(bad.is_empty(), "failing examples:\n{}", bad.join("\n"));
}
