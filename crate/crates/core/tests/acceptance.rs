use alcovelab::acceptance;
use std::io::Write;

#[test]
fn acceptance_criteria() {
    let verdicts = acceptance::run_all();
    // Written to the raw handle so the lines show up without --nocapture.
    let mut err = std::io::stderr().lock();
    for v in &verdicts {
        let _ = writeln!(err, "{}", v.line());
    }
    let failed: Vec<u8> = verdicts.iter().filter(|v| !v.pass).map(|v| v.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
