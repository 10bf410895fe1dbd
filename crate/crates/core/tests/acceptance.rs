//! One line per acceptance criterion; the test fails if any criterion does.

use hypotrochoid_core::checks::{run_suite, CheckOutcome};

#[test]
fn acceptance_criteria() {
    let outcomes: Vec<CheckOutcome> = run_suite(None);
    assert_eq!(outcomes.len(), 11);
    for o in &outcomes {
        println!("{o}");
    }
    let failed: Vec<u8> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
