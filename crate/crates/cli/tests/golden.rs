mod support;

#[test]
fn golden_outputs_are_stable() {
    let failures = support::check_golden();
    assert!(failures.is_empty(), "{failures:#?}");
}
