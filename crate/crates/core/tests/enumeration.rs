mod common;

#[test]
fn connected_cubic_class_counts() {
    // K2^3; then K4 and the 4-cycle with alternate edges doubled.
    assert_eq!(common::connected_cubic(2).len(), 1);
    assert_eq!(common::connected_cubic(4).len(), 2);
    let six = common::connected_cubic(6);
    assert_eq!(six.len(), 6);
    assert!(six.iter().all(|g| g.regularity() == Some(3)));
}
