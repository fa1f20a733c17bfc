use ctxgram::fixtures::*;

fn run(id: WitnessId, n: Option<usize>, max_len: usize) -> WitnessReport {
    let case = build_witness(id, n).unwrap();
    let report = check_witness(&case, max_len).unwrap();
    println!("{}", report.to_table());
    assert!(report.passed(), "{}", report.to_table());
    report
}

#[test]
fn l1_at_twelve() {
    run(WitnessId::L1, None, 12);
}

#[test]
fn l2_at_eight() {
    let r = run(WitnessId::L2, None, 8);
    assert!(r.checks.iter().any(|c| c.kind == CheckKind::ClosedForm));
}

#[test]
fn l3_small() {
    run(WitnessId::L3, Some(1), 8);
}

#[test]
fn l4_l6_l7() {
    for n in 1..=2 {
        run(WitnessId::L4, Some(n), 8);
    }
    for n in 2..=3 {
        run(WitnessId::L6, Some(n), 8);
        run(WitnessId::L7, Some(n), 8);
    }
}

#[test]
fn negative_claims_are_only_consistent() {
    let r = run(WitnessId::L6, Some(2), 6);
    let neg: Vec<_> = r
        .checks
        .iter()
        .filter(|c| c.kind == CheckKind::Negative)
        .collect();
    assert_eq!(neg.len(), 1);
    assert_eq!(neg[0].outcome, Outcome::ConsistentAtBound);
}
