use jordan_atlas::verify::{clifford_suite, run_verify, tampered_product, VerifyConfig, VerifyLevel};

#[test]
fn quick_level_passes_and_is_deterministic() {
    let cfg = VerifyConfig::new(VerifyLevel::Quick, 17);
    let first = run_verify(&cfg);
    assert!(first.passed(), "{:?}", first.suites);
    assert_eq!(first.suites, run_verify(&cfg).suites);
    assert!(first.suites.iter().all(|s| s.cases_run > 0));
}

#[test]
fn tampered_product_is_detected() {
    let mut cfg = VerifyConfig::new(VerifyLevel::Quick, 17);
    cfg.product = tampered_product;
    let report = run_verify(&cfg);
    assert!(!report.passed());
    for name in ["catalog_integrity", "jordan_axioms", "spin_relations", "theta_machinery"] {
        let suite = report.suites.iter().find(|s| s.name == name).unwrap();
        assert!(!suite.failures.is_empty(), "{name} missed the mutation");
    }
}

#[test]
fn full_level_runs_the_whole_dimension_table() {
    let report = clifford_suite(&VerifyConfig::new(VerifyLevel::Full, 0));
    assert_eq!(report.cases_run, 4);
    assert!(report.failures.is_empty());
}
