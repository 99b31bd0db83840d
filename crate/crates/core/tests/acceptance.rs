use virasoro_o::verify::{criterion_names, run_all};

#[test]
fn acceptance() {
    let results = run_all();
    assert_eq!(results.len(), criterion_names().len());
    for r in &results {
        println!(
            "[{}] criterion {}: {} ({} ms) {}",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.name,
            r.millis,
            r.detail
        );
    }
    let failed: Vec<u32> = results.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
