//! The identity suite at its full bounds.

use w2chi_core::identities::run_all;

#[test]
fn identity_suite_passes_at_full_bounds() {
    let t = std::time::Instant::now();
    for r in run_all().unwrap() {
        println!("{} {} ({})", r.name, r.passed, r.detail);
        assert!(r.passed, "{}: {}", r.name, r.detail);
    }
    println!("{:?}", t.elapsed());
}
