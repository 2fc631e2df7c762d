//! Runs every acceptance criterion and prints one PASS/FAIL line each.
//! Exits nonzero if any criterion fails.

use wreath_core::selftest::run_criterion;
use wreath_core::selftest::criterion_names;
use wreath_core::Budget;

fn main() {
    let budget = Budget::default();
    let mut failed = 0;
    for (id, _) in criterion_names() {
        let report = run_criterion(id, &budget).expect("listed criterion");
        println!("{}", report.line());
        for f in report.failures.iter().skip(1).take(5) {
            println!("    {f}");
        }
        if !report.pass {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
