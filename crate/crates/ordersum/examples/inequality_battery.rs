//! Runs the battery of supporting inequalities over a slice of the
//! catalog: Sylow factorizations, quotient bounds, product
//! multiplicativity, cyclic core and witness index bounds, and the numeric
//! lower bounds for cyclic psi values.
//!
//! ```text
//! cargo run --release -p ordersum --example inequality_battery [max_order]
//! ```

use ordersum::catalog::{bundled_catalog, CatalogEntry};
use ordersum::conjectures::verify_inequalities_with_limit;

fn main() {
    let max_order: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(60);
    let entries: Vec<CatalogEntry> = bundled_catalog()
        .expect("bundled catalog parses")
        .iter()
        .filter(|e| e.order <= max_order)
        .cloned()
        .collect();
    let started = std::time::Instant::now();
    let report = verify_inequalities_with_limit(&entries, 100_000).expect("battery runs");
    println!(
        "{} groups of order <= {max_order}, {:.1}s\n",
        entries.len(),
        started.elapsed().as_secs_f64()
    );
    for check in &report.checks {
        println!(
            "{:<36} {:>9} checked  {:>3} failures  ({})",
            check.name,
            check.checked,
            check.failures.len(),
            check.scope
        );
        for failure in check.failures.iter().take(5) {
            println!("    FAIL: {failure}");
        }
    }
    std::process::exit(if report.is_ok() { 0 } else { 1 });
}
