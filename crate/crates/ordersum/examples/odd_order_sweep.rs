//! For odd orders a sharper threshold holds: psi above 271/3647 of the
//! cyclic value forces supersolvability, with the nonabelian group of
//! order 75 sitting exactly on the boundary. The example also runs the
//! 211/1617 solvability sweep over the whole catalog.
//!
//! ```text
//! cargo run --release -p ordersum --example odd_order_sweep
//! ```

use ordersum::catalog::{bundled_catalog, CatalogEntry};
use ordersum::conjectures::{run_threshold_sweep, ThresholdKind, Verdict};
use ordersum::psi::Comparison;

fn main() {
    let odd: Vec<CatalogEntry> = bundled_catalog()
        .expect("bundled catalog parses")
        .iter()
        .filter(|e| e.order % 2 == 1)
        .cloned()
        .collect();
    let outcomes =
        run_threshold_sweep(&odd, ThresholdKind::OddSupersolvable).expect("sweep runs");
    let violations = outcomes
        .iter()
        .filter(|o| o.verdict == Verdict::Violation)
        .count();
    println!(
        "odd-order sweep: {} groups, {} violations",
        outcomes.len(),
        violations
    );
    for o in &outcomes {
        if o.comparison == Some(Comparison::Equal) {
            println!(
                "  boundary case: {} (order {}) with psi = {} = (271/3647) * {}",
                o.group_id,
                o.order,
                o.psi,
                o.psi_cn.as_deref().unwrap_or("?")
            );
        }
    }

    let all = bundled_catalog().expect("bundled catalog parses");
    let solvable = run_threshold_sweep(all, ThresholdKind::Solvable).expect("sweep runs");
    let sv = solvable
        .iter()
        .filter(|o| o.verdict == Verdict::Violation)
        .count();
    println!("solvability sweep (211/1617): {} groups, {sv} violations", solvable.len());
    std::process::exit(if violations + sv == 0 { 0 } else { 1 });
}
