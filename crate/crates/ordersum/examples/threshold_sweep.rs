//! Sweeps the bundled catalog against the 31/77 supersolvability
//! threshold: every group with psi above that fraction of the cyclic value
//! must be supersolvable, and the groups landing exactly on the threshold
//! are classified as products of the alternating group on four points with
//! a coprime cyclic group.
//!
//! ```text
//! cargo run --release -p ordersum --example threshold_sweep
//! ```

use ordersum::catalog::bundled_catalog;
use ordersum::conjectures::{run_threshold_sweep, ThresholdKind, Verdict, Witness};
use ordersum::psi::Comparison;

fn main() {
    let entries = bundled_catalog().expect("bundled catalog parses");
    let started = std::time::Instant::now();
    let outcomes =
        run_threshold_sweep(entries, ThresholdKind::Supersolvable).expect("sweep runs");

    let mut greater = 0usize;
    let mut less = 0usize;
    let mut violations = 0usize;
    for o in &outcomes {
        match (o.comparison, o.verdict) {
            (_, Verdict::Violation) => violations += 1,
            (Some(Comparison::Greater), _) => greater += 1,
            (Some(Comparison::Less), _) => less += 1,
            _ => {}
        }
    }
    println!(
        "checked {} groups in {:.1}s: {} above the threshold (all supersolvable), {} below, {} violations",
        outcomes.len(),
        started.elapsed().as_secs_f64(),
        greater,
        less,
        violations
    );
    println!("\nequality cases (psi exactly 31/77 of the cyclic value):");
    for o in &outcomes {
        if o.comparison == Some(Comparison::Equal) {
            if let Some(Witness::Equality { m, .. }) = &o.witness {
                println!(
                    "  {} (order {}): psi = {}, the product of A4 with C{m}",
                    o.group_id, o.order, o.psi
                );
            }
        }
    }
    std::process::exit(if violations == 0 { 0 } else { 1 });
}
