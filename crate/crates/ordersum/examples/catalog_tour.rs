//! Loads the bundled catalog, revalidates a slice of it, and prints
//! summary statistics.
//!
//! ```text
//! cargo run --release -p ordersum --example catalog_tour
//! ```

use ordersum::catalog::{bundled_catalog, bundled_counts, validate_catalog, CatalogEntry};

fn main() {
    let entries = bundled_catalog().expect("bundled catalog parses");
    println!("{} groups bundled, orders 1..100", entries.len());

    // Orders with the most groups.
    let counts = bundled_counts();
    let mut by_count: Vec<(u64, u64)> = counts.iter().map(|(&o, &c)| (c, o)).collect();
    by_count.sort_unstable_by(|a, b| b.cmp(a));
    println!("\nbusiest orders:");
    for (count, order) in by_count.iter().take(6) {
        println!("  order {order}: {count} groups");
    }

    // Revalidate everything below order 64: regenerate each group, check
    // order and psi, and screen each order for isomorphic duplicates.
    let slice: Vec<CatalogEntry> = entries.iter().filter(|e| e.order < 64).cloned().collect();
    let started = std::time::Instant::now();
    let report = validate_catalog(&slice, counts);
    println!(
        "\nrevalidated {} entries in {:.1}s: {}",
        report.entries_checked,
        started.elapsed().as_secs_f64(),
        if report.is_ok() {
            "all clean".to_string()
        } else {
            format!("{} problems", report.problems.len())
        }
    );
    for p in report.problems.iter().take(10) {
        println!("  PROBLEM: {p}");
    }

    // A few named entries.
    println!("\nsample entries:");
    for entry in entries.iter().filter(|e| e.name.is_some()).take(8) {
        println!(
            "  {}: {} (degree {}, psi {})",
            entry.id(),
            entry.name.as_deref().unwrap_or(""),
            entry.degree,
            entry
                .expected_psi
                .as_ref()
                .map(|v| v.to_string())
                .unwrap_or_else(|| "?".into())
        );
    }
}
