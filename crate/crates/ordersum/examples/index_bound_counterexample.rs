//! The inequality `psi(G) <= psi(H) * [G:H]^2` fails in general. This
//! example reproduces the smallest counterexample (a group of order 32
//! with invariant sum 167 whose maximal subgroup C2 x D8 gives the bound
//! 39 * 4 = 156), verifies that no smaller order misbehaves, and extends
//! the counterexample to an infinite coprime family.
//!
//! ```text
//! cargo run --release -p ordersum --example index_bound_counterexample
//! ```

use ordersum::catalog::{bundled_catalog, CatalogEntry};
use ordersum::classify::is_isomorphic;
use ordersum::conjectures::{check_subgroup_index_bound, scan_subgroup_index_bound, Witness};
use ordersum::constructors::fixture_group;
use ordersum::subgroup::maximal_subgroups;

fn main() {
    // Orders 1..31 are clean.
    let small: Vec<CatalogEntry> = bundled_catalog()
        .expect("bundled catalog parses")
        .iter()
        .filter(|e| e.order <= 31)
        .cloned()
        .collect();
    let scan = scan_subgroup_index_bound(&small).expect("scan runs");
    println!(
        "orders 1..31: {} groups, {} subgroup pairs, {} findings",
        scan.groups_scanned, scan.pairs_checked, scan.findings.len()
    );

    // Order 32 is not.
    let g = fixture_group("SmallGroup(32,7)").expect("fixture loads");
    let c2xd8 = fixture_group("C2xD8").expect("fixture loads");
    let m = maximal_subgroups(&g)
        .expect("in range")
        .into_iter()
        .find(|m| is_isomorphic(&m.to_group(), &c2xd8).expect("in range"))
        .expect("maximal C2 x D8 exists");
    let outcome = check_subgroup_index_bound("SmallGroup(32,7)", &g, &m).expect("checks");
    if let Some(Witness::SubgroupBound {
        psi_subgroup,
        index,
        bound,
        holds,
        ..
    }) = &outcome.witness
    {
        println!(
            "\norder 32: psi(G) = {} but psi(H) * [G:H]^2 = {psi_subgroup} * {index}^2 = {bound} (bound holds: {holds})",
            outcome.psi
        );
    }

    // The whole coprime family inherits the failure, multiplicatively.
    let family: Vec<CatalogEntry> = bundled_catalog()
        .expect("bundled catalog parses")
        .iter()
        .filter(|e| e.order == 96)
        .cloned()
        .collect();
    let scan96 = scan_subgroup_index_bound(&family).expect("scan runs");
    let product_case = scan96
        .findings
        .iter()
        .find(|f| f.psi == "1169")
        .expect("the order-96 member of the family shows up");
    if let Some(Witness::SubgroupBound { bound, .. }) = &product_case.witness {
        println!(
            "order 96: the product with C3 fails too: psi = {} = 167 * 7 against bound {bound} = 156 * 7",
            product_case.psi
        );
    }
    println!(
        "order 96 overall: {} findings across {} groups",
        scan96.findings.len(),
        scan96.groups_scanned
    );
}
