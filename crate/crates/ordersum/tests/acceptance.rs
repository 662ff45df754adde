//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Run with `cargo test -p ordersum --test acceptance -- --nocapture`.

use std::time::Instant;

use num_bigint::BigUint;

use ordersum::catalog::{bundled_catalog, bundled_counts, validate_catalog, CatalogEntry};
use ordersum::classify::is_isomorphic;
use ordersum::conjectures::{
    check_subgroup_index_bound, run_threshold_sweep, scan_subgroup_index_bound,
    verify_inequalities, ThresholdKind, Verdict, Witness,
};
use ordersum::constructors::{cyclic, dihedral, direct_product, fixture_group};
use ordersum::factor::FactoredInteger;
use ordersum::perm::Permutation;
use ordersum::psi::{psi, psi_by_cyclic_subgroups, psi_cyclic, Comparison};
use ordersum::subgroup::{maximal_subgroups, subgroup_from_generators};

fn entries() -> Vec<CatalogEntry> {
    bundled_catalog().expect("bundled catalog parses").to_vec()
}

#[test]
fn criterion_1_exact_psi_fixtures() {
    let fixtures: &[(&str, u64)] = &[
        ("SL(2,3)", 99),
        ("S4", 67),
        ("C2xA4", 87),
        ("(C2xC2):C9", 265),
        ("(C3xC3):C4", 115),
        ("C3xA4", 121),
        ("(C5xC5):C3", 271),
        ("(C5xC5):C9", 2197),
        ("C3x((C5xC5):C3)", 1297),
        ("((C5xC5):C5):C3", 3771),
        ("C5x((C5xC5):C3)", 3771),
        ("SmallGroup(32,7)", 167),
        ("C2xD8", 39),
    ];
    for &(name, expected) in fixtures {
        let start = Instant::now();
        let g = fixture_group(name).expect("fixture loads");
        let value = psi(&g).expect("within bounds");
        assert_eq!(value.to_u64(), Some(expected), "{name}");
        assert!(
            start.elapsed().as_secs_f64() < 1.0,
            "{name} exceeded one second"
        );
    }
    // The two cyclic fixtures, exact by element scan.
    for (n, expected) in [(4u64, 11u64), (12, 77), (75, 3647)] {
        let start = Instant::now();
        let g = cyclic(n).expect("valid");
        assert_eq!(psi(&g).expect("in range").to_u64(), Some(expected));
        assert!(start.elapsed().as_secs_f64() < 1.0);
    }
    println!("criterion 1 (exact psi fixtures, zero tolerance): PASS");
}

fn pad_left(p: &Permutation, extra: usize) -> Permutation {
    let d = p.degree();
    let mut images: Vec<usize> = (1..=d).map(|i| p.apply(i)).collect();
    images.extend(d + 1..=d + extra);
    Permutation::from_images_one_based(&images).expect("bijection")
}

fn pad_right(p: &Permutation, offset: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=offset).collect();
    images.extend((1..=p.degree()).map(|i| p.apply(i) + offset));
    Permutation::from_images_one_based(&images).expect("bijection")
}

#[test]
fn criterion_2_index_bound_counterexample_and_minimality() {
    let start = Instant::now();
    let sg32 = fixture_group("SmallGroup(32,7)").expect("fixture");
    let c2xd8 = fixture_group("C2xD8").expect("fixture");

    // The maximal subgroup of index 2 isomorphic to C2 x D8.
    let maximal = maximal_subgroups(&sg32)
        .expect("in range")
        .into_iter()
        .find(|m| m.order() == 16 && is_isomorphic(&m.to_group(), &c2xd8).expect("in range"))
        .expect("the order-32 fixture has a maximal C2 x D8");
    let outcome = check_subgroup_index_bound("SmallGroup(32,7)", &sg32, &maximal).expect("checks");
    match &outcome.witness {
        Some(Witness::SubgroupBound {
            holds,
            bound,
            index,
            psi_subgroup,
            ..
        }) => {
            assert!(!holds, "the bound must fail here");
            assert_eq!(outcome.psi, "167");
            assert_eq!(psi_subgroup, "39");
            assert_eq!(*index, 2);
            assert_eq!(bound, "156"); // 39 * 4
        }
        other => panic!("unexpected witness {other:?}"),
    }

    // The coprime family: psi scales by psi(C_m) on both sides.
    let max_gens = maximal.generators();
    for m in [3u64, 5, 7, 9] {
        let cm = cyclic(m).expect("valid");
        let g = direct_product(&sg32, &cm).expect("in range");
        let mut h_gens: Vec<Permutation> =
            max_gens.iter().map(|p| pad_left(p, cm.degree())).collect();
        h_gens.extend(
            cm.generators()
                .iter()
                .map(|p| pad_right(p, sg32.degree())),
        );
        let h = subgroup_from_generators(&g, &h_gens).expect("subgroup of the product");
        assert_eq!(h.order(), 16 * m);
        assert_eq!(h.index(), 2);
        let psi_cm = psi_cyclic(&FactoredInteger::factor(m).expect("small"));
        let expected_psi = BigUint::from(167u32) * psi_cm.value();
        let expected_bound = BigUint::from(156u32) * psi_cm.value();
        let outcome = check_subgroup_index_bound("family", &g, &h).expect("checks");
        assert_eq!(outcome.psi, expected_psi.to_string());
        match &outcome.witness {
            Some(Witness::SubgroupBound { holds, bound, .. }) => {
                assert!(!holds, "m = {m}");
                assert_eq!(bound, &expected_bound.to_string(), "m = {m}");
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    // Desk-scale minimality: no violations at any order below 32.
    let small: Vec<CatalogEntry> = entries().into_iter().filter(|e| e.order <= 31).collect();
    let scan = scan_subgroup_index_bound(&small).expect("scan runs");
    assert!(scan.notices.is_empty());
    assert_eq!(scan.findings.len(), 0, "orders 1..31 must be clean");

    // The scan rediscovers the order-32 violation.
    let order32: Vec<CatalogEntry> = entries().into_iter().filter(|e| e.order == 32).collect();
    let scan32 = scan_subgroup_index_bound(&order32).expect("scan runs");
    assert!(
        scan32.findings.iter().any(|f| f.psi == "167"),
        "the order-32 counterexample must reappear"
    );

    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 600.0, "criterion 2 exceeded ten minutes");
    println!(
        "criterion 2 (index-bound counterexample at 32, family m in {{3,5,7,9}}, clean below 32; {elapsed:.1}s): PASS"
    );
}

#[test]
fn criterion_3_supersolvable_threshold_sweep() {
    let start = Instant::now();
    let all = entries();
    assert_eq!(all.len(), 1048);
    let outcomes = run_threshold_sweep(&all, ThresholdKind::Supersolvable).expect("sweep runs");
    let violations: Vec<_> = outcomes
        .iter()
        .filter(|o| o.verdict == Verdict::Violation)
        .collect();
    assert!(violations.is_empty(), "violations: {violations:?}");

    let equals: Vec<_> = outcomes
        .iter()
        .filter(|o| o.comparison == Some(Comparison::Equal))
        .collect();
    let mut equal_orders: Vec<u64> = equals.iter().map(|o| o.order).collect();
    equal_orders.sort_unstable();
    assert_eq!(equal_orders, vec![12, 60, 84], "equality set mismatch");
    for o in &equals {
        match &o.witness {
            Some(Witness::Equality {
                m,
                product_form_verified,
            }) => {
                assert!(product_form_verified);
                assert_eq!(o.order, 12 * m);
            }
            other => panic!("equality case without verified witness: {other:?}"),
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 900.0, "criterion 3 exceeded fifteen minutes");
    println!(
        "criterion 3 (31/77 sweep over {} groups, zero violations, equality exactly at 12/60/84; {elapsed:.1}s): PASS",
        outcomes.len()
    );
}

#[test]
fn criterion_4_odd_order_and_solvability_sweeps() {
    let start = Instant::now();
    let odd: Vec<CatalogEntry> = entries()
        .into_iter()
        .filter(|e| e.order % 2 == 1 && e.order <= 99)
        .collect();
    let outcomes = run_threshold_sweep(&odd, ThresholdKind::OddSupersolvable).expect("sweep runs");
    assert!(outcomes.iter().all(|o| o.verdict != Verdict::Violation));

    // The nonabelian order-75 group lands exactly on the threshold.
    let on_threshold: Vec<_> = outcomes
        .iter()
        .filter(|o| o.comparison == Some(Comparison::Equal))
        .collect();
    assert!(
        on_threshold.iter().any(|o| o.order == 75 && o.psi == "271"),
        "271 = (271/3647) * 3647 must be an equality case"
    );
    for o in &on_threshold {
        assert_eq!(o.verdict, Verdict::NotApplicable);
    }

    let solvable_outcomes =
        run_threshold_sweep(&entries(), ThresholdKind::Solvable).expect("sweep runs");
    assert!(solvable_outcomes
        .iter()
        .all(|o| o.verdict != Verdict::Violation));

    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "criterion 4 (odd 271/3647 sweep and 211/1617 solvability sweep, zero violations; {elapsed:.1}s): PASS"
    );
}

#[test]
fn criterion_5_inequality_battery() {
    let start = Instant::now();
    let report = verify_inequalities(&entries()).expect("battery runs");
    for check in &report.checks {
        assert!(
            check.failures.is_empty(),
            "{} failed: {:?}",
            check.name,
            &check.failures[..check.failures.len().min(5)]
        );
        assert!(check.checked > 0, "{} checked nothing", check.name);
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "criterion 5 (inequality battery, {} checks across {} lines, zero failures; {elapsed:.1}s): PASS",
        report.total_checked(),
        report.checks.len()
    );
}

#[test]
fn criterion_6_oracle_equivalences() {
    let start = Instant::now();

    // Closed form versus element scan for every cyclic group up to 2000.
    use rayon::prelude::*;
    (1u64..=2000).into_par_iter().for_each(|n| {
        let g = cyclic(n).expect("valid");
        let scanned = psi(&g).expect("in range");
        let closed = psi_cyclic(&FactoredInteger::factor(n).expect("small"));
        assert_eq!(scanned, closed, "n = {n}");
    });

    // Chain order versus closure order, and the phi-weighted psi path,
    // over the whole catalog.
    entries().par_iter().for_each(|entry| {
        let g = entry.to_group().expect("valid entry");
        assert_eq!(
            g.order(),
            g.order_by_closure().expect("in range"),
            "{}",
            entry.id()
        );
        assert_eq!(
            psi(&g).expect("in range"),
            psi_by_cyclic_subgroups(&g).expect("in range"),
            "{}",
            entry.id()
        );
    });

    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "criterion 6 (closed form = scan to 2000; chain = closure; phi-weighted = direct; {elapsed:.1}s): PASS"
    );
}

#[test]
fn criterion_7_catalog_integrity() {
    let start = Instant::now();
    let all = entries();
    let counts = bundled_counts();
    let report = validate_catalog(&all, counts);
    assert!(
        report.is_ok(),
        "problems: {:?}",
        &report.problems[..report.problems.len().min(10)]
    );
    assert_eq!(report.entries_checked, 1048);
    // Every order from 1 to 100 is present with the published count.
    for order in 1..=100u64 {
        assert_eq!(
            report.per_order.get(&order),
            counts.get(&order),
            "order {order}"
        );
    }
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "criterion 7 (counts match for orders 1..100; pairwise non-isomorphic within orders <= 63; {elapsed:.1}s): PASS"
    );
}

#[test]
fn index_bound_scan_over_higher_orders_finds_the_family_violation() {
    // Orders 33..96: the product of the order-32 counterexample with C3
    // appears at order 96 with psi 167 * 7 = 1169 against 156 * 7 = 1092.
    let range: Vec<CatalogEntry> = entries()
        .into_iter()
        .filter(|e| e.order >= 33 && e.order <= 96)
        .collect();
    let scan = scan_subgroup_index_bound(&range).expect("scan runs");
    assert!(scan.notices.is_empty());
    let family = scan
        .findings
        .iter()
        .find(|f| f.order == 96 && f.psi == "1169")
        .expect("the coprime family violation at order 96");
    match &family.witness {
        Some(Witness::SubgroupBound { bound, holds, .. }) => {
            assert_eq!(bound, "1092");
            assert!(!holds);
        }
        other => panic!("unexpected witness {other:?}"),
    }
}

#[test]
fn non_supersolvable_lists_at_orders_24_and_36() {
    // The three non-supersolvable groups of order 24 and of order 36,
    // identified by their invariant sums.
    for name in ["SL(2,3)", "S4", "C2xA4"] {
        let g = fixture_group(name).expect("fixture");
        assert_eq!(g.order(), 24);
        assert!(!ordersum::is_supersolvable(&g).expect("in range"), "{name}");
    }
    for name in ["(C2xC2):C9", "(C3xC3):C4", "C3xA4"] {
        let g = fixture_group(name).expect("fixture");
        assert_eq!(g.order(), 36);
        assert!(!ordersum::is_supersolvable(&g).expect("in range"), "{name}");
    }
    // Exactly three of the fifteen order-24 groups are non-supersolvable,
    // and exactly three of the fourteen order-36 groups.
    for (order, expected_total, expected_bad) in [(24u64, 15usize, 3usize), (36, 14, 3)] {
        let groups: Vec<CatalogEntry> =
            entries().into_iter().filter(|e| e.order == order).collect();
        assert_eq!(groups.len(), expected_total);
        let bad = groups
            .iter()
            .filter(|e| {
                let g = e.to_group().expect("valid");
                !ordersum::is_supersolvable(&g).expect("in range")
            })
            .count();
        assert_eq!(bad, expected_bad, "order {order}");
    }
}

#[test]
fn witness_and_cyclic_structure_of_the_order_32_fixture() {
    use ordersum::psi::max_element_order_witness;
    use ordersum::subgroup::cyclic_subgroups;
    let g = fixture_group("SmallGroup(32,7)").expect("fixture");
    let w = max_element_order_witness(&g).expect("in range");
    assert_eq!((w.order, w.index), (8, 4));
    let max_cyclic = cyclic_subgroups(&g)
        .expect("in range")
        .iter()
        .map(|h| h.order())
        .max()
        .expect("nonempty");
    assert_eq!(max_cyclic, 8);
}

#[test]
fn every_small_fixture_matches_exactly_one_catalog_entry() {
    // Cross-membership: each fixture of order <= 100 is isomorphic to
    // exactly one group in its catalog order section. This ties the
    // independently constructed fixtures to the enumerated data.
    let fixtures = [
        "SL(2,3)",
        "S4",
        "C2xA4",
        "(C2xC2):C9",
        "(C3xC3):C4",
        "C3xA4",
        "(C5xC5):C3",
        "SmallGroup(32,7)",
        "C2xD8",
    ];
    let all = entries();
    for name in fixtures {
        let f = fixture_group(name).expect("fixture loads");
        let matches = all
            .iter()
            .filter(|e| e.order == f.order())
            .filter(|e| {
                let g = e.to_group().expect("valid entry");
                is_isomorphic(&f, &g).expect("in range")
            })
            .count();
        assert_eq!(matches, 1, "{name} must match exactly one catalog entry");
    }
}

#[test]
fn quotient_of_product_by_cyclic_factor() {
    use ordersum::subgroup::{all_subgroups, quotient};
    // A4 x C5 modulo its C5 factor is A4, with invariant sum 31.
    let a4 = ordersum::alternating(4).expect("valid");
    let g = direct_product(&a4, &cyclic(5).expect("valid")).expect("valid");
    let c5_factor = all_subgroups(&g)
        .expect("in range")
        .into_iter()
        .find(|h| h.order() == 5 && h.is_normal())
        .expect("the C5 factor is normal");
    let q = quotient(&g, &c5_factor).expect("normal");
    assert_eq!(q.order(), 12);
    assert!(is_isomorphic(&q, &a4).expect("in range"));
    assert_eq!(psi(&q).expect("in range").to_u64(), Some(31));
}

#[test]
fn spot_checks_from_the_sweeps() {
    // A named sample tying sweeps to concrete numbers: the dihedral group
    // of order 8 is supersolvable and C2 x D8 evaluates to 39.
    let d4 = dihedral(4).expect("valid");
    assert!(ordersum::is_supersolvable(&d4).expect("in range"));
    let c2 = cyclic(2).expect("valid");
    let m = direct_product(&c2, &d4).expect("valid");
    assert_eq!(psi(&m).expect("in range").to_u64(), Some(39));
    // The catalog's order-75 section contains the psi = 271 entry.
    let seventy_five: Vec<CatalogEntry> =
        entries().into_iter().filter(|e| e.order == 75).collect();
    assert_eq!(seventy_five.len(), 3);
    assert!(seventy_five
        .iter()
        .any(|e| e.expected_psi == Some(271u32.into())));
}
