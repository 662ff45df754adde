//! Subgroup machinery on the symmetric group of degree four: the full
//! lattice, Sylow subgroups, cores, quotients, and the structural
//! predicates.
//!
//! ```text
//! cargo run --release -p ordersum --example subgroup_tour
//! ```

use std::collections::BTreeMap;

use ordersum::classify::{is_isomorphic, is_nilpotent, is_solvable, is_supersolvable};
use ordersum::constructors::symmetric;
use ordersum::perm::Permutation;
use ordersum::subgroup::{all_subgroups, maximal_subgroups, quotient, subgroup_from_generators, sylow};

fn main() {
    let s4 = symmetric(4).expect("valid");
    let subs = all_subgroups(&s4).expect("in range");
    let mut by_order: BTreeMap<u64, usize> = BTreeMap::new();
    for h in &subs {
        *by_order.entry(h.order()).or_insert(0) += 1;
    }
    println!("the symmetric group on 4 points has {} subgroups:", subs.len());
    for (order, count) in &by_order {
        println!("  order {order}: {count}");
    }

    let normal: Vec<_> = subs.iter().filter(|h| h.is_normal()).collect();
    println!(
        "normal subgroups: {:?}",
        normal.iter().map(|h| h.order()).collect::<Vec<_>>()
    );

    let p2 = sylow(&s4, 2).expect("2 divides 24");
    let p3 = sylow(&s4, 3).expect("3 divides 24");
    println!(
        "Sylow subgroups: order {} (normal: {}), order {} (normal: {})",
        p2.order(),
        p2.is_normal(),
        p3.order(),
        p3.is_normal()
    );

    let four_cycle = Permutation::parse_with_degree("(1 2 3 4)", 4).expect("parses");
    let a = subgroup_from_generators(&s4, &[four_cycle]).expect("subgroup");
    println!(
        "the cyclic subgroup on a 4-cycle has order {}, index {}, core of order {}",
        a.order(),
        a.index(),
        a.core().order()
    );

    let v4 = subs
        .iter()
        .find(|h| h.order() == 4 && h.is_normal())
        .expect("the normal four-group");
    let q = quotient(&s4, v4).expect("normal");
    println!(
        "quotient by the normal four-group: order {}, isomorphic to S3: {}",
        q.order(),
        is_isomorphic(&q, &symmetric(3).expect("valid")).expect("in range")
    );

    println!(
        "maximal subgroup indices: {:?}",
        maximal_subgroups(&s4)
            .expect("in range")
            .iter()
            .map(|h| h.index())
            .collect::<Vec<_>>()
    );

    println!(
        "predicates: solvable {}, nilpotent {}, supersolvable {}",
        is_solvable(&s4).expect("in range"),
        is_nilpotent(&s4).expect("in range"),
        is_supersolvable(&s4).expect("in range"),
    );
}
