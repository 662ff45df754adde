//! Computes the sum-of-element-orders invariant for a tour of named
//! groups, including the frozen fixture realizations, and shows how the
//! values sit against the cyclic maximum.
//!
//! ```text
//! cargo run --release -p ordersum --example psi_of_named_groups
//! ```

use ordersum::constructors::{
    alternating, cyclic, dihedral, direct_product, fixture_group, symmetric, FIXTURE_TABLE,
};
use ordersum::exact::ExactRational;
use ordersum::factor::FactoredInteger;
use ordersum::psi::{order_multiset, psi, psi_cyclic, threshold_compare};

fn main() {
    println!("{:<22} {:>6} {:>8} {:>10}  ratio to cyclic", "group", "order", "psi", "psi(C_n)");
    let named = [
        ("C12", cyclic(12).unwrap()),
        ("A4", alternating(4).unwrap()),
        ("S4", symmetric(4).unwrap()),
        ("D8 (order 8)", dihedral(4).unwrap()),
        (
            "C2 x D8",
            direct_product(&cyclic(2).unwrap(), &dihedral(4).unwrap()).unwrap(),
        ),
        (
            "A4 x C5",
            direct_product(&alternating(4).unwrap(), &cyclic(5).unwrap()).unwrap(),
        ),
    ];
    for (name, group) in &named {
        print_row(name, group);
    }

    println!("\nfrozen fixtures:");
    for &(name, _, _) in FIXTURE_TABLE {
        let group = fixture_group(name).expect("fixture loads");
        print_row(name, &group);
    }

    println!("\nelement order multiset of A4:");
    let a4 = alternating(4).unwrap();
    for (order, count) in order_multiset(&a4).unwrap() {
        println!("  order {order}: {count} elements");
    }
}

fn print_row(name: &str, group: &ordersum::FiniteGroup) {
    let n = group.order();
    let value = psi(group).expect("within bounds");
    let cyclic_value = psi_cyclic(&FactoredInteger::factor(n).expect("small"));
    let ratio = ExactRational::from_big(
        value.value().clone().into(),
        cyclic_value.value().clone().into(),
    );
    let marker = match threshold_compare(&value, &ExactRational::new(31, 77), &cyclic_value) {
        ordersum::Comparison::Greater => "above 31/77",
        ordersum::Comparison::Equal => "exactly 31/77",
        ordersum::Comparison::Less => "below 31/77",
    };
    println!(
        "{name:<22} {n:>6} {:>8} {:>10}  {} ({marker})",
        value.to_string(),
        cyclic_value.to_string(),
        ratio.to_decimal_string(4)
    );
}
