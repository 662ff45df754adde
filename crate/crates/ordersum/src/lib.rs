//! Exact arithmetic for the sum-of-element-orders invariant of finite
//! groups, with a bundled catalog of all groups of order at most 100 and
//! exhaustive verification sweeps.
//!
//! The invariant `psi(G)` sums the orders of all elements of a finite
//! group. Whether `psi(G)` is large relative to `psi(C_n)` (its maximum,
//! attained only by the cyclic group) constrains the structure of `G`:
//! above `31/77 psi(C_n)` the group is supersolvable, with equality on
//! that threshold only for products of the alternating group on four
//! points with coprime cyclic groups; for odd orders the sharper
//! `271/3647` threshold applies; above `211/1617` the group is solvable.
//! In the other direction, `psi(G) <= psi(H) [G:H]^2` fails in general,
//! with the smallest counterexample at order 32. This crate computes
//! everything with exact integer and rational arithmetic and verifies
//! those statements exhaustively over its catalog.
//!
//! Start with the examples directory: each major capability has a runnable
//! example (`cargo run --release -p ordersum --example <name>`). A thin
//! `ordersum` binary exposes the same sweeps as subcommands for batch use.

pub mod catalog;
pub mod classify;
pub mod conjectures;
pub mod constructors;
pub mod exact;
pub mod factor;
pub mod group;
pub mod perm;
pub mod psi;
pub mod report;
pub mod subgroup;

pub use catalog::{bundled_catalog, bundled_counts, load_catalog, validate_catalog, CatalogEntry};
pub use classify::{is_isomorphic, is_nilpotent, is_solvable, is_supersolvable, iso_fingerprint};
pub use constructors::{
    alternating, cyclic, dihedral, direct_product, fixture_group, semidirect_product, symmetric,
};
pub use exact::ExactRational;
pub use factor::FactoredInteger;
pub use group::FiniteGroup;
pub use perm::Permutation;
pub use psi::{
    max_element_order_witness, psi, psi_by_cyclic_subgroups, psi_cyclic, psi_of_subgroup,
    threshold_compare, Comparison, PsiValue,
};
pub use subgroup::{
    all_subgroups, cyclic_subgroups, maximal_subgroups, quotient, subgroup_from_generators, sylow,
    SubgroupHandle,
};
