//! Verification sweeps: the supersolvability thresholds, the equality
//! classifier, the subgroup-index bound and its counterexample scan, and
//! the battery of supporting inequalities.
//!
//! A `Violation` verdict means a statement's hypothesis held and its
//! conclusion failed; for the theorems checked here that indicates an
//! implementation bug, so shipped sweeps treat any violation as fatal.
//! Failures of the subgroup-index bound are *findings*, not violations:
//! that bound is false in general, and the scan exists to locate
//! counterexamples. Sign convention: a finding's `holds` flag is true when
//! `psi(G) <= psi(H) * [G:H]^2` and false when the bound fails.

use num_bigint::BigUint;
use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::catalog::CatalogEntry;
use crate::classify::{is_isomorphic, is_nilpotent, is_solvable, is_supersolvable};
use crate::constructors::{alternating, cyclic, direct_product, ConstructError};
use crate::exact::ExactRational;
use crate::factor::FactoredInteger;
use crate::group::FiniteGroup;
use crate::psi::{
    herzog_lower_bound, max_element_order_witness, order_multiset, psi, psi_cyclic,
    psi_of_product_from_multisets, psi_of_subgroup, threshold_compare, Comparison, PsiError,
};
use crate::subgroup::{
    all_subgroups, cyclic_subgroups, quotient, sylow, SubgroupError, SubgroupHandle,
};

/// psi(G) above 31/77 of the cyclic value forces supersolvability.
pub fn supersolvable_threshold() -> ExactRational {
    ExactRational::new(31, 77)
}

/// For groups of odd order, psi(G) above 271/3647 of the cyclic value
/// forces supersolvability.
pub fn odd_supersolvable_threshold() -> ExactRational {
    ExactRational::new(271, 3647)
}

/// psi(G) above 211/1617 of the cyclic value forces solvability.
pub fn solvable_threshold() -> ExactRational {
    ExactRational::new(211, 1617)
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Psi(#[from] PsiError),
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
    #[error(transparent)]
    Group(#[from] crate::group::GroupError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Confirmed,
    NotApplicable,
    Violation,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Predicates {
    pub solvable: Option<bool>,
    pub supersolvable: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Equality case of the supersolvability threshold: the group is the
    /// direct product of the alternating group on four points with a cyclic
    /// group of order `m` coprime to 6.
    Equality { m: u64, product_form_verified: bool },
    /// One `(G, H)` evaluation of the subgroup index bound.
    SubgroupBound {
        subgroup_order: u64,
        index: u64,
        psi_subgroup: String,
        bound: String,
        holds: bool,
        subgroup_generators: Vec<String>,
    },
    Note { detail: String },
}

/// One record of the shared report schema.
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub group_id: String,
    pub order: u64,
    pub psi: String,
    pub psi_cn: Option<String>,
    pub ratio: Option<String>,
    pub comparison: Option<Comparison>,
    pub predicates: Predicates,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

/// Which threshold a sweep checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdKind {
    Supersolvable,
    OddSupersolvable,
    Solvable,
}

impl ThresholdKind {
    pub fn ratio(self) -> ExactRational {
        match self {
            ThresholdKind::Supersolvable => supersolvable_threshold(),
            ThresholdKind::OddSupersolvable => odd_supersolvable_threshold(),
            ThresholdKind::Solvable => solvable_threshold(),
        }
    }
}

/// Checks one group against the supersolvability threshold: a psi value
/// strictly above 31/77 of the cyclic value must come with supersolvability.
pub fn check_supersolvable_threshold(
    group_id: &str,
    g: &FiniteGroup,
) -> Result<CheckOutcome, SweepError> {
    check_threshold(group_id, g, ThresholdKind::Supersolvable)
}

/// Odd-order variant with the sharper 271/3647 threshold.
pub fn check_odd_supersolvable_threshold(
    group_id: &str,
    g: &FiniteGroup,
) -> Result<CheckOutcome, SweepError> {
    check_threshold(group_id, g, ThresholdKind::OddSupersolvable)
}

/// Solvability variant with the 211/1617 threshold.
pub fn check_solvable_threshold(
    group_id: &str,
    g: &FiniteGroup,
) -> Result<CheckOutcome, SweepError> {
    check_threshold(group_id, g, ThresholdKind::Solvable)
}

pub fn check_threshold(
    group_id: &str,
    g: &FiniteGroup,
    kind: ThresholdKind,
) -> Result<CheckOutcome, SweepError> {
    let n = g.order();
    let psi_g = psi(g)?;
    let factored = FactoredInteger::factor(n).expect("orders in range are factorable");
    let psi_cn = psi_cyclic(&factored);
    let ratio = kind.ratio();
    let comparison = threshold_compare(&psi_g, &ratio, &psi_cn);

    let mut outcome = CheckOutcome {
        group_id: group_id.to_string(),
        order: n,
        psi: psi_g.to_string(),
        psi_cn: Some(psi_cn.to_string()),
        ratio: Some(ratio.to_string()),
        comparison: Some(comparison),
        predicates: Predicates::default(),
        verdict: Verdict::NotApplicable,
        witness: None,
    };

    if kind == ThresholdKind::OddSupersolvable && n % 2 == 0 {
        outcome.comparison = None;
        outcome.witness = Some(Witness::Note {
            detail: "even order; odd-order threshold does not apply".into(),
        });
        return Ok(outcome);
    }

    let solvable = is_solvable(g)?;
    outcome.predicates.solvable = Some(solvable);
    let conclusion = match kind {
        ThresholdKind::Solvable => solvable,
        _ => {
            let ss = is_supersolvable(g)?;
            outcome.predicates.supersolvable = Some(ss);
            ss
        }
    };

    match comparison {
        Comparison::Greater => {
            outcome.verdict = if conclusion {
                Verdict::Confirmed
            } else {
                Verdict::Violation
            };
        }
        Comparison::Equal if kind == ThresholdKind::Supersolvable => {
            // Attach the equality classification as a witness.
            match classify_threshold_equality(g)? {
                EqualityOutcome::EqualityConfirmed { m } => {
                    outcome.witness = Some(Witness::Equality {
                        m,
                        product_form_verified: true,
                    });
                }
                EqualityOutcome::NotEqualityCase => {}
                EqualityOutcome::Violation { detail } => {
                    outcome.verdict = Verdict::Violation;
                    outcome.witness = Some(Witness::Note { detail });
                }
            }
        }
        _ => {}
    }
    Ok(outcome)
}

/// Outcome of the equality classification at the 31/77 threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EqualityOutcome {
    NotEqualityCase,
    EqualityConfirmed { m: u64 },
    Violation { detail: String },
}

/// A non-supersolvable group sitting exactly on the 31/77 threshold must be
/// the direct product of the alternating group on four points with a cyclic
/// group of order coprime to 6. Supersolvable groups and off-threshold
/// groups are `NotEqualityCase`.
pub fn classify_threshold_equality(g: &FiniteGroup) -> Result<EqualityOutcome, SweepError> {
    let n = g.order();
    let psi_g = psi(g)?;
    let factored = FactoredInteger::factor(n).expect("orders in range");
    let psi_cn = psi_cyclic(&factored);
    if threshold_compare(&psi_g, &supersolvable_threshold(), &psi_cn) != Comparison::Equal {
        return Ok(EqualityOutcome::NotEqualityCase);
    }
    if is_supersolvable(g)? {
        return Ok(EqualityOutcome::NotEqualityCase);
    }
    if n % 12 != 0 {
        return Ok(EqualityOutcome::Violation {
            detail: format!("equality at order {n} not divisible by 12"),
        });
    }
    let m = n / 12;
    if m.gcd(&6) != 1 {
        return Ok(EqualityOutcome::Violation {
            detail: format!("equality with m = {m} not coprime to 6"),
        });
    }
    let expected = direct_product(&alternating(4)?, &cyclic(m)?)?;
    if is_isomorphic(g, &expected)? {
        Ok(EqualityOutcome::EqualityConfirmed { m })
    } else {
        Ok(EqualityOutcome::Violation {
            detail: format!("equality group of order {n} is not the expected product"),
        })
    }
}

/// Evaluates `psi(G) <= psi(H) * [G:H]^2` for one subgroup. A failed bound
/// is a finding (`holds: false` in the witness), never a violation.
pub fn check_subgroup_index_bound(
    group_id: &str,
    g: &FiniteGroup,
    h: &SubgroupHandle<'_>,
) -> Result<CheckOutcome, SweepError> {
    let psi_g = psi(g)?;
    let psi_h = psi_of_subgroup(h)?;
    let index = h.index();
    let bound = psi_h.value() * BigUint::from(index) * BigUint::from(index);
    let holds = psi_g.value() <= &bound;
    let comparison = match psi_g.value().cmp(&bound) {
        std::cmp::Ordering::Greater => Comparison::Greater,
        std::cmp::Ordering::Equal => Comparison::Equal,
        std::cmp::Ordering::Less => Comparison::Less,
    };
    Ok(CheckOutcome {
        group_id: group_id.to_string(),
        order: g.order(),
        psi: psi_g.to_string(),
        psi_cn: None,
        ratio: None,
        comparison: Some(comparison),
        predicates: Predicates::default(),
        verdict: Verdict::Confirmed,
        witness: Some(Witness::SubgroupBound {
            subgroup_order: h.order(),
            index,
            psi_subgroup: psi_h.to_string(),
            bound: bound.to_string(),
            holds,
            subgroup_generators: h.generators().iter().map(|p| p.to_string()).collect(),
        }),
    })
}

/// Scan result: the failing pairs plus notices about skipped groups.
#[derive(Debug)]
pub struct IndexBoundScan {
    pub findings: Vec<CheckOutcome>,
    pub notices: Vec<String>,
    pub groups_scanned: usize,
    pub pairs_checked: u64,
}

/// Scans every subgroup of every given catalog entry for failures of the
/// index bound. Groups beyond the subgroup enumeration bound are skipped
/// with a notice. Deterministic: entries in input order, subgroups in
/// lattice order.
pub fn scan_subgroup_index_bound(entries: &[CatalogEntry]) -> Result<IndexBoundScan, SweepError> {
    let per_entry: Vec<Result<(Vec<CheckOutcome>, u64, Option<String>), SweepError>> = entries
        .par_iter()
        .map(|entry| {
            let g = entry.to_group()?;
            if g.order() > crate::subgroup::SUBGROUP_ENUMERATION_BOUND {
                return Ok((
                    Vec::new(),
                    0,
                    Some(format!(
                        "{}: order {} beyond the subgroup enumeration bound, skipped",
                        entry.id(),
                        g.order()
                    )),
                ));
            }
            let mut findings = Vec::new();
            let mut pairs = 0u64;
            for h in all_subgroups(&g)? {
                pairs += 1;
                let outcome = check_subgroup_index_bound(&entry.id(), &g, &h)?;
                if matches!(
                    outcome.witness,
                    Some(Witness::SubgroupBound { holds: false, .. })
                ) {
                    findings.push(outcome);
                }
            }
            Ok((findings, pairs, None))
        })
        .collect();

    let mut scan = IndexBoundScan {
        findings: Vec::new(),
        notices: Vec::new(),
        groups_scanned: 0,
        pairs_checked: 0,
    };
    for item in per_entry {
        let (findings, pairs, notice) = item?;
        if let Some(n) = notice {
            scan.notices.push(n);
        } else {
            scan.groups_scanned += 1;
        }
        scan.pairs_checked += pairs;
        scan.findings.extend(findings);
    }
    Ok(scan)
}

/// Runs a threshold sweep over catalog entries, in input order.
pub fn run_threshold_sweep(
    entries: &[CatalogEntry],
    kind: ThresholdKind,
) -> Result<Vec<CheckOutcome>, SweepError> {
    entries
        .par_iter()
        .map(|entry| {
            let g = entry.to_group()?;
            check_threshold(&entry.id(), &g, kind)
        })
        .collect()
}

/// One line of the inequality battery.
#[derive(Debug, Clone, Serialize)]
pub struct InequalityCheck {
    pub name: &'static str,
    pub scope: String,
    pub checked: u64,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InequalityReport {
    pub checks: Vec<InequalityCheck>,
}

impl InequalityReport {
    pub fn is_ok(&self) -> bool {
        self.checks.iter().all(|c| c.failures.is_empty())
    }

    pub fn total_checked(&self) -> u64 {
        self.checks.iter().map(|c| c.checked).sum()
    }
}

/// Upper bound for the numeric cyclic-psi lower-bound sweep.
pub const CYCLIC_BOUND_SWEEP_LIMIT: u64 = 100_000;

/// Runs the full battery of supporting inequalities over catalog entries:
///
/// * `normal_cyclic_sylow_factorization`: a normal cyclic Sylow subgroup
///   `P` gives `psi(G) <= psi(P) psi(G/P)`, equality iff `P` is central.
/// * `normal_subgroup_quotient_bound`: `psi(G) <= psi(G/H) |H|^2` for every
///   normal `H`.
/// * `direct_product_psi_bound`: `psi(A x B) <= psi(A) psi(B)`, equality
///   iff the orders are coprime; pairs with product order at most 2000.
/// * `small_cyclic_index_dichotomy`: a cyclic subgroup of index below `2p`
///   (`p` the largest prime divisor) forces a normal cyclic Sylow
///   `p`-subgroup, or solvability with that subgroup maximal of index `p`
///   or `p+1`.
/// * `cyclic_core_index`: for a proper cyclic subgroup `A`,
///   `[A : core(A)] < [G : A]`; in particular `|A| > [G:A]` forces a
///   nontrivial core.
/// * `cyclic_witness_index_bound`: when `psi(G) > (r/s) psi(C_n)`, the
///   maximal-order element generates a subgroup of index strictly below
///   `(s/r) * prod (p_i + 1)/p_i`.
/// * `cyclic_psi_lower_bound`: numeric sweep of the two lower bounds for
///   `psi(C_n)` over all applicable `n` up to 10^5.
/// * `cyclic_psi_maximality`: `psi(G) <= psi(C_n)`, equality iff cyclic.
/// * `sylow_quotient_order`: a normal Sylow subgroup's quotient has order
///   equal to its index.
/// * `lagrange`: every enumerated subgroup order divides the group order.
/// * `predicate_implications`: supersolvable implies solvable; nilpotent
///   implies supersolvable.
pub fn verify_inequalities(entries: &[CatalogEntry]) -> Result<InequalityReport, SweepError> {
    verify_inequalities_with_limit(entries, CYCLIC_BOUND_SWEEP_LIMIT)
}

/// As [`verify_inequalities`], with the numeric sweep capped at
/// `cyclic_sweep_limit` (0 disables it).
pub fn verify_inequalities_with_limit(
    entries: &[CatalogEntry],
    cyclic_sweep_limit: u64,
) -> Result<InequalityReport, SweepError> {
    let witness_ratios = [supersolvable_threshold(), odd_supersolvable_threshold()];

    struct PerGroup {
        sylow_fact: (u64, Vec<String>),
        quotient_bound: (u64, Vec<String>),
        dichotomy: (u64, Vec<String>),
        core_index: (u64, Vec<String>),
        witness_bound: (u64, Vec<String>),
        maximality: (u64, Vec<String>),
        sylow_quotient: (u64, Vec<String>),
        lagrange: (u64, Vec<String>),
        implications: (u64, Vec<String>),
        order_multiset: std::collections::BTreeMap<u64, u64>,
        psi: BigUint,
        order: u64,
    }

    let per_group: Vec<Result<PerGroup, SweepError>> = entries
        .par_iter()
        .map(|entry| {
            let id = entry.id();
            let g = entry.to_group()?;
            let n = g.order();
            let factored = FactoredInteger::factor(n).expect("orders in range");
            let psi_g = psi(&g)?;
            let psi_cn = psi_cyclic(&factored);
            let mut pg = PerGroup {
                sylow_fact: (0, vec![]),
                quotient_bound: (0, vec![]),
                dichotomy: (0, vec![]),
                core_index: (0, vec![]),
                witness_bound: (0, vec![]),
                maximality: (0, vec![]),
                sylow_quotient: (0, vec![]),
                lagrange: (0, vec![]),
                implications: (0, vec![]),
                order_multiset: order_multiset(&g)?,
                psi: psi_g.value().clone(),
                order: n,
            };

            // Normal cyclic Sylow factorization, and Sylow quotient orders.
            for &(p, a) in factored.factors() {
                let sp = sylow(&g, p)?;
                if sp.is_normal() {
                    let q = quotient(&g, &sp)?;
                    pg.sylow_quotient.0 += 1;
                    if q.order() != n / p.pow(a) {
                        pg.sylow_quotient
                            .1
                            .push(format!("{id}: Sylow-{p} quotient has wrong order"));
                    }
                    if sp.is_cyclic() {
                        pg.sylow_fact.0 += 1;
                        let bound = psi_of_subgroup(&sp)?.value() * psi(&q)?.value();
                        let equality = psi_g.value() == &bound;
                        if psi_g.value() > &bound {
                            pg.sylow_fact.1.push(format!(
                                "{id}: psi exceeds psi(P) psi(G/P) for p = {p}"
                            ));
                        }
                        if equality != sp.is_central() {
                            pg.sylow_fact.1.push(format!(
                                "{id}: equality/centrality mismatch for p = {p}"
                            ));
                        }
                    }
                }
            }

            // Subgroup-based checks need the lattice.
            let subs = all_subgroups(&g)?;
            for h in &subs {
                pg.lagrange.0 += 1;
                if n % h.order() != 0 {
                    pg.lagrange.1.push(format!("{id}: subgroup order {} does not divide", h.order()));
                }
                if h.is_normal() {
                    let q = quotient(&g, h)?;
                    pg.quotient_bound.0 += 1;
                    let bound =
                        psi(&q)?.value() * BigUint::from(h.order()) * BigUint::from(h.order());
                    if psi_g.value() > &bound {
                        pg.quotient_bound.1.push(format!(
                            "{id}: psi {psi_g} exceeds quotient bound {bound} at |H| = {}",
                            h.order()
                        ));
                    }
                }
            }

            // Proper cyclic subgroups: core index bound.
            for a_sub in cyclic_subgroups(&g)? {
                if a_sub.is_whole_group() {
                    continue;
                }
                pg.core_index.0 += 1;
                let core = a_sub.core();
                let core_index = a_sub.order() / core.order();
                let sub_index = a_sub.index();
                if core_index >= sub_index {
                    pg.core_index.1.push(format!(
                        "{id}: [A:core] = {core_index} not below [G:A] = {sub_index}"
                    ));
                }
                if a_sub.order() > sub_index && core.order() == 1 {
                    pg.core_index.1.push(format!(
                        "{id}: |A| > [G:A] with trivial core"
                    ));
                }
            }

            // Small cyclic index dichotomy, element by element.
            if let Some(p) = factored.largest_prime() {
                for x_sub in cyclic_subgroups(&g)? {
                    if x_sub.index() >= 2 * p || x_sub.is_whole_group() {
                        continue;
                    }
                    pg.dichotomy.0 += 1;
                    let sp = sylow(&g, p)?;
                    let clause_one = sp.is_normal() && sp.is_cyclic();
                    let clause_two = {
                        let idx = x_sub.index();
                        (idx == p || idx == p + 1)
                            && is_solvable(&g)?
                            && subs.iter().all(|k| {
                                // maximality: nothing strictly between
                                k.order() <= x_sub.order()
                                    || k.order() >= n
                                    || !x_sub.element_indices().is_subset_of(k.element_indices())
                            })
                    };
                    if !clause_one && !clause_two {
                        pg.dichotomy.1.push(format!(
                            "{id}: cyclic subgroup of index {} violates the dichotomy",
                            x_sub.index()
                        ));
                    }
                }
            }

            // Witness index bound for both ratios.
            for ratio in &witness_ratios {
                let applies = threshold_compare(&psi_g, ratio, &psi_cn) == Comparison::Greater;
                if !applies {
                    continue;
                }
                pg.witness_bound.0 += 1;
                let witness = max_element_order_witness(&g)?;
                let mut cap = ExactRational::one().div(ratio);
                for p in factored.distinct_primes() {
                    cap = cap.mul(&ExactRational::new(p as i64 + 1, p as i64));
                }
                if cap.cmp_biguint(&BigUint::from(witness.index)) != std::cmp::Ordering::Greater {
                    pg.witness_bound.1.push(format!(
                        "{id}: witness index {} not below cap {cap} for ratio {ratio}",
                        witness.index
                    ));
                }
            }

            // Cyclic maximality.
            pg.maximality.0 += 1;
            match threshold_compare(&psi_g, &ExactRational::one(), &psi_cn) {
                Comparison::Greater => pg
                    .maximality
                    .1
                    .push(format!("{id}: psi exceeds the cyclic value")),
                Comparison::Equal if !g.is_cyclic()? => pg
                    .maximality
                    .1
                    .push(format!("{id}: non-cyclic group attains the cyclic value")),
                _ => {}
            }

            // Predicate implications.
            pg.implications.0 += 1;
            let ss = is_supersolvable(&g)?;
            let solv = is_solvable(&g)?;
            let nilp = is_nilpotent(&g)?;
            if ss && !solv {
                pg.implications
                    .1
                    .push(format!("{id}: supersolvable but not solvable"));
            }
            if nilp && !ss {
                pg.implications
                    .1
                    .push(format!("{id}: nilpotent but not supersolvable"));
            }

            Ok(pg)
        })
        .collect();

    let mut groups = Vec::with_capacity(per_group.len());
    for pg in per_group {
        groups.push(pg?);
    }

    // Direct product bound over pairs with product order at most 2000.
    let mut product_checked = 0u64;
    let mut product_failures = Vec::new();
    for (i, a) in groups.iter().enumerate() {
        for b in groups.iter().skip(i) {
            if a.order * b.order > 2000 {
                continue;
            }
            product_checked += 1;
            let prod_psi = psi_of_product_from_multisets(&a.order_multiset, &b.order_multiset);
            let bound = &a.psi * &b.psi;
            let coprime = a.order.gcd(&b.order) == 1;
            if prod_psi > bound {
                product_failures.push(format!(
                    "product of orders {} and {}: psi exceeds the product bound",
                    a.order, b.order
                ));
            }
            if (prod_psi == bound) != coprime {
                product_failures.push(format!(
                    "product of orders {} and {}: equality/coprimality mismatch",
                    a.order, b.order
                ));
            }
        }
    }

    // Numeric sweep of the cyclic lower bounds.
    let bound_results: Vec<(u64, Vec<String>)> = (1..=cyclic_sweep_limit.max(1))
        .into_par_iter()
        .fold(
            || (0u64, Vec::new()),
            |(mut checked, mut failures), n| {
                let f = FactoredInteger::factor(n).expect("within trial division bound");
                let bounds = herzog_lower_bound(&f);
                if bounds.general.is_none() && bounds.odd.is_none() {
                    return (checked, failures);
                }
                let value = psi_cyclic(&f);
                for (label, bound) in [("general", &bounds.general), ("odd", &bounds.odd)] {
                    if let Some(b) = bound {
                        checked += 1;
                        if b.cmp_biguint(value.value()) == std::cmp::Ordering::Greater {
                            failures.push(format!("n = {n}: psi(C_n) below the {label} bound"));
                        }
                    }
                }
                (checked, failures)
            },
        )
        .collect();
    let mut bound_checked = 0;
    let mut bound_failures = Vec::new();
    for (c, f) in bound_results {
        bound_checked += c;
        bound_failures.extend(f);
    }
    bound_failures.sort();

    let scope = format!("{} catalog groups", groups.len());
    let collect = |f: fn(&PerGroup) -> &(u64, Vec<String>), name: &'static str| {
        let mut checked = 0;
        let mut failures = Vec::new();
        for g in &groups {
            let (c, fails) = f(g);
            checked += c;
            failures.extend(fails.iter().cloned());
        }
        InequalityCheck {
            name,
            scope: scope.clone(),
            checked,
            failures,
        }
    };

    let checks = vec![
        collect(|g| &g.sylow_fact, "normal_cyclic_sylow_factorization"),
        collect(|g| &g.quotient_bound, "normal_subgroup_quotient_bound"),
        InequalityCheck {
            name: "direct_product_psi_bound",
            scope: "catalog pairs with product order <= 2000".into(),
            checked: product_checked,
            failures: product_failures,
        },
        collect(|g| &g.dichotomy, "small_cyclic_index_dichotomy"),
        collect(|g| &g.core_index, "cyclic_core_index"),
        collect(|g| &g.witness_bound, "cyclic_witness_index_bound"),
        InequalityCheck {
            name: "cyclic_psi_lower_bound",
            scope: format!("applicable n <= {cyclic_sweep_limit}"),
            checked: bound_checked,
            failures: bound_failures,
        },
        collect(|g| &g.maximality, "cyclic_psi_maximality"),
        collect(|g| &g.sylow_quotient, "sylow_quotient_order"),
        collect(|g| &g.lagrange, "lagrange"),
        collect(|g| &g.implications, "predicate_implications"),
    ];

    Ok(InequalityReport { checks })
}
