//! The sum-of-element-orders invariant and its exact arithmetic.
//!
//! `psi(G)` is the sum of the orders of all elements of `G`. For cyclic
//! groups it has a closed form: for `n = p1^a1 * ... * pr^ar`,
//!
//! ```text
//! psi(C_n) = prod_i (p_i^(2*a_i + 1) + 1) / (p_i + 1)
//! ```
//!
//! which is multiplicative over coprime factors. Everything here is exact:
//! big integers and reduced rationals, no floating point.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use crate::exact::ExactRational;
use crate::factor::{first_primes, FactoredInteger};
use crate::group::{FiniteGroup, GroupError};
use crate::perm::Permutation;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PsiError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Subgroup(#[from] crate::subgroup::SubgroupError),
    #[error("invalid argument: {0}")]
    BadArgument(&'static str),
}

/// An exact value of the sum-of-element-orders invariant.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PsiValue(BigUint);

impl PsiValue {
    /// Wraps a computed sum for a group of order `n`, asserting the two
    /// unconditional bounds: the sum is at least `n` (each summand is at
    /// least 1) and at least `2n - 1` for `n > 1` (only the identity has
    /// order 1).
    fn from_group_sum(sum: BigUint, n: u64) -> PsiValue {
        assert!(sum >= BigUint::from(n), "psi below group order");
        if n > 1 {
            assert!(sum >= BigUint::from(2 * n - 1), "psi below 2n - 1");
        }
        PsiValue(sum)
    }

    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.0).ok()
    }
}

impl From<u64> for PsiValue {
    fn from(v: u64) -> PsiValue {
        PsiValue(BigUint::from(v))
    }
}

impl fmt::Display for PsiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for PsiValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Sum of the orders of all elements, by direct element scan.
pub fn psi(g: &FiniteGroup) -> Result<PsiValue, PsiError> {
    let elems = g.elements()?;
    let mut sum = BigUint::zero();
    for p in elems {
        sum += p.order();
    }
    Ok(PsiValue::from_group_sum(sum, g.order()))
}

/// Multiset of element orders: order -> multiplicity.
pub fn order_multiset(g: &FiniteGroup) -> Result<BTreeMap<u64, u64>, PsiError> {
    let mut counts = BTreeMap::new();
    for p in g.elements()? {
        *counts.entry(p.order_u64()).or_insert(0) += 1;
    }
    Ok(counts)
}

/// psi of a direct product computed from the factors' order multisets:
/// the order of a pair is the lcm of the component orders.
pub fn psi_of_product_from_multisets(
    a: &BTreeMap<u64, u64>,
    b: &BTreeMap<u64, u64>,
) -> BigUint {
    let mut sum = BigUint::zero();
    for (&oa, &ca) in a {
        for (&ob, &cb) in b {
            let o = oa.lcm(&ob);
            sum += BigUint::from(o) * (ca as u128 * cb as u128);
        }
    }
    sum
}

/// Closed form for psi of the cyclic group of order `n`.
pub fn psi_cyclic(n: &FactoredInteger) -> PsiValue {
    let mut acc = BigUint::from(1u32);
    for &(p, a) in n.factors() {
        let p = BigUint::from(p);
        let num = p.pow(2 * a + 1) + 1u32;
        let den = &p + 1u32;
        let (q, r) = num.div_rem(&den);
        assert!(r.is_zero(), "p + 1 divides p^(2a+1) + 1");
        acc *= q;
    }
    PsiValue::from_group_sum(acc, n.value())
}

/// psi recomputed from cyclic subgroups: every cyclic subgroup `C`
/// contributes `phi(|C|) * |C|`, one term per generator of `C`. Used as a
/// cross-check against the direct scan, not as a replacement.
pub fn psi_by_cyclic_subgroups(g: &FiniteGroup) -> Result<PsiValue, PsiError> {
    let mut sum = BigUint::zero();
    for h in crate::subgroup::cyclic_subgroups(g)? {
        let c = h.order();
        sum += BigUint::from(euler_phi(c) * c);
    }
    Ok(PsiValue::from_group_sum(sum, g.order()))
}

/// psi of a subgroup, summing the parent's cached element orders over the
/// subgroup's members.
pub fn psi_of_subgroup(h: &crate::subgroup::SubgroupHandle<'_>) -> Result<PsiValue, PsiError> {
    let table = h.parent().table()?;
    let mut sum: u128 = 0;
    for i in h.element_indices().iter() {
        sum += table.orders[i] as u128;
    }
    Ok(PsiValue::from_group_sum(BigUint::from(sum), h.order()))
}

pub(crate) fn euler_phi(n: u64) -> u64 {
    let f = FactoredInteger::factor(n).expect("subgroup orders are small");
    let mut phi = n;
    for &(p, _) in f.factors() {
        phi = phi / p * (p - 1);
    }
    phi
}

/// `f'(1) = 1`, and for `r >= 2` the product `q_2/(q_2+1) * ... * q_r/(q_r+1)`
/// over the increasing sequence of all primes `q_1 = 2 < q_2 = 3 < ...`.
pub fn f_prime(r: usize) -> Result<ExactRational, PsiError> {
    if r == 0 {
        return Err(PsiError::BadArgument("f' requires r >= 1"));
    }
    let primes = first_primes(r);
    let mut acc = ExactRational::one();
    for &q in &primes[1..] {
        acc = acc.mul(&ExactRational::new(q as i64, q as i64 + 1));
    }
    Ok(acc)
}

/// `h'(s) = f'(s-1) * q_s` for `s >= 2`; in particular `h'(2) = 3`.
pub fn h_prime(s: usize) -> Result<ExactRational, PsiError> {
    if s < 2 {
        return Err(PsiError::BadArgument("h' requires s >= 2"));
    }
    let qs = first_primes(s)[s - 1];
    Ok(f_prime(s - 1)?.mul(&ExactRational::from_integer(qs)))
}

/// Lower bounds for `psi(C_n)`, each guarded by its hypothesis.
///
/// `general` applies when the largest prime divisor `p` of `n` is at least
/// 11 and equals `385/96 * n^2/(p+1)`. `odd` applies when `n` is odd with
/// `p >= 37` and equals `h'(12) * n^2/(p+1)`. A `None` field means the
/// corresponding hypothesis does not hold; callers never receive a silent
/// number for an inapplicable bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPsiLowerBound {
    pub general: Option<ExactRational>,
    pub odd: Option<ExactRational>,
}

pub fn herzog_lower_bound(n: &FactoredInteger) -> CyclicPsiLowerBound {
    let p = match n.largest_prime() {
        Some(p) => p,
        None => {
            return CyclicPsiLowerBound {
                general: None,
                odd: None,
            }
        }
    };
    let n_sq_over_p1 = ExactRational::from_big(
        BigInt::from(n.value()) * BigInt::from(n.value()),
        BigInt::from(p + 1),
    );
    let general = (p >= 11).then(|| ExactRational::new(385, 96).mul(&n_sq_over_p1));
    let odd = (n.is_odd() && p >= 37).then(|| {
        h_prime(12)
            .expect("12 >= 2")
            .mul(&n_sq_over_p1)
    });
    CyclicPsiLowerBound { general, odd }
}

/// Trichotomy of `psi_g` versus `ratio * psi_cn`, by cross-multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Greater,
    Equal,
    Less,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::Greater => write!(f, "greater"),
            Comparison::Equal => write!(f, "equal"),
            Comparison::Less => write!(f, "less"),
        }
    }
}

pub fn threshold_compare(
    psi_g: &PsiValue,
    ratio: &ExactRational,
    psi_cn: &PsiValue,
) -> Comparison {
    let num = ratio
        .numerator()
        .to_biguint()
        .expect("thresholds are positive");
    let den = ratio
        .denominator()
        .to_biguint()
        .expect("denominator positive");
    let lhs = psi_g.value() * &den;
    let rhs = psi_cn.value() * &num;
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => Comparison::Greater,
        std::cmp::Ordering::Equal => Comparison::Equal,
        std::cmp::Ordering::Less => Comparison::Less,
    }
}

/// An element of maximal order together with the index of the cyclic
/// subgroup it generates.
#[derive(Debug, Clone)]
pub struct MaxOrderWitness {
    pub element: Permutation,
    pub order: u64,
    /// `|G| / o(x)`, the index of the generated cyclic subgroup.
    pub index: u64,
}

/// Finds an element of maximal order; ties broken by the deterministic
/// (lexicographic) element order.
pub fn max_element_order_witness(g: &FiniteGroup) -> Result<MaxOrderWitness, PsiError> {
    let elems = g.elements()?;
    let mut best: Option<(u64, &Permutation)> = None;
    for p in elems {
        let o = p.order_u64();
        if best.map_or(true, |(bo, _)| o > bo) {
            best = Some((o, p));
        }
    }
    let (order, element) = best.expect("group is nonempty");
    Ok(MaxOrderWitness {
        element: element.clone(),
        order,
        index: g.order() / order,
    })
}
