//! Subgroup machinery: handles, exhaustive lattice enumeration, normality,
//! cores, quotients, Sylow and maximal subgroups.
//!
//! Everything here runs over a dense element-index table of the parent
//! group, so the parent order must stay within the table bound. Subgroup
//! lists are deterministic: sorted by order, then by the element-index
//! sequence.

use std::collections::HashSet;

use thiserror::Error;

use crate::factor::is_prime;
use crate::group::{ElementTable, FiniteGroup, GroupError};
use crate::perm::Permutation;

/// Default bound on exhaustive subgroup enumeration.
pub const SUBGROUP_ENUMERATION_BOUND: u64 = 512;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubgroupError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("group order {order} exceeds the subgroup enumeration bound {bound}")]
    BoundExceeded { order: u64, bound: u64 },
    #[error("subgroup is not normal in its parent")]
    NotNormal,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("generator is not an element of the parent group")]
    NotInParent,
}

/// Set of element indices into the parent's sorted element list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct ElemSet {
    blocks: Vec<u64>,
    len: u32,
}

impl ElemSet {
    pub fn empty(n: usize) -> ElemSet {
        ElemSet {
            blocks: vec![0; n.div_ceil(64)],
            len: 0,
        }
    }

    pub fn singleton(n: usize, i: usize) -> ElemSet {
        let mut s = ElemSet::empty(n);
        s.insert(i);
        s
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        let b = &mut self.blocks[i / 64];
        let mask = 1u64 << (i % 64);
        if *b & mask == 0 {
            *b |= mask;
            self.len += 1;
            true
        } else {
            false
        }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_subset_of(&self, other: &ElemSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersect(&self, other: &ElemSet) -> ElemSet {
        let blocks: Vec<u64> = self
            .blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| a & b)
            .collect();
        let len = blocks.iter().map(|b| b.count_ones()).sum();
        ElemSet { blocks, len }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &b)| {
            (0..64).filter_map(move |k| {
                if b >> k & 1 == 1 {
                    Some(bi * 64 + k)
                } else {
                    None
                }
            })
        })
    }

    pub fn indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Cached per-subgroup data: element set plus a small generating list.
#[derive(Clone)]
pub struct SubgroupData {
    pub(crate) elems: ElemSet,
    pub(crate) gens: Vec<u16>,
    pub(crate) order: u32,
}

/// A subgroup of a parent group, with membership and index services.
pub struct SubgroupHandle<'g> {
    parent: &'g FiniteGroup,
    data: SubgroupData,
}

impl<'g> Clone for SubgroupHandle<'g> {
    fn clone(&self) -> Self {
        SubgroupHandle {
            parent: self.parent,
            data: self.data.clone(),
        }
    }
}

impl std::fmt::Debug for SubgroupHandle<'_> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "SubgroupHandle(order {} in group of order {})",
            self.order(),
            self.parent.order()
        )
    }
}

impl<'g> SubgroupHandle<'g> {
    pub(crate) fn from_data(parent: &'g FiniteGroup, data: SubgroupData) -> SubgroupHandle<'g> {
        debug_assert_eq!(parent.order() % data.order as u64, 0, "Lagrange");
        SubgroupHandle { parent, data }
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    pub fn order(&self) -> u64 {
        self.data.order as u64
    }

    pub fn index(&self) -> u64 {
        self.parent.order() / self.order()
    }

    pub fn is_whole_group(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn generators(&self) -> Vec<Permutation> {
        let elems = self.parent.elements().expect("parent within bounds");
        if self.data.gens.is_empty() {
            vec![self.parent.identity()]
        } else {
            self.data.gens.iter().map(|&i| elems[i as usize].clone()).collect()
        }
    }

    pub fn elements(&self) -> Vec<Permutation> {
        let elems = self.parent.elements().expect("parent within bounds");
        self.data.elems.iter().map(|i| elems[i].clone()).collect()
    }

    pub(crate) fn element_indices(&self) -> &ElemSet {
        &self.data.elems
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        match self.parent.element_index(p) {
            Some(i) => self.data.elems.contains(i),
            None => false,
        }
    }

    /// A standalone group generated by this subgroup's generators (same
    /// degree as the parent).
    pub fn to_group(&self) -> FiniteGroup {
        FiniteGroup::generate(self.generators()).expect("valid generators")
    }

    /// True when some element generates the whole subgroup.
    pub fn is_cyclic(&self) -> bool {
        let table = self.parent.table().expect("parent within bounds");
        self.data
            .elems
            .iter()
            .any(|i| table.orders[i] as u64 == self.order())
    }

    pub fn is_normal(&self) -> bool {
        let table = self.parent.table().expect("parent within bounds");
        is_invariant(table, &self.data.elems, &self.data.gens, all_indices(table))
    }

    /// Largest normal subgroup of the parent contained in this subgroup:
    /// the intersection of all conjugates.
    pub fn core(&self) -> SubgroupHandle<'g> {
        let table = self.parent.table().expect("parent within bounds");
        let mut core = self.data.elems.clone();
        loop {
            let mut next = core.clone();
            for g in 0..table.n {
                if conj_escapes(table, &core, g) {
                    next = next.intersect(&conj_set(table, &core, g));
                }
            }
            if next == core {
                break;
            }
            core = next;
        }
        let gens = extract_generators(table, &core);
        SubgroupHandle::from_data(
            self.parent,
            SubgroupData {
                order: core.len() as u32,
                elems: core,
                gens,
            },
        )
    }

    /// Centralizer check: true when every subgroup element commutes with
    /// every element of the parent.
    pub fn is_central(&self) -> bool {
        let table = self.parent.table().expect("parent within bounds");
        self.data
            .elems
            .iter()
            .all(|h| (0..table.n).all(|g| table.commutes(h, g)))
    }
}

fn all_indices(table: &ElementTable) -> std::ops::Range<usize> {
    0..table.n
}

fn is_invariant(
    table: &ElementTable,
    set: &ElemSet,
    gens: &[u16],
    conjugators: std::ops::Range<usize>,
) -> bool {
    // H^g = H iff every generator conjugates into H (orders are equal).
    conjugators
        .into_iter()
        .all(|g| gens.iter().all(|&s| set.contains(table.conj(s as usize, g))))
}

fn conj_escapes(table: &ElementTable, set: &ElemSet, g: usize) -> bool {
    set.iter().any(|h| !set.contains(table.conj(h, g)))
}

fn conj_set(table: &ElementTable, set: &ElemSet, g: usize) -> ElemSet {
    let mut out = ElemSet::empty(table.n);
    for h in set.iter() {
        out.insert(table.conj(h, g));
    }
    out
}

/// Greedily extracts a small generating list for an element set.
pub(crate) fn extract_generators(table: &ElementTable, set: &ElemSet) -> Vec<u16> {
    let mut gens: Vec<u16> = Vec::new();
    let mut closed = ElemSet::singleton(table.n, 0);
    // Prefer high-order elements so cyclic chunks come in one generator.
    let mut candidates: Vec<usize> = set.indices();
    candidates.sort_by_key(|&i| (std::cmp::Reverse(table.orders[i]), i));
    for &c in &candidates {
        if closed.contains(c) {
            continue;
        }
        gens.push(c as u16);
        closed = close_under(table, &closed, c);
        if closed.len() == set.len() {
            break;
        }
    }
    debug_assert_eq!(closed.len(), set.len(), "generators span the subgroup");
    gens
}

/// Closure of `base ∪ {x}` under multiplication.
fn close_under(table: &ElementTable, base: &ElemSet, x: usize) -> ElemSet {
    let mut set = base.clone();
    set.insert(x);
    let mut members: Vec<usize> = set.indices();
    let mut head = 0;
    while head < members.len() {
        let a = members[head];
        head += 1;
        let mut k = 0;
        while k < members.len() {
            let b = members[k];
            k += 1;
            for prod in [table.mul(a, b), table.mul(b, a)] {
                if set.insert(prod) {
                    members.push(prod);
                }
            }
        }
    }
    set
}

/// Closure of a set of generators given by indices.
pub(crate) fn closure_of(table: &ElementTable, gens: &[usize]) -> ElemSet {
    let mut set = ElemSet::singleton(table.n, 0);
    let mut members = vec![0usize];
    let mut head = 0;
    while head < members.len() {
        let a = members[head];
        head += 1;
        for &g in gens {
            let prod = table.mul(a, g);
            if set.insert(prod) {
                members.push(prod);
            }
        }
    }
    set
}

/// Builds a subgroup handle from generator permutations.
pub fn subgroup_from_generators<'g>(
    parent: &'g FiniteGroup,
    gens: &[Permutation],
) -> Result<SubgroupHandle<'g>, SubgroupError> {
    let table = parent.table()?;
    let mut idxs = Vec::new();
    for g in gens {
        let i = parent.element_index(g).ok_or(SubgroupError::NotInParent)?;
        idxs.push(i);
    }
    let elems = closure_of(table, &idxs);
    let gens = extract_generators(table, &elems);
    Ok(SubgroupHandle::from_data(
        parent,
        SubgroupData {
            order: elems.len() as u32,
            elems,
            gens,
        },
    ))
}

/// Every subgroup, exactly once, ordered by (order, element index list).
pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<SubgroupHandle<'_>>, SubgroupError> {
    all_subgroups_with_bound(g, SUBGROUP_ENUMERATION_BOUND)
}

pub fn all_subgroups_with_bound(
    g: &FiniteGroup,
    bound: u64,
) -> Result<Vec<SubgroupHandle<'_>>, SubgroupError> {
    if g.order() > bound {
        return Err(SubgroupError::BoundExceeded {
            order: g.order(),
            bound,
        });
    }
    let table = g.table()?;
    let data = g.subgroup_cache().get_or_init(|| enumerate_subgroups(table));
    Ok(data
        .iter()
        .map(|d| SubgroupHandle::from_data(g, d.clone()))
        .collect())
}

/// Exhaustive lattice enumeration by prime-order coset extensions.
///
/// Every proper subgroup of the groups in range is solvable, so each
/// subgroup `K` has a normal subgroup `H` of prime index; `K` is then
/// reached from `H` by adjoining any element of `K \ H`, which normalizes
/// `H` and has prime coset order. The whole group is appended at the end,
/// which also covers the one nonsolvable group in the shipped data.
fn enumerate_subgroups(table: &ElementTable) -> Vec<SubgroupData> {
    let n = table.n;
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let trivial = ElemSet::singleton(n, 0);
    let mut queue: Vec<SubgroupData> = vec![SubgroupData {
        elems: trivial.clone(),
        gens: vec![],
        order: 1,
    }];
    seen.insert(trivial);
    let mut head = 0;
    while head < queue.len() {
        let current = queue[head].clone();
        head += 1;
        if current.order as usize == n {
            continue;
        }
        // Normalizer of the current subgroup.
        let normalizer: Vec<usize> = (0..n)
            .filter(|&x| {
                current
                    .gens
                    .iter()
                    .all(|&s| current.elems.contains(table.conj(s as usize, x)))
            })
            .collect();
        for &x in &normalizer {
            if current.elems.contains(x) {
                continue;
            }
            // Coset order of x modulo the subgroup.
            let mut pow = x;
            let mut coset_order = 1u32;
            while !current.elems.contains(pow) {
                pow = table.mul(pow, x);
                coset_order += 1;
            }
            if !is_prime(coset_order as u64) {
                continue;
            }
            // Extension = union of coset_order cosets of the subgroup.
            let mut ext = current.elems.clone();
            let mut shift = x;
            for _ in 0..coset_order - 1 {
                for h in current.elems.iter() {
                    ext.insert(table.mul(h, shift));
                }
                shift = table.mul(shift, x);
            }
            debug_assert_eq!(ext.len() as u32, current.order * coset_order);
            if seen.contains(&ext) {
                continue;
            }
            let gens = {
                let mut gs = current.gens.clone();
                gs.push(x as u16);
                minimize_generators(table, &ext, gs)
            };
            seen.insert(ext.clone());
            queue.push(SubgroupData {
                order: ext.len() as u32,
                elems: ext,
                gens,
            });
        }
    }
    // The whole group, if not already reached (it always is for solvable
    // groups, but the alternating group on five points is not solvable).
    let whole = {
        let mut all = ElemSet::empty(n);
        for i in 0..n {
            all.insert(i);
        }
        all
    };
    if !seen.contains(&whole) {
        let gens = extract_generators(table, &whole);
        queue.push(SubgroupData {
            order: n as u32,
            elems: whole,
            gens,
        });
    }
    queue.sort_by(|a, b| {
        a.order
            .cmp(&b.order)
            .then_with(|| a.elems.indices().cmp(&b.elems.indices()))
    });
    queue
}

/// Re-extracts a smaller generating list when the carried one grew.
fn minimize_generators(table: &ElementTable, set: &ElemSet, carried: Vec<u16>) -> Vec<u16> {
    if carried.len() <= 2 {
        return carried;
    }
    extract_generators(table, set)
}

/// The distinct cyclic subgroups, one per generated set. Not subject to
/// the lattice enumeration bound; only the parent's dense table (and so
/// its element cache) is required.
pub fn cyclic_subgroups(g: &FiniteGroup) -> Result<Vec<SubgroupHandle<'_>>, SubgroupError> {
    let table = g.table()?;
    let n = table.n;
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut out = Vec::new();
    for x in 0..n {
        let mut set = ElemSet::singleton(n, 0);
        let mut p = x;
        while p != 0 {
            set.insert(p);
            p = table.mul(p, x);
        }
        set.insert(0);
        if seen.insert(set.clone()) {
            let gens = if x == 0 { vec![] } else { vec![x as u16] };
            out.push(SubgroupData {
                order: set.len() as u32,
                elems: set,
                gens,
            });
        }
    }
    out.sort_by(|a, b| {
        a.order
            .cmp(&b.order)
            .then_with(|| a.elems.indices().cmp(&b.elems.indices()))
    });
    Ok(out
        .into_iter()
        .map(|d| SubgroupHandle::from_data(g, d))
        .collect())
}

/// Images of the parent's generators acting on the right cosets of `h`,
/// one permutation of degree `[G:H]` per generator. The kernel of this
/// action is the core of `h`.
pub fn coset_action_generators(
    g: &FiniteGroup,
    h: &SubgroupHandle<'_>,
) -> Result<Vec<Permutation>, SubgroupError> {
    let table = g.table()?;
    let size = table.n;
    let mut coset_of: Vec<u16> = vec![u16::MAX; size];
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..size {
        if coset_of[x] != u16::MAX {
            continue;
        }
        let id = reps.len() as u16;
        reps.push(x);
        for m in h.element_indices().iter() {
            coset_of[table.mul(m, x)] = id;
        }
    }
    debug_assert_eq!(reps.len() as u64, h.index());
    let mut gens = Vec::new();
    for gen in g.generators() {
        let gi = g.element_index(gen).expect("generator is an element");
        let images: Vec<usize> = reps
            .iter()
            .map(|&r| coset_of[table.mul(r, gi)] as usize + 1)
            .collect();
        gens.push(Permutation::from_images_one_based(&images).expect("coset action"));
    }
    Ok(gens)
}

/// Permutation group induced by the action of `g` on the right cosets of a
/// normal subgroup; its order is the index.
pub fn quotient(g: &FiniteGroup, n: &SubgroupHandle<'_>) -> Result<FiniteGroup, SubgroupError> {
    if !std::ptr::eq(g, n.parent()) {
        // A handle from a different parent is never normal here.
        return Err(SubgroupError::NotNormal);
    }
    if !n.is_normal() {
        return Err(SubgroupError::NotNormal);
    }
    let gens = coset_action_generators(g, n)?;
    let q = FiniteGroup::generate(gens)?;
    debug_assert_eq!(q.order(), n.index());
    Ok(q)
}

/// A Sylow `p`-subgroup, found by greedy normalizer-guided extension.
/// Returns the trivial subgroup when `p` does not divide the group order.
pub fn sylow<'g>(g: &'g FiniteGroup, p: u64) -> Result<SubgroupHandle<'g>, SubgroupError> {
    if !is_prime(p) {
        return Err(SubgroupError::NotPrime(p));
    }
    let table = g.table()?;
    let mut target = 1u64;
    let mut rest = g.order();
    while rest % p == 0 {
        rest /= p;
        target *= p;
    }
    let mut current = SubgroupData {
        elems: ElemSet::singleton(table.n, 0),
        gens: vec![],
        order: 1,
    };
    while (current.order as u64) < target {
        let next = (0..table.n)
            .find(|&y| {
                if current.elems.contains(y) {
                    return false;
                }
                let o = table.orders[y] as u64;
                if !is_p_power(o, p) {
                    return false;
                }
                // y must normalize the current subgroup and have p-th power
                // inside it, so the extension is a p-group of order p * |S|.
                let normalizes = current
                    .gens
                    .iter()
                    .all(|&s| current.elems.contains(table.conj(s as usize, y)));
                if !normalizes {
                    return false;
                }
                let mut pw = y;
                for _ in 1..p {
                    pw = table.mul(pw, y);
                }
                current.elems.contains(pw)
            })
            .expect("a p-subgroup below Sylow order always extends");
        let mut ext = current.elems.clone();
        let mut shift = next;
        for _ in 0..p - 1 {
            for h in current.elems.iter() {
                ext.insert(table.mul(h, shift));
            }
            shift = table.mul(shift, next);
        }
        let mut gens = current.gens.clone();
        gens.push(next as u16);
        current = SubgroupData {
            order: ext.len() as u32,
            elems: ext,
            gens,
        };
    }
    let gens = extract_generators(table, &current.elems);
    current.gens = gens;
    Ok(SubgroupHandle::from_data(g, current))
}

fn is_p_power(mut n: u64, p: u64) -> bool {
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

/// Maximal proper subgroups.
pub fn maximal_subgroups(g: &FiniteGroup) -> Result<Vec<SubgroupHandle<'_>>, SubgroupError> {
    let all = all_subgroups(g)?;
    let proper: Vec<&SubgroupHandle> = all.iter().filter(|h| !h.is_whole_group()).collect();
    let mut out = Vec::new();
    for h in &proper {
        let dominated = proper.iter().any(|k| {
            k.order() > h.order() && h.element_indices().is_subset_of(k.element_indices())
        });
        if !dominated {
            out.push((*h).clone());
        }
    }
    Ok(out)
}

/// The center as a subgroup handle.
pub fn center(g: &FiniteGroup) -> Result<SubgroupHandle<'_>, SubgroupError> {
    let table = g.table()?;
    let mut set = ElemSet::empty(table.n);
    for x in 0..table.n {
        if (0..table.n).all(|y| table.commutes(x, y)) {
            set.insert(x);
        }
    }
    let gens = extract_generators(table, &set);
    Ok(SubgroupHandle::from_data(
        g,
        SubgroupData {
            order: set.len() as u32,
            elems: set,
            gens,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{alternating, cyclic, dihedral, symmetric};

    /// Independent oracle: closures of all generating sets of size <= 2.
    /// Valid for groups whose subgroups are all 2-generated.
    fn subgroup_count_by_pair_closure(g: &FiniteGroup) -> usize {
        let table = g.table().unwrap();
        let n = table.n;
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(vec![0]);
        for a in 0..n {
            for b in a..n {
                let set = closure_of(table, &[a, b]);
                seen.insert(set.indices());
            }
        }
        seen.len()
    }

    #[test]
    fn prime_order_has_two_subgroups() {
        let g = cyclic(7).unwrap();
        assert_eq!(all_subgroups(&g).unwrap().len(), 2);
    }

    #[test]
    fn s4_has_thirty_subgroups() {
        let g = symmetric(4).unwrap();
        assert_eq!(subgroup_count_by_pair_closure(&g), 30);
        let subs = all_subgroups(&g).unwrap();
        assert_eq!(subs.len(), 30);
        for h in &subs {
            assert_eq!(g.order() % h.order(), 0, "Lagrange");
            assert_eq!(h.order() * h.index(), g.order());
        }
    }

    #[test]
    fn a4_has_ten_subgroups() {
        let g = alternating(4).unwrap();
        assert_eq!(subgroup_count_by_pair_closure(&g), 10);
        assert_eq!(all_subgroups(&g).unwrap().len(), 10);
    }

    #[test]
    fn cyclic_subgroup_lattice_of_c6() {
        let g = cyclic(6).unwrap();
        let subs = cyclic_subgroups(&g).unwrap();
        let orders: Vec<u64> = subs.iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
    }

    #[test]
    fn max_cyclic_order_in_a4() {
        let g = alternating(4).unwrap();
        let m = cyclic_subgroups(&g)
            .unwrap()
            .iter()
            .map(|h| h.order())
            .max()
            .unwrap();
        assert_eq!(m, 3);
    }

    #[test]
    fn core_of_normal_subgroup_is_itself() {
        let g = symmetric(4).unwrap();
        for h in all_subgroups(&g).unwrap() {
            if h.is_normal() {
                let core = h.core();
                assert_eq!(core.order(), h.order());
            }
        }
    }

    #[test]
    fn core_of_four_cycle_in_s4_is_trivial() {
        // Oracle: scan the 30 subgroups for the cyclic one of order 4 and
        // intersect conjugates by hand.
        let g = symmetric(4).unwrap();
        let four_cycle = crate::perm::Permutation::parse_with_degree("(1 2 3 4)", 4).unwrap();
        let h = subgroup_from_generators(&g, &[four_cycle]).unwrap();
        assert_eq!(h.order(), 4);
        let core = h.core();
        assert_eq!(core.order(), 1);
        // Lucchini shape on this pair: |A : K| = 4 < 6 = |G : A|.
        assert!(h.order() / core.order() < h.index());
    }

    #[test]
    fn quotient_by_whole_group_is_trivial() {
        let g = symmetric(3).unwrap();
        let whole = all_subgroups(&g)
            .unwrap()
            .into_iter()
            .find(|h| h.is_whole_group())
            .unwrap();
        let q = quotient(&g, &whole).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn s4_mod_v4_is_s3() {
        let g = symmetric(4).unwrap();
        let v4 = all_subgroups(&g)
            .unwrap()
            .into_iter()
            .find(|h| h.order() == 4 && h.is_normal())
            .unwrap();
        let q = quotient(&g, &v4).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        assert!(crate::classify::is_isomorphic(&q, &symmetric(3).unwrap()).unwrap());
    }

    #[test]
    fn quotient_requires_normality() {
        let g = symmetric(3).unwrap();
        let h = all_subgroups(&g)
            .unwrap()
            .into_iter()
            .find(|h| h.order() == 2)
            .unwrap();
        assert!(!h.is_normal());
        assert!(matches!(quotient(&g, &h), Err(SubgroupError::NotNormal)));
    }

    #[test]
    fn sylow_examples() {
        let c12 = cyclic(12).unwrap();
        let p3 = sylow(&c12, 3).unwrap();
        assert_eq!(p3.order(), 3);

        let a4 = alternating(4).unwrap();
        let p2 = sylow(&a4, 2).unwrap();
        assert_eq!(p2.order(), 4);
        assert!(p2.is_normal());

        let s4 = symmetric(4).unwrap();
        let p2 = sylow(&s4, 2).unwrap();
        assert_eq!(p2.order(), 8);
        assert!(!p2.is_normal());
        // Oracle: the full lattice contains exactly 3 subgroups of order 8.
        let count8 = all_subgroups(&s4)
            .unwrap()
            .iter()
            .filter(|h| h.order() == 8)
            .count();
        assert_eq!(count8, 3);

        let t = sylow(&s4, 5).unwrap();
        assert!(t.is_trivial());
        assert!(matches!(sylow(&s4, 4), Err(SubgroupError::NotPrime(4))));
    }

    #[test]
    fn maximal_subgroups_examples() {
        let cp = cyclic(5).unwrap();
        let m = maximal_subgroups(&cp).unwrap();
        assert_eq!(m.len(), 1);
        assert!(m[0].is_trivial());

        let a4 = alternating(4).unwrap();
        let mut idxs: Vec<u64> = maximal_subgroups(&a4)
            .unwrap()
            .iter()
            .map(|h| h.index())
            .collect();
        idxs.sort_unstable();
        idxs.dedup();
        assert_eq!(idxs, vec![3, 4]);
    }

    #[test]
    fn subgroup_listing_is_deterministic() {
        let g = dihedral(6).unwrap();
        let a: Vec<(u64, Vec<usize>)> = all_subgroups(&g)
            .unwrap()
            .iter()
            .map(|h| (h.order(), h.element_indices().indices()))
            .collect();
        let g2 = dihedral(6).unwrap();
        let b: Vec<(u64, Vec<usize>)> = all_subgroups(&g2)
            .unwrap()
            .iter()
            .map(|h| (h.order(), h.element_indices().indices()))
            .collect();
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn enumeration_bound_is_enforced() {
        let g = cyclic(520).unwrap();
        assert!(matches!(
            all_subgroups(&g),
            Err(SubgroupError::BoundExceeded { .. })
        ));
    }

    #[test]
    fn center_examples() {
        let s3 = symmetric(3).unwrap();
        assert_eq!(center(&s3).unwrap().order(), 1);
        let d4 = dihedral(4).unwrap();
        assert_eq!(center(&d4).unwrap().order(), 2);
        let c6 = cyclic(6).unwrap();
        assert_eq!(center(&c6).unwrap().order(), 6);
    }
}
