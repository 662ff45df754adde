//! Structural predicates (solvable, nilpotent, supersolvable) and
//! isomorphism testing at desk scale.

use std::collections::HashMap;

use crate::factor::{is_prime, FactoredInteger};
use crate::group::{ElementTable, FiniteGroup};
use crate::perm::Permutation;
use crate::subgroup::{
    self, closure_of, extract_generators, maximal_subgroups, quotient, ElemSet, SubgroupData,
    SubgroupError, SubgroupHandle,
};

/// Largest order accepted by [`is_isomorphic`].
pub const ISOMORPHISM_BOUND: u64 = 512;

/// Commutator subgroup, as a group in its own right: the normal closure of
/// the generator commutators.
pub fn derived_subgroup(g: &FiniteGroup) -> Result<FiniteGroup, SubgroupError> {
    let gens = g.generators();
    let mut seeds: Vec<Permutation> = vec![g.identity()];
    for a in gens {
        for b in gens {
            let comm = &(&(&a.inverse() * &b.inverse()) * a) * b;
            if !comm.is_identity() {
                seeds.push(comm);
            }
        }
    }
    let mut derived = FiniteGroup::generate(seeds.clone())?;
    // Close under conjugation by the parent's generators.
    loop {
        let mut grew = false;
        for s in seeds.clone() {
            for t in gens {
                let conj = &(&t.inverse() * &s) * t;
                if !derived.contains(&conj) {
                    seeds.push(conj);
                    derived = FiniteGroup::generate(seeds.clone())?;
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(derived);
        }
    }
}

/// Derived series reaches the trivial group.
pub fn is_solvable(g: &FiniteGroup) -> Result<bool, SubgroupError> {
    let mut current = g.clone();
    loop {
        if current.order() == 1 {
            return Ok(true);
        }
        let next = derived_subgroup(&current)?;
        if next.order() == current.order() {
            return Ok(false);
        }
        current = next;
    }
}

/// Nilpotent iff for every prime `p` dividing the order, the `p`-elements
/// are exactly a Sylow subgroup's worth: their count equals the `p`-part of
/// the order. That forces each Sylow subgroup to be unique, hence normal.
pub fn is_nilpotent(g: &FiniteGroup) -> Result<bool, SubgroupError> {
    let n = FactoredInteger::factor(g.order()).expect("group orders are factorable");
    let elems = g.elements().map_err(SubgroupError::from)?;
    for &(p, a) in n.factors() {
        let p_part = p.pow(a);
        let count = elems
            .iter()
            .filter(|x| {
                let mut o = x.order_u64();
                while o % p == 0 {
                    o /= p;
                }
                o == 1
            })
            .count() as u64;
        if count != p_part {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Supersolvable iff every chief factor has prime order.
///
/// Primary algorithm: walk a chief series, peeling a minimal normal
/// subgroup from each successive quotient and checking it has prime order.
/// Nonsolvable groups return false immediately (supersolvable groups are
/// solvable). For orders up to 512 a mandatory necessary-condition screen
/// runs on positive answers: the group is solvable and every maximal
/// subgroup has prime index. The screen is not sufficient, so the chief
/// series verdict is authoritative; a screen failure on a positive answer
/// is an internal inconsistency and panics.
pub fn is_supersolvable(g: &FiniteGroup) -> Result<bool, SubgroupError> {
    let verdict = supersolvable_by_chief_series(g)?;
    if verdict && g.order() <= subgroup::SUBGROUP_ENUMERATION_BOUND {
        let screen = is_solvable(g)?
            && maximal_subgroups(g)?
                .iter()
                .all(|m| is_prime(m.index()));
        assert!(
            screen,
            "maximal-subgroup screen contradicts the chief series on a group of order {}",
            g.order()
        );
    }
    Ok(verdict)
}

fn supersolvable_by_chief_series(g: &FiniteGroup) -> Result<bool, SubgroupError> {
    if !is_solvable(g)? {
        return Ok(false);
    }
    let mut q = g.clone();
    while q.order() > 1 {
        let next = {
            let m = minimal_normal_subgroup(&q)?;
            if !is_prime(m.order()) {
                return Ok(false);
            }
            quotient(&q, &m)?
        };
        q = next;
    }
    Ok(true)
}

/// A minimal normal subgroup: the smallest normal closure of a prime-order
/// element. Any minimal normal subgroup contains a prime-order element
/// whose closure it equals, so the size-minimal closure is minimal normal.
pub fn minimal_normal_subgroup(g: &FiniteGroup) -> Result<SubgroupHandle<'_>, SubgroupError> {
    let table = g.table()?;
    let gen_idx: Vec<usize> = g
        .generators()
        .iter()
        .map(|p| g.element_index(p).expect("generators are elements"))
        .collect();
    let mut best: Option<ElemSet> = None;
    for x in 1..table.n {
        if !is_prime(table.orders[x] as u64) {
            continue;
        }
        if let Some(b) = &best {
            if b.contains(x) && b.len() == table.orders[x] as usize {
                continue;
            }
        }
        let ncl = normal_closure(table, &gen_idx, x);
        if best.as_ref().map_or(true, |b| ncl.len() < b.len()) {
            best = Some(ncl);
        }
    }
    let set = best.expect("nontrivial group has a prime-order element");
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

fn normal_closure(table: &ElementTable, group_gens: &[usize], x: usize) -> ElemSet {
    let mut gens = vec![x];
    let mut set = closure_of(table, &gens);
    loop {
        let mut grew = false;
        for s in set.indices() {
            for &t in group_gens {
                let c = table.conj(s, t);
                if !set.contains(c) {
                    gens.push(c);
                    set = closure_of(table, &gens);
                    grew = true;
                }
            }
        }
        if !grew {
            return set;
        }
    }
}

fn fnv(parts: &[u64]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &p in parts {
        for byte in p.to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

/// Per-element isomorphism-invariant signatures refined from
/// (order, class size) through the power maps until stable.
fn element_signatures(table: &ElementTable) -> Vec<u64> {
    let n = table.n;
    let class_of = conjugacy_classes(table);
    let mut class_size = vec![0u32; n];
    for &c in &class_of {
        class_size[c as usize] += 1;
    }
    let mut sig: Vec<u64> = (0..n)
        .map(|x| {
            fnv(&[
                table.orders[x] as u64,
                class_size[class_of[x] as usize] as u64,
            ])
        })
        .collect();
    let mut distinct = count_distinct(&sig);
    loop {
        let next: Vec<u64> = (0..n)
            .map(|x| {
                let x2 = table.mul(x, x);
                let x3 = table.mul(x2, x);
                let x5 = table.mul(table.mul(x3, x), x);
                let x7 = table.mul(table.mul(x5, x), x);
                fnv(&[sig[x], sig[x2], sig[x3], sig[x5], sig[x7]])
            })
            .collect();
        let d = count_distinct(&next);
        sig = next;
        if d == distinct {
            return sig;
        }
        distinct = d;
    }
}

fn count_distinct(v: &[u64]) -> usize {
    let mut s: Vec<u64> = v.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len()
}

/// Conjugacy class id per element (ids in order of least member).
fn conjugacy_classes(table: &ElementTable) -> Vec<u16> {
    let n = table.n;
    let mut class_of = vec![u16::MAX; n];
    let mut next = 0u16;
    for x in 0..n {
        if class_of[x] != u16::MAX {
            continue;
        }
        let id = next;
        next += 1;
        let mut stack = vec![x];
        class_of[x] = id;
        while let Some(y) = stack.pop() {
            for h in 0..n {
                let c = table.conj(y, h);
                if class_of[c] == u16::MAX {
                    class_of[c] = id;
                    stack.push(c);
                }
            }
        }
    }
    class_of
}

/// Cheap isomorphism invariants used to screen pairs before the
/// backtracking search. Equal fingerprints do not imply isomorphism;
/// unequal fingerprints certify non-isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoFingerprint {
    order: u64,
    class_profile: Vec<(u64, u32)>,
    center_size: u32,
    derived_size: u32,
    abelianization: Vec<(u64, u32)>,
    exponent: u64,
}

pub fn iso_fingerprint(g: &FiniteGroup) -> Result<IsoFingerprint, SubgroupError> {
    let table = g.table()?;
    let n = table.n;
    let sig = element_signatures(table);
    let mut profile: HashMap<u64, u32> = HashMap::new();
    for &s in &sig {
        *profile.entry(s).or_insert(0) += 1;
    }
    let mut class_profile: Vec<(u64, u32)> = profile.into_iter().collect();
    class_profile.sort_unstable();

    let center_size = (0..n)
        .filter(|&x| (0..n).all(|y| table.commutes(x, y)))
        .count() as u32;

    let derived = derived_set(table);
    let derived_size = derived.len() as u32;

    // Order multiset of the quotient by the derived subgroup.
    let mut ab: HashMap<u64, u32> = HashMap::new();
    for x in 0..n {
        let mut pw = x;
        let mut k = 1u64;
        while !derived.contains(pw) {
            pw = table.mul(pw, x);
            k += 1;
        }
        *ab.entry(k).or_insert(0) += 1;
    }
    let mut abelianization: Vec<(u64, u32)> = ab.into_iter().collect();
    abelianization.sort_unstable();
    // Each coset is counted |derived| times.
    for entry in &mut abelianization {
        entry.1 /= derived_size;
    }

    let exponent = table
        .orders
        .iter()
        .fold(1u64, |acc, &o| num_integer::lcm(acc, o as u64));

    Ok(IsoFingerprint {
        order: g.order(),
        class_profile,
        center_size,
        derived_size,
        abelianization,
        exponent,
    })
}

pub(crate) fn derived_set(table: &ElementTable) -> ElemSet {
    let n = table.n;
    let mut comms = ElemSet::empty(n);
    for x in 0..n {
        for y in 0..n {
            let c = table.mul(
                table.mul(table.inv(x), table.inv(y)),
                table.mul(x, y),
            );
            comms.insert(c);
        }
    }
    let gens: Vec<usize> = comms.indices();
    closure_of(table, &gens)
}

/// Backtracking isomorphism test: maps a generating sequence of `a` onto
/// signature-matched elements of `b`, extending each partial assignment to
/// a product-consistent injection. Pruned by the fingerprint screen and by
/// per-element signatures.
pub fn is_isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> Result<bool, SubgroupError> {
    if a.order() != b.order() {
        return Ok(false);
    }
    if a.order() > ISOMORPHISM_BOUND {
        return Err(SubgroupError::BoundExceeded {
            order: a.order(),
            bound: ISOMORPHISM_BOUND,
        });
    }
    if a.order() == 1 {
        return Ok(true);
    }
    if iso_fingerprint(a)? != iso_fingerprint(b)? {
        return Ok(false);
    }
    let ta = a.table()?;
    let tb = b.table()?;
    let sig_a = element_signatures(ta);
    let sig_b = element_signatures(tb);
    let class_b = conjugacy_classes(tb);
    Ok(IsoSearch::new(ta, tb, &sig_a, &sig_b, &class_b).run())
}

struct IsoSearch<'a> {
    a: &'a ElementTable,
    b: &'a ElementTable,
    sig_a: &'a [u64],
    sig_b: &'a [u64],
    /// candidates per signature on the b side.
    by_sig: HashMap<u64, Vec<u16>>,
    /// first element of each b-conjugacy class, per signature.
    class_reps_by_sig: HashMap<u64, Vec<u16>>,
    gen_seq: Vec<u16>,
    map: Vec<u16>,
    used: Vec<bool>,
    known: Vec<u16>,
}

const UNSET: u16 = u16::MAX;

impl<'a> IsoSearch<'a> {
    fn new(
        a: &'a ElementTable,
        b: &'a ElementTable,
        sig_a: &'a [u64],
        sig_b: &'a [u64],
        class_b: &'a [u16],
    ) -> IsoSearch<'a> {
        let n = a.n;
        let mut by_sig: HashMap<u64, Vec<u16>> = HashMap::new();
        for (i, &s) in sig_b.iter().enumerate() {
            by_sig.entry(s).or_default().push(i as u16);
        }
        let mut seen_class: Vec<bool> = vec![false; n];
        let mut class_reps_by_sig: HashMap<u64, Vec<u16>> = HashMap::new();
        for (i, &s) in sig_b.iter().enumerate() {
            let c = class_b[i] as usize;
            if !seen_class[c] {
                seen_class[c] = true;
                class_reps_by_sig.entry(s).or_default().push(i as u16);
            }
        }
        // Greedy generating sequence; each step minimizes the candidate
        // count on the b side.
        let mut gen_seq = Vec::new();
        let mut closed = ElemSet::singleton(n, 0);
        while closed.len() < n {
            let x = (0..n)
                .filter(|&x| !closed.contains(x))
                .min_by_key(|&x| {
                    let cands = by_sig.get(&sig_a[x]).map_or(0, |v| v.len());
                    (cands, x)
                })
                .expect("closure is proper");
            gen_seq.push(x as u16);
            let idxs: Vec<usize> = closed.indices();
            let mut gens: Vec<usize> = idxs;
            gens.push(x);
            closed = closure_of(a, &gens);
        }
        let mut map = vec![UNSET; n];
        let mut used = vec![false; n];
        map[0] = 0;
        used[0] = true;
        IsoSearch {
            a,
            b,
            sig_a,
            sig_b,
            by_sig,
            class_reps_by_sig,
            gen_seq,
            map,
            used,
            known: vec![0],
        }
    }

    fn run(&mut self) -> bool {
        self.search(0)
    }

    fn search(&mut self, pos: usize) -> bool {
        if self.known.len() == self.a.n {
            return true;
        }
        let x = self.gen_seq[pos];
        if self.map[x as usize] != UNSET {
            // Closure already absorbed this generator; move on.
            return self.search(pos + 1);
        }
        let sig = self.sig_a[x as usize];
        let candidates = if pos == 0 {
            self.class_reps_by_sig.get(&sig).cloned().unwrap_or_default()
        } else {
            self.by_sig.get(&sig).cloned().unwrap_or_default()
        };
        for y in candidates {
            if self.used[y as usize] {
                continue;
            }
            let checkpoint = self.known.len();
            if self.assign(x, y) && self.close_from(checkpoint) && self.search(pos + 1) {
                return true;
            }
            self.rollback(checkpoint);
        }
        false
    }

    fn assign(&mut self, x: u16, y: u16) -> bool {
        if self.sig_a[x as usize] != self.sig_b[y as usize] {
            return false;
        }
        self.map[x as usize] = y;
        self.used[y as usize] = true;
        self.known.push(x);
        true
    }

    fn close_from(&mut self, start: usize) -> bool {
        let mut idx = start;
        while idx < self.known.len() {
            let xn = self.known[idx] as usize;
            for t in 0..=idx {
                let xo = self.known[t] as usize;
                for (p, q) in [(xn, xo), (xo, xn)] {
                    let pa = self.a.mul(p, q);
                    let pb = self.b.mul(
                        self.map[p] as usize,
                        self.map[q] as usize,
                    );
                    let cur = self.map[pa];
                    if cur != UNSET {
                        if cur as usize != pb {
                            return false;
                        }
                    } else {
                        if self.used[pb] || self.sig_a[pa] != self.sig_b[pb] {
                            return false;
                        }
                        self.map[pa] = pb as u16;
                        self.used[pb] = true;
                        self.known.push(pa as u16);
                    }
                }
            }
            idx += 1;
        }
        true
    }

    fn rollback(&mut self, checkpoint: usize) {
        while self.known.len() > checkpoint {
            let x = self.known.pop().expect("nonempty");
            let y = self.map[x as usize];
            self.map[x as usize] = UNSET;
            self.used[y as usize] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{alternating, cyclic, dihedral, direct_product, symmetric};

    #[test]
    fn solvability_basics() {
        assert!(is_solvable(&alternating(4).unwrap()).unwrap());
        assert!(is_solvable(&cyclic(100).unwrap()).unwrap());
        assert!(is_solvable(&symmetric(4).unwrap()).unwrap());
        assert!(!is_solvable(&alternating(5).unwrap()).unwrap());
    }

    #[test]
    fn nilpotency_basics() {
        assert!(is_nilpotent(&cyclic(12).unwrap()).unwrap());
        assert!(is_nilpotent(&dihedral(4).unwrap()).unwrap()); // 2-group
        assert!(!is_nilpotent(&alternating(4).unwrap()).unwrap());
        assert!(!is_nilpotent(&symmetric(3).unwrap()).unwrap());
    }

    #[test]
    fn the_order_32_fixture_is_a_nilpotent_2_group() {
        let g = crate::constructors::fixture_group("SmallGroup(32,7)").unwrap();
        assert!(is_nilpotent(&g).unwrap());
        assert!(is_supersolvable(&g).unwrap());
    }

    #[test]
    fn supersolvability_basics() {
        // Nilpotent groups are supersolvable.
        assert!(is_supersolvable(&cyclic(24).unwrap()).unwrap());
        assert!(is_supersolvable(&dihedral(4).unwrap()).unwrap());
        // Dihedral groups are supersolvable but not nilpotent in general.
        assert!(is_supersolvable(&dihedral(6).unwrap()).unwrap());
        assert!(!is_supersolvable(&alternating(4).unwrap()).unwrap());
        assert!(!is_supersolvable(&symmetric(4).unwrap()).unwrap());
        assert!(!is_supersolvable(&alternating(5).unwrap()).unwrap());
    }

    #[test]
    fn derived_series_of_s4() {
        let s4 = symmetric(4).unwrap();
        let d1 = derived_subgroup(&s4).unwrap();
        assert_eq!(d1.order(), 12); // A4
        let d2 = derived_subgroup(&d1).unwrap();
        assert_eq!(d2.order(), 4); // V4
        let d3 = derived_subgroup(&d2).unwrap();
        assert_eq!(d3.order(), 1);
    }

    #[test]
    fn minimal_normal_subgroup_of_a4_is_v4() {
        let a4 = alternating(4).unwrap();
        let m = minimal_normal_subgroup(&a4).unwrap();
        assert_eq!(m.order(), 4);
        assert!(m.is_normal());
    }

    #[test]
    fn isomorphism_reflexive() {
        let g = symmetric(4).unwrap();
        assert!(is_isomorphic(&g, &g).unwrap());
    }

    #[test]
    fn c4_is_not_v4() {
        let c4 = cyclic(4).unwrap();
        let c2 = cyclic(2).unwrap();
        let v4 = direct_product(&c2, &c2).unwrap();
        assert!(!is_isomorphic(&c4, &v4).unwrap());
    }

    #[test]
    fn quotient_of_s4_by_v4_is_s3() {
        let s4 = symmetric(4).unwrap();
        let v4 = subgroup::all_subgroups(&s4)
            .unwrap()
            .into_iter()
            .find(|h| h.order() == 4 && h.is_normal())
            .unwrap();
        let q = quotient(&s4, &v4).unwrap();
        assert!(is_isomorphic(&q, &symmetric(3).unwrap()).unwrap());
    }

    #[test]
    fn isomorphism_finds_nonobvious_pairs() {
        // Two presentations of the dihedral group of order 12.
        let d6 = dihedral(6).unwrap();
        let c2 = cyclic(2).unwrap();
        let prod = direct_product(&c2, &symmetric(3).unwrap()).unwrap();
        assert!(is_isomorphic(&d6, &prod).unwrap());
        // Same order, different groups.
        assert!(!is_isomorphic(&d6, &cyclic(12).unwrap()).unwrap());
        assert!(!is_isomorphic(&d6, &alternating(4).unwrap()).unwrap());
    }

    #[test]
    fn isomorphism_symmetry_on_equal_order_pairs() {
        let groups = [
            dihedral(4).unwrap(),
            cyclic(8).unwrap(),
            direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap()).unwrap(),
        ];
        for x in &groups {
            for y in &groups {
                assert_eq!(
                    is_isomorphic(x, y).unwrap(),
                    is_isomorphic(y, x).unwrap()
                );
            }
        }
    }

    #[test]
    fn isomorphism_bound_enforced() {
        let a = cyclic(600).unwrap();
        let b = cyclic(600).unwrap();
        assert!(matches!(
            is_isomorphic(&a, &b),
            Err(SubgroupError::BoundExceeded { .. })
        ));
    }

    #[test]
    fn fingerprints_separate_same_order_multiset_pairs() {
        // D4 and Q8 share the order multiset? No: Q8 has 6 elements of
        // order 4, D4 has 2. Use C4 x C2 vs D4 instead? Those differ in
        // abelianness; the fingerprint must separate them.
        let d4 = dihedral(4).unwrap();
        let c4xc2 = direct_product(&cyclic(4).unwrap(), &cyclic(2).unwrap()).unwrap();
        assert_ne!(
            iso_fingerprint(&d4).unwrap(),
            iso_fingerprint(&c4xc2).unwrap()
        );
    }
}
