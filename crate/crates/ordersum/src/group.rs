//! Finite permutation groups: generation, order computation, element
//! enumeration, and a dense multiplication-table view for small orders.
//!
//! The order of a generated group is computed two independent ways: a
//! base-and-strong-generating-set stabilizer chain (always, at
//! construction) and exhaustive closure (on demand, when elements are
//! enumerated). The two are compared in the test suite.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use thiserror::Error;

use crate::perm::Permutation;

/// Largest group for which `elements()` will materialize the element list.
pub const ELEMENT_CACHE_BOUND: u64 = 1_000_000;

/// Largest group for which a dense multiplication table is built.
pub(crate) const TABLE_BOUND: u64 = 1024;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator list is empty")]
    EmptyGenerators,
    #[error("generator degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("group order {order} exceeds the element cache bound {bound}")]
    ElementBoundExceeded { order: u64, bound: u64 },
    #[error("group order {order} exceeds the multiplication table bound {bound}")]
    TableBoundExceeded { order: u64, bound: u64 },
}

/// A finite permutation group given by generators.
///
/// Immutable after construction; the element list and multiplication table
/// are computed once on demand behind [`OnceLock`] guards, so a group can be
/// shared freely across concurrent readers.
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    order: u64,
    bsgs: Bsgs,
    elements: OnceLock<Vec<Permutation>>,
    table: OnceLock<ElementTable>,
    subgroups: OnceLock<Vec<crate::subgroup::SubgroupData>>,
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            order: self.order,
            bsgs: self.bsgs.clone(),
            elements: self.elements.clone(),
            table: self.table.clone(),
            subgroups: self.subgroups.clone(),
        }
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Generates the group spanned by `generators`.
    ///
    /// The order is computed from a stabilizer chain; exhaustive closure is
    /// available separately via [`FiniteGroup::elements`].
    pub fn generate(generators: Vec<Permutation>) -> Result<FiniteGroup, GroupError> {
        if generators.is_empty() {
            return Err(GroupError::EmptyGenerators);
        }
        let degree = generators[0].degree();
        for g in &generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch(degree, g.degree()));
            }
        }
        let bsgs = Bsgs::build(degree, &generators);
        let order = bsgs.order();
        Ok(FiniteGroup {
            degree,
            generators,
            order,
            bsgs,
            elements: OnceLock::new(),
            table: OnceLock::new(),
            subgroups: OnceLock::new(),
        })
    }

    /// The trivial group on `degree` points.
    pub fn trivial(degree: usize) -> FiniteGroup {
        let id = Permutation::identity(degree).expect("degree >= 1");
        FiniteGroup::generate(vec![id]).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Group order from the stabilizer chain.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree).expect("degree >= 1")
    }

    /// Membership test by sifting through the stabilizer chain.
    pub fn contains(&self, p: &Permutation) -> bool {
        p.degree() == self.degree && self.bsgs.contains(p)
    }

    /// All elements, sorted lexicographically on image sequences.
    ///
    /// Fails loudly once the group order exceeds [`ELEMENT_CACHE_BOUND`]
    /// rather than degrading silently.
    pub fn elements(&self) -> Result<&[Permutation], GroupError> {
        if self.order > ELEMENT_CACHE_BOUND {
            return Err(GroupError::ElementBoundExceeded {
                order: self.order,
                bound: ELEMENT_CACHE_BOUND,
            });
        }
        Ok(self.elements.get_or_init(|| {
            let mut elems = closure(self.degree, &self.generators);
            elems.sort_unstable();
            debug_assert_eq!(elems.len() as u64, self.order, "closure vs chain order");
            elems
        }))
    }

    /// Order recomputed by exhaustive closure, independent of the chain.
    pub fn order_by_closure(&self) -> Result<u64, GroupError> {
        Ok(self.elements()?.len() as u64)
    }

    pub fn is_abelian(&self) -> bool {
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                if a * b != b * a {
                    return false;
                }
            }
        }
        true
    }

    /// True when some element has order equal to the group order.
    pub fn is_cyclic(&self) -> Result<bool, GroupError> {
        if self.order == 1 {
            return Ok(true);
        }
        // Cheap positive: a generator of full order settles it.
        if self
            .generators
            .iter()
            .any(|p| p.order_u64() == self.order)
        {
            return Ok(true);
        }
        Ok(self
            .elements()?
            .iter()
            .any(|p| p.order_u64() == self.order))
    }

    /// Dense multiplication-table view for small groups.
    pub(crate) fn table(&self) -> Result<&ElementTable, GroupError> {
        if self.order > TABLE_BOUND {
            return Err(GroupError::TableBoundExceeded {
                order: self.order,
                bound: TABLE_BOUND,
            });
        }
        let elems = self.elements()?;
        Ok(self
            .table
            .get_or_init(|| ElementTable::build(elems)))
    }

    pub(crate) fn subgroup_cache(&self) -> &OnceLock<Vec<crate::subgroup::SubgroupData>> {
        &self.subgroups
    }

    /// Index of a permutation within the sorted element list.
    pub(crate) fn element_index(&self, p: &Permutation) -> Option<usize> {
        let elems = self.elements().ok()?;
        elems.binary_search(p).ok()
    }
}

/// Breadth-first closure of a generating set.
fn closure(degree: usize, generators: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(degree).expect("degree >= 1");
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    let mut head = 0;
    while head < queue.len() {
        let cur = queue[head].clone();
        head += 1;
        for g in generators {
            let next = &cur * g;
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    queue
}

/// Stabilizer chain: base points with per-level strong generators, orbits,
/// and transversals. Built with a deterministic Schreier-Sims that
/// re-verifies every level until all Schreier generators sift to identity.
#[derive(Clone)]
struct Bsgs {
    degree: usize,
    levels: Vec<BsgsLevel>,
}

#[derive(Clone)]
struct BsgsLevel {
    base_point: usize,
    gens: Vec<Permutation>,
    /// transversal[p] maps the base point to p.
    transversal: HashMap<usize, Permutation>,
}

impl BsgsLevel {
    fn new(degree: usize, base_point: usize) -> BsgsLevel {
        let mut transversal = HashMap::new();
        transversal.insert(
            base_point,
            Permutation::identity(degree).expect("degree >= 1"),
        );
        BsgsLevel {
            base_point,
            gens: Vec::new(),
            transversal,
        }
    }

    fn recompute_orbit(&mut self, degree: usize) {
        self.transversal.clear();
        self.transversal.insert(
            self.base_point,
            Permutation::identity(degree).expect("degree >= 1"),
        );
        let mut queue = vec![self.base_point];
        let mut head = 0;
        while head < queue.len() {
            let pt = queue[head];
            head += 1;
            let t = self.transversal[&pt].clone();
            for g in &self.gens {
                let im = g.image0(pt);
                if !self.transversal.contains_key(&im) {
                    self.transversal.insert(im, &t * g);
                    queue.push(im);
                }
            }
        }
    }
}

impl Bsgs {
    fn build(degree: usize, generators: &[Permutation]) -> Bsgs {
        let mut chain = Bsgs {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            if !g.is_identity() {
                chain.add_generator(g);
            }
        }
        chain.verify();
        chain
    }

    fn order(&self) -> u64 {
        self.levels
            .iter()
            .fold(1u64, |acc, l| acc * l.transversal.len() as u64)
    }

    /// Sifts `p` from `start` down the chain. Returns the residue and the
    /// level at which sifting stopped.
    fn strip(&self, p: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = p.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            if h.is_identity() {
                return (h, i);
            }
            let im = h.image0(level.base_point);
            match level.transversal.get(&im) {
                Some(t) => h = &h * &t.inverse(),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    fn contains(&self, p: &Permutation) -> bool {
        let (residue, _) = self.strip(p, 0);
        residue.is_identity()
    }

    /// Inserts a nontrivial element known to fix the first `j` base points,
    /// where `j` is where sifting stops.
    fn add_generator(&mut self, p: &Permutation) {
        let (residue, level) = self.strip(p, 0);
        if residue.is_identity() {
            return;
        }
        if level == self.levels.len() {
            let base = (0..self.degree)
                .find(|&pt| residue.image0(pt) != pt)
                .expect("non-identity residue moves a point");
            self.levels.push(BsgsLevel::new(self.degree, base));
        }
        // The residue fixes all earlier base points, so it is a valid strong
        // generator for every level up to `level`.
        for lvl in self.levels[..=level].iter_mut() {
            lvl.gens.push(residue.clone());
            lvl.recompute_orbit(self.degree);
        }
    }

    /// Re-examines Schreier generators until every one sifts to identity.
    fn verify(&mut self) {
        'outer: loop {
            for i in 0..self.levels.len() {
                let level = &self.levels[i];
                let orbit: Vec<usize> = {
                    let mut o: Vec<usize> = level.transversal.keys().copied().collect();
                    o.sort_unstable();
                    o
                };
                for pt in orbit {
                    let t = self.levels[i].transversal[&pt].clone();
                    for sidx in 0..self.levels[i].gens.len() {
                        let s = self.levels[i].gens[sidx].clone();
                        let ts = &t * &s;
                        let target = self.levels[i].transversal[&s.image0(pt)].clone();
                        if ts == target {
                            continue;
                        }
                        let schreier = &ts * &target.inverse();
                        let (residue, _) = self.strip(&schreier, i + 1);
                        if !residue.is_identity() {
                            self.add_generator(&schreier);
                            continue 'outer;
                        }
                    }
                }
            }
            return;
        }
    }
}

/// Dense group arithmetic over element indices, for orders up to
/// [`TABLE_BOUND`]. Index 0 is always the identity (it is lexicographically
/// least among image tables).
pub(crate) struct ElementTable {
    pub n: usize,
    /// mul[a * n + b] = index of elements[a] * elements[b].
    pub mul: Vec<u16>,
    pub inv: Vec<u16>,
    pub orders: Vec<u32>,
}

impl Clone for ElementTable {
    fn clone(&self) -> Self {
        ElementTable {
            n: self.n,
            mul: self.mul.clone(),
            inv: self.inv.clone(),
            orders: self.orders.clone(),
        }
    }
}

impl ElementTable {
    fn build(elems: &[Permutation]) -> ElementTable {
        let n = elems.len();
        let mut index: HashMap<&Permutation, u16> = HashMap::with_capacity(n);
        for (i, p) in elems.iter().enumerate() {
            index.insert(p, i as u16);
        }
        debug_assert!(elems[0].is_identity(), "identity must sort first");
        let mut mul = vec![0u16; n * n];
        for (a, pa) in elems.iter().enumerate() {
            for (b, pb) in elems.iter().enumerate() {
                let prod = pa * pb;
                mul[a * n + b] = *index.get(&prod).expect("closure is closed");
            }
        }
        let mut inv = vec![0u16; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == 0 {
                    inv[a] = b as u16;
                    break;
                }
            }
        }
        let mut orders = vec![0u32; n];
        for a in 0..n {
            let mut x = a as u16;
            let mut k = 1u32;
            while x != 0 {
                x = mul[x as usize * n + a];
                k += 1;
            }
            orders[a] = if a == 0 { 1 } else { k };
        }
        ElementTable { n, mul, inv, orders }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// a^h = h^-1 * a * h.
    #[inline]
    pub fn conj(&self, a: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), a), h)
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }
}
