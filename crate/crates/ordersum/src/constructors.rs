//! Named group constructions: cyclic, dihedral, symmetric, alternating,
//! direct and semidirect products, and the frozen fixture groups shipped
//! with the crate.

use std::collections::HashMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};
use crate::perm::Permutation;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("invalid order: {0}")]
    BadOrder(&'static str),
    #[error("combined order {0} exceeds the element cache bound")]
    ProductTooLarge(u128),
    #[error("action images do not extend to an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("action is not a homomorphism: expected order {expected}, generated {got}")]
    ActionOrderMismatch { expected: u64, got: u64 },
    #[error("unknown fixture group {0:?}")]
    UnknownFixture(String),
    #[error("fixture data invalid: {0}")]
    FixtureData(String),
}

/// Cyclic group of order `n`, generated by one `n`-cycle.
pub fn cyclic(n: u64) -> Result<FiniteGroup, ConstructError> {
    if n == 0 {
        return Err(ConstructError::BadOrder("cyclic group order must be >= 1"));
    }
    if n == 1 {
        return Ok(FiniteGroup::trivial(1));
    }
    let mut images: Vec<usize> = (2..=n as usize).collect();
    images.push(1);
    let c = Permutation::from_images_one_based(&images).expect("n-cycle");
    Ok(FiniteGroup::generate(vec![c])?)
}

/// Dihedral group of order `2n` (symmetries of the regular `n`-gon).
pub fn dihedral(n: u64) -> Result<FiniteGroup, ConstructError> {
    if n < 2 {
        return Err(ConstructError::BadOrder("dihedral requires n >= 2"));
    }
    if n == 2 {
        let a = Permutation::parse_with_degree("(1 2)", 4).expect("involution");
        let b = Permutation::parse_with_degree("(3 4)", 4).expect("involution");
        return Ok(FiniteGroup::generate(vec![a, b])?);
    }
    let n = n as usize;
    let mut rot: Vec<usize> = (2..=n).collect();
    rot.push(1);
    // Reflection fixing point 1: i -> 2 - i (mod n).
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n + 1).collect();
    let r = Permutation::from_images_one_based(&rot).expect("rotation");
    let f = Permutation::from_images_one_based(&refl).expect("reflection");
    Ok(FiniteGroup::generate(vec![r, f])?)
}

/// Symmetric group on `n` points.
pub fn symmetric(n: u64) -> Result<FiniteGroup, ConstructError> {
    match n {
        0 => Err(ConstructError::BadOrder("symmetric requires n >= 1")),
        1 => Ok(FiniteGroup::trivial(1)),
        _ => {
            let n = n as usize;
            let t = Permutation::parse_with_degree("(1 2)", n).expect("transposition");
            let mut cyc: Vec<usize> = (2..=n).collect();
            cyc.push(1);
            let c = Permutation::from_images_one_based(&cyc).expect("n-cycle");
            Ok(FiniteGroup::generate(vec![c, t])?)
        }
    }
}

/// Alternating group on `n` points.
pub fn alternating(n: u64) -> Result<FiniteGroup, ConstructError> {
    match n {
        0 => Err(ConstructError::BadOrder("alternating requires n >= 1")),
        1 | 2 => Ok(FiniteGroup::trivial(1)),
        3 => {
            let c = Permutation::parse_with_degree("(1 2 3)", 3).expect("3-cycle");
            Ok(FiniteGroup::generate(vec![c])?)
        }
        _ => {
            let n = n as usize;
            let a = Permutation::parse_with_degree("(1 2 3)", n).expect("3-cycle");
            let b = if n % 2 == 1 {
                // n odd: the n-cycle is even.
                let mut cyc: Vec<usize> = (2..=n).collect();
                cyc.push(1);
                Permutation::from_images_one_based(&cyc).expect("n-cycle")
            } else {
                // n even: use the (n-1)-cycle on points 2..n.
                let mut images: Vec<usize> = vec![1];
                images.extend(3..=n);
                images.push(2);
                Permutation::from_images_one_based(&images).expect("(n-1)-cycle")
            };
            Ok(FiniteGroup::generate(vec![a, b])?)
        }
    }
}

/// Direct product acting on the disjoint union of the factors' points.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup, ConstructError> {
    let combined = a.order() as u128 * b.order() as u128;
    if combined > crate::group::ELEMENT_CACHE_BOUND as u128 {
        return Err(ConstructError::ProductTooLarge(combined));
    }
    let da = a.degree();
    let db = b.degree();
    let mut gens = Vec::new();
    for g in a.generators() {
        let mut images: Vec<usize> = (1..=da).map(|i| g.apply(i)).collect();
        images.extend(da + 1..=da + db);
        gens.push(Permutation::from_images_one_based(&images).expect("embedding"));
    }
    for g in b.generators() {
        let mut images: Vec<usize> = (1..=da).collect();
        images.extend((1..=db).map(|i| g.apply(i) + da));
        gens.push(Permutation::from_images_one_based(&images).expect("embedding"));
    }
    let prod = FiniteGroup::generate(gens)?;
    debug_assert_eq!(prod.order() as u128, combined);
    Ok(prod)
}

/// An automorphism of `n` specified by the images of its generators.
pub type GeneratorImages = Vec<Permutation>;

/// Semidirect product `n : h`. `action[k]` lists the images of the
/// generators of `n` under the automorphism by which the `k`-th generator
/// of `h` acts (so in the result, conjugating the embedded `n` by the
/// embedded `k`-th `h`-generator applies that automorphism).
///
/// Each `action[k]` must extend to an automorphism of `n` (checked by
/// closure) and the assignment must respect the relations of `h`, detected
/// by the resulting group order differing from `|n| * |h|`.
pub fn semidirect_product(
    n: &FiniteGroup,
    h: &FiniteGroup,
    action: &[GeneratorImages],
) -> Result<FiniteGroup, ConstructError> {
    let combined = n.order() as u128 * h.order() as u128;
    if combined > crate::group::ELEMENT_CACHE_BOUND as u128 {
        return Err(ConstructError::ProductTooLarge(combined));
    }
    if action.len() != h.generators().len() {
        return Err(ConstructError::NotAutomorphism(format!(
            "need one automorphism per generator of h ({} given, {} needed)",
            action.len(),
            h.generators().len()
        )));
    }
    let n_elems = n.elements()?;
    let h_elems = h.elements()?;
    let nn = n_elems.len();
    let nh = h_elems.len();
    let degree = nn + nh;

    let n_index: HashMap<&Permutation, usize> =
        n_elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let h_index: HashMap<&Permutation, usize> =
        h_elems.iter().enumerate().map(|(i, p)| (p, i)).collect();

    let mut gens = Vec::new();
    // Generators of n act by right multiplication on the n-block.
    for g in n.generators() {
        let mut images = vec![0usize; degree];
        for (i, x) in n_elems.iter().enumerate() {
            images[i] = n_index[&(x * g)] + 1;
        }
        for j in 0..nh {
            images[nn + j] = nn + j + 1;
        }
        gens.push(Permutation::from_images_one_based(&images).expect("action"));
    }
    // Generators of h permute the n-block by the inverse automorphism and
    // the h-block by right multiplication.
    for (k, g) in h.generators().iter().enumerate() {
        let auto = extend_automorphism(n, &action[k])?;
        let mut images = vec![0usize; degree];
        for i in 0..nn {
            // point auto[i] maps back to i, so the inverse sends i there.
            images[auto[i]] = i + 1;
        }
        for (j, y) in h_elems.iter().enumerate() {
            images[nn + j] = nn + h_index[&(y * g)] + 1;
        }
        gens.push(Permutation::from_images_one_based(&images).expect("action"));
    }
    let result = FiniteGroup::generate(gens)?;
    if result.order() as u128 != combined {
        return Err(ConstructError::ActionOrderMismatch {
            expected: combined as u64,
            got: result.order(),
        });
    }
    Ok(result)
}

/// Extends generator images to the full automorphism as an index map on the
/// sorted element list, verifying multiplicativity and bijectivity.
fn extend_automorphism(
    n: &FiniteGroup,
    images: &[Permutation],
) -> Result<Vec<usize>, ConstructError> {
    if images.len() != n.generators().len() {
        return Err(ConstructError::NotAutomorphism(format!(
            "expected {} generator images, got {}",
            n.generators().len(),
            images.len()
        )));
    }
    for im in images {
        if !n.contains(im) {
            return Err(ConstructError::NotAutomorphism(format!(
                "image {im} is not an element of the base group"
            )));
        }
    }
    let elems = n.elements()?;
    let index: HashMap<&Permutation, usize> =
        elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let id_idx = index[&n.identity()];
    let mut map: Vec<Option<usize>> = vec![None; elems.len()];
    map[id_idx] = Some(id_idx);
    let mut queue = vec![id_idx];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let fx = map[x].expect("queued elements are mapped");
        for (g, gi) in n.generators().iter().zip(images) {
            let xg = index[&(&elems[x] * g)];
            let fxg = index[&(&elems[fx] * gi)];
            match map[xg] {
                None => {
                    map[xg] = Some(fxg);
                    queue.push(xg);
                }
                Some(prev) if prev != fxg => {
                    return Err(ConstructError::NotAutomorphism(
                        "generator images are inconsistent".into(),
                    ));
                }
                _ => {}
            }
        }
    }
    let map: Vec<usize> = map
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .expect("generators reach every element");
    let mut seen = vec![false; map.len()];
    for &im in &map {
        if seen[im] {
            return Err(ConstructError::NotAutomorphism(
                "extension is not a bijection".into(),
            ));
        }
        seen[im] = true;
    }
    Ok(map)
}

/// Names of the frozen fixture groups, with their orders and invariant
/// values. The realizations ship in `data/fixtures.txt` and are
/// validated against this table on first use.
pub const FIXTURE_TABLE: &[(&str, u64, u64)] = &[
    ("SL(2,3)", 24, 99),
    ("S4", 24, 67),
    ("C2xA4", 24, 87),
    ("(C2xC2):C9", 36, 265),
    ("(C3xC3):C4", 36, 115),
    ("C3xA4", 36, 121),
    ("(C5xC5):C3", 75, 271),
    ("(C5xC5):C9", 225, 2197),
    ("C3x((C5xC5):C3)", 225, 1297),
    ("((C5xC5):C5):C3", 375, 3771),
    ("C5x((C5xC5):C3)", 375, 3771),
    ("SmallGroup(32,7)", 32, 167),
    ("C2xD8", 16, 39),
];

static FIXTURES: OnceLock<Result<HashMap<String, FiniteGroup>, String>> = OnceLock::new();

fn fixtures() -> Result<&'static HashMap<String, FiniteGroup>, ConstructError> {
    let loaded = FIXTURES.get_or_init(|| {
        let text = include_str!("../data/fixtures.txt");
        let entries = crate::catalog::parse_catalog_str(text)
            .map_err(|e| format!("fixture file: {e}"))?;
        let mut map = HashMap::new();
        for entry in entries {
            let name = entry
                .name
                .clone()
                .ok_or_else(|| format!("unnamed fixture at order {}", entry.order))?;
            let expect = FIXTURE_TABLE
                .iter()
                .find(|&&(n, _, _)| n == name)
                .ok_or_else(|| format!("fixture {name:?} not in the expected table"))?;
            let group = entry
                .to_group()
                .map_err(|e| format!("fixture {name:?}: {e}"))?;
            if group.order() != expect.1 {
                return Err(format!(
                    "fixture {name:?}: order {} != expected {}",
                    group.order(),
                    expect.1
                ));
            }
            let psi = crate::psi::psi(&group).map_err(|e| format!("fixture {name:?}: {e}"))?;
            if psi.to_u64() != Some(expect.2) {
                return Err(format!(
                    "fixture {name:?}: psi {psi} != expected {}",
                    expect.2
                ));
            }
            map.insert(name, group);
        }
        for &(name, _, _) in FIXTURE_TABLE {
            if !map.contains_key(name) {
                return Err(format!("fixture {name:?} missing from data file"));
            }
        }
        Ok(map)
    });
    loaded
        .as_ref()
        .map_err(|e| ConstructError::FixtureData(e.clone()))
}

/// Looks up one of the named fixture groups (see [`FIXTURE_TABLE`]).
pub fn fixture_group(name: &str) -> Result<FiniteGroup, ConstructError> {
    let map = fixtures()?;
    map.get(name)
        .cloned()
        .ok_or_else(|| ConstructError::UnknownFixture(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psi::{psi, PsiValue};

    #[test]
    fn cyclic_orders() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(cyclic(12).unwrap().order(), 12);
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn cyclic_psi_values() {
        assert_eq!(psi(&cyclic(12).unwrap()).unwrap(), PsiValue::from(77));
        assert_eq!(psi(&cyclic(75).unwrap()).unwrap(), PsiValue::from(3647));
    }

    #[test]
    fn dihedral_orders() {
        assert_eq!(dihedral(2).unwrap().order(), 4);
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert_eq!(dihedral(12).unwrap().order(), 24);
        assert!(dihedral(1).is_err());
    }

    #[test]
    fn symmetric_alternating_orders() {
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert_eq!(alternating(3).unwrap().order(), 3);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(6).unwrap().order(), 360);
    }

    #[test]
    fn psi_symmetric_and_products() {
        assert_eq!(psi(&symmetric(4).unwrap()).unwrap(), PsiValue::from(67));
        let c2 = cyclic(2).unwrap();
        let a4 = alternating(4).unwrap();
        let g = direct_product(&c2, &a4).unwrap();
        assert_eq!(psi(&g).unwrap(), PsiValue::from(87));
        let m = direct_product(&c2, &dihedral(4).unwrap()).unwrap();
        assert_eq!(psi(&m).unwrap(), PsiValue::from(39));
    }

    #[test]
    fn product_order_multiplies() {
        let a = symmetric(3).unwrap();
        let b = cyclic(5).unwrap();
        let p = direct_product(&a, &b).unwrap();
        assert_eq!(p.order(), 30);
        assert_eq!(p.degree(), a.degree() + b.degree());
    }

    #[test]
    fn semidirect_with_trivial_action_is_direct_product() {
        let n = cyclic(5).unwrap();
        let h = cyclic(4).unwrap();
        let action = vec![n.generators().to_vec()];
        let sd = semidirect_product(&n, &h, &action).unwrap();
        assert_eq!(sd.order(), 20);
        let prod = direct_product(&n, &h).unwrap();
        assert_eq!(psi(&sd).unwrap(), psi(&prod).unwrap());
        assert!(crate::classify::is_isomorphic(&sd, &prod).unwrap());
    }

    #[test]
    fn product_with_trivial_group_is_isomorphic_to_the_factor() {
        let g = symmetric(3).unwrap();
        let prod = direct_product(&FiniteGroup::trivial(1), &g).unwrap();
        assert!(crate::classify::is_isomorphic(&prod, &g).unwrap());
    }

    #[test]
    fn semidirect_c3_on_c5_squared() {
        // a -> b, b -> (ab)^-1 has order 3; the result is the nonabelian
        // group of order 75.
        let c5 = cyclic(5).unwrap();
        let n = direct_product(&c5, &c5).unwrap();
        let (a, b) = (n.generators()[0].clone(), n.generators()[1].clone());
        let ab_inv = (&a * &b).inverse();
        let g = semidirect_product(&n, &cyclic(3).unwrap(), &[vec![b.clone(), ab_inv]]).unwrap();
        assert_eq!(g.order(), 75);
        assert_eq!(psi(&g).unwrap(), PsiValue::from(271));
    }

    #[test]
    fn semidirect_conjugation_realizes_action() {
        let c3 = cyclic(3).unwrap();
        let n = direct_product(&c3, &c3).unwrap();
        let (a, b) = (n.generators()[0].clone(), n.generators()[1].clone());
        // a -> b, b -> a^-1 has order 4.
        let g = semidirect_product(&n, &cyclic(4).unwrap(), &[vec![b.clone(), a.inverse()]])
            .unwrap();
        assert_eq!(g.order(), 36);
        assert_eq!(psi(&g).unwrap(), PsiValue::from(115));
        // Conjugation of the embedded a-image by the embedded h-generator
        // equals the embedded image of action(a) = b.
        let ga = &g.generators()[0];
        let gb = &g.generators()[1];
        let t = &g.generators()[2];
        let conj = &(t * ga) * &t.inverse();
        assert_eq!(&conj, gb);
    }

    #[test]
    fn semidirect_rejects_bad_action() {
        let n = cyclic(5).unwrap();
        let h = cyclic(4).unwrap();
        // x -> x^2 has order 4 in Aut(C5), fine for C4; but x -> x^3 breaks
        // for C2 since squaring it is not the identity.
        let gen = n.generators()[0].clone();
        let cube = &(&gen * &gen) * &gen;
        let r = semidirect_product(&n, &cyclic(2).unwrap(), &[vec![cube]]);
        assert!(matches!(r, Err(ConstructError::ActionOrderMismatch { .. })));
        // Non-element image is rejected outright.
        let bad = Permutation::parse_with_degree("(1 2)", 5).unwrap();
        let r = semidirect_product(&n, &h, &[vec![bad]]);
        assert!(matches!(r, Err(ConstructError::NotAutomorphism(_))));
    }

    #[test]
    fn fixtures_load_and_validate() {
        // Loading validates order and psi against the expected table.
        for &(name, order, psi_value) in FIXTURE_TABLE {
            let g = fixture_group(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            assert_eq!(psi(&g).unwrap(), PsiValue::from(psi_value), "{name}");
        }
        assert!(matches!(
            fixture_group("no such group"),
            Err(ConstructError::UnknownFixture(_))
        ));
    }

    #[test]
    fn fixture_representatives_match_spot_checks() {
        let g = fixture_group("SL(2,3)").unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(psi(&g).unwrap(), PsiValue::from(99));
        let g = fixture_group("(C3xC3):C4").unwrap();
        assert_eq!(g.order(), 36);
        assert_eq!(psi(&g).unwrap(), PsiValue::from(115));
        let g = fixture_group("SmallGroup(32,7)").unwrap();
        assert_eq!(g.order(), 32);
        assert_eq!(psi(&g).unwrap(), PsiValue::from(167));
    }

    #[test]
    fn the_two_order_375_fixtures_are_not_isomorphic() {
        let chain = fixture_group("((C5xC5):C5):C3").unwrap();
        let split = fixture_group("C5x((C5xC5):C3)").unwrap();
        assert_eq!(psi(&chain).unwrap(), psi(&split).unwrap());
        assert!(!crate::classify::is_isomorphic(&chain, &split).unwrap());
    }

    #[test]
    fn semidirect_c9_on_v4() {
        let c2 = cyclic(2).unwrap();
        let n = direct_product(&c2, &c2).unwrap();
        let (a, b) = (n.generators()[0].clone(), n.generators()[1].clone());
        let ab = &a * &b;
        // a -> b, b -> ab has order 3; composing with the C9 generator gives
        // the nonsplit-free order-36 group with psi 265.
        let g = semidirect_product(&n, &cyclic(9).unwrap(), &[vec![b.clone(), ab]]).unwrap();
        assert_eq!(g.order(), 36);
        assert_eq!(psi(&g).unwrap(), PsiValue::from(265));
    }
}
