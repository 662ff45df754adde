//! Permutations on the points `{1..degree}`.
//!
//! Points are 1-based in all input/output (cycle notation); the internal
//! image table is 0-based. Composition is fixed left-to-right: `a * b`
//! means "apply `a`, then `b`", so `(a * b).apply(i) = b.apply(a.apply(i))`.
//!
//! # Cycle notation
//!
//! The text form of a permutation is a sequence of disjoint cycles of
//! 1-based points, e.g. `(1 2 3)(4 5)`. Cycles may be separated by
//! whitespace. Fixed points may be omitted; the empty cycle list (or the
//! explicit `()`) denotes the identity. The degree is either carried
//! out-of-band (catalog files declare it per entry) or given inline with a
//! `deg=` prefix: `deg=5 (1 2 3)(4 5)`.

use std::collections::HashSet;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigUint;
use num_integer::Integer;
use thiserror::Error;

/// Errors from permutation construction and parsing.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("image table is not a bijection on 1..{degree}: {detail}")]
    NotBijection { degree: usize, detail: String },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("cycle notation parse error: {0}")]
    Parse(String),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
}

/// A bijection on `{1..degree}`, stored as a 0-based image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    /// Identity permutation on `degree` points.
    pub fn identity(degree: usize) -> Result<Permutation, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        Ok(Permutation {
            images: (0..degree as u16).collect(),
        })
    }

    /// Builds a permutation from 1-based images: point `i` maps to `images[i-1]`.
    pub fn from_images_one_based(images: &[usize]) -> Result<Permutation, PermError> {
        if images.is_empty() {
            return Err(PermError::ZeroDegree);
        }
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut table = Vec::with_capacity(degree);
        for &im in images {
            if im == 0 || im > degree {
                return Err(PermError::NotBijection {
                    degree,
                    detail: format!("image {im} out of range"),
                });
            }
            if seen[im - 1] {
                return Err(PermError::NotBijection {
                    degree,
                    detail: format!("image {im} repeated"),
                });
            }
            seen[im - 1] = true;
            table.push((im - 1) as u16);
        }
        Ok(Permutation { images: table })
    }

    /// Builds from a list of cycles of 1-based points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut table: Vec<u16> = (0..degree as u16).collect();
        let mut used: HashSet<usize> = HashSet::new();
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree {
                    return Err(PermError::PointOutOfRange { point: pt, degree });
                }
                if !used.insert(pt) {
                    return Err(PermError::Parse(format!("point {pt} appears twice")));
                }
                let next = cycle[(k + 1) % cycle.len()];
                if next == 0 || next > degree {
                    return Err(PermError::PointOutOfRange { point: next, degree });
                }
                table[pt - 1] = (next - 1) as u16;
            }
        }
        Ok(Permutation { images: table })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// 0-based image lookup, the hot-path form.
    #[inline]
    pub(crate) fn image0(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| im as usize == i)
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            inv[im as usize] = i as u16;
        }
        Permutation { images: inv }
    }

    /// Checked composition, `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self * other)
    }

    /// Disjoint cycle decomposition (1-based points), fixed points omitted,
    /// each cycle starting at its least point, cycles sorted by least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Order of the permutation: least `k >= 1` with the k-th power equal
    /// to the identity, the lcm of the cycle lengths. Exact for any degree.
    pub fn order(&self) -> BigUint {
        let mut ord = BigUint::from(1u32);
        for cycle in self.cycles() {
            ord = ord.lcm(&BigUint::from(cycle.len()));
        }
        ord
    }

    /// Order as `u64`; panics on overflow. Safe whenever the permutation is
    /// known to live in a group of order below `2^64`.
    pub(crate) fn order_u64(&self) -> u64 {
        let mut ord: u64 = 1;
        for cycle in self.cycles() {
            ord = num_integer::lcm(ord, cycle.len() as u64);
        }
        ord
    }

    /// Parses bare cycle notation with the degree supplied out-of-band.
    pub fn parse_with_degree(text: &str, degree: usize) -> Result<Permutation, PermError> {
        let cycles = parse_cycle_list(text)?;
        Permutation::from_cycles(degree, &cycles)
    }

    /// Parses the inline form `deg=N (c1)(c2)...`.
    pub fn parse(text: &str) -> Result<Permutation, PermError> {
        let t = text.trim();
        let rest = t
            .strip_prefix("deg=")
            .ok_or_else(|| PermError::Parse("expected leading deg=N".into()))?;
        let split_at = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        let (digits, cycles_text) = rest.split_at(split_at);
        let degree: usize = digits
            .parse()
            .map_err(|_| PermError::Parse(format!("bad degree {digits:?}")))?;
        Permutation::parse_with_degree(cycles_text, degree)
    }
}

fn parse_cycle_list(text: &str) -> Result<Vec<Vec<usize>>, PermError> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        if !rest.starts_with('(') {
            return Err(PermError::Parse(format!(
                "expected '(' at {:?}",
                rest.chars().take(8).collect::<String>()
            )));
        }
        let close = rest
            .find(')')
            .ok_or_else(|| PermError::Parse("unclosed cycle".into()))?;
        let body = &rest[1..close];
        let mut cycle = Vec::new();
        for tok in body.split_whitespace() {
            let pt: usize = tok
                .parse()
                .map_err(|_| PermError::Parse(format!("bad point {tok:?}")))?;
            cycle.push(pt);
        }
        if cycle.len() >= 2 {
            cycles.push(cycle);
        }
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// `a * b` applies `a` first, then `b`. Panics on degree mismatch; use
    /// [`Permutation::compose`] for the checked form.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            rhs.degree(),
            "composing permutations of unequal degree"
        );
        let images = self
            .images
            .iter()
            .map(|&im| rhs.images[im as usize])
            .collect();
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[deg={} {}]", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(deg: usize, s: &str) -> Permutation {
        Permutation::parse_with_degree(s, deg).unwrap()
    }

    #[test]
    fn identity_basics() {
        let e = Permutation::identity(4).unwrap();
        assert_eq!(e.apply(1), 1);
        assert_eq!(e.apply(4), 4);
        assert!(e.is_identity());
        assert_eq!(e.order(), BigUint::from(1u32));
        assert_eq!(Permutation::identity(0), Err(PermError::ZeroDegree));
    }

    #[test]
    fn identity_law() {
        let e = Permutation::identity(4).unwrap();
        let p = perm(4, "(1 2 3 4)");
        assert_eq!(&e * &p, p);
        assert_eq!(&p * &e, p);
    }

    #[test]
    fn compose_convention_left_to_right() {
        // a = (1 2), b = (2 3): a then b sends 1 -> 2 -> 3.
        let a = perm(3, "(1 2)");
        let b = perm(3, "(2 3)");
        let ab = &a * &b;
        assert_eq!(ab.apply(1), 3);
    }

    #[test]
    fn involution_squares_to_identity() {
        let p = perm(2, "(1 2)");
        assert!((&p * &p).is_identity());
    }

    #[test]
    fn three_cycle_square() {
        let p = perm(3, "(1 2 3)");
        assert_eq!(&p * &p, perm(3, "(1 3 2)"));
    }

    #[test]
    fn inverse_law() {
        let p = perm(5, "(1 3 5)(2 4)");
        assert!((&p * &p.inverse()).is_identity());
        assert!((&p.inverse() * &p).is_identity());
    }

    #[test]
    fn orders() {
        assert_eq!(Permutation::identity(5).unwrap().order(), 1u32.into());
        assert_eq!(perm(3, "(1 2 3)").order(), 3u32.into());
        assert_eq!(perm(5, "(1 2)(3 4 5)").order(), 6u32.into());
    }

    #[test]
    fn degree_mismatch_rejected() {
        let a = perm(3, "(1 2)");
        let b = perm(4, "(1 2)");
        assert_eq!(a.compose(&b), Err(PermError::DegreeMismatch(3, 4)));
    }

    #[test]
    fn parse_inline_degree_and_fixed_points() {
        let p = Permutation::parse("deg=4 (1 2 3)(4)").unwrap();
        assert_eq!(p, perm(4, "(1 2 3)"));
        let e = Permutation::parse("deg=3 ()").unwrap();
        assert!(e.is_identity());
        assert!(Permutation::parse("(1 2)").is_err());
        assert!(Permutation::parse("deg=2 (1 3)").is_err());
        assert!(Permutation::parse("deg=3 (1 1)").is_err());
    }

    #[test]
    fn display_roundtrip_examples() {
        let p = perm(6, "(2 4)(3 5 6)");
        assert_eq!(p.to_string(), "(2 4)(3 5 6)");
        assert_eq!(Permutation::identity(3).unwrap().to_string(), "()");
    }

    fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
        Just(()).prop_perturb(move |_, mut rng| {
            let mut v: Vec<usize> = (1..=degree).collect();
            // Fisher-Yates with the proptest rng.
            for i in (1..degree).rev() {
                let j = (rng.next_u64() as usize) % (i + 1);
                v.swap(i, j);
            }
            Permutation::from_images_one_based(&v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn composition_is_associative(
            a in arb_perm(9), b in arb_perm(9), c in arb_perm(9)
        ) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn inverse_identity_laws(a in arb_perm(11)) {
            prop_assert!((&a * &a.inverse()).is_identity());
            prop_assert!((&a.inverse() * &a).is_identity());
        }

        #[test]
        fn display_parse_roundtrip(a in arb_perm(10)) {
            let text = a.to_string();
            let back = Permutation::parse_with_degree(&text, 10).unwrap();
            prop_assert_eq!(a, back);
        }
    }
}
