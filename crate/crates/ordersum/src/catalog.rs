//! The bundled catalog of small groups and its file format.
//!
//! # File format
//!
//! Line-oriented UTF-8. Blank lines and lines starting with `#` are
//! ignored. Each entry is one line of colon-separated fields:
//!
//! ```text
//! order:index:name:degree:gen1;gen2;...:psi
//! ```
//!
//! * `order`: group order (decimal).
//! * `index`: 1-based position within the order (oracle numbering; the
//!   data was produced by this crate's own enumeration tool, so indices do
//!   not follow any external library's numbering).
//! * `name`: optional human label; empty allowed. Names may themselves
//!   contain colons (e.g. `(C5xC5):C3`), so lines are parsed positionally:
//!   two fields from the left, three from the right, name in between.
//! * `degree`: number of points the generators act on.
//! * generators: semicolon-separated cycle notation (see [`crate::perm`]),
//!   1-based points, fixed points omitted, `()` for the identity.
//! * `psi`: optional expected sum of element orders; empty allowed.
//!
//! `(order, index)` pairs are unique across the file. There is no
//! continuation-line mechanism.

use std::collections::{BTreeMap, HashSet};
use std::path::Path;
use std::sync::OnceLock;

use num_bigint::BigUint;
use rayon::prelude::*;
use thiserror::Error;

use crate::classify::{is_isomorphic, iso_fingerprint};
use crate::factor::FactoredInteger;
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::psi::{psi, psi_cyclic, threshold_compare, Comparison};

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: duplicate entry {order}#{index}")]
    Duplicate { line: usize, order: u64, index: u32 },
    #[error("io error reading catalog: {0}")]
    Io(#[from] std::io::Error),
    #[error("bundled catalog is corrupt: {0}")]
    Bundled(String),
}

/// One catalog record: a group of a given order with its generators.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub order: u64,
    pub index: u32,
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Permutation>,
    pub expected_psi: Option<BigUint>,
}

impl CatalogEntry {
    pub fn id(&self) -> String {
        format!("{}#{}", self.order, self.index)
    }

    /// Regenerates the group from the stored generators.
    pub fn to_group(&self) -> Result<FiniteGroup, crate::group::GroupError> {
        FiniteGroup::generate(self.generators.clone())
    }
}

/// Parses catalog text. Errors carry 1-based line numbers.
pub fn parse_catalog_str(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut entries = Vec::new();
    let mut seen: HashSet<(u64, u32)> = HashSet::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split(':').collect();
        if fields.len() < 6 {
            return Err(CatalogError::Parse {
                line,
                msg: format!("expected at least 6 colon-separated fields, got {}", fields.len()),
            });
        }
        let order: u64 = fields[0].parse().map_err(|_| CatalogError::Parse {
            line,
            msg: format!("bad order {:?}", fields[0]),
        })?;
        let index: u32 = fields[1].parse().map_err(|_| CatalogError::Parse {
            line,
            msg: format!("bad index {:?}", fields[1]),
        })?;
        let k = fields.len();
        let name_joined = fields[2..k - 3].join(":");
        let name = if name_joined.is_empty() {
            None
        } else {
            Some(name_joined)
        };
        let degree: usize = fields[k - 3].parse().map_err(|_| CatalogError::Parse {
            line,
            msg: format!("bad degree {:?}", fields[k - 3]),
        })?;
        let mut generators = Vec::new();
        for gen_text in fields[k - 2].split(';') {
            let p = Permutation::parse_with_degree(gen_text, degree).map_err(|e| {
                CatalogError::Parse {
                    line,
                    msg: format!("generator {gen_text:?}: {e}"),
                }
            })?;
            generators.push(p);
        }
        let psi_field = fields[k - 1].trim();
        let expected_psi = if psi_field.is_empty() {
            None
        } else {
            Some(psi_field.parse::<BigUint>().map_err(|_| CatalogError::Parse {
                line,
                msg: format!("bad psi {psi_field:?}"),
            })?)
        };
        if !seen.insert((order, index)) {
            return Err(CatalogError::Duplicate { line, order, index });
        }
        entries.push(CatalogEntry {
            order,
            index,
            name,
            degree,
            generators,
            expected_psi,
        });
    }
    Ok(entries)
}

/// Loads a catalog file from disk.
pub fn load_catalog(path: &Path) -> Result<Vec<CatalogEntry>, CatalogError> {
    let text = std::fs::read_to_string(path)?;
    parse_catalog_str(&text)
}

static BUNDLED: OnceLock<Result<Vec<CatalogEntry>, String>> = OnceLock::new();

/// The catalog shipped with the crate: all groups of order at most 100.
pub fn bundled_catalog() -> Result<&'static [CatalogEntry], CatalogError> {
    let loaded = BUNDLED.get_or_init(|| {
        parse_catalog_str(include_str!("../data/smallgroups.txt")).map_err(|e| e.to_string())
    });
    match loaded {
        Ok(entries) => Ok(entries),
        Err(e) => Err(CatalogError::Bundled(e.clone())),
    }
}

/// The expected number of groups per order, as shipped in `counts.tsv`
/// (columns: order, count).
pub fn bundled_counts() -> &'static BTreeMap<u64, u64> {
    static COUNTS: OnceLock<BTreeMap<u64, u64>> = OnceLock::new();
    COUNTS.get_or_init(|| {
        parse_counts(include_str!("../data/counts.tsv")).expect("bundled counts parse")
    })
}

pub fn parse_counts(text: &str) -> Result<BTreeMap<u64, u64>, CatalogError> {
    let mut out = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let mut it = t.split_whitespace();
        let order: u64 = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| CatalogError::Parse {
                line,
                msg: "expected order".into(),
            })?;
        let count: u64 = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| CatalogError::Parse {
                line,
                msg: "expected count".into(),
            })?;
        out.insert(order, count);
    }
    Ok(out)
}

/// Result of re-validating catalog entries.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub entries_checked: usize,
    pub per_order: BTreeMap<u64, u64>,
    /// Human-readable problems, each tagged with the entry id.
    pub problems: Vec<String>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.problems.is_empty()
    }
}

/// Orders exempt from the quadratic pairwise-isomorphism screen.
pub const ISOMORPHISM_SCREEN_LIMIT: u64 = 63;

/// Re-generates every entry and re-checks order, psi, cyclic maximality,
/// per-order counts against `expected_counts`, and pairwise
/// non-isomorphism within orders up to [`ISOMORPHISM_SCREEN_LIMIT`].
pub fn validate_catalog(
    entries: &[CatalogEntry],
    expected_counts: &BTreeMap<u64, u64>,
) -> ValidationReport {
    let mut problems: Vec<String> = Vec::new();

    let per_entry: Vec<(String, Vec<String>, Option<FiniteGroup>)> = entries
        .par_iter()
        .map(|entry| {
            let id = entry.id();
            let mut local = Vec::new();
            let group = match entry.to_group() {
                Ok(g) => g,
                Err(e) => {
                    local.push(format!("{id}: generation failed: {e}"));
                    return (id, local, None);
                }
            };
            if group.order() != entry.order {
                local.push(format!(
                    "{id}: generated order {} != declared {}",
                    group.order(),
                    entry.order
                ));
            }
            let psi_g = match psi(&group) {
                Ok(v) => v,
                Err(e) => {
                    local.push(format!("{id}: psi failed: {e}"));
                    return (id, local, Some(group));
                }
            };
            if let Some(expected) = &entry.expected_psi {
                if psi_g.value() != expected {
                    local.push(format!("{id}: psi {psi_g} != declared {expected}"));
                }
            }
            // Cyclic maximality: psi(G) <= psi(C_n), equality iff cyclic.
            let n = FactoredInteger::factor(entry.order).expect("catalog orders are small");
            let cyclic_psi = psi_cyclic(&n);
            let cmp = threshold_compare(&psi_g, &crate::exact::ExactRational::one(), &cyclic_psi);
            let structurally_cyclic = match group.is_cyclic() {
                Ok(b) => b,
                Err(e) => {
                    local.push(format!("{id}: cyclicity check failed: {e}"));
                    return (id, local, Some(group));
                }
            };
            match cmp {
                Comparison::Greater => {
                    local.push(format!("{id}: psi {psi_g} exceeds cyclic value {cyclic_psi}"))
                }
                Comparison::Equal if !structurally_cyclic => local.push(format!(
                    "{id}: psi equals the cyclic value but the group is not cyclic"
                )),
                Comparison::Less if structurally_cyclic => local.push(format!(
                    "{id}: group is cyclic but psi {psi_g} is below {cyclic_psi}"
                )),
                _ => {}
            }
            (id, local, Some(group))
        })
        .collect();

    let mut per_order: BTreeMap<u64, u64> = BTreeMap::new();
    for entry in entries {
        *per_order.entry(entry.order).or_insert(0) += 1;
    }
    for (_, local, _) in &per_entry {
        problems.extend(local.iter().cloned());
    }

    // Count check against the expected table, for the orders present.
    for (&order, &count) in &per_order {
        match expected_counts.get(&order) {
            Some(&expected) if expected != count => problems.push(format!(
                "order {order}: {count} entries but {expected} expected"
            )),
            None => problems.push(format!("order {order}: no expected count available")),
            _ => {}
        }
    }

    // Pairwise isomorphism screen within small orders.
    let mut by_order: BTreeMap<u64, Vec<(&str, &FiniteGroup)>> = BTreeMap::new();
    for ((id, _, group), entry) in per_entry.iter().zip(entries) {
        if let Some(g) = group {
            if entry.order <= ISOMORPHISM_SCREEN_LIMIT {
                by_order.entry(entry.order).or_default().push((id, g));
            }
        }
    }
    let screen_problems: Vec<String> = by_order
        .par_iter()
        .flat_map(|(_, groups)| {
            let mut local = Vec::new();
            // Pre-screen with fingerprints; only equal fingerprints get the
            // full search.
            let fps: Vec<_> = groups
                .iter()
                .map(|(_, g)| iso_fingerprint(g).expect("within bound"))
                .collect();
            for i in 0..groups.len() {
                for j in i + 1..groups.len() {
                    if fps[i] == fps[j]
                        && is_isomorphic(groups[i].1, groups[j].1).expect("within bound")
                    {
                        local.push(format!(
                            "{} and {} are isomorphic",
                            groups[i].0, groups[j].0
                        ));
                    }
                }
            }
            local
        })
        .collect();
    problems.extend(screen_problems);
    problems.sort();

    ValidationReport {
        entries_checked: entries.len(),
        per_order,
        problems,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_text_parses_to_empty_list() {
        assert!(parse_catalog_str("").unwrap().is_empty());
        assert!(parse_catalog_str("# comment only\n\n").unwrap().is_empty());
    }

    #[test]
    fn parses_simple_entry() {
        let text = "6:1:C6:6:(1 2 3 4 5 6):21\n";
        let entries = parse_catalog_str(text).unwrap();
        assert_eq!(entries.len(), 1);
        let e = &entries[0];
        assert_eq!((e.order, e.index), (6, 1));
        assert_eq!(e.name.as_deref(), Some("C6"));
        assert_eq!(e.degree, 6);
        assert_eq!(e.expected_psi, Some(21u32.into()));
        let g = e.to_group().unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn parses_name_with_colons() {
        let text = "75:3:(C5xC5):C3:10:(1 2 3 4 5);(6 7 8 9 10):\n";
        let entries = parse_catalog_str(text).unwrap();
        assert_eq!(entries[0].name.as_deref(), Some("(C5xC5):C3"));
        assert_eq!(entries[0].degree, 10);
        assert_eq!(entries[0].expected_psi, None);
    }

    #[test]
    fn reports_line_numbers_on_errors() {
        let text = "6:1::6:(1 2 3 4 5 6):21\nnot a line\n";
        match parse_catalog_str(text) {
            Err(CatalogError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
        let dup = "6:1::6:(1 2 3 4 5 6):21\n6:1::6:(1 2 3 4 5 6):21\n";
        match parse_catalog_str(dup) {
            Err(CatalogError::Duplicate { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected duplicate error, got {other:?}"),
        }
    }

    #[test]
    fn degree_mismatch_in_generator_is_a_parse_error() {
        let text = "6:1::3:(1 2 3 4 5 6):21\n";
        assert!(matches!(
            parse_catalog_str(text),
            Err(CatalogError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn validation_flags_bad_declarations() {
        // Declared order 8, actual 6; declared psi 99, actual 21.
        let text = "8:1::6:(1 2 3 4 5 6):99\n";
        let entries = parse_catalog_str(text).unwrap();
        let counts = BTreeMap::from([(8u64, 1u64)]);
        let report = validate_catalog(&entries, &counts);
        assert!(!report.is_ok());
        assert!(report.problems.iter().any(|p| p.contains("order")));
        assert!(report.problems.iter().any(|p| p.contains("psi")));
    }

    #[test]
    fn validation_screen_catches_isomorphic_duplicates() {
        let text = "\
4:1:C4:4:(1 2 3 4):11
4:2:C4 again:4:(1 4 3 2):11
";
        let entries = parse_catalog_str(text).unwrap();
        let counts = BTreeMap::from([(4u64, 2u64)]);
        let report = validate_catalog(&entries, &counts);
        assert!(report
            .problems
            .iter()
            .any(|p| p.contains("isomorphic")));
    }
}
