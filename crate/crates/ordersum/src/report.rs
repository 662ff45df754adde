//! Machine-readable report rendering shared by the CLI and the examples.
//!
//! JSON output is deterministic: plain structs with fixed field order, no
//! maps, no timestamps. Identical inputs render byte-identical reports.
//!
//! TSV columns (one outcome per line):
//! `group_id  order  psi  psi_cn  ratio  comparison  solvable
//! supersolvable  verdict  witness`; absent values render as `-`, the
//! witness as compact JSON.

use serde::Serialize;

use crate::conjectures::{CheckOutcome, InequalityReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
struct OutcomeReport<'a> {
    schema_version: u32,
    check: &'a str,
    outcomes: &'a [CheckOutcome],
}

pub fn outcomes_to_json(check: &str, outcomes: &[CheckOutcome]) -> String {
    serde_json::to_string_pretty(&OutcomeReport {
        schema_version: SCHEMA_VERSION,
        check,
        outcomes,
    })
    .expect("report structs serialize")
}

pub fn outcomes_to_tsv(outcomes: &[CheckOutcome]) -> String {
    let mut out = String::from(
        "group_id\torder\tpsi\tpsi_cn\tratio\tcomparison\tsolvable\tsupersolvable\tverdict\twitness\n",
    );
    for o in outcomes {
        let witness = o
            .witness
            .as_ref()
            .map(|w| serde_json::to_string(w).expect("witness serializes"))
            .unwrap_or_else(|| "-".into());
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            o.group_id,
            o.order,
            o.psi,
            o.psi_cn.as_deref().unwrap_or("-"),
            o.ratio.as_deref().unwrap_or("-"),
            o.comparison.map_or("-".to_string(), |c| c.to_string()),
            opt_bool(o.predicates.solvable),
            opt_bool(o.predicates.supersolvable),
            match o.verdict {
                crate::conjectures::Verdict::Confirmed => "confirmed",
                crate::conjectures::Verdict::NotApplicable => "not_applicable",
                crate::conjectures::Verdict::Violation => "violation",
            },
            witness,
        ));
    }
    out
}

fn opt_bool(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "-",
    }
}

#[derive(Serialize)]
struct InequalityReportWrapper<'a> {
    schema_version: u32,
    check: &'a str,
    #[serde(flatten)]
    report: &'a InequalityReport,
}

pub fn inequalities_to_json(report: &InequalityReport) -> String {
    serde_json::to_string_pretty(&InequalityReportWrapper {
        schema_version: SCHEMA_VERSION,
        check: "lemmas",
        report,
    })
    .expect("report structs serialize")
}

pub fn inequalities_to_tsv(report: &InequalityReport) -> String {
    let mut out = String::from("check\tscope\tchecked\tfailures\n");
    for c in &report.checks {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\n",
            c.name,
            c.scope,
            c.checked,
            c.failures.len()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjectures::check_supersolvable_threshold;
    use crate::constructors::cyclic;

    #[test]
    fn json_output_is_deterministic() {
        let g = cyclic(12).unwrap();
        let o = vec![check_supersolvable_threshold("C12", &g).unwrap()];
        let a = outcomes_to_json("t", &o);
        let b = outcomes_to_json("t", &o);
        assert_eq!(a, b);
        assert!(a.contains("\"schema_version\": 1"));
        assert!(a.contains("\"group_id\": \"C12\""));
    }

    #[test]
    fn tsv_has_header_and_rows() {
        let g = cyclic(12).unwrap();
        let o = vec![check_supersolvable_threshold("C12", &g).unwrap()];
        let tsv = outcomes_to_tsv(&o);
        let lines: Vec<&str> = tsv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("group_id\torder"));
        assert!(lines[1].starts_with("C12\t12\t77\t77\t31/77\tgreater"));
    }
}
