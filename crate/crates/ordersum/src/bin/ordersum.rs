//! Batch command-line surface over the library sweeps.
//!
//! Exit codes: 0 success / no violation; 1 violation found (`check t`,
//! `check odd`, `check solvable`, `lemmas`); 2 usage error; 3 data error.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ordersum::catalog::{self, CatalogEntry};
use ordersum::conjectures::{
    scan_subgroup_index_bound, run_threshold_sweep, verify_inequalities_with_limit, CheckOutcome,
    ThresholdKind, Verdict, Witness,
};
use ordersum::constructors;
use ordersum::psi::order_multiset;
use ordersum::report;
use ordersum::FiniteGroup;

#[derive(Parser)]
#[command(
    name = "ordersum",
    about = "Exact sum-of-element-orders computations and verification sweeps",
    version
)]
struct Cli {
    /// Catalog file (defaults to the bundled data).
    #[arg(long, global = true, env = "ORDERSUM_CATALOG")]
    catalog: Option<PathBuf>,

    /// Worker threads for sweeps (output is independent of this).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Emit the machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,

    /// Emit tab-separated rows.
    #[arg(long, global = true)]
    tsv: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print psi and an order-multiset summary for a group.
    ///
    /// Specs: `C 12`, `D 8`, `A4`, `S4`, `catalog 32 7`, `fixture <name>`,
    /// `product <atom> <atom>`.
    Psi {
        /// Constructor expression, e.g. `product C2 D4`.
        spec: Vec<String>,
    },
    /// Run a verification sweep: `t`, `odd`, `solvable`, or `hlm`.
    Check {
        /// Which check to run.
        kind: String,
        /// Optional single group spec instead of a catalog range.
        spec: Vec<String>,
        /// Catalog order range, e.g. `1..100` or `32`.
        #[arg(long)]
        orders: Option<String>,
    },
    /// Run the supporting-inequality battery.
    Lemmas {
        #[arg(long)]
        orders: Option<String>,
        /// Cap for the numeric cyclic lower-bound sweep.
        #[arg(long, default_value_t = 100_000)]
        cyclic_sweep_limit: u64,
    },
    /// Validate or summarize the catalog.
    Catalog {
        /// `validate` or `stats`.
        action: String,
        #[arg(long)]
        orders: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[derive(Debug)]
struct CliError {
    msg: String,
    code: u8,
}

impl CliError {
    fn usage(msg: impl Into<String>) -> CliError {
        CliError {
            msg: msg.into(),
            code: 2,
        }
    }
    fn data(msg: impl Into<String>) -> CliError {
        CliError {
            msg: msg.into(),
            code: 3,
        }
    }
    fn exit_code(&self) -> u8 {
        self.code
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.msg)
    }
}

fn run(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Psi { spec } => cmd_psi(cli, spec),
        Command::Check { kind, spec, orders } => cmd_check(cli, kind, spec, orders.as_deref()),
        Command::Lemmas {
            orders,
            cyclic_sweep_limit,
        } => cmd_lemmas(cli, orders.as_deref(), *cyclic_sweep_limit),
        Command::Catalog { action, orders } => cmd_catalog(cli, action, orders.as_deref()),
    }
}

fn load_entries(cli: &Cli) -> Result<Vec<CatalogEntry>, CliError> {
    match &cli.catalog {
        Some(path) => catalog::load_catalog(path).map_err(|e| CliError::data(e.to_string())),
        None => Ok(catalog::bundled_catalog()
            .map_err(|e| CliError::data(e.to_string()))?
            .to_vec()),
    }
}

fn parse_orders(text: &str) -> Result<(u64, u64), CliError> {
    if let Some((a, b)) = text.split_once("..") {
        let lo: u64 = a
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad order range {text:?}")))?;
        let hi: u64 = b
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad order range {text:?}")))?;
        if lo == 0 || hi < lo {
            return Err(CliError::usage(format!("bad order range {text:?}")));
        }
        Ok((lo, hi))
    } else {
        let n: u64 = text
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("bad order {text:?}")))?;
        Ok((n, n))
    }
}

fn filter_orders(entries: Vec<CatalogEntry>, orders: Option<&str>) -> Result<Vec<CatalogEntry>, CliError> {
    match orders {
        None => Ok(entries),
        Some(text) => {
            let (lo, hi) = parse_orders(text)?;
            Ok(entries
                .into_iter()
                .filter(|e| e.order >= lo && e.order <= hi)
                .collect())
        }
    }
}

/// Parses the constructor mini-language.
fn parse_group_spec(cli: &Cli, tokens: &[String]) -> Result<(String, FiniteGroup), CliError> {
    let label = tokens.join(" ");
    let mut toks = tokens.iter().map(String::as_str).peekable();
    let group = parse_spec_atom_or_product(cli, &mut toks)?;
    if toks.next().is_some() {
        return Err(CliError::usage(format!("trailing tokens in spec {label:?}")));
    }
    Ok((label, group))
}

fn parse_spec_atom_or_product<'a, I>(
    cli: &Cli,
    toks: &mut std::iter::Peekable<I>,
) -> Result<FiniteGroup, CliError>
where
    I: Iterator<Item = &'a str>,
{
    match toks.peek() {
        Some(&"product") => {
            toks.next();
            let a = parse_spec_atom(cli, toks)?;
            let b = parse_spec_atom(cli, toks)?;
            constructors::direct_product(&a, &b).map_err(|e| CliError::usage(e.to_string()))
        }
        _ => parse_spec_atom(cli, toks),
    }
}

fn parse_spec_atom<'a, I>(
    cli: &Cli,
    toks: &mut std::iter::Peekable<I>,
) -> Result<FiniteGroup, CliError>
where
    I: Iterator<Item = &'a str>,
{
    let tok = toks
        .next()
        .ok_or_else(|| CliError::usage("empty group spec"))?;
    let build = |r: Result<FiniteGroup, constructors::ConstructError>| {
        r.map_err(|e| CliError::usage(e.to_string()))
    };
    match tok {
        "C" | "D" | "A" | "S" => {
            let n: u64 = toks
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| CliError::usage(format!("{tok} needs a numeric argument")))?;
            match tok {
                "C" => build(constructors::cyclic(n)),
                "D" => build(constructors::dihedral(n)),
                "A" => build(constructors::alternating(n)),
                "S" => build(constructors::symmetric(n)),
                _ => unreachable!(),
            }
        }
        "catalog" => {
            let order: u64 = toks
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| CliError::usage("catalog needs <order> <index>"))?;
            let index: u32 = toks
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| CliError::usage("catalog needs <order> <index>"))?;
            let entries = load_entries(cli)?;
            let entry = entries
                .iter()
                .find(|e| e.order == order && e.index == index)
                .ok_or_else(|| CliError::data(format!("no catalog entry {order}#{index}")))?;
            entry.to_group().map_err(|e| CliError::data(e.to_string()))
        }
        "fixture" => {
            let name = toks
                .next()
                .ok_or_else(|| CliError::usage("fixture needs a name"))?;
            constructors::fixture_group(name).map_err(|e| CliError::usage(e.to_string()))
        }
        other => {
            // Concatenated forms: A4, S5, C12, D8.
            let (head, tail) = other.split_at(1);
            if let Ok(n) = tail.parse::<u64>() {
                match head {
                    "A" => return build(constructors::alternating(n)),
                    "S" => return build(constructors::symmetric(n)),
                    "C" => return build(constructors::cyclic(n)),
                    "D" => return build(constructors::dihedral(n)),
                    _ => {}
                }
            }
            Err(CliError::usage(format!("unknown group spec token {other:?}")))
        }
    }
}

fn cmd_psi(cli: &Cli, spec: &[String]) -> Result<ExitCode, CliError> {
    if spec.is_empty() {
        return Err(CliError::usage("psi needs a group spec"));
    }
    let (label, group) = parse_group_spec(cli, spec)?;
    let value = ordersum::psi(&group).map_err(|e| CliError::data(e.to_string()))?;
    let multiset = order_multiset(&group).map_err(|e| CliError::data(e.to_string()))?;
    if cli.json {
        #[derive(serde::Serialize)]
        struct PsiReport<'a> {
            schema_version: u32,
            group_id: &'a str,
            order: u64,
            psi: String,
            element_orders: Vec<(u64, u64)>,
        }
        let rep = PsiReport {
            schema_version: report::SCHEMA_VERSION,
            group_id: &label,
            order: group.order(),
            psi: value.to_string(),
            element_orders: multiset.iter().map(|(&o, &c)| (o, c)).collect(),
        };
        println!("{}", serde_json::to_string_pretty(&rep).expect("serializes"));
    } else {
        let summary: Vec<String> = multiset
            .iter()
            .map(|(o, c)| format!("{o}^{c}"))
            .collect();
        println!("psi({label}) = {value}");
        println!("order {} | element orders: {}", group.order(), summary.join(" "));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(
    cli: &Cli,
    kind: &str,
    spec: &[String],
    orders: Option<&str>,
) -> Result<ExitCode, CliError> {
    let entries: Vec<CatalogEntry> = if spec.is_empty() {
        filter_orders(load_entries(cli)?, orders)?
    } else {
        let (label, group) = parse_group_spec(cli, spec)?;
        vec![CatalogEntry {
            order: group.order(),
            index: 1,
            name: Some(label),
            degree: group.degree(),
            generators: group.generators().to_vec(),
            expected_psi: None,
        }]
    };

    match kind {
        "t" | "odd" | "solvable" => {
            let kind = match kind {
                "t" => ThresholdKind::Supersolvable,
                "odd" => ThresholdKind::OddSupersolvable,
                _ => ThresholdKind::Solvable,
            };
            let outcomes =
                run_threshold_sweep(&entries, kind).map_err(|e| CliError::data(e.to_string()))?;
            let violations: Vec<&CheckOutcome> = outcomes
                .iter()
                .filter(|o| o.verdict == Verdict::Violation)
                .collect();
            if cli.json {
                println!("{}", report::outcomes_to_json(kind_name(kind), &outcomes));
            } else if cli.tsv {
                print!("{}", report::outcomes_to_tsv(&outcomes));
            } else {
                let equalities: Vec<String> = outcomes
                    .iter()
                    .filter(|o| matches!(o.witness, Some(Witness::Equality { .. })))
                    .map(|o| o.group_id.clone())
                    .collect();
                println!(
                    "{}: {} groups checked, {} violations",
                    kind_name(kind),
                    outcomes.len(),
                    violations.len()
                );
                if !equalities.is_empty() {
                    println!("equality cases: {}", equalities.join(", "));
                }
                for v in &violations {
                    println!("VIOLATION: {} (order {})", v.group_id, v.order);
                }
            }
            Ok(if violations.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        "hlm" => {
            let scan =
                scan_subgroup_index_bound(&entries).map_err(|e| CliError::data(e.to_string()))?;
            if cli.json {
                println!("{}", report::outcomes_to_json("hlm", &scan.findings));
            } else if cli.tsv {
                print!("{}", report::outcomes_to_tsv(&scan.findings));
            } else {
                println!(
                    "subgroup index bound: {} groups, {} (G, H) pairs, {} findings",
                    scan.groups_scanned, scan.pairs_checked, scan.findings.len()
                );
                for f in &scan.findings {
                    if let Some(Witness::SubgroupBound {
                        subgroup_order,
                        index,
                        bound,
                        ..
                    }) = &f.witness
                    {
                        println!(
                            "finding: {} (order {}): psi {} > bound {} from |H| = {subgroup_order}, index {index}",
                            f.group_id, f.order, f.psi, bound
                        );
                    }
                }
                for n in &scan.notices {
                    println!("notice: {n}");
                }
            }
            // Findings are expected; they are not violations.
            Ok(ExitCode::SUCCESS)
        }
        other => Err(CliError::usage(format!(
            "unknown check {other:?}; expected t, odd, solvable, or hlm"
        ))),
    }
}

fn kind_name(kind: ThresholdKind) -> &'static str {
    match kind {
        ThresholdKind::Supersolvable => "t",
        ThresholdKind::OddSupersolvable => "odd",
        ThresholdKind::Solvable => "solvable",
    }
}

fn cmd_lemmas(cli: &Cli, orders: Option<&str>, limit: u64) -> Result<ExitCode, CliError> {
    let entries = filter_orders(load_entries(cli)?, orders)?;
    let report_data = verify_inequalities_with_limit(&entries, limit)
        .map_err(|e| CliError::data(e.to_string()))?;
    if cli.json {
        println!("{}", report::inequalities_to_json(&report_data));
    } else if cli.tsv {
        print!("{}", report::inequalities_to_tsv(&report_data));
    } else {
        for c in &report_data.checks {
            println!(
                "{:<36} {:>9} checked  {:>3} failures  ({})",
                c.name,
                c.checked,
                c.failures.len(),
                c.scope
            );
            for f in &c.failures {
                println!("  FAIL: {f}");
            }
        }
    }
    Ok(if report_data.is_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_catalog(cli: &Cli, action: &str, orders: Option<&str>) -> Result<ExitCode, CliError> {
    let entries = filter_orders(load_entries(cli)?, orders)?;
    match action {
        "stats" => {
            let mut per_order: BTreeMap<u64, u64> = BTreeMap::new();
            for e in &entries {
                *per_order.entry(e.order).or_insert(0) += 1;
            }
            if cli.json {
                #[derive(serde::Serialize)]
                struct Stats {
                    schema_version: u32,
                    total: usize,
                    per_order: Vec<(u64, u64)>,
                }
                let s = Stats {
                    schema_version: report::SCHEMA_VERSION,
                    total: entries.len(),
                    per_order: per_order.iter().map(|(&o, &c)| (o, c)).collect(),
                };
                println!("{}", serde_json::to_string_pretty(&s).expect("serializes"));
            } else {
                let orders_span = match (per_order.keys().next(), per_order.keys().last()) {
                    (Some(lo), Some(hi)) => format!("orders {lo}..{hi}"),
                    _ => "empty".into(),
                };
                println!("{} groups over {}", entries.len(), orders_span);
                for (o, c) in &per_order {
                    println!("{o}\t{c}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        "validate" => {
            let report_data = catalog::validate_catalog(&entries, catalog::bundled_counts());
            if cli.json {
                #[derive(serde::Serialize)]
                struct Validation<'a> {
                    schema_version: u32,
                    entries_checked: usize,
                    problems: &'a [String],
                }
                let v = Validation {
                    schema_version: report::SCHEMA_VERSION,
                    entries_checked: report_data.entries_checked,
                    problems: &report_data.problems,
                };
                println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
            } else {
                println!(
                    "validated {} entries over {} orders",
                    report_data.entries_checked,
                    report_data.per_order.len()
                );
                for p in &report_data.problems {
                    println!("PROBLEM: {p}");
                }
            }
            if report_data.is_ok() {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(CliError::data(format!(
                    "{} validation problems",
                    report_data.problems.len()
                )))
            }
        }
        other => Err(CliError::usage(format!(
            "unknown catalog action {other:?}; expected validate or stats"
        ))),
    }
}
