//! Command-line surface.
//!
//! Exit codes: 0 success, 1 spec/usage error, 2 size cap exceeded,
//! 3 verification or reproduction mismatch.

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::chartab::{constructors, io as table_io, CharacterTable};
use crate::cyclotomic::format_rational;
use crate::engine::{
    solve, Complexity, EmbedPair, Mode, ProblemSpec, QueryReport, RepSource, SubgroupChoice,
};
use crate::error::{Error, Result};
use crate::group::{natural_action, Group, GroupSpec};
use crate::{families, verify};

#[derive(Parser)]
#[command(
    name = "cosetid",
    version,
    about = "Exact success probabilities and query counts for group oracle problems"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON report to a file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build (or load) and validate a character table.
    Table {
        /// Family shorthand: S4, A5, D6, heisenberg:3,1, abelian:2,2, fungroup:3:2.
        #[arg(long)]
        group: Option<String>,
        /// Load a table document instead of building one.
        #[arg(long)]
        load: Option<PathBuf>,
    },
    /// Identify a hidden group element.
    Sod {
        #[arg(long)]
        group: Option<String>,
        /// natural | regular | irreps:LABEL;LABEL;...
        #[arg(long, default_value = "natural")]
        rep: String,
        /// Query range, inclusive: "1..4" or a single "3".
        #[arg(long, default_value = "1..4")]
        t: String,
        #[arg(long, default_value = "2/3")]
        threshold: String,
        /// Full problem document (overrides the flags above).
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Identify which coset of a subgroup holds the hidden element.
    Coset {
        #[arg(long)]
        group: Option<String>,
        /// klein4 | center | zero-sum | alternating | trivial | @embedding.json
        #[arg(long)]
        subgroup: Option<String>,
        #[arg(long, default_value = "natural")]
        rep: String,
        #[arg(long, default_value = "1..4")]
        t: String,
        #[arg(long, default_value = "2/3")]
        threshold: String,
        #[arg(long)]
        spec: Option<PathBuf>,
    },
    /// Classical query count of the natural action.
    BaseSize {
        #[arg(long)]
        group: String,
    },
    /// Cross-check the exact formulas against dense-matrix simulations.
    Verify {
        /// Run a single named instance (default: the whole battery).
        #[arg(long)]
        instance: Option<String>,
    },
    /// Re-run the worked-example regressions.
    Reproduce {
        /// One of: symmetric-identify, alternating-identify,
        /// heisenberg-identify, heisenberg-center, permutation-sign,
        /// klein4-coset, poly-interpolation, group-summation,
        /// bitstring-identify, base-sizes.
        #[arg(long)]
        target: Option<String>,
        /// Run every target.
        #[arg(long)]
        all: bool,
    },
    /// Evaluate the closed forms directly.
    Families {
        #[command(subcommand)]
        which: FamilyCmd,
    },
}

#[derive(Subcommand)]
enum FamilyCmd {
    /// Binomial mass of weight <= t over 2^n.
    VanDam {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u64,
    },
    /// min(floor(k/(k-t)), m)/m.
    GroupSummation {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        t: u64,
    },
    /// 1 - 1/p + 2/p^(n+1) - 1/p^(2n+1).
    Heisenberg {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
    },
    /// Permutations of n with an increasing subsequence of length >= len.
    Lis {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        len: u32,
    },
    /// t-fold sumset size of the evaluation curve in F_q^(d+1).
    Curve {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        t: u32,
    },
    /// Exact query counts for permutation problems of degree n.
    Gammas {
        #[arg(long)]
        n: u32,
    },
}

/// Parse the group shorthand.
pub fn parse_group(s: &str) -> Result<GroupSpec> {
    let lower = s.to_ascii_lowercase();
    let parse_nums = |body: &str| -> Result<Vec<u64>> {
        body.split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad number '{p}' in group '{s}'")))
            })
            .collect()
    };
    if let Some(rest) = lower.strip_prefix("heisenberg:").or_else(|| lower.strip_prefix("heis:")) {
        let nums = parse_nums(rest)?;
        if nums.len() != 2 {
            return Err(Error::Parse(format!("expected heisenberg:p,n in '{s}'")));
        }
        return Ok(GroupSpec::Heisenberg { p: nums[0], n: nums[1] as u32 });
    }
    if let Some(rest) = lower.strip_prefix("abelian:") {
        return Ok(GroupSpec::AbelianProduct { orders: parse_nums(rest)? });
    }
    if let Some(rest) = lower.strip_prefix("fungroup:") {
        let (k, orders) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected fungroup:k:orders in '{s}'")))?;
        let k: u32 = k
            .parse()
            .map_err(|_| Error::Parse(format!("bad slot count in '{s}'")))?;
        return Ok(GroupSpec::FunctionGroup { k, orders: parse_nums(orders)? });
    }
    if let Some(n) = lower.strip_prefix('s').and_then(|r| r.parse::<u32>().ok()) {
        return Ok(GroupSpec::Symmetric { n });
    }
    if let Some(n) = lower.strip_prefix('a').and_then(|r| r.parse::<u32>().ok()) {
        return Ok(GroupSpec::Alternating { n });
    }
    if let Some(n) = lower.strip_prefix('d').and_then(|r| r.parse::<u32>().ok()) {
        return Ok(GroupSpec::Dihedral { n });
    }
    Err(Error::Parse(format!(
        "unrecognized group '{s}' (try S4, A5, D6, heisenberg:3,1, abelian:2,2, fungroup:3:2)"
    )))
}

fn parse_rep(s: &str) -> Result<RepSource> {
    match s {
        "natural" => Ok(RepSource::Natural),
        "regular" => Ok(RepSource::Regular),
        other => {
            if let Some(labels) = other.strip_prefix("irreps:") {
                Ok(RepSource::IrrepSum {
                    labels: labels.split(';').map(|l| l.trim().to_string()).collect(),
                })
            } else {
                Err(Error::Parse(format!(
                    "unrecognized rep '{other}' (natural, regular, irreps:LABEL;LABEL)"
                )))
            }
        }
    }
}

fn parse_subgroup(s: &str) -> Result<SubgroupChoice> {
    match s {
        "trivial" => Ok(SubgroupChoice::Trivial),
        "klein4" => Ok(SubgroupChoice::Klein4),
        "center" => Ok(SubgroupChoice::Center),
        "zero-sum" | "zero_sum" => Ok(SubgroupChoice::ZeroSum),
        "alternating" => Ok(SubgroupChoice::Alternating),
        other => {
            if let Some(path) = other.strip_prefix('@') {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("cannot read '{path}': {e}")))?;
                #[derive(serde::Deserialize)]
                struct EmbeddingDoc {
                    group: GroupSpec,
                    embedding: Vec<EmbedPair>,
                }
                let doc: EmbeddingDoc =
                    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
                Ok(SubgroupChoice::Explicit { group: doc.group, embedding: doc.embedding })
            } else {
                Err(Error::Parse(format!(
                    "unrecognized subgroup '{other}' (klein4, center, zero-sum, alternating, \
                     trivial, @embedding.json)"
                )))
            }
        }
    }
}

/// Inclusive query range: "2..5" or "3".
fn parse_t_range(s: &str) -> Result<(u64, u64)> {
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: u64 = lo.parse().map_err(|_| Error::Parse(format!("bad range '{s}'")))?;
        let hi: u64 = hi.parse().map_err(|_| Error::Parse(format!("bad range '{s}'")))?;
        if lo == 0 || hi < lo {
            return Err(Error::Parse(format!("empty or zero-based range '{s}'")));
        }
        Ok((lo, hi))
    } else {
        let t: u64 = s.parse().map_err(|_| Error::Parse(format!("bad range '{s}'")))?;
        if t == 0 {
            return Err(Error::Parse("queries start at t = 1".into()));
        }
        Ok((t, t))
    }
}

fn load_spec(path: &PathBuf) -> Result<ProblemSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read '{}': {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

fn report_text(report: &QueryReport, t_lo: u64) -> String {
    let mut out = String::new();
    out.push_str(&format!("path: {}\n", report.path));
    for row in &report.rows {
        if row.t < t_lo {
            continue;
        }
        out.push_str(&format!("t={}  P = {}", row.t, row.probability));
        if !row.witnesses.is_empty() {
            out.push_str(&format!("  witness {}", row.witnesses.join(", ")));
        }
        out.push_str(&format!("  (support {})\n", row.support_size));
    }
    let fmt_complexity = |c: &Complexity| match c {
        Complexity::Finite { t } => t.to_string(),
        Complexity::Infinite { cycle_start, cycle_period } => format!(
            "infinity (support cycle: start {cycle_start}, period {cycle_period})"
        ),
        Complexity::CapHit => "undecided (iteration cap)".to_string(),
    };
    out.push_str(&format!("gamma       = {}\n", fmt_complexity(&report.gamma)));
    out.push_str(&format!(
        "gamma_bdd   = {}   (threshold {})\n",
        fmt_complexity(&report.gamma_bdd),
        report.threshold
    ));
    if let Some(b) = report.base_size {
        out.push_str(&format!("base size   = {b}\n"));
    }
    if let Some(bound) = report.power_cover_bound {
        out.push_str(&format!("cover bound = {bound}\n"));
    }
    for w in &report.warnings {
        out.push_str(&format!("note: {w}\n"));
    }
    out
}

fn table_text(table: &CharacterTable) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "group of order {} with {} classes (conductor {})\n",
        table.order(),
        table.class_count(),
        table.conductor
    ));
    let mut header = vec!["".to_string()];
    for info in &table.classes.classes {
        header.push(format!("{}x(ord {})", info.size, info.element_order));
    }
    let mut rows = vec![header];
    for chi in &table.irreps {
        let mut row = vec![chi.label.to_string()];
        for v in &chi.values {
            row.push(v.to_string_in(table.conductor).unwrap_or_else(|_| "?".into()));
        }
        rows.push(row);
    }
    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    for row in rows {
        for (cell, w) in row.iter().zip(&widths) {
            out.push_str(&format!("{cell:>w$}  ", w = w));
        }
        out.push('\n');
    }
    out
}

fn emit(json_mode: bool, out: &Option<PathBuf>, text: String, json: String) -> Result<()> {
    if let Some(path) = out {
        std::fs::write(path, &json)
            .map_err(|e| Error::Parse(format!("cannot write '{}': {e}", path.display())))?;
    }
    if json_mode {
        println!("{json}");
    } else {
        print!("{text}");
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// reproduction targets
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, serde::Serialize)]
pub struct ReproCheck {
    pub target: String,
    pub check: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

fn check(
    list: &mut Vec<ReproCheck>,
    target: &str,
    name: impl Into<String>,
    expected: impl ToString,
    computed: impl ToString,
) {
    let expected = expected.to_string();
    let computed = computed.to_string();
    list.push(ReproCheck {
        target: target.to_string(),
        check: name.into(),
        pass: expected == computed,
        expected,
        computed,
    });
}

pub const REPRODUCE_TARGETS: &[&str] = &[
    "symmetric-identify",
    "alternating-identify",
    "heisenberg-identify",
    "heisenberg-center",
    "permutation-sign",
    "klein4-coset",
    "poly-interpolation",
    "group-summation",
    "bitstring-identify",
    "base-sizes",
];

/// Run one reproduction target, appending its checks.
pub fn run_target(target: &str, checks: &mut Vec<ReproCheck>) -> Result<()> {
    match target {
        "symmetric-identify" => {
            for n in 3..=7u32 {
                let mut path = crate::engine::SnPartitionPath::new(n)?;
                check(checks, target, format!("gamma(S_{n}) partition path"),
                    families::sn_gamma(n), path.sn_gamma());
            }
            for n in 3..=5u32 {
                let report = solve(&ProblemSpec::sod(GroupSpec::Symmetric { n }), n as u64 - 1)?;
                check(checks, target, format!("gamma(S_{n}) table path"),
                    families::sn_gamma(n),
                    report.gamma.finite().map(|t| t.to_string()).unwrap_or("infinity".into()));
                let mut path = crate::engine::SnPartitionPath::new(n)?;
                for t in 1..n as u64 {
                    check(checks, target, format!("P(S_{n}, t={t}) table vs partition"),
                        format_rational(&path.sn_success(t)),
                        report.rows[(t - 1) as usize].probability.clone());
                }
            }
            for n in 3..=6u32 {
                let mut path = crate::engine::SnPartitionPath::new(n)?;
                for t in 1..n as u64 {
                    check(checks, target, format!("mass(S_{n}, t={t}) vs subsequence count"),
                        families::lis_count(n, n - t as u32)?,
                        path.sn_dimension_sum(t));
                }
            }
            Ok(())
        }
        "alternating-identify" => {
            for n in 4..=8u32 {
                let mut path = crate::engine::SnPartitionPath::new(n)?;
                check(checks, target, format!("gamma(A_{n})"), families::an_gamma(n), path.an_gamma());
                for t in 1..=(n as u64 - 1) {
                    let p = path.sn_success(t);
                    let q = path.an_success(t);
                    let sandwich = p <= q && q <= &p * num_rational::BigRational::from_integer(2.into());
                    check(checks, target, format!("sandwich(A_{n}, t={t})"), true, sandwich);
                }
            }
            Ok(())
        }
        "heisenberg-identify" => {
            for (p, n) in [(2u64, 1u32), (3, 1)] {
                let report = solve(&ProblemSpec::sod(GroupSpec::Heisenberg { p, n }), 2)?;
                check(checks, target, format!("P(G({p},{n}), t=1)"),
                    format_rational(&families::heisenberg_single_query(p, n)?),
                    report.rows[0].probability.clone());
                check(checks, target, format!("gamma(G({p},{n}))"), 2,
                    report.gamma.finite().map(|t| t.to_string()).unwrap_or("infinity".into()));
            }
            Ok(())
        }
        "heisenberg-center" => {
            for (p, n) in [(2u64, 1u32), (3, 1)] {
                let spec = ProblemSpec::coset(GroupSpec::Heisenberg { p, n }, SubgroupChoice::Center);
                let report = solve(&spec, 1)?;
                check(checks, target, format!("P(G({p},{n}) center, t=1)"), "1",
                    report.rows[0].probability.clone());
            }
            let spec = ProblemSpec::coset(GroupSpec::Heisenberg { p: 2, n: 1 }, SubgroupChoice::Center);
            let outcome = verify::verify_instance("heisenberg-2-1-center", &spec, 1)?;
            check(checks, target, "matrix confirmation G(2,1)", true, outcome.pass);
            Ok(())
        }
        "permutation-sign" => {
            for n in 3..=8u32 {
                let spec = ProblemSpec::coset(GroupSpec::Symmetric { n }, SubgroupChoice::Alternating);
                let expect = families::sign_complexity(n);
                let report = solve(&spec, expect)?;
                check(checks, target, format!("sign complexity, degree {n}"), expect,
                    report.gamma.finite().map(|t| t.to_string()).unwrap_or("infinity".into()));
                for t in 1..expect {
                    check(checks, target, format!("coin-flip below (n={n}, t={t})"), "1/2",
                        report.rows[(t - 1) as usize].probability.clone());
                }
            }
            Ok(())
        }
        "klein4-coset" => {
            let spec = ProblemSpec::coset(GroupSpec::Symmetric { n: 4 }, SubgroupChoice::Klein4);
            let report = solve(&spec, 2)?;
            check(checks, target, "P(t=1)", "1/2", report.rows[0].probability.clone());
            check(checks, target, "P(t=2)", "1", report.rows[1].probability.clone());
            let outcome = verify::verify_instance("klein4", &spec, 1)?;
            check(checks, target, "matrix confirmation", true, outcome.pass);
            Ok(())
        }
        "poly-interpolation" => {
            for (q, d) in [(2u32, 1u32), (3, 1), (2, 2)] {
                let labels: Vec<String> = families::curve_sumset(q, d, 1)?
                    .iter()
                    .map(|pt| {
                        let strs: Vec<String> = pt.iter().map(|v| v.to_string()).collect();
                        format!("({})", strs.join(","))
                    })
                    .collect();
                let spec = ProblemSpec {
                    group: GroupSpec::AbelianProduct { orders: vec![q as u64; d as usize + 1] },
                    rep: RepSource::IrrepSum { labels },
                    mode: Mode::Sod,
                    threshold: "2/3".into(),
                };
                for t in 1..=3u64 {
                    check(checks, target, format!("|Z_t|/q^(d+1) (q={q}, d={d}, t={t})"),
                        format_rational(&families::poly_interp_success(q, d, t as u32)?),
                        format_rational(&crate::engine::sod_success(&spec, t)?));
                }
            }
            Ok(())
        }
        "group-summation" => {
            for m in 2..=5u64 {
                for k in 2..=4u64 {
                    let spec = ProblemSpec::coset(
                        GroupSpec::FunctionGroup { k: k as u32, orders: vec![m] },
                        SubgroupChoice::ZeroSum,
                    );
                    let report = solve(&spec, k)?;
                    for t in 1..=k {
                        check(checks, target, format!("P(m={m}, k={k}, t={t})"),
                            format_rational(&families::group_summation(m, k, t)?),
                            report.rows[(t - 1) as usize].probability.clone());
                    }
                }
            }
            Ok(())
        }
        "bitstring-identify" => {
            for n in 1..=6u32 {
                let spec = ProblemSpec::sod(GroupSpec::FunctionGroup { k: n, orders: vec![2] });
                let report = solve(&spec, n as u64)?;
                for t in 1..=n as u64 {
                    check(checks, target, format!("P(n={n}, t={t})"),
                        format_rational(&families::van_dam(n, t)?),
                        report.rows[(t - 1) as usize].probability.clone());
                }
            }
            Ok(())
        }
        "base-sizes" => {
            for n in 3..=8u32 {
                let g = Group::new(GroupSpec::Symmetric { n })?;
                check(checks, target, format!("base(S_{n})"), n as u64 - 1,
                    crate::engine::classical_base_size(&natural_action(&g)?)?);
            }
            for n in 4..=8u32 {
                let g = Group::new(GroupSpec::Alternating { n })?;
                check(checks, target, format!("base(A_{n})"), n as u64 - 2,
                    crate::engine::classical_base_size(&natural_action(&g)?)?);
            }
            for n in 3..=8u32 {
                let g = Group::new(GroupSpec::Dihedral { n })?;
                check(checks, target, format!("base(D_{n})"), 2u64,
                    crate::engine::classical_base_size(&natural_action(&g)?)?);
            }
            for (p, n) in [(2u64, 1u32), (3, 1), (2, 2)] {
                let g = Group::new(GroupSpec::Heisenberg { p, n })?;
                check(checks, target, format!("base(G({p},{n}))"), n as u64 + 1,
                    crate::engine::classical_base_size(&natural_action(&g)?)?);
            }
            Ok(())
        }
        other => Err(Error::Parameter(format!(
            "unknown reproduction target '{other}' (known: {})",
            REPRODUCE_TARGETS.join(", ")
        ))),
    }
}

// ---------------------------------------------------------------------------
// entry point
// ---------------------------------------------------------------------------

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Command::Table { group, load } => {
            let table = match (group, load) {
                (Some(g), None) => {
                    let group = Group::new(parse_group(&g)?)?;
                    constructors::char_table_for(&group)?
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| Error::Parse(format!("cannot read '{}': {e}", path.display())))?;
                    table_io::load_char_table(&text)?
                }
                _ => {
                    return Err(Error::Parse(
                        "table needs exactly one of --group or --load".into(),
                    ))
                }
            };
            let violations = crate::chartab::validate_table(&table);
            if !violations.is_empty() {
                return Err(Error::TableInvalid(violations.join("; ")));
            }
            let json = table_io::save_char_table(&table)?;
            emit(cli.json, &cli.out, table_text(&table), json)?;
            Ok(0)
        }
        Command::Sod { group, rep, t, threshold, spec } => {
            let (t_lo, t_hi) = parse_t_range(&t)?;
            let spec = match spec {
                Some(path) => load_spec(&path)?,
                None => {
                    let group = group.ok_or_else(|| Error::Parse("missing --group".into()))?;
                    ProblemSpec {
                        group: parse_group(&group)?,
                        rep: parse_rep(&rep)?,
                        mode: Mode::Sod,
                        threshold,
                    }
                }
            };
            let report = solve(&spec, t_hi)?;
            let json = serde_json::to_string_pretty(&report).map_err(|e| Error::Parse(e.to_string()))?;
            emit(cli.json, &cli.out, report_text(&report, t_lo), json)?;
            Ok(0)
        }
        Command::Coset { group, subgroup, rep, t, threshold, spec } => {
            let (t_lo, t_hi) = parse_t_range(&t)?;
            let spec = match spec {
                Some(path) => load_spec(&path)?,
                None => {
                    let group = group.ok_or_else(|| Error::Parse("missing --group".into()))?;
                    let subgroup =
                        subgroup.ok_or_else(|| Error::Parse("missing --subgroup".into()))?;
                    ProblemSpec {
                        group: parse_group(&group)?,
                        rep: parse_rep(&rep)?,
                        mode: Mode::Coset { subgroup: parse_subgroup(&subgroup)? },
                        threshold,
                    }
                }
            };
            let report = solve(&spec, t_hi)?;
            let json = serde_json::to_string_pretty(&report).map_err(|e| Error::Parse(e.to_string()))?;
            emit(cli.json, &cli.out, report_text(&report, t_lo), json)?;
            Ok(0)
        }
        Command::BaseSize { group } => {
            let g = Group::new(parse_group(&group)?)?;
            let b = crate::engine::classical_base_size(&natural_action(&g)?)?;
            let json = serde_json::json!({ "group": g.spec(), "base_size": b }).to_string();
            emit(cli.json, &cli.out, format!("base size = {b}\n"), json)?;
            Ok(0)
        }
        Command::Verify { instance } => {
            let outcomes = match instance {
                None => verify::verify_all()?,
                Some(name) => {
                    let all = verify::standard_instances();
                    let found = all
                        .into_iter()
                        .find(|(n, _, _)| *n == name)
                        .ok_or_else(|| Error::Parameter(format!("unknown instance '{name}'")))?;
                    vec![verify::verify_instance(&found.0, &found.1, found.2)?]
                }
            };
            let mut text = String::new();
            let mut all_pass = true;
            for o in &outcomes {
                all_pass &= o.pass;
                text.push_str(&format!(
                    "{:<34} formula {:>8}  simulated {:.10}  |delta| {:.2e}  {}\n",
                    o.name,
                    o.formula,
                    o.simulated,
                    o.delta,
                    if o.pass { "ok" } else { "MISMATCH" }
                ));
            }
            let json = serde_json::json!({
                "instances": outcomes.iter().map(|o| serde_json::json!({
                    "name": o.name,
                    "formula": o.formula,
                    "formula_value": o.formula_value,
                    "simulated": o.simulated,
                    "delta": o.delta,
                    "pass": o.pass,
                })).collect::<Vec<_>>(),
                "pass": all_pass,
            })
            .to_string();
            emit(cli.json, &cli.out, text, json)?;
            Ok(if all_pass { 0 } else { 3 })
        }
        Command::Reproduce { target, all } => {
            let targets: Vec<&str> = match (target, all) {
                (Some(t), false) => {
                    let known = REPRODUCE_TARGETS
                        .iter()
                        .find(|k| **k == t)
                        .ok_or_else(|| Error::Parameter(format!("unknown target '{t}'")))?;
                    vec![*known]
                }
                (None, true) => REPRODUCE_TARGETS.to_vec(),
                _ => {
                    return Err(Error::Parse(
                        "reproduce needs exactly one of --target NAME or --all".into(),
                    ))
                }
            };
            let mut checks = Vec::new();
            for t in targets {
                run_target(t, &mut checks)?;
            }
            let mut text = String::new();
            let mut all_pass = true;
            for c in &checks {
                all_pass &= c.pass;
                text.push_str(&format!(
                    "{:<24} {:<44} expected {:>8}  computed {:>8}  {}\n",
                    c.target,
                    c.check,
                    c.expected,
                    c.computed,
                    if c.pass { "ok" } else { "MISMATCH" }
                ));
            }
            text.push_str(&format!(
                "{} checks, {} failures\n",
                checks.len(),
                checks.iter().filter(|c| !c.pass).count()
            ));
            let json = serde_json::json!({
                "checks": checks,
                "pass": all_pass,
            })
            .to_string();
            emit(cli.json, &cli.out, text, json)?;
            Ok(if all_pass { 0 } else { 3 })
        }
        Command::Families { which } => {
            let (text, json) = match which {
                FamilyCmd::VanDam { n, t } => {
                    let v = families::van_dam(n, t)?;
                    (format_rational(&v), serde_json::json!({"value": format_rational(&v)}))
                }
                FamilyCmd::GroupSummation { m, k, t } => {
                    let v = families::group_summation(m, k, t)?;
                    (format_rational(&v), serde_json::json!({"value": format_rational(&v)}))
                }
                FamilyCmd::Heisenberg { p, n } => {
                    let v = families::heisenberg_single_query(p, n)?;
                    (format_rational(&v), serde_json::json!({"value": format_rational(&v)}))
                }
                FamilyCmd::Lis { n, len } => {
                    let v = families::lis_count(n, len)?;
                    (v.to_string(), serde_json::json!({"value": v}))
                }
                FamilyCmd::Curve { q, d, t } => {
                    let size = families::curve_sumset_size(q, d, t)?;
                    let p = families::poly_interp_success(q, d, t)?;
                    (
                        format!("|Z_{t}| = {size}, probability {}", format_rational(&p)),
                        serde_json::json!({"size": size, "probability": format_rational(&p)}),
                    )
                }
                FamilyCmd::Gammas { n } => {
                    let text = format!(
                        "identify permutation: {}\nidentify even permutation: {}\nname the sign: {}",
                        families::sn_gamma(n),
                        families::an_gamma(n),
                        families::sign_complexity(n)
                    );
                    let json = serde_json::json!({
                        "symmetric": families::sn_gamma(n),
                        "alternating": families::an_gamma(n),
                        "sign": families::sign_complexity(n),
                    });
                    (text, json)
                }
            };
            emit(cli.json, &cli.out, format!("{text}\n"), json.to_string())?;
            Ok(0)
        }
    }
}

/// Binary entry point; returns the process exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded(_) => 2,
                _ => 1,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_shorthand() {
        assert_eq!(parse_group("S4").unwrap(), GroupSpec::Symmetric { n: 4 });
        assert_eq!(parse_group("a5").unwrap(), GroupSpec::Alternating { n: 5 });
        assert_eq!(parse_group("D6").unwrap(), GroupSpec::Dihedral { n: 6 });
        assert_eq!(
            parse_group("heisenberg:3,1").unwrap(),
            GroupSpec::Heisenberg { p: 3, n: 1 }
        );
        assert_eq!(
            parse_group("abelian:2,2").unwrap(),
            GroupSpec::AbelianProduct { orders: vec![2, 2] }
        );
        assert_eq!(
            parse_group("fungroup:3:2").unwrap(),
            GroupSpec::FunctionGroup { k: 3, orders: vec![2] }
        );
        assert!(parse_group("q8").is_err());
    }

    #[test]
    fn t_ranges() {
        assert_eq!(parse_t_range("1..4").unwrap(), (1, 4));
        assert_eq!(parse_t_range("3").unwrap(), (3, 3));
        assert!(parse_t_range("0..2").is_err());
        assert!(parse_t_range("4..2").is_err());
        assert!(parse_t_range("x").is_err());
    }

    #[test]
    fn rep_and_subgroup_parsing() {
        assert_eq!(parse_rep("natural").unwrap(), RepSource::Natural);
        assert!(matches!(
            parse_rep("irreps:[3,1];[4]").unwrap(),
            RepSource::IrrepSum { .. }
        ));
        assert!(parse_rep("spectral").is_err());
        assert_eq!(parse_subgroup("klein4").unwrap(), SubgroupChoice::Klein4);
        assert_eq!(parse_subgroup("zero-sum").unwrap(), SubgroupChoice::ZeroSum);
        assert!(parse_subgroup("normalizer").is_err());
    }

    #[test]
    fn reproduce_targets_known() {
        let mut checks = Vec::new();
        assert!(run_target("nonexistent", &mut checks).is_err());
        run_target("klein4-coset", &mut checks).unwrap();
        assert!(checks.iter().all(|c| c.pass));
    }

}
