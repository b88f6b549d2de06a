//! Sweeps a generated family through the transversal checks and reports every row.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use lptrans_core::arc::{arc_intersection_graph, theorem6_transversal, ArcModel};
use lptrans_core::bounds::{
    cycle_transversal_bound, le_sqrt_times_log2, path_transversal_bound, thomassen_bound,
    within_alpha_bound, within_treewidth_bound,
};
use lptrans_core::separator::{separator_transversal_with, Fraction, Strategy, TreeDecomposition};
use lptrans_core::transversal::{
    exact_lct, exact_lpt, fractional_from_paths, greedy_alpha_transversal, verify_against,
};
use lptrans_core::{
    connectivity, longest_cycles, longest_paths, pairwise_intersection_check, Budget, Error, Graph,
    LongestFamily, Mode, DEFAULT_BUDGET,
};
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::generate::{self, RangeError};

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing key `{0}`")]
    Missing(&'static str),
    #[error("key `{key}`: {message}")]
    Value { key: String, message: String },
    #[error(transparent)]
    Range(#[from] RangeError),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    ExhaustiveConnected { n: usize, reduced: bool },
    RandomConnected { n: usize, p: f64 },
    RandomTwoConnected { n: usize, p: f64 },
    TriangleChain { t: usize },
    RandomArcModel { m: usize },
    PartialKTree { k: usize, n: usize, drop: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub enum Check {
    Thm1,
    Thm2,
    Thomassen,
    Prop3(Ratio<u64>),
    Prop4,
    Prop5,
    Thm6,
    Frac,
    Intersect,
}

impl Check {
    pub fn name(&self) -> String {
        match self {
            Check::Thm1 => "thm1".into(),
            Check::Thm2 => "thm2".into(),
            Check::Thomassen => "thomassen".into(),
            Check::Prop3(a) => format!("prop3({a})"),
            Check::Prop4 => "prop4".into(),
            Check::Prop5 => "prop5".into(),
            Check::Thm6 => "thm6".into(),
            Check::Frac => "frac".into(),
            Check::Intersect => "intersect".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub name: String,
    pub family: Family,
    pub checks: Vec<Check>,
    /// Number of instances for random families.
    pub count: usize,
    /// Seed of the first instance; instance `i` uses `seed + i`.
    pub seed: u64,
    pub budget: u64,
}

fn value_err(key: &str, message: impl Into<String>) -> ConfigError {
    ConfigError::Value {
        key: key.into(),
        message: message.into(),
    }
}

fn parse_ratio(key: &str, s: &str) -> Result<Ratio<u64>, ConfigError> {
    let bad = || value_err(key, format!("expected a positive rational, found {s:?}"));
    let r = match s.split_once('/') {
        Some((n, d)) => {
            let (n, d): (u64, u64) = (n.trim().parse().map_err(|_| bad())?, d.trim().parse().map_err(|_| bad())?);
            if d == 0 {
                return Err(bad());
            }
            Ratio::new(n, d)
        }
        None => Ratio::from_integer(s.parse().map_err(|_| bad())?),
    };
    Ok(r)
}

impl ExperimentConfig {
    /// `key = value` lines; `#` starts a comment line.
    pub fn parse(text: &str) -> Result<ExperimentConfig, ConfigError> {
        let mut kv: BTreeMap<String, String> = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| ConfigError::Syntax {
                line: i + 1,
                message: format!("expected `key = value`, found {line:?}"),
            })?;
            if kv.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
                return Err(ConfigError::Syntax {
                    line: i + 1,
                    message: format!("key `{}` given twice", k.trim()),
                });
            }
        }
        let get = |key: &'static str| kv.get(key).ok_or(ConfigError::Missing(key));
        fn num<T: std::str::FromStr>(key: &str, v: &str) -> Result<T, ConfigError> {
            v.parse().map_err(|_| value_err(key, format!("cannot parse {v:?}")))
        }
        let opt = |key: &'static str, default: &str| -> String {
            kv.get(key).cloned().unwrap_or_else(|| default.to_string())
        };

        let name = get("name")?.clone();
        if name.is_empty() || name.contains(['/', '\\']) {
            return Err(value_err("name", "must be a plain file stem"));
        }
        let family = match get("family")?.as_str() {
            "exhaustive-connected" => Family::ExhaustiveConnected {
                n: num("n", get("n")?)?,
                reduced: num("reduced", &opt("reduced", "true"))?,
            },
            "random-connected" => Family::RandomConnected {
                n: num("n", get("n")?)?,
                p: num("p", get("p")?)?,
            },
            "random-2connected" => Family::RandomTwoConnected {
                n: num("n", get("n")?)?,
                p: num("p", get("p")?)?,
            },
            "triangle-chain" => Family::TriangleChain { t: num("t", get("t")?)? },
            "random-arc-model" => Family::RandomArcModel { m: num("m", get("m")?)? },
            "partial-ktree" => Family::PartialKTree {
                k: num("k", get("k")?)?,
                n: num("n", get("n")?)?,
                drop: num("drop", &opt("drop", "0.3"))?,
            },
            other => return Err(value_err("family", format!("unknown family {other:?}"))),
        };
        let alphas: Vec<Ratio<u64>> = opt("alpha", "2")
            .split(',')
            .map(|a| parse_ratio("alpha", a.trim()))
            .collect::<Result<_, _>>()?;
        let mut checks = Vec::new();
        for c in get("checks")?.split(',').map(str::trim) {
            match c {
                "thm1" => checks.push(Check::Thm1),
                "thm2" => checks.push(Check::Thm2),
                "thomassen" => checks.push(Check::Thomassen),
                "prop3" => checks.extend(alphas.iter().map(|&a| Check::Prop3(a))),
                "prop4" => checks.push(Check::Prop4),
                "prop5" => checks.push(Check::Prop5),
                "thm6" => checks.push(Check::Thm6),
                "frac" => checks.push(Check::Frac),
                "intersect" => checks.push(Check::Intersect),
                other => return Err(value_err("checks", format!("unknown check {other:?}"))),
            }
        }
        let cfg = ExperimentConfig {
            name,
            family,
            checks,
            count: num("count", &opt("count", "1"))?,
            seed: num("seed", &opt("seed", "0"))?,
            budget: num("budget", &opt("budget", &DEFAULT_BUDGET.to_string()))?,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), ConfigError> {
        let exact_limit = |n: usize| {
            if n > 14 {
                Err(value_err("n", format!("{n} exceeds 14, the exact-check limit")))
            } else {
                Ok(())
            }
        };
        match self.family {
            Family::RandomConnected { n, .. }
            | Family::RandomTwoConnected { n, .. }
            | Family::PartialKTree { n, .. } => exact_limit(n)?,
            Family::TriangleChain { t } => exact_limit(3 * t)?,
            Family::RandomArcModel { m } if m > 10 => {
                return Err(value_err("m", format!("{m} arcs exceed the limit of 10")))
            }
            _ => {}
        }
        let arcs = matches!(self.family, Family::RandomArcModel { .. });
        for c in &self.checks {
            if (*c == Check::Thm6) != arcs {
                return Err(value_err(
                    "checks",
                    format!("{} does not apply to this family", c.name()),
                ));
            }
            if let Check::Prop3(a) = c {
                if *a < Ratio::from_integer(2) {
                    return Err(value_err("alpha", format!("alpha = {a} is below 2")));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub enum Instance {
    Graph {
        graph: Graph,
        decomposition: Option<TreeDecomposition>,
    },
    Arcs(ArcModel),
}

pub fn instances(cfg: &ExperimentConfig) -> Result<Vec<Instance>, RangeError> {
    let seeds = (0..cfg.count as u64).map(|i| cfg.seed.wrapping_add(i));
    let plain = |graph: Graph| Instance::Graph {
        graph,
        decomposition: None,
    };
    Ok(match cfg.family {
        Family::ExhaustiveConnected { n, reduced } => generate::exhaustive_connected(n, reduced)?
            .into_iter()
            .map(plain)
            .collect(),
        Family::TriangleChain { t } => vec![plain(generate::triangle_chain(t)?)],
        Family::RandomConnected { n, p } => seeds
            .map(|s| generate::random_connected(n, p, s).map(plain))
            .collect::<Result<_, _>>()?,
        Family::RandomTwoConnected { n, p } => seeds
            .map(|s| generate::random_two_connected(n, p, s).map(plain))
            .collect::<Result<_, _>>()?,
        Family::RandomArcModel { m } => seeds
            .map(|s| generate::random_arc_model(m, s).map(Instance::Arcs))
            .collect::<Result<_, _>>()?,
        Family::PartialKTree { k, n, drop } => seeds
            .map(|s| {
                generate::partial_ktree(k, n, drop, s).map(|(graph, td)| Instance::Graph {
                    graph,
                    decomposition: Some(td),
                })
            })
            .collect::<Result<_, _>>()?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// The budget ran out before the check could finish.
    Skipped,
    /// The instance is outside the check's hypotheses.
    NotApplicable,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::NotApplicable => "n/a",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Row {
    pub instance: usize,
    pub n: usize,
    pub check: String,
    /// Order of the longest paths (or cycles, for cycle checks).
    pub longest: usize,
    /// Number of longest paths (or cycles).
    pub members: usize,
    /// Exact bound expression.
    pub bound: String,
    /// Its numeric value, for ratios only; verdicts never use it.
    pub bound_value: f64,
    pub measured: Option<f64>,
    pub status: Status,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Summary {
    pub instances: usize,
    pub rows: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub not_applicable: usize,
    /// Largest `measured / bound` over passing and failing rows.
    pub max_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub name: String,
    pub rows: Vec<Row>,
    pub summary: Summary,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.summary.failed > 0
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("instance\tn\tcheck\tlongest\tmembers\tbound\tbound_value\tmeasured\tstatus\tnote\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{:.6}\t{}\t{}\t{}",
                r.instance,
                r.n,
                r.check,
                r.longest,
                r.members,
                r.bound,
                r.bound_value,
                r.measured.map_or_else(|| "-".to_string(), |m| m.to_string()),
                r.status.as_str(),
                r.note
            );
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Writes `<dir>/<name>.tsv` and `<dir>/<name>.json`.
    pub fn write(&self, dir: &Path) -> std::io::Result<(PathBuf, PathBuf)> {
        std::fs::create_dir_all(dir)?;
        let tsv = dir.join(format!("{}.tsv", self.name));
        let json = dir.join(format!("{}.json", self.name));
        std::fs::write(&tsv, self.to_tsv())?;
        std::fs::write(&json, self.to_json() + "\n")?;
        Ok((tsv, json))
    }
}

struct RowBuilder<'a> {
    instance: usize,
    n: usize,
    check: &'a Check,
}

impl RowBuilder<'_> {
    /// `shape` is `(order, count)` of the relevant longest members.
    fn row(&self, shape: Option<(usize, usize)>, bound: String, bound_value: f64) -> Row {
        Row {
            instance: self.instance,
            n: self.n,
            check: self.check.name(),
            longest: shape.map_or(0, |s| s.0),
            members: shape.map_or(0, |s| s.1),
            bound,
            bound_value,
            measured: None,
            status: Status::NotApplicable,
            note: String::new(),
        }
    }
}

fn shape(f: &impl LongestFamily) -> (usize, usize) {
    (f.length(), f.member_count())
}

fn with_outcome(mut row: Row, measured: impl Into<f64>, pass: bool) -> Row {
    row.measured = Some(measured.into());
    row.status = if pass { Status::Pass } else { Status::Fail };
    row
}

fn with_error(mut row: Row, e: &Error) -> Row {
    row.status = match e {
        Error::BudgetExceeded { .. } => Status::Skipped,
        Error::Falsified(_) | Error::Precondition(_) => Status::Fail,
        Error::Acyclic | Error::NotConnected | Error::NotTwoConnected => Status::NotApplicable,
    };
    row.note = e.to_string();
    row
}

fn not_applicable(mut row: Row, why: &str) -> Row {
    row.note = why.into();
    row
}

fn log2(n: usize) -> f64 {
    (n as f64).log2()
}

fn graph_rows(
    id: usize,
    g: &Graph,
    td: Option<&TreeDecomposition>,
    checks: &[Check],
    budget: u64,
) -> Vec<Row> {
    let n = g.vertex_count();
    let report = connectivity(g);
    let mut b = Budget::new(budget);
    let paths = longest_paths(g, &mut b);
    let cycles = longest_cycles(g, &mut b);
    let mut rows = Vec::new();
    for check in checks {
        let rb = RowBuilder { instance: id, n, check };
        let paths = match &paths {
            Ok(p) => p,
            Err(e) => {
                rows.push(with_error(rb.row(None, String::new(), 0.0), e));
                continue;
            }
        };
        let pf = shape(paths);
        let row = match check {
            Check::Thm1 => {
                let bound = path_transversal_bound(n as u64);
                let row = rb.row(Some(pf), format!("ceil(n/4 - n^(2/3)/90) = {bound}"), bound as f64);
                if !report.is_connected {
                    not_applicable(row, "not connected")
                } else {
                    match exact_lpt(g, budget) {
                        Ok(t) => with_outcome(row, t.size() as u32, t.size() as i64 <= bound),
                        Err(e) => with_error(row, &e),
                    }
                }
            }
            Check::Thm2 | Check::Thomassen => {
                let (bound, text) = if *check == Check::Thm2 {
                    let b = cycle_transversal_bound(n as u64);
                    (b, format!("ceil(n/3 - n^(2/3)/36) = {b}"))
                } else {
                    let b = thomassen_bound(n as u64) as i64;
                    (b, format!("ceil(n/3) = {b}"))
                };
                let cf = cycles.as_ref().ok().map(shape);
                let row = rb.row(cf, text, bound as f64);
                let applies = if *check == Check::Thm2 {
                    report.is_two_connected
                } else {
                    report.is_connected && !g.is_acyclic()
                };
                if !applies {
                    not_applicable(
                        row,
                        if *check == Check::Thm2 { "not 2-connected" } else { "not connected or acyclic" },
                    )
                } else {
                    match exact_lct(g, budget) {
                        Ok(t) => with_outcome(row, t.size() as u32, t.size() as i64 <= bound),
                        Err(e) => with_error(row, &e),
                    }
                }
            }
            Check::Prop3(alpha) => {
                let a = *alpha.numer() as f64 / *alpha.denom() as f64;
                let count = paths.member_count();
                let value = count as f64 / a + (a * n as f64).sqrt();
                let row = rb.row(Some(pf), format!("|P|/{alpha} + sqrt({alpha} n)"), value);
                if !report.is_connected {
                    not_applicable(row, "not connected")
                } else {
                    match greedy_alpha_transversal(g, *alpha, budget) {
                        Ok(t) => {
                            let size = t.transversal.size() as u64;
                            let pass = within_alpha_bound(size, count as u64, *alpha, n as u64);
                            let mut row = with_outcome(row, size as u32, pass);
                            row.note = format!("{} levels", t.steps.len());
                            row
                        }
                        Err(e) => with_error(row, &e),
                    }
                }
            }
            Check::Prop4 => {
                let value = if n >= 2 { 9.0 * (n as f64).sqrt() * log2(n) } else { 0.0 };
                let row = rb.row(Some(pf), "9 sqrt(n) log2 n".into(), value);
                if !report.is_connected || n < 2 {
                    not_applicable(row, "needs a connected graph with n >= 2")
                } else {
                    let strategy = Strategy::Brute(Fraction::TwoThirds);
                    match separator_transversal_with(g, paths, strategy, &mut Budget::new(budget)) {
                        Ok(s) => {
                            let size = s.transversal.size() as u64;
                            // the bound is stated for separators of order at most 2 sqrt(2) sqrt(n)
                            let small = s.levels.iter().all(|l| {
                                let k = l.separator.len() as u64;
                                k * k <= 8 * l.graph_order as u64
                            });
                            let mut row = with_outcome(row, size as u32, le_sqrt_times_log2(size, 9, n as u64));
                            row.note = format!("depth {}, largest separator {}", s.depth(), s.max_separator());
                            if !small && row.status == Status::Fail {
                                row.status = Status::NotApplicable;
                                row.note += "; a separator exceeds 2 sqrt(2n)";
                            }
                            row
                        }
                        Err(e) => with_error(row, &e),
                    }
                }
            }
            Check::Prop5 => {
                let k = td.map_or(0, TreeDecomposition::width);
                let value = if n >= 2 { 3.0 * k as f64 * log2(n) } else { 0.0 };
                let row = rb.row(Some(pf), format!("3*{k}*log2 n"), value);
                match td {
                    None => not_applicable(row, "no tree decomposition supplied"),
                    Some(_) if !report.is_connected || n < 2 || k == 0 => {
                        not_applicable(row, "needs a connected graph with n >= 2 and width >= 1")
                    }
                    Some(td) => {
                        match separator_transversal_with(g, paths, Strategy::Decomposition(td), &mut Budget::new(budget)) {
                            Ok(s) => {
                                let size = s.transversal.size() as u64;
                                let mut row = with_outcome(row, size as u32, within_treewidth_bound(size, k as u32, n as u64));
                                row.note = format!("depth {}", s.depth());
                                row
                            }
                            Err(e) => with_error(row, &e),
                        }
                    }
                }
            }
            Check::Frac => {
                let row = rb.row(Some(pf), "sqrt(n)".into(), (n as f64).sqrt());
                if !report.is_connected {
                    not_applicable(row, "not connected")
                } else {
                    match fractional_from_paths(paths) {
                        Ok(t) => {
                            let total: f64 = (0..n).map(|v| t.weight(v)).sum();
                            let pass = t.total_within_sqrt(n as u64) && t.covers(paths);
                            with_outcome(row, total, pass)
                        }
                        Err(e) => with_error(row, &e),
                    }
                }
            }
            Check::Intersect => {
                let row = rb.row(Some(pf), "every two longest members meet".into(), 0.0);
                if !report.is_connected {
                    not_applicable(row, "not connected")
                } else {
                    let mut ok = pairwise_intersection_check(paths).holds();
                    let mut note = String::from("paths");
                    if report.is_two_connected {
                        match &cycles {
                            Ok(c) => {
                                ok &= pairwise_intersection_check(c).holds();
                                note += " and cycles";
                            }
                            Err(e) => note += &format!("; cycles skipped: {e}"),
                        }
                    }
                    let mut row = with_outcome(row, u32::from(!ok), ok);
                    row.note = note;
                    row
                }
            }
            Check::Thm6 => not_applicable(rb.row(Some(pf), "3".into(), 3.0), "graph instance"),
        };
        rows.push(row);
    }
    rows
}

fn arc_rows(id: usize, model: &ArcModel, budget: u64) -> Vec<Row> {
    let g = arc_intersection_graph(model);
    let report = connectivity(&g);
    let check = Check::Thm6;
    let rb = RowBuilder { instance: id, n: model.len(), check: &check };
    let mut rows = Vec::new();
    for mode in [Mode::Path, Mode::Cycle] {
        let mut row = rb.row(None, "3".into(), 3.0);
        row.check = match mode {
            Mode::Path => "thm6-path".into(),
            Mode::Cycle => "thm6-cycle".into(),
        };
        let applies = match mode {
            Mode::Path => report.is_connected,
            Mode::Cycle => report.is_two_connected,
        };
        if !applies {
            rows.push(not_applicable(row, "intersection graph lacks the connectivity"));
            continue;
        }
        let row = match theorem6_transversal(model, mode, budget) {
            Ok(t) => {
                row.longest = t.trace.chain_order;
                row.members = t.trace.chain_count;
                let size = t.transversal.size();
                let mut b = Budget::new(budget);
                let verified = match mode {
                    Mode::Path => longest_paths(&g, &mut b).map(|p| verify_against(&p, t.transversal.vertices()).holds()),
                    Mode::Cycle => longest_cycles(&g, &mut b).map(|c| verify_against(&c, t.transversal.vertices()).holds()),
                };
                match verified {
                    Ok(v) => {
                        let mut row = with_outcome(row, size as u32, v && size <= 3);
                        row.note = format!("step {}", t.trace.step);
                        row
                    }
                    Err(e) => with_error(row, &e),
                }
            }
            Err(e) => with_error(row, &e),
        };
        rows.push(row);
    }
    rows
}

pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Report, RangeError> {
    let instances = instances(cfg)?;
    let per_instance: Vec<Vec<Row>> = instances
        .par_iter()
        .enumerate()
        .map(|(id, inst)| match inst {
            Instance::Graph { graph, decomposition } => {
                graph_rows(id, graph, decomposition.as_ref(), &cfg.checks, cfg.budget)
            }
            Instance::Arcs(model) => arc_rows(id, model, cfg.budget),
        })
        .collect();
    let rows: Vec<Row> = per_instance.into_iter().flatten().collect();
    let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
    let max_ratio = rows
        .iter()
        .filter(|r| matches!(r.status, Status::Pass | Status::Fail) && r.bound_value > 0.0)
        .filter_map(|r| r.measured.map(|m| m / r.bound_value))
        .fold(0.0, f64::max);
    let summary = Summary {
        instances: instances.len(),
        rows: rows.len(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skipped),
        not_applicable: count(Status::NotApplicable),
        max_ratio,
    };
    Ok(Report {
        name: cfg.name.clone(),
        rows,
        summary,
    })
}
