use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lptrans::experiment::{run_experiment, ExperimentConfig};
use lptrans::formats::{
    parse_arc_model, parse_graph, parse_ladder, parse_tree_decomposition, write_arc_model,
    write_graph, write_ladder, write_tree_decomposition,
};
use lptrans::generate;
use lptrans_core::arc::{theorem6_transversal, CascadeTrace};
use lptrans_core::bounds::within_alpha_bound;
use lptrans_core::separator::{separator_transversal, Fraction, Strategy};
use lptrans_core::transversal::{exact_lct, exact_lpt, fractional_lpt, greedy_alpha_transversal};
use lptrans_core::weave::{validate_block_matching, weave, Side, WovenPath};
use lptrans_core::{longest_cycles, longest_paths, Budget, Error, Graph, LongestFamily, Mode, DEFAULT_BUDGET};
use num_rational::Ratio;
use serde::Serialize;

const EXIT_FALSIFIED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "lptrans", version, about = "Longest path and cycle transversals of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Path,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum FractionArg {
    #[value(name = "1/2")]
    Half,
    #[value(name = "2/3")]
    TwoThirds,
}

#[derive(Subcommand)]
enum Command {
    /// Longest paths or cycles: order, count and per-vertex counts as TSV.
    Enum {
        #[arg(long, conflicts_with = "cycles", required_unless_present = "cycles")]
        paths: bool,
        #[arg(long)]
        cycles: bool,
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Minimum longest path transversal.
    Lpt {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Minimum longest cycle transversal.
    Lct {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Fractional longest path transversal of total weight at most sqrt(n).
    Frac {
        graph: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Transversal of size at most |P|/alpha + sqrt(alpha n).
    Alpha {
        graph: PathBuf,
        /// Rational such as `2` or `5/2`, at least 2.
        #[arg(long)]
        alpha: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Weave two paths along a block matching.
    Weave { ladder: PathBuf },
    /// Separator recursion transversal.
    Septrans {
        graph: PathBuf,
        /// Tree decomposition; its bags serve as separators.
        #[arg(long)]
        td: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "2/3")]
        fraction: FractionArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Transversal of at most three arcs for a circular-arc model.
    Circ {
        model: PathBuf,
        #[arg(long, value_enum, default_value = "path")]
        mode: ModeArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Run an experiment config and write `<name>.tsv` and `<name>.json`.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Emit a generated instance on stdout.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    RandomConnected {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    #[command(name = "random-2connected")]
    RandomTwoConnected {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    TriangleChain {
        #[arg(long)]
        t: usize,
    },
    RandomArcModel {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Graph on stdout; its decomposition is written to `--td`.
    PartialKtree {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.3)]
        drop: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        td: PathBuf,
    },
    /// A random valid block matching in ladder format.
    Ladder {
        #[arg(long)]
        tau: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Falsified(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            Error::Falsified(_) => Failure::Falsified(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn json(value: &impl Serialize) -> String {
    serde_json::to_string_pretty(value).expect("outputs serialize") + "\n"
}

#[derive(Serialize)]
struct TransversalOut {
    vertices: Vec<usize>,
    size: usize,
    certified_minimum: bool,
    longest: usize,
    members: usize,
}

fn exact(g: &Graph, mode: Mode, budget: u64, as_json: bool) -> Result<String, Failure> {
    let t = match mode {
        Mode::Path => exact_lpt(g, budget)?,
        Mode::Cycle => exact_lct(g, budget)?,
    };
    let mut b = Budget::new(budget);
    let (longest, members) = match mode {
        Mode::Path => {
            let p = longest_paths(g, &mut b)?;
            (p.length(), p.member_count())
        }
        Mode::Cycle => {
            let c = longest_cycles(g, &mut b)?;
            (c.length(), c.member_count())
        }
    };
    let out = TransversalOut {
        vertices: t.vertices().to_vec(),
        size: t.size(),
        certified_minimum: t.certified_minimum(),
        longest,
        members,
    };
    Ok(if as_json {
        json(&out)
    } else {
        format!(
            "transversal\t{}\nsize\t{}\ncertified_minimum\t{}\nlongest\t{}\nmembers\t{}\n",
            list(&out.vertices),
            out.size,
            out.certified_minimum,
            out.longest,
            out.members
        )
    })
}

fn parse_alpha(s: &str) -> Result<Ratio<u64>, Failure> {
    let bad = || usage(format!("--alpha expects a rational such as 2 or 5/2, found {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let (n, d): (u64, u64) = (n.parse().map_err(|_| bad())?, d.parse().map_err(|_| bad())?);
            if d == 0 {
                return Err(bad());
            }
            Ok(Ratio::new(n, d))
        }
        None => Ok(Ratio::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn woven(p: &WovenPath) -> String {
    p.vertices
        .iter()
        .map(|(side, i)| match side {
            Side::P => format!("u{i}"),
            Side::Q => format!("v{i}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn cascade_log(trace: &CascadeTrace) -> String {
    let mut out = format!(
        "step\t{}\nlongest\t{}\nmembers\t{}\nprojections_checked\t{}\n",
        trace.step, trace.chain_order, trace.chain_count, trace.projections_checked
    );
    if let Some(c) = &trace.cover {
        let _ = writeln!(out, "cover\t{}", list(c.members()));
    }
    for (name, part) in [("P", &trace.p), ("Q", &trace.q), ("R", &trace.r)] {
        if let Some((chain, iv)) = part {
            let _ = writeln!(out, "chain_{name}\t{}\t{iv}", list(chain));
        }
    }
    if let Some(o) = trace.orientation {
        let _ = writeln!(out, "orientation\t{o:?}");
    }
    for check in &trace.checks {
        let _ = writeln!(out, "check\t{check}");
    }
    out
}

fn run(cli: Cli) -> Result<(String, u8), Failure> {
    let out = match cli.command {
        Command::Enum { paths, cycles: _, graph, budget } => {
            let g = load_graph(&graph)?;
            let mut b = Budget::new(budget);
            let (length, count, per_vertex) = if paths {
                let p = longest_paths(&g, &mut b)?;
                (p.length(), p.member_count(), p.per_vertex_counts().to_vec())
            } else {
                let c = longest_cycles(&g, &mut b)?;
                (c.length(), c.member_count(), c.per_vertex_counts().to_vec())
            };
            let mut out = format!("length\t{length}\ncount\t{count}\nvertex\tmembers\n");
            for (v, c) in per_vertex.iter().enumerate() {
                let _ = writeln!(out, "{v}\t{c}");
            }
            out
        }
        Command::Lpt { graph, budget, json } => exact(&load_graph(&graph)?, Mode::Path, budget, json)?,
        Command::Lct { graph, budget, json } => exact(&load_graph(&graph)?, Mode::Cycle, budget, json)?,
        Command::Frac { graph, budget, json: as_json } => {
            let g = load_graph(&graph)?;
            let t = fractional_lpt(&g, budget)?;
            if as_json {
                json(&t.numerators.iter().enumerate().map(|(v, _)| t.weight(v)).collect::<Vec<_>>())
            } else {
                let mut out = format!("root\t{}\nvertex\tnumerator\tweight\n", t.root);
                for (v, num) in t.numerators.iter().enumerate() {
                    let _ = writeln!(out, "{v}\t{num}\t{:.6}", t.weight(v));
                }
                let total = t.total_squared();
                let _ = writeln!(out, "total_squared\t{total}\nwithin_sqrt_n\t{}", t.total_within_sqrt(g.vertex_count() as u64));
                out
            }
        }
        Command::Alpha { graph, alpha, budget, json: as_json } => {
            let g = load_graph(&graph)?;
            let alpha = parse_alpha(&alpha)?;
            let r = greedy_alpha_transversal(&g, alpha, budget)?;
            let size = r.transversal.size();
            let within = within_alpha_bound(size as u64, r.path_count as u64, alpha, g.vertex_count() as u64);
            if !within {
                return Err(Failure::Falsified(format!(
                    "size {size} exceeds |P|/alpha + sqrt(alpha n) with |P| = {}",
                    r.path_count
                )));
            }
            #[derive(Serialize)]
            struct AlphaOut {
                vertices: Vec<usize>,
                size: usize,
                path_count: usize,
                steps: Vec<String>,
                within_bound: bool,
            }
            let out = AlphaOut {
                vertices: r.transversal.vertices().to_vec(),
                size,
                path_count: r.path_count,
                steps: r.steps.iter().map(|s| format!("{s:?}")).collect(),
                within_bound: within,
            };
            if as_json {
                json(&out)
            } else {
                let mut s = format!(
                    "transversal\t{}\nsize\t{}\npath_count\t{}\nwithin_bound\t{}\n",
                    list(&out.vertices),
                    out.size,
                    out.path_count,
                    out.within_bound
                );
                for step in &out.steps {
                    let _ = writeln!(s, "step\t{step}");
                }
                s
            }
        }
        Command::Weave { ladder } => {
            let bm = parse_ladder(&read(&ladder)?).map_err(|e| usage(format!("{}: {e}", ladder.display())))?;
            validate_block_matching(&bm).map_err(usage)?;
            let w = weave(&bm)?;
            let (p, q) = (w.p_prime.order(), w.q_prime.order());
            format!(
                "p_prime\t{}\nq_prime\t{}\norder_p_prime\t{p}\norder_q_prime\t{q}\ntau\t{}\nmatching\t{}\nsum\t{} = 2*{} + 2*{}\nlonger\t{}\n",
                woven(&w.p_prime),
                woven(&w.q_prime),
                bm.tau,
                bm.edge_count(),
                p + q,
                bm.tau,
                bm.edge_count(),
                w.longer().order()
            )
        }
        Command::Septrans { graph, td, fraction, budget } => {
            let g = load_graph(&graph)?;
            let td = match td {
                Some(path) => Some(
                    parse_tree_decomposition(&read(&path)?, &g)
                        .map_err(|e| usage(format!("{}: {e}", path.display())))?,
                ),
                None => None,
            };
            let strategy = match (&td, fraction) {
                (Some(td), _) => Strategy::Decomposition(td),
                (None, FractionArg::Half) => Strategy::Brute(Fraction::Half),
                (None, FractionArg::TwoThirds) => Strategy::Brute(Fraction::TwoThirds),
            };
            let r = separator_transversal(&g, strategy, budget)?;
            let mut out = format!(
                "transversal\t{}\nsize\t{}\ndepth\t{}\nlevel\torder\tseparator\tlargest_component\tnext_order\n",
                list(r.transversal.vertices()),
                r.transversal.size(),
                r.depth()
            );
            for (i, l) in r.levels.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "{i}\t{}\t{}\t{}\t{}",
                    l.graph_order,
                    list(&l.separator),
                    l.largest_component,
                    l.next_order.map_or_else(|| "-".into(), |o| o.to_string())
                );
            }
            out
        }
        Command::Circ { model, mode, budget } => {
            let m = parse_arc_model(&read(&model)?).map_err(|e| usage(format!("{}: {e}", model.display())))?;
            let mode = match mode {
                ModeArg::Path => Mode::Path,
                ModeArg::Cycle => Mode::Cycle,
            };
            let r = theorem6_transversal(&m, mode, budget)?;
            format!(
                "transversal\t{}\nsize\t{}\n{}",
                list(r.transversal.vertices()),
                r.transversal.size(),
                cascade_log(&r.trace)
            )
        }
        Command::Experiment { config, out } => {
            let cfg = ExperimentConfig::parse(&read(&config)?)
                .map_err(|e| usage(format!("{}: {e}", config.display())))?;
            let report = run_experiment(&cfg).map_err(usage)?;
            let (tsv, js) = report.write(&out).map_err(|e| usage(format!("{}: {e}", out.display())))?;
            let s = &report.summary;
            let text = format!(
                "instances\t{}\nrows\t{}\npassed\t{}\nfailed\t{}\nskipped\t{}\nnot_applicable\t{}\nmax_ratio\t{:.6}\ntsv\t{}\njson\t{}\n",
                s.instances,
                s.rows,
                s.passed,
                s.failed,
                s.skipped,
                s.not_applicable,
                s.max_ratio,
                tsv.display(),
                js.display()
            );
            let code = if report.failed() { EXIT_FALSIFIED } else { 0 };
            return Ok((text, code));
        }
        Command::Gen { family } => match family {
            GenFamily::RandomConnected { n, p, seed } => write_graph(&generate::random_connected(n, p, seed).map_err(usage)?),
            GenFamily::RandomTwoConnected { n, p, seed } => {
                write_graph(&generate::random_two_connected(n, p, seed).map_err(usage)?)
            }
            GenFamily::TriangleChain { t } => write_graph(&generate::triangle_chain(t).map_err(usage)?),
            GenFamily::RandomArcModel { m, seed } => write_arc_model(&generate::random_arc_model(m, seed).map_err(usage)?),
            GenFamily::PartialKtree { k, n, drop, seed, td } => {
                let (g, dec) = generate::partial_ktree(k, n, drop, seed).map_err(usage)?;
                std::fs::write(&td, write_tree_decomposition(&dec, n))
                    .map_err(|e| usage(format!("{}: {e}", td.display())))?;
                write_graph(&g)
            }
            GenFamily::Ladder { tau, seed } => write_ladder(&generate::random_block_matching(tau, seed).map_err(usage)?),
        },
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            let (msg, code) = match f {
                Failure::Usage(m) => (m, EXIT_USAGE),
                Failure::Falsified(m) => (m, EXIT_FALSIFIED),
                Failure::Budget(m) => (m, EXIT_BUDGET),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
