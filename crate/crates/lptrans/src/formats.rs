//! Text formats: edge lists, ladder matchings, tree decompositions and arc models.
//!
//! Every parser skips blank lines and lines starting with `#`, and reports
//! errors with the 1-based line number of the offending line.

use std::fmt::Write as _;

use lptrans_core::arc::{Arc, ArcModel, Point};
use lptrans_core::separator::TreeDecomposition;
use lptrans_core::weave::{BlockMatching, LadderEdge};
use lptrans_core::Graph;
use num_rational::Ratio;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is the input as a whole.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Non-comment lines with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| err(line, format!("expected {what}, found {token:?}")))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| err(0, "missing vertex count"))?;
    let n = parse_usize(first, header, "a vertex count")?;
    if n == 0 {
        return Err(err(first, "the empty graph is not accepted"));
    }
    let mut edges = Vec::new();
    for (no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let [u, v] = tokens[..] else {
            return Err(err(no, format!("expected two vertices, found {line:?}")));
        };
        let (u, v) = (parse_usize(no, u, "a vertex")?, parse_usize(no, v, "a vertex")?);
        if u.max(v) >= n {
            return Err(err(no, format!("vertex {} outside 0..{n}", u.max(v))));
        }
        if u == v {
            return Err(err(no, format!("self-loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    Graph::new(n, &edges).map_err(|e| err(0, e.to_string()))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// `tau` on the first line, then one block per line as `(i,j)` pairs.
pub fn parse_ladder(text: &str) -> Result<BlockMatching, ParseError> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| err(0, "missing path order"))?;
    let tau = parse_usize(first, header, "the path order")?;
    let mut blocks = Vec::new();
    for (no, line) in lines {
        let mut block: Vec<LadderEdge> = Vec::new();
        let mut rest = line;
        while let Some(open) = rest.find('(') {
            let close = rest[open..]
                .find(')')
                .ok_or_else(|| err(no, "unclosed parenthesis"))?
                + open;
            let (i, j) = rest[open + 1..close]
                .split_once(',')
                .ok_or_else(|| err(no, "expected a pair (i,j)"))?;
            block.push((
                parse_usize(no, i.trim(), "an index")?,
                parse_usize(no, j.trim(), "an index")?,
            ));
            rest = &rest[close + 1..];
        }
        if !rest.trim().is_empty() || block.is_empty() {
            return Err(err(no, format!("expected (i,j) pairs, found {line:?}")));
        }
        blocks.push(block);
    }
    Ok(BlockMatching::new(tau, blocks))
}

pub fn write_ladder(bm: &BlockMatching) -> String {
    let mut out = format!("{}\n", bm.tau);
    for block in &bm.blocks {
        let pairs: Vec<String> = block.iter().map(|(i, j)| format!("({i},{j})")).collect();
        let _ = writeln!(out, "{}", pairs.join(" "));
    }
    out
}

/// Header `s td <bags> <width+1> <n>`, bag lines `b <index> <v...>` with
/// 1-based bag indices and 0-based vertices, then tree edges `<i> <j>` between
/// bag indices. The decomposition axioms are checked against `g`.
pub fn parse_tree_decomposition(text: &str, g: &Graph) -> Result<TreeDecomposition, ParseError> {
    let mut lines = content_lines(text);
    let (first, header) = lines.next().ok_or_else(|| err(0, "missing `s td` header"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let ["s", "td", bags, width1, n] = fields[..] else {
        return Err(err(first, "expected `s td <bags> <width+1> <n>`"));
    };
    let count = parse_usize(first, bags, "a bag count")?;
    let width1 = parse_usize(first, width1, "a bag size")?;
    let n = parse_usize(first, n, "a vertex count")?;
    if n != g.vertex_count() {
        return Err(err(
            first,
            format!("header names {n} vertices, graph has {}", g.vertex_count()),
        ));
    }
    let mut bag_list: Vec<Option<Vec<usize>>> = vec![None; count];
    let mut tree = Vec::new();
    for (no, line) in lines {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "b" {
            let index = parse_usize(no, tokens.get(1).copied().unwrap_or(""), "a bag index")?;
            if index == 0 || index > count {
                return Err(err(no, format!("bag index {index} outside 1..={count}")));
            }
            if bag_list[index - 1].is_some() {
                return Err(err(no, format!("bag {index} given twice")));
            }
            let bag = tokens[2..]
                .iter()
                .map(|t| parse_usize(no, t, "a vertex"))
                .collect::<Result<Vec<_>, _>>()?;
            if bag.len() > width1 {
                return Err(err(no, format!("bag {index} exceeds the declared size {width1}")));
            }
            bag_list[index - 1] = Some(bag);
        } else {
            let [a, b] = tokens[..] else {
                return Err(err(no, format!("expected a tree edge, found {line:?}")));
            };
            let (a, b) = (parse_usize(no, a, "a bag index")?, parse_usize(no, b, "a bag index")?);
            if a == 0 || b == 0 || a > count || b > count {
                return Err(err(no, format!("tree edge ({a}, {b}) names a missing bag")));
            }
            tree.push((a - 1, b - 1));
        }
    }
    let bags = bag_list
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| err(0, format!("bag {} is missing", i + 1))))
        .collect::<Result<Vec<_>, _>>()?;
    TreeDecomposition::new(g, bags, tree).map_err(|e| err(0, e.to_string()))
}

pub fn write_tree_decomposition(td: &TreeDecomposition, n: usize) -> String {
    let mut out = format!("s td {} {} {n}\n", td.bags().len(), td.width() + 1);
    for (i, bag) in td.bags().iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {v}");
        }
        out.push('\n');
    }
    for (a, b) in td.tree_edges() {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

/// `num/den`, an integer, or a finite decimal such as `0.35`.
fn parse_point(line: usize, token: &str) -> Result<Point, ParseError> {
    let bad = || err(line, format!("expected a rational endpoint, found {token:?}"));
    if let Some((n, d)) = token.split_once('/') {
        let n: i64 = n.parse().map_err(|_| bad())?;
        let d: i64 = d.parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(n, d));
    }
    if let Some((whole, frac)) = token.split_once('.') {
        if frac.is_empty() || frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let whole: i64 = if whole.is_empty() { 0 } else { whole.parse().map_err(|_| bad())? };
        let scale = 10i64.pow(frac.len() as u32);
        let frac: i64 = frac.parse().map_err(|_| bad())?;
        return Ok(Ratio::new(whole * scale + frac, scale));
    }
    token.parse::<i64>().map(Ratio::from_integer).map_err(|_| bad())
}

/// One arc per line: `id start end` or `id FULL`; ids must be `0..m` in order.
pub fn parse_arc_model(text: &str) -> Result<ArcModel, ParseError> {
    let mut arcs = Vec::new();
    for (no, line) in content_lines(text) {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let id = parse_usize(no, tokens[0], "an arc id")?;
        if id != arcs.len() {
            return Err(err(no, format!("expected arc id {}, found {id}", arcs.len())));
        }
        let arc = match tokens[1..] {
            ["FULL"] => Arc::Full,
            [s, e] => Arc::Open {
                start: parse_point(no, s)?,
                end: parse_point(no, e)?,
            },
            _ => return Err(err(no, format!("expected `id start end` or `id FULL`, found {line:?}"))),
        };
        arcs.push((no, arc));
    }
    let lines: Vec<usize> = arcs.iter().map(|(no, _)| *no).collect();
    ArcModel::new(arcs.into_iter().map(|(_, a)| a).collect()).map_err(|e| {
        use lptrans_core::arc::ArcModelError as E;
        let line = match e {
            E::Empty => 0,
            E::OutOfRange { arc } | E::Degenerate { arc } => lines[arc],
            E::DuplicateEndpoint { first, second } => lines[first.max(second)],
        };
        err(line, e.to_string())
    })
}

pub fn write_arc_model(model: &ArcModel) -> String {
    let mut out = String::new();
    for (i, a) in model.arcs().iter().enumerate() {
        let _ = match a {
            Arc::Full => writeln!(out, "{i} FULL"),
            Arc::Open { start, end } => writeln!(
                out,
                "{i} {}/{} {}/{}",
                start.numer(),
                start.denom(),
                end.numer(),
                end.denom()
            ),
        };
    }
    out
}
