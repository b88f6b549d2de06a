//! Balanced separators and the separator recursion for longest path transversals.
//!
//! Delete a balanced separator `X`. If `X` meets every longest path, stop.
//! Otherwise all surviving longest paths lie in one component of `G - X`
//! (two of them in different components would be disjoint), so recurse there.
//! Every level shrinks the graph by the balance fraction, which bounds the
//! depth logarithmically.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::longest::{longest_paths, LongestFamily, PathCollection};
use crate::transversal::{verify_against, Mode, Transversal, Verification};
use crate::{Budget, Error, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecompositionError {
    BagVertexOutOfRange { bag: usize, vertex: usize },
    TreeEdgeOutOfRange { edge: (usize, usize) },
    /// The bag tree has a cycle or is disconnected.
    NotATree,
    VertexNotCovered(usize),
    EdgeNotCovered(usize, usize),
    /// The bags containing this vertex do not induce a subtree.
    NotConnectedSubtree(usize),
}

impl fmt::Display for DecompositionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionError::BagVertexOutOfRange { bag, vertex } => {
                write!(f, "bag {bag} names vertex {vertex} outside the graph")
            }
            DecompositionError::TreeEdgeOutOfRange { edge } => {
                write!(f, "tree edge {edge:?} names a missing bag")
            }
            DecompositionError::NotATree => f.write_str("bags and tree edges do not form a tree"),
            DecompositionError::VertexNotCovered(v) => write!(f, "vertex {v} lies in no bag"),
            DecompositionError::EdgeNotCovered(u, v) => {
                write!(f, "edge ({u}, {v}) lies in no bag")
            }
            DecompositionError::NotConnectedSubtree(v) => {
                write!(f, "bags containing vertex {v} are not connected in the tree")
            }
        }
    }
}

impl core::error::Error for DecompositionError {}

/// Tree decomposition with bags indexed from 0 and vertices from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Checks the three decomposition axioms against `g`.
    pub fn new(
        g: &Graph,
        mut bags: Vec<Vec<usize>>,
        tree_edges: Vec<(usize, usize)>,
    ) -> Result<TreeDecomposition, DecompositionError> {
        let n = g.vertex_count();
        for (b, bag) in bags.iter_mut().enumerate() {
            bag.sort_unstable();
            bag.dedup();
            if let Some(&v) = bag.iter().find(|&&v| v >= n) {
                return Err(DecompositionError::BagVertexOutOfRange { bag: b, vertex: v });
            }
        }
        let k = bags.len();
        for &(a, b) in &tree_edges {
            if a >= k || b >= k || a == b {
                return Err(DecompositionError::TreeEdgeOutOfRange { edge: (a, b) });
            }
        }
        let td = TreeDecomposition { bags, tree_edges };
        if k == 0 || td.tree_edges.len() != k - 1 || !td.connected_bags(|_| true) {
            return Err(DecompositionError::NotATree);
        }
        for v in 0..n {
            if !td.bags.iter().any(|b| b.binary_search(&v).is_ok()) {
                return Err(DecompositionError::VertexNotCovered(v));
            }
        }
        for (u, v) in g.edges() {
            if !td
                .bags
                .iter()
                .any(|b| b.binary_search(&u).is_ok() && b.binary_search(&v).is_ok())
            {
                return Err(DecompositionError::EdgeNotCovered(u, v));
            }
        }
        for v in 0..n {
            if !td.connected_bags(|b| b.binary_search(&v).is_ok()) {
                return Err(DecompositionError::NotConnectedSubtree(v));
            }
        }
        Ok(td)
    }

    fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Are the bags selected by `keep` connected in the tree?
    fn connected_bags(&self, keep: impl Fn(&[usize]) -> bool) -> bool {
        let selected: Vec<bool> = self.bags.iter().map(|b| keep(b)).collect();
        let Some(start) = selected.iter().position(|&s| s) else {
            return true;
        };
        let adj = self.tree_adjacency();
        let mut seen = vec![false; self.bags.len()];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(t) = stack.pop() {
            for &s in &adj[t] {
                if selected[s] && !seen[s] {
                    seen[s] = true;
                    stack.push(s);
                }
            }
        }
        (0..self.bags.len()).all(|t| !selected[t] || seen[t])
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    /// Largest bag size minus one.
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// The decomposition of the subgraph induced by `keep` (sorted), relabeled
    /// the way [`Graph::induced`] relabels.
    pub fn restrict(&self, n: usize, keep: &[usize]) -> TreeDecomposition {
        let mut index = vec![usize::MAX; n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        TreeDecomposition {
            bags: self
                .bags
                .iter()
                .map(|b| b.iter().filter(|&&v| index[v] != usize::MAX).map(|&v| index[v]).collect())
                .collect(),
            tree_edges: self.tree_edges.clone(),
        }
    }
}

/// Largest component allowed after deleting a separator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fraction {
    Half,
    TwoThirds,
}

impl Fraction {
    pub fn admits(self, component: usize, n: usize) -> bool {
        match self {
            Fraction::Half => 2 * component <= n,
            Fraction::TwoThirds => 3 * component <= 2 * n,
        }
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Fraction::Half => "1/2",
            Fraction::TwoThirds => "2/3",
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Strategy<'a> {
    /// Smallest separator by exhaustive search, lexicographically first.
    Brute(Fraction),
    /// A bag of the decomposition; always half-balanced.
    Decomposition(&'a TreeDecomposition),
}

impl Strategy<'_> {
    pub fn fraction(&self) -> Fraction {
        match self {
            Strategy::Brute(f) => *f,
            Strategy::Decomposition(_) => Fraction::Half,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorResult {
    pub separator: Vec<usize>,
    pub components: Vec<Vec<usize>>,
    pub largest_component: usize,
    pub vertex_count: usize,
}

impl SeparatorResult {
    fn new(g: &Graph, separator: Vec<usize>) -> Self {
        let removed = VertexSet::from_slice(g.vertex_count(), &separator);
        let components = g.components_avoiding(&removed);
        let largest_component = components.iter().map(Vec::len).max().unwrap_or(0);
        SeparatorResult {
            separator,
            components,
            largest_component,
            vertex_count: g.vertex_count(),
        }
    }

    /// `largest component / n`.
    pub fn balance(&self) -> f64 {
        self.largest_component as f64 / self.vertex_count as f64
    }
}

fn brute_separator(g: &Graph, fraction: Fraction, budget: &mut Budget) -> Result<SeparatorResult, Error> {
    let n = g.vertex_count();
    for size in 0..=n {
        // combinations of `size` vertices in lexicographic order
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            budget.tick()?;
            let removed = VertexSet::from_slice(n, &pick);
            let comps = g.components_avoiding(&removed);
            if comps.iter().all(|c| fraction.admits(c.len(), n)) {
                return Ok(SeparatorResult::new(g, pick));
            }
            let Some(i) = (0..size).rev().find(|&i| pick[i] < n - size + i) else {
                break;
            };
            pick[i] += 1;
            for j in i + 1..size {
                pick[j] = pick[j - 1] + 1;
            }
        }
    }
    unreachable!("deleting every vertex leaves no component")
}

/// The bag whose removal leaves the smallest largest component, lowest index
/// among ties. Some bag always leaves components of at most `n/2`.
fn bag_separator(g: &Graph, td: &TreeDecomposition) -> Result<SeparatorResult, Error> {
    let n = g.vertex_count();
    let best = td
        .bags
        .iter()
        .map(|bag| SeparatorResult::new(g, bag.clone()))
        .min_by_key(|r| r.largest_component)
        .ok_or_else(|| Error::Precondition("decomposition has no bags".into()))?;
    if !Fraction::Half.admits(best.largest_component, n) {
        return Err(Error::Precondition(
            "no half-balanced bag found; the decomposition does not match the graph".into(),
        ));
    }
    Ok(best)
}

pub fn balanced_separator(
    g: &Graph,
    strategy: Strategy<'_>,
    budget: u64,
) -> Result<SeparatorResult, Error> {
    match strategy {
        Strategy::Brute(f) => brute_separator(g, f, &mut Budget::new(budget)),
        Strategy::Decomposition(td) => bag_separator(g, td),
    }
}

/// One recursion level, in the input graph's labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatorLevel {
    pub graph_order: usize,
    pub separator: Vec<usize>,
    pub largest_component: usize,
    /// Order of the component that still carries longest paths, if any.
    pub next_order: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct SeparatorTransversal {
    pub transversal: Transversal,
    pub levels: Vec<SeparatorLevel>,
}

impl SeparatorTransversal {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn max_separator(&self) -> usize {
        self.levels.iter().map(|l| l.separator.len()).max().unwrap_or(0)
    }
}

/// Separator recursion producing a verified longest path transversal.
pub fn separator_transversal(
    g: &Graph,
    strategy: Strategy<'_>,
    budget: u64,
) -> Result<SeparatorTransversal, Error> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut budget = Budget::new(budget);
    let top = longest_paths(g, &mut budget)?;
    separator_transversal_with(g, &top, strategy, &mut budget)
}

/// As [`separator_transversal`], reusing an enumerated path family of `g`.
pub fn separator_transversal_with(
    g: &Graph,
    top: &PathCollection,
    strategy: Strategy<'_>,
    budget: &mut Budget,
) -> Result<SeparatorTransversal, Error> {
    let ell = top.length;
    let mut chosen: Vec<usize> = Vec::new();
    let mut levels = Vec::new();
    let mut labels: Vec<usize> = (0..g.vertex_count()).collect();
    let mut current = g.clone();
    let mut td = match strategy {
        Strategy::Decomposition(td) => Some(td.clone()),
        Strategy::Brute(_) => None,
    };
    loop {
        let n = current.vertex_count();
        if n < 2 {
            chosen.extend(labels.iter().copied());
            levels.push(SeparatorLevel {
                graph_order: n,
                separator: labels.clone(),
                largest_component: 0,
                next_order: None,
            });
            break;
        }
        let sep = match &td {
            Some(td) => bag_separator(&current, td)?,
            None => brute_separator(&current, strategy.fraction(), budget)?,
        };
        chosen.extend(sep.separator.iter().map(|&v| labels[v]));
        if verify_against(top, &chosen).holds() {
            levels.push(SeparatorLevel {
                graph_order: n,
                separator: sep.separator.iter().map(|&v| labels[v]).collect(),
                largest_component: sep.largest_component,
                next_order: None,
            });
            break;
        }
        let mut holder: Option<Vec<usize>> = None;
        for comp in &sep.components {
            if comp.len() < ell {
                continue;
            }
            let sub = current.induced(comp);
            if longest_paths(&sub, budget)?.length == ell {
                if holder.is_some() {
                    return Err(Error::Falsified(String::from(
                        "paths of the longest order survive in two components of G - X",
                    )));
                }
                holder = Some(comp.clone());
            }
        }
        let comp = holder.ok_or_else(|| {
            Error::Falsified("an unhit longest path lies in no component of G - X".into())
        })?;
        levels.push(SeparatorLevel {
            graph_order: n,
            separator: sep.separator.iter().map(|&v| labels[v]).collect(),
            largest_component: sep.largest_component,
            next_order: Some(comp.len()),
        });
        if let Some(t) = td.as_mut() {
            *t = t.restrict(n, &comp);
        }
        current = current.induced(&comp);
        labels = comp.iter().map(|&c| labels[c]).collect();
    }
    let transversal = Transversal::new(chosen, Mode::Path, top, false)?;
    match verify_against(top, transversal.vertices()) {
        Verification::Covered => Ok(SeparatorTransversal { transversal, levels }),
        Verification::Uncovered(p) => Err(Error::Falsified(format!(
            "separator recursion missed longest path {p:?}"
        ))),
    }
}

/// Number of vertices in the family's longest members, for reporting.
pub fn longest_order(top: &PathCollection) -> usize {
    top.length()
}
