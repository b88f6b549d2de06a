//! Circular-arc models and the cascade that finds a transversal of at most
//! three arcs hitting every longest chain (path) or closed chain (cycle).
//!
//! Arcs are open, endpoints are exact rationals in `[0, 1)`, and an arc runs
//! counterclockwise from `start` to `end`, wrapping past 0 when `end < start`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_rational::Ratio;

use crate::graph::connectivity;
use crate::longest::{longest_cycles, longest_paths, CycleCollection, LongestFamily, PathCollection};
use crate::transversal::{minimum_transversal, verify_against, Mode, Transversal};
use crate::{Budget, Error, Graph};

pub type Point = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Arc {
    /// The whole circle.
    Full,
    Open { start: Point, end: Point },
}

fn zero() -> Point {
    Point::from_integer(0)
}

fn one() -> Point {
    Point::from_integer(1)
}

/// `x - base` reduced into `[0, 1)`.
fn offset(x: Point, base: Point) -> Point {
    let d = x - base;
    if d < zero() {
        d + one()
    } else {
        d
    }
}

impl Arc {
    /// Counterclockwise length; 1 for the whole circle.
    pub fn length(&self) -> Point {
        match *self {
            Arc::Full => one(),
            Arc::Open { start, end } => offset(end, start),
        }
    }

    pub fn contains_point(&self, x: Point) -> bool {
        match *self {
            Arc::Full => true,
            Arc::Open { start, end } => {
                let d = offset(x, start);
                d > zero() && d < offset(end, start)
            }
        }
    }

    /// Open arcs with distinct endpoints meet iff one contains the other's start.
    pub fn intersects(&self, other: &Arc) -> bool {
        match (*self, *other) {
            (Arc::Full, _) | (_, Arc::Full) => true,
            (Arc::Open { start: a, .. }, Arc::Open { start: b, .. }) => {
                a == b || self.contains_point(b) || other.contains_point(a)
            }
        }
    }

    pub fn properly_contains(&self, other: &Arc) -> bool {
        match (*self, *other) {
            (Arc::Full, Arc::Full) | (Arc::Open { .. }, Arc::Full) => false,
            (Arc::Full, Arc::Open { .. }) => true,
            (Arc::Open { start, .. }, Arc::Open { start: s2, .. }) => {
                let d = offset(s2, start);
                (d > zero() || s2 == start)
                    && d + other.length() <= self.length()
                    && self.length() != other.length()
            }
        }
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arc::Full => f.write_str("FULL"),
            Arc::Open { start, end } => write!(f, "{start} {end}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArcModelError {
    Empty,
    OutOfRange { arc: usize },
    Degenerate { arc: usize },
    DuplicateEndpoint { first: usize, second: usize },
}

impl fmt::Display for ArcModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArcModelError::Empty => f.write_str("model has no arcs"),
            ArcModelError::OutOfRange { arc } => {
                write!(f, "arc {arc} has an endpoint outside [0, 1)")
            }
            ArcModelError::Degenerate { arc } => write!(f, "arc {arc} is empty: start equals end"),
            ArcModelError::DuplicateEndpoint { first, second } => {
                write!(f, "arcs {first} and {second} share an endpoint")
            }
        }
    }
}

impl core::error::Error for ArcModelError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcModel {
    arcs: Vec<Arc>,
}

impl ArcModel {
    pub fn new(arcs: Vec<Arc>) -> Result<ArcModel, ArcModelError> {
        if arcs.is_empty() {
            return Err(ArcModelError::Empty);
        }
        let mut endpoints: Vec<(Point, usize)> = Vec::with_capacity(2 * arcs.len());
        for (i, a) in arcs.iter().enumerate() {
            if let Arc::Open { start, end } = *a {
                for x in [start, end] {
                    if x < zero() || x >= one() {
                        return Err(ArcModelError::OutOfRange { arc: i });
                    }
                }
                if start == end {
                    return Err(ArcModelError::Degenerate { arc: i });
                }
                endpoints.push((start, i));
                endpoints.push((end, i));
            }
        }
        endpoints.sort_unstable();
        for w in endpoints.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(ArcModelError::DuplicateEndpoint {
                    first: w[0].1,
                    second: w[1].1,
                });
            }
        }
        Ok(ArcModel { arcs })
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Union of `ids` covers the circle: every endpoint and every gap midpoint is inside some arc.
    pub fn covers_circle(&self, ids: &[usize]) -> bool {
        if ids.iter().any(|&i| self.arcs[i] == Arc::Full) {
            return true;
        }
        let mut points: Vec<Point> = ids
            .iter()
            .flat_map(|&i| match self.arcs[i] {
                Arc::Open { start, end } => [start, end],
                Arc::Full => unreachable!(),
            })
            .collect();
        if points.is_empty() {
            return false;
        }
        points.sort_unstable();
        let mut probes = points.clone();
        let half = Point::new(1, 2);
        for w in points.windows(2) {
            probes.push((w[0] + w[1]) * half);
        }
        let wrap = (points[points.len() - 1] + points[0] + one()) * half;
        probes.push(if wrap >= one() { wrap - one() } else { wrap });
        probes
            .iter()
            .all(|&x| ids.iter().any(|&i| self.arcs[i].contains_point(x)))
    }

    pub fn covers(&self) -> bool {
        let all: Vec<usize> = (0..self.arcs.len()).collect();
        self.covers_circle(&all)
    }

    /// Arcs not properly contained in any other arc.
    pub fn maximal_arcs(&self) -> Vec<usize> {
        (0..self.arcs.len())
            .filter(|&i| {
                !self
                    .arcs
                    .iter()
                    .any(|other| other.properly_contains(&self.arcs[i]))
            })
            .collect()
    }

    fn start_key(&self, i: usize) -> Point {
        match self.arcs[i] {
            Arc::Full => zero(),
            Arc::Open { start, .. } => start,
        }
    }
}

/// Vertex `i` for arc `i`, adjacent when the open arcs meet.
pub fn arc_intersection_graph(model: &ArcModel) -> Graph {
    let m = model.len();
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if model.arcs[i].intersects(&model.arcs[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(m, &edges).expect("arc models are non-empty and loop-free")
}

/// Minimum covering family of maximal arcs, listed by start point from angle 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverFamily {
    members: Vec<usize>,
}

impl CoverFamily {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Arc id of `K_i`, indices read modulo the family size.
    pub fn member(&self, i: usize) -> usize {
        self.members[i % self.members.len()]
    }

    pub fn index_of(&self, arc: usize) -> Option<usize> {
        self.members.iter().position(|&a| a == arc)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Covering {
    Covers(CoverFamily),
    /// The arcs leave part of the circle uncovered (an interval model).
    NotCovering,
}

/// Greedy farthest-reach cover starting from arc `first`; `None` if stuck.
fn greedy_cover(model: &ArcModel, maximal: &[usize], first: usize) -> Option<Vec<usize>> {
    let base = model.start_key(first);
    let goal = one();
    let mut reach = model.arcs[first].length();
    let mut chosen = vec![first];
    // `reach` must pass the full turn strictly, since `first` excludes its own start
    while reach <= goal {
        let mut best: Option<(Point, usize)> = None;
        for &j in maximal {
            if chosen.contains(&j) {
                continue;
            }
            let t = offset(model.start_key(j), base);
            if t < reach {
                let end = t + model.arcs[j].length();
                if end > reach && best.is_none_or(|(e, _)| end > e) {
                    best = Some((end, j));
                }
            }
        }
        let (end, j) = best?;
        reach = end;
        chosen.push(j);
    }
    Some(chosen)
}

pub fn covering_family(model: &ArcModel) -> Covering {
    let maximal = model.maximal_arcs();
    if let Some(&full) = maximal.iter().find(|&&i| model.arcs[i] == Arc::Full) {
        return Covering::Covers(CoverFamily {
            members: vec![full],
        });
    }
    if !model.covers_circle(&maximal) {
        return Covering::NotCovering;
    }
    let mut best: Option<Vec<usize>> = None;
    for &first in &maximal {
        if let Some(mut c) = greedy_cover(model, &maximal, first) {
            c.sort_unstable();
            let better = match &best {
                None => true,
                Some(b) => (c.len(), &c) < (b.len(), b),
            };
            if better {
                best = Some(c);
            }
        }
    }
    let mut members = best.expect("maximal arcs cover the circle");
    members.sort_by_key(|&i| model.start_key(i));
    Covering::Covers(CoverFamily { members })
}

/// All longest chains (paths) or closed chains (cycles) of a model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChainFamily {
    Open(PathCollection),
    Closed(CycleCollection),
}

impl ChainFamily {
    pub fn is_closed(&self) -> bool {
        matches!(self, ChainFamily::Closed(_))
    }
}

impl LongestFamily for ChainFamily {
    fn length(&self) -> usize {
        match self {
            ChainFamily::Open(p) => p.length(),
            ChainFamily::Closed(c) => c.length(),
        }
    }
    fn member_count(&self) -> usize {
        match self {
            ChainFamily::Open(p) => p.member_count(),
            ChainFamily::Closed(c) => c.member_count(),
        }
    }
    fn member(&self, i: usize) -> &[usize] {
        match self {
            ChainFamily::Open(p) => p.member(i),
            ChainFamily::Closed(c) => c.member(i),
        }
    }
    fn per_vertex_counts(&self) -> &[usize] {
        match self {
            ChainFamily::Open(p) => p.per_vertex_counts(),
            ChainFamily::Closed(c) => c.per_vertex_counts(),
        }
    }
}

pub fn longest_chains(model: &ArcModel, closed: bool, budget: &mut Budget) -> Result<ChainFamily, Error> {
    let g = arc_intersection_graph(model);
    Ok(if closed {
        ChainFamily::Closed(longest_cycles(&g, budget)?)
    } else {
        ChainFamily::Open(longest_paths(&g, budget)?)
    })
}

/// A non-empty run `first, first + 1, ..., first + len - 1` of `Z_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicInterval {
    pub first: usize,
    pub len: usize,
    pub n: usize,
}

impl CyclicInterval {
    pub fn last(&self) -> usize {
        (self.first + self.len - 1) % self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        (i + self.n - self.first) % self.n < self.len
    }

    pub fn is_disjoint(&self, other: &CyclicInterval) -> bool {
        (0..self.len).all(|k| !other.contains((self.first + k) % self.n))
    }
}

impl fmt::Display for CyclicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}] mod {}", self.first, self.last(), self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainProjection {
    /// Sorted indices `i` with `K_i` on the chain.
    pub indices: Vec<usize>,
    /// `None` when the indices are empty or not a cyclic run.
    pub interval: Option<CyclicInterval>,
}

impl ChainProjection {
    pub fn is_contiguous(&self) -> bool {
        self.interval.is_some()
    }
}

pub fn chain_projection(chain: &[usize], family: &CoverFamily) -> ChainProjection {
    let n = family.len();
    let mut hit = vec![false; n];
    for &a in chain {
        if let Some(i) = family.index_of(a) {
            hit[i] = true;
        }
    }
    let indices: Vec<usize> = (0..n).filter(|&i| hit[i]).collect();
    let interval = if indices.is_empty() {
        None
    } else if indices.len() == n {
        Some(CyclicInterval { first: 0, len: n, n })
    } else {
        let starts: Vec<usize> = (0..n).filter(|&i| hit[i] && !hit[(i + n - 1) % n]).collect();
        (starts.len() == 1).then(|| CyclicInterval {
            first: starts[0],
            len: indices.len(),
            n,
        })
    };
    ChainProjection { indices, interval }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CascadeStep {
    /// A whole-circle arc is a universal vertex.
    Universal,
    /// The arcs do not cover the circle; a single arc on every longest chain.
    Interval,
    /// Interval model with no arc on every longest chain; exact minimum used.
    IntervalExact,
    /// Both ends of the projection of `P`.
    Pair,
    /// Ends of `P` plus the far end of `Q`.
    Triple,
    /// One end from each of `P`, `Q`, `R`, which partition the family.
    Partition,
}

impl fmt::Display for CascadeStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CascadeStep::Universal => "universal",
            CascadeStep::Interval => "interval",
            CascadeStep::IntervalExact => "interval-exact",
            CascadeStep::Pair => "pair",
            CascadeStep::Triple => "triple",
            CascadeStep::Partition => "partition",
        })
    }
}

/// `P`'s run is followed by `Q`'s (forward) or preceded by it (reflected).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Forward,
    Reflected,
}

/// One check that two disjoint projections sit next to each other in `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjacencyCheck {
    pub left: &'static str,
    pub right: &'static str,
    pub left_interval: CyclicInterval,
    pub right_interval: CyclicInterval,
    pub holds: bool,
}

impl fmt::Display for AdjacencyCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} / {} {}: {}",
            self.left,
            self.left_interval,
            self.right,
            self.right_interval,
            if self.holds { "contiguous" } else { "NOT contiguous" }
        )
    }
}

#[derive(Debug, Clone)]
pub struct CascadeTrace {
    pub step: CascadeStep,
    pub chain_order: usize,
    pub chain_count: usize,
    pub cover: Option<CoverFamily>,
    /// Number of longest chains whose projection was checked for contiguity.
    pub projections_checked: usize,
    pub p: Option<(Vec<usize>, CyclicInterval)>,
    pub q: Option<(Vec<usize>, CyclicInterval)>,
    pub r: Option<(Vec<usize>, CyclicInterval)>,
    pub orientation: Option<Orientation>,
    pub checks: Vec<AdjacencyCheck>,
}

#[derive(Debug, Clone)]
pub struct ArcTransversal {
    pub transversal: Transversal,
    pub trace: CascadeTrace,
}

fn falsified(msg: String) -> Error {
    Error::Falsified(msg)
}

/// Longest chain avoiding every arc in `avoid` whose projection is smallest,
/// lexicographically first among ties.
fn pick_min<'a>(
    chains: &'a ChainFamily,
    projections: &[CyclicInterval],
    avoid: &[usize],
) -> Option<(&'a [usize], CyclicInterval)> {
    let mut best: Option<(&[usize], CyclicInterval)> = None;
    for (i, chain) in chains.members().enumerate() {
        if chain.iter().any(|a| avoid.contains(a)) {
            continue;
        }
        let iv = projections[i];
        if best.is_none_or(|(_, b)| iv.len < b.len) {
            best = Some((chain, iv));
        }
    }
    best
}

fn adjacency(
    left: &'static str,
    li: CyclicInterval,
    right: &'static str,
    ri: CyclicInterval,
) -> AdjacencyCheck {
    AdjacencyCheck {
        left,
        right,
        left_interval: li,
        right_interval: ri,
        holds: (li.last() + 1) % li.n == ri.first,
    }
}

/// A transversal of at most three arcs for the longest chains (`Mode::Path`)
/// or longest closed chains (`Mode::Cycle`) of `model`.
///
/// Every candidate is checked against the enumerated chains. Any failed
/// contiguity or adjacency assertion, or a final candidate that misses a
/// chain, is reported as `Error::Falsified`.
pub fn theorem6_transversal(model: &ArcModel, mode: Mode, budget: u64) -> Result<ArcTransversal, Error> {
    let g = arc_intersection_graph(model);
    let report = connectivity(&g);
    match mode {
        Mode::Path if !report.is_connected => return Err(Error::NotConnected),
        Mode::Cycle if !report.is_two_connected => return Err(Error::NotTwoConnected),
        _ => {}
    }
    let mut budget = Budget::new(budget);
    let chains = longest_chains(model, mode == Mode::Cycle, &mut budget)?;
    let mut trace = CascadeTrace {
        step: CascadeStep::Universal,
        chain_order: chains.length(),
        chain_count: chains.member_count(),
        cover: None,
        projections_checked: 0,
        p: None,
        q: None,
        r: None,
        orientation: None,
        checks: Vec::new(),
    };
    let finish = |vertices: Vec<usize>, trace: CascadeTrace| -> Result<ArcTransversal, Error> {
        let transversal = Transversal::new(vertices, mode, &chains, false)?;
        Ok(ArcTransversal { transversal, trace })
    };

    let cover = match covering_family(model) {
        Covering::Covers(c) if c.len() >= 2 => c,
        covering => {
            trace.step = match covering {
                Covering::Covers(_) => CascadeStep::Universal,
                Covering::NotCovering => CascadeStep::Interval,
            };
            if let Covering::Covers(c) = covering {
                // a universal vertex extends or lengthens any chain avoiding it
                let universal = vec![c.member(0)];
                if !verify_against(&chains, &universal).holds() {
                    return Err(falsified("the whole-circle arc misses a longest chain".into()));
                }
                return finish(universal, trace);
            }
            let count = chains.member_count();
            if let Some(v) = (0..model.len()).find(|&v| chains.per_vertex_counts()[v] == count) {
                return finish(vec![v], trace);
            }
            trace.step = CascadeStep::IntervalExact;
            let exact = minimum_transversal(&chains, mode, &mut budget)?;
            if exact.size() > 3 {
                return Err(falsified(format!(
                    "interval model needs {} arcs to hit every longest chain",
                    exact.size()
                )));
            }
            return finish(exact.vertices().to_vec(), trace);
        }
    };
    trace.cover = Some(cover.clone());

    let mut projections = Vec::with_capacity(chains.member_count());
    for chain in chains.members() {
        let proj = chain_projection(chain, &cover);
        match proj.interval {
            Some(iv) => projections.push(iv),
            None => {
                return Err(falsified(format!(
                    "longest chain {chain:?} projects to non-contiguous indices {:?}",
                    proj.indices
                )))
            }
        }
        trace.projections_checked += 1;
    }

    let k = |i: usize| cover.member(i);
    let (p_chain, p) = pick_min(&chains, &projections, &[]).expect("a non-empty model has a chain");
    trace.p = Some((p_chain.to_vec(), p));
    let pair = vec![k(p.first), k(p.last())];
    trace.step = CascadeStep::Pair;
    if verify_against(&chains, &pair).holds() {
        return finish(pair, trace);
    }

    let (q_chain, q) = pick_min(&chains, &projections, &pair)
        .ok_or_else(|| falsified("no chain avoids the pair yet the pair misses a chain".into()))?;
    trace.q = Some((q_chain.to_vec(), q));
    if !p.is_disjoint(&q) {
        return Err(falsified(format!("projections {p} and {q} of P and Q overlap")));
    }
    let forward = adjacency("P", p, "Q", q);
    let reflected = adjacency("Q", q, "P", p);
    let orientation = if forward.holds {
        Orientation::Forward
    } else if reflected.holds {
        Orientation::Reflected
    } else {
        trace.checks.push(forward);
        trace.checks.push(reflected);
        return Err(falsified(format!("disjoint projections {p} and {q} are not adjacent")));
    };
    trace.checks.push(if forward.holds { forward } else { reflected });
    trace.orientation = Some(orientation);
    let q_far = match orientation {
        Orientation::Forward => k(q.last()),
        Orientation::Reflected => k(q.first),
    };
    let mut triple = pair.clone();
    triple.push(q_far);
    trace.step = CascadeStep::Triple;
    if verify_against(&chains, &triple).holds() {
        return finish(triple, trace);
    }

    let (r_chain, r) = pick_min(&chains, &projections, &triple)
        .ok_or_else(|| falsified("no chain avoids the triple yet the triple misses a chain".into()))?;
    trace.r = Some((r_chain.to_vec(), r));
    if !r.is_disjoint(&p) || !r.is_disjoint(&q) {
        return Err(falsified(format!("projection {r} of R meets those of P and Q")));
    }
    let (pr, qr) = match orientation {
        Orientation::Forward => (adjacency("R", r, "P", p), adjacency("Q", q, "R", r)),
        Orientation::Reflected => (adjacency("P", p, "R", r), adjacency("R", r, "Q", q)),
    };
    let partition = pr.holds && qr.holds;
    trace.checks.push(pr);
    trace.checks.push(qr);
    if !partition {
        return Err(falsified(format!(
            "projections {p}, {q}, {r} do not partition the covering family"
        )));
    }
    let final_set = match orientation {
        Orientation::Forward => vec![k(p.first), k(q.first), k(r.first)],
        Orientation::Reflected => vec![k(p.last()), k(q.last()), k(r.last())],
    };
    trace.step = CascadeStep::Partition;
    if !verify_against(&chains, &final_set).holds() {
        return Err(falsified(format!(
            "final candidate {final_set:?} misses a longest chain"
        )));
    }
    finish(final_set, trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_BUDGET;

    fn q(n: i64, d: i64) -> Point {
        Point::new(n, d)
    }

    fn open(s: (i64, i64), e: (i64, i64)) -> Arc {
        Arc::Open {
            start: q(s.0, s.1),
            end: q(e.0, e.1),
        }
    }

    fn triangle_model() -> ArcModel {
        ArcModel::new(vec![
            open((0, 1), (2, 5)),
            open((7, 20), (3, 4)),
            open((7, 10), (1, 20)),
        ])
        .unwrap()
    }

    #[test]
    fn model_validation() {
        assert!(matches!(
            ArcModel::new(vec![open((1, 10), (1, 2)), open((1, 2), (9, 10))]),
            Err(ArcModelError::DuplicateEndpoint { .. })
        ));
        assert_eq!(
            ArcModel::new(vec![open((1, 5), (1, 5))]),
            Err(ArcModelError::Degenerate { arc: 0 })
        );
        assert_eq!(
            ArcModel::new(vec![open((1, 5), (1, 1))]),
            Err(ArcModelError::OutOfRange { arc: 0 })
        );
        assert_eq!(ArcModel::new(vec![]), Err(ArcModelError::Empty));
    }

    #[test]
    fn triangle_model_graph_and_cover() {
        let m = triangle_model();
        let g = arc_intersection_graph(&m);
        assert_eq!(g.edge_count(), 3);
        assert!(m.covers());
        match covering_family(&m) {
            Covering::Covers(c) => assert_eq!(c.members(), &[0, 1, 2]),
            Covering::NotCovering => panic!("triangle model covers the circle"),
        }
    }

    #[test]
    fn intersection_cases() {
        let disjoint = ArcModel::new(vec![open((1, 10), (2, 10)), open((3, 10), (4, 10))]).unwrap();
        assert_eq!(arc_intersection_graph(&disjoint).edge_count(), 0);
        let nested = ArcModel::new(vec![open((1, 10), (6, 10)), open((2, 10), (3, 10))]).unwrap();
        assert_eq!(arc_intersection_graph(&nested).edge_count(), 1);
        assert!(nested.arcs()[0].properly_contains(&nested.arcs()[1]));
        assert!(!nested.arcs()[1].properly_contains(&nested.arcs()[0]));
        assert_eq!(nested.maximal_arcs(), vec![0]);
        // wrapping arcs meet across 0
        let wrap = ArcModel::new(vec![open((9, 10), (1, 10)), open((19, 20), (1, 20))]).unwrap();
        assert!(wrap.arcs()[0].properly_contains(&wrap.arcs()[1]));
    }

    #[test]
    fn cover_edge_cases() {
        let with_full = ArcModel::new(vec![open((1, 10), (2, 10)), Arc::Full]).unwrap();
        match covering_family(&with_full) {
            Covering::Covers(c) => assert_eq!(c.members(), &[1]),
            Covering::NotCovering => panic!(),
        }
        let partial = ArcModel::new(vec![open((0, 1), (1, 2)), open((2, 5), (9, 10))]).unwrap();
        assert_eq!(covering_family(&partial), Covering::NotCovering);
    }

    #[test]
    fn chain_enumeration() {
        let m = triangle_model();
        let chains = longest_chains(&m, false, &mut Budget::default()).unwrap();
        assert_eq!(chains.length(), 3);
        let two = ArcModel::new(vec![open((1, 10), (5, 10)), open((3, 10), (7, 10))]).unwrap();
        let chains = longest_chains(&two, false, &mut Budget::default()).unwrap();
        assert_eq!(chains.member_count(), 1);
        assert_eq!(chains.length(), 2);
        let tree = ArcModel::new(vec![
            open((1, 10), (5, 10)),
            open((3, 10), (7, 10)),
            open((6, 10), (9, 10)),
        ])
        .unwrap();
        let closed = longest_chains(&tree, true, &mut Budget::default()).unwrap();
        assert_eq!(closed.member_count(), 0);
    }

    #[test]
    fn projections() {
        let four = CoverFamily {
            members: vec![10, 11, 12, 13],
        };
        let single = chain_projection(&[5, 11], &four);
        assert_eq!(single.indices, vec![1]);
        assert!(single.is_contiguous());
        let gap = chain_projection(&[10, 12], &four);
        assert_eq!(gap.indices, vec![0, 2]);
        assert!(!gap.is_contiguous());
        let wrap = chain_projection(&[13, 10], &four);
        assert_eq!(wrap.interval, Some(CyclicInterval { first: 3, len: 2, n: 4 }));
        assert!(chain_projection(&[1, 2], &four).interval.is_none());
        let m = triangle_model();
        let Covering::Covers(c) = covering_family(&m) else { panic!() };
        let all = chain_projection(&[0, 1, 2], &c);
        assert_eq!(all.indices, vec![0, 1, 2]);
        assert!(all.is_contiguous());
    }

    #[test]
    fn cascade_on_small_models() {
        let m = triangle_model();
        let r = theorem6_transversal(&m, Mode::Path, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.trace.step, CascadeStep::Pair);
        assert!(r.transversal.size() <= 2);

        let with_full = ArcModel::new(vec![
            open((1, 10), (2, 10)),
            open((3, 10), (4, 10)),
            Arc::Full,
        ])
        .unwrap();
        let r = theorem6_transversal(&with_full, Mode::Path, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.trace.step, CascadeStep::Universal);
        assert_eq!(r.transversal.vertices(), &[2]);

        let cyc = theorem6_transversal(&m, Mode::Cycle, DEFAULT_BUDGET).unwrap();
        assert!(cyc.transversal.size() <= 3);
    }

    #[test]
    fn cascade_rejects_bad_connectivity() {
        let disjoint = ArcModel::new(vec![open((1, 10), (2, 10)), open((3, 10), (4, 10))]).unwrap();
        assert!(matches!(
            theorem6_transversal(&disjoint, Mode::Path, DEFAULT_BUDGET),
            Err(Error::NotConnected)
        ));
        let path = ArcModel::new(vec![open((1, 10), (5, 10)), open((3, 10), (7, 10))]).unwrap();
        assert!(matches!(
            theorem6_transversal(&path, Mode::Cycle, DEFAULT_BUDGET),
            Err(Error::NotTwoConnected)
        ));
    }
}
