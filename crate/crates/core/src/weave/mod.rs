//! Weaving two equal-order paths along a block-structured matching.
//!
//! Given paths `P: u_1..u_tau` and `Q: v_1..v_tau` and a matching `M` between
//! them, split into blocks where edges inside a block pairwise cross and edges
//! of different blocks are pairwise parallel, and every block has one edge or
//! an even number of edges, the graph `(P + Q) + M` contains a path from
//! `{u_1, v_1}` to `{u_tau, v_tau}` of order at least `tau + |M|`.
//!
//! Matching edges are written `(i, j)` for `u_i v_j`, 1-based.
//!
//! The construction: with `i_0 = 1`, `i_{|M|+1} = tau` and `i_1 < .. < i_|M|`
//! the matched indices on `P`, the subpath `u_{i_j} .. u_{i_{j+1}}` is the
//! `j`-th segment of `P` (likewise for `Q`). Odd segments of `P`, the matching
//! and even segments of `Q` form one path; even segments of `P`, the matching
//! and odd segments of `Q` form the other. Their orders sum to `2 tau + 2|M|`.

mod koenig;
mod refine;

pub use koenig::{koenig_cover, KoenigCover};
pub use refine::{
    bucket_matching, extract_monotone, parity_fix, refine_matching, select_alternate_blocks,
    BlockParity, Monotone, MonotoneKind, ParityFix, Refinement,
};

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// A matching edge `u_i v_j`, stored as `(i, j)`.
pub type LadderEdge = (usize, usize);

/// `(b.0 - a.0) * (b.1 - a.1)`: negative for crossing edges, positive for parallel ones.
pub fn orientation(a: LadderEdge, b: LadderEdge) -> i64 {
    (b.0 as i64 - a.0 as i64) * (b.1 as i64 - a.1 as i64)
}

pub fn crossing(a: LadderEdge, b: LadderEdge) -> bool {
    orientation(a, b) < 0
}

pub fn parallel(a: LadderEdge, b: LadderEdge) -> bool {
    orientation(a, b) > 0
}

/// Two paths of order `tau` and a matching between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LadderInstance {
    tau: usize,
    edges: Vec<LadderEdge>,
}

impl LadderInstance {
    pub fn new(tau: usize, mut edges: Vec<LadderEdge>) -> Result<Self, Violation> {
        if tau == 0 {
            return Err(Violation::EmptyPaths);
        }
        edges.sort_unstable();
        check_matching(tau, &edges)?;
        Ok(LadderInstance { tau, edges })
    }

    pub fn tau(&self) -> usize {
        self.tau
    }

    /// Edges sorted by first coordinate.
    pub fn edges(&self) -> &[LadderEdge] {
        &self.edges
    }
}

fn check_matching(tau: usize, edges: &[LadderEdge]) -> Result<(), Violation> {
    for &e in edges {
        if e.0 == 0 || e.1 == 0 || e.0 > tau || e.1 > tau {
            return Err(Violation::EdgeOutOfRange { edge: e, tau });
        }
    }
    let mut firsts = vec![None; tau + 1];
    let mut seconds = vec![None; tau + 1];
    for &e in edges {
        if let Some(prev) = firsts[e.0].replace(e) {
            return Err(Violation::NotAMatching { first: prev, second: e });
        }
        if let Some(prev) = seconds[e.1].replace(e) {
            return Err(Violation::NotAMatching { first: prev, second: e });
        }
    }
    Ok(())
}

/// A ladder matching partitioned into blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockMatching {
    pub tau: usize,
    pub blocks: Vec<Vec<LadderEdge>>,
}

impl BlockMatching {
    pub fn new(tau: usize, blocks: Vec<Vec<LadderEdge>>) -> Self {
        BlockMatching { tau, blocks }
    }

    pub fn edge_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = LadderEdge> + '_ {
        self.blocks.iter().flatten().copied()
    }

    pub fn instance(&self) -> Result<LadderInstance, Violation> {
        LadderInstance::new(self.tau, self.edges().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EmptyPaths,
    EdgeOutOfRange { edge: LadderEdge, tau: usize },
    NotAMatching { first: LadderEdge, second: LadderEdge },
    EmptyBlock { block: usize },
    /// A block with an odd number of edges other than one.
    OddBlock { block: usize, size: usize },
    /// Two edges of one block do not cross.
    NotCrossing { block: usize, first: LadderEdge, second: LadderEdge },
    /// Edges of two different blocks are not parallel.
    NotParallel { blocks: (usize, usize), first: LadderEdge, second: LadderEdge },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyPaths => f.write_str("paths must have order at least 1"),
            Violation::EdgeOutOfRange { edge, tau } => {
                write!(f, "edge {edge:?} leaves the index range 1..={tau}")
            }
            Violation::NotAMatching { first, second } => {
                write!(f, "edges {first:?} and {second:?} share an endpoint")
            }
            Violation::EmptyBlock { block } => write!(f, "block {block} is empty"),
            Violation::OddBlock { block, size } => {
                write!(f, "block {block} has {size} edges; sizes must be 1 or even")
            }
            Violation::NotCrossing { block, first, second } => {
                write!(f, "edges {first:?} and {second:?} of block {block} do not cross")
            }
            Violation::NotParallel { blocks, first, second } => write!(
                f,
                "edges {first:?} (block {}) and {second:?} (block {}) are not parallel",
                blocks.0, blocks.1
            ),
        }
    }
}

impl core::error::Error for Violation {}

/// Checks the block-size and crossing/parallel conditions, reporting the first failure.
pub fn validate_block_matching(bm: &BlockMatching) -> Result<(), Violation> {
    if bm.tau == 0 {
        return Err(Violation::EmptyPaths);
    }
    let mut all: Vec<LadderEdge> = bm.edges().collect();
    all.sort_unstable();
    check_matching(bm.tau, &all)?;
    for (b, block) in bm.blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(Violation::EmptyBlock { block: b });
        }
        if block.len() != 1 && block.len() % 2 == 1 {
            return Err(Violation::OddBlock { block: b, size: block.len() });
        }
        for (x, &e) in block.iter().enumerate() {
            for &f in &block[x + 1..] {
                if !crossing(e, f) {
                    return Err(Violation::NotCrossing { block: b, first: e, second: f });
                }
            }
        }
    }
    for (a, ba) in bm.blocks.iter().enumerate() {
        for (b, bb) in bm.blocks.iter().enumerate().skip(a + 1) {
            for &e in ba {
                for &f in bb {
                    if !parallel(e, f) {
                        return Err(Violation::NotParallel { blocks: (a, b), first: e, second: f });
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    P,
    Q,
}

/// A path in `(P + Q) + M`, vertices given as `(side, 1-based index)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WovenPath {
    pub vertices: Vec<(Side, usize)>,
}

impl WovenPath {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn endpoints(&self) -> ((Side, usize), (Side, usize)) {
        (
            self.vertices[0],
            *self.vertices.last().expect("woven paths are nonempty"),
        )
    }

    /// Simple, uses only ladder edges of `bm`, and runs from index 1 to index `tau`.
    pub fn is_valid_for(&self, bm: &BlockMatching) -> bool {
        let tau = bm.tau;
        let mut seen = vec![false; 2 * tau];
        let id = |(s, k): (Side, usize)| match s {
            Side::P => k - 1,
            Side::Q => tau + k - 1,
        };
        for &x in &self.vertices {
            if x.1 == 0 || x.1 > tau || seen[id(x)] {
                return false;
            }
            seen[id(x)] = true;
        }
        let edge_ok = |a: (Side, usize), b: (Side, usize)| {
            if a.0 == b.0 {
                a.1.abs_diff(b.1) == 1
            } else {
                let (u, v) = if a.0 == Side::P { (a.1, b.1) } else { (b.1, a.1) };
                bm.edges().any(|e| e == (u, v))
            }
        };
        let (s, t) = self.endpoints();
        self.vertices.windows(2).all(|w| edge_ok(w[0], w[1])) && s.1 == 1 && t.1 == tau
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weaving {
    /// Odd segments of `P`, the matching, even segments of `Q`.
    pub p_prime: WovenPath,
    /// Even segments of `P`, the matching, odd segments of `Q`.
    pub q_prime: WovenPath,
}

impl Weaving {
    /// The path of larger order; on a tie, `q_prime`, which starts at `u_1`.
    pub fn longer(&self) -> &WovenPath {
        if self.p_prime.order() > self.q_prime.order() {
            &self.p_prime
        } else {
            &self.q_prime
        }
    }
}

/// Matched indices on one side, framed by `1` and `tau`.
fn framed(tau: usize, mut matched: Vec<usize>) -> Vec<usize> {
    matched.sort_unstable();
    let mut f = Vec::with_capacity(matched.len() + 2);
    f.push(1);
    f.extend(matched);
    f.push(tau);
    f
}

fn woven(
    bm: &BlockMatching,
    p_frame: &[usize],
    q_frame: &[usize],
    p_parity: usize,
) -> Result<WovenPath, Error> {
    let tau = bm.tau;
    let id = |s: Side, k: usize| match s {
        Side::P => k - 1,
        Side::Q => tau + k - 1,
    };
    let label = |x: usize| if x < tau { (Side::P, x + 1) } else { (Side::Q, x - tau + 1) };
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * tau];
    let mut present = vec![false; 2 * tau];
    let mut add_edge = |a: usize, b: usize, present: &mut Vec<bool>| {
        adj[a].push(b);
        adj[b].push(a);
        present[a] = true;
        present[b] = true;
    };
    let m = p_frame.len() - 2;
    for j in 0..=m {
        let (side, frame) = if j % 2 == p_parity {
            (Side::P, p_frame)
        } else {
            (Side::Q, q_frame)
        };
        present[id(side, frame[j])] = true;
        for k in frame[j]..frame[j + 1] {
            add_edge(id(side, k), id(side, k + 1), &mut present);
        }
    }
    for (i, j) in bm.edges() {
        add_edge(id(Side::P, i), id(Side::Q, j), &mut present);
    }

    if let Some(x) = (0..2 * tau).find(|&x| adj[x].len() > 2) {
        return Err(Error::Falsified(format!(
            "woven subgraph has degree {} at {:?}",
            adj[x].len(),
            label(x)
        )));
    }
    // segment 0 is even: it lies on P for the odd-P path only when its parity is 0
    let start = if p_parity == 0 { id(Side::P, 1) } else { id(Side::Q, 1) };
    let mut visited = vec![false; 2 * tau];
    let mut walk = vec![start];
    visited[start] = true;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&w| !visited[w]) {
        visited[next] = true;
        walk.push(next);
        cur = next;
    }
    let expected = present.iter().filter(|&&p| p).count();
    if walk.len() != expected {
        return Err(Error::Falsified(format!(
            "woven subgraph is not a single path: walk covers {} of {expected} vertices",
            walk.len()
        )));
    }
    let path = WovenPath {
        vertices: walk.into_iter().map(label).collect(),
    };
    if path.endpoints().1 .1 != tau {
        return Err(Error::Falsified(format!(
            "woven path ends at {:?}, not at index {tau}",
            path.endpoints().1
        )));
    }
    Ok(path)
}

/// Builds both woven paths. The block matching must validate.
pub fn weave(bm: &BlockMatching) -> Result<Weaving, Error> {
    validate_block_matching(bm).map_err(|v| Error::Precondition(format!("{v}")))?;
    let p_frame = framed(bm.tau, bm.edges().map(|e| e.0).collect());
    let q_frame = framed(bm.tau, bm.edges().map(|e| e.1).collect());
    let p_prime = woven(bm, &p_frame, &q_frame, 1)?;
    let q_prime = woven(bm, &p_frame, &q_frame, 0)?;
    let m = bm.edge_count();
    if p_prime.order() + q_prime.order() != 2 * bm.tau + 2 * m {
        return Err(Error::Falsified(format!(
            "woven orders {} + {} differ from 2*{} + 2*{m}",
            p_prime.order(),
            q_prime.order(),
            bm.tau
        )));
    }
    Ok(Weaving { p_prime, q_prime })
}

/// The four-block matching on two paths of order 10 with block sizes 1, 2, 4, 1.
pub fn four_block_instance() -> BlockMatching {
    BlockMatching::new(
        10,
        vec![
            vec![(2, 2)],
            vec![(3, 4), (4, 3)],
            vec![(5, 8), (6, 7), (7, 6), (8, 5)],
            vec![(9, 9)],
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_block_instance_is_valid_and_weaves_to_eighteen() {
        let bm = four_block_instance();
        assert_eq!(validate_block_matching(&bm), Ok(()));
        let w = weave(&bm).unwrap();
        assert_eq!(w.p_prime.order(), 18);
        assert_eq!(w.q_prime.order(), 18);
        assert!(w.p_prime.is_valid_for(&bm));
        assert!(w.q_prime.is_valid_for(&bm));
        assert!(w.longer().order() >= 10 + 8);
    }

    #[test]
    fn single_crossing_pair_is_valid() {
        let bm = BlockMatching::new(2, vec![vec![(1, 2), (2, 1)]]);
        assert_eq!(validate_block_matching(&bm), Ok(()));
        let w = weave(&bm).unwrap();
        assert_eq!(w.p_prime.order() + w.q_prime.order(), 8);
    }

    #[test]
    fn block_of_three_is_invalid() {
        let bm = BlockMatching::new(5, vec![vec![(1, 3), (2, 2), (3, 1)]]);
        assert_eq!(
            validate_block_matching(&bm),
            Err(Violation::OddBlock { block: 0, size: 3 })
        );
        assert!(matches!(weave(&bm), Err(Error::Precondition(_))));
    }

    #[test]
    fn parallel_edges_inside_a_block_are_rejected() {
        let bm = BlockMatching::new(4, vec![vec![(1, 1), (2, 2)]]);
        assert!(matches!(
            validate_block_matching(&bm),
            Err(Violation::NotCrossing { block: 0, .. })
        ));
        let bm = BlockMatching::new(4, vec![vec![(1, 2)], vec![(2, 1)]]);
        assert!(matches!(
            validate_block_matching(&bm),
            Err(Violation::NotParallel { blocks: (0, 1), .. })
        ));
    }

    #[test]
    fn one_matched_middle_vertex() {
        let bm = BlockMatching::new(3, vec![vec![(2, 2)]]);
        let w = weave(&bm).unwrap();
        let longer = w.longer();
        assert_eq!(longer.order(), 4);
        assert_eq!(
            w.p_prime.vertices,
            vec![(Side::Q, 1), (Side::Q, 2), (Side::P, 2), (Side::P, 3)]
        );
        assert_eq!(
            w.q_prime.vertices,
            vec![(Side::P, 1), (Side::P, 2), (Side::Q, 2), (Side::Q, 3)]
        );
    }

    #[test]
    fn empty_matching_returns_p() {
        let bm = BlockMatching::new(5, vec![]);
        let w = weave(&bm).unwrap();
        let longer = w.longer();
        assert_eq!(longer.order(), 5);
        assert!(longer.vertices.iter().all(|&(s, _)| s == Side::P));
    }

    #[test]
    fn endpoint_matched_vertices_are_emitted_once() {
        let bm = BlockMatching::new(1, vec![vec![(1, 1)]]);
        let w = weave(&bm).unwrap();
        assert_eq!(w.p_prime.order(), 2);
        assert_eq!(w.q_prime.order(), 2);
        let bm = BlockMatching::new(4, vec![vec![(1, 1)], vec![(4, 4)]]);
        let w = weave(&bm).unwrap();
        assert_eq!(w.p_prime.order() + w.q_prime.order(), 12);
        assert!(w.p_prime.is_valid_for(&bm) && w.q_prime.is_valid_for(&bm));
    }

    #[test]
    fn ladder_instance_rejects_non_matchings() {
        assert!(matches!(
            LadderInstance::new(3, vec![(1, 1), (1, 2)]),
            Err(Violation::NotAMatching { .. })
        ));
        assert!(matches!(
            LadderInstance::new(3, vec![(4, 1)]),
            Err(Violation::EdgeOutOfRange { .. })
        ));
    }
}
