//! Refining an arbitrary ladder matching into one that can be woven.
//!
//! A matching whose edges all satisfy `|j - i| <= span` is cut into windows of
//! width `w` by first coordinate; edges in windows two or more apart are
//! parallel. Keeping every other window, taking a monotone (pairwise crossing
//! or pairwise parallel) subset inside each, and fixing block parities yields
//! a valid block matching with at least `|N| / (3 sqrt(w))` edges.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::{crossing, parallel, validate_block_matching, BlockMatching, LadderEdge};
use crate::Error;

/// Cuts `edges` into windows `((k-1) w, k w]` by first coordinate, `k = 1..ceil(tau/w)`.
pub fn bucket_matching(
    tau: usize,
    edges: &[LadderEdge],
    window: usize,
) -> Result<Vec<Vec<LadderEdge>>, Error> {
    if window == 0 {
        return Err(Error::Precondition("window width must be positive".into()));
    }
    let span = window / 2;
    let mut buckets = vec![Vec::new(); tau.div_ceil(window)];
    for &(i, j) in edges {
        if i == 0 || j == 0 || i > tau || j > tau {
            return Err(Error::Precondition(format!(
                "edge ({i}, {j}) outside 1..={tau}"
            )));
        }
        if i.abs_diff(j) > span {
            return Err(Error::Precondition(format!(
                "edge ({i}, {j}) exceeds the span bound {span}"
            )));
        }
        buckets[(i - 1) / window].push((i, j));
    }
    for b in &mut buckets {
        b.sort_unstable();
    }
    Ok(buckets)
}

/// Which windows survive: 1-based odd ones or even ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockParity {
    Odd,
    Even,
}

/// Keeps the odd-numbered or the even-numbered windows, whichever holds more
/// edges; ties keep the odd ones.
pub fn select_alternate_blocks(buckets: &[Vec<LadderEdge>]) -> (BlockParity, Vec<Vec<LadderEdge>>) {
    let weight = |parity: usize| -> usize {
        buckets.iter().skip(parity).step_by(2).map(Vec::len).sum()
    };
    let (parity, offset) = if weight(0) >= weight(1) {
        (BlockParity::Odd, 0)
    } else {
        (BlockParity::Even, 1)
    };
    (
        parity,
        buckets.iter().skip(offset).step_by(2).cloned().collect(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneKind {
    /// Second coordinates strictly decrease: every two edges cross.
    Crossing,
    /// Second coordinates strictly increase: every two edges are parallel.
    Parallel,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monotone {
    pub edges: Vec<LadderEdge>,
    pub kind: MonotoneKind,
}

impl Monotone {
    pub fn is_consistent(&self) -> bool {
        let ok = match self.kind {
            MonotoneKind::Crossing => crossing,
            MonotoneKind::Parallel => parallel,
        };
        self.edges
            .iter()
            .enumerate()
            .all(|(x, &e)| self.edges[x + 1..].iter().all(|&f| ok(e, f)))
    }
}

/// Longest strictly increasing subsequence of `seq`, as positions.
fn longest_increasing(seq: &[usize]) -> Vec<usize> {
    // tails[k]: position of the smallest tail of an increasing run of length k+1
    let mut tails: Vec<usize> = Vec::new();
    let mut prev = vec![usize::MAX; seq.len()];
    for (pos, &x) in seq.iter().enumerate() {
        let k = tails.partition_point(|&t| seq[t] < x);
        if k > 0 {
            prev[pos] = tails[k - 1];
        }
        if k == tails.len() {
            tails.push(pos);
        } else {
            tails[k] = pos;
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied();
    while let Some(p) = cur {
        out.push(p);
        cur = (prev[p] != usize::MAX).then(|| prev[p]);
    }
    out.reverse();
    out
}

/// Largest pairwise crossing or pairwise parallel subset of a matching block.
///
/// Sorted by first coordinate the second coordinates form a sequence of
/// distinct values; its longest decreasing or increasing subsequence has
/// length at least `ceil(sqrt(s))`. Equal lengths prefer the crossing subset.
pub fn extract_monotone(block: &[LadderEdge]) -> Monotone {
    let mut sorted = block.to_vec();
    sorted.sort_unstable();
    let seconds: Vec<usize> = sorted.iter().map(|e| e.1).collect();
    let inc = longest_increasing(&seconds);
    let reversed: Vec<usize> = seconds.iter().map(|&x| usize::MAX - x).collect();
    let dec = longest_increasing(&reversed);
    let (picked, kind) = if dec.len() >= inc.len() {
        (dec, MonotoneKind::Crossing)
    } else {
        (inc, MonotoneKind::Parallel)
    };
    Monotone {
        edges: picked.into_iter().map(|p| sorted[p]).collect(),
        kind,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityFix {
    pub matching: BlockMatching,
    pub removed: Vec<LadderEdge>,
}

/// Turns mutually parallel monotone blocks into a valid block matching.
///
/// Parallel blocks are split into single edges; a crossing block of odd size
/// at least three loses its median edge by first coordinate. At most a third
/// of the edges go.
pub fn parity_fix(tau: usize, blocks: &[Monotone]) -> Result<ParityFix, Error> {
    for (b, m) in blocks.iter().enumerate() {
        if !m.is_consistent() {
            return Err(Error::Precondition(format!(
                "block {b} is not {:?} as declared",
                m.kind
            )));
        }
    }
    for (a, ma) in blocks.iter().enumerate() {
        for mb in &blocks[a + 1..] {
            if ma.edges.iter().any(|&e| mb.edges.iter().any(|&f| !parallel(e, f))) {
                return Err(Error::Precondition(
                    "edges of different blocks must be parallel".into(),
                ));
            }
        }
    }
    let mut out = Vec::new();
    let mut removed = Vec::new();
    for m in blocks {
        let mut edges = m.edges.clone();
        edges.sort_unstable();
        match m.kind {
            _ if edges.is_empty() => {}
            MonotoneKind::Parallel => out.extend(edges.into_iter().map(|e| vec![e])),
            MonotoneKind::Crossing => {
                if edges.len() >= 3 && edges.len() % 2 == 1 {
                    removed.push(edges.remove(edges.len() / 2));
                }
                out.push(edges);
            }
        }
    }
    let total: usize = blocks.iter().map(|m| m.edges.len()).sum();
    if 3 * removed.len() > total {
        return Err(Error::Falsified(format!(
            "parity repair removed {} of {total} edges",
            removed.len()
        )));
    }
    let matching = BlockMatching::new(tau, out);
    validate_block_matching(&matching)
        .map_err(|v| Error::Falsified(format!("parity repair produced an invalid matching: {v}")))?;
    Ok(ParityFix { matching, removed })
}

/// Every stage of the refinement, for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refinement {
    pub buckets: Vec<Vec<LadderEdge>>,
    pub parity: BlockParity,
    pub monotone: Vec<Monotone>,
    pub fixed: ParityFix,
}

impl Refinement {
    pub fn matching(&self) -> &BlockMatching {
        &self.fixed.matching
    }
}

/// bucket, keep alternate windows, extract monotone subsets, repair parity.
pub fn refine_matching(
    tau: usize,
    edges: &[LadderEdge],
    window: usize,
) -> Result<Refinement, Error> {
    let buckets = bucket_matching(tau, edges, window)?;
    let (parity, kept) = select_alternate_blocks(&buckets);
    let monotone: Vec<Monotone> = kept
        .iter()
        .filter(|b| !b.is_empty())
        .map(|b| extract_monotone(b))
        .collect();
    let fixed = parity_fix(tau, &monotone)?;
    Ok(Refinement {
        buckets,
        parity,
        monotone,
        fixed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weave::weave;
    use proptest::prelude::*;

    #[test]
    fn bucketing_example() {
        let b = bucket_matching(12, &[(1, 2), (6, 5), (11, 12)], 4).unwrap();
        assert_eq!(b, vec![vec![(1, 2)], vec![(6, 5)], vec![(11, 12)]]);
        assert!(parallel((1, 2), (11, 12)));
    }

    #[test]
    fn bucketing_errors() {
        assert!(bucket_matching(5, &[], 4).unwrap().iter().all(Vec::is_empty));
        assert!(matches!(
            bucket_matching(12, &[(1, 5)], 4),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(bucket_matching(12, &[], 0), Err(Error::Precondition(_))));
    }

    #[test]
    fn monotone_examples() {
        // second coordinates (3, 1, 2): both directions reach length 2; crossing wins ties
        let m = extract_monotone(&[(1, 3), (2, 1), (3, 2)]);
        assert_eq!(m.edges.len(), 2);
        assert_eq!(m.kind, MonotoneKind::Crossing);
        assert!(m.is_consistent());

        let m = extract_monotone(&[(4, 4)]);
        assert_eq!(m.edges, vec![(4, 4)]);

        let m = extract_monotone(&[(1, 4), (2, 3), (3, 2), (4, 1)]);
        assert_eq!(m.edges.len(), 4);
        assert_eq!(m.kind, MonotoneKind::Crossing);

        let m = extract_monotone(&[(1, 2), (2, 3), (3, 1), (4, 4)]);
        assert_eq!(m.kind, MonotoneKind::Parallel);
        assert_eq!(m.edges, vec![(1, 2), (2, 3), (4, 4)]);
    }

    #[test]
    fn parity_examples() {
        let three = Monotone {
            edges: vec![(1, 3), (2, 2), (3, 1)],
            kind: MonotoneKind::Crossing,
        };
        let fixed = parity_fix(3, &[three]).unwrap();
        assert_eq!(fixed.removed, vec![(2, 2)]);
        assert_eq!(fixed.matching.blocks, vec![vec![(1, 3), (3, 1)]]);

        let blocks = vec![
            Monotone { edges: vec![(1, 1)], kind: MonotoneKind::Crossing },
            Monotone { edges: vec![(2, 3), (3, 2)], kind: MonotoneKind::Crossing },
            Monotone {
                edges: vec![(4, 7), (5, 6), (6, 5), (7, 4)],
                kind: MonotoneKind::Crossing,
            },
        ];
        let fixed = parity_fix(7, &blocks).unwrap();
        assert!(fixed.removed.is_empty());
        assert_eq!(fixed.matching.blocks.len(), 3);

        let five = Monotone {
            edges: vec![(1, 5), (2, 4), (3, 3), (4, 2), (5, 1)],
            kind: MonotoneKind::Crossing,
        };
        let three = Monotone {
            edges: vec![(6, 8), (7, 7), (8, 6)],
            kind: MonotoneKind::Crossing,
        };
        let fixed = parity_fix(8, &[five, three]).unwrap();
        assert_eq!(fixed.removed.len(), 2);
        assert!(3 * fixed.removed.len() <= 8);
        let sizes: Vec<usize> = fixed.matching.blocks.iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![4, 2]);
    }

    #[test]
    fn parity_rejects_mislabeled_blocks() {
        let bad = Monotone { edges: vec![(1, 1), (2, 2)], kind: MonotoneKind::Crossing };
        assert!(matches!(parity_fix(2, &[bad]), Err(Error::Precondition(_))));
    }

    fn is_ceil_sqrt_at_most(k: usize, s: usize) -> bool {
        // ceil(sqrt s) <= k  <=>  s <= k^2
        s <= k * k
    }

    proptest! {
        #[test]
        fn monotone_subset_meets_erdos_szekeres(perm in Just((1..=200usize).collect::<Vec<_>>()).prop_shuffle(), s in 1usize..=200) {
            let seconds: Vec<usize> = perm.into_iter().filter(|&x| x <= s).collect();
            let block: Vec<LadderEdge> = seconds.iter().enumerate().map(|(i, &j)| (i + 1, j)).collect();
            let m = extract_monotone(&block);
            prop_assert!(m.is_consistent());
            prop_assert!(is_ceil_sqrt_at_most(m.edges.len(), s));
        }

        #[test]
        fn pipeline_output_weaves(tau in 1usize..40, span in 1usize..6, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng, seq::SliceRandom};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut order: Vec<usize> = (1..=tau).collect();
            order.shuffle(&mut rng);
            let mut used = vec![false; tau + 1];
            let mut edges = Vec::new();
            for i in order {
                let lo = i.saturating_sub(span).max(1);
                let hi = (i + span).min(tau);
                let free: Vec<usize> = (lo..=hi).filter(|&j| !used[j]).collect();
                if !free.is_empty() && rng.random_bool(0.8) {
                    let j = free[rng.random_range(0..free.len())];
                    used[j] = true;
                    edges.push((i, j));
                }
            }
            let r = refine_matching(tau, &edges, 2 * span).unwrap();
            let size = r.matching().edge_count();
            prop_assert!(18 * span * size * size >= edges.len() * edges.len());
            prop_assert!(3 * r.fixed.removed.len() <= r.monotone.iter().map(|m| m.edges.len()).sum::<usize>());
            let w = weave(r.matching()).unwrap();
            prop_assert!(w.longer().order() >= tau + size);
        }
    }
}
