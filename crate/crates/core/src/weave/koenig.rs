//! Maximum bipartite matching and the vertex cover König's theorem extracts from it.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoenigCover {
    /// Matched pairs `(left, right)`, sorted.
    pub matching: Vec<(usize, usize)>,
    pub cover_left: Vec<usize>,
    pub cover_right: Vec<usize>,
}

impl KoenigCover {
    pub fn cover_size(&self) -> usize {
        self.cover_left.len() + self.cover_right.len()
    }

    pub fn covers(&self, edges: &[(usize, usize)]) -> bool {
        edges.iter().all(|(l, r)| {
            self.cover_left.binary_search(l).is_ok() || self.cover_right.binary_search(r).is_ok()
        })
    }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    seen: &mut [bool],
    match_left: &mut [Option<usize>],
    match_right: &mut [Option<usize>],
) -> bool {
    for &r in &adj[u] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let free = match match_right[r] {
            None => true,
            Some(l) => augment(l, adj, seen, match_left, match_right),
        };
        if free {
            match_left[u] = Some(r);
            match_right[r] = Some(u);
            return true;
        }
    }
    false
}

/// Maximum matching by augmenting paths, then the cover
/// `(L \ Z) + (R & Z)` where `Z` is everything reachable from unmatched left
/// vertices along alternating paths.
pub fn koenig_cover(left: usize, right: usize, edges: &[(usize, usize)]) -> KoenigCover {
    let mut adj = vec![Vec::new(); left];
    for &(l, r) in edges {
        assert!(l < left && r < right, "edge ({l}, {r}) outside {left} x {right}");
        adj[l].push(r);
    }
    for list in &mut adj {
        list.sort_unstable();
        list.dedup();
    }
    let mut match_left = vec![None; left];
    let mut match_right = vec![None; right];
    for u in 0..left {
        let mut seen = vec![false; right];
        augment(u, &adj, &mut seen, &mut match_left, &mut match_right);
    }

    let mut z_left = vec![false; left];
    let mut z_right = vec![false; right];
    let mut queue: VecDeque<usize> = (0..left).filter(|&u| match_left[u].is_none()).collect();
    for &u in &queue {
        z_left[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for &r in &adj[u] {
            if match_left[u] == Some(r) || z_right[r] {
                continue;
            }
            z_right[r] = true;
            if let Some(l) = match_right[r] {
                if !z_left[l] {
                    z_left[l] = true;
                    queue.push_back(l);
                }
            }
        }
    }

    KoenigCover {
        matching: (0..left)
            .filter_map(|u| match_left[u].map(|r| (u, r)))
            .collect(),
        cover_left: (0..left).filter(|&u| !z_left[u]).collect(),
        cover_right: (0..right).filter(|&r| z_right[r]).collect(),
    }
}
