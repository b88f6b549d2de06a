//! Exhaustive generation of small graphs, raw and up to isomorphism.
//!
//! Graphs on `n <= 11` vertices are encoded as adjacency bitmasks: the pair
//! `i < j` sits at bit `j(j-1)/2 + i`, so adding a vertex only appends bits.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::{connectivity, Graph};

pub const MAX_MASK_VERTICES: usize = 11;

#[inline]
fn pair_bit(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_bit(i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).expect("mask encodes a simple graph")
}

pub fn mask_of(g: &Graph) -> u64 {
    assert!(g.vertex_count() <= MAX_MASK_VERTICES);
    g.edges().fold(0, |m, (u, v)| m | 1 << pair_bit(u, v))
}

/// Every labeled graph on `n` vertices, in mask order.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!((1..=8).contains(&n), "labeled sweep supports 1..=8 vertices");
    (0..1u64 << pair_count(n)).map(move |m| graph_from_mask(n, m))
}

pub fn connected_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    labeled_graphs(n).filter(Graph::is_connected)
}

/// Canonical adjacency mask: the minimum mask over all relabelings that list
/// vertices sorted by an isomorphism-invariant key (degree, then the sorted
/// degrees of the neighbours). Restricting to those relabelings keeps the form
/// canonical while cutting the permutation count.
pub fn canonical_mask(n: usize, mask: u64) -> u64 {
    let mut rows = [0u16; MAX_MASK_VERTICES];
    for j in 1..n {
        for i in 0..j {
            if mask >> pair_bit(i, j) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    let degree = |v: usize| rows[v].count_ones();
    let mut keys: Vec<(u32, Vec<u32>, usize)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n)
                .filter(|&w| rows[v] >> w & 1 == 1)
                .map(degree)
                .collect();
            nd.sort_unstable();
            (degree(v), nd, v)
        })
        .collect();
    keys.sort();
    // class id of each position in the canonical order
    let mut class_of_pos = vec![0usize; n];
    for p in 1..n {
        class_of_pos[p] = class_of_pos[p - 1] + usize::from(keys[p].0 != keys[p - 1].0 || keys[p].1 != keys[p - 1].1);
    }
    let mut class_of_vertex = vec![0usize; n];
    for (p, k) in keys.iter().enumerate() {
        class_of_vertex[k.2] = class_of_pos[p];
    }

    struct Search<'a> {
        n: usize,
        rows: &'a [u16],
        class_of_pos: &'a [usize],
        class_of_vertex: &'a [usize],
        order: Vec<usize>,
        used: u16,
        best: u64,
    }

    impl Search<'_> {
        fn go(&mut self, pos: usize) {
            if pos == self.n {
                let mut m = 0u64;
                for j in 1..self.n {
                    for i in 0..j {
                        if self.rows[self.order[i]] >> self.order[j] & 1 == 1 {
                            m |= 1 << pair_bit(i, j);
                        }
                    }
                }
                self.best = self.best.min(m);
                return;
            }
            for v in 0..self.n {
                if self.used >> v & 1 == 0 && self.class_of_vertex[v] == self.class_of_pos[pos] {
                    self.used |= 1 << v;
                    self.order.push(v);
                    self.go(pos + 1);
                    self.order.pop();
                    self.used &= !(1 << v);
                }
            }
        }
    }

    let mut s = Search {
        n,
        rows: &rows,
        class_of_pos: &class_of_pos,
        class_of_vertex: &class_of_vertex,
        order: Vec::with_capacity(n),
        used: 0,
        best: u64::MAX,
    };
    s.go(0);
    s.best
}

/// All graphs on `n` vertices up to isomorphism, as canonical masks.
///
/// Built by vertex augmentation: every class on `n` vertices arises from a
/// class on `n - 1` vertices by adding a vertex with some neighbourhood.
pub fn nonisomorphic_masks(n: usize) -> Vec<u64> {
    assert!((1..=MAX_MASK_VERTICES).contains(&n));
    let mut level: BTreeSet<u64> = BTreeSet::new();
    level.insert(0);
    for k in 2..=n {
        let mut next = BTreeSet::new();
        let base = pair_count(k - 1);
        for &m in &level {
            for nb in 0..1u64 << (k - 1) {
                next.insert(canonical_mask(k, m | nb << base));
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    nonisomorphic_masks(n)
        .into_iter()
        .map(|m| graph_from_mask(n, m))
        .collect()
}

pub fn nonisomorphic_connected(n: usize) -> Vec<Graph> {
    nonisomorphic_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

pub fn nonisomorphic_two_connected(n: usize) -> Vec<Graph> {
    nonisomorphic_graphs(n)
        .into_iter()
        .filter(|g| connectivity(g).is_two_connected)
        .collect()
}
