//! Instance generators. Random families are deterministic functions of their seed.

use lptrans_core::arc::{Arc, ArcModel, Point};
use lptrans_core::census::{connected_labeled_graphs, nonisomorphic_connected};
use lptrans_core::separator::TreeDecomposition;
use lptrans_core::weave::{BlockMatching, LadderEdge};
use lptrans_core::Graph;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parameter out of range: {0}")]
pub struct RangeError(pub String);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), RangeError> {
    if cond {
        Ok(())
    } else {
        Err(RangeError(msg()))
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every connected graph on `n <= 7` vertices; one per isomorphism class when `reduced`.
pub fn exhaustive_connected(n: usize, reduced: bool) -> Result<Vec<Graph>, RangeError> {
    check((1..=7).contains(&n), || format!("exhaustive n = {n} outside 1..=7"))?;
    Ok(if reduced {
        nonisomorphic_connected(n)
    } else {
        connected_labeled_graphs(n).collect()
    })
}

/// A uniform recursive tree plus every other pair with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, RangeError> {
    check(n >= 1, || "n must be at least 1".into())?;
    check((0.0..=1.0).contains(&p), || format!("p = {p} outside [0, 1]"))?;
    let mut rng = rng(seed);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.random_range(0..i);
        edges.push((labels[i], labels[j]));
    }
    add_random_pairs(n, p, &mut edges, &mut rng);
    Ok(Graph::new(n, &edges).expect("generated edges are in range"))
}

/// A random Hamiltonian cycle plus every other pair with probability `p`.
pub fn random_two_connected(n: usize, p: f64, seed: u64) -> Result<Graph, RangeError> {
    check(n >= 3, || format!("2-connected graphs need n >= 3, got {n}"))?;
    check((0.0..=1.0).contains(&p), || format!("p = {p} outside [0, 1]"))?;
    let mut rng = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
    add_random_pairs(n, p, &mut edges, &mut rng);
    Ok(Graph::new(n, &edges).expect("generated edges are in range"))
}

fn add_random_pairs(n: usize, p: f64, edges: &mut Vec<(usize, usize)>, rng: &mut ChaCha8Rng) {
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
}

/// `t` triangles `{3i, 3i+1, 3i+2}` joined in a path by bridges `3i+2 -- 3i+3`.
pub fn triangle_chain(t: usize) -> Result<Graph, RangeError> {
    check(t >= 1, || "triangle chain needs t >= 1".into())?;
    let mut edges = Vec::new();
    for i in 0..t {
        let b = 3 * i;
        edges.extend([(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
        if i + 1 < t {
            edges.push((b + 2, b + 3));
        }
    }
    Ok(Graph::new(3 * t, &edges).expect("generated edges are in range"))
}

/// `m` arcs with endpoints on a grid of `24 m` points and lengths between
/// `1/m` and `3/m` of the circle (always short of a full turn), redrawn until
/// they cover the circle.
pub fn random_arc_model(m: usize, seed: u64) -> Result<ArcModel, RangeError> {
    check((2..=12).contains(&m), || format!("arc count {m} outside 2..=12"))?;
    let mut rng = rng(seed);
    let grid = 24 * m as i64;
    let (short, long) = (grid / m as i64, (3 * grid / m as i64).min(grid - 1));
    loop {
        let mut used = std::collections::HashSet::new();
        let mut arcs = Vec::with_capacity(m);
        while arcs.len() < m {
            let s = rng.random_range(0..grid);
            let e = (s + rng.random_range(short..=long)) % grid;
            if s == e || used.contains(&s) || used.contains(&e) {
                continue;
            }
            used.insert(s);
            used.insert(e);
            arcs.push(Arc::Open {
                start: Point::new(s, grid),
                end: Point::new(e, grid),
            });
        }
        let model = ArcModel::new(arcs).expect("endpoints are distinct and in range");
        if model.covers() {
            return Ok(model);
        }
    }
}

/// A random `k`-tree on `n` vertices, thinned by deleting each edge with
/// probability `drop` as long as the graph stays connected, with the
/// width-`k` decomposition the `k`-tree construction provides.
pub fn partial_ktree(
    k: usize,
    n: usize,
    drop: f64,
    seed: u64,
) -> Result<(Graph, TreeDecomposition), RangeError> {
    check(k >= 1 && n > k, || format!("partial k-tree needs n > k >= 1, got k = {k}, n = {n}"))?;
    check((0.0..=1.0).contains(&drop), || format!("drop = {drop} outside [0, 1]"))?;
    let mut rng = rng(seed);
    let mut bags: Vec<Vec<usize>> = vec![(0..=k).collect()];
    let mut tree = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for u in 0..=k {
        for v in u + 1..=k {
            edges.push((u, v));
        }
    }
    for v in k + 1..n {
        let b = rng.random_range(0..bags.len());
        let mut clique = bags[b].clone();
        clique.remove(rng.random_range(0..clique.len()));
        for &u in &clique {
            edges.push((u, v));
        }
        clique.push(v);
        bags.push(clique);
        tree.push((b, bags.len() - 1));
    }
    edges.shuffle(&mut rng);
    let mut kept = edges.clone();
    for e in &edges {
        if rng.random_bool(drop) {
            let trial: Vec<_> = kept.iter().copied().filter(|f| f != e).collect();
            if Graph::new(n, &trial).expect("in range").is_connected() {
                kept = trial;
            }
        }
    }
    let g = Graph::new(n, &kept).expect("generated edges are in range");
    let td = TreeDecomposition::new(&g, bags, tree).expect("k-tree bags decompose every subgraph");
    Ok((g, td))
}

/// A valid block matching on paths of order `tau`: blocks occupy increasing,
/// disjoint index windows on both paths, each block a single edge or an even
/// number of pairwise crossing edges.
pub fn random_block_matching(tau: usize, seed: u64) -> Result<BlockMatching, RangeError> {
    check(tau >= 1, || "tau must be at least 1".into())?;
    let mut rng = rng(seed);
    let (mut i, mut j) = (0usize, 0usize);
    let mut blocks = Vec::new();
    loop {
        i += rng.random_range(0..=2);
        j += rng.random_range(0..=2);
        let room = tau.saturating_sub(i.max(j));
        if room == 0 {
            break;
        }
        let sizes: Vec<usize> = [1, 1, 2, 2, 4, 6].into_iter().filter(|&s| s <= room).collect();
        let s = *sizes.choose(&mut rng).expect("size 1 always fits");
        // pick s indices from a window of up to s + 2 on each side
        let pick = |start: usize, rng: &mut ChaCha8Rng| -> Vec<usize> {
            let width = (s + rng.random_range(0..=2)).min(tau - start);
            let mut idx: Vec<usize> = (start + 1..=start + width).collect();
            idx.shuffle(rng);
            idx.truncate(s);
            idx.sort_unstable();
            idx
        };
        let ps = pick(i, &mut rng);
        let qs = pick(j, &mut rng);
        let block: Vec<LadderEdge> = ps.iter().zip(qs.iter().rev()).map(|(&a, &b)| (a, b)).collect();
        i = *ps.last().expect("s >= 1");
        j = *qs.first().expect("s >= 1").max(qs.last().expect("s >= 1"));
        blocks.push(block);
        if rng.random_bool(0.15) {
            break;
        }
    }
    Ok(BlockMatching::new(tau, blocks))
}

/// A random matching between paths of order `tau` with every edge `(i, j)`
/// satisfying `|i - j| <= span`; each index on `P` is tried with probability `density`.
pub fn random_span_ladder(
    tau: usize,
    span: usize,
    density: f64,
    seed: u64,
) -> Result<Vec<LadderEdge>, RangeError> {
    check(tau >= 1 && span >= 1, || "tau and span must be positive".into())?;
    check((0.0..=1.0).contains(&density), || format!("density = {density} outside [0, 1]"))?;
    let mut rng = rng(seed);
    let mut order: Vec<usize> = (1..=tau).collect();
    order.shuffle(&mut rng);
    let mut taken = vec![false; tau + 1];
    let mut edges = Vec::new();
    for i in order {
        if !rng.random_bool(density) {
            continue;
        }
        let free: Vec<usize> = (i.saturating_sub(span).max(1)..=(i + span).min(tau))
            .filter(|&j| !taken[j])
            .collect();
        if let Some(&j) = free.choose(&mut rng) {
            taken[j] = true;
            edges.push((i, j));
        }
    }
    edges.sort_unstable();
    Ok(edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lptrans_core::weave::validate_block_matching;
    use lptrans_core::connectivity;

    #[test]
    fn exhaustive_counts() {
        assert_eq!(exhaustive_connected(3, true).unwrap().len(), 2);
        assert_eq!(exhaustive_connected(3, false).unwrap().len(), 4);
        assert!(exhaustive_connected(8, true).is_err());
    }

    #[test]
    fn triangle_chain_shape() {
        let g = triangle_chain(3).unwrap();
        assert_eq!(g.vertex_count(), 9);
        assert_eq!(g.edge_count(), 11);
        assert!(g.is_connected());
    }

    #[test]
    fn random_families_are_deterministic() {
        assert_eq!(random_connected(6, 0.5, 1).unwrap(), random_connected(6, 0.5, 1).unwrap());
        assert!(random_connected(9, 0.0, 4).unwrap().is_connected());
        for seed in 0..20 {
            let g = random_two_connected(7, 0.2, seed).unwrap();
            assert!(connectivity(&g).is_two_connected);
        }
        assert_eq!(random_arc_model(8, 3).unwrap(), random_arc_model(8, 3).unwrap());
    }

    #[test]
    fn two_arc_models_stay_below_a_full_turn() {
        for seed in 0..200 {
            let m = random_arc_model(2, seed).unwrap();
            assert!(m.arcs().iter().all(|a| a.length() < Point::from_integer(1)));
        }
    }

    #[test]
    fn generated_structures_are_valid() {
        for seed in 0..50 {
            let bm = random_block_matching(30, seed).unwrap();
            assert_eq!(validate_block_matching(&bm), Ok(()), "{bm:?}");
            let m = random_arc_model(6, seed).unwrap();
            assert!(m.covers());
            let (g, td) = partial_ktree(2, 12, 0.3, seed).unwrap();
            assert!(g.is_connected());
            assert!(td.width() <= 2);
            let ladder = random_span_ladder(30, 3, 0.8, seed).unwrap();
            assert!(ladder.iter().all(|&(i, j)| i.abs_diff(j) <= 3));
        }
    }
}
