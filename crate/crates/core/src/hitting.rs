//! Exact minimum hitting sets by branch and bound.
//!
//! The search branches on the uncovered member with the fewest admissible
//! vertices and prunes with a greedy packing of pairwise disjoint uncovered
//! members (each needs its own vertex). The solution returned is the
//! lexicographically least among all minimum hitting sets, so the answer
//! never depends on exploration order.

use alloc::vec::Vec;

use crate::{Budget, Error, VertexSet};

/// Greedy hitting set: repeatedly takes the vertex in the most uncovered
/// members, ties to the lowest index.
pub fn greedy_hitting_set(n: usize, members: &[VertexSet]) -> Vec<usize> {
    let mut uncovered: Vec<&VertexSet> = members.iter().collect();
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let mut hits = alloc::vec![0usize; n];
        for m in &uncovered {
            for v in m.iter() {
                hits[v] += 1;
            }
        }
        let best = (0..n)
            .max_by_key(|&v| (hits[v], core::cmp::Reverse(v)))
            .expect("nonempty vertex set");
        if hits[best] == 0 {
            // an empty member can never be hit
            break;
        }
        chosen.push(best);
        uncovered.retain(|m| !m.contains(best));
    }
    chosen.sort_unstable();
    chosen
}

/// Size of a greedily built family of pairwise disjoint members.
fn disjoint_packing(members: &[&VertexSet], cap: usize) -> usize {
    let mut used: Option<VertexSet> = None;
    let mut count = 0;
    for m in members {
        let disjoint = used.as_ref().is_none_or(|u| !u.intersects(m));
        if disjoint {
            count += 1;
            if count > cap {
                break;
            }
            match used.as_mut() {
                Some(u) => u.union_with(m),
                None => used = Some((*m).clone()),
            }
        }
    }
    count
}

/// Is there a hitting set of at most `k` vertices, all drawn from `allowed`?
fn exists(
    uncovered: &[&VertexSet],
    allowed: &VertexSet,
    k: usize,
    budget: &mut Budget,
) -> Result<bool, Error> {
    budget.tick()?;
    if uncovered.is_empty() {
        return Ok(true);
    }
    if k == 0 {
        return Ok(false);
    }
    let (pivot, width) = uncovered
        .iter()
        .map(|m| (*m, m.intersection_len(allowed)))
        .min_by_key(|&(_, w)| w)
        .expect("nonempty");
    if width == 0 {
        return Ok(false);
    }
    if disjoint_packing(uncovered, k) > k {
        return Ok(false);
    }
    let mut candidates = pivot.clone();
    candidates.intersect_with(allowed);
    let mut allowed = allowed.clone();
    for v in candidates.iter() {
        let rest: Vec<&VertexSet> = uncovered
            .iter()
            .copied()
            .filter(|m| !m.contains(v))
            .collect();
        allowed.remove(v);
        if exists(&rest, &allowed, k - 1, budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Lexicographically least minimum hitting set of `members` over `0..n`.
pub fn minimum_hitting_set(
    n: usize,
    members: &[VertexSet],
    budget: &mut Budget,
) -> Result<Vec<usize>, Error> {
    if members.iter().any(VertexSet::is_empty) {
        return Err(Error::Precondition("family contains an empty member".into()));
    }
    let all: Vec<&VertexSet> = members.iter().collect();
    let upper = greedy_hitting_set(n, members).len();
    let full = VertexSet::full(n);
    let mut lower = disjoint_packing(&all, upper);
    while lower < upper && !exists(&all, &full, lower, budget)? {
        lower += 1;
    }
    let k = lower;

    // fix vertices one at a time, each as small as possible
    let mut chosen: Vec<usize> = Vec::with_capacity(k);
    let mut uncovered = all;
    let mut from = 0;
    while !uncovered.is_empty() {
        let remaining = k - chosen.len();
        let mut picked = None;
        for v in from..n {
            let rest: Vec<&VertexSet> = uncovered
                .iter()
                .copied()
                .filter(|m| !m.contains(v))
                .collect();
            let mut allowed = VertexSet::new(n);
            for u in v + 1..n {
                allowed.insert(u);
            }
            if exists(&rest, &allowed, remaining - 1, budget)? {
                picked = Some((v, rest));
                break;
            }
        }
        let (v, rest) = picked.ok_or_else(|| {
            Error::Falsified("optimal hitting set vanished during lexicographic descent".into())
        })?;
        chosen.push(v);
        uncovered = rest;
        from = v + 1;
    }
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn naive(n: usize, members: &[VertexSet]) -> Vec<usize> {
        let mut best: Option<Vec<usize>> = None;
        for mask in 0u32..1 << n {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let s = VertexSet::from_slice(n, &set);
            if members.iter().all(|m| m.intersects(&s)) {
                let better = match &best {
                    None => true,
                    Some(b) => set.len() < b.len() || (set.len() == b.len() && set < *b),
                };
                if better {
                    best = Some(set);
                }
            }
        }
        best.unwrap()
    }

    fn family(n: usize, members: &[&[usize]]) -> Vec<VertexSet> {
        members.iter().map(|m| VertexSet::from_slice(n, m)).collect()
    }

    #[test]
    fn disjoint_triangles_need_three() {
        let f = family(9, &[&[0, 1, 2], &[3, 4, 5], &[6, 7, 8]]);
        let hs = minimum_hitting_set(9, &f, &mut Budget::default()).unwrap();
        assert_eq!(hs, vec![0, 3, 6]);
    }

    #[test]
    fn prefers_lexicographically_least() {
        let f = family(4, &[&[1, 3], &[2, 3]]);
        let hs = minimum_hitting_set(4, &f, &mut Budget::default()).unwrap();
        assert_eq!(hs, vec![3]);
        let f = family(4, &[&[1, 2], &[0, 3]]);
        let hs = minimum_hitting_set(4, &f, &mut Budget::default()).unwrap();
        assert_eq!(hs, vec![0, 1]);
    }

    #[test]
    fn empty_family() {
        let hs = minimum_hitting_set(3, &[], &mut Budget::default()).unwrap();
        assert!(hs.is_empty());
    }

    #[test]
    fn empty_member_is_rejected() {
        let f = vec![VertexSet::new(3)];
        assert!(minimum_hitting_set(3, &f, &mut Budget::default()).is_err());
    }

    use proptest::prelude::*;

    proptest! {
        #[test]
        fn matches_subset_enumeration(
            raw in proptest::collection::vec(proptest::collection::btree_set(0usize..8, 1..5), 0..12)
        ) {
            let members: Vec<VertexSet> = raw
                .iter()
                .map(|s| VertexSet::from_slice(8, &s.iter().copied().collect::<Vec<_>>()))
                .collect();
            let got = minimum_hitting_set(8, &members, &mut Budget::default()).unwrap();
            prop_assert_eq!(got, naive(8, &members));
        }
    }
}
