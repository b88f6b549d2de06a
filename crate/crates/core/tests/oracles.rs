use std::collections::BTreeSet;

use lptrans_core::census::{connected_labeled_graphs, labeled_graphs, nonisomorphic_graphs};
use lptrans_core::transversal::{exact_lct, exact_lpt};
use lptrans_core::{longest_cycles, longest_paths, Budget, Error, Graph, LongestFamily};
use proptest::prelude::*;

/// Every ordered sequence of distinct vertices, by plain recursion.
fn sequences(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if !prefix.is_empty() {
        out.push(prefix.clone());
    }
    for v in 0..n {
        if !prefix.contains(&v) {
            prefix.push(v);
            sequences(n, prefix, out);
            prefix.pop();
        }
    }
}

/// Lexicographically least rotation or reflection of a cyclic sequence.
fn least_rotation(s: &[usize]) -> Vec<usize> {
    let k = s.len();
    let mut rev = s.to_vec();
    rev.reverse();
    (0..k)
        .flat_map(|r| {
            [
                s[r..].iter().chain(&s[..r]).copied().collect::<Vec<_>>(),
                rev[r..].iter().chain(&rev[..r]).copied().collect(),
            ]
        })
        .min()
        .unwrap()
}

/// Longest paths and cycles, each once in least lexicographic form, by checking every sequence.
fn naive_families(g: &Graph) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut all = Vec::new();
    sequences(g.vertex_count(), &mut Vec::new(), &mut all);
    let is_path = |s: &[usize]| s.windows(2).all(|w| g.has_edge(w[0], w[1]));
    let paths: Vec<&Vec<usize>> = all.iter().filter(|s| is_path(s)).collect();
    let cycles: Vec<&Vec<usize>> = paths
        .iter()
        .copied()
        .filter(|s| s.len() >= 3 && g.has_edge(s[0], s[s.len() - 1]))
        .collect();
    let longest = |list: &[&Vec<usize>], form: &dyn Fn(&[usize]) -> Vec<usize>| {
        let best = list.iter().map(|s| s.len()).max().unwrap_or(0);
        let set: BTreeSet<Vec<usize>> = list
            .iter()
            .filter(|s| s.len() == best)
            .map(|s| form(s))
            .collect();
        set.into_iter().collect::<Vec<_>>()
    };
    let path_form = |s: &[usize]| {
        let mut r = s.to_vec();
        r.reverse();
        r.min(s.to_vec())
    };
    (longest(&paths, &path_form), longest(&cycles, &least_rotation))
}

fn as_sets(list: &[Vec<usize>]) -> Vec<BTreeSet<usize>> {
    list.iter().map(|s| s.iter().copied().collect()).collect()
}

/// Smallest number of vertices meeting every set, by trying all subsets.
fn naive_hitting_number(n: usize, sets: &[BTreeSet<usize>]) -> usize {
    (0u32..1 << n)
        .filter(|mask| sets.iter().all(|s| s.iter().any(|&v| mask >> v & 1 == 1)))
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

#[test]
fn enumeration_matches_sequence_oracle() {
    let graphs = (1..=5)
        .flat_map(labeled_graphs)
        .chain((6..=7).flat_map(nonisomorphic_graphs));
    for g in graphs {
        let mut budget = Budget::default();
        let paths = longest_paths(&g, &mut budget).unwrap();
        let cycles = longest_cycles(&g, &mut budget).unwrap();
        let (naive_paths, naive_cycles) = naive_families(&g);
        let got: Vec<Vec<usize>> = paths.members().map(<[usize]>::to_vec).collect();
        assert_eq!(got, naive_paths, "paths of {g:?}");
        let got: Vec<Vec<usize>> = cycles.members().map(<[usize]>::to_vec).collect();
        assert_eq!(got, naive_cycles, "cycles of {g:?}");
    }
}

#[test]
fn exact_transversals_match_subset_oracle() {
    for g in (1..=5).flat_map(labeled_graphs).chain(nonisomorphic_graphs(6)) {
        let n = g.vertex_count();
        let (paths, cycles) = naive_families(&g);
        let (paths, cycles) = (as_sets(&paths), as_sets(&cycles));
        let lpt = exact_lpt(&g, u64::MAX).unwrap();
        assert_eq!(lpt.size(), naive_hitting_number(n, &paths));
        match exact_lct(&g, u64::MAX) {
            Ok(lct) => assert_eq!(lct.size(), naive_hitting_number(n, &cycles)),
            Err(Error::Acyclic) => assert!(cycles.is_empty()),
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn small_connected_graphs_have_a_common_vertex_on_longest_paths() {
    // the smallest connected graph without one has 12 vertices
    for n in 1..=5 {
        for g in connected_labeled_graphs(n) {
            assert_eq!(exact_lpt(&g, u64::MAX).unwrap().size(), 1);
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let k = pairs.len();
        proptest::collection::vec(any::<bool>(), k).prop_map(move |keep| {
            let edges: Vec<_> = pairs
                .iter()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(&e, _)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.vertex_count(), &edges).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn transversal_numbers_are_relabeling_invariant(
        g in arb_graph(8),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let h = relabel(&g, &perm);
        let mut b = Budget::default();
        let (pg, ph) = (longest_paths(&g, &mut b).unwrap(), longest_paths(&h, &mut b).unwrap());
        prop_assert_eq!(pg.length(), ph.length());
        prop_assert_eq!(pg.member_count(), ph.member_count());
        prop_assert_eq!(
            exact_lpt(&g, u64::MAX).unwrap().size(),
            exact_lpt(&h, u64::MAX).unwrap().size()
        );
        let cg = longest_cycles(&g, &mut b).unwrap();
        let ch = longest_cycles(&h, &mut b).unwrap();
        prop_assert_eq!(cg.length(), ch.length());
        prop_assert_eq!(cg.member_count(), ch.member_count());
    }

    #[test]
    fn longest_paths_of_connected_graphs_pairwise_intersect(g in arb_graph(9)) {
        prop_assume!(g.is_connected());
        let paths = longest_paths(&g, &mut Budget::default()).unwrap();
        prop_assert!(lptrans_core::pairwise_intersection_check(&paths).holds());
    }
}
