use lptrans_core::arc::{
    arc_intersection_graph, chain_projection, covering_family, longest_chains, theorem6_transversal,
    Arc, ArcModel, Covering, Point,
};
use lptrans_core::transversal::{exact_lpt, verify_transversal};
use lptrans_core::{connectivity, Budget, LongestFamily, Mode, DEFAULT_BUDGET};
use proptest::prelude::*;

const GRID: i64 = 48;

/// `m` arcs with distinct endpoints on a grid of `GRID` points.
fn arb_model() -> impl Strategy<Value = ArcModel> {
    (3usize..=9).prop_flat_map(|m| {
        Just((0..GRID).collect::<Vec<i64>>())
            .prop_shuffle()
            .prop_map(move |points| {
                let arcs = (0..m)
                    .map(|i| Arc::Open {
                        start: Point::new(points[2 * i], GRID),
                        end: Point::new(points[2 * i + 1], GRID),
                    })
                    .collect();
                ArcModel::new(arcs).unwrap()
            })
    })
}

/// Smallest covering subfamily of maximal arcs, by trying every subset.
fn naive_cover_size(model: &ArcModel) -> Option<usize> {
    let maximal = model.maximal_arcs();
    (1u32..1 << maximal.len())
        .filter_map(|mask| {
            let ids: Vec<usize> = (0..maximal.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| maximal[i])
                .collect();
            model.covers_circle(&ids).then_some(ids.len())
        })
        .min()
}

/// Sample-based coverage: a point at every 1/(4 GRID) step lies in some arc.
fn sampled_cover(model: &ArcModel) -> bool {
    (0..4 * GRID).all(|k| {
        let x = Point::new(2 * k + 1, 8 * GRID);
        model.arcs().iter().any(|a| a.contains_point(x))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cover_family_is_minimum(model in arb_model()) {
        prop_assert_eq!(model.covers(), sampled_cover(&model));
        match covering_family(&model) {
            Covering::NotCovering => prop_assert!(!model.covers()),
            Covering::Covers(c) => {
                prop_assert!(model.covers_circle(c.members()));
                prop_assert_eq!(Some(c.len()), naive_cover_size(&model));
                let maximal = model.maximal_arcs();
                prop_assert!(c.members().iter().all(|m| maximal.contains(m)));
            }
        }
    }

    #[test]
    fn cascade_stays_within_three(model in arb_model()) {
        let g = arc_intersection_graph(&model);
        let report = connectivity(&g);
        prop_assume!(report.is_connected);
        let r = theorem6_transversal(&model, Mode::Path, DEFAULT_BUDGET).unwrap();
        prop_assert!(r.transversal.size() <= 3);
        prop_assert!(verify_transversal(&g, r.transversal.vertices(), Mode::Path, DEFAULT_BUDGET)
            .unwrap()
            .holds());
        prop_assert!(exact_lpt(&g, DEFAULT_BUDGET).unwrap().size() <= r.transversal.size());
        if let Covering::Covers(c) = covering_family(&model) {
            let chains = longest_chains(&model, false, &mut Budget::default()).unwrap();
            for chain in chains.members() {
                prop_assert!(chain_projection(chain, &c).is_contiguous());
            }
        }
        if report.is_two_connected {
            let r = theorem6_transversal(&model, Mode::Cycle, DEFAULT_BUDGET).unwrap();
            prop_assert!(r.transversal.size() <= 3);
        }
    }
}
