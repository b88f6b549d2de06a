//! Longest path and longest cycle transversals: exact minimum, fractional,
//! and the counting construction parameterized by `alpha`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_rational::Ratio;
use num_traits::Float;

use crate::bounds::{ge_sqrt, le_sqrt};
use crate::hitting::minimum_hitting_set;
use crate::longest::{longest_cycles, longest_paths, LongestFamily, PathCollection};
use crate::{Budget, Error, Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Path,
    Cycle,
}

/// A vertex set that meets every longest path (or cycle) of its graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transversal {
    vertices: Vec<usize>,
    mode: Mode,
    certified_minimum: bool,
}

impl Transversal {
    /// Checks coverage of `family` before accepting `vertices`.
    pub fn new<F: LongestFamily + ?Sized>(
        mut vertices: Vec<usize>,
        mode: Mode,
        family: &F,
        certified_minimum: bool,
    ) -> Result<Transversal, Error> {
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(missed) = uncovered_member(family, &vertices) {
            return Err(Error::Falsified(format!(
                "vertex set {vertices:?} misses longest member {missed:?}"
            )));
        }
        Ok(Transversal {
            vertices,
            mode,
            certified_minimum,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn certified_minimum(&self) -> bool {
        self.certified_minimum
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

fn uncovered_member<'a, F: LongestFamily + ?Sized>(
    family: &'a F,
    candidate: &[usize],
) -> Option<&'a [usize]> {
    let set = VertexSet::from_slice(family.vertex_count().max(1), candidate);
    family
        .members()
        .find(|m| !m.iter().any(|&v| set.contains(v)))
}

/// Minimum transversal of an already enumerated family.
pub fn minimum_transversal<F: LongestFamily + ?Sized>(
    family: &F,
    mode: Mode,
    budget: &mut Budget,
) -> Result<Transversal, Error> {
    let n = family.vertex_count();
    let hs = minimum_hitting_set(n, &family.member_sets(), budget)?;
    Transversal::new(hs, mode, family, true)
}

/// `lpt(g)`: a certified minimum longest path transversal.
///
/// Disconnected graphs are accepted; every longest path of every component is hit.
pub fn exact_lpt(g: &Graph, budget: u64) -> Result<Transversal, Error> {
    let mut budget = Budget::new(budget);
    let paths = longest_paths(g, &mut budget)?;
    minimum_transversal(&paths, Mode::Path, &mut budget)
}

/// `lct(g)`: a certified minimum longest cycle transversal.
pub fn exact_lct(g: &Graph, budget: u64) -> Result<Transversal, Error> {
    let mut budget = Budget::new(budget);
    let cycles = longest_cycles(g, &mut budget)?;
    if cycles.length == 0 {
        return Err(Error::Acyclic);
    }
    minimum_transversal(&cycles, Mode::Cycle, &mut budget)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Covered,
    /// A longest path or cycle that misses the candidate.
    Uncovered(Vec<usize>),
}

impl Verification {
    pub fn holds(&self) -> bool {
        matches!(self, Verification::Covered)
    }
}

pub fn verify_against<F: LongestFamily + ?Sized>(family: &F, candidate: &[usize]) -> Verification {
    match uncovered_member(family, candidate) {
        None => Verification::Covered,
        Some(m) => Verification::Uncovered(m.to_vec()),
    }
}

pub fn verify_transversal(
    g: &Graph,
    candidate: &[usize],
    mode: Mode,
    budget: u64,
) -> Result<Verification, Error> {
    let mut budget = Budget::new(budget);
    Ok(match mode {
        Mode::Path => verify_against(&longest_paths(g, &mut budget)?, candidate),
        Mode::Cycle => verify_against(&longest_cycles(g, &mut budget)?, candidate),
    })
}

/// Vertex weights of the form `numerators[v] / sqrt(root)`.
///
/// The two closed-form constructions only ever need weights `0`, `1` and
/// `1/sqrt(n)`, so a shared square-root denominator keeps every check exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalTransversal {
    pub numerators: Vec<u64>,
    pub root: u64,
}

impl FractionalTransversal {
    pub fn weight(&self, v: usize) -> f64 {
        self.numerators[v] as f64 / Float::sqrt(self.root as f64)
    }

    /// `(sum of weights)^2` as an exact rational.
    pub fn total_squared(&self) -> Ratio<u128> {
        let s = u128::from(self.numerators.iter().sum::<u64>());
        Ratio::new(s * s, u128::from(self.root))
    }

    /// `sum of weights <= sqrt(n)`.
    pub fn total_within_sqrt(&self, n: u64) -> bool {
        self.total_squared() <= Ratio::from_integer(u128::from(n))
    }

    /// Every member carries weight at least 1.
    pub fn covers<F: LongestFamily + ?Sized>(&self, family: &F) -> bool {
        family.members().all(|m| {
            let s: u64 = m.iter().map(|&v| self.numerators[v]).sum();
            ge_sqrt(i128::from(s), i128::from(self.root))
        })
    }

    /// Smallest member weight, squared, as an exact rational.
    pub fn min_member_weight_squared<F: LongestFamily + ?Sized>(
        &self,
        family: &F,
    ) -> Option<Ratio<u128>> {
        family
            .members()
            .map(|m| {
                let s = u128::from(m.iter().map(|&v| self.numerators[v]).sum::<u64>());
                Ratio::new(s * s, u128::from(self.root))
            })
            .min()
    }
}

/// Two-case fractional transversal from an enumerated path family.
pub fn fractional_from_paths(paths: &PathCollection) -> Result<FractionalTransversal, Error> {
    let n = paths.vertex_count();
    let ell = paths.length;
    let t = if le_sqrt(ell as i128, n as i128) {
        let mut numerators = vec![0; n];
        for &v in paths.paths[0].vertices() {
            numerators[v] = 1;
        }
        FractionalTransversal {
            numerators,
            root: 1,
        }
    } else {
        FractionalTransversal {
            numerators: vec![1; n],
            root: n as u64,
        }
    };
    if !t.total_within_sqrt(n as u64) || !t.covers(paths) {
        return Err(Error::Falsified(format!(
            "fractional construction failed its constraints on {n} vertices"
        )));
    }
    Ok(t)
}

pub fn fractional_lpt(g: &Graph, budget: u64) -> Result<FractionalTransversal, Error> {
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let paths = longest_paths(g, &mut Budget::new(budget))?;
    fractional_from_paths(&paths)
}

/// Which case of the counting construction fired at one recursion level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaStep {
    /// Few longest paths: one vertex from each.
    FewPaths { order: usize, paths: usize },
    /// Short longest paths: the vertex set of one of them.
    ShortPaths { order: usize, length: usize },
    /// `{v}` alone meets every longest path.
    SingleVertex { order: usize, vertex: usize, count: usize },
    /// `v` is taken and the construction continues in the component of
    /// `G - v` that still holds paths of the longest order.
    DeleteAndRecurse { order: usize, vertex: usize, count: usize, component_order: usize },
}

#[derive(Debug, Clone)]
pub struct AlphaTransversal {
    pub transversal: Transversal,
    pub steps: Vec<AlphaStep>,
    /// `|P(G)|` of the input graph.
    pub path_count: usize,
}

/// Constructive reading of the `|P(G)|/alpha + sqrt(alpha n)` bound.
///
/// Cases are tried in the order few paths, short paths, single vertex with
/// `p_v >= alpha`, then delete `v` and recurse. The vertex chosen has maximum
/// `p_v`, ties to the lowest index.
pub fn greedy_alpha_transversal(
    g: &Graph,
    alpha: Ratio<u64>,
    budget: u64,
) -> Result<AlphaTransversal, Error> {
    if alpha < Ratio::from_integer(2) {
        return Err(Error::Precondition(format!("alpha = {alpha} is below 2")));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut budget = Budget::new(budget);
    let top = longest_paths(g, &mut budget)?;
    let (p, q) = (i128::from(*alpha.numer()), i128::from(*alpha.denom()));

    let mut chosen = Vec::new();
    let mut steps = Vec::new();
    // current graph as (subgraph, original labels)
    let mut labels: Vec<usize> = (0..g.vertex_count()).collect();
    let mut current = g.clone();
    let mut paths = top.clone();
    loop {
        let n = current.vertex_count();
        let count = paths.paths.len();
        // |P| <= sqrt(alpha n)  <=>  q |P|^2 <= p n
        if q * (count as i128).pow(2) <= p * n as i128 {
            let mut hit = VertexSet::new(n);
            for path in &paths.paths {
                if !path.vertices().iter().any(|&v| hit.contains(v)) {
                    hit.insert(path.vertices()[0]);
                }
            }
            chosen.extend(hit.iter().map(|v| labels[v]));
            steps.push(AlphaStep::FewPaths { order: n, paths: count });
            break;
        }
        if q * (paths.length as i128).pow(2) <= p * n as i128 {
            chosen.extend(paths.paths[0].vertices().iter().map(|&v| labels[v]));
            steps.push(AlphaStep::ShortPaths { order: n, length: paths.length });
            break;
        }
        let counts = &paths.per_vertex_counts;
        let v = (0..n)
            .max_by_key(|&v| (counts[v], core::cmp::Reverse(v)))
            .expect("graph is nonempty");
        if (counts[v] as i128) * q < p {
            return Err(Error::Falsified(format!(
                "no vertex lies on alpha = {alpha} longest paths although |P| = {count} and \
                 order {} both exceed sqrt(alpha n) on {n} vertices",
                paths.length
            )));
        }
        chosen.push(labels[v]);
        if counts[v] == count {
            steps.push(AlphaStep::SingleVertex { order: n, vertex: labels[v], count: counts[v] });
            break;
        }
        let mut removed = VertexSet::new(n);
        removed.insert(v);
        let mut holder = None;
        for comp in current.components_avoiding(&removed) {
            if comp.len() < paths.length {
                continue;
            }
            let sub = current.induced(&comp);
            let sub_paths = longest_paths(&sub, &mut budget)?;
            if sub_paths.length == paths.length {
                if holder.is_some() {
                    return Err(Error::Falsified(
                        "longest paths survive in two components after a vertex deletion".into(),
                    ));
                }
                holder = Some((comp, sub, sub_paths));
            }
        }
        let (comp, sub, sub_paths) = holder.ok_or_else(|| {
            Error::Falsified("no component keeps the uncovered longest paths".into())
        })?;
        steps.push(AlphaStep::DeleteAndRecurse {
            order: n,
            vertex: labels[v],
            count: counts[v],
            component_order: comp.len(),
        });
        labels = comp.iter().map(|&c| labels[c]).collect();
        current = sub;
        paths = sub_paths;
    }
    let transversal = Transversal::new(chosen, Mode::Path, &top, false)?;
    Ok(AlphaTransversal {
        transversal,
        steps,
        path_count: top.paths.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::within_alpha_bound;
    use crate::DEFAULT_BUDGET;

    fn two_bridged_triangles() -> Graph {
        Graph::new(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    fn triangle_chain(t: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..t {
            let b = 3 * i;
            edges.extend([(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
            if i + 1 < t {
                edges.push((b + 2, b + 3));
            }
        }
        Graph::new(3 * t, &edges).unwrap()
    }

    #[test]
    fn exact_lpt_examples() {
        assert_eq!(exact_lpt(&Graph::complete(5), DEFAULT_BUDGET).unwrap().size(), 1);
        assert_eq!(exact_lpt(&Graph::star(3), DEFAULT_BUDGET).unwrap().vertices(), &[0]);
        let t = exact_lpt(&Graph::path(6), DEFAULT_BUDGET).unwrap();
        assert_eq!(t.size(), 1);
        assert!(t.certified_minimum());
        assert_eq!(t.mode(), Mode::Path);
    }

    #[test]
    fn exact_lct_examples() {
        assert_eq!(exact_lct(&two_bridged_triangles(), DEFAULT_BUDGET).unwrap().size(), 2);
        assert_eq!(exact_lct(&triangle_chain(3), DEFAULT_BUDGET).unwrap().size(), 3);
        assert_eq!(exact_lct(&Graph::cycle(5), DEFAULT_BUDGET).unwrap().size(), 1);
        assert_eq!(exact_lct(&Graph::path(4), DEFAULT_BUDGET), Err(Error::Acyclic));
    }

    #[test]
    fn exact_lpt_on_disconnected_graph_hits_every_component() {
        // two disjoint edges: longest paths {0,1} and {2,3}
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(exact_lpt(&g, DEFAULT_BUDGET).unwrap().vertices(), &[0, 2]);
    }

    #[test]
    fn verify_examples() {
        assert!(verify_transversal(&Graph::complete(4), &[0], Mode::Path, DEFAULT_BUDGET)
            .unwrap()
            .holds());
        assert_eq!(
            verify_transversal(&two_bridged_triangles(), &[0], Mode::Cycle, DEFAULT_BUDGET)
                .unwrap(),
            Verification::Uncovered(vec![3, 4, 5])
        );
        let g = Graph::star(4);
        let all: Vec<usize> = (0..5).collect();
        assert!(verify_transversal(&g, &all, Mode::Path, DEFAULT_BUDGET).unwrap().holds());
    }

    #[test]
    fn fractional_examples() {
        // P4: order 4 > sqrt 4, constant 1/2
        let t = fractional_lpt(&Graph::path(4), DEFAULT_BUDGET).unwrap();
        assert_eq!(t.root, 4);
        assert_eq!(t.numerators, vec![1; 4]);
        assert_eq!(t.total_squared(), Ratio::from_integer(4));

        let t = fractional_lpt(&Graph::complete(9), DEFAULT_BUDGET).unwrap();
        assert_eq!(t.root, 9);
        assert_eq!(t.total_squared(), Ratio::from_integer(9));

        // star with 8 leaves: order 3 <= sqrt 9, indicator of one path
        let g = Graph::star(8);
        let t = fractional_lpt(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(t.root, 1);
        assert_eq!(t.numerators.iter().sum::<u64>(), 3);
        assert_eq!(t.numerators[0], 1);
        let paths = longest_paths(&g, &mut Budget::default()).unwrap();
        assert_eq!(t.min_member_weight_squared(&paths), Some(Ratio::from_integer(1)));
    }

    #[test]
    fn alpha_examples() {
        let two = Ratio::from_integer(2);
        let r = greedy_alpha_transversal(&Graph::complete(3), two, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.transversal.size(), 1);
        assert!(within_alpha_bound(1, 3, two, 3));

        let r = greedy_alpha_transversal(&Graph::new(1, &[]).unwrap(), two, DEFAULT_BUDGET)
            .unwrap();
        assert_eq!(r.transversal.vertices(), &[0]);

        let r = greedy_alpha_transversal(&Graph::path(5), two, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.transversal.size(), 1);
        assert!(matches!(r.steps[0], AlphaStep::FewPaths { .. }));
    }

    #[test]
    fn alpha_rejects_small_alpha() {
        let err = greedy_alpha_transversal(&Graph::path(3), Ratio::new(3, 2), DEFAULT_BUDGET);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn alpha_recursion_stays_within_bound_on_small_graphs() {
        for n in 1..=6 {
            for g in crate::census::nonisomorphic_connected(n) {
                for a in [2u64, 3, 5] {
                    let alpha = Ratio::from_integer(a);
                    let r = greedy_alpha_transversal(&g, alpha, DEFAULT_BUDGET).unwrap();
                    assert!(within_alpha_bound(
                        r.transversal.size() as u64,
                        r.path_count as u64,
                        alpha,
                        n as u64
                    ));
                }
            }
        }
    }
}
