//! Exhaustive enumeration of longest paths and longest cycles.
//!
//! Paths are measured by order (number of vertices), cycles by length, which
//! for a cycle equals its order. A path is stored once, in the orientation
//! whose first vertex is smaller than its last; a cycle is stored once, rotated
//! to start at its smallest vertex and reflected so its second vertex is
//! smaller than its last.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Budget, Error, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path(Vec<usize>);

impl Path {
    /// Canonicalizes the orientation. Does not check adjacency.
    pub fn new(mut vertices: Vec<usize>) -> Path {
        if vertices.len() > 1 && vertices[0] > vertices[vertices.len() - 1] {
            vertices.reverse();
        }
        Path(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn is_path_in(&self, g: &Graph) -> bool {
        is_simple(&self.0, g.vertex_count())
            && self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    /// Canonicalizes rotation and reflection. Does not check adjacency.
    pub fn new(mut vertices: Vec<usize>) -> Cycle {
        if let Some(pos) = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, &v)| v)
            .map(|(i, _)| i)
        {
            vertices.rotate_left(pos);
        }
        let k = vertices.len();
        if k > 2 && vertices[1] > vertices[k - 1] {
            vertices[1..].reverse();
        }
        Cycle(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_cycle_in(&self, g: &Graph) -> bool {
        let k = self.0.len();
        k >= 3
            && is_simple(&self.0, g.vertex_count())
            && (0..k).all(|i| g.has_edge(self.0[i], self.0[(i + 1) % k]))
    }
}

fn is_simple(seq: &[usize], n: usize) -> bool {
    let mut seen = VertexSet::new(n);
    seq.iter().all(|&v| {
        let fresh = v < n && !seen.contains(v);
        if fresh {
            seen.insert(v);
        }
        fresh
    })
}

/// Shared view of a collection of longest paths or cycles as vertex sequences.
pub trait LongestFamily {
    /// Order of every member (0 when the family is empty).
    fn length(&self) -> usize;
    fn member_count(&self) -> usize;
    fn member(&self, i: usize) -> &[usize];
    /// Number of members through each vertex.
    fn per_vertex_counts(&self) -> &[usize];

    fn vertex_count(&self) -> usize {
        self.per_vertex_counts().len()
    }

    fn members(&self) -> impl Iterator<Item = &[usize]> {
        (0..self.member_count()).map(move |i| self.member(i))
    }

    fn member_sets(&self) -> Vec<VertexSet> {
        self.members()
            .map(|m| VertexSet::from_slice(self.vertex_count(), m))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCollection {
    pub length: usize,
    pub paths: Vec<Path>,
    pub per_vertex_counts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleCollection {
    pub length: usize,
    pub cycles: Vec<Cycle>,
    pub per_vertex_counts: Vec<usize>,
}

impl LongestFamily for PathCollection {
    fn length(&self) -> usize {
        self.length
    }
    fn member_count(&self) -> usize {
        self.paths.len()
    }
    fn member(&self, i: usize) -> &[usize] {
        self.paths[i].vertices()
    }
    fn per_vertex_counts(&self) -> &[usize] {
        &self.per_vertex_counts
    }
}

impl LongestFamily for CycleCollection {
    fn length(&self) -> usize {
        self.length
    }
    fn member_count(&self) -> usize {
        self.cycles.len()
    }
    fn member(&self, i: usize) -> &[usize] {
        self.cycles[i].vertices()
    }
    fn per_vertex_counts(&self) -> &[usize] {
        &self.per_vertex_counts
    }
}

fn counts<'a>(n: usize, members: impl Iterator<Item = &'a [usize]>) -> Vec<usize> {
    let mut c = vec![0; n];
    for m in members {
        for &v in m {
            c[v] += 1;
        }
    }
    c
}

struct Search<'g> {
    g: &'g Graph,
    budget: &'g mut Budget,
    on_path: Vec<bool>,
    path: Vec<usize>,
    best: usize,
    found: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn record(&mut self, canonical: bool) {
        let len = self.path.len();
        if len > self.best {
            self.best = len;
            self.found.clear();
        }
        if len == self.best && canonical {
            self.found.push(self.path.clone());
        }
    }

    fn extend_path(&mut self) -> Result<(), Error> {
        self.budget.tick()?;
        let last = *self.path.last().expect("nonempty");
        let canonical = self.path.len() == 1 || self.path[0] < last;
        self.record(canonical);
        for &w in self.g.neighbors(last) {
            if !self.on_path[w] {
                self.on_path[w] = true;
                self.path.push(w);
                self.extend_path()?;
                self.path.pop();
                self.on_path[w] = false;
            }
        }
        Ok(())
    }

    /// Cycles through `path[0]`, the smallest vertex, using only larger vertices.
    fn extend_cycle(&mut self) -> Result<(), Error> {
        self.budget.tick()?;
        let start = self.path[0];
        let last = *self.path.last().expect("nonempty");
        let len = self.path.len();
        if len >= 3 && self.g.has_edge(last, start) {
            let canonical = self.path[1] < last;
            if len > self.best || (len == self.best && canonical) {
                self.record(canonical);
            }
        }
        for &w in self.g.neighbors(last) {
            if w > start && !self.on_path[w] {
                self.on_path[w] = true;
                self.path.push(w);
                self.extend_cycle()?;
                self.path.pop();
                self.on_path[w] = false;
            }
        }
        Ok(())
    }
}

/// All longest paths of `g`, each once, sorted.
pub fn longest_paths(g: &Graph, budget: &mut Budget) -> Result<PathCollection, Error> {
    let n = g.vertex_count();
    let mut s = Search {
        g,
        budget,
        on_path: vec![false; n],
        path: Vec::with_capacity(n),
        best: 0,
        found: Vec::new(),
    };
    for start in 0..n {
        s.on_path[start] = true;
        s.path.push(start);
        s.extend_path()?;
        s.path.pop();
        s.on_path[start] = false;
    }
    let mut paths: Vec<Path> = s.found.into_iter().map(Path).collect();
    paths.sort_unstable();
    let per_vertex_counts = counts(n, paths.iter().map(Path::vertices));
    Ok(PathCollection {
        length: s.best,
        paths,
        per_vertex_counts,
    })
}

/// All longest cycles of `g`, each once, sorted. Empty with length 0 for forests.
pub fn longest_cycles(g: &Graph, budget: &mut Budget) -> Result<CycleCollection, Error> {
    let n = g.vertex_count();
    let mut s = Search {
        g,
        budget,
        on_path: vec![false; n],
        path: Vec::with_capacity(n),
        best: 0,
        found: Vec::new(),
    };
    for start in 0..n {
        // a longer cycle cannot start here: it would need more vertices above `start`
        if n - start < s.best.max(3) {
            break;
        }
        s.on_path[start] = true;
        s.path.push(start);
        s.extend_cycle()?;
        s.path.pop();
        s.on_path[start] = false;
    }
    let mut cycles: Vec<Cycle> = s.found.into_iter().map(Cycle).collect();
    cycles.sort_unstable();
    let per_vertex_counts = counts(n, cycles.iter().map(Cycle::vertices));
    Ok(CycleCollection {
        length: s.best,
        cycles,
        per_vertex_counts,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Intersection {
    AllIntersect,
    /// Indices of two vertex-disjoint members.
    Disjoint(usize, usize),
}

impl Intersection {
    pub fn holds(&self) -> bool {
        matches!(self, Intersection::AllIntersect)
    }
}

/// Checks that every two members share a vertex.
pub fn pairwise_intersection_check<F: LongestFamily + ?Sized>(family: &F) -> Intersection {
    let sets = family.member_sets();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if !sets[i].intersects(&sets[j]) {
                return Intersection::Disjoint(i, j);
            }
        }
    }
    Intersection::AllIntersect
}
