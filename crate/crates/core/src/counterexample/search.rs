//! Randomised search for regular graphs of large girth by double edge
//! swaps. Best effort only; it supplies experimental inputs.

use std::collections::{HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::graph::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GirthSearch {
    /// A graph with girth at least the target.
    Reached { graph: Graph, girth: Option<usize> },
    /// The best graph seen when the budget ran out.
    BestFound { graph: Graph, girth: Option<usize> },
}

impl GirthSearch {
    pub fn graph(&self) -> &Graph {
        match self {
            GirthSearch::Reached { graph, .. } | GirthSearch::BestFound { graph, .. } => graph,
        }
    }

    pub fn girth(&self) -> Option<usize> {
        match self {
            GirthSearch::Reached { girth, .. } | GirthSearch::BestFound { girth, .. } => *girth,
        }
    }

    pub fn reached(&self) -> bool {
        matches!(self, GirthSearch::Reached { .. })
    }
}

struct EdgeSet {
    edges: Vec<(usize, usize)>,
    present: HashSet<(usize, usize)>,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

impl EdgeSet {
    fn new(edges: Vec<(usize, usize)>) -> Self {
        let present = edges.iter().map(|&(a, b)| key(a, b)).collect();
        EdgeSet { edges, present }
    }

    /// Replaces edges `i = ab` and `j = cd` by `ac, bd` (or `ad, bc` when
    /// `cross`), if that keeps the graph simple. Returns the undo record.
    fn swap(&mut self, i: usize, j: usize, cross: bool) -> Option<[(usize, usize); 2]> {
        let (a, b) = self.edges[i];
        let (c, d) = if cross { (self.edges[j].1, self.edges[j].0) } else { self.edges[j] };
        if i == j || a == c || b == d || self.present.contains(&key(a, c)) || self.present.contains(&key(b, d)) {
            return None;
        }
        let old = [self.edges[i], self.edges[j]];
        self.present.remove(&key(a, b));
        self.present.remove(&key(c, d));
        self.edges[i] = (a, c);
        self.edges[j] = (b, d);
        self.present.insert(key(a, c));
        self.present.insert(key(b, d));
        Some(old)
    }

    fn undo(&mut self, i: usize, j: usize, old: [(usize, usize); 2]) {
        for k in [i, j] {
            let (a, b) = self.edges[k];
            self.present.remove(&key(a, b));
        }
        self.edges[i] = old[0];
        self.edges[j] = old[1];
        for (a, b) in old {
            self.present.insert(key(a, b));
        }
    }

    fn graph(&self, n: usize) -> Graph {
        Graph::from_edges(n, &self.edges).expect("swaps keep the graph simple")
    }
}

/// Shortest closed walk found by a breadth-first search from `root`
/// (at least the girth, equal to it when `root` lies on a shortest cycle).
fn root_cycle(g: &Graph, root: usize) -> Option<usize> {
    let n = g.len();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut best: Option<usize> = None;
    while let Some(u) = queue.pop_front() {
        if best.is_some_and(|b| 2 * dist[u] >= b) {
            break;
        }
        for &w in g.neighbours(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if parent[u] != w {
                let len = dist[u] + dist[w] + 1;
                best = Some(best.map_or(len, |b| b.min(len)));
            }
        }
    }
    best
}

/// Larger is better: girth first (forests best), then fewer roots whose
/// search closes a cycle of that length.
fn score(g: &Graph) -> (usize, isize) {
    let per_root: Vec<Option<usize>> = (0..g.len()).map(|r| root_cycle(g, r)).collect();
    match per_root.iter().flatten().min() {
        None => (usize::MAX, 0),
        Some(&girth) => (girth, -(per_root.iter().filter(|&&c| c == Some(girth)).count() as isize)),
    }
}

fn circulant(n: usize, degree: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for v in 0..n {
        for k in 1..=degree / 2 {
            edges.push((v, (v + k) % n));
        }
        if degree % 2 == 1 && v < n / 2 {
            edges.push((v, v + n / 2));
        }
    }
    edges
}

/// Searches for a `degree`-regular graph on `n` vertices with girth at
/// least `target_girth`. Starts from a random regular graph (a circulant
/// scrambled by swaps) and then tries `budget` double edge swaps, keeping
/// a swap unless it lowers the girth or raises the number of vertices
/// seeing a shortest cycle. Deterministic for a fixed `seed`.
pub fn high_girth_search(
    n: usize,
    degree: usize,
    target_girth: usize,
    seed: u64,
    budget: usize,
) -> Result<GirthSearch> {
    if (n * degree) % 2 == 1 {
        return Err(Error::Infeasible(format!(
            "{n} vertices of odd degree {degree} violate the handshake lemma"
        )));
    }
    if degree >= n && degree > 0 {
        return Err(Error::Infeasible(format!(
            "a simple {degree}-regular graph needs more than {n} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut es = EdgeSet::new(circulant(n, degree));
    let m = es.edges.len();
    if m >= 2 {
        for _ in 0..10 * m {
            let (i, j) = (rng.gen_range(0..m), rng.gen_range(0..m));
            es.swap(i, j, rng.gen());
        }
        es.edges.shuffle(&mut rng);
    }
    let mut graph = es.graph(n);
    let mut current = score(&graph);
    let done = |s: (usize, isize)| s.0 >= target_girth;
    for _ in 0..budget {
        if done(current) || m < 2 {
            break;
        }
        let (i, j) = (rng.gen_range(0..m), rng.gen_range(0..m));
        let Some(old) = es.swap(i, j, rng.gen()) else {
            continue;
        };
        let candidate = es.graph(n);
        let s = score(&candidate);
        if s >= current {
            current = s;
            graph = candidate;
        } else {
            es.undo(i, j, old);
        }
    }
    let girth = graph.girth();
    debug_assert_eq!(girth.unwrap_or(usize::MAX), current.0);
    Ok(if done(current) {
        GirthSearch::Reached { graph, girth }
    } else {
        GirthSearch::BestFound { graph, girth }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infeasible_parameters() {
        assert!(matches!(high_girth_search(5, 3, 4, 0, 10), Err(Error::Infeasible(_))));
        assert!(matches!(high_girth_search(4, 4, 4, 0, 10), Err(Error::Infeasible(_))));
    }

    #[test]
    fn regular_and_deterministic() {
        let a = high_girth_search(12, 4, 5, 7, 200).unwrap();
        let b = high_girth_search(12, 4, 5, 7, 200).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.graph().regularity_defect(4), None);
        assert_eq!(a.girth(), a.graph().girth());
    }

    #[test]
    fn zero_budget_returns_start() {
        let r = high_girth_search(10, 4, 9, 1, 0).unwrap();
        assert!(!r.reached());
        assert_eq!(r.graph().regularity_defect(4), None);
    }

    #[test]
    fn reaches_girth_four() {
        let r = high_girth_search(16, 3, 4, 3, 2000).unwrap();
        assert!(r.reached());
        assert!(r.girth().unwrap() >= 4);
    }
}
