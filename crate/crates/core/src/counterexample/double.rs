//! Bipartite double cover and its splitting into two 2-factors.

use super::graph::Graph;
use crate::error::{Error, Result};

/// The bipartite double of a graph `G` on `n` vertices: vertex `x` of `G`
/// appears as `x` on the `V` side and as `n + x` on the `W` side, and
/// `x ~ n + y` exactly when `xy` is an edge of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteDouble {
    pub graph: Graph,
    /// Number of vertices of `G`, i.e. the size of each side.
    pub n: usize,
}

impl BipartiteDouble {
    pub fn v(&self, x: usize) -> usize {
        x
    }

    pub fn w(&self, x: usize) -> usize {
        self.n + x
    }

    /// The vertex of `G` a double vertex stands for.
    pub fn origin(&self, u: usize) -> usize {
        u % self.n
    }
}

fn require_four_regular(g: &Graph) -> Result<()> {
    match g.regularity_defect(4) {
        Some((vertex, degree)) => Err(Error::NotFourRegular { vertex, degree }),
        None => Ok(()),
    }
}

pub fn bipartite_double(g: &Graph) -> Result<BipartiteDouble> {
    require_four_regular(g)?;
    let n = g.len();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (x, y) in g.edges() {
        edges.push((x, n + y));
        edges.push((y, n + x));
    }
    Ok(BipartiteDouble {
        graph: Graph::from_edges(2 * n, &edges)?,
        n,
    })
}

/// Red and blue edge classes of a 4-regular bipartite graph, each edge
/// written `(left, right)` with respect to the bipartition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    pub left: Vec<bool>,
    pub red: Vec<(usize, usize)>,
    pub blue: Vec<(usize, usize)>,
}

impl EdgeColoring {
    pub fn is_red(&self, u: usize, v: usize) -> bool {
        let e = if self.left[u] { (u, v) } else { (v, u) };
        self.red.binary_search(&e).is_ok()
    }

    /// Every vertex meets exactly two red and two blue edges.
    pub fn check_degrees(&self) -> Result<()> {
        let n = self.left.len();
        for class in [&self.red, &self.blue] {
            let mut deg = vec![0usize; n];
            for &(u, v) in class {
                deg[u] += 1;
                deg[v] += 1;
            }
            if let Some(v) = (0..n).find(|&v| deg[v] != 2) {
                return Err(Error::InvariantViolation(format!(
                    "vertex {v} meets {} edges of one colour",
                    deg[v]
                )));
            }
        }
        Ok(())
    }
}

/// Maximum matching by augmenting paths, restricted to edges allowed by
/// `usable`. Returns `mate_of_left[u]`.
fn perfect_matching(
    g: &Graph,
    left: &[bool],
    usable: &dyn Fn(usize, usize) -> bool,
) -> Result<Vec<usize>> {
    let n = g.len();
    let mut mate = vec![usize::MAX; n];
    for root in (0..n).filter(|&u| left[u]) {
        let mut seen = vec![false; n];
        if !augment(g, usable, root, &mut mate, &mut seen) {
            return Err(Error::MatchingFailure);
        }
    }
    Ok(mate)
}

fn augment(
    g: &Graph,
    usable: &dyn Fn(usize, usize) -> bool,
    u: usize,
    mate: &mut [usize],
    seen: &mut [bool],
) -> bool {
    // iterative depth-first search over alternating paths
    let mut stack: Vec<(usize, usize)> = vec![(u, 0)];
    let mut path: Vec<(usize, usize)> = Vec::new();
    while let Some(&mut (x, ref mut next)) = stack.last_mut() {
        let nbrs = g.neighbours(x);
        let mut advanced = false;
        while *next < nbrs.len() {
            let y = nbrs[*next];
            *next += 1;
            if seen[y] || !usable(x, y) {
                continue;
            }
            seen[y] = true;
            path.push((x, y));
            if mate[y] == usize::MAX {
                for &(a, b) in &path {
                    mate[a] = b;
                    mate[b] = a;
                }
                return true;
            }
            stack.push((mate[y], 0));
            advanced = true;
            break;
        }
        if !advanced {
            stack.pop();
            path.pop();
        }
    }
    false
}

/// Colours a 4-regular bipartite graph so that the red edges are the
/// union of two disjoint perfect matchings and the blue edges the rest.
pub fn two_factor_split(g: &Graph) -> Result<EdgeColoring> {
    require_four_regular(g)?;
    let left = g.bipartition().ok_or(Error::NotBipartite)?;
    let m1 = perfect_matching(g, &left, &|_, _| true)?;
    let m2 = perfect_matching(g, &left, &|u, v| m1[u] != v)?;
    let mut red = Vec::new();
    let mut blue = Vec::new();
    for (a, b) in g.edges() {
        let e = if left[a] { (a, b) } else { (b, a) };
        if m1[e.0] == e.1 || m2[e.0] == e.1 {
            red.push(e);
        } else {
            blue.push(e);
        }
    }
    red.sort_unstable();
    blue.sort_unstable();
    let coloring = EdgeColoring { left, red, blue };
    coloring.check_degrees()?;
    Ok(coloring)
}
