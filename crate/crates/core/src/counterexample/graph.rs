//! Simple undirected graphs with graph6 and edge-list I/O.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::order::format::{content_lines, parse_header, parse_index};

/// A simple undirected graph on `0..n` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Rejects loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::OutOfRange { elem: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            if adj[u].contains(&v) {
                return Err(Error::MultiEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj })
    }

    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Each edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// The first vertex whose degree differs from `d`.
    pub fn regularity_defect(&self, d: usize) -> Option<(usize, usize)> {
        (0..self.len()).find(|&v| self.degree(v) != d).map(|v| (v, self.degree(v)))
    }

    /// Length of a shortest cycle, `None` for forests. One breadth-first
    /// search per vertex; a non-tree edge `uw` closes a closed walk of
    /// length `dist u + dist w + 1` through the root, and the minimum over
    /// all roots is attained by a shortest cycle.
    pub fn girth(&self) -> Option<usize> {
        let n = self.len();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] >= b) {
                    break;
                }
                for &w in &self.adj[u] {
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
        }
        best
    }

    /// Two-colouring of the vertices, if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.len();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let s = side[u].expect("queued vertices are coloured");
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            _ => Err(Error::Unknown {
                what: "graph format",
                value: s.to_string(),
            }),
        }
    }
}

impl GraphFormat {
    /// `.g6` means graph6, anything else the edge list format.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") => GraphFormat::Graph6,
            _ => GraphFormat::EdgeList,
        }
    }
}

pub fn load_graph(path: &Path, format: GraphFormat) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    match format {
        GraphFormat::Graph6 => parse_graph6(&text),
        GraphFormat::EdgeList => parse_edge_list(&text),
    }
}

/// Parses the first graph of a graph6 string (an optional `>>graph6<<`
/// header is skipped).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::parse(1, "empty graph6 input"))?;
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes: Vec<u8> = line.bytes().collect();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(1, format!("byte {b} outside the graph6 range")));
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, rest) = match bytes.as_slice() {
        [126, 126, ..] => return Err(Error::parse(1, "graphs above 258047 vertices are not supported")),
        [126, a, b, c, rest @ ..] => ((six(*a) << 12) | (six(*b) << 6) | six(*c), rest),
        [126, ..] => return Err(Error::parse(1, "truncated graph6 size")),
        [a, rest @ ..] => (six(*a), rest),
        [] => return Err(Error::parse(1, "empty graph6 input")),
    };
    let bits_needed = n * n.saturating_sub(1) / 2;
    if rest.len() != bits_needed.div_ceil(6) {
        return Err(Error::parse(
            1,
            format!("expected {} data bytes for {n} vertices, got {}", bits_needed.div_ceil(6), rest.len()),
        ));
    }
    let bit = |k: usize| (six(rest[k / 6]) >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.len();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

/// `graph <n>` then one `u v` line per edge.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing `graph <n>` header"))?;
    let n = parse_header(hline, header, "graph")?;
    let mut edges = Vec::new();
    for (line, content) in lines {
        let toks: Vec<&str> = content.split_whitespace().collect();
        let [u, v] = toks.as_slice() else {
            return Err(Error::parse(line, format!("expected `u v`, got {content:?}")));
        };
        let (u, v) = (parse_index(u, line)?, parse_index(v, line)?);
        if u >= n || v >= n {
            return Err(Error::parse(line, format!("vertex out of range for {n} vertices")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.len());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
