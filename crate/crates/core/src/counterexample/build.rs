//! Assembling the stratified lattice from a 4-regular graph and a
//! red/blue colouring of its bipartite double.

use std::fmt;

use super::double::{bipartite_double, BipartiteDouble, EdgeColoring};
use super::graph::Graph;
use crate::error::{Error, Result};
use crate::order::{BoundWitness, Lattice, Poset};
use crate::{Elem, ElemSet};

/// The six layers of the construction, bottom to top.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stratum {
    Bottom,
    VMinus,
    V,
    W,
    WPlus,
    Top,
}

impl Stratum {
    pub const ALL: [Stratum; 6] = [
        Stratum::Bottom,
        Stratum::VMinus,
        Stratum::V,
        Stratum::W,
        Stratum::WPlus,
        Stratum::Top,
    ];

    fn offset(self, n: usize) -> usize {
        match self {
            Stratum::Bottom => 0,
            Stratum::VMinus => 1,
            Stratum::V => n + 1,
            Stratum::W => 2 * n + 1,
            Stratum::WPlus => 3 * n + 1,
            Stratum::Top => 4 * n + 1,
        }
    }

    pub fn tag(self) -> &'static str {
        match self {
            Stratum::Bottom => "b",
            Stratum::VMinus => "V-",
            Stratum::V => "V",
            Stratum::W => "W",
            Stratum::WPlus => "W+",
            Stratum::Top => "t",
        }
    }
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// The order built from `G`: bottom `b`, four copies `V-`, `V`, `W`, `W+`
/// of the vertex set, and top `t`. Element indices are `b = 0`, then the
/// copies in that order, then `t = 4n + 1`.
///
/// Whether the order is a lattice is recorded, not assumed.
#[derive(Clone, Debug)]
pub struct StratifiedLattice {
    pub graph: Graph,
    pub double: BipartiteDouble,
    pub coloring: EdgeColoring,
    poset: Poset,
    lattice: std::result::Result<Lattice, BoundWitness>,
}

impl StratifiedLattice {
    /// Number of vertices of `G`.
    pub fn n(&self) -> usize {
        self.graph.len()
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn lattice(&self) -> std::result::Result<&Lattice, &BoundWitness> {
        self.lattice.as_ref()
    }

    pub fn element(&self, stratum: Stratum, vertex: usize) -> Elem {
        match stratum {
            Stratum::Bottom | Stratum::Top => stratum.offset(self.n()),
            _ => stratum.offset(self.n()) + vertex,
        }
    }

    pub fn bottom(&self) -> Elem {
        0
    }

    pub fn top(&self) -> Elem {
        4 * self.n() + 1
    }

    /// The stratum of `e` and, for the four copies, the vertex of `G` it
    /// corresponds to.
    pub fn locate(&self, e: Elem) -> (Stratum, Option<usize>) {
        let n = self.n();
        match e {
            0 => (Stratum::Bottom, None),
            _ if e == 4 * n + 1 => (Stratum::Top, None),
            _ => {
                let k = (e - 1) / n;
                let s = [Stratum::VMinus, Stratum::V, Stratum::W, Stratum::WPlus][k];
                (s, Some((e - 1) % n))
            }
        }
    }

    /// `b`, `t`, or `<stratum>:<vertex>` such as `V-:7`.
    pub fn label(&self, e: Elem) -> String {
        match self.locate(e) {
            (s, None) => s.tag().to_string(),
            (s, Some(x)) => format!("{}:{x}", s.tag()),
        }
    }

    /// Inverse of [`label`](Self::label).
    pub fn parse_label(&self, text: &str) -> Option<Elem> {
        match text {
            "b" => return Some(self.bottom()),
            "t" => return Some(self.top()),
            _ => {}
        }
        let (tag, x) = text.split_once(':')?;
        let x: usize = x.parse().ok()?;
        let s = [Stratum::VMinus, Stratum::V, Stratum::W, Stratum::WPlus]
            .into_iter()
            .find(|s| s.tag() == tag)?;
        (x < self.n()).then(|| self.element(s, x))
    }

    pub fn stratum(&self, s: Stratum) -> Vec<Elem> {
        match s {
            Stratum::Bottom => vec![self.bottom()],
            Stratum::Top => vec![self.top()],
            _ => (0..self.n()).map(|x| self.element(s, x)).collect(),
        }
    }

    /// `P`: the `V` and `W` copies together with `b` and `t`.
    pub fn woven_part(&self) -> ElemSet {
        let mut p = self.poset.empty_set();
        p.insert(self.bottom());
        p.insert(self.top());
        p.insert_range(self.element(Stratum::V, 0)..self.element(Stratum::WPlus, 0));
        p
    }

    /// The structural facts the construction promises, checked on the
    /// built order: covers of `b` and `t`, two red covers above each
    /// `V-`, two blue covers below each `W+`, and `V`/`W` comparabilities
    /// equal to the edges of `G`.
    pub fn check_strata(&self) -> Result<()> {
        let p = &self.poset;
        let fail = |msg: String| Err(Error::InvariantViolation(msg));
        if p.upper_covers(self.bottom()) != self.stratum(Stratum::VMinus).as_slice() {
            return fail("upper covers of b are not the V- copy".into());
        }
        if p.lower_covers(self.top()) != self.stratum(Stratum::WPlus).as_slice() {
            return fail("lower covers of t are not the W+ copy".into());
        }
        for e in self.stratum(Stratum::VMinus) {
            let ups = p.upper_covers(e);
            if ups.len() != 2 || ups.iter().any(|&u| self.locate(u).0 != Stratum::V) {
                return fail(format!("{} does not have exactly two covers in V", self.label(e)));
            }
        }
        for e in self.stratum(Stratum::WPlus) {
            let downs = p.lower_covers(e);
            if downs.len() != 2 || downs.iter().any(|&d| self.locate(d).0 != Stratum::W) {
                return fail(format!("{} does not cover exactly two elements of W", self.label(e)));
            }
        }
        for x in 0..self.n() {
            for y in 0..self.n() {
                let (v, w) = (self.element(Stratum::V, x), self.element(Stratum::W, y));
                if p.leq(v, w) != self.graph.has_edge(x, y) {
                    return fail(format!(
                        "{} <= {} disagrees with the edge relation of the graph",
                        self.label(v),
                        self.label(w)
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Builds the order for `g` and `coloring` (a colouring of the bipartite
/// double of `g`) and attempts to certify it as a lattice.
pub fn build_lattice(g: &Graph, coloring: &EdgeColoring) -> Result<StratifiedLattice> {
    let double = bipartite_double(g)?;
    if coloring.left.len() != double.graph.len()
        || coloring.red.len() + coloring.blue.len() != double.graph.edge_count()
        || coloring.red.iter().chain(&coloring.blue).any(|&(u, v)| !double.graph.has_edge(u, v))
    {
        return Err(Error::InvariantViolation(
            "colouring does not belong to the bipartite double of the graph".into(),
        ));
    }
    coloring.check_degrees()?;
    let n = g.len();
    let at = |s: Stratum, x: usize| s.offset(n) + x;
    let size = 4 * n + 2;
    let top = size - 1;
    let mut relations: Vec<(Elem, Elem)> = Vec::new();
    for e in 1..top {
        relations.push((0, e));
        relations.push((e, top));
    }
    for x in 0..n {
        for y in 0..n {
            // double vertices: x on the V side, n + y on the W side
            if !double.graph.has_edge(x, n + y) {
                continue;
            }
            relations.push((at(Stratum::V, x), at(Stratum::W, y)));
            if coloring.is_red(x, n + y) {
                relations.push((at(Stratum::VMinus, y), at(Stratum::V, x)));
            } else {
                relations.push((at(Stratum::W, y), at(Stratum::WPlus, x)));
            }
        }
    }
    if n == 0 {
        relations.push((0, top));
    }
    let poset = Poset::from_relations(size, relations)?;
    let lattice = match Lattice::new(poset.clone()) {
        Ok(l) => Ok(l),
        Err(Error::NotLattice(w)) => Err(w),
        Err(e) => return Err(e),
    };
    let sl = StratifiedLattice {
        graph: g.clone(),
        double,
        coloring: coloring.clone(),
        poset,
        lattice,
    };
    sl.check_strata()?;
    Ok(sl)
}
