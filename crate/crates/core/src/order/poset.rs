use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::{ElemSet, Elem};

/// A finite partially ordered set on the dense elements `0..n`.
///
/// The order is stored twice, as up-sets and down-sets (`up[a]` holds every
/// `b` with `a <= b`), so both joins and meets reduce to one bitset
/// intersection. Cover lists are derived once at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    up_count: Vec<usize>,
    down_count: Vec<usize>,
    upper_covers: Vec<Vec<Elem>>,
    lower_covers: Vec<Vec<Elem>>,
}

/// Which bound of a pair failed to exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Join,
    Meet,
}

/// Evidence that a pair has no join (or no meet): the minimal upper bounds
/// (maximal lower bounds). An empty list means there is no bound at all,
/// two or more mean the bound is not unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundWitness {
    pub a: Elem,
    pub b: Elem,
    pub kind: BoundKind,
    pub bounds: Vec<Elem>,
}

impl fmt::Display for BoundWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            BoundKind::Join => "minimal upper bounds",
            BoundKind::Meet => "maximal lower bounds",
        };
        write!(f, "pair ({}, {}) has {} {:?}", self.a, self.b, what, self.bounds)
    }
}

impl Poset {
    /// Builds the order generated by `pairs` (each `(a, b)` meaning `a <= b`).
    ///
    /// The relations are closed reflexively and transitively; they need not
    /// be covers. A cycle through distinct elements is reported with the
    /// elements along it.
    pub fn from_relations<I>(n: usize, pairs: I) -> Result<Poset>
    where
        I: IntoIterator<Item = (Elem, Elem)>,
    {
        let mut succ: Vec<Vec<Elem>> = vec![Vec::new(); n];
        let mut reach: Vec<FixedBitSet> = (0..n)
            .map(|a| {
                let mut s = FixedBitSet::with_capacity(n);
                s.insert(a);
                s
            })
            .collect();
        for (a, b) in pairs {
            for e in [a, b] {
                if e >= n {
                    return Err(Error::OutOfRange { elem: e, n });
                }
            }
            if a != b {
                succ[a].push(b);
                reach[a].insert(b);
            }
        }
        transitive_close(&mut reach);
        for a in 0..n {
            for b in reach[a].ones() {
                if b != a && reach[b].contains(a) {
                    return Err(Error::Cycle(shortest_cycle_through(&succ, a)));
                }
            }
        }
        Ok(Self::from_up_sets(reach))
    }

    /// Builds a poset from an order predicate, validating that it is a
    /// partial order.
    pub fn from_leq<F>(n: usize, leq: F) -> Result<Poset>
    where
        F: Fn(Elem, Elem) -> bool,
    {
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in up.iter_mut().enumerate() {
            for b in 0..n {
                if leq(a, b) {
                    row.insert(b);
                }
            }
        }
        Self::from_order_matrix(up)
    }

    /// Validates `up` (row `a` = elements above `a`) as a partial order.
    pub fn from_order_matrix(up: Vec<FixedBitSet>) -> Result<Poset> {
        let n = up.len();
        for (a, row) in up.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvariantViolation(format!(
                    "order matrix row {a} has width {}",
                    row.len()
                )));
            }
            if !row.contains(a) {
                return Err(Error::InvariantViolation(format!("order is not reflexive at {a}")));
            }
        }
        for a in 0..n {
            for b in up[a].ones() {
                if b != a && up[b].contains(a) {
                    return Err(Error::Cycle(vec![a, b]));
                }
                if !up[b].is_subset(&up[a]) {
                    return Err(Error::InvariantViolation(format!(
                        "order is not transitive: {a} <= {b} but up-set of {b} escapes"
                    )));
                }
            }
        }
        Ok(Self::from_up_sets(up))
    }

    /// Trusted constructor: `up` must already be a reflexive, antisymmetric,
    /// transitive relation.
    pub(crate) fn from_up_sets(up: Vec<FixedBitSet>) -> Poset {
        let n = up.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (a, row) in up.iter().enumerate() {
            for b in row.ones() {
                down[b].insert(a);
            }
        }
        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for a in 0..n {
            for b in up[a].ones() {
                // a < b is a cover iff the interval [a, b] is {a, b}
                if b != a && up[a].intersection_count(&down[b]) == 2 {
                    upper_covers[a].push(b);
                    lower_covers[b].push(a);
                }
            }
        }
        let up_count = up.iter().map(|s| s.count_ones(..)).collect();
        let down_count = down.iter().map(|s| s.count_ones(..)).collect();
        Poset {
            up,
            down,
            up_count,
            down_count,
            upper_covers,
            lower_covers,
        }
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.len()
    }

    /// Empty element set sized for this poset.
    pub fn empty_set(&self) -> ElemSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> ElemSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.up[a].contains(b)
    }

    #[inline]
    pub fn lt(&self, a: Elem, b: Elem) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn comparable(&self, a: Elem, b: Elem) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// Elements `>= a`.
    pub fn up_set(&self, a: Elem) -> &FixedBitSet {
        &self.up[a]
    }

    /// Elements `<= a`.
    pub fn down_set(&self, a: Elem) -> &FixedBitSet {
        &self.down[a]
    }

    pub fn upper_covers(&self, a: Elem) -> &[Elem] {
        &self.upper_covers[a]
    }

    pub fn lower_covers(&self, a: Elem) -> &[Elem] {
        &self.lower_covers[a]
    }

    /// All cover pairs `(a, b)` with `a` covered by `b`, sorted.
    pub fn covers(&self) -> impl Iterator<Item = (Elem, Elem)> + '_ {
        self.upper_covers
            .iter()
            .enumerate()
            .flat_map(|(a, ups)| ups.iter().map(move |&b| (a, b)))
    }

    pub fn cover_count(&self) -> usize {
        self.upper_covers.iter().map(Vec::len).sum()
    }

    pub fn maximal_elements(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.upper_covers[a].is_empty()).collect()
    }

    pub fn minimal_elements(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.lower_covers[a].is_empty()).collect()
    }

    /// Least upper bound of `a` and `b`, if it exists.
    pub fn join(&self, a: Elem, b: Elem) -> Option<Elem> {
        let common = self.up[a].intersection_count(&self.up[b]);
        // every x in the common up-set has up(x) inside it; x is the least
        // element exactly when up(x) is all of it
        self.up[a]
            .intersection(&self.up[b])
            .find(|&x| self.up_count[x] == common)
    }

    /// Greatest lower bound of `a` and `b`, if it exists.
    pub fn meet(&self, a: Elem, b: Elem) -> Option<Elem> {
        let common = self.down[a].intersection_count(&self.down[b]);
        self.down[a]
            .intersection(&self.down[b])
            .find(|&x| self.down_count[x] == common)
    }

    pub fn minimal_upper_bounds(&self, a: Elem, b: Elem) -> Vec<Elem> {
        let mut common = self.up[a].clone();
        common.intersect_with(&self.up[b]);
        common
            .ones()
            .filter(|&x| self.down[x].intersection_count(&common) == 1)
            .collect()
    }

    pub fn maximal_lower_bounds(&self, a: Elem, b: Elem) -> Vec<Elem> {
        let mut common = self.down[a].clone();
        common.intersect_with(&self.down[b]);
        common
            .ones()
            .filter(|&x| self.up[x].intersection_count(&common) == 1)
            .collect()
    }

    pub(crate) fn bound_witness(&self, a: Elem, b: Elem, kind: BoundKind) -> BoundWitness {
        let bounds = match kind {
            BoundKind::Join => self.minimal_upper_bounds(a, b),
            BoundKind::Meet => self.maximal_lower_bounds(a, b),
        };
        BoundWitness { a, b, kind, bounds }
    }

    /// The order dual: same elements, reversed order.
    pub fn dual(&self) -> Poset {
        Poset {
            up: self.down.clone(),
            down: self.up.clone(),
            up_count: self.down_count.clone(),
            down_count: self.up_count.clone(),
            upper_covers: self.lower_covers.clone(),
            lower_covers: self.upper_covers.clone(),
        }
    }

    /// The subposet on `members`, relabelled densely in increasing order.
    /// Returns it with the map from new labels to old ones.
    pub fn induced(&self, members: &ElemSet) -> (Poset, Vec<Elem>) {
        let old: Vec<Elem> = members.ones().collect();
        let m = old.len();
        let up = old
            .iter()
            .map(|&a| {
                let mut row = FixedBitSet::with_capacity(m);
                for (j, &b) in old.iter().enumerate() {
                    if self.leq(a, b) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        (Poset::from_up_sets(up), old)
    }

    /// The order as a dense boolean matrix (`m[a][b]` iff `a <= b`).
    pub fn order_matrix(&self) -> Vec<Vec<bool>> {
        self.elements()
            .map(|a| self.elements().map(|b| self.leq(a, b)).collect())
            .collect()
    }

    /// Is `f` an order isomorphism from `self` onto `other`?
    pub fn is_isomorphism(&self, other: &Poset, f: &[Elem]) -> bool {
        if self.len() != other.len() || f.len() != self.len() {
            return false;
        }
        let mut hit = FixedBitSet::with_capacity(other.len());
        for &x in f {
            if x >= other.len() || hit.put(x) {
                return false;
            }
        }
        self.elements()
            .all(|a| self.elements().all(|b| self.leq(a, b) == other.leq(f[a], f[b])))
    }
}

fn transitive_close(reach: &mut [FixedBitSet]) {
    let n = reach.len();
    for k in 0..n {
        let via = reach[k].clone();
        for (i, row) in reach.iter_mut().enumerate() {
            if i != k && row.contains(k) {
                row.union_with(&via);
            }
        }
    }
}

/// Shortest directed cycle through `start` in the relation graph.
fn shortest_cycle_through(succ: &[Vec<Elem>], start: Elem) -> Vec<Elem> {
    let mut parent = vec![usize::MAX; succ.len()];
    let mut queue = VecDeque::from([start]);
    parent[start] = start;
    while let Some(u) = queue.pop_front() {
        for &v in &succ[u] {
            if v == start {
                let mut cycle = vec![u];
                let mut x = u;
                while x != start {
                    x = parent[x];
                    cycle.push(x);
                }
                cycle.reverse();
                return cycle;
            }
            if parent[v] == usize::MAX {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    vec![start]
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn hexagon() -> Poset {
        // b < x1, x2 < y1, y2 < t
        Poset::from_relations(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)])
            .unwrap()
    }

    #[test]
    fn v_shape_keeps_given_covers() {
        let p = Poset::from_relations(3, [(0, 2), (1, 2)]).unwrap();
        assert_eq!(p.covers().collect::<Vec<_>>(), vec![(0, 2), (1, 2)]);
        assert_eq!(p.join(0, 1), Some(2));
        assert_eq!(p.meet(0, 1), None);
        assert_eq!(p.maximal_elements(), vec![2]);
        assert_eq!(p.lower_covers(2), &[0, 1]);
    }

    #[test]
    fn chain_closes_transitively() {
        let p = Poset::from_relations(3, [(0, 1), (1, 2)]).unwrap();
        assert!(p.leq(0, 2));
        assert_eq!(p.covers().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn redundant_relations_are_reduced() {
        let p = Poset::from_relations(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn two_cycle_is_rejected() {
        match Poset::from_relations(2, [(0, 1), (1, 0)]) {
            Err(Error::Cycle(w)) => assert_eq!(w, vec![0, 1]),
            other => panic!("expected a cycle, got {other:?}"),
        }
    }

    #[test]
    fn longer_cycle_witness_follows_relations() {
        match Poset::from_relations(4, [(1, 2), (2, 3), (3, 1), (0, 1)]) {
            Err(Error::Cycle(w)) => assert_eq!(w, vec![1, 2, 3]),
            other => panic!("expected a cycle, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_pair() {
        assert!(matches!(
            Poset::from_relations(2, [(0, 2)]),
            Err(Error::OutOfRange { elem: 2, n: 2 })
        ));
    }

    #[test]
    fn hexagon_bounds() {
        let p = hexagon();
        assert_eq!(p.join(1, 2), None);
        assert_eq!(p.minimal_upper_bounds(1, 2), vec![3, 4]);
        assert_eq!(p.meet(1, 2), Some(0));
        assert_eq!(p.meet(3, 4), None);
        assert_eq!(p.maximal_lower_bounds(3, 4), vec![1, 2]);
    }

    #[test]
    fn dual_is_an_involution() {
        let p = hexagon();
        assert_eq!(p.dual().dual(), p);
        let chain = Poset::from_relations(3, [(0, 1), (1, 2)]).unwrap().dual();
        assert!(chain.leq(2, 1) && chain.leq(1, 0) && !chain.leq(0, 1));
        assert_eq!(chain.covers().collect::<Vec<_>>(), vec![(1, 0), (2, 1)]);
    }

    #[test]
    fn antichain_is_all_maximal_and_minimal() {
        let p = Poset::from_relations(3, []).unwrap();
        assert_eq!(p.maximal_elements(), vec![0, 1, 2]);
        assert_eq!(p.minimal_elements(), vec![0, 1, 2]);
    }

    #[test]
    fn from_leq_rejects_non_orders() {
        assert!(Poset::from_leq(2, |a, b| a == b || a == 0 && b == 1).is_ok());
        assert!(Poset::from_leq(2, |_, _| true).is_err());
        assert!(Poset::from_leq(2, |a, b| a < b).is_err());
        // 0<1, 1<2 without 0<2
        assert!(Poset::from_leq(3, |a, b| a == b || (a, b) == (0, 1) || (a, b) == (1, 2)).is_err());
    }

    #[test]
    fn induced_relabels() {
        let p = hexagon();
        let mut m = p.empty_set();
        m.extend([1, 3, 5]);
        let (q, map) = p.induced(&m);
        assert_eq!(map, vec![1, 3, 5]);
        assert_eq!(q.covers().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
