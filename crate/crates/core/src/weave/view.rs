use crate::order::Poset;
use crate::{Elem, ElemSet};

/// A subposet given by a live-element mask over a fixed [`Poset`].
///
/// Bounds, covers and extremal elements are computed relative to the live
/// elements only, so elements can be deleted without relabelling.
#[derive(Clone, Debug)]
pub struct SubPoset<'a> {
    poset: &'a Poset,
    alive: ElemSet,
}

fn count3(a: &ElemSet, b: &ElemSet, c: &ElemSet) -> usize {
    a.as_slice()
        .iter()
        .zip(b.as_slice())
        .zip(c.as_slice())
        .map(|((x, y), z)| (x & y & z).count_ones() as usize)
        .sum()
}

impl<'a> SubPoset<'a> {
    pub fn new(poset: &'a Poset, alive: ElemSet) -> Self {
        assert_eq!(alive.len(), poset.len(), "mask width must match the poset");
        SubPoset { poset, alive }
    }

    pub fn full(poset: &'a Poset) -> Self {
        SubPoset {
            poset,
            alive: poset.full_set(),
        }
    }

    pub fn poset(&self) -> &'a Poset {
        self.poset
    }

    pub fn alive(&self) -> &ElemSet {
        &self.alive
    }

    pub fn len(&self) -> usize {
        self.alive.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.alive.is_clear()
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.alive.contains(x)
    }

    pub fn members(&self) -> impl Iterator<Item = Elem> + '_ {
        self.alive.ones()
    }

    pub fn remove(&mut self, x: Elem) {
        self.alive.set(x, false);
    }

    pub fn without(&self, xs: &[Elem]) -> SubPoset<'a> {
        let mut v = self.clone();
        for &x in xs {
            v.remove(x);
        }
        v
    }

    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.poset.leq(a, b)
    }

    fn common(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        let mut s = a.clone();
        s.intersect_with(b);
        s.intersect_with(&self.alive);
        s
    }

    /// Supremum of `a` and `b` among the live elements.
    pub fn sup(&self, a: Elem, b: Elem) -> Option<Elem> {
        let ub = self.common(self.poset.up_set(a), self.poset.up_set(b));
        let k = ub.count_ones(..);
        ub.ones()
            .find(|&x| self.poset.up_set(x).intersection_count(&self.alive) == k)
    }

    /// Infimum of `a` and `b` among the live elements.
    pub fn inf(&self, a: Elem, b: Elem) -> Option<Elem> {
        let lb = self.common(self.poset.down_set(a), self.poset.down_set(b));
        let k = lb.count_ones(..);
        lb.ones()
            .find(|&x| self.poset.down_set(x).intersection_count(&self.alive) == k)
    }

    /// Infimum of a non-empty set of live elements.
    pub fn inf_of(&self, set: &[Elem]) -> Option<Elem> {
        let mut lb = self.alive.clone();
        for &m in set {
            lb.intersect_with(self.poset.down_set(m));
        }
        let k = lb.count_ones(..);
        lb.ones()
            .find(|&x| self.poset.down_set(x).intersection_count(&self.alive) == k)
    }

    pub fn upper_covers(&self, a: Elem) -> Vec<Elem> {
        let up = self.poset.up_set(a);
        up.intersection(&self.alive)
            .filter(|&c| c != a && count3(up, self.poset.down_set(c), &self.alive) == 2)
            .collect()
    }

    pub fn lower_covers(&self, a: Elem) -> Vec<Elem> {
        let down = self.poset.down_set(a);
        down.intersection(&self.alive)
            .filter(|&c| c != a && count3(down, self.poset.up_set(c), &self.alive) == 2)
            .collect()
    }

    pub fn maximal(&self) -> Vec<Elem> {
        self.members()
            .filter(|&x| self.poset.up_set(x).intersection_count(&self.alive) == 1)
            .collect()
    }

    pub fn minimal(&self) -> Vec<Elem> {
        self.members()
            .filter(|&x| self.poset.down_set(x).intersection_count(&self.alive) == 1)
            .collect()
    }

    /// Intrinsic wovenness: every live pair has a supremum or an infimum
    /// among the live elements. Returns the first failing pair.
    pub fn is_woven(&self) -> Result<(), (Elem, Elem)> {
        let members: Vec<Elem> = self.members().collect();
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if self.sup(a, b).is_none() && self.inf(a, b).is_none() {
                    return Err((a, b));
                }
            }
        }
        Ok(())
    }
}

/// Intrinsic wovenness of a whole poset.
pub fn is_woven_poset(p: &Poset) -> Result<(), (Elem, Elem)> {
    SubPoset::full(p).is_woven()
}
