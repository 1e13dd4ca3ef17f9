use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::order::{Lattice, Poset};
use crate::{Elem, ElemSet};

/// A finite ground structure in which every pair of elements has a join
/// corner and a meet corner, either of which may fall outside the
/// structure (`None`). Wovenness of a member set only looks at corners.
pub trait Corners {
    fn size(&self) -> usize;

    /// `(join, meet)` of `a` and `b`.
    fn corners(&self, a: Elem, b: Elem) -> (Option<Elem>, Option<Elem>);
}

impl Corners for Lattice {
    fn size(&self) -> usize {
        self.len()
    }

    #[inline]
    fn corners(&self, a: Elem, b: Elem) -> (Option<Elem>, Option<Elem>) {
        (Some(self.join(a, b)), Some(self.meet(a, b)))
    }
}

/// Corners of a plain poset: a join or meet that does not exist is `None`.
impl Corners for Poset {
    fn size(&self) -> usize {
        self.len()
    }

    fn corners(&self, a: Elem, b: Elem) -> (Option<Elem>, Option<Elem>) {
        (self.join(a, b), self.meet(a, b))
    }
}

#[inline]
fn inside(members: &ElemSet, c: Option<Elem>) -> bool {
    c.is_some_and(|c| members.contains(c))
}

/// `members` is woven if every pair of members has its join or its meet
/// among the members. Returns the first pair whose corners both lie outside.
pub fn is_woven_in<C: Corners + ?Sized>(space: &C, members: &ElemSet) -> Result<(), (Elem, Elem)> {
    let elems: Vec<Elem> = members.ones().collect();
    for (i, &p) in elems.iter().enumerate() {
        for &q in &elems[i + 1..] {
            let (j, m) = space.corners(p, q);
            if !inside(members, j) && !inside(members, m) {
                return Err((p, q));
            }
        }
    }
    Ok(())
}

/// Index of the pairs that keep a woven set woven only through one
/// particular member.
///
/// A member `c` can be deleted exactly when no pair avoiding `c` has `c` as
/// its only corner inside the set. Pairs with both corners inside are
/// indexed by the corner pair, for deletions of two members at once.
#[derive(Clone, Debug, Default)]
pub struct CriticalPairs {
    single: HashMap<Elem, Vec<(Elem, Elem)>>,
    double: HashMap<(Elem, Elem), Vec<(Elem, Elem)>>,
}

fn ordered(a: Elem, b: Elem) -> (Elem, Elem) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl CriticalPairs {
    /// Builds the index in one pass over all member pairs. Fails with the
    /// first pair showing that `members` is not woven.
    pub fn build<C: Corners + ?Sized>(space: &C, members: &ElemSet) -> Result<Self, (Elem, Elem)> {
        let elems: Vec<Elem> = members.ones().collect();
        let mut out = CriticalPairs::default();
        for (i, &q) in elems.iter().enumerate() {
            for &r in &elems[i + 1..] {
                let (j, m) = space.corners(q, r);
                let (jin, min) = (inside(members, j), inside(members, m));
                let pair_touches = |c: Elem| c == q || c == r;
                match (jin, min) {
                    (false, false) => return Err((q, r)),
                    (true, false) | (false, true) => {
                        let c = if jin { j } else { m }.expect("inside corners exist");
                        if !pair_touches(c) {
                            out.single.entry(c).or_default().push((q, r));
                        }
                    }
                    (true, true) => {
                        let (j, m) = (j.unwrap(), m.unwrap());
                        if j != m && !pair_touches(j) && !pair_touches(m) {
                            out.double.entry(ordered(j, m)).or_default().push((q, r));
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// A pair of remaining members with no corner left after deleting
    /// `group` (one or two members), if there is one.
    pub fn removal_witness(&self, group: &[Elem]) -> Option<(Elem, Elem)> {
        let avoids = |&(q, r): &(Elem, Elem)| !group.contains(&q) && !group.contains(&r);
        let singles = group
            .iter()
            .filter_map(|c| self.single.get(c))
            .flat_map(|v| v.iter());
        let doubles = match group {
            [a, b] if a != b => self.double.get(&ordered(*a, *b)),
            _ => None,
        }
        .into_iter()
        .flat_map(|v| v.iter());
        singles.chain(doubles).copied().find(avoids)
    }
}

/// Members whose deletion leaves a woven set, each re-certified by a full
/// wovenness check of the remainder.
pub fn removable_elements<C: Corners + ?Sized>(space: &C, members: &ElemSet) -> Result<Vec<Elem>> {
    let index = CriticalPairs::build(space, members).map_err(|(p, q)| Error::NotWoven(p, q))?;
    let mut out = Vec::new();
    for p in members.ones() {
        if index.removal_witness(&[p]).is_none() {
            let mut rest = members.clone();
            rest.set(p, false);
            if let Err((a, b)) = is_woven_in(space, &rest) {
                return Err(Error::InvariantViolation(format!(
                    "removing {p} was indexed as safe but ({a}, {b}) loses both corners"
                )));
            }
            out.push(p);
        }
    }
    Ok(out)
}

/// Adds to a proper woven subset a maximal element of its complement,
/// which always keeps it woven. Returns the element added (lowest index
/// among the maximal ones).
pub fn ravel_step(lattice: &Lattice, members: &ElemSet) -> Result<Elem> {
    is_woven_in(lattice, members).map_err(|(p, q)| Error::NotWoven(p, q))?;
    let outside: Vec<Elem> = lattice.elements().filter(|&x| !members.contains(x)).collect();
    let p = *outside
        .iter()
        .find(|&&x| outside.iter().all(|&y| !lattice.poset().lt(x, y)))
        .ok_or(Error::Full)?;
    let mut grown = members.clone();
    grown.insert(p);
    if let Err((a, b)) = is_woven_in(lattice, &grown) {
        return Err(Error::InvariantViolation(format!(
            "adding maximal element {p} broke wovenness at ({a}, {b})"
        )));
    }
    Ok(p)
}

/// Per-step evidence in an [`UnravelTrace`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepCertificate {
    pub woven: bool,
    pub witness: Option<(Elem, Elem)>,
}

impl StepCertificate {
    pub fn from_check(check: Result<(), (Elem, Elem)>) -> Self {
        StepCertificate {
            woven: check.is_ok(),
            witness: check.err(),
        }
    }
}

/// An ordered deletion sequence with a wovenness certificate for the
/// remainder after every step.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnravelTrace {
    pub removals: Vec<Elem>,
    pub certificates: Vec<StepCertificate>,
    /// Everything was removed with every remainder certified.
    pub complete: bool,
}

impl UnravelTrace {
    pub fn push(&mut self, elem: Elem, cert: StepCertificate) {
        self.removals.push(elem);
        self.certificates.push(cert);
    }

    pub fn len(&self) -> usize {
        self.removals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.removals.is_empty()
    }

    /// Text form: `step <i> remove <elt> woven=<bool>` lines, then
    /// `result ok|stuck`.
    pub fn render(&self, label: &dyn Fn(Elem) -> String) -> String {
        let mut out = String::new();
        for (i, (e, c)) in self.removals.iter().zip(&self.certificates).enumerate() {
            out.push_str(&format!("step {} remove {} woven={}\n", i + 1, label(*e), c.woven));
        }
        out.push_str(if self.complete { "result ok\n" } else { "result stuck\n" });
        out
    }
}

impl fmt::Display for UnravelTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&|e| e.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Always delete the lowest-index removable element.
    Greedy,
    /// Depth-first over all deletion orders, with dead sets memoised.
    Backtracking,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Unravelled(UnravelTrace),
    /// Greedy got stuck; the partial trace is kept.
    Stuck(UnravelTrace),
    /// Backtracking proved that no unravelling exists.
    Exhausted { visited: usize },
}

/// Unravelling search over one ground structure. The memo of sets known
/// to have no unravelling persists across calls, which pays off in
/// exhaustive sweeps over many related member sets.
pub struct Unraveller<'a, C: Corners + ?Sized> {
    space: &'a C,
    dead: HashSet<ElemSet>,
    visited: usize,
}

impl<'a, C: Corners + ?Sized> Unraveller<'a, C> {
    pub fn new(space: &'a C) -> Self {
        Unraveller {
            space,
            dead: HashSet::new(),
            visited: 0,
        }
    }

    pub fn search(&mut self, members: &ElemSet, strategy: Strategy) -> Result<SearchOutcome> {
        is_woven_in(self.space, members).map_err(|(p, q)| Error::NotWoven(p, q))?;
        match strategy {
            Strategy::Greedy => self.greedy(members),
            Strategy::Backtracking => {
                self.visited = 0;
                let mut order = Vec::new();
                if self.backtrack(members.clone(), &mut order)? {
                    Ok(SearchOutcome::Unravelled(certify(self.space, members, &order)))
                } else {
                    Ok(SearchOutcome::Exhausted {
                        visited: self.visited,
                    })
                }
            }
        }
    }

    fn greedy(&self, members: &ElemSet) -> Result<SearchOutcome> {
        let mut current = members.clone();
        let mut trace = UnravelTrace::default();
        while !current.is_clear() {
            let Some(&p) = removable_elements(self.space, &current)?.first() else {
                return Ok(SearchOutcome::Stuck(trace));
            };
            current.set(p, false);
            trace.push(p, StepCertificate::from_check(is_woven_in(self.space, &current)));
        }
        trace.complete = trace.certificates.iter().all(|c| c.woven);
        Ok(SearchOutcome::Unravelled(trace))
    }

    fn backtrack(&mut self, current: ElemSet, order: &mut Vec<Elem>) -> Result<bool> {
        if current.is_clear() {
            return Ok(true);
        }
        if self.dead.contains(&current) {
            return Ok(false);
        }
        self.visited += 1;
        for p in removable_elements(self.space, &current)? {
            let mut next = current.clone();
            next.set(p, false);
            order.push(p);
            if self.backtrack(next, order)? {
                return Ok(true);
            }
            order.pop();
        }
        self.dead.insert(current);
        Ok(false)
    }
}

/// Replays a deletion order, re-checking every remainder.
pub fn certify<C: Corners + ?Sized>(space: &C, members: &ElemSet, order: &[Elem]) -> UnravelTrace {
    let mut current = members.clone();
    let mut trace = UnravelTrace::default();
    for &p in order {
        current.set(p, false);
        trace.push(p, StepCertificate::from_check(is_woven_in(space, &current)));
    }
    trace.complete = current.is_clear() && trace.certificates.iter().all(|c| c.woven);
    trace
}

pub fn unravel_search<C: Corners + ?Sized>(
    space: &C,
    members: &ElemSet,
    strategy: Strategy,
) -> Result<SearchOutcome> {
    Unraveller::new(space).search(members, strategy)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{subset_lattice, Poset};

    fn set(l: &Lattice, xs: &[Elem]) -> ElemSet {
        let mut s = l.empty_set();
        s.extend(xs.iter().copied());
        s
    }

    fn m3() -> Lattice {
        Lattice::new(
            Poset::from_relations(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn woven_in_power_set() {
        let l = subset_lattice(2).unwrap().into_lattice();
        assert_eq!(is_woven_in(&l, &set(&l, &[1, 2])), Err((1, 2)));
        assert!(is_woven_in(&l, &set(&l, &[0, 1, 2])).is_ok());
        assert!(is_woven_in(&l, &l.empty_set()).is_ok());
    }

    #[test]
    fn woven_in_m3() {
        let l = m3();
        assert!(is_woven_in(&l, &set(&l, &[1, 2, 4])).is_ok());
        assert_eq!(is_woven_in(&l, &set(&l, &[1, 2])), Err((1, 2)));
        assert_eq!(removable_elements(&l, &set(&l, &[1, 2, 4])).unwrap(), vec![1, 2]);
    }

    #[test]
    fn removable_in_power_set() {
        let l = subset_lattice(2).unwrap().into_lattice();
        assert_eq!(removable_elements(&l, &set(&l, &[0, 1, 2])).unwrap(), vec![1, 2]);
        assert_eq!(removable_elements(&l, &set(&l, &[3])).unwrap(), vec![3]);
        assert!(matches!(
            removable_elements(&l, &set(&l, &[1, 2])),
            Err(Error::NotWoven(1, 2))
        ));
    }

    #[test]
    fn ravel_adds_maximal_complement_element() {
        let l = subset_lattice(2).unwrap().into_lattice();
        assert_eq!(ravel_step(&l, &set(&l, &[0])).unwrap(), 3);
        assert_eq!(ravel_step(&l, &set(&l, &[0, 3])).unwrap(), 1);
        assert_eq!(ravel_step(&l, &set(&l, &[0, 1, 2])).unwrap(), 3);
        assert!(matches!(ravel_step(&l, &l.full_set()), Err(Error::Full)));
    }

    #[test]
    fn greedy_on_full_power_set() {
        let l = subset_lattice(2).unwrap().into_lattice();
        let SearchOutcome::Unravelled(t) = unravel_search(&l, &l.full_set(), Strategy::Greedy).unwrap()
        else {
            panic!("greedy should succeed");
        };
        assert_eq!(t.removals, vec![0, 1, 2, 3]);
        assert!(t.complete);
        assert_eq!(
            t.to_string(),
            "step 1 remove 0 woven=true\nstep 2 remove 1 woven=true\n\
             step 3 remove 2 woven=true\nstep 4 remove 3 woven=true\nresult ok\n"
        );
    }

    #[test]
    fn chains_unravel_under_both_strategies() {
        let chain = Lattice::new(Poset::from_relations(4, [(0, 1), (1, 2), (2, 3)]).unwrap()).unwrap();
        for s in [Strategy::Greedy, Strategy::Backtracking] {
            match unravel_search(&chain, &chain.full_set(), s).unwrap() {
                SearchOutcome::Unravelled(t) => assert!(t.complete && t.len() == 4),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn critical_pairs_for_double_removal() {
        // in 2^[2] with everything present, deleting {0} and {3} together
        // leaves {1}, {2} cornerless
        let l = subset_lattice(2).unwrap().into_lattice();
        let idx = CriticalPairs::build(&l, &l.full_set()).unwrap();
        assert_eq!(idx.removal_witness(&[0]), None);
        assert_eq!(idx.removal_witness(&[0, 3]), Some((1, 2)));
    }
}
