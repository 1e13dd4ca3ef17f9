//! Dedekind–MacNeille completion by cuts.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::lattice::Lattice;
use super::poset::Poset;
use crate::error::{Error, Result};
use crate::{Elem, ElemSet};

/// A cut `(A, B)` of a poset: `A` is the set of lower bounds of `B` and `B`
/// the set of upper bounds of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub lower: ElemSet,
    pub upper: ElemSet,
}

/// The completion of a poset together with its embedding.
#[derive(Clone, Debug)]
pub struct Completion {
    pub lattice: Lattice,
    /// `cuts[i]` is lattice element `i`.
    pub cuts: Vec<Cut>,
    /// `embedding[x]` is the lattice element of the principal cut of `x`.
    pub embedding: Vec<Elem>,
}

fn upper_bounds(p: &Poset, set: &ElemSet) -> ElemSet {
    let mut ub = p.full_set();
    for a in set.ones() {
        ub.intersect_with(p.up_set(a));
    }
    ub
}

/// Computes the lattice of cuts ordered by inclusion of lower sets.
///
/// Lower sets of cuts are exactly the intersections of principal down-sets
/// (the empty intersection being the whole poset), so they are generated by
/// closing `{P}` under intersection with every `down(x)`. Cuts are sorted by
/// lower-set size, then lexicographically, which makes the output canonical.
pub fn dedekind_macneille(p: &Poset) -> Result<Completion> {
    if p.is_empty() {
        return Err(Error::EmptyPoset);
    }
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut work = vec![p.full_set()];
    seen.insert(p.full_set());
    while let Some(s) = work.pop() {
        for x in p.elements() {
            let mut t = s.clone();
            t.intersect_with(p.down_set(x));
            if !seen.contains(&t) {
                seen.insert(t.clone());
                work.push(t);
            }
        }
    }
    let mut lowers: Vec<ElemSet> = seen.into_iter().collect();
    lowers.sort_by_cached_key(|s| (s.count_ones(..), s.ones().collect::<Vec<_>>()));
    let cuts: Vec<Cut> = lowers
        .into_iter()
        .map(|lower| Cut {
            upper: upper_bounds(p, &lower),
            lower,
        })
        .collect();
    let order = Poset::from_leq(cuts.len(), |i, j| cuts[i].lower.is_subset(&cuts[j].lower))?;
    let lattice = Lattice::new(order).map_err(|e| {
        Error::InvariantViolation(format!("cut lattice failed certification: {e}"))
    })?;
    let embedding = p
        .elements()
        .map(|x| {
            cuts.iter()
                .position(|c| &c.lower == p.down_set(x))
                .expect("principal down-sets are cut lower sets")
        })
        .collect();
    Ok(Completion {
        lattice,
        cuts,
        embedding,
    })
}
