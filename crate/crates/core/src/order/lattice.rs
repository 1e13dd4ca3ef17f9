use rayon::prelude::*;

use super::poset::{BoundKind, BoundWitness, Poset};
use crate::error::{Error, Result};
use crate::{Elem, ElemSet};

/// A poset certified to have every pairwise join and meet.
///
/// Join and meet are tabulated (`n * n` entries each), so lookups are O(1).
#[derive(Clone, Debug)]
pub struct Lattice {
    poset: Poset,
    join: Vec<u32>,
    meet: Vec<u32>,
    top: Elem,
    bottom: Elem,
}

impl Lattice {
    /// Certifies `poset` as a lattice, filling the join and meet tables.
    ///
    /// The first failing pair in index order is returned as a
    /// [`BoundWitness`] inside [`Error::NotLattice`]. Rows are computed in
    /// parallel; the outcome does not depend on the thread count.
    pub fn new(poset: Poset) -> Result<Lattice> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        if n > u32::MAX as usize {
            return Err(Error::CapExceeded {
                what: "lattice",
                got: n,
                limit: u32::MAX as usize,
            });
        }
        let rows: Vec<std::result::Result<Vec<(u32, u32)>, BoundWitness>> = (0..n)
            .into_par_iter()
            .map(|a| {
                (a..n)
                    .map(|b| {
                        let j = poset
                            .join(a, b)
                            .ok_or_else(|| poset.bound_witness(a, b, BoundKind::Join))?;
                        let m = poset
                            .meet(a, b)
                            .ok_or_else(|| poset.bound_witness(a, b, BoundKind::Meet))?;
                        Ok((j as u32, m as u32))
                    })
                    .collect()
            })
            .collect();
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for (a, row) in rows.into_iter().enumerate() {
            let row = row.map_err(Error::NotLattice)?;
            for (offset, (j, m)) in row.into_iter().enumerate() {
                let b = a + offset;
                join[a * n + b] = j;
                join[b * n + a] = j;
                meet[a * n + b] = m;
                meet[b * n + a] = m;
            }
        }
        // a finite lattice has its top as the join of everything
        let top = (0..n).fold(0, |acc, x| join[acc * n + x] as usize);
        let bottom = (0..n).fold(0, |acc, x| meet[acc * n + x] as usize);
        Ok(Lattice {
            poset,
            join,
            meet,
            top,
            bottom,
        })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn into_poset(self) -> Poset {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.len() + b] as Elem
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.len() + b] as Elem
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.poset.leq(a, b)
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.len()
    }

    pub fn empty_set(&self) -> ElemSet {
        self.poset.empty_set()
    }

    pub fn full_set(&self) -> ElemSet {
        self.poset.full_set()
    }

    /// Checks both distributive laws on every triple; returns the first
    /// failing triple `(a, b, c)` in index order.
    pub fn is_distributive(&self) -> std::result::Result<(), (Elem, Elem, Elem)> {
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    let l1 = self.join(a, self.meet(b, c));
                    let r1 = self.meet(self.join(a, b), self.join(a, c));
                    let l2 = self.meet(a, self.join(b, c));
                    let r2 = self.join(self.meet(a, b), self.meet(a, c));
                    if l1 != r1 || l2 != r2 {
                        return Err((a, b, c));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Certifies `poset` as a lattice (cloning it into the result).
pub fn is_lattice(poset: &Poset) -> Result<Lattice> {
    Lattice::new(poset.clone())
}

/// Largest ground set accepted by [`subset_lattice`] (1024 elements).
pub const SUBSET_LATTICE_CAP: usize = 10;

/// The power set of a `ground`-element set. Element `i` is the subset with
/// bitmask `i`, so index order is bitmask order.
#[derive(Clone, Debug)]
pub struct SubsetLattice {
    ground: usize,
    lattice: Lattice,
}

impl SubsetLattice {
    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn into_lattice(self) -> Lattice {
        self.lattice
    }

    pub fn element(&self, mask: u64) -> Elem {
        mask as Elem
    }

    pub fn mask(&self, e: Elem) -> u64 {
        e as u64
    }

    /// Complementation, the standard involution on a power set.
    pub fn complement(&self) -> Vec<Elem> {
        let full = (1usize << self.ground) - 1;
        (0..=full).map(|m| full ^ m).collect()
    }
}

pub fn subset_lattice(ground: usize) -> Result<SubsetLattice> {
    if ground > SUBSET_LATTICE_CAP {
        return Err(Error::CapExceeded {
            what: "subset lattice ground set",
            got: ground,
            limit: SUBSET_LATTICE_CAP,
        });
    }
    let poset = Poset::from_leq(1 << ground, |a, b| a & !b == 0)?;
    Ok(SubsetLattice {
        ground,
        lattice: Lattice::new(poset)?,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// bottom 0, atoms 1 2 3, top 4
    pub(crate) fn m3() -> Lattice {
        Lattice::new(
            Poset::from_relations(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap(),
        )
        .unwrap()
    }

    /// bottom 0 < a 1 < b 2 < top 4, bottom < c 3 < top
    pub(crate) fn n5() -> Lattice {
        Lattice::new(Poset::from_relations(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap())
            .unwrap()
    }

    #[test]
    fn power_set_joins_are_unions() {
        let l = subset_lattice(2).unwrap();
        let l = l.lattice();
        assert_eq!(l.join(0b01, 0b10), 0b11);
        assert_eq!(l.meet(0b01, 0b10), 0b00);
        assert_eq!((l.bottom(), l.top()), (0, 3));
        for a in l.elements() {
            for b in l.elements() {
                assert_eq!(l.join(a, b), a | b);
                assert_eq!(l.meet(a, b), a & b);
            }
        }
    }

    #[test]
    fn subset_lattice_sizes() {
        assert_eq!(subset_lattice(0).unwrap().lattice().len(), 1);
        let l4 = subset_lattice(4).unwrap();
        assert_eq!(l4.lattice().len(), 16);
        assert!(l4.lattice().is_distributive().is_ok());
        assert!(subset_lattice(3).unwrap().lattice().is_distributive().is_ok());
        assert!(matches!(subset_lattice(11), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn m3_corners() {
        let l = m3();
        assert_eq!(l.join(1, 2), 4);
        assert_eq!(l.meet(1, 2), 0);
    }

    #[test]
    fn non_distributive_witnesses() {
        assert_eq!(m3().is_distributive(), Err((1, 2, 3)));
        let (a, b, c) = n5().is_distributive().unwrap_err();
        let l = n5();
        assert_ne!(l.join(a, l.meet(b, c)), l.meet(l.join(a, b), l.join(a, c)));
    }

    #[test]
    fn v_shape_is_not_a_lattice() {
        let p = Poset::from_relations(3, [(0, 2), (1, 2)]).unwrap();
        match Lattice::new(p) {
            Err(Error::NotLattice(w)) => {
                assert_eq!((w.a, w.b, w.kind), (0, 1, BoundKind::Meet));
                assert!(w.bounds.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn hexagon_join_not_unique() {
        let p = Poset::from_relations(
            6,
            [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)],
        )
        .unwrap();
        match Lattice::new(p) {
            Err(Error::NotLattice(w)) => {
                assert_eq!((w.a, w.b, w.kind), (1, 2, BoundKind::Join));
                assert_eq!(w.bounds, vec![3, 4]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_poset_rejected() {
        let p = Poset::from_relations(0, []).unwrap();
        assert!(matches!(Lattice::new(p), Err(Error::EmptyPoset)));
    }

    #[test]
    fn lattice_laws_on_small_examples() {
        for l in [m3(), n5(), subset_lattice(3).unwrap().into_lattice()] {
            for a in l.elements() {
                assert_eq!(l.join(a, a), a);
                for b in l.elements() {
                    assert_eq!(l.join(a, b), l.join(b, a));
                    assert_eq!(l.join(a, l.meet(a, b)), a);
                    assert_eq!(l.meet(a, l.join(a, b)), a);
                    for c in l.elements() {
                        assert_eq!(l.join(a, l.join(b, c)), l.join(l.join(a, b), c));
                        assert_eq!(l.meet(a, l.meet(b, c)), l.meet(l.meet(a, b), c));
                    }
                }
                assert!(l.leq(l.bottom(), a) && l.leq(a, l.top()));
            }
        }
    }
}
