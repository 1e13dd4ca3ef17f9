//! Certification of the construction: the order is a lattice, `P` is
//! woven in it, and no single element of `P` can be deleted.
//!
//! Every witness produced by a search is re-checked against a naive
//! join/meet computation that only reads the order relation.

use super::build::{StratifiedLattice, Stratum};
use crate::order::{BoundKind, BoundWitness, Poset};
use crate::weave::{is_woven_in, Corners, CriticalPairs};
use crate::{Elem, ElemSet};

/// Least upper bound from the up-sets alone: `x` in the common up-set `U`
/// is the join iff `U` lies inside `up(x)`.
pub fn naive_join(p: &Poset, a: Elem, b: Elem) -> Option<Elem> {
    let mut common = p.up_set(a).clone();
    common.intersect_with(p.up_set(b));
    common.ones().find(|&x| common.is_subset(p.up_set(x)))
}

pub fn naive_meet(p: &Poset, a: Elem, b: Elem) -> Option<Elem> {
    let mut common = p.down_set(a).clone();
    common.intersect_with(p.down_set(b));
    common.ones().find(|&x| common.is_subset(p.down_set(x)))
}

/// Both corners of `(q, r)` are missing from `members` (or do not exist).
pub fn corners_outside(p: &Poset, members: &ElemSet, q: Elem, r: Elem) -> bool {
    let out = |c: Option<Elem>| c.map_or(true, |c| !members.contains(c));
    out(naive_join(p, q, r)) && out(naive_meet(p, q, r))
}

/// Deleting `p` from `members` leaves the pair `(q, r)` with no corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RemovalWitness {
    pub removed: Elem,
    pub pair: (Elem, Elem),
}

/// Outcome of one certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<W> {
    Pass,
    /// Failed, with a witness that passed the independent re-check.
    Fail(W),
    /// The search produced evidence the re-check did not confirm.
    Unconfirmed(String),
}

impl<W> Outcome<W> {
    pub fn passed(&self) -> bool {
        matches!(self, Outcome::Pass)
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub elements: usize,
    pub members: usize,
    pub lattice: Outcome<BoundWitness>,
    pub woven: Outcome<(Elem, Elem)>,
    /// One entry per member of `P`: its witness, or `None` if deleting it
    /// keeps `P` woven.
    pub witnesses: Vec<(Elem, Option<(Elem, Elem)>)>,
    pub irreducible: Outcome<Elem>,
    pub labels: Vec<String>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.lattice.passed() && self.woven.passed() && self.irreducible.passed()
    }

    fn label(&self, e: Elem) -> &str {
        &self.labels[e]
    }

    /// One line per certificate.
    pub fn lines(&self) -> Vec<String> {
        let lattice = match &self.lattice {
            Outcome::Pass => format!("lattice: pass ({} elements)", self.elements),
            Outcome::Fail(w) => {
                let what = match w.kind {
                    BoundKind::Join => "join",
                    BoundKind::Meet => "meet",
                };
                let bounds: Vec<&str> = w.bounds.iter().map(|&x| self.label(x)).collect();
                format!(
                    "lattice: fail no {what} of {} and {} (candidates: {})",
                    self.label(w.a),
                    self.label(w.b),
                    if bounds.is_empty() { "none".to_string() } else { bounds.join(" ") }
                )
            }
            Outcome::Unconfirmed(msg) => format!("lattice: unconfirmed {msg}"),
        };
        let woven = match &self.woven {
            Outcome::Pass => format!("woven: pass (|P| = {})", self.members),
            Outcome::Fail((q, r)) => format!(
                "woven: fail {} {} have neither join nor meet in P",
                self.label(*q),
                self.label(*r)
            ),
            Outcome::Unconfirmed(msg) => format!("woven: unconfirmed {msg}"),
        };
        let certified = self.witnesses.iter().filter(|(_, w)| w.is_some()).count();
        let irreducible = match &self.irreducible {
            Outcome::Pass => format!(
                "irreducible: pass ({certified} of {} deletions break wovenness)",
                self.members
            ),
            Outcome::Fail(p) => format!(
                "irreducible: fail P - {} is woven ({certified} of {} deletions break wovenness)",
                self.label(*p),
                self.members
            ),
            Outcome::Unconfirmed(msg) => format!("irreducible: unconfirmed {msg}"),
        };
        vec![lattice, woven, irreducible]
    }

    /// A re-checkable line for the first failed certificate.
    pub fn failure_witness(&self) -> Option<String> {
        if let Outcome::Fail(w) = &self.lattice {
            let kind = match w.kind {
                BoundKind::Join => "join",
                BoundKind::Meet => "meet",
            };
            let bounds: Vec<&str> = w.bounds.iter().map(|&x| self.label(x)).collect();
            return Some(format!(
                "witness {kind} {} {} bounds {}",
                self.label(w.a),
                self.label(w.b),
                if bounds.is_empty() { "-".to_string() } else { bounds.join(",") }
            ));
        }
        if let Outcome::Fail((q, r)) = &self.woven {
            return Some(format!("witness {} {}", self.label(*q), self.label(*r)));
        }
        if let Outcome::Fail(p) = &self.irreducible {
            return Some(format!("witness removable {}", self.label(*p)));
        }
        None
    }

    /// `witness <p> <q> <r>` per member that has one.
    pub fn witness_lines(&self) -> Vec<String> {
        self.witnesses
            .iter()
            .filter_map(|&(p, w)| {
                w.map(|(q, r)| format!("witness {} {} {}", self.label(p), self.label(q), self.label(r)))
            })
            .collect()
    }

    pub fn render(&self, with_witnesses: bool) -> String {
        let mut lines = self.lines();
        if with_witnesses {
            lines.extend(self.witness_lines());
        }
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

/// The pair the construction predicts for deleting `p`: for `p` in `V`,
/// the two `W` elements joined to it by blue edges (their meet is `p`,
/// their join lies in `W+`); dually for `p` in `W`.
fn predicted_witness(sl: &StratifiedLattice, p: Elem) -> Option<(Elem, Elem)> {
    let n = sl.n();
    let c = &sl.coloring;
    let (stratum, x) = sl.locate(p);
    let pick = |others: Vec<Elem>| match others.as_slice() {
        [q, r] => Some((*q.min(r), *q.max(r))),
        _ => None,
    };
    match (stratum, x) {
        (Stratum::V, Some(x)) => pick(
            sl.double
                .graph
                .neighbours(x)
                .iter()
                .filter(|&&w| !c.is_red(x, w))
                .map(|&w| sl.element(Stratum::W, w - n))
                .collect(),
        ),
        (Stratum::W, Some(y)) => pick(
            sl.double
                .graph
                .neighbours(n + y)
                .iter()
                .filter(|&&v| c.is_red(v, n + y))
                .map(|&v| sl.element(Stratum::V, v))
                .collect(),
        ),
        _ => None,
    }
}

/// Some pair of `members - p` with both corners outside, by a direct scan.
fn scan_witness<C: Corners + ?Sized>(space: &C, members: &ElemSet, p: Elem) -> Option<(Elem, Elem)> {
    let mut rest = members.clone();
    rest.set(p, false);
    is_woven_in(space, &rest).err()
}

fn find_witnesses<C: Corners + ?Sized>(
    sl: &StratifiedLattice,
    space: &C,
    members: &ElemSet,
) -> Vec<(Elem, Option<(Elem, Elem)>)> {
    let index = CriticalPairs::build(space, members);
    let without = |p: Elem| {
        let mut rest = members.clone();
        rest.set(p, false);
        rest
    };
    members
        .ones()
        .map(|p| {
            let rest = without(p);
            let predicted = predicted_witness(sl, p)
                .filter(|&(q, r)| {
                    let (j, m) = space.corners(q, r);
                    let out = |c: Option<Elem>| c.map_or(true, |c| !rest.contains(c));
                    out(j) && out(m)
                });
            let found = predicted.or_else(|| match &index {
                Ok(idx) => idx.removal_witness(&[p]),
                // a failing pair avoiding p already works; otherwise scan
                Err((q, r)) if *q != p && *r != p => Some((*q, *r)),
                Err(_) => scan_witness(space, members, p),
            });
            (p, found)
        })
        .collect()
}

/// Runs the three certificates on a built construction.
pub fn verify_counterexample(sl: &StratifiedLattice) -> Report {
    let poset = sl.poset();
    let members = sl.woven_part();
    let labels: Vec<String> = (0..sl.len()).map(|e| sl.label(e)).collect();

    let lattice = match sl.lattice() {
        Ok(_) => Outcome::Pass,
        Err(w) => {
            let exists = match w.kind {
                BoundKind::Join => naive_join(poset, w.a, w.b).is_some(),
                BoundKind::Meet => naive_meet(poset, w.a, w.b).is_some(),
            };
            if exists {
                Outcome::Unconfirmed(format!("reported pair {} {} has the bound", labels[w.a], labels[w.b]))
            } else {
                Outcome::Fail(w.clone())
            }
        }
    };

    let (woven_check, witnesses) = match sl.lattice() {
        Ok(l) => (is_woven_in(l, &members), find_witnesses(sl, l, &members)),
        Err(_) => (is_woven_in(poset, &members), find_witnesses(sl, poset, &members)),
    };
    let woven = match woven_check {
        Ok(()) => Outcome::Pass,
        Err((q, r)) if corners_outside(poset, &members, q, r) => Outcome::Fail((q, r)),
        Err((q, r)) => Outcome::Unconfirmed(format!("pair {} {} has a corner in P", labels[q], labels[r])),
    };

    let mut irreducible = Outcome::Pass;
    for &(p, w) in &witnesses {
        match w {
            None => {
                if matches!(irreducible, Outcome::Pass) {
                    irreducible = Outcome::Fail(p);
                }
            }
            Some((q, r)) => {
                let mut rest = members.clone();
                rest.set(p, false);
                let valid = q != r && rest.contains(q) && rest.contains(r) && corners_outside(poset, &rest, q, r);
                if !valid {
                    irreducible = Outcome::Unconfirmed(format!(
                        "witness {} {} for {} fails the re-check",
                        labels[q], labels[r], labels[p]
                    ));
                    break;
                }
            }
        }
    }

    Report {
        elements: sl.len(),
        members: members.count_ones(..),
        lattice,
        woven,
        witnesses,
        irreducible,
        labels,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::build::build_lattice;
    use crate::counterexample::double::{bipartite_double, two_factor_split};
    use crate::counterexample::graph::parse_graph6;
    use crate::order::subset_lattice;

    #[test]
    fn naive_bounds_agree_with_tables() {
        let l = subset_lattice(3).unwrap();
        let l = l.lattice();
        for a in l.elements() {
            for b in l.elements() {
                assert_eq!(naive_join(l.poset(), a, b), Some(l.join(a, b)));
                assert_eq!(naive_meet(l.poset(), a, b), Some(l.meet(a, b)));
            }
        }
        let anti = Poset::from_relations(2, []).unwrap();
        assert_eq!(naive_join(&anti, 0, 1), None);
    }

    #[test]
    fn k5_report_is_consistent() {
        let k5 = parse_graph6("D~{").unwrap();
        let c = two_factor_split(&bipartite_double(&k5).unwrap().graph).unwrap();
        let sl = build_lattice(&k5, &c).unwrap();
        let r = verify_counterexample(&sl);
        assert_eq!(r.lines().len(), 3);
        assert!(!matches!(r.lattice, Outcome::Unconfirmed(_)));
        assert!(!matches!(r.woven, Outcome::Unconfirmed(_)));
        assert!(!matches!(r.irreducible, Outcome::Unconfirmed(_)));
        assert_eq!(r.witnesses.len(), 12);
    }
}
