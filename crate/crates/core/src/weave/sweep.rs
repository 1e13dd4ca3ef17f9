//! Exhaustive classification of all set families over a tiny ground set.

use std::collections::HashMap;

use super::family::{format_set, is_woven_family, SetFamily};
use super::subset::{removable_elements, SearchOutcome, Strategy, Unraveller};
use crate::error::{Error, Result};
use crate::order::subset_lattice;

/// Why a woven family made it into a sweep report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FindingKind {
    /// No single set can be deleted. `witnesses[i]` is a pair of remaining
    /// sets left without union and intersection once `sets[i]` is gone.
    NoRemovable { witnesses: Vec<(u64, u64)> },
    /// Sets can be deleted, but every deletion order gets stuck.
    NoUnravelling { visited: usize },
}

/// A woven family without an unravelling, with enough data to be
/// re-checked by [`verify_finding`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Finding {
    pub family: SetFamily,
    pub kind: FindingKind,
}

impl Finding {
    pub fn render(&self) -> String {
        let sets: Vec<String> = self.family.sets().iter().map(|&s| format_set(s)).collect();
        let what = match &self.kind {
            FindingKind::NoRemovable { .. } => "no removable set".to_string(),
            FindingKind::NoUnravelling { visited } => format!("no unravelling ({visited} states)"),
        };
        format!("finding [{}]: {what}", sets.join(" "))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub ground: usize,
    pub families: u64,
    pub woven: u64,
    /// Woven non-empty families with a certified unravelling.
    pub unravelled: u64,
    pub findings: Vec<Finding>,
}

/// Largest ground set for [`sweep_families`]; 2^16 families at 4 points.
pub const SWEEP_GROUND_CAP: usize = 4;

/// Classifies every family of subsets of a `ground`-point set. Woven
/// families are unravelled by backtracking in the power-set lattice;
/// failures are recorded as findings rather than errors.
pub fn sweep_families(ground: usize) -> Result<SweepReport> {
    if ground > SWEEP_GROUND_CAP {
        return Err(Error::CapExceeded {
            what: "sweep ground set",
            got: ground,
            limit: SWEEP_GROUND_CAP,
        });
    }
    let lattice = subset_lattice(ground)?.into_lattice();
    let points = lattice.len();
    let mut search = Unraveller::new(&lattice);
    let mut report = SweepReport {
        ground,
        ..SweepReport::default()
    };
    for fmask in 0u64..1 << points {
        report.families += 1;
        let family = SetFamily::from_power_set_mask(ground, fmask);
        if is_woven_family(&family).is_err() {
            continue;
        }
        report.woven += 1;
        if family.is_empty() {
            continue;
        }
        let mut members = lattice.empty_set();
        members.extend(family.sets().iter().map(|&s| s as usize));
        if removable_elements(&lattice, &members)?.is_empty() {
            let witnesses = removal_witnesses(&family)?;
            report.findings.push(Finding {
                family,
                kind: FindingKind::NoRemovable { witnesses },
            });
            continue;
        }
        match search.search(&members, Strategy::Backtracking)? {
            SearchOutcome::Unravelled(t) if t.complete => report.unravelled += 1,
            SearchOutcome::Exhausted { visited } => report.findings.push(Finding {
                family,
                kind: FindingKind::NoUnravelling { visited },
            }),
            other => {
                return Err(Error::InvariantViolation(format!(
                    "backtracking returned an uncertified trace: {other:?}"
                )))
            }
        }
    }
    Ok(report)
}

fn removal_witnesses(family: &SetFamily) -> Result<Vec<(u64, u64)>> {
    family
        .sets()
        .iter()
        .map(|&p| {
            let rest: Vec<u64> = family.sets().iter().copied().filter(|&s| s != p).collect();
            let rest = SetFamily::new(family.ground(), rest)?;
            is_woven_family(&rest).err().ok_or_else(|| {
                Error::InvariantViolation(format!("deleting {} keeps the family woven", format_set(p)))
            })
        })
        .collect()
}

/// Whether the sets of `sets` admit an unravelling, by dynamic programming
/// over all subfamilies (at most 20 sets).
pub fn unravellable_by_subfamilies(sets: &[u64]) -> bool {
    let k = sets.len();
    assert!(k <= 20, "subfamily table would be too large");
    let woven = |mask: u32| {
        let present: HashMap<u64, ()> =
            (0..k).filter(|i| mask >> i & 1 == 1).map(|i| (sets[i], ())).collect();
        let members: Vec<u64> = present.keys().copied().collect();
        members.iter().enumerate().all(|(i, &x)| {
            members[i + 1..]
                .iter()
                .all(|&y| present.contains_key(&(x | y)) || present.contains_key(&(x & y)))
        })
    };
    let mut good = vec![false; 1 << k];
    good[0] = true;
    for mask in 1u32..1 << k {
        good[mask as usize] =
            woven(mask) && (0..k).any(|i| mask >> i & 1 == 1 && good[(mask & !(1 << i)) as usize]);
    }
    good[(1usize << k) - 1]
}

/// Re-checks a finding without reusing the search that produced it.
pub fn verify_finding(f: &Finding) -> bool {
    if f.family.is_empty() || is_woven_family(&f.family).is_err() {
        return false;
    }
    match &f.kind {
        FindingKind::NoRemovable { witnesses } => {
            witnesses.len() == f.family.len()
                && f.family.sets().iter().zip(witnesses).all(|(&p, &(x, y))| {
                    let has = |s: u64| s != p && f.family.sets().contains(&s);
                    x != p && y != p && has(x) && has(y) && !has(x | y) && !has(x & y)
                })
        }
        FindingKind::NoUnravelling { .. } => !unravellable_by_subfamilies(f.family.sets()),
    }
}
