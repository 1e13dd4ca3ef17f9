//! Unravelling woven posets by deleting elements with a single cover.

use std::collections::BTreeMap;

use super::subset::{StepCertificate, UnravelTrace};
use super::view::SubPoset;
use crate::error::{Error, Result};
use crate::order::Poset;
use crate::Elem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverSide {
    /// The element has exactly one lower cover.
    Lower,
    /// The element has exactly one upper cover.
    Upper,
}

fn require_woven(view: &SubPoset<'_>) -> Result<()> {
    view.is_woven().map_err(|(a, b)| Error::NotWoven(a, b))
}

/// First live element, in index order, with exactly one lower cover or
/// exactly one upper cover (lower checked first).
pub fn unique_cover_in(view: &SubPoset<'_>) -> Result<(Elem, CoverSide)> {
    require_woven(view)?;
    for x in view.members() {
        if view.lower_covers(x).len() == 1 {
            return Ok((x, CoverSide::Lower));
        }
        if view.upper_covers(x).len() == 1 {
            return Ok((x, CoverSide::Upper));
        }
    }
    if view.len() <= 1 {
        return Err(Error::InvariantViolation(
            "a single element has no covers to count".into(),
        ));
    }
    Err(Error::InvariantViolation(
        "woven poset without an element of cover degree one".into(),
    ))
}

pub fn find_unique_cover_element(p: &Poset) -> Result<(Elem, CoverSide)> {
    unique_cover_in(&SubPoset::full(p))
}

/// Deletes unique-cover elements until nothing is left, re-certifying
/// every remainder. A last remaining element is removed directly.
pub fn unravel_view(view: &SubPoset<'_>) -> Result<UnravelTrace> {
    require_woven(view)?;
    let mut current = view.clone();
    let mut trace = UnravelTrace::default();
    while !current.is_empty() {
        let x = if current.len() == 1 {
            current.members().next().expect("one member")
        } else {
            unique_cover_in(&current)?.0
        };
        current.remove(x);
        let cert = StepCertificate::from_check(current.is_woven());
        if let Some((a, b)) = cert.witness {
            return Err(Error::InvariantViolation(format!(
                "removing {x} left ({a}, {b}) without supremum or infimum"
            )));
        }
        trace.push(x, cert);
    }
    trace.complete = true;
    Ok(trace)
}

pub fn unravel_poset(p: &Poset) -> Result<UnravelTrace> {
    unravel_view(&SubPoset::full(p))
}

/// Groups live elements by the set of maximal elements above them.
/// Keys are sorted lists of maximal elements.
pub fn d_classes_in(view: &SubPoset<'_>) -> BTreeMap<Vec<Elem>, Vec<Elem>> {
    let maximal = view.maximal();
    let mut out: BTreeMap<Vec<Elem>, Vec<Elem>> = BTreeMap::new();
    for x in view.members() {
        let key = maximal.iter().copied().filter(|&m| view.leq(x, m)).collect();
        out.entry(key).or_default().push(x);
    }
    out
}

pub fn d_classes(p: &Poset) -> BTreeMap<Vec<Elem>, Vec<Elem>> {
    d_classes_in(&SubPoset::full(p))
}

/// A class `d(M')` with at least two elements whose `M'` has no proper
/// subset realising such a class; `proper` skips `M' = M`. Ties go to the
/// smaller, then lexicographically first `M'`.
pub(crate) fn minimal_big_class(
    classes: &BTreeMap<Vec<Elem>, Vec<Elem>>,
    all_maximal: usize,
    proper: bool,
) -> Option<(&Vec<Elem>, &Vec<Elem>)> {
    let big: Vec<(&Vec<Elem>, &Vec<Elem>)> = classes
        .iter()
        .filter(|(k, d)| d.len() >= 2 && !(proper && k.len() == all_maximal))
        .collect();
    let is_sub = |a: &[Elem], b: &[Elem]| a.len() < b.len() && a.iter().all(|x| b.contains(x));
    big.iter()
        .filter(|(k, _)| !big.iter().any(|(k2, _)| is_sub(k2, k)))
        .min_by_key(|(k, _)| (k.len(), (*k).clone()))
        .copied()
}

/// For a minimal class `d(M')` of size at least two: a maximal element `x`
/// of `d(M') - inf M'` together with `inf M'`, certified to be the only
/// upper cover of `x`.
pub(crate) fn class_witness_in(view: &SubPoset<'_>, proper: bool) -> Result<Option<(Elem, Elem)>> {
    let classes = d_classes_in(view);
    let maximal = view.maximal();
    let Some((key, members)) = minimal_big_class(&classes, maximal.len(), proper) else {
        return Ok(None);
    };
    let inf = view.inf_of(key).ok_or_else(|| {
        Error::InvariantViolation(format!("maximal elements {key:?} have no infimum"))
    })?;
    let rest: Vec<Elem> = members.iter().copied().filter(|&y| y != inf).collect();
    let x = *rest
        .iter()
        .find(|&&y| !rest.iter().any(|&z| z != y && view.leq(y, z)))
        .ok_or_else(|| Error::InvariantViolation("class without maximal element".into()))?;
    let covers = view.upper_covers(x);
    if covers != [inf] {
        return Err(Error::InvariantViolation(format!(
            "{x} has upper covers {covers:?}, expected only {inf}"
        )));
    }
    Ok(Some((x, inf)))
}

pub fn min_class_witness(p: &Poset) -> Result<Option<Elem>> {
    let view = SubPoset::full(p);
    require_woven(&view)?;
    Ok(class_witness_in(&view, false)?.map(|(x, _)| x))
}
