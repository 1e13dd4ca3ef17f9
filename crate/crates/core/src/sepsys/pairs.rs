//! Deleting unoriented separations from an intrinsically submodular
//! system, two orientations at a time.

use std::fmt;

use super::system::SeparationSystem;
use crate::error::{Error, Result};
use crate::weave::{class_witness_in, StepCertificate, SubPoset};
use crate::{Elem, ElemSet};

/// Unoriented separations in deletion order, each stored as `(s, inv s)`
/// with `s` the lower index, and a certificate for every remainder.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairTrace {
    pub pairs: Vec<(Elem, Elem)>,
    pub certificates: Vec<StepCertificate>,
    pub complete: bool,
}

impl PairTrace {
    pub fn push(&mut self, s: Elem, inv_s: Elem, cert: StepCertificate) {
        self.pairs.push((s.min(inv_s), s.max(inv_s)));
        self.certificates.push(cert);
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// `step <i> remove <s> <inv s> submodular=<bool>` lines, then
    /// `result ok|stuck`.
    pub fn render(&self, label: &dyn Fn(Elem) -> String) -> String {
        let mut out = String::new();
        for (i, ((s, t), c)) in self.pairs.iter().zip(&self.certificates).enumerate() {
            out.push_str(&format!(
                "step {} remove {} {} submodular={}\n",
                i + 1,
                label(*s),
                label(*t),
                c.woven
            ));
        }
        out.push_str(if self.complete { "result ok\n" } else { "result stuck\n" });
        out
    }
}

impl fmt::Display for PairTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&|e| e.to_string()))
    }
}

/// Picks `s` such that deleting `s` and `inv s` from the live part of
/// `view` keeps it submodular, following the three cases of the
/// constructive argument, and certifies the choice.
pub fn pair_step_in(view: &SubPoset<'_>, inv: &[Elem]) -> Result<Elem> {
    if view.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Err((a, b)) = view.is_woven() {
        return Err(Error::NotWoven(a, b));
    }
    let s = choose(view, inv)?;
    let rest = view.without(&[s, inv[s]]);
    if let Err((a, b)) = rest.is_woven() {
        return Err(Error::InvariantViolation(format!(
            "deleting {s} and {} leaves {a}, {b} without supremum or infimum",
            inv[s]
        )));
    }
    Ok(s)
}

fn choose(view: &SubPoset<'_>, inv: &[Elem]) -> Result<Elem> {
    // a subset-minimal proper class of size at least two
    if let Some((x, inf)) = class_witness_in(view, true)? {
        if x == inv[inf] {
            return Err(Error::InvariantViolation(format!(
                "class witness {x} is the inverse of its cover {inf}"
            )));
        }
        return Ok(x);
    }
    let maximal = view.maximal();
    if maximal.len() >= 2 {
        let inf = view.inf_of(&maximal).ok_or_else(|| {
            Error::InvariantViolation("maximal elements have no infimum".into())
        })?;
        return maximal
            .iter()
            .copied()
            .find(|&m| inv[m] != inf)
            .ok_or_else(|| Error::InvariantViolation("every maximal element inverts to inf M".into()));
    }
    let m = maximal[0];
    if view.members().all(|x| x == m || x == inv[m]) {
        return Ok(m);
    }
    let rest = view.without(&[m]);
    rest.maximal()
        .into_iter()
        .find(|&s| s != inv[m])
        .ok_or_else(|| Error::InvariantViolation(format!("no candidate below the top {m}")))
}

/// One deletion step on a whole system; returns the canonical pair.
pub fn unravel_pair_step(sys: &SeparationSystem) -> Result<(Elem, Elem)> {
    let s = pair_step_in(&SubPoset::full(sys.poset()), sys.involution())?;
    let t = sys.inv(s);
    Ok((s.min(t), s.max(t)))
}

/// Deletes pairs from the inv-closed subsystem `members` until nothing is
/// left, re-certifying each remainder independently of the step rule.
pub fn unravel_subsystem(sys: &SeparationSystem, members: &ElemSet) -> Result<PairTrace> {
    if let Some(s) = members.ones().find(|&s| !members.contains(sys.inv(s))) {
        return Err(Error::NotSymmetric(s, sys.inv(s)));
    }
    let mut view = SubPoset::new(sys.poset(), members.clone());
    let mut trace = PairTrace::default();
    while !view.is_empty() {
        let s = pair_step_in(&view, sys.involution())?;
        view.remove(s);
        view.remove(sys.inv(s));
        let cert = StepCertificate::from_check(view.is_woven());
        trace.push(s, sys.inv(s), cert);
    }
    trace.complete = trace.certificates.iter().all(|c| c.woven);
    Ok(trace)
}

pub fn unravel_system(sys: &SeparationSystem) -> Result<PairTrace> {
    unravel_subsystem(sys, &sys.poset().full_set())
}
