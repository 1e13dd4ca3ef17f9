use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::values::ValueTable;
use crate::error::{Error, Result};
use crate::order::Lattice;
use crate::weave::{is_woven_in, StepCertificate, UnravelTrace};
use crate::{Elem, ElemSet};

/// Checks `f(p) + f(q) >= f(p v q) + f(p ^ q)` on every pair; returns the
/// first failing pair.
pub fn is_submodular(l: &Lattice, f: &ValueTable) -> Result<(), (Elem, Elem)> {
    for p in l.elements() {
        for q in p + 1..l.len() {
            if f.get(p) + f.get(q) < f.get(l.join(p, q)) + f.get(l.meet(p, q)) {
                return Err((p, q));
            }
        }
    }
    Ok(())
}

fn require_submodular(l: &Lattice, f: &ValueTable) -> Result<()> {
    f.check_len(l)?;
    is_submodular(l, f).map_err(|(p, q)| Error::NotSubmodular(p, q))
}

/// `{p : f(p) < k}`. For submodular `f` the result is re-checked to be
/// woven in `l`.
pub fn induced_set(l: &Lattice, f: &ValueTable, k: &BigRational) -> Result<ElemSet> {
    f.check_len(l)?;
    let mut out = l.empty_set();
    out.extend(l.elements().filter(|&p| f.get(p) < k));
    if is_submodular(l, f).is_ok() {
        if let Err((p, q)) = is_woven_in(l, &out) {
            return Err(Error::InvariantViolation(format!(
                "sublevel set of a submodular function is not woven at ({p}, {q})"
            )));
        }
    }
    Ok(out)
}

/// `rho(q) = 3^(n+1) - sum of 3^i over the 1-based positions i of the
/// elements below q`. Injective, submodular, and no two distinct pairs
/// share a sum.
pub fn tie_breaker_rho(l: &Lattice) -> ValueTable {
    ValueTable::from_integers(rho_integers(l))
}

pub(crate) fn rho_integers(l: &Lattice) -> Vec<BigInt> {
    let n = l.len();
    let three = BigInt::from(3u8);
    let mut powers = Vec::with_capacity(n + 2);
    let mut acc = BigInt::one();
    for _ in 0..=n + 1 {
        powers.push(acc.clone());
        acc *= &three;
    }
    let top = powers[n + 1].clone();
    l.elements()
        .map(|q| {
            let below: BigInt = l.poset().down_set(q).ones().map(|p| &powers[p + 1]).sum();
            &top - below
        })
        .collect()
}

/// The result of perturbing `f` by a multiple of a tie-breaker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perturbation {
    /// Smallest positive gap between values of `f` (1 if `f` is constant).
    pub epsilon: BigRational,
    /// `epsilon / (1 + max rho)`.
    pub c: BigRational,
    /// `f + c * rho`.
    pub g: ValueTable,
}

/// `g = f + c * rho` with `c * rho < epsilon` everywhere, so `g` keeps
/// every strict comparison of `f` and breaks all ties.
pub fn perturb(l: &Lattice, f: &ValueTable, rho: &ValueTable) -> Result<Perturbation> {
    require_submodular(l, f)?;
    rho.check_len(l)?;
    let mut distinct: Vec<&BigRational> = f.values().iter().collect();
    distinct.sort();
    distinct.dedup();
    let epsilon = distinct
        .windows(2)
        .map(|w| w[1] - w[0])
        .min()
        .unwrap_or_else(BigRational::one);
    let max_rho = rho.max().cloned().unwrap_or_default();
    if rho.values().iter().any(|r| r.is_negative()) {
        return Err(Error::InvariantViolation("tie-breaker must be non-negative".into()));
    }
    let c = &epsilon / (BigRational::one() + max_rho);
    let g = ValueTable::from_fn(l.len(), |p| f.get(p) + &c * rho.get(p));
    Ok(Perturbation { epsilon, c, g })
}

/// Unravels `{p : f(p) < k}` by deleting elements in decreasing order of
/// the perturbed function. Every remainder is re-checked; a failing one
/// is an invariant violation.
pub fn unravel_order_induced(l: &Lattice, f: &ValueTable, k: &BigRational) -> Result<UnravelTrace> {
    require_submodular(l, f)?;
    let members = induced_set(l, f, k)?;
    let g = perturb(l, f, &tie_breaker_rho(l))?.g;
    let mut order: Vec<Elem> = members.ones().collect();
    order.sort_by(|&a, &b| g.get(b).cmp(g.get(a)));
    let mut current = members;
    let mut trace = UnravelTrace::default();
    for p in order {
        current.set(p, false);
        let cert = StepCertificate::from_check(is_woven_in(l, &current));
        if let Some((a, b)) = cert.witness {
            return Err(Error::InvariantViolation(format!(
                "prefix after removing {p} is not woven at ({a}, {b})"
            )));
        }
        trace.push(p, cert);
    }
    trace.complete = true;
    Ok(trace)
}

/// Deletes an `f`-maximal member (lowest index among ties) from an
/// order-induced set and re-checks that the rest is woven.
pub fn delete_max_step(l: &Lattice, members: &ElemSet, f: &ValueTable) -> Result<ElemSet> {
    require_submodular(l, f)?;
    let p = members
        .ones()
        .fold(None, |best: Option<Elem>, p| match best {
            Some(b) if f.get(b) >= f.get(p) => Some(b),
            _ => Some(p),
        })
        .ok_or(Error::EmptyInput)?;
    let mut rest = members.clone();
    rest.set(p, false);
    if let Err((a, b)) = is_woven_in(l, &rest) {
        return Err(Error::InvariantViolation(format!(
            "deleting the maximiser {p} broke wovenness at ({a}, {b})"
        )));
    }
    Ok(rest)
}
