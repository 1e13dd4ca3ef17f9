use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::pairs::PairTrace;
use super::system::Universe;
use crate::counterexample::Graph;
use crate::error::{Error, Result};
use crate::order::{Lattice, Poset};
use crate::submod::{is_submodular, rho_integers, ValueTable};
use crate::weave::{is_woven_in, EnumCaps, StepCertificate};
use crate::{Elem, ElemSet};

/// Structural submodularity: `members` is closed under the involution
/// (checked, [`Error::NotSymmetric`] otherwise) and woven in the lattice.
pub fn is_submodular_in_universe(
    u: &Universe,
    members: &ElemSet,
) -> Result<std::result::Result<(), (Elem, Elem)>> {
    if let Some((s, t)) = u.asymmetry(members) {
        return Err(Error::NotSymmetric(s, t));
    }
    Ok(is_woven_in(u.lattice(), members))
}

/// `gamma(s) = rho(s) + rho(inv s)`, equal on both orientations and
/// injective on unoriented separations.
pub fn gamma_tiebreaker(u: &Universe) -> ValueTable {
    let rho = rho_integers(u.lattice());
    ValueTable::from_integers(u.lattice().elements().map(|s| &rho[s] + &rho[u.inv(s)]))
}

fn certify_pairs(u: &Universe, members: ElemSet, order: &[Elem]) -> Result<PairTrace> {
    let mut current = members;
    let mut trace = PairTrace::default();
    for &s in order {
        current.set(s, false);
        current.set(u.inv(s), false);
        let cert = StepCertificate::from_check(is_submodular_in_universe(u, &current)?);
        if let Some((a, b)) = cert.witness {
            return Err(Error::InvariantViolation(format!(
                "after deleting {s} and {}, ({a}, {b}) has no corner left",
                u.inv(s)
            )));
        }
        trace.push(s, u.inv(s), cert);
    }
    trace.complete = true;
    Ok(trace)
}

/// Unravels `S_k = {s : f(s) < k}` for a symmetric submodular order
/// function `f`, deleting unoriented separations in decreasing order of
/// `f + c * gamma`.
pub fn unravel_sk(u: &Universe, f: &ValueTable, k: &BigRational) -> Result<PairTrace> {
    f.check_len(u.lattice())?;
    if let Some(s) = u.lattice().elements().find(|&s| f.get(s) != f.get(u.inv(s))) {
        return Err(Error::NotSymmetricFunction(s, u.inv(s)));
    }
    is_submodular(u.lattice(), f).map_err(|(p, q)| Error::NotSubmodular(p, q))?;
    let gamma = gamma_tiebreaker(u);
    let mut distinct: Vec<&BigRational> = f.values().iter().collect();
    distinct.sort();
    distinct.dedup();
    let epsilon = distinct
        .windows(2)
        .map(|w| w[1] - w[0])
        .min()
        .unwrap_or_else(BigRational::one);
    let c = epsilon / (BigRational::one() + gamma.max().cloned().unwrap_or_default());
    let h = |s: Elem| f.get(s) + &c * gamma.get(s);
    let mut members = u.lattice().empty_set();
    members.extend(u.lattice().elements().filter(|&s| f.get(s) < k));
    let mut order: Vec<Elem> = members.ones().filter(|&s| s <= u.inv(s)).collect();
    order.sort_by_key(|&s| std::cmp::Reverse(h(s)));
    certify_pairs(u, members, &order)
}

/// Adds a maximal element `r` of the complement together with `inv r`;
/// returns `r` after re-checking the enlarged system.
pub fn ravel_universe_step(u: &Universe, members: &ElemSet) -> Result<Elem> {
    if let Err((a, b)) = is_submodular_in_universe(u, members)? {
        return Err(Error::NotWoven(a, b));
    }
    let l = u.lattice();
    let outside: Vec<Elem> = l.elements().filter(|&x| !members.contains(x)).collect();
    let r = *outside
        .iter()
        .find(|&&x| outside.iter().all(|&y| !l.poset().lt(x, y)))
        .ok_or(Error::Full)?;
    let mut grown = members.clone();
    grown.insert(r);
    grown.insert(u.inv(r));
    if let Err((a, b)) = is_submodular_in_universe(u, &grown)? {
        return Err(Error::InvariantViolation(format!(
            "adding {r} and {} broke submodularity at ({a}, {b})",
            u.inv(r)
        )));
    }
    Ok(r)
}

/// A lattice glued to its dual along top and bottom.
#[derive(Clone, Debug)]
pub struct GluedUniverse {
    pub universe: Universe,
    /// `P` together with its mirror image.
    pub system: ElemSet,
    /// `mirror[x]` is the element of the dual half corresponding to `x`.
    pub mirror: Vec<Elem>,
}

/// Glues `l` and its order dual into a universe: the top of `l` is
/// identified with the copy of its bottom and vice versa, and the
/// involution sends each element to its copy. Elements `0..|l|` keep their
/// indices; copies of the other elements follow in index order. Whether
/// the result is a lattice is certified, not assumed.
pub fn glue_universe(l: &Lattice, members: &ElemSet) -> Result<GluedUniverse> {
    let n = l.len();
    let (top, bottom) = (l.top(), l.bottom());
    if n == 1 {
        let universe = Universe::new(l.clone(), vec![0])?;
        return Ok(GluedUniverse {
            universe,
            system: members.clone(),
            mirror: vec![0],
        });
    }
    let mut mirror = vec![0; n];
    let mut next = n;
    for x in l.elements() {
        mirror[x] = if x == top {
            bottom
        } else if x == bottom {
            top
        } else {
            next += 1;
            next - 1
        };
    }
    let size = next;
    let mut relations: Vec<(Elem, Elem)> = l.poset().covers().collect();
    for (a, b) in l.poset().covers() {
        relations.push((mirror[b], mirror[a]));
    }
    let poset = Poset::from_relations(size, relations)?;
    let lattice = Lattice::new(poset)?;
    let mut inv: Vec<Elem> = (0..size).collect();
    for x in l.elements() {
        inv[x] = mirror[x];
        inv[mirror[x]] = x;
    }
    let universe = Universe::new(lattice, inv)?;
    let mut system = universe.lattice().empty_set();
    for p in members.ones() {
        system.insert(p);
        system.insert(mirror[p]);
    }
    if is_woven_in(l, members).is_ok() {
        if let Err((a, b)) = is_woven_in(universe.lattice(), &system) {
            return Err(Error::InvariantViolation(format!(
                "glued system is not submodular at ({a}, {b})"
            )));
        }
    }
    Ok(GluedUniverse {
        universe,
        system,
        mirror,
    })
}

/// All separations `(A, B)` of a small graph with their orders `|A ∩ B|`.
#[derive(Clone, Debug)]
pub struct GraphUniverse {
    pub universe: Universe,
    pub order: ValueTable,
    /// `(A, B)` as vertex masks, indexed like the universe.
    pub separations: Vec<(u64, u64)>,
}

/// Every `(A, B)` with `A ∪ B = V` and no edge between `A \ B` and
/// `B \ A`, ordered by `A ⊆ C, B ⊇ D`, with `inv (A, B) = (B, A)`.
pub fn graph_separation_universe(g: &Graph, caps: &EnumCaps) -> Result<GraphUniverse> {
    let n = g.len();
    if n > caps.graph {
        return Err(Error::CapExceeded {
            what: "graph for separation enumeration",
            got: n,
            limit: caps.graph,
        });
    }
    let mut separations = Vec::new();
    // each vertex is in A only, in B only, or in both
    for code in 0..3usize.pow(n as u32) {
        let (mut a, mut b, mut c) = (0u64, 0u64, code);
        for v in 0..n {
            match c % 3 {
                0 => a |= 1 << v,
                1 => b |= 1 << v,
                _ => {
                    a |= 1 << v;
                    b |= 1 << v;
                }
            }
            c /= 3;
        }
        let crossing = g
            .edges()
            .any(|(u, v)| {
                let only_a = |x: usize| a >> x & 1 == 1 && b >> x & 1 == 0;
                let only_b = |x: usize| b >> x & 1 == 1 && a >> x & 1 == 0;
                (only_a(u) && only_b(v)) || (only_b(u) && only_a(v))
            });
        if !crossing {
            separations.push((a, b));
        }
    }
    separations.sort_by_key(|&(a, b)| (a.count_ones(), a, std::cmp::Reverse(b)));
    let m = separations.len();
    let poset = Poset::from_leq(m, |i, j| {
        let ((a, b), (c, d)) = (separations[i], separations[j]);
        a & !c == 0 && d & !b == 0
    })?;
    let index = |s: (u64, u64)| separations.iter().position(|&t| t == s).expect("closed under swap");
    let inv: Vec<Elem> = separations.iter().map(|&(a, b)| index((b, a))).collect();
    let universe = Universe::new(Lattice::new(poset)?, inv)?;
    let order = ValueTable::from_integers(
        separations.iter().map(|&(a, b)| BigInt::from((a & b).count_ones())),
    );
    if let Err((p, q)) = is_submodular(universe.lattice(), &order) {
        return Err(Error::InvariantViolation(format!(
            "separation order is not submodular at ({p}, {q})"
        )));
    }
    Ok(GraphUniverse {
        universe,
        order,
        separations,
    })
}
