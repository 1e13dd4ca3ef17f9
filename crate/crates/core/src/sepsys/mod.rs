//! Separation systems: posets with an order-reversing involution, and
//! universes, where that poset is a lattice.
//!
//! A subsystem of a universe is submodular if it is closed under the
//! involution and woven in the lattice; a system on its own is submodular
//! if its poset is woven.

mod pairs;
mod system;
mod universe;

pub use pairs::{pair_step_in, unravel_pair_step, unravel_subsystem, unravel_system, PairTrace};
pub use system::{
    parse_separation_system, validate_involution, write_separation_system, InvolutionWitness,
    SeparationSystem, Universe,
};
pub use universe::{
    gamma_tiebreaker, glue_universe, graph_separation_universe, is_submodular_in_universe,
    ravel_universe_step, unravel_sk, GluedUniverse, GraphUniverse,
};

use crate::order::Poset;
use crate::Elem;

/// Intrinsic submodularity of a separation system: every two separations
/// have a supremum or an infimum in it.
pub fn is_submodular_system(sys: &SeparationSystem) -> Result<(), (Elem, Elem)> {
    crate::weave::is_woven_poset(sys.poset())
}

/// Every order-reversing involution of `p`, in lexicographic order.
pub fn involutions(p: &Poset) -> Vec<Vec<Elem>> {
    fn extend(p: &Poset, inv: &mut Vec<Option<Elem>>, out: &mut Vec<Vec<Elem>>) {
        let Some(s) = inv.iter().position(Option::is_none) else {
            let map: Vec<Elem> = inv.iter().map(|x| x.unwrap()).collect();
            out.push(map);
            return;
        };
        for t in s..p.len() {
            if inv[t].is_some() {
                continue;
            }
            inv[s] = Some(t);
            inv[t] = Some(s);
            // order reversal among already assigned elements
            let ok = (0..p.len()).all(|a| {
                inv[a].map_or(true, |ia| {
                    (0..p.len()).all(|b| {
                        !p.leq(a, b) || inv[b].map_or(true, |ib| p.leq(ib, ia))
                    })
                })
            });
            if ok {
                extend(p, inv, out);
            }
            inv[s] = None;
            inv[t] = None;
        }
    }
    let mut out = Vec::new();
    extend(p, &mut vec![None; p.len()], &mut out);
    out
}
