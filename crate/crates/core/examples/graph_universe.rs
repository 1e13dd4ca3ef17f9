//! All separations of a small graph, their order function, and the
//! sublevel sets it induces.

use num_rational::BigRational;
use weavelab::counterexample::Graph;
use weavelab::sepsys::{graph_separation_universe, unravel_sk};
use weavelab::weave::EnumCaps;

fn main() -> weavelab::Result<()> {
    let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])?;
    let gu = graph_separation_universe(&c5, &EnumCaps::from_env()?)?;
    println!("C5: {} separations", gu.universe.len());
    for k in 1..=3 {
        let k = BigRational::from_integer(k.into());
        let below = gu.order.values().iter().filter(|v| **v < k).count();
        let trace = unravel_sk(&gu.universe, &gu.order, &k)?;
        println!("order < {k}: {below} separations, {} pairs deleted, complete {}", trace.len(), trace.complete);
    }
    Ok(())
}
