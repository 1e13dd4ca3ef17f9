//! Seeded search for 4-regular graphs of given girth, then the
//! construction on whatever it finds.
//!
//! cargo run --release --example girth_search -- <n> <girth> <seed>

use weavelab::counterexample::{high_girth_search, pipeline, write_graph6};

fn main() -> weavelab::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, girth, seed) = match args.as_slice() {
        [n, g, s, ..] => (*n, *g, *s as u64),
        _ => (40, 5, 1),
    };
    let found = high_girth_search(n, 4, girth, seed, 20_000)?;
    println!(
        "{} girth {:?} on {n} vertices: {}",
        if found.reached() { "reached" } else { "best found" },
        found.girth(),
        write_graph6(found.graph())
    );
    let report = pipeline(found.graph(), false)?;
    print!("{}", report.render(false));
    Ok(())
}
