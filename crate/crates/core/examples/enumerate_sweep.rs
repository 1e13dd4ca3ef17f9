//! Exhaustive enumeration: labelled posets, woven subsets of a lattice and
//! the classification of all set families over a small ground set.
//!
//! cargo run --release --example enumerate_sweep -- 4

use weavelab::order::subset_lattice;
use weavelab::weave::sweep::{sweep_families, verify_finding};
use weavelab::weave::{is_woven_poset, posets, woven_subsets, EnumCaps};

fn main() -> weavelab::Result<()> {
    let ground: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let caps = EnumCaps::from_env()?;
    for n in 1..=5 {
        let (mut total, mut woven) = (0, 0);
        for p in posets(n, &caps)? {
            total += 1;
            woven += is_woven_poset(&p).is_ok() as usize;
        }
        println!("posets on {n}: {total}, woven {woven}");
    }
    let cube = subset_lattice(3)?.into_lattice();
    println!("woven subsets of 2^[3]: {}", woven_subsets(&cube, &caps)?.len());

    let report = sweep_families(ground)?;
    println!(
        "families over [{ground}]: {} total, {} woven, {} unravelled",
        report.families, report.woven, report.unravelled
    );
    for f in &report.findings {
        println!("{} (re-verified: {})", f.render(), verify_finding(f));
    }
    Ok(())
}
