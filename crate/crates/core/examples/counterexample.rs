//! Runs the construction on a graph file and prints the certificates.
//!
//! cargo run --release --example counterexample -- crates/core/data/cage_4_12.g6 --glue

use std::path::PathBuf;
use std::time::Instant;

use weavelab::counterexample::{run_pipeline, GraphFormat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = PathBuf::from(
        args.next()
            .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/robertson.g6").into()),
    );
    let glue = args.any(|a| a == "--glue");
    let start = Instant::now();
    let report = run_pipeline(&path, GraphFormat::from_path(&path), glue)?;
    print!("{}", report.render(false));
    println!("elapsed {:.1?}", start.elapsed());
    Ok(())
}
