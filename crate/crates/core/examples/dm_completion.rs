//! Dedekind-MacNeille completion: the smallest lattice containing a poset,
//! keeping every join and meet the poset already has.

use weavelab::order::dedekind_macneille;
use weavelab::order::format::parse_poset;
use weavelab::weave::{is_woven_in, is_woven_poset};

fn main() -> weavelab::Result<()> {
    for (name, text) in [
        ("bowtie", "poset 4\n0 2\n0 3\n1 2\n1 3\n"),
        ("antichain", "poset 3\n"),
        ("fork", "poset 3\n0 1\n0 2\n"),
    ] {
        let p = parse_poset(text)?;
        let c = dedekind_macneille(&p)?;
        let mut image = c.lattice.empty_set();
        image.extend(c.embedding.iter().copied());
        println!(
            "{name}: {} -> {} elements, embedding {:?}, woven {} / image woven {}",
            p.len(),
            c.lattice.len(),
            c.embedding,
            is_woven_poset(&p).is_ok(),
            is_woven_in(&c.lattice, &image).is_ok()
        );
    }
    Ok(())
}
