//! Unravelling: the unique-cover rule on woven posets and backtracking on
//! woven subsets of a lattice.

use weavelab::order::format::parse_poset;
use weavelab::order::subset_lattice;
use weavelab::weave::{
    d_classes, find_unique_cover_element, is_woven_poset, unravel_poset, SearchOutcome, Strategy, Unraveller,
};

fn main() -> weavelab::Result<()> {
    // the pentagon N5
    let n5 = parse_poset("poset 5\n0 1\n1 2\n2 4\n0 3\n3 4\n")?;
    println!("N5 woven: {}", is_woven_poset(&n5).is_ok());
    println!("d-classes: {:?}", d_classes(&n5));
    let (x, side) = find_unique_cover_element(&n5)?;
    println!("first deletion {x} ({side:?})");
    print!("{}", unravel_poset(&n5)?);

    let cube = subset_lattice(3)?.into_lattice();
    let mut search = Unraveller::new(&cube);
    let full = cube.full_set();
    for strategy in [Strategy::Greedy, Strategy::Backtracking] {
        match search.search(&full, strategy)? {
            SearchOutcome::Unravelled(t) => println!("{strategy:?}: order {:?}", t.removals),
            other => println!("{strategy:?}: {other:?}"),
        }
    }
    Ok(())
}
