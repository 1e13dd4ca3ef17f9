//! Lattice certification: join/meet tables, failures with witnesses, and
//! distributivity.

use weavelab::order::format::parse_poset;
use weavelab::order::{subset_lattice, Lattice};

fn main() -> weavelab::Result<()> {
    let cube = subset_lattice(3)?;
    let l = cube.lattice();
    let (a, b) = (cube.element(0b011), cube.element(0b110));
    println!("2^[3]: {} elements", l.len());
    println!("join of {{0,1}} and {{1,2}} = mask {:03b}", cube.mask(l.join(a, b)));
    println!("meet of {{0,1}} and {{1,2}} = mask {:03b}", cube.mask(l.meet(a, b)));
    println!("distributive: {}", l.is_distributive().is_ok());

    // M3: bottom, three atoms, top
    let m3 = Lattice::new(parse_poset("poset 5\n0 1\n0 2\n0 3\n1 4\n2 4\n3 4\n")?)?;
    match m3.is_distributive() {
        Ok(()) => println!("M3 distributive"),
        Err((x, y, z)) => println!("M3 fails distributivity at {x} {y} {z}"),
    }

    // two minimal elements below two maximal ones
    let bowtie = parse_poset("poset 4\n0 2\n0 3\n1 2\n1 3\n")?;
    match Lattice::new(bowtie) {
        Ok(_) => println!("bowtie is a lattice?"),
        Err(e) => println!("bowtie: {e}"),
    }
    Ok(())
}
