//! Separation systems: validating involutions, deleting separations in
//! pairs, sublevel sets of an order function in a universe, and gluing a
//! lattice to its dual.

use num_rational::BigRational;
use weavelab::order::subset_lattice;
use weavelab::sepsys::{
    gamma_tiebreaker, glue_universe, is_submodular_system, parse_separation_system, unravel_sk, unravel_system,
    Universe,
};
use weavelab::submod::ValueTable;

fn main() -> weavelab::Result<()> {
    let square = parse_separation_system("poset 4\n0 1\n0 2\n1 3\n2 3\ninv 0 3\ninv 1 2\n")?;
    println!("square submodular: {}", is_submodular_system(&square).is_ok());
    print!("{}", unravel_system(&square)?);

    // 2^[3] with complementation; order = number of points on the smaller side
    let cube = subset_lattice(3)?;
    let inv = cube.complement();
    let masks: Vec<u64> = cube.lattice().elements().map(|e| cube.mask(e)).collect();
    let u = Universe::new(cube.into_lattice(), inv)?;
    let f = ValueTable::from_integers(masks.iter().map(|m| {
        let k = m.count_ones() as i64;
        k.min(3 - k)
    }));
    println!("gamma: {:?}", gamma_tiebreaker(&u).values().iter().map(|g| g.to_string()).collect::<Vec<_>>());
    print!("{}", unravel_sk(&u, &f, &BigRational::from_integer(2.into()))?);

    let l = subset_lattice(2)?.into_lattice();
    let glued = glue_universe(&l, &l.full_set())?;
    println!(
        "glued universe: {} elements, system of {}",
        glued.universe.len(),
        glued.system.count_ones(..)
    );
    Ok(())
}
