//! Woven set families and woven subsets of a lattice: checking, ravelling
//! and finding removable members.

use weavelab::order::subset_lattice;
use weavelab::weave::family::format_set;
use weavelab::weave::{is_woven_family, is_woven_in, ravel_step, removable_elements, SetFamily};

fn main() -> weavelab::Result<()> {
    // a chain of sets is woven, two disjoint singletons are not
    let chain = SetFamily::new(3, vec![0b000, 0b001, 0b011, 0b111])?;
    println!("chain woven: {}", is_woven_family(&chain).is_ok());
    let split = SetFamily::new(2, vec![0b01, 0b10])?;
    if let Err((x, y)) = is_woven_family(&split) {
        println!("{} {} have neither union nor intersection", format_set(x), format_set(y));
    }

    let cube = subset_lattice(3)?;
    let l = cube.lattice();
    let mut members = l.empty_set();
    members.extend([0b001, 0b011].map(|m| cube.element(m)));
    println!("start {:?}, woven {}", members.ones().collect::<Vec<_>>(), is_woven_in(l, &members).is_ok());
    while members.count_ones(..) < l.len() {
        let added = ravel_step(l, &members)?;
        members.insert(added);
        println!("ravel adds {} -> {} members", format_set(cube.mask(added)), members.count_ones(..));
    }
    let removable = removable_elements(l, &members)?;
    println!("removable from the full cube: {removable:?}");
    Ok(())
}
