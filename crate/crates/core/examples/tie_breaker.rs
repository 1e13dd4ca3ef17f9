//! The tie-breaker rho, perturbing a submodular function with it, and
//! unravelling a sublevel set in the perturbed order.

use num_rational::BigRational;
use weavelab::order::subset_lattice;
use weavelab::submod::{
    cut_function, format_rational, induced_set, is_submodular, perturb, tie_breaker_rho, unravel_order_induced,
};

fn main() -> weavelab::Result<()> {
    let cube = subset_lattice(3)?;
    let l = cube.lattice();
    let rho = tie_breaker_rho(l);
    println!("rho injective {}, submodular {}", rho.is_injective(), is_submodular(l, &rho).is_ok());

    // cut function of the path 0 - 1 - 2
    let f = cut_function(&cube, &[(0, 1), (1, 2)]);
    let p = perturb(l, &f, &rho)?;
    println!("epsilon {} c {}", format_rational(&p.epsilon), format_rational(&p.c));
    for e in l.elements() {
        println!("  {:03b}  f = {}  g = {}", cube.mask(e), format_rational(f.get(e)), format_rational(p.g.get(e)));
    }

    let k = BigRational::from_integer(2.into());
    let members = induced_set(l, &f, &k)?;
    println!("f < 2 on {} elements", members.count_ones(..));
    print!("{}", unravel_order_induced(l, &f, &k)?.render(&|e| format!("{:03b}", cube.mask(e))));
    Ok(())
}
