//! Submodular functions on lattices and the tie-breaker that makes their
//! sublevel sets unravel in a fixed order.
//!
//! All arithmetic is exact: values are big rationals and the tie-breaker
//! uses big integers.

mod generators;
mod tiebreak;
mod values;

pub use generators::{
    coverage_function, cut_function, partition_rank, random_submodular, SubmodKind,
};
pub use tiebreak::{
    delete_max_step, induced_set, is_submodular, perturb, tie_breaker_rho, unravel_order_induced,
    Perturbation,
};
pub(crate) use tiebreak::rho_integers;
pub use values::{format_rational, parse_rational, parse_values, write_values, ValueTable};
