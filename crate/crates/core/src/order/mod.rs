//! Finite posets and lattices.

mod completion;
pub mod format;
mod lattice;
mod poset;

pub use completion::{dedekind_macneille, Completion, Cut};
pub use lattice::{is_lattice, subset_lattice, Lattice, SubsetLattice, SUBSET_LATTICE_CAP};
pub use poset::{BoundKind, BoundWitness, Poset};
