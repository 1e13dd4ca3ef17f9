//! Finite order theory around woven sets: lattices and posets, wovenness
//! and unravelling, submodular tie-breaking, separation systems, and a
//! certified construction of woven sets that cannot be unravelled.

pub mod error;
pub mod order;
pub mod submod;
pub mod sepsys;
pub mod cli;
pub mod counterexample;
pub mod weave;

pub use error::{Error, Result};

/// Elements of every finite structure are dense indices `0..n`.
pub type Elem = usize;

/// A set of elements, one bit per element.
pub type ElemSet = fixedbitset::FixedBitSet;
