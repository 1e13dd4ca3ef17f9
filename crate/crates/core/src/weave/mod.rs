//! Woven sets, woven posets and their unravellings.
//!
//! A set `P` of lattice elements is woven if every two members have their
//! join or their meet in `P`; a poset is woven if every two elements have
//! a supremum or an infimum in it. An unravelling deletes one element at a
//! time down to the empty set with every remainder woven.

mod cover;
mod enumerate;
pub mod family;
mod subset;
pub mod sweep;
mod view;

pub use cover::{
    d_classes, d_classes_in, find_unique_cover_element, min_class_witness, unique_cover_in,
    unravel_poset, unravel_view, CoverSide,
};
pub(crate) use cover::class_witness_in;
pub use enumerate::{
    lattices_up_to, poset_from_mask, poset_up_masks, posets, woven_subsets, EnumCaps, ENUM_CAP_VAR,
};
pub use family::{is_woven_family, SetFamily};
pub use subset::{
    certify, is_woven_in, ravel_step, removable_elements, unravel_search, Corners, CriticalPairs,
    SearchOutcome, StepCertificate, Strategy, UnravelTrace, Unraveller,
};
pub use view::{is_woven_poset, SubPoset};
