use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::order::format::parse_poset_lines;
use crate::order::{Lattice, Poset};
use crate::{Elem, ElemSet};

/// Why a map fails to be an order-reversing involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionWitness {
    Length { got: usize, expected: usize },
    OutOfRange(Elem),
    /// `inv(inv(s)) != s`.
    NotInvolutive(Elem),
    /// `s <= t` but not `inv(t) <= inv(s)`.
    NotOrderReversing(Elem, Elem),
}

impl fmt::Display for InvolutionWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvolutionWitness::Length { got, expected } => {
                write!(f, "map has {got} entries for {expected} elements")
            }
            InvolutionWitness::OutOfRange(s) => write!(f, "image of {s} is out of range"),
            InvolutionWitness::NotInvolutive(s) => write!(f, "inv(inv({s})) != {s}"),
            InvolutionWitness::NotOrderReversing(s, t) => {
                write!(f, "{s} <= {t} but inv({t}) is not below inv({s})")
            }
        }
    }
}

/// Checks that `inv` is an involution reversing the order of `p`.
pub fn validate_involution(p: &Poset, inv: &[Elem]) -> Result<(), InvolutionWitness> {
    let n = p.len();
    if inv.len() != n {
        return Err(InvolutionWitness::Length {
            got: inv.len(),
            expected: n,
        });
    }
    if let Some(s) = (0..n).find(|&s| inv[s] >= n) {
        return Err(InvolutionWitness::OutOfRange(s));
    }
    if let Some(s) = (0..n).find(|&s| inv[inv[s]] != s) {
        return Err(InvolutionWitness::NotInvolutive(s));
    }
    for s in 0..n {
        for t in p.up_set(s).ones() {
            if !p.leq(inv[t], inv[s]) {
                return Err(InvolutionWitness::NotOrderReversing(s, t));
            }
        }
    }
    Ok(())
}

fn invalid(w: InvolutionWitness) -> Error {
    Error::InvalidInvolution(w.to_string())
}

/// A poset of oriented separations with its orientation-reversing map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationSystem {
    poset: Poset,
    inv: Vec<Elem>,
}

impl SeparationSystem {
    pub fn new(poset: Poset, inv: Vec<Elem>) -> Result<Self> {
        validate_involution(&poset, &inv).map_err(invalid)?;
        Ok(SeparationSystem { poset, inv })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn inv(&self, s: Elem) -> Elem {
        self.inv[s]
    }

    pub fn involution(&self) -> &[Elem] {
        &self.inv
    }

    /// Unoriented separations as `(s, inv s)` with `s` the lower index.
    pub fn pairs(&self) -> Vec<(Elem, Elem)> {
        canonical_pairs(&self.inv, &self.poset.full_set())
    }
}

pub(crate) fn canonical_pairs(inv: &[Elem], members: &ElemSet) -> Vec<(Elem, Elem)> {
    members.ones().filter(|&s| s <= inv[s]).map(|s| (s, inv[s])).collect()
}

/// A separation system whose poset is a lattice.
#[derive(Clone, Debug)]
pub struct Universe {
    lattice: Lattice,
    inv: Vec<Elem>,
}

impl Universe {
    pub fn new(lattice: Lattice, inv: Vec<Elem>) -> Result<Self> {
        validate_involution(lattice.poset(), &inv).map_err(invalid)?;
        Ok(Universe { lattice, inv })
    }

    /// Certifies the poset of `sys` as a lattice.
    pub fn from_system(sys: SeparationSystem) -> Result<Self> {
        Ok(Universe {
            lattice: Lattice::new(sys.poset)?,
            inv: sys.inv,
        })
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn inv(&self, s: Elem) -> Elem {
        self.inv[s]
    }

    pub fn involution(&self) -> &[Elem] {
        &self.inv
    }

    pub fn system(&self) -> SeparationSystem {
        SeparationSystem {
            poset: self.lattice.poset().clone(),
            inv: self.inv.clone(),
        }
    }

    pub fn pairs(&self) -> Vec<(Elem, Elem)> {
        canonical_pairs(&self.inv, &self.lattice.full_set())
    }

    /// The first member whose inverse is missing, if any.
    pub fn asymmetry(&self, members: &ElemSet) -> Option<(Elem, Elem)> {
        members
            .ones()
            .find(|&s| !members.contains(self.inv[s]))
            .map(|s| (s, self.inv[s]))
    }
}

/// Parses a `.poset` file with `inv a b` lines. Every element must be
/// paired, a fixed point written `inv a a`.
pub fn parse_separation_system(text: &str) -> Result<SeparationSystem> {
    let raw = parse_poset_lines(text, true)?;
    let poset = Poset::from_relations(raw.n, raw.relations)?;
    let mut inv: Vec<Option<Elem>> = vec![None; raw.n];
    for (a, b) in raw.involution {
        for (x, y) in [(a, b), (b, a)] {
            match inv[x] {
                Some(z) if z != y => {
                    return Err(Error::InvalidInvolution(format!(
                        "{x} is paired with both {z} and {y}"
                    )))
                }
                _ => inv[x] = Some(y),
            }
        }
    }
    let inv = inv
        .into_iter()
        .enumerate()
        .map(|(s, i)| i.ok_or_else(|| Error::InvalidInvolution(format!("{s} has no inverse"))))
        .collect::<Result<Vec<_>>>()?;
    SeparationSystem::new(poset, inv)
}

pub fn write_separation_system(sys: &SeparationSystem) -> String {
    let mut out = crate::order::format::write_poset(sys.poset());
    for (s, t) in sys.pairs() {
        let _ = writeln!(out, "inv {s} {t}");
    }
    out
}
