//! Families of subsets of a small ground set, stored as bitmasks.
//!
//! `.fam` files:
//!
//! ```text
//! ground 3
//! -        # the empty set
//! 0
//! 0 2
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;

use super::subset::Corners;
use crate::error::{Error, Result};
use crate::order::format::{content_lines, parse_header, parse_index};
use crate::Elem;

/// Largest ground set a family may live on (one bit per point of a `u64`).
pub const FAMILY_GROUND_CAP: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    ground: usize,
    sets: Vec<u64>,
}

fn ground_mask(ground: usize) -> u64 {
    if ground == 64 {
        u64::MAX
    } else {
        (1u64 << ground) - 1
    }
}

impl SetFamily {
    /// Keeps the given order of sets; rejects duplicates and sets that do
    /// not fit the ground set.
    pub fn new(ground: usize, sets: Vec<u64>) -> Result<Self> {
        if ground > FAMILY_GROUND_CAP {
            return Err(Error::CapExceeded {
                what: "family ground set",
                got: ground,
                limit: FAMILY_GROUND_CAP,
            });
        }
        let mut seen = HashMap::new();
        for (i, &s) in sets.iter().enumerate() {
            if s & !ground_mask(ground) != 0 {
                return Err(Error::InvariantViolation(format!(
                    "set {s:#b} does not fit a ground set of {ground}"
                )));
            }
            if let Some(j) = seen.insert(s, i) {
                return Err(Error::InvariantViolation(format!(
                    "sets {j} and {i} are both {s:#b}"
                )));
            }
        }
        Ok(SetFamily { ground, sets })
    }

    /// The family of sets whose masks are the set bits of `family_mask`,
    /// a subset of the power set of a ground set with at most 6 points.
    pub fn from_power_set_mask(ground: usize, family_mask: u64) -> Self {
        debug_assert!(ground <= 6);
        let sets = (0..1u64 << ground).filter(|m| family_mask >> m & 1 == 1).collect();
        SetFamily { ground, sets }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn sets(&self) -> &[u64] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// The family viewed as a corner space whose elements are set indices.
    pub fn space(&self) -> FamilySpace {
        FamilySpace::new(&self.sets)
    }
}

/// Corner lookup among the sets of a family, without a lattice.
#[derive(Clone, Debug)]
pub struct FamilySpace {
    sets: Vec<u64>,
    index: HashMap<u64, Elem>,
}

impl FamilySpace {
    pub fn new(sets: &[u64]) -> Self {
        FamilySpace {
            sets: sets.to_vec(),
            index: sets.iter().enumerate().map(|(i, &s)| (s, i)).collect(),
        }
    }

    pub fn set(&self, e: Elem) -> u64 {
        self.sets[e]
    }
}

impl Corners for FamilySpace {
    fn size(&self) -> usize {
        self.sets.len()
    }

    fn corners(&self, a: Elem, b: Elem) -> (Option<Elem>, Option<Elem>) {
        let (x, y) = (self.sets[a], self.sets[b]);
        (self.index.get(&(x | y)).copied(), self.index.get(&(x & y)).copied())
    }
}

/// Every two members have their union or intersection in the family.
/// Works on masks directly; the witness is a pair of sets.
pub fn is_woven_family(f: &SetFamily) -> Result<(), (u64, u64)> {
    let present: std::collections::HashSet<u64> = f.sets.iter().copied().collect();
    for (i, &x) in f.sets.iter().enumerate() {
        for &y in &f.sets[i + 1..] {
            if !present.contains(&(x | y)) && !present.contains(&(x & y)) {
                return Err((x, y));
            }
        }
    }
    Ok(())
}

/// `{0, 2}` style rendering of a mask; `{}` for the empty set.
pub fn format_set(mask: u64) -> String {
    let elems: Vec<String> = (0..64).filter(|i| mask >> i & 1 == 1).map(|i| i.to_string()).collect();
    format!("{{{}}}", elems.join(", "))
}

pub fn parse_family(text: &str) -> Result<SetFamily> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "missing `ground <n>` header"))?;
    let ground = parse_header(hline, header, "ground")?;
    if ground > FAMILY_GROUND_CAP {
        return Err(Error::parse(hline, format!("ground set {ground} exceeds {FAMILY_GROUND_CAP}")));
    }
    let mut sets = Vec::new();
    let mut seen = HashMap::new();
    for (line, content) in lines {
        let mut mask = 0u64;
        if content != "-" {
            for tok in content.split_whitespace() {
                let e = parse_index(tok, line)?;
                if e >= ground {
                    return Err(Error::parse(line, format!("point {e} outside ground set of {ground}")));
                }
                mask |= 1 << e;
            }
        }
        if let Some(prev) = seen.insert(mask, line) {
            return Err(Error::parse(line, format!("duplicate of the set on line {prev}")));
        }
        sets.push(mask);
    }
    SetFamily::new(ground, sets)
}

pub fn write_family(f: &SetFamily) -> String {
    let mut out = format!("ground {}\n", f.ground);
    for &s in &f.sets {
        if s == 0 {
            out.push_str("-\n");
        } else {
            let elems: Vec<String> = (0..64).filter(|i| s >> i & 1 == 1).map(|i| i.to_string()).collect();
            let _ = writeln!(out, "{}", elems.join(" "));
        }
    }
    out
}
