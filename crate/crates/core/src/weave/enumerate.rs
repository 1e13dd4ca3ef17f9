//! Exhaustive enumeration of small posets and woven subsets.

use super::subset::is_woven_in;
use crate::error::{Error, Result};
use crate::order::{Lattice, Poset};
use crate::ElemSet;

/// Size limits for exhaustive drivers. Overridable through the
/// `WEAVELAB_ENUM_CAP` environment variable, either a single number (the
/// lattice cap) or `lattice=..,posets=..,graph=..`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumCaps {
    /// Largest lattice whose subsets are enumerated.
    pub lattice: usize,
    /// Largest labelled poset size.
    pub posets: usize,
    /// Largest graph whose separations are enumerated.
    pub graph: usize,
}

pub const ENUM_CAP_VAR: &str = "WEAVELAB_ENUM_CAP";

impl Default for EnumCaps {
    fn default() -> Self {
        EnumCaps {
            lattice: 16,
            posets: 6,
            graph: 5,
        }
    }
}

impl EnumCaps {
    pub fn parse(spec: &str) -> Result<Self> {
        let mut caps = EnumCaps::default();
        let bad = || Error::Unknown {
            what: "enumeration cap",
            value: spec.to_string(),
        };
        if let Ok(n) = spec.trim().parse::<usize>() {
            caps.lattice = n;
            return Ok(caps);
        }
        for part in spec.split(',') {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let value: usize = value.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "lattice" => caps.lattice = value,
                "posets" => caps.posets = value,
                "graph" => caps.graph = value,
                _ => return Err(bad()),
            }
        }
        Ok(caps)
    }

    pub fn from_env() -> Result<Self> {
        match std::env::var(ENUM_CAP_VAR) {
            Ok(v) => Self::parse(&v),
            Err(_) => Ok(Self::default()),
        }
    }
}

fn check_cap(what: &'static str, got: usize, limit: usize) -> Result<()> {
    if got > limit {
        Err(Error::CapExceeded { what, got, limit })
    } else {
        Ok(())
    }
}

/// Up-set masks (`up[a] >> b & 1` iff `a <= b`) of every labelled poset on
/// `n <= 6` elements.
///
/// Each poset on `k + 1` elements restricts to a unique poset on the first
/// `k`, and is recovered from it by the down-set `D` and up-set `U` of the
/// new element: `D` down-closed, `U` up-closed, and everything in `D`
/// already below everything in `U`.
pub fn poset_up_masks(n: usize, caps: &EnumCaps) -> Result<Vec<Vec<u8>>> {
    check_cap("labelled poset size", n, caps.posets.min(8))?;
    let mut level: Vec<Vec<u8>> = vec![Vec::new()];
    for k in 0..n {
        let mut next = Vec::new();
        for up in &level {
            let down: Vec<u8> = (0..k)
                .map(|b| (0..k).filter(|&a| up[a] >> b & 1 == 1).fold(0u8, |m, a| m | 1 << a))
                .collect();
            for d in 0..(1u16 << k) {
                let d = d as u8;
                if !(0..k).filter(|&a| d >> a & 1 == 1).all(|a| down[a] & !d == 0) {
                    continue;
                }
                let below_all: u8 = (0..k)
                    .filter(|&a| d >> a & 1 == 1)
                    .fold(((1u16 << k) - 1) as u8, |m, a| m & up[a]);
                for u in 0..(1u16 << k) {
                    let u = u as u8;
                    if u & d != 0 || u & !below_all != 0 {
                        continue;
                    }
                    if !(0..k).filter(|&b| u >> b & 1 == 1).all(|b| up[b] & !u == 0) {
                        continue;
                    }
                    let mut new: Vec<u8> = up
                        .iter()
                        .enumerate()
                        .map(|(a, &m)| if d >> a & 1 == 1 { m | 1 << k } else { m })
                        .collect();
                    new.push(u | 1 << k);
                    next.push(new);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

pub fn poset_from_mask(up: &[u8]) -> Poset {
    Poset::from_leq(up.len(), |a, b| up[a] >> b & 1 == 1).expect("enumerated relations are orders")
}

/// Every labelled poset on `n` elements, built lazily.
pub fn posets(n: usize, caps: &EnumCaps) -> Result<impl Iterator<Item = Poset>> {
    Ok(poset_up_masks(n, caps)?.into_iter().map(|m| poset_from_mask(&m)))
}

/// Every labelled lattice on at most `max_n` elements (at least one).
pub fn lattices_up_to(max_n: usize, caps: &EnumCaps) -> Result<Vec<Lattice>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(posets(n, caps)?.filter_map(|p| Lattice::new(p).ok()));
    }
    Ok(out)
}

/// All subsets of `lattice` that are woven in it, in mask order (so the
/// empty set comes first).
pub fn woven_subsets(lattice: &Lattice, caps: &EnumCaps) -> Result<Vec<ElemSet>> {
    let n = lattice.len();
    check_cap("lattice size for subset enumeration", n, caps.lattice.min(24))?;
    let mut out = Vec::new();
    for mask in 0u64..1 << n {
        let mut s = lattice.empty_set();
        s.extend((0..n).filter(|i| mask >> i & 1 == 1));
        if is_woven_in(lattice, &s).is_ok() {
            out.push(s);
        }
    }
    Ok(out)
}
