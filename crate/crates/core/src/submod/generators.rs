//! Seeded families of submodular functions on power sets.

use std::str::FromStr;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::tiebreak::is_submodular;
use super::values::ValueTable;
use crate::error::{Error, Result};
use crate::order::SubsetLattice;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubmodKind {
    Cut,
    MatroidRank,
    Coverage,
}

impl SubmodKind {
    pub const ALL: [SubmodKind; 3] = [SubmodKind::Cut, SubmodKind::MatroidRank, SubmodKind::Coverage];
}

impl FromStr for SubmodKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cut" => Ok(SubmodKind::Cut),
            "matroid-rank" | "matroid" => Ok(SubmodKind::MatroidRank),
            "coverage" => Ok(SubmodKind::Coverage),
            _ => Err(Error::Unknown {
                what: "submodular function kind",
                value: s.to_string(),
            }),
        }
    }
}

fn table(l: &SubsetLattice, f: impl Fn(u64) -> u64) -> ValueTable {
    ValueTable::from_fn(l.lattice().len(), |e| {
        BigRational::from_integer(f(l.mask(e)).into())
    })
}

/// Number of edges with exactly one end in the set.
pub fn cut_function(l: &SubsetLattice, edges: &[(usize, usize)]) -> ValueTable {
    table(l, |x| {
        edges
            .iter()
            .filter(|&&(u, v)| (x >> u & 1) != (x >> v & 1))
            .count() as u64
    })
}

/// Rank in the partition matroid whose blocks are `(mask, capacity)`.
pub fn partition_rank(l: &SubsetLattice, blocks: &[(u64, u64)]) -> ValueTable {
    table(l, |x| {
        blocks
            .iter()
            .map(|&(b, cap)| u64::from((x & b).count_ones()).min(cap))
            .sum()
    })
}

/// Size of the union of `covers[i]` over the points `i` of the set.
pub fn coverage_function(l: &SubsetLattice, covers: &[u64]) -> ValueTable {
    table(l, |x| {
        let union = covers
            .iter()
            .enumerate()
            .filter(|&(i, _)| x >> i & 1 == 1)
            .fold(0u64, |acc, (_, &c)| acc | c);
        u64::from(union.count_ones())
    })
}

/// A random submodular function of the given kind, reproducible from
/// `seed` and certified submodular before it is returned.
pub fn random_submodular(l: &SubsetLattice, kind: SubmodKind, seed: u64) -> Result<ValueTable> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = l.ground();
    let f = match kind {
        SubmodKind::Cut => {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|_| rng.gen_bool(0.5))
                .collect();
            cut_function(l, &edges)
        }
        SubmodKind::MatroidRank => {
            let blocks_wanted = rng.gen_range(1..=n.max(1));
            let mut blocks = vec![0u64; blocks_wanted];
            for i in 0..n {
                blocks[rng.gen_range(0..blocks_wanted)] |= 1 << i;
            }
            let blocks: Vec<(u64, u64)> = blocks
                .into_iter()
                .map(|b| {
                    let size = u64::from(b.count_ones());
                    (b, rng.gen_range(0..=size))
                })
                .collect();
            partition_rank(l, &blocks)
        }
        SubmodKind::Coverage => {
            let universe = 2 * n.max(1);
            let covers: Vec<u64> = (0..n)
                .map(|_| (0..universe).filter(|_| rng.gen_bool(0.4)).fold(0, |m, j| m | 1 << j))
                .collect();
            coverage_function(l, &covers)
        }
    };
    if let Err((p, q)) = is_submodular(l.lattice(), &f) {
        return Err(Error::InvariantViolation(format!(
            "generated {kind:?} function is not submodular at ({p}, {q})"
        )));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::subset_lattice;

    #[test]
    fn examples() {
        let l = subset_lattice(2).unwrap();
        assert_eq!(cut_function(&l, &[]), ValueTable::from_integers([0, 0, 0, 0]));
        assert_eq!(cut_function(&l, &[(0, 1)]), ValueTable::from_integers([0, 1, 1, 0]));
        assert_eq!(partition_rank(&l, &[(0b11, 1)]), ValueTable::from_integers([0, 1, 1, 1]));
        assert_eq!(coverage_function(&l, &[0b1, 0b1]), ValueTable::from_integers([0, 1, 1, 1]));
    }

    #[test]
    fn seeded_and_submodular() {
        let l = subset_lattice(5).unwrap();
        for kind in SubmodKind::ALL {
            for seed in 0..10 {
                let f = random_submodular(&l, kind, seed).unwrap();
                assert_eq!(f, random_submodular(&l, kind, seed).unwrap());
                assert!(is_submodular(l.lattice(), &f).is_ok());
            }
        }
        assert!("flow".parse::<SubmodKind>().is_err());
        assert_eq!("matroid-rank".parse::<SubmodKind>().unwrap(), SubmodKind::MatroidRank);
    }
}
