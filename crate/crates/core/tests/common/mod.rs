//! Brute-force oracles shared by the integration tests. They read only
//! the order relation and never touch join/meet tables or library checks.
#![allow(dead_code)]

use weavelab::order::Poset;

/// Least element of `within` above both `a` and `b`, if any.
pub fn sup_in(p: &Poset, within: &[usize], a: usize, b: usize) -> Option<usize> {
    let ub: Vec<usize> = within.iter().copied().filter(|&x| p.leq(a, x) && p.leq(b, x)).collect();
    ub.iter().copied().find(|&x| ub.iter().all(|&y| p.leq(x, y)))
}

pub fn inf_in(p: &Poset, within: &[usize], a: usize, b: usize) -> Option<usize> {
    let lb: Vec<usize> = within.iter().copied().filter(|&x| p.leq(x, a) && p.leq(x, b)).collect();
    lb.iter().copied().find(|&x| lb.iter().all(|&y| p.leq(y, x)))
}

pub fn all(p: &Poset) -> Vec<usize> {
    (0..p.len()).collect()
}

/// Every pair of `members` has a supremum or infimum computed inside
/// `members` itself.
pub fn intrinsically_woven(p: &Poset, members: &[usize]) -> bool {
    members.iter().enumerate().all(|(i, &a)| {
        members[i + 1..]
            .iter()
            .all(|&b| sup_in(p, members, a, b).is_some() || inf_in(p, members, a, b).is_some())
    })
}

/// Every pair of `members` has its join or meet (taken in the whole of
/// `p`) inside `members`.
pub fn woven_in(p: &Poset, members: &[usize]) -> bool {
    let everything = all(p);
    let inside = |c: Option<usize>| c.is_some_and(|c| members.contains(&c));
    members.iter().enumerate().all(|(i, &a)| {
        members[i + 1..].iter().all(|&b| {
            inside(sup_in(p, &everything, a, b)) || inside(inf_in(p, &everything, a, b))
        })
    })
}

pub fn is_lattice(p: &Poset) -> bool {
    let everything = all(p);
    everything.iter().all(|&a| {
        everything
            .iter()
            .all(|&b| sup_in(p, &everything, a, b).is_some() && inf_in(p, &everything, a, b).is_some())
    })
}

/// Number of relations `a <= b` with `a != b`, counted pairwise.
pub fn relation_count(p: &Poset) -> usize {
    (0..p.len()).flat_map(|a| (0..p.len()).map(move |b| (a, b))).filter(|&(a, b)| a != b && p.leq(a, b)).count()
}

/// Labelled partial orders on `n` points by brute force over all
/// off-diagonal relation matrices.
pub fn brute_poset_count(n: usize) -> usize {
    let cells: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b))).collect();
    let mut index = vec![vec![usize::MAX; n]; n];
    for (i, &(a, b)) in cells.iter().enumerate() {
        index[a][b] = i;
    }
    let mut count = 0;
    for m in 0u64..1 << cells.len() {
        let leq = |a: usize, b: usize| a == b || m >> index[a][b] & 1 == 1;
        let antisymmetric = cells.iter().all(|&(a, b)| !(leq(a, b) && leq(b, a)));
        if !antisymmetric {
            continue;
        }
        let transitive = cells
            .iter()
            .filter(|&&(a, b)| leq(a, b))
            .all(|&(a, b)| (0..n).all(|c| !leq(b, c) || leq(a, c)));
        count += transitive as usize;
    }
    count
}

/// Family of sets closed under "union or intersection" for every pair.
pub fn woven_family(sets: &[u64]) -> bool {
    sets.iter().enumerate().all(|(i, &x)| sets[i + 1..].iter().all(|&y| sets.contains(&(x | y)) || sets.contains(&(x & y))))
}

pub fn data(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}
