//! Acceptance criteria, one test per criterion. Each prints a single
//! `criterion N: PASS|FAIL ...` line to stderr, bypassing output capture so
//! the verdicts show up in a plain `cargo test` run.

mod common;

use std::collections::HashSet;
use std::io::Write;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use weavelab::counterexample::{glue_sweep, load_graph, pipeline, GraphFormat, Outcome, PipelineReport};
use weavelab::order::{dedekind_macneille, subset_lattice, BoundKind, Lattice, Poset};
use weavelab::sepsys::{
    involutions, is_submodular_system, unravel_system, validate_involution,
    SeparationSystem, Universe,
};
use weavelab::submod::{
    induced_set, is_submodular, random_submodular, tie_breaker_rho, unravel_order_induced, SubmodKind,
    ValueTable,
};
use weavelab::weave::sweep::{sweep_families, verify_finding, FindingKind};
use weavelab::weave::{is_woven_poset, lattices_up_to, posets, unravel_poset, EnumCaps};

use common::*;

fn verdict(n: &str, pass: bool, detail: String) {
    let line = format!("criterion {n}: {} {detail}\n", if pass { "PASS" } else { "FAIL" });
    let _ = std::io::stderr().write_all(line.as_bytes());
}

fn caps() -> EnumCaps {
    EnumCaps::default()
}

/// Test-side tie-breaker: `3^(n+1) - sum of 3^(p+1)` over `p <= q`.
fn rho_oracle(p: &Poset) -> Vec<u128> {
    let n = p.len();
    let top = 3u128.pow(n as u32 + 1);
    (0..n)
        .map(|q| top - (0..n).filter(|&x| p.leq(x, q)).map(|x| 3u128.pow(x as u32 + 1)).sum::<u128>())
        .collect()
}

fn as_u128(t: &ValueTable) -> Vec<u128> {
    t.values().iter().map(|v| v.to_integer().to_string().parse().unwrap()).collect()
}

fn rho_holds(l: &Lattice) -> Result<(), String> {
    let p = l.poset();
    let rho = as_u128(&tie_breaker_rho(l));
    if rho != rho_oracle(p) {
        return Err(format!("rho differs from oracle on {} elements", p.len()));
    }
    let everything = all(p);
    let set: HashSet<u128> = rho.iter().copied().collect();
    if set.len() != rho.len() {
        return Err("rho not injective".into());
    }
    let mut sums = HashSet::new();
    for a in 0..p.len() {
        for b in a..p.len() {
            let j = sup_in(p, &everything, a, b).unwrap();
            let m = inf_in(p, &everything, a, b).unwrap();
            if rho[a] + rho[b] < rho[j] + rho[m] {
                return Err(format!("rho not submodular at ({a}, {b})"));
            }
            if !sums.insert(rho[a] + rho[b]) {
                return Err(format!("pair sum of ({a}, {b}) repeats"));
            }
        }
    }
    if is_submodular(l, &tie_breaker_rho(l)).is_err() {
        return Err("library submodularity check disagrees".into());
    }
    Ok(())
}

#[test]
fn criterion_1_tie_breaker() {
    let start = Instant::now();
    let cube = subset_lattice(4).unwrap().into_lattice();
    let mut result = rho_holds(&cube);
    let lattices = lattices_up_to(5, &caps()).unwrap();
    for l in &lattices {
        assert!(is_lattice(l.poset()));
        result = result.and_then(|_| rho_holds(l));
    }
    let elapsed = start.elapsed();
    let pass = result.is_ok() && elapsed < Duration::from_secs(10);
    verdict(
        "1",
        pass,
        format!("rho on 2^[4] and {} lattices of size <= 5 {:?} ({elapsed:.2?})", lattices.len(), result),
    );
    assert!(pass);
}

#[test]
fn criterion_2_order_induced_unravelling() {
    let start = Instant::now();
    let sl = subset_lattice(5).unwrap();
    let l = sl.lattice();
    let mask = |e: usize| sl.mask(e);
    let mut checks = 0usize;
    let mut failure = None;
    for seed in 0..100u64 {
        let kind = SubmodKind::ALL[seed as usize % 3];
        let f = random_submodular(&sl, kind, seed).unwrap();
        let rho = rho_oracle(l.poset());
        let mut distinct: Vec<&BigRational> = f.values().iter().collect();
        distinct.sort();
        distinct.dedup();
        let top: num_bigint::BigInt = distinct.last().unwrap().to_integer() + 1;
        let thresholds: Vec<BigRational> = (1..=5)
            .map(|j| {
                let i = j * distinct.len() / 5;
                distinct.get(i).map_or(BigRational::from_integer(top.clone()), |v| (*v).clone())
            })
            .collect();
        for k in &thresholds {
            let members: Vec<usize> = induced_set(l, &f, k).unwrap().ones().collect();
            assert!(members.iter().all(|&p| f.get(p) < k));
            let trace = unravel_order_induced(l, &f, k).unwrap();
            let mut order = trace.removals.clone();
            let mut sorted = order.clone();
            // g-order: larger f first, ties broken by larger rho
            sorted.sort_by(|&a, &b| f.get(b).cmp(f.get(a)).then(rho[b].cmp(&rho[a])));
            if order != sorted || !trace.complete {
                failure = Some(format!("seed {seed} k {k}: order is not g-sorted"));
            }
            let mut remaining: Vec<u64> = members.iter().map(|&e| mask(e)).collect();
            for p in order.drain(..) {
                remaining.retain(|&m| m != mask(p));
                checks += 1;
                if !woven_family(&remaining) {
                    failure = Some(format!("seed {seed} k {k}: prefix after {p} not woven"));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failure.is_none() && elapsed < Duration::from_secs(60);
    verdict(
        "2",
        pass,
        format!("{checks} prefixes re-checked over 100 functions x 5 thresholds ({elapsed:.2?}) {failure:?}"),
    );
    assert!(pass);
}

#[test]
fn criterion_3_woven_poset_unravelling() {
    let start = Instant::now();
    let all5: Vec<Poset> = posets(5, &caps()).unwrap().collect();
    let brute = brute_poset_count(5);
    let mut woven = 0;
    let mut failure = None;
    for p in &all5 {
        let oracle = intrinsically_woven(p, &all(p));
        if oracle != is_woven_poset(p).is_ok() {
            failure = Some("wovenness disagrees with oracle".to_string());
        }
        if !oracle {
            continue;
        }
        woven += 1;
        let trace = unravel_poset(p).unwrap();
        let mut rest = all(p);
        for &x in &trace.removals {
            rest.retain(|&y| y != x);
            if !intrinsically_woven(p, &rest) {
                failure = Some(format!("remainder {rest:?} not woven"));
            }
        }
        if !trace.complete || !rest.is_empty() {
            failure = Some("incomplete unravelling".into());
        }
    }
    let elapsed = start.elapsed();
    let pass = all5.len() == 4231 && brute == 4231 && failure.is_none() && elapsed < Duration::from_secs(30);
    verdict(
        "3",
        pass,
        format!(
            "{} posets (brute force {brute}), {woven} woven, all unravelled ({elapsed:.2?}) {failure:?}",
            all5.len()
        ),
    );
    assert!(pass);
}

/// Depth-first unravelling of a set family, test side.
fn oracle_unravels(sets: &[u64], dead: &mut HashSet<Vec<u64>>) -> bool {
    if sets.is_empty() {
        return true;
    }
    if dead.contains(sets) {
        return false;
    }
    for i in 0..sets.len() {
        let mut rest = sets.to_vec();
        rest.remove(i);
        if woven_family(&rest) && oracle_unravels(&rest, dead) {
            return true;
        }
    }
    dead.insert(sets.to_vec());
    false
}

#[test]
fn criterion_4_family_sweep() {
    let start = Instant::now();
    let report = sweep_families(4).unwrap();
    let mut woven = 0u64;
    let mut removable_missing = 0u64;
    for fmask in 0u64..1 << 16 {
        let sets: Vec<u64> = (0..16).filter(|s| fmask >> s & 1 == 1).collect();
        if !woven_family(&sets) {
            continue;
        }
        woven += 1;
        let removable = sets.iter().any(|&p| {
            let rest: Vec<u64> = sets.iter().copied().filter(|&s| s != p).collect();
            woven_family(&rest)
        });
        if !sets.is_empty() && !removable {
            removable_missing += 1;
        }
    }
    let mut findings_ok = true;
    for f in &report.findings {
        let oracle = match &f.kind {
            FindingKind::NoRemovable { .. } => f.family.sets().iter().all(|&p| {
                let rest: Vec<u64> = f.family.sets().iter().copied().filter(|&s| s != p).collect();
                !woven_family(&rest)
            }),
            FindingKind::NoUnravelling { .. } => !oracle_unravels(f.family.sets(), &mut HashSet::new()),
        };
        findings_ok &= verify_finding(f) && oracle;
    }
    let no_removable = report
        .findings
        .iter()
        .filter(|f| matches!(f.kind, FindingKind::NoRemovable { .. }))
        .count() as u64;
    let elapsed = start.elapsed();
    let pass = report.families == 65_536
        && report.woven == woven
        && report.unravelled + report.findings.len() as u64 == woven - 1
        && no_removable == removable_missing
        && findings_ok
        && elapsed < Duration::from_secs(120);
    verdict(
        "4",
        pass,
        format!(
            "{} families, {} woven, {} unravelled, {} findings (all re-verified: {findings_ok}) ({elapsed:.2?})",
            report.families,
            report.woven,
            report.unravelled,
            report.findings.len()
        ),
    );
    for f in &report.findings {
        let _ = writeln!(std::io::stderr(), "  {}", f.render());
    }
    assert!(pass);
}

/// Independent re-check of every failed certificate of a pipeline run.
/// Returns a description of the first inconsistency.
fn recheck_failures(r: &PipelineReport) -> Result<(), String> {
    let sl = &r.construction;
    let p = sl.poset();
    let everything = all(p);
    let members: Vec<usize> = sl.woven_part().ones().collect();
    let rep = &r.report;
    match &rep.lattice {
        Outcome::Pass => {}
        Outcome::Fail(w) => {
            let bound = match w.kind {
                BoundKind::Join => sup_in(p, &everything, w.a, w.b),
                BoundKind::Meet => inf_in(p, &everything, w.a, w.b),
            };
            if bound.is_some() {
                return Err(format!("pair {} {} does have the bound", w.a, w.b));
            }
        }
        Outcome::Unconfirmed(m) => return Err(format!("lattice unconfirmed: {m}")),
    }
    match &rep.woven {
        Outcome::Pass => {}
        Outcome::Fail((q, r)) => {
            let inside = |c: Option<usize>| c.is_some_and(|c| members.contains(&c));
            if inside(sup_in(p, &everything, *q, *r)) || inside(inf_in(p, &everything, *q, *r)) {
                return Err(format!("woven witness {q} {r} has a corner in P"));
            }
        }
        Outcome::Unconfirmed(m) => return Err(format!("woven unconfirmed: {m}")),
    }
    for &(x, w) in &rep.witnesses {
        let Some((q, r)) = w else { continue };
        let rest: Vec<usize> = members.iter().copied().filter(|&m| m != x).collect();
        let inside = |c: Option<usize>| c.is_some_and(|c| rest.contains(&c));
        if !rest.contains(&q) || !rest.contains(&r) {
            return Err(format!("witness for {x} uses a deleted element"));
        }
        if inside(sup_in(p, &everything, q, r)) || inside(inf_in(p, &everything, q, r)) {
            return Err(format!("witness {q} {r} for {x} keeps a corner"));
        }
    }
    match &rep.irreducible {
        Outcome::Pass => {
            if rep.witnesses.iter().any(|(_, w)| w.is_none()) {
                return Err("irreducible passed with a missing witness".into());
            }
        }
        Outcome::Fail(x) => {
            let rest: Vec<usize> = members.iter().copied().filter(|&m| m != *x).collect();
            if !woven_in(p, &rest) {
                return Err(format!("P - {x} is not woven after all"));
            }
        }
        Outcome::Unconfirmed(m) => return Err(format!("irreducible unconfirmed: {m}")),
    }
    Ok(())
}

fn cage_run() -> (PipelineReport, Duration) {
    let g = load_graph(&data("cage_4_12.g6"), GraphFormat::Graph6).unwrap();
    assert_eq!((g.len(), g.girth()), (728, Some(12)));
    let start = Instant::now();
    let r = pipeline(&g, false).unwrap();
    (r, start.elapsed())
}

#[test]
fn criterion_5_counterexample_on_cage() {
    let (r, elapsed) = cage_run();
    let rep = &r.report;
    let consistent = recheck_failures(&r);
    let pass = r.construction.len() == 2914
        && r.warnings.is_empty()
        && rep.all_passed()
        && consistent.is_ok()
        && elapsed < Duration::from_secs(600);
    let summary: Vec<String> = rep.lines();
    verdict(
        "5",
        pass,
        format!(
            "(4,12)-cage, {} elements ({elapsed:.2?}): {} | {} | re-check {:?}",
            r.construction.len(),
            summary.join(" | "),
            rep.failure_witness().unwrap_or_else(|| "-".into()),
            consistent
        ),
    );
    assert!(consistent.is_ok(), "{consistent:?}");
    assert!(pass, "the cage construction did not certify");
}

#[test]
fn criterion_5_robertson_fallback() {
    let g = load_graph(&data("robertson.g6"), GraphFormat::Graph6).unwrap();
    let start = Instant::now();
    let r = pipeline(&g, true).unwrap();
    let elapsed = start.elapsed();
    let consistent = recheck_failures(&r);
    let witnessed = r.report.all_passed() || r.report.failure_witness().is_some();
    let pass = consistent.is_ok() && witnessed && r.construction.len() == 78 && elapsed < Duration::from_secs(5);
    verdict(
        "5 (Robertson fallback)",
        pass,
        format!("{} ({elapsed:.2?}) re-check {consistent:?}", r.report.lines().join(" | ")),
    );
    assert!(pass);
}

fn complement_universe(n: usize) -> Universe {
    let sl = subset_lattice(n).unwrap();
    let inv = sl.complement();
    Universe::new(sl.into_lattice(), inv).unwrap()
}

fn pair_trace_certified(sys: &SeparationSystem) -> Result<usize, String> {
    let trace = unravel_system(sys).map_err(|e| e.to_string())?;
    let p = sys.poset();
    let mut rest = all(p);
    for &(s, t) in &trace.pairs {
        if sys.inv(s) != t {
            return Err(format!("pair ({s}, {t}) is not an orientation pair"));
        }
        rest.retain(|&x| x != s && x != t);
        if !intrinsically_woven(p, &rest) {
            return Err(format!("remainder after ({s}, {t}) is not submodular"));
        }
    }
    if !trace.complete || !rest.is_empty() {
        return Err("trace incomplete".into());
    }
    Ok(trace.len())
}

#[test]
fn criterion_6_universe_gluing() {
    let (r, _) = cage_run();
    let glued = glue_sweep(&r.construction);
    let glue_line = match &glued {
        Ok(sweep) => sweep.line(),
        Err(e) => format!("glue: cannot glue ({e})"),
    };
    let glue_ok = glued.as_ref().is_ok_and(|s| s.submodular && s.removable.is_empty());
    let mut small = Vec::new();
    let mut small_ok = true;
    for n in [2, 3] {
        let res = pair_trace_certified(&complement_universe(n).system());
        small_ok &= res.as_ref().is_ok_and(|&k| k == 1 << (n - 1));
        small.push(format!("2^[{n}]: {res:?}"));
    }
    let pass = glue_ok && small_ok;
    verdict("6", pass, format!("{glue_line}; pair traces {}", small.join(", ")));
    assert!(small_ok);
    assert!(glue_ok, "the cage order is not a lattice, so there is nothing to glue");
}

/// `P^op` placed entirely below `P`, with `x` and its copy swapped.
fn doubled(p: &Poset) -> (Poset, Vec<usize>) {
    let n = p.len();
    let q = Poset::from_leq(2 * n, |a, b| match (a < n, b < n) {
        (true, true) => p.leq(b, a),
        (false, false) => p.leq(a - n, b - n),
        (true, false) => true,
        (false, true) => false,
    })
    .unwrap();
    let inv = (0..2 * n).map(|x| if x < n { x + n } else { x - n }).collect();
    (q, inv)
}

fn order_reversing(p: &Poset, inv: &[usize]) -> bool {
    (0..p.len()).all(|a| inv[inv[a]] == a && (0..p.len()).all(|b| !p.leq(a, b) || p.leq(inv[b], inv[a])))
}

#[test]
fn criterion_7_pair_unravelling() {
    let start = Instant::now();
    let mut systems = 0usize;
    let mut failure: Option<String> = None;
    let mut check = |p: &Poset, inv: Vec<usize>, failure: &mut Option<String>| {
        if !order_reversing(p, &inv) || validate_involution(p, &inv).is_err() {
            *failure = Some("enumerated involution is invalid".into());
            return;
        }
        let sys = SeparationSystem::new(p.clone(), inv).unwrap();
        if is_submodular_system(&sys).is_ok() != intrinsically_woven(p, &all(p)) {
            *failure = Some("submodularity disagrees with oracle".into());
        }
        if is_submodular_system(&sys).is_err() {
            return;
        }
        systems += 1;
        if let Err(e) = pair_trace_certified(&sys) {
            *failure = Some(e);
        }
    };
    for n in 1..=6 {
        for p in posets(n, &caps()).unwrap() {
            for inv in involutions(&p) {
                check(&p, inv, &mut failure);
            }
        }
    }
    let mut doubled_count = 0;
    for n in 1..=6 {
        for p in posets(n, &caps()).unwrap() {
            if is_woven_poset(&p).is_err() {
                continue;
            }
            let (q, canonical) = doubled(&p);
            let all_inv = involutions(&q);
            if !all_inv.contains(&canonical) {
                failure = Some("canonical involution missing".into());
            }
            for inv in all_inv {
                doubled_count += 1;
                check(&q, inv, &mut failure);
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failure.is_none() && elapsed < Duration::from_secs(120);
    verdict(
        "7",
        pass,
        format!("{systems} submodular systems ({doubled_count} from doubled posets) unravelled in certified pairs ({elapsed:.2?}) {failure:?}"),
    );
    assert!(pass);
}

fn isomorphic_by(p: &Poset, q: &Poset, f: &[usize]) -> bool {
    let image: HashSet<usize> = f.iter().copied().collect();
    image.len() == p.len()
        && q.len() == p.len()
        && (0..p.len()).all(|a| (0..p.len()).all(|b| p.leq(a, b) == q.leq(f[a], f[b])))
}

#[test]
fn criterion_8_completion() {
    let start = Instant::now();
    let mut failure = None;
    let lattices = lattices_up_to(5, &caps()).unwrap();
    for l in &lattices {
        let c = dedekind_macneille(l.poset()).unwrap();
        if !isomorphic_by(l.poset(), c.lattice.poset(), &c.embedding) {
            failure = Some(format!("DM(L) not isomorphic to L on {} elements", l.len()));
        }
    }
    let mut woven = 0;
    for n in 1..=5 {
        for p in posets(n, &caps()).unwrap() {
            if !intrinsically_woven(&p, &all(&p)) {
                continue;
            }
            woven += 1;
            let c = dedekind_macneille(&p).unwrap();
            let dm = c.lattice.poset();
            let e = &c.embedding;
            let everything = all(dm);
            let order_embedding = (0..n).all(|a| (0..n).all(|b| p.leq(a, b) == dm.leq(e[a], e[b])));
            let image: Vec<usize> = e.clone();
            let preserved = (0..n).all(|a| {
                (0..n).all(|b| {
                    sup_in(&p, &all(&p), a, b).map_or(true, |s| sup_in(dm, &everything, e[a], e[b]) == Some(e[s]))
                        && inf_in(&p, &all(&p), a, b)
                            .map_or(true, |s| inf_in(dm, &everything, e[a], e[b]) == Some(e[s]))
                })
            });
            if !(order_embedding && preserved && is_lattice(dm) && woven_in(dm, &image)) {
                failure = Some(format!("completion of a woven {n}-poset fails"));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = failure.is_none() && elapsed < Duration::from_secs(30);
    verdict(
        "8",
        pass,
        format!("{} lattices reproduced, {woven} woven posets embed woven ({elapsed:.2?}) {failure:?}", lattices.len()),
    );
    assert!(pass);
}
