//! Round trips through every text format, plus rejection of malformed input.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use weavelab::counterexample::{parse_edge_list, parse_graph6, write_edge_list, write_graph6, Graph};
use weavelab::order::format::{parse_poset, write_poset};
use weavelab::order::Poset;
use weavelab::sepsys::{parse_separation_system, write_separation_system, SeparationSystem};
use weavelab::submod::{format_rational, parse_rational, parse_values, write_values, ValueTable};
use weavelab::weave::family::{parse_family, write_family};
use weavelab::weave::SetFamily;
use weavelab::Error;

/// Relations only from lower to higher index, so always acyclic.
fn poset_strategy() -> impl Strategy<Value = Poset> {
    (1usize..8).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            let rel: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, on)| *on).map(|(p, _)| p).collect();
            Poset::from_relations(n, rel).unwrap()
        })
    })
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (0usize..70).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.2), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, on)| *on).map(|(p, _)| p).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn same_order(p: &Poset, q: &Poset) -> bool {
    p.len() == q.len() && p.elements().all(|a| p.elements().all(|b| p.leq(a, b) == q.leq(a, b)))
}

proptest! {
    #[test]
    fn poset_round_trip(p in poset_strategy()) {
        let q = parse_poset(&write_poset(&p)).unwrap();
        prop_assert!(same_order(&p, &q));
    }

    #[test]
    fn graph6_round_trip(g in graph_strategy()) {
        prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy()) {
        prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn family_round_trip(ground in 0usize..6, picks in proptest::collection::btree_set(0u64..64, 0..20)) {
        let sets: Vec<u64> = picks.into_iter().filter(|&s| s < 1 << ground).collect();
        let f = SetFamily::new(ground, sets).unwrap();
        let back = parse_family(&write_family(&f)).unwrap();
        prop_assert_eq!(back.sets(), f.sets());
        prop_assert_eq!(back.ground(), ground);
    }

    #[test]
    fn values_round_trip(raw in proptest::collection::vec((-1000i64..1000, 1i64..50), 1..20)) {
        let t = ValueTable::new(
            raw.iter().map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q))).collect(),
        );
        let back = parse_values(&write_values(&t), t.len()).unwrap();
        prop_assert_eq!(back.values(), t.values());
    }

    #[test]
    fn rational_tokens(p in -10_000i64..10_000, q in 1i64..500) {
        let r = BigRational::new(BigInt::from(p), BigInt::from(q));
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }
}

#[test]
fn separation_system_round_trip() {
    let text = "poset 4\n0 1\n0 2\n1 3\n2 3\ninv 0 3\ninv 1 2\n";
    let sys = parse_separation_system(text).unwrap();
    let back = parse_separation_system(&write_separation_system(&sys)).unwrap();
    assert!(same_order(sys.poset(), back.poset()));
    assert_eq!(sys.involution(), back.involution());
    let chain = Poset::from_relations(3, [(0, 1), (1, 2)]).unwrap();
    let sys = SeparationSystem::new(chain, vec![2, 1, 0]).unwrap();
    let back = parse_separation_system(&write_separation_system(&sys)).unwrap();
    assert_eq!(back.involution(), &[2, 1, 0]);
}

#[test]
fn malformed_inputs_are_parse_errors() {
    assert!(matches!(parse_poset("poset 2\n0 5\n"), Err(Error::Parse { .. })));
    assert!(matches!(parse_poset("poset 2\n0 1\n1 0\n"), Err(Error::Cycle(_))));
    assert!(parse_poset("0 1\n").is_err());
    // an involution that preserves order
    assert!(parse_separation_system("poset 2\n0 1\ninv 0 0\ninv 1 1\n").is_err());
    assert!(parse_separation_system("poset 2\ninv 0 1\n").is_ok());
    assert!(matches!(parse_family("ground 2\n0 2\n"), Err(Error::Parse { .. })));
    assert!(matches!(parse_family("ground 2\n0\n0\n"), Err(Error::Parse { .. })));
    assert!(matches!(parse_values("0 1\n", 2), Err(Error::Parse { .. })));
    assert!(matches!(parse_values("0 1.5\n1 0\n", 2), Err(Error::Parse { .. })));
    assert!(parse_rational("1e3").is_err());
    assert!(parse_rational("1/0").is_err());
    assert_eq!(parse_rational("-6/4").unwrap(), BigRational::new((-3).into(), 2.into()));
    assert!(matches!(parse_graph6("A\x01"), Err(Error::Parse { .. })));
    assert!(matches!(parse_edge_list("graph 2\n0 0\n"), Err(Error::Loop(0))));
    assert!(matches!(parse_edge_list("graph 3\n0 1\n1 0\n"), Err(Error::MultiEdge(..))));
}

#[test]
fn graph6_known_strings() {
    let k5 = parse_graph6("D~{").unwrap();
    assert_eq!((k5.len(), k5.edge_count()), (5, 10));
    let petersen = parse_graph6(include_str!("../data/petersen.g6")).unwrap();
    assert_eq!((petersen.len(), petersen.edge_count(), petersen.girth()), (10, 15, Some(5)));
    assert_eq!(parse_graph6(">>graph6<<D~{").unwrap(), k5);
}
