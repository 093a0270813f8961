mod common;

use matroid_core::catalog::get_named;
use matroid_core::{Graph, MinorOp, OpEffect};

fn sizes(f: &common::Family) -> Vec<(usize, usize)> {
    let mut counts = std::collections::BTreeMap::new();
    for c in f {
        *counts.entry(c.len()).or_insert(0) += 1;
    }
    counts.into_iter().collect()
}

#[test]
fn oracle_counts_for_small_graphs() {
    // the oracle itself, on matroids whose circuits are known by hand
    let tri = Graph::complete(3).cycle_matroid();
    assert_eq!(common::circuits(&tri).len(), 1);
    let k4 = Graph::complete(4).cycle_matroid();
    assert_eq!(sizes(&common::circuits(&k4)), [(3, 4), (4, 3)]);
    assert_eq!(sizes(&common::cocircuits(&k4)), [(3, 4), (4, 3)]);
}

#[test]
fn k5_circuits_and_cocircuits() {
    let k5 = get_named("M(K5)").unwrap();
    let oracle = common::circuits(&k5);
    assert_eq!(oracle.len(), 37);
    assert_eq!(sizes(&oracle), [(3, 10), (4, 15), (5, 12)]);
    assert_eq!(common::library_family(k5.circuits().unwrap()), oracle);

    let co = common::cocircuits(&k5);
    assert_eq!(co.len(), 15);
    assert_eq!(sizes(&co), [(4, 5), (6, 10)]);
    assert_eq!(common::library_family(k5.cocircuits().unwrap()), co);
}

#[test]
fn k33_and_fano_circuits() {
    let k33 = get_named("M(K33)").unwrap();
    let oracle = common::circuits(&k33);
    assert_eq!(sizes(&oracle), [(4, 9), (6, 6)]);
    assert_eq!(common::library_family(k33.circuits().unwrap()), oracle);

    let f7 = get_named("F7").unwrap();
    let oracle = common::circuits(&f7);
    assert_eq!(sizes(&oracle), [(3, 7), (4, 7)]);
    assert_eq!(common::library_family(f7.circuits().unwrap()), oracle);
}

#[test]
fn case_matrix_circuits_match_oracle() {
    for name in ["g7", "g24", "r15", "r16"] {
        let m = get_named(name).unwrap();
        assert_eq!(
            common::library_family(m.circuits().unwrap()),
            common::circuits(&m),
            "{name}"
        );
    }
}

#[test]
fn rank_examples() {
    let g1 = get_named("g1").unwrap();
    assert_eq!(g1.rank_of(&["r1", "s1", "s3"]).unwrap(), 3);
    assert_eq!(common::rank_of_labels(&g1, &["r1", "s1", "s3"]), 3);
    assert!(!g1.is_circuit(&["r1", "s1", "s3"]).unwrap());

    let g24 = get_named("g24").unwrap();
    assert_eq!(g24.rank_of(&["r1", "s1", "s9"]).unwrap(), 2);
    assert_eq!(common::rank_of_labels(&g24, &["r1", "s1", "s9"]), 2);
    assert!(g24.is_circuit(&["r1", "s1", "s9"]).unwrap());
    assert!(g24.rank_of(&["r1", "nope"]).is_err());
}

#[test]
fn contraction_examples() {
    let ops = |ls: &[&str]| -> Vec<MinorOp> {
        ls.iter().map(|l| MinorOp::contract(l).unwrap()).collect()
    };

    let g1 = get_named("g1")
        .unwrap()
        .apply_minor_ops(&ops(&["r1", "s1", "s3"]))
        .unwrap();
    assert_eq!((g1.len(), g1.rank()), (15, 4));

    let (g24, trace) = get_named("g24")
        .unwrap()
        .apply_minor_ops_traced(&ops(&["r1", "s1", "s9"]))
        .unwrap();
    assert_eq!((g24.len(), g24.rank()), (15, 4));
    assert_eq!(trace[0].effect, OpEffect::ContractedBasis);
    assert!(matches!(
        trace[1].effect,
        OpEffect::ContractedCobasis { .. }
    ));
    assert_eq!(trace[2].effect, OpEffect::LoopContractedAsDeletion);
}

#[test]
fn minor_rank_matches_oracle_after_contraction() {
    let base = get_named("g7").unwrap();
    let host = base.contract(&["r1", "r2", "s5"]).unwrap();
    let labels: Vec<String> = host.elements().map(|l| l.to_string()).collect();
    for (i, a) in labels.iter().enumerate() {
        for b in &labels[i + 1..] {
            let expected = common::rank_of_labels(&base, &["r1", "r2", "s5", a, b]) - 2;
            assert_eq!(host.rank_of(&[a, b]).unwrap(), expected, "{a} {b}");
        }
    }
}

/// A rank-4 host can only have an M(K5) minor as a restriction, which needs
/// ten pairwise non-parallel non-loop elements.
fn simple_classes(m: &matroid_core::BinaryMatroid) -> usize {
    let (_, vs) = common::vectors(m);
    let mut classes: Vec<u64> = Vec::new();
    for v in vs {
        // over GF(2), parallel elements have equal vectors
        if v != 0 && !classes.contains(&v) {
            classes.push(v);
        }
    }
    classes.len()
}

#[test]
fn contracted_g8_is_too_small_for_k5() {
    let g8 = get_named("g8").unwrap();
    let host = g8.contract(&["r4", "s5", "s6"]).unwrap();
    assert_eq!((host.len(), host.rank()), (14, 4));
    let classes = simple_classes(&host);
    assert!(classes < 10, "{classes} classes");
    assert!(
        matroid_core::find_minor_witness(&host, &get_named("M(K5)").unwrap())
            .unwrap()
            .is_none()
    );
}
