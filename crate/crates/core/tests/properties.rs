mod common;

use matroid_core::catalog::{parse_matrix_file, write_matrix_file};
use matroid_core::{
    find_minor_witness, is_isomorphic, verify_witness, BinaryMatroid, Gf2Matrix, MinorOp,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matroid(max_n: usize) -> impl Strategy<Value = BinaryMatroid> {
    (0..=max_n)
        .prop_flat_map(|n| (Just(n), 0..=n))
        .prop_flat_map(|(n, k)| {
            (
                Just(n),
                Just(k),
                proptest::collection::vec(any::<bool>(), k * (n - k)),
            )
        })
        .prop_map(|(n, k, bits)| {
            let w = n - k;
            let a = Gf2Matrix::from_fn(k, w, |i, j| bits[i * w + j]);
            let basis: Vec<String> = (1..=k).map(|i| format!("r{i}")).collect();
            let cobasis: Vec<String> = (1..=w).map(|j| format!("s{j}")).collect();
            BinaryMatroid::from_parts(a, &basis, &cobasis).unwrap()
        })
}

fn labels(m: &BinaryMatroid) -> Vec<String> {
    m.elements().map(|l| l.to_string()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dual_is_an_involution(m in matroid(12)) {
        prop_assert_eq!(m.dual().dual(), m.clone());
        prop_assert_eq!(m.rank() + m.corank(), m.len());
        prop_assert_eq!(m.dual().rank(), m.corank());
    }

    #[test]
    fn rank_agrees_with_oracle(m in matroid(12), mask in any::<u16>()) {
        let ls = labels(&m);
        let subset: Vec<&str> = (0..ls.len()).filter(|&i| mask >> i & 1 == 1).map(|i| ls[i].as_str()).collect();
        prop_assert_eq!(m.rank_of(&subset).unwrap(), common::rank_of_labels(&m, &subset));
        prop_assert_eq!(m.full_matrix().rank(), m.rank());
    }

    #[test]
    fn circuits_agree_with_oracle(m in matroid(10)) {
        prop_assert_eq!(common::library_family(m.circuits().unwrap()), common::circuits(&m));
        prop_assert_eq!(common::library_family(m.cocircuits().unwrap()), common::cocircuits(&m));
    }

    #[test]
    fn pivot_round_trip_keeps_the_matroid(m in matroid(10), pick in any::<usize>()) {
        let a = m.compact_matrix();
        let ones: Vec<(usize, usize)> = (0..a.n_rows())
            .flat_map(|i| (0..a.n_cols()).map(move |j| (i, j)))
            .filter(|&(i, j)| a.get(i, j))
            .collect();
        prop_assume!(!ones.is_empty());
        let (i, j) = ones[pick % ones.len()];
        let (r, s) = (m.basis_labels()[i].to_string(), m.cobasis_labels()[j].to_string());
        let p = m.pivot(&r, &s).unwrap();
        prop_assert_eq!(p.basis_labels()[i].as_str(), s.as_str());
        prop_assert_eq!(common::circuits(&p), common::circuits(&m));
        prop_assert_eq!(p.pivot(&s, &r).unwrap(), m.clone());
    }

    #[test]
    fn deletion_and_contraction_commute(m in matroid(9), x in any::<usize>(), y in any::<usize>(), kinds in any::<(bool, bool)>()) {
        prop_assume!(m.len() >= 2);
        let ls = labels(&m);
        let (x, y) = (x % ls.len(), y % ls.len());
        prop_assume!(x != y);
        let op = |del: bool, l: &str| if del { MinorOp::delete(l).unwrap() } else { MinorOp::contract(l).unwrap() };
        let a = [op(kinds.0, &ls[x]), op(kinds.1, &ls[y])];
        let b = [a[1].clone(), a[0].clone()];
        let ma = m.apply_minor_ops(&a).unwrap();
        let mb = m.apply_minor_ops(&b).unwrap();
        prop_assert_eq!(common::circuits(&ma), common::circuits(&mb));
        prop_assert_eq!(ma.rank(), mb.rank());
    }

    #[test]
    fn contraction_drops_rank_unless_loop(m in matroid(10), x in any::<usize>()) {
        prop_assume!(!m.is_empty());
        let ls = labels(&m);
        let e = &ls[x % ls.len()];
        let is_loop = common::rank_of_labels(&m, &[e]) == 0;
        let c = m.contract(&[e]).unwrap();
        prop_assert_eq!(c.rank(), m.rank() - usize::from(!is_loop));
        prop_assert_eq!(c.len(), m.len() - 1);
        let is_coloop = m.coloops().iter().any(|l| l.as_str() == e);
        prop_assert_eq!(m.delete(&[e]).unwrap().rank(), m.rank() - usize::from(is_coloop));
    }

    #[test]
    fn scrambled_copies_are_isomorphic(m in matroid(9), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = common::scramble(&mut rng, &m);
        prop_assert!(is_isomorphic(&m, &s).unwrap());
        let map = matroid_core::find_isomorphism(&m, &s).unwrap().unwrap();
        prop_assert!(matroid_core::iso::is_circuit_bijection(&m, &s, &map).unwrap());
    }

    #[test]
    fn found_witnesses_verify(host in matroid(9), target in matroid(5)) {
        if let Some(w) = find_minor_witness(&host, &target).unwrap() {
            prop_assert!(verify_witness(&host, &target, &w).unwrap());
            prop_assert_eq!(w.contract_set.len() + w.delete_set.len() + w.bijection.len(), host.len());
        }
    }

    #[test]
    fn matrix_file_round_trip(m in matroid(12)) {
        let (_, back) = parse_matrix_file(&write_matrix_file("m", &m)).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn transpose_twice(rows in 0usize..6, cols in 0usize..70, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = Gf2Matrix::from_fn(rows, cols, |_, _| rand::Rng::gen_bool(&mut rng, 0.5));
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        prop_assert_eq!(a.transpose().rank(), a.rank());
    }
}
