//! Brute-force oracles and random generators shared by the integration
//! tests. Nothing here calls the library's rank, circuit, isomorphism or
//! search code; only the raw matrix and labels are read.

#![allow(dead_code)]

use std::collections::BTreeSet;

use matroid_core::{BinaryMatroid, Gf2Matrix};
use rand::seq::SliceRandom;
use rand::Rng;

pub type Family = BTreeSet<BTreeSet<String>>;

/// Element labels and GF(2) column vectors of `[I | A]`, in element order.
pub fn vectors(m: &BinaryMatroid) -> (Vec<String>, Vec<u64>) {
    let rows = m.compact_matrix().to_rows();
    let k = m.basis_labels().len();
    let mut labels = Vec::new();
    let mut vecs = Vec::new();
    for (i, l) in m.basis_labels().iter().enumerate() {
        labels.push(l.to_string());
        vecs.push(1u64 << i);
    }
    for (j, l) in m.cobasis_labels().iter().enumerate() {
        labels.push(l.to_string());
        vecs.push(
            (0..k)
                .filter(|&i| rows[i][j] == 1)
                .fold(0, |acc, i| acc | 1 << i),
        );
    }
    (labels, vecs)
}

/// Rank of a set of GF(2) vectors by plain elimination.
pub fn rank(vs: impl IntoIterator<Item = u64>) -> usize {
    let mut rows: Vec<u64> = vs.into_iter().collect();
    let mut r = 0;
    for bit in 0..64 {
        let Some(p) = (r..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(r, p);
        let pv = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row >> bit & 1 == 1 {
                *row ^= pv;
            }
        }
        r += 1;
    }
    r
}

fn pick(vs: &[u64], mask: u64) -> impl Iterator<Item = u64> + '_ {
    (0..vs.len())
        .filter(move |&i| mask >> i & 1 == 1)
        .map(|i| vs[i])
}

/// Circuits as masks, by checking every subset against its one-smaller
/// subsets.
pub fn circuit_masks_with(n: usize, rank_of: impl Fn(u64) -> usize) -> Vec<u64> {
    let mut out = Vec::new();
    for s in 1u64..1 << n {
        let size = s.count_ones() as usize;
        if rank_of(s) == size {
            continue;
        }
        if (0..n)
            .filter(|&e| s >> e & 1 == 1)
            .all(|e| rank_of(s & !(1 << e)) == size - 1)
        {
            out.push(s);
        }
    }
    out
}

pub fn circuit_masks(m: &BinaryMatroid) -> Vec<u64> {
    let (_, vs) = vectors(m);
    circuit_masks_with(vs.len(), |s| rank(pick(&vs, s)))
}

/// Cocircuits: minimal nonempty sets whose removal lowers the rank.
pub fn cocircuit_masks(m: &BinaryMatroid) -> Vec<u64> {
    let (_, vs) = vectors(m);
    let n = vs.len();
    let full = (1u64 << n) - 1;
    let r = rank(vs.iter().copied());
    let hits = |s: u64| rank(pick(&vs, full & !s)) < r;
    let mut out = Vec::new();
    for s in 1u64..1 << n {
        if hits(s)
            && (0..n)
                .filter(|&e| s >> e & 1 == 1)
                .all(|e| !hits(s & !(1 << e)))
        {
            out.push(s);
        }
    }
    out
}

pub fn family(labels: &[String], masks: &[u64]) -> Family {
    masks
        .iter()
        .map(|&c| {
            (0..labels.len())
                .filter(|&e| c >> e & 1 == 1)
                .map(|e| labels[e].clone())
                .collect()
        })
        .collect()
}

pub fn circuits(m: &BinaryMatroid) -> Family {
    family(&vectors(m).0, &circuit_masks(m))
}

pub fn cocircuits(m: &BinaryMatroid) -> Family {
    family(&vectors(m).0, &cocircuit_masks(m))
}

pub fn rank_of_labels(m: &BinaryMatroid, subset: &[&str]) -> usize {
    let (labels, vs) = vectors(m);
    rank(
        subset
            .iter()
            .map(|s| vs[labels.iter().position(|l| l == s).expect("label")]),
    )
}

pub fn library_family(sets: Vec<Vec<matroid_core::ElementLabel>>) -> Family {
    sets.into_iter()
        .map(|c| c.into_iter().map(|l| l.to_string()).collect())
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Tries every bijection `0..n -> 0..n`.
pub fn isomorphic_masks(n: usize, a: &[u64], b: &[u64]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let target: BTreeSet<u64> = b.iter().copied().collect();
    permutations(n).into_iter().any(|p| {
        a.iter().all(|&c| {
            target.contains(
                &(0..n)
                    .filter(|&e| c >> e & 1 == 1)
                    .fold(0, |acc, e| acc | 1 << p[e]),
            )
        })
    })
}

pub fn isomorphic(m1: &BinaryMatroid, m2: &BinaryMatroid) -> bool {
    m1.len() == m2.len() && isomorphic_masks(m1.len(), &circuit_masks(m1), &circuit_masks(m2))
}

/// Unpruned minor test: every split of the host into contracted, deleted and
/// kept elements with as many kept as the target has, each checked by
/// trying all bijections.
pub fn has_minor(host: &BinaryMatroid, target: &BinaryMatroid) -> bool {
    let (_, vs) = vectors(host);
    let n = vs.len();
    let t = target.len();
    let want = circuit_masks(target);
    let mut assign = vec![0u8; n];
    let total = 3usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        for a in assign.iter_mut() {
            *a = (c % 3) as u8;
            c /= 3;
        }
        let kept: Vec<usize> = (0..n).filter(|&i| assign[i] == 2).collect();
        if kept.len() != t {
            continue;
        }
        let contracted: Vec<u64> = (0..n).filter(|&i| assign[i] == 0).map(|i| vs[i]).collect();
        let base = rank(contracted.iter().copied());
        let minor_rank = |s: u64| {
            rank(
                contracted
                    .iter()
                    .copied()
                    .chain((0..t).filter(|&i| s >> i & 1 == 1).map(|i| vs[kept[i]])),
            ) - base
        };
        let got = circuit_masks_with(t, minor_rank);
        if isomorphic_masks(t, &got, &want) {
            return true;
        }
    }
    false
}

/// Random standard-form matroid on `n` elements with rank `k`.
pub fn random_matroid(rng: &mut impl Rng, k: usize, n: usize, density: f64) -> BinaryMatroid {
    let a = Gf2Matrix::from_fn(k, n - k, |_, _| rng.gen_bool(density));
    let basis: Vec<String> = (1..=k).map(|i| format!("r{i}")).collect();
    let cobasis: Vec<String> = (1..=n - k).map(|j| format!("s{j}")).collect();
    BinaryMatroid::from_parts(a, &basis, &cobasis).expect("valid labels")
}

pub fn random_matroid_up_to(rng: &mut impl Rng, max_n: usize) -> BinaryMatroid {
    let n = rng.gen_range(0..=max_n);
    let k = rng.gen_range(0..=n);
    let density = rng.gen_range(0.2..0.8);
    random_matroid(rng, k, n, density)
}

/// Same matroid under a random sequence of pivots and a shuffled labeling.
pub fn scramble(rng: &mut impl Rng, m: &BinaryMatroid) -> BinaryMatroid {
    let mut m = m.clone();
    for _ in 0..rng.gen_range(0..4) {
        let a = m.compact_matrix();
        let ones: Vec<(usize, usize)> = (0..a.n_rows())
            .flat_map(|i| (0..a.n_cols()).map(move |j| (i, j)))
            .filter(|&(i, j)| a.get(i, j))
            .collect();
        if let Some(&(i, j)) = ones.choose(rng) {
            let (r, s) = (
                m.basis_labels()[i].to_string(),
                m.cobasis_labels()[j].to_string(),
            );
            m = m.pivot(&r, &s).expect("nonzero entry");
        }
    }
    let mut fresh: Vec<String> = (0..m.len()).map(|i| format!("x{i}")).collect();
    fresh.shuffle(rng);
    let map = m
        .elements()
        .zip(&fresh)
        .map(|(l, f)| (l.clone(), f.parse().expect("label")))
        .collect();
    m.relabel(&map).expect("bijective relabel")
}
