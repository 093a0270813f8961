//! Minor containment for small binary matroids.
//!
//! Every minor of `M` can be written `M / C \ D` with `C` independent and
//! `D` coindependent, so the search enumerates independent contraction sets
//! of size `r(M) - r(N)` and, for each, the sets of survivors of size
//! `|E(N)|`. Candidates pass through cheap filters (rank, loops, coloops,
//! circuit sizes) before the isomorphism search.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::error::{MatroidError, Result};
use crate::gf2::{rank_of_words, XorBasis};
use crate::iso::{structure_of, CircuitStructure};
use crate::matroid::{rank_of_mask, BinaryMatroid, ElementLabel, MinorOp};

pub const MAX_HOST_ELEMENTS: usize = 20;
pub const MAX_TARGET_ELEMENTS: usize = 12;

/// Certificate that `host / contract_set \ delete_set`, relabeled through
/// `bijection` (target element -> host element), equals the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub contract_set: Vec<ElementLabel>,
    pub delete_set: Vec<ElementLabel>,
    pub bijection: BTreeMap<ElementLabel, ElementLabel>,
}

struct TargetProfile {
    structure: CircuitStructure,
    n: usize,
    rank: usize,
    loops: usize,
    coloops: usize,
    sizes: Vec<usize>,
    loopless: bool,
    simple: bool,
}

impl TargetProfile {
    fn new(target: &BinaryMatroid) -> Result<Self> {
        let structure = structure_of(target)?;
        let sizes = structure.circuit_sizes();
        let loops = structure.loops();
        Ok(Self {
            n: target.len(),
            rank: target.rank(),
            loops,
            coloops: structure.coloops(),
            loopless: loops == 0,
            simple: sizes.first().is_none_or(|&s| s > 2),
            sizes,
            structure,
        })
    }
}

fn check_capacity(host: &BinaryMatroid, target: &BinaryMatroid) -> Result<()> {
    if host.len() > MAX_HOST_ELEMENTS {
        return Err(MatroidError::Capacity {
            what: "minor-search host",
            actual: host.len(),
            limit: MAX_HOST_ELEMENTS,
        });
    }
    if target.len() > MAX_TARGET_ELEMENTS {
        return Err(MatroidError::Capacity {
            what: "minor-search target",
            actual: target.len(),
            limit: MAX_TARGET_ELEMENTS,
        });
    }
    Ok(())
}

/// All `k`-subsets of `0..n` as bitmasks, in lexicographic order of their
/// sorted index lists.
fn combinations(n: usize, k: usize) -> Vec<u32> {
    fn rec(start: usize, n: usize, k: usize, acc: u32, out: &mut Vec<u32>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..=n - k {
            rec(i + 1, n, k - 1, acc | 1 << i, out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

/// Searches for a minor of `host` isomorphic to `target`.
///
/// The verdict is deterministic, and so is the witness: contraction sets are
/// tried in lexicographic order and the first hit in that order is returned
/// regardless of how many worker threads run.
pub fn find_minor_witness(
    host: &BinaryMatroid,
    target: &BinaryMatroid,
) -> Result<Option<MinorWitness>> {
    check_capacity(host, target)?;
    let (n, r) = (host.len(), host.rank());
    let (nt, rt) = (target.len(), target.rank());
    if rt > r || nt > n || nt - rt > n - r {
        return Ok(None);
    }
    let profile = TargetProfile::new(target)?;
    let words = host.element_words()?;

    let found = combinations(n, r - rt)
        .into_par_iter()
        .filter(|&c| rank_of_mask(&words, c) == (r - rt))
        .find_map_first(|c| search_contracted(&words, c, &profile));

    Ok(found.map(|(contract, kept, map)| {
        let delete = (0..n).filter(|&i| contract >> i & 1 == 0 && kept >> i & 1 == 0);
        MinorWitness {
            contract_set: host.labels_of_mask(contract),
            delete_set: delete.map(|i| host.label(i).clone()).collect(),
            bijection: map
                .into_iter()
                .enumerate()
                .map(|(t, h)| (target.label(t).clone(), host.label(h).clone()))
                .collect(),
        }
    }))
}

/// Looks for survivors in `host / contract` forming a copy of the target.
/// Returns `(contract, kept mask, target index -> host index)`.
fn search_contracted(
    words: &[u64],
    contract: u32,
    target: &TargetProfile,
) -> Option<(u32, u32, Vec<usize>)> {
    let mut span = XorBasis::new();
    for (i, &w) in words.iter().enumerate() {
        if contract >> i & 1 == 1 {
            span.insert(w);
        }
    }
    let rest: Vec<(usize, u64)> = (0..words.len())
        .filter(|&i| contract >> i & 1 == 0)
        .map(|i| (i, span.reduce(words[i])))
        .filter(|&(_, v)| !(target.loopless && v == 0))
        .collect();
    let mut chosen = Vec::with_capacity(target.n);
    choose(&rest, 0, &mut chosen, target).map(|(kept, map)| (contract, kept, map))
}

fn choose(
    rest: &[(usize, u64)],
    from: usize,
    chosen: &mut Vec<(usize, u64)>,
    target: &TargetProfile,
) -> Option<(u32, Vec<usize>)> {
    if chosen.len() == target.n {
        return check_candidate(chosen, target);
    }
    // nullity can only grow as elements are added
    let nullity = chosen.len() - rank_of_words(chosen.iter().map(|&(_, v)| v));
    if nullity > target.n - target.rank {
        return None;
    }
    let need = target.n - chosen.len();
    for k in from..rest.len() {
        if rest.len() - k < need {
            break;
        }
        let (i, v) = rest[k];
        if target.simple && chosen.iter().any(|&(_, u)| u == v) {
            continue;
        }
        chosen.push((i, v));
        let hit = choose(rest, k + 1, chosen, target);
        chosen.pop();
        if hit.is_some() {
            return hit;
        }
    }
    None
}

fn check_candidate(chosen: &[(usize, u64)], target: &TargetProfile) -> Option<(u32, Vec<usize>)> {
    let vs: Vec<u64> = chosen.iter().map(|&(_, v)| v).collect();
    if rank_of_words(vs.iter().copied()) != target.rank {
        return None;
    }
    if vs.iter().filter(|&&v| v == 0).count() != target.loops {
        return None;
    }
    let cand = CircuitStructure::from_words(&vs, target.rank);
    if cand.coloops() != target.coloops || cand.circuit_sizes() != target.sizes {
        return None;
    }
    let map = target.structure.find_bijection(&cand)?;
    let kept = chosen.iter().fold(0u32, |acc, &(i, _)| acc | 1 << i);
    Some((kept, map.into_iter().map(|j| chosen[j].0).collect()))
}

/// Independently re-derives the minor described by `w` with the host's rank
/// oracle and compares its circuits with the target's.
///
/// Returns an input error for a malformed witness (overlapping sets, labels
/// outside the ground sets, a map that is not a bijection onto the
/// survivors), and `Ok(false)` for a well-formed witness that does not
/// produce the target.
pub fn verify_witness(
    host: &BinaryMatroid,
    target: &BinaryMatroid,
    w: &MinorWitness,
) -> Result<bool> {
    let mut used: HashSet<ElementLabel> = HashSet::new();
    let mut claim = |l: &ElementLabel, role: &str| -> Result<()> {
        if !host.contains(l.as_str()) {
            return Err(MatroidError::input(format!(
                "{role} element `{l}` is not in the host"
            )));
        }
        if !used.insert(l.clone()) {
            return Err(MatroidError::input(format!(
                "host element `{l}` is used twice in the witness"
            )));
        }
        Ok(())
    };
    for l in &w.contract_set {
        claim(l, "contracted")?;
    }
    for l in &w.delete_set {
        claim(l, "deleted")?;
    }
    for (t, h) in &w.bijection {
        if !target.contains(t.as_str()) {
            return Err(MatroidError::input(format!(
                "bijection source `{t}` is not in the target"
            )));
        }
        claim(h, "surviving")?;
    }
    if w.bijection.len() != target.len() {
        return Err(MatroidError::input(format!(
            "bijection covers {} of {} target elements",
            w.bijection.len(),
            target.len()
        )));
    }
    if used.len() != host.len() {
        return Err(MatroidError::input(format!(
            "witness accounts for {} of {} host elements",
            used.len(),
            host.len()
        )));
    }
    if target.len() > MAX_TARGET_ELEMENTS {
        return Err(MatroidError::Capacity {
            what: "witness target",
            actual: target.len(),
            limit: MAX_TARGET_ELEMENTS,
        });
    }

    let host_full = host.full_matrix();
    let contract_idx: Vec<usize> = w
        .contract_set
        .iter()
        .map(|l| host.index_of(l.as_str()))
        .collect::<Result<_>>()?;
    let base = host_full.rank_of_columns(&contract_idx)?;

    // target element order fixes the survivor order
    let target_labels: Vec<&ElementLabel> = target.elements().collect();
    let survivors: Vec<usize> = target_labels
        .iter()
        .map(|t| host.index_of(w.bijection[*t].as_str()))
        .collect::<Result<_>>()?;

    let minor_rank = |mask: u32| -> Result<usize> {
        let mut cols = contract_idx.clone();
        cols.extend(
            (0..survivors.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| survivors[i]),
        );
        Ok(host_full.rank_of_columns(&cols)? - base)
    };
    let target_full = target.full_matrix();
    let target_rank = |mask: u32| -> Result<usize> {
        let cols: Vec<usize> = (0..target.len()).filter(|&i| mask >> i & 1 == 1).collect();
        target_full.rank_of_columns(&cols)
    };
    Ok(brute_force_circuits(target.len(), minor_rank)?
        == brute_force_circuits(target.len(), target_rank)?)
}

/// Circuits by definition: dependent sets all of whose one-smaller subsets
/// are independent.
fn brute_force_circuits(n: usize, rank: impl Fn(u32) -> Result<usize>) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    for s in 1u32..(1u32 << n) {
        let size = s.count_ones() as usize;
        if rank(s)? != size - 1 {
            continue;
        }
        let mut minimal = true;
        for e in 0..n {
            if s >> e & 1 == 1 && rank(s & !(1 << e))? != size - 1 {
                minimal = false;
                break;
            }
        }
        if minimal {
            out.push(s);
        }
    }
    Ok(out)
}

/// The excluded minors for graphicness among binary matroids.
pub const GRAPHIC_OBSTRUCTIONS: [&str; 4] = ["F7", "F7*", "M*(K5)", "M*(K33)"];

fn obstructions() -> Vec<(&'static str, BinaryMatroid)> {
    GRAPHIC_OBSTRUCTIONS
        .iter()
        .map(|&n| (n, catalog::get_named(n).expect("built-in entry")))
        .collect()
}

fn obstruction_in(
    m: &BinaryMatroid,
    excluded: &[(&'static str, BinaryMatroid)],
) -> Result<Option<(String, MinorWitness)>> {
    if m.len() > MAX_HOST_ELEMENTS {
        return Err(MatroidError::Capacity {
            what: "graphicness test",
            actual: m.len(),
            limit: MAX_HOST_ELEMENTS,
        });
    }
    for (name, ex) in excluded {
        if let Some(w) = find_minor_witness(m, ex)? {
            return Ok(Some((name.to_string(), w)));
        }
    }
    Ok(None)
}

/// The first excluded minor for graphicness found in `m`, with a witness.
pub fn graphic_obstruction(m: &BinaryMatroid) -> Result<Option<(String, MinorWitness)>> {
    obstruction_in(m, &obstructions())
}

/// A binary matroid is graphic iff it has none of F7, F7*, M*(K5), M*(K3,3)
/// as a minor.
pub fn is_graphic(m: &BinaryMatroid) -> Result<bool> {
    Ok(graphic_obstruction(m)?.is_none())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocircuitCheck {
    pub cocircuit: Vec<ElementLabel>,
    pub graphic: bool,
    /// Name of the excluded minor found in `M \ Y` when it is not graphic.
    pub obstruction: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CocircuitReport {
    pub checks: Vec<CocircuitCheck>,
    pub all_graphic: bool,
}

/// Tests every cocircuit `Y` of `m` for graphicness of `m \ Y`.
pub fn check_graphic_cocircuits(m: &BinaryMatroid) -> Result<CocircuitReport> {
    let excluded = obstructions();
    let checks = m
        .cocircuits()?
        .into_par_iter()
        .map(|y| {
            let rest = m.delete(&y)?;
            let obstruction = obstruction_in(&rest, &excluded)?.map(|(name, _)| name);
            Ok(CocircuitCheck {
                graphic: obstruction.is_none(),
                cocircuit: y,
                obstruction,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let all_graphic = checks.iter().all(|c| c.graphic);
    Ok(CocircuitReport {
        checks,
        all_graphic,
    })
}

/// A cocircuit of the host covering a cocircuit of one of its minors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoveringCocircuit {
    pub cocircuit: Vec<ElementLabel>,
    /// Shows `N \ c_n` is a minor of `M \ cocircuit`.
    pub witness: MinorWitness,
}

/// Given `N = m` after `minor_ops` and a cocircuit `c_n` of `N`, finds a
/// cocircuit `C` of `m` with `c_n ⊆ C`, `E(N) ∩ C = c_n` and `N \ c_n` a
/// minor of `m \ C`.
///
/// `Ok(None)` means no cocircuit of `m` qualifies, which cannot happen for
/// valid input.
pub fn covering_cocircuit_witness<S: AsRef<str>>(
    m: &BinaryMatroid,
    minor_ops: &[MinorOp],
    c_n: &[S],
) -> Result<Option<CoveringCocircuit>> {
    let n = m.apply_minor_ops(minor_ops)?;
    if c_n.is_empty() {
        return Err(MatroidError::input("the minor's cocircuit is empty"));
    }
    let dual = n.dual();
    for l in c_n {
        if !n.contains(l.as_ref()) {
            return Err(MatroidError::input(format!(
                "`{}` is not an element of the minor",
                l.as_ref()
            )));
        }
    }
    if !dual.is_circuit(c_n)? {
        return Err(MatroidError::input(
            "the given set is not a cocircuit of the minor",
        ));
    }
    let wanted: HashSet<&str> = c_n.iter().map(|l| l.as_ref()).collect();
    let target = n.delete(c_n)?;

    for y in m.cocircuits()? {
        let inside: HashSet<&str> = y
            .iter()
            .map(|l| l.as_str())
            .filter(|l| n.contains(l))
            .collect();
        if inside != wanted {
            continue;
        }
        let host = m.delete(&y)?;
        if let Some(witness) = find_minor_witness(&host, &target)? {
            return Ok(Some(CoveringCocircuit {
                cocircuit: y,
                witness,
            }));
        }
    }
    Ok(None)
}
