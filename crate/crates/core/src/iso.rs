//! Isomorphism of small binary matroids.
//!
//! Two matroids are isomorphic when some bijection of ground sets carries
//! the circuits of one exactly onto the circuits of the other. Candidates
//! are filtered by a label-free signature, then a backtracking search
//! builds the bijection.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::error::Result;
use crate::matroid::{circuits_of_words, BinaryMatroid, ElementLabel};

/// Label-free invariants; isomorphic matroids have equal signatures.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IsoSignature {
    pub elements: usize,
    pub rank: usize,
    pub loops: usize,
    pub coloops: usize,
    /// Sizes of all circuits, ascending.
    pub circuit_sizes: Vec<usize>,
    /// Per element, the `(circuit size, count)` pairs of circuits through it;
    /// the outer list is sorted.
    pub profiles: Vec<Vec<(usize, usize)>>,
}

/// Circuit data of a matroid on elements `0..n`.
#[derive(Clone, Debug)]
pub(crate) struct CircuitStructure {
    n: usize,
    rank: usize,
    circuits: Vec<u32>,
    circuit_set: HashSet<u32>,
    profiles: Vec<Vec<(usize, usize)>>,
}

impl CircuitStructure {
    pub(crate) fn from_words(words: &[u64], rank: usize) -> Self {
        Self::from_circuits(words.len(), rank, circuits_of_words(words))
    }

    pub(crate) fn from_circuits(n: usize, rank: usize, circuits: Vec<u32>) -> Self {
        let profiles = (0..n)
            .map(|e| {
                let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
                for &c in &circuits {
                    if c >> e & 1 == 1 {
                        *counts.entry(c.count_ones() as usize).or_default() += 1;
                    }
                }
                counts.into_iter().collect()
            })
            .collect();
        let circuit_set = circuits.iter().copied().collect();
        Self {
            n,
            rank,
            circuits,
            circuit_set,
            profiles,
        }
    }

    pub(crate) fn circuit_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self
            .circuits
            .iter()
            .map(|c| c.count_ones() as usize)
            .collect();
        s.sort_unstable();
        s
    }

    pub(crate) fn loops(&self) -> usize {
        self.circuits.iter().filter(|c| c.count_ones() == 1).count()
    }

    pub(crate) fn coloops(&self) -> usize {
        self.profiles.iter().filter(|p| p.is_empty()).count()
    }

    pub(crate) fn signature(&self) -> IsoSignature {
        let mut profiles = self.profiles.clone();
        profiles.sort();
        IsoSignature {
            elements: self.n,
            rank: self.rank,
            loops: self.loops(),
            coloops: self.coloops(),
            circuit_sizes: self.circuit_sizes(),
            profiles,
        }
    }

    /// A bijection `map[i] = j` from `self`'s elements to `other`'s that
    /// carries circuits onto circuits, if one exists.
    pub(crate) fn find_bijection(&self, other: &Self) -> Option<Vec<usize>> {
        if self.n != other.n
            || self.rank != other.rank
            || self.circuits.len() != other.circuits.len()
        {
            return None;
        }
        let mut mine = self.profiles.clone();
        let mut theirs = other.profiles.clone();
        mine.sort();
        theirs.sort();
        if mine != theirs || self.circuit_sizes() != other.circuit_sizes() {
            return None;
        }

        // Rarest profile class first, ties by element index.
        let class_size = |p: &Vec<(usize, usize)>| self.profiles.iter().filter(|q| *q == p).count();
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&e| (class_size(&self.profiles[e]), e));
        let mut rank_in_order = vec![0; self.n];
        for (p, &e) in order.iter().enumerate() {
            rank_in_order[e] = p;
        }
        // circuits of `self` grouped by the position of their last element
        let mut closing: Vec<Vec<u32>> = vec![Vec::new(); self.n];
        for &c in &self.circuits {
            let last = (0..self.n)
                .filter(|&e| c >> e & 1 == 1)
                .map(|e| rank_in_order[e])
                .max()
                .expect("circuits are nonempty");
            closing[last].push(c);
        }
        let mut through: Vec<Vec<u32>> = vec![Vec::new(); other.n];
        for &c in &other.circuits {
            for (e, list) in through.iter_mut().enumerate() {
                if c >> e & 1 == 1 {
                    list.push(c);
                }
            }
        }

        let mut search = Backtrack {
            a: self,
            b: other,
            order: &order,
            closing: &closing,
            through: &through,
            map: vec![usize::MAX; self.n],
            inverse: vec![usize::MAX; other.n],
            image: 0,
        };
        if search.extend(0) {
            Some(search.map)
        } else {
            None
        }
    }
}

struct Backtrack<'a> {
    a: &'a CircuitStructure,
    b: &'a CircuitStructure,
    order: &'a [usize],
    closing: &'a [Vec<u32>],
    through: &'a [Vec<u32>],
    map: Vec<usize>,
    inverse: Vec<usize>,
    image: u32,
}

impl Backtrack<'_> {
    fn map_mask(&self, c: u32) -> u32 {
        (0..self.a.n)
            .filter(|&e| c >> e & 1 == 1)
            .fold(0, |acc, e| acc | 1 << self.map[e])
    }

    fn unmap_mask(&self, c: u32) -> u32 {
        (0..self.b.n)
            .filter(|&e| c >> e & 1 == 1)
            .fold(0, |acc, e| acc | 1 << self.inverse[e])
    }

    fn extend(&mut self, pos: usize) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let x = self.order[pos];
        for y in 0..self.b.n {
            if self.inverse[y] != usize::MAX || self.b.profiles[y] != self.a.profiles[x] {
                continue;
            }
            self.map[x] = y;
            self.inverse[y] = x;
            self.image |= 1 << y;
            let forward = self.closing[pos]
                .iter()
                .all(|&c| self.b.circuit_set.contains(&self.map_mask(c)));
            let backward = forward
                && self.through[y]
                    .iter()
                    .filter(|&&c| c & !self.image == 0)
                    .all(|&c| self.a.circuit_set.contains(&self.unmap_mask(c)));
            if backward && self.extend(pos + 1) {
                return true;
            }
            self.map[x] = usize::MAX;
            self.inverse[y] = usize::MAX;
            self.image &= !(1 << y);
        }
        false
    }
}

pub(crate) fn structure_of(m: &BinaryMatroid) -> Result<CircuitStructure> {
    Ok(CircuitStructure::from_circuits(
        m.len(),
        m.rank(),
        m.circuit_masks()?,
    ))
}

pub fn signature(m: &BinaryMatroid) -> Result<IsoSignature> {
    Ok(structure_of(m)?.signature())
}

/// An isomorphism `E(m1) -> E(m2)` if one exists.
pub fn find_isomorphism(
    m1: &BinaryMatroid,
    m2: &BinaryMatroid,
) -> Result<Option<BTreeMap<ElementLabel, ElementLabel>>> {
    let (a, b) = (structure_of(m1)?, structure_of(m2)?);
    Ok(a.find_bijection(&b).map(|map| {
        map.iter()
            .enumerate()
            .map(|(i, &j)| (m1.label(i).clone(), m2.label(j).clone()))
            .collect()
    }))
}

pub fn is_isomorphic(m1: &BinaryMatroid, m2: &BinaryMatroid) -> Result<bool> {
    Ok(find_isomorphism(m1, m2)?.is_some())
}

/// True when `map` is a bijection `E(m1) -> E(m2)` carrying the circuits of
/// `m1` exactly onto those of `m2`.
pub fn is_circuit_bijection(
    m1: &BinaryMatroid,
    m2: &BinaryMatroid,
    map: &BTreeMap<ElementLabel, ElementLabel>,
) -> Result<bool> {
    if map.len() != m1.len() || m1.len() != m2.len() {
        return Ok(false);
    }
    let mut images = HashSet::new();
    for (k, v) in map {
        if !m1.contains(k.as_str()) || !m2.contains(v.as_str()) || !images.insert(v) {
            return Ok(false);
        }
    }
    let mut mapped: Vec<u32> = Vec::new();
    for c in m1.circuits()? {
        let img: Vec<&ElementLabel> = c.iter().map(|l| &map[l]).collect();
        mapped.push(m2.mask_of(&img)?);
    }
    mapped.sort_unstable();
    Ok(mapped == m2.circuit_masks()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn empty_signature() {
        let s = signature(&BinaryMatroid::empty()).unwrap();
        assert_eq!((s.elements, s.rank, s.loops, s.coloops), (0, 0, 0, 0));
        assert!(s.circuit_sizes.is_empty() && s.profiles.is_empty());
    }

    #[test]
    fn k5_signature() {
        let s = signature(&Graph::complete(5).cycle_matroid()).unwrap();
        assert_eq!((s.elements, s.rank, s.loops, s.coloops), (10, 4, 0, 0));
        let count = |k| s.circuit_sizes.iter().filter(|&&x| x == k).count();
        assert_eq!((count(3), count(4), count(5)), (10, 15, 12));
    }

    #[test]
    fn reflexive_with_identity_available() {
        let k4 = Graph::complete(4).cycle_matroid();
        let map = find_isomorphism(&k4, &k4).unwrap().unwrap();
        assert!(is_circuit_bijection(&k4, &k4, &map).unwrap());
    }

    #[test]
    fn different_sizes_are_not_isomorphic() {
        let k4 = Graph::complete(4).cycle_matroid();
        let k5 = Graph::complete(5).cycle_matroid();
        assert!(!is_isomorphic(&k4, &k5).unwrap());
    }
}
