//! Labeled binary matroids in standard form `[I | A]`.
//!
//! Rows of `A` belong to basis elements, columns to cobasis elements. Every
//! user-facing reference to an element goes through its label; positional
//! indices never leave this module.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{MatroidError, Result};
use crate::gf2::{rank_of_words, Gf2Matrix, XorBasis};

/// Largest ground set accepted by circuit enumeration.
pub const MAX_CIRCUIT_ELEMENTS: usize = 24;

/// Name of a matroid element, e.g. `r4` or `s11`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct ElementLabel(String);

impl ElementLabel {
    pub fn new(s: impl Into<String>) -> Result<Self> {
        let s = s.into();
        if s.is_empty() {
            return Err(MatroidError::input("element label is empty"));
        }
        if s.chars().any(|c| c.is_whitespace() || c == ',') {
            return Err(MatroidError::input(format!(
                "element label `{s}` contains whitespace or a comma"
            )));
        }
        Ok(Self(s))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ElementLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for ElementLabel {
    type Err = MatroidError;
    fn from_str(s: &str) -> Result<Self> {
        Self::new(s)
    }
}

impl TryFrom<String> for ElementLabel {
    type Error = MatroidError;
    fn try_from(s: String) -> Result<Self> {
        Self::new(s)
    }
}

impl From<ElementLabel> for String {
    fn from(l: ElementLabel) -> String {
        l.0
    }
}

impl AsRef<str> for ElementLabel {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MinorOpKind {
    Contract,
    Delete,
}

/// One deletion or contraction, addressed by label.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MinorOp {
    #[serde(rename = "op")]
    pub kind: MinorOpKind,
    pub element: ElementLabel,
}

impl MinorOp {
    pub fn contract(element: &str) -> Result<Self> {
        Ok(Self {
            kind: MinorOpKind::Contract,
            element: ElementLabel::new(element)?,
        })
    }

    pub fn delete(element: &str) -> Result<Self> {
        Ok(Self {
            kind: MinorOpKind::Delete,
            element: ElementLabel::new(element)?,
        })
    }
}

impl fmt::Display for MinorOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            MinorOpKind::Contract => write!(f, "/{}", self.element),
            MinorOpKind::Delete => write!(f, "\\{}", self.element),
        }
    }
}

/// How a single minor operation was realized on the representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "path")]
pub enum OpEffect {
    /// Basis element: its row was removed.
    ContractedBasis,
    /// Cobasis element: pivoted into the basis (swapping with `pivot_with`),
    /// then its row was removed.
    ContractedCobasis { pivot_with: ElementLabel },
    /// The element was a loop; contraction removed it like a deletion.
    LoopContractedAsDeletion,
    /// Cobasis element: its column was removed.
    DeletedCobasis,
    /// Basis element: pivoted out of the basis (swapping with `pivot_with`),
    /// then its column was removed.
    DeletedBasis { pivot_with: ElementLabel },
    /// The element was a coloop; deletion removed it like a contraction.
    ColoopDeletedAsContraction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpTrace {
    pub op: MinorOp,
    pub effect: OpEffect,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    Basis(usize),
    Cobasis(usize),
}

/// A binary matroid given by a labeled compact representation `A`, so that
/// `[I | A]` represents it with the identity columns labeled by the basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryMatroid {
    basis: Vec<ElementLabel>,
    cobasis: Vec<ElementLabel>,
    a: Gf2Matrix,
}

impl BinaryMatroid {
    pub fn from_standard_form(
        a: Gf2Matrix,
        basis: Vec<ElementLabel>,
        cobasis: Vec<ElementLabel>,
    ) -> Result<Self> {
        if basis.len() != a.n_rows() {
            return Err(MatroidError::input(format!(
                "{} basis labels for {} rows",
                basis.len(),
                a.n_rows()
            )));
        }
        if cobasis.len() != a.n_cols() {
            return Err(MatroidError::input(format!(
                "{} cobasis labels for {} columns",
                cobasis.len(),
                a.n_cols()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for l in basis.iter().chain(&cobasis) {
            if !seen.insert(l) {
                return Err(MatroidError::input(format!(
                    "duplicate element label `{l}`"
                )));
            }
        }
        Ok(Self { basis, cobasis, a })
    }

    /// Convenience constructor from string labels.
    pub fn from_parts<S: AsRef<str>>(a: Gf2Matrix, basis: &[S], cobasis: &[S]) -> Result<Self> {
        let conv = |v: &[S]| -> Result<Vec<ElementLabel>> {
            v.iter().map(|s| ElementLabel::new(s.as_ref())).collect()
        };
        Self::from_standard_form(a, conv(basis)?, conv(cobasis)?)
    }

    pub fn empty() -> Self {
        Self {
            basis: Vec::new(),
            cobasis: Vec::new(),
            a: Gf2Matrix::zeros(0, 0),
        }
    }

    pub fn basis_labels(&self) -> &[ElementLabel] {
        &self.basis
    }

    pub fn cobasis_labels(&self) -> &[ElementLabel] {
        &self.cobasis
    }

    pub fn compact_matrix(&self) -> &Gf2Matrix {
        &self.a
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.basis.len() + self.cobasis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Rank of the whole ground set.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn corank(&self) -> usize {
        self.cobasis.len()
    }

    /// Ground set in representation order: basis labels, then cobasis labels.
    pub fn elements(&self) -> impl Iterator<Item = &ElementLabel> {
        self.basis.iter().chain(&self.cobasis)
    }

    pub fn label(&self, index: usize) -> &ElementLabel {
        if index < self.basis.len() {
            &self.basis[index]
        } else {
            &self.cobasis[index - self.basis.len()]
        }
    }

    pub fn contains(&self, label: &str) -> bool {
        self.position(label).is_some()
    }

    pub fn position(&self, label: &str) -> Option<Position> {
        if let Some(i) = self.basis.iter().position(|l| l.as_str() == label) {
            return Some(Position::Basis(i));
        }
        self.cobasis
            .iter()
            .position(|l| l.as_str() == label)
            .map(Position::Cobasis)
    }

    /// Index of `label` in [`elements`](Self::elements) order.
    pub fn index_of(&self, label: &str) -> Result<usize> {
        match self.position(label) {
            Some(Position::Basis(i)) => Ok(i),
            Some(Position::Cobasis(j)) => Ok(self.basis.len() + j),
            None => Err(MatroidError::UnknownLabel(label.to_string())),
        }
    }

    fn indices_of<S: AsRef<str>>(&self, subset: &[S]) -> Result<Vec<usize>> {
        subset.iter().map(|s| self.index_of(s.as_ref())).collect()
    }

    /// The full representation `[I | A]`.
    pub fn full_matrix(&self) -> Gf2Matrix {
        Gf2Matrix::identity(self.rank())
            .hstack(&self.a)
            .expect("identity has matching row count")
    }

    /// Rank of a subset of the ground set.
    pub fn rank_of<S: AsRef<str>>(&self, subset: &[S]) -> Result<usize> {
        let idx = self.indices_of(subset)?;
        self.full_matrix().rank_of_columns(&idx)
    }

    pub fn is_circuit<S: AsRef<str>>(&self, subset: &[S]) -> Result<bool> {
        let mut idx = self.indices_of(subset)?;
        if idx.is_empty() {
            return Err(MatroidError::input("circuit test on an empty set"));
        }
        idx.sort_unstable();
        idx.dedup();
        let full = self.full_matrix();
        let k = idx.len();
        if full.rank_of_columns(&idx)? != k - 1 {
            return Ok(false);
        }
        for skip in 0..k {
            let rest: Vec<usize> = idx
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != skip)
                .map(|(_, &i)| i)
                .collect();
            if full.rank_of_columns(&rest)? != k - 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Loops: cobasis elements with a zero column.
    pub fn loops(&self) -> Vec<&ElementLabel> {
        (0..self.a.n_cols())
            .filter(|&j| self.a.col_is_zero(j))
            .map(|j| &self.cobasis[j])
            .collect()
    }

    /// Coloops: basis elements with a zero row.
    pub fn coloops(&self) -> Vec<&ElementLabel> {
        (0..self.a.n_rows())
            .filter(|&i| self.a.row_is_zero(i))
            .map(|i| &self.basis[i])
            .collect()
    }

    pub fn dual(&self) -> Self {
        Self {
            basis: self.cobasis.clone(),
            cobasis: self.basis.clone(),
            a: self.a.transpose(),
        }
    }

    /// Exchanges basis element `row_label` with cobasis element `col_label`.
    /// The represented matroid is unchanged.
    pub fn pivot(&self, row_label: &str, col_label: &str) -> Result<Self> {
        let (Some(Position::Basis(i)), Some(Position::Cobasis(j))) =
            (self.position(row_label), self.position(col_label))
        else {
            return Err(MatroidError::input(format!(
                "pivot needs a basis and a cobasis element, got `{row_label}` and `{col_label}`"
            )));
        };
        self.pivot_at(i, j)
    }

    fn pivot_at(&self, i: usize, j: usize) -> Result<Self> {
        let a = self.a.pivot(i, j)?;
        let mut basis = self.basis.clone();
        let mut cobasis = self.cobasis.clone();
        std::mem::swap(&mut basis[i], &mut cobasis[j]);
        Ok(Self { basis, cobasis, a })
    }

    fn without_row(&self, i: usize) -> Self {
        let mut basis = self.basis.clone();
        basis.remove(i);
        Self {
            basis,
            cobasis: self.cobasis.clone(),
            a: self.a.remove_row(i),
        }
    }

    fn without_col(&self, j: usize) -> Self {
        let mut cobasis = self.cobasis.clone();
        cobasis.remove(j);
        Self {
            basis: self.basis.clone(),
            cobasis,
            a: self.a.remove_col(j),
        }
    }

    /// Applies one operation and reports which path it took.
    pub fn apply_traced(&self, op: &MinorOp) -> Result<(Self, OpEffect)> {
        if self.is_empty() {
            return Err(MatroidError::input(format!(
                "cannot apply {op} to the empty matroid"
            )));
        }
        let pos = self
            .position(op.element.as_str())
            .ok_or_else(|| MatroidError::UnknownLabel(op.element.to_string()))?;
        Ok(match (op.kind, pos) {
            (MinorOpKind::Contract, Position::Basis(i)) => {
                (self.without_row(i), OpEffect::ContractedBasis)
            }
            (MinorOpKind::Contract, Position::Cobasis(j)) => match self.a.first_one_in_col(j) {
                None => (self.without_col(j), OpEffect::LoopContractedAsDeletion),
                Some(i) => {
                    let pivot_with = self.basis[i].clone();
                    (
                        self.pivot_at(i, j)?.without_row(i),
                        OpEffect::ContractedCobasis { pivot_with },
                    )
                }
            },
            (MinorOpKind::Delete, Position::Cobasis(j)) => {
                (self.without_col(j), OpEffect::DeletedCobasis)
            }
            (MinorOpKind::Delete, Position::Basis(i)) => match self.a.first_one_in_row(i) {
                None => (self.without_row(i), OpEffect::ColoopDeletedAsContraction),
                Some(j) => {
                    let pivot_with = self.cobasis[j].clone();
                    (
                        self.pivot_at(i, j)?.without_col(j),
                        OpEffect::DeletedBasis { pivot_with },
                    )
                }
            },
        })
    }

    pub fn apply(&self, op: &MinorOp) -> Result<Self> {
        self.apply_traced(op).map(|(m, _)| m)
    }

    /// Applies `ops` left to right, recording the path each one took.
    pub fn apply_minor_ops_traced(&self, ops: &[MinorOp]) -> Result<(Self, Vec<OpTrace>)> {
        let mut m = self.clone();
        let mut trace = Vec::with_capacity(ops.len());
        for op in ops {
            let (next, effect) = m.apply_traced(op)?;
            trace.push(OpTrace {
                op: op.clone(),
                effect,
            });
            m = next;
        }
        Ok((m, trace))
    }

    pub fn apply_minor_ops(&self, ops: &[MinorOp]) -> Result<Self> {
        self.apply_minor_ops_traced(ops).map(|(m, _)| m)
    }

    pub fn contract<S: AsRef<str>>(&self, labels: &[S]) -> Result<Self> {
        let ops: Vec<MinorOp> = labels
            .iter()
            .map(|l| MinorOp::contract(l.as_ref()))
            .collect::<Result<_>>()?;
        self.apply_minor_ops(&ops)
    }

    pub fn delete<S: AsRef<str>>(&self, labels: &[S]) -> Result<Self> {
        let ops: Vec<MinorOp> = labels
            .iter()
            .map(|l| MinorOp::delete(l.as_ref()))
            .collect::<Result<_>>()?;
        self.apply_minor_ops(&ops)
    }

    /// Renames elements; labels missing from `map` keep their name.
    pub fn relabel(&self, map: &HashMap<ElementLabel, ElementLabel>) -> Result<Self> {
        let conv = |v: &[ElementLabel]| -> Vec<ElementLabel> {
            v.iter().map(|l| map.get(l).unwrap_or(l).clone()).collect()
        };
        Self::from_standard_form(self.a.clone(), conv(&self.basis), conv(&self.cobasis))
    }

    /// Each element's column of `[I | A]` packed into a word.
    pub(crate) fn element_words(&self) -> Result<Vec<u64>> {
        if self.rank() > 64 {
            return Err(MatroidError::Capacity {
                what: "matroid rank",
                actual: self.rank(),
                limit: 64,
            });
        }
        Ok((0..self.rank())
            .map(|i| 1u64 << i)
            .chain((0..self.corank()).map(|j| self.a.column_word(j)))
            .collect())
    }

    /// Circuits as bitmasks over [`elements`](Self::elements) order.
    pub fn circuit_masks(&self) -> Result<Vec<u32>> {
        if self.len() > MAX_CIRCUIT_ELEMENTS {
            return Err(MatroidError::Capacity {
                what: "circuit enumeration ground set",
                actual: self.len(),
                limit: MAX_CIRCUIT_ELEMENTS,
            });
        }
        Ok(circuits_of_words(&self.element_words()?))
    }

    /// All circuits, each listed in ground-set order.
    pub fn circuits(&self) -> Result<Vec<Vec<ElementLabel>>> {
        Ok(self
            .circuit_masks()?
            .into_iter()
            .map(|m| self.labels_of_mask(m))
            .collect())
    }

    pub fn cocircuits(&self) -> Result<Vec<Vec<ElementLabel>>> {
        let d = self.dual();
        let mut out: Vec<Vec<ElementLabel>> = d
            .circuits()?
            .into_iter()
            .map(|c| {
                let mut c = c;
                c.sort_by_key(|l| self.index_of(l.as_str()).expect("dual has same ground set"));
                c
            })
            .collect();
        out.sort_by_key(|c| self.mask_of(c).expect("labels come from this matroid"));
        Ok(out)
    }

    pub(crate) fn labels_of_mask(&self, mask: u32) -> Vec<ElementLabel> {
        (0..self.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.label(i).clone())
            .collect()
    }

    pub(crate) fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<u32> {
        let mut m = 0u32;
        for l in labels {
            let i = self.index_of(l.as_ref())?;
            if i >= 32 {
                return Err(MatroidError::Capacity {
                    what: "element mask",
                    actual: self.len(),
                    limit: 32,
                });
            }
            m |= 1 << i;
        }
        Ok(m)
    }
}

/// Circuits of the vector matroid on `words` (at most 32 vectors), as
/// bitmasks, sorted ascending.
///
/// Enumerates the cycle space (kernel of the representation) and keeps the
/// supports `S` with `rank(S) = |S| - 1`, which are exactly the circuits of a
/// binary matroid.
pub(crate) fn circuits_of_words(words: &[u64]) -> Vec<u32> {
    debug_assert!(words.len() <= 32);
    let mut pivots: Vec<(u64, u32)> = Vec::new();
    let mut kernel: Vec<u32> = Vec::new();
    for (i, &w) in words.iter().enumerate() {
        let (mut v, mut c) = (w, 1u32 << i);
        loop {
            if v == 0 {
                kernel.push(c);
                break;
            }
            let lead = 63 - v.leading_zeros();
            match pivots.iter().find(|(p, _)| 63 - p.leading_zeros() == lead) {
                Some(&(p, pc)) => {
                    v ^= p;
                    c ^= pc;
                }
                None => {
                    pivots.push((v, c));
                    break;
                }
            }
        }
    }
    let k = kernel.len();
    let mut out = Vec::new();
    let mut cycle = 0u32;
    // Gray-code walk over the nonzero elements of the cycle space.
    for step in 1u64..(1u64 << k) {
        cycle ^= kernel[step.trailing_zeros() as usize];
        let size = cycle.count_ones() as usize;
        let rank = rank_of_words(
            (0..words.len())
                .filter(|&i| cycle >> i & 1 == 1)
                .map(|i| words[i]),
        );
        if rank + 1 == size {
            out.push(cycle);
        }
    }
    out.sort_unstable();
    out
}

/// Rank of a bitmask subset of `words`.
pub(crate) fn rank_of_mask(words: &[u64], mask: u32) -> usize {
    let mut b = XorBasis::new();
    for (i, &w) in words.iter().enumerate() {
        if mask >> i & 1 == 1 {
            b.insert(w);
        }
    }
    b.len()
}
