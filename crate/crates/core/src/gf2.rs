//! Dense bit-packed matrices over GF(2).
//!
//! Rows are stored as runs of `u64` words, so row reduction is word-parallel
//! XOR. Values are immutable once built: every operation returns a new
//! matrix.

use std::fmt;

use crate::error::{MatroidError, Result};

const WORD: usize = 64;

/// A 0/1 matrix over GF(2), stored row-major with one bit per entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    n_rows: usize,
    n_cols: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        let words_per_row = n_cols.div_ceil(WORD);
        Self {
            n_rows,
            n_cols,
            words_per_row,
            bits: vec![0; n_rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i == j)
    }

    /// Builds an `n_rows × n_cols` matrix whose entry `(i, j)` is `f(i, j)`.
    pub fn from_fn(n_rows: usize, n_cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(n_rows, n_cols);
        for i in 0..n_rows {
            for j in 0..n_cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from rows of 0/1 integers. All rows must have equal
    /// length and every entry must be 0 or 1.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(n_rows, n_cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n_cols {
                return Err(MatroidError::input(format!(
                    "row {i} has {} entries, expected {n_cols}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => m.set(i, j, true),
                    other => {
                        return Err(MatroidError::input(format!(
                            "entry ({i}, {j}) is {other}, expected 0 or 1"
                        )))
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    /// Entry `(i, j)`.
    ///
    /// # Panics
    /// Panics if the index is outside the matrix.
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            i < self.n_rows && j < self.n_cols,
            "entry ({i}, {j}) outside {}x{} matrix",
            self.n_rows,
            self.n_cols
        );
        (self.bits[i * self.words_per_row + j / WORD] >> (j % WORD)) & 1 == 1
    }

    pub fn try_get(&self, i: usize, j: usize) -> Result<bool> {
        self.check_row(i)?;
        self.check_col(j)?;
        Ok(self.get(i, j))
    }

    fn set(&mut self, i: usize, j: usize, value: bool) {
        let w = &mut self.bits[i * self.words_per_row + j / WORD];
        if value {
            *w |= 1 << (j % WORD);
        } else {
            *w &= !(1 << (j % WORD));
        }
    }

    fn row_words(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    fn check_row(&self, i: usize) -> Result<()> {
        if i >= self.n_rows {
            return Err(MatroidError::input(format!(
                "row index {i} out of range (matrix has {} rows)",
                self.n_rows
            )));
        }
        Ok(())
    }

    fn check_col(&self, j: usize) -> Result<()> {
        if j >= self.n_cols {
            return Err(MatroidError::input(format!(
                "column index {j} out of range (matrix has {} columns)",
                self.n_cols
            )));
        }
        Ok(())
    }

    pub fn row_is_zero(&self, i: usize) -> bool {
        self.row_words(i).iter().all(|&w| w == 0)
    }

    pub fn col_is_zero(&self, j: usize) -> bool {
        (0..self.n_rows).all(|i| !self.get(i, j))
    }

    /// Lowest column index holding a 1 in row `i`.
    pub fn first_one_in_row(&self, i: usize) -> Option<usize> {
        self.row_words(i)
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * WORD + w.trailing_zeros() as usize)
    }

    /// Lowest row index holding a 1 in column `j`.
    pub fn first_one_in_col(&self, j: usize) -> Option<usize> {
        (0..self.n_rows).find(|&i| self.get(i, j))
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row_words(i)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn col_weight(&self, j: usize) -> usize {
        (0..self.n_rows).filter(|&i| self.get(i, j)).count()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n_cols, self.n_rows, |i, j| self.get(j, i))
    }

    pub fn remove_row(&self, r: usize) -> Self {
        let rows: Vec<usize> = (0..self.n_rows).filter(|&i| i != r).collect();
        Self::from_fn(rows.len(), self.n_cols, |i, j| self.get(rows[i], j))
    }

    pub fn remove_col(&self, c: usize) -> Self {
        let cols: Vec<usize> = (0..self.n_cols).filter(|&j| j != c).collect();
        Self::from_fn(self.n_rows, cols.len(), |i, j| self.get(i, cols[j]))
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        if self.n_rows != other.n_rows {
            return Err(MatroidError::input(format!(
                "cannot stack {} rows next to {} rows",
                self.n_rows, other.n_rows
            )));
        }
        let left = self.n_cols;
        Ok(Self::from_fn(self.n_rows, left + other.n_cols, |i, j| {
            if j < left {
                self.get(i, j)
            } else {
                other.get(i, j - left)
            }
        }))
    }

    /// GF(2) rank of the submatrix made of the selected columns.
    /// Repeated indices are allowed and do not change the rank.
    pub fn rank_of_columns(&self, cols: &[usize]) -> Result<usize> {
        for &c in cols {
            self.check_col(c)?;
        }
        let sub = Self::from_fn(self.n_rows, cols.len(), |i, j| self.get(i, cols[j]));
        Ok(sub.into_rank())
    }

    pub fn rank(&self) -> usize {
        self.clone().into_rank()
    }

    fn into_rank(mut self) -> usize {
        let wpr = self.words_per_row;
        let mut rank = 0;
        for c in 0..self.n_cols {
            if rank == self.n_rows {
                break;
            }
            let (word, bit) = (c / WORD, 1u64 << (c % WORD));
            let Some(p) = (rank..self.n_rows).find(|&i| self.bits[i * wpr + word] & bit != 0)
            else {
                continue;
            };
            if p != rank {
                for k in 0..wpr {
                    self.bits.swap(p * wpr + k, rank * wpr + k);
                }
            }
            for i in rank + 1..self.n_rows {
                if self.bits[i * wpr + word] & bit != 0 {
                    for k in word..wpr {
                        let v = self.bits[rank * wpr + k];
                        self.bits[i * wpr + k] ^= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Basis exchange on a compact representation: row `i` and column `j`
    /// are kept, every other entry becomes `a[k][l] ^ (a[k][j] & a[i][l])`.
    ///
    /// The caller swaps the labels of row `i` and column `j`.
    pub fn pivot(&self, i: usize, j: usize) -> Result<Self> {
        self.check_row(i)?;
        self.check_col(j)?;
        if !self.get(i, j) {
            return Err(MatroidError::ZeroPivot { row: i, col: j });
        }
        let mut out = self.clone();
        let wpr = self.words_per_row;
        let pivot_row: Vec<u64> = {
            let mut r = self.row_words(i).to_vec();
            // column j itself must stay untouched
            r[j / WORD] &= !(1u64 << (j % WORD));
            r
        };
        for k in 0..self.n_rows {
            if k != i && self.get(k, j) {
                for (w, p) in out.bits[k * wpr..(k + 1) * wpr].iter_mut().zip(&pivot_row) {
                    *w ^= p;
                }
            }
        }
        Ok(out)
    }

    /// Column `j` packed into a word, bit `i` = entry `(i, j)`.
    /// Only meaningful when the matrix has at most 64 rows.
    pub(crate) fn column_word(&self, j: usize) -> u64 {
        debug_assert!(self.n_rows <= WORD);
        (0..self.n_rows).fold(0, |acc, i| acc | (u64::from(self.get(i, j)) << i))
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.n_rows)
            .map(|i| (0..self.n_cols).map(|j| u8::from(self.get(i, j))).collect())
            .collect()
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.n_rows, self.n_cols)?;
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n_rows {
            let line: Vec<&str> = (0..self.n_cols)
                .map(|j| if self.get(i, j) { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Row-reduced basis of a subspace of GF(2)^64, one word per vector.
///
/// Kept in reduced echelon form, so `reduce` returns a canonical
/// representative of a vector's coset.
#[derive(Clone, Debug, Default)]
pub(crate) struct XorBasis {
    rows: Vec<u64>,
}

impl XorBasis {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn len(&self) -> usize {
        self.rows.len()
    }

    pub(crate) fn reduce(&self, mut v: u64) -> u64 {
        for &r in &self.rows {
            let lead = 63 - r.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= r;
            }
        }
        v
    }

    /// Adds `v` to the span; returns false when it was already there.
    pub(crate) fn insert(&mut self, v: u64) -> bool {
        let v = self.reduce(v);
        if v == 0 {
            return false;
        }
        let lead = 63 - v.leading_zeros();
        for r in &mut self.rows {
            if *r >> lead & 1 == 1 {
                *r ^= v;
            }
        }
        let pos = self
            .rows
            .partition_point(|&r| r.leading_zeros() < v.leading_zeros());
        self.rows.insert(pos, v);
        true
    }
}

pub(crate) fn rank_of_words(vs: impl IntoIterator<Item = u64>) -> usize {
    let mut b = XorBasis::new();
    for v in vs {
        b.insert(v);
    }
    b.len()
}
