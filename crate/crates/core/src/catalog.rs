//! Built-in matroids and the text matrix format.
//!
//! The 29 case matrices live in `data/*.mat`, written in the same format
//! that [`parse_matrix_file`] reads, so the transcriptions can be diffed
//! against their source directly.
//!
//! ```text
//! # comment
//! name g7
//! rows 6
//! cols 11
//! rowlabels r1 r2 r3 r4 r5 r6
//! collabels s1 s2 ... s11
//! 1 1 1 1 1 0 1 0 0 0 0
//! ...
//! ```

use std::fmt::Write as _;

use crate::error::{MatroidError, Result};
use crate::gf2::Gf2Matrix;
use crate::graph::Graph;
use crate::matroid::{BinaryMatroid, ElementLabel};

macro_rules! case_matrices {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../data/", $name, ".mat")))),*]
    };
}

/// Compact matrices of the 27 graphic cases and the two special matroids.
static CASE_MATRICES: &[(&str, &str)] = case_matrices!(
    "g1", "g2", "g3", "g4", "g5", "g6", "g7", "g8", "g9", "g10", "g11", "g12", "g13", "g14", "g15",
    "g16", "g18", "g20", "g21", "g22", "g23", "g24", "g25", "g26", "g27", "g28", "g29", "r15",
    "r16",
);

/// Standard minor targets and excluded minors.
pub const TARGET_NAMES: [&str; 6] = ["M(K5)", "M(K33)", "M*(K5)", "M*(K33)", "F7", "F7*"];

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub matroid: BinaryMatroid,
    pub provenance: &'static str,
}

/// Every catalog name, case matrices first.
pub fn names() -> Vec<&'static str> {
    CASE_MATRICES
        .iter()
        .map(|(n, _)| *n)
        .chain(TARGET_NAMES)
        .collect()
}

pub fn case_matrix_names() -> Vec<&'static str> {
    CASE_MATRICES.iter().map(|(n, _)| *n).collect()
}

/// Raw text of a built-in case matrix.
pub fn case_matrix_text(name: &str) -> Option<&'static str> {
    CASE_MATRICES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
}

/// Maps the accepted spellings of a catalog name to its canonical form,
/// e.g. `M_K33`, `grK33` and `K33` all resolve to `M(K33)`.
pub fn canonical_name(name: &str) -> Option<&'static str> {
    let key: String = name
        .chars()
        .filter(|c| !matches!(c, '(' | ')' | '_' | '{' | '}' | ',' | '-' | ' '))
        .flat_map(char::to_lowercase)
        .collect();
    let key = key.replace("star", "*").replace('#', "*");
    let found = match key.as_str() {
        "mk5" | "k5" | "grk5" => "M(K5)",
        "mk33" | "k33" | "grk33" => "M(K33)",
        "m*k5" | "k5*" | "grk5*" | "mk5*" => "M*(K5)",
        "m*k33" | "k33*" | "grk33*" | "mk33*" => "M*(K33)",
        "f7" => "F7",
        "f7*" => "F7*",
        other => {
            let other = other
                .strip_prefix("mg")
                .map_or(other.to_string(), |n| format!("g{n}"));
            let other = other
                .strip_prefix("mr")
                .map_or(other.clone(), |n| format!("r{n}"));
            return CASE_MATRICES.iter().map(|(n, _)| *n).find(|n| *n == other);
        }
    };
    Some(found)
}

/// A fresh copy of a built-in matroid.
pub fn get_named(name: &str) -> Result<BinaryMatroid> {
    let canonical =
        canonical_name(name).ok_or_else(|| MatroidError::UnknownName(name.to_string()))?;
    Ok(match canonical {
        "M(K5)" => Graph::complete(5).cycle_matroid(),
        "M(K33)" => Graph::complete_bipartite(3, 3).cycle_matroid(),
        "M*(K5)" => Graph::complete(5).cycle_matroid().dual(),
        "M*(K33)" => Graph::complete_bipartite(3, 3).cycle_matroid().dual(),
        "F7" => fano(),
        "F7*" => fano().dual(),
        case => {
            let text = case_matrix_text(case).expect("canonical names are in the table");
            parse_matrix_file(text)?.1
        }
    })
}

pub fn entries() -> Result<Vec<CatalogEntry>> {
    names()
        .into_iter()
        .map(|name| {
            let provenance = match name {
                "M(K5)" | "M(K33)" => "cycle matroid of the complete graph, canonical edge order",
                "M*(K5)" | "M*(K33)" => "dual of the cycle matroid",
                "F7" => "all nonzero vectors of GF(2)^3",
                "F7*" => "dual of F7",
                n if n.starts_with('r') => "compact matrix of the special matroid, data file",
                _ => "compact matrix of the graphic matroid, data file",
            };
            Ok(CatalogEntry {
                name,
                matroid: get_named(name)?,
                provenance,
            })
        })
        .collect()
}

/// The Fano matroid `[I_3 | A]`, with `A`'s columns 110, 101, 011, 111.
fn fano() -> BinaryMatroid {
    let a = Gf2Matrix::from_rows(&[[1, 1, 0, 1], [1, 0, 1, 1], [0, 1, 1, 1]]).expect("0/1 rows");
    BinaryMatroid::from_parts(a, &["f1", "f2", "f3"], &["f4", "f5", "f6", "f7"])
        .expect("distinct labels")
}

fn parse_err(line: usize, msg: impl Into<String>) -> MatroidError {
    MatroidError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses the text matrix format, returning the declared name and matroid.
pub fn parse_matrix_file(text: &str) -> Result<(String, BinaryMatroid)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let last_line = text.lines().count().max(1);

    let mut field = |key: &str| -> Result<(usize, Vec<&str>)> {
        let (no, line) = lines
            .next()
            .ok_or_else(|| parse_err(last_line, format!("missing `{key}` line")))?;
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some(k) if k == key => Ok((no, toks.collect())),
            Some(k) => Err(parse_err(no, format!("expected `{key}`, found `{k}`"))),
            None => unreachable!("blank lines are filtered"),
        }
    };
    let count = |no: usize, key: &str, toks: &[&str]| -> Result<usize> {
        match toks {
            [n] => n.parse().map_err(|_| {
                parse_err(
                    no,
                    format!("`{key}` needs a non-negative integer, found `{n}`"),
                )
            }),
            _ => Err(parse_err(no, format!("`{key}` needs exactly one value"))),
        }
    };

    let (no, name) = field("name")?;
    let name = match name.as_slice() {
        [n] => n.to_string(),
        _ => return Err(parse_err(no, "`name` needs exactly one token")),
    };
    let (no, toks) = field("rows")?;
    let k = count(no, "rows", &toks)?;
    let (no, toks) = field("cols")?;
    let n = count(no, "cols", &toks)?;
    let labels =
        |no: usize, toks: Vec<&str>, want: usize, what: &str| -> Result<Vec<ElementLabel>> {
            if toks.len() != want {
                return Err(parse_err(
                    no,
                    format!("{} {what} labels, expected {want}", toks.len()),
                ));
            }
            toks.into_iter()
                .map(|t| ElementLabel::new(t).map_err(|e| parse_err(no, e.to_string())))
                .collect()
        };
    let (no, toks) = field("rowlabels")?;
    let basis = labels(no, toks, k, "row")?;
    let (no, toks) = field("collabels")?;
    let cobasis = labels(no, toks, n, "column")?;

    let mut rows = Vec::with_capacity(k);
    // with no columns the rows are empty and never appear as lines
    let row_lines = if n == 0 { 0 } else { k };
    for r in 0..row_lines {
        let (no, line) = lines
            .next()
            .ok_or_else(|| parse_err(last_line, format!("expected {k} matrix rows, found {r}")))?;
        let entries: Vec<u8> = line
            .split_whitespace()
            .map(|t| match t {
                "0" => Ok(0),
                "1" => Ok(1),
                other => Err(parse_err(no, format!("entry `{other}` is not 0 or 1"))),
            })
            .collect::<Result<_>>()?;
        if entries.len() != n {
            return Err(parse_err(
                no,
                format!("row has {} entries, expected {n}", entries.len()),
            ));
        }
        rows.push(entries);
    }
    if let Some((no, _)) = lines.next() {
        return Err(parse_err(no, "unexpected content after the matrix rows"));
    }
    let a = if k == 0 || n == 0 {
        Gf2Matrix::zeros(k, n)
    } else {
        Gf2Matrix::from_rows(&rows)?
    };
    let m = BinaryMatroid::from_standard_form(a, basis, cobasis)
        .map_err(|e| parse_err(1, e.to_string()))?;
    Ok((name, m))
}

pub fn write_matrix_file(name: &str, m: &BinaryMatroid) -> String {
    let join = |ls: &[ElementLabel]| ls.iter().map(|l| l.as_str()).collect::<Vec<_>>().join(" ");
    let mut out = String::new();
    let _ = writeln!(out, "name {name}");
    let _ = writeln!(out, "rows {}", m.rank());
    let _ = writeln!(out, "cols {}", m.corank());
    let _ = writeln!(out, "rowlabels {}", join(m.basis_labels()).trim_end());
    let _ = writeln!(out, "collabels {}", join(m.cobasis_labels()).trim_end());
    if m.corank() > 0 {
        out.push_str(&m.compact_matrix().to_string());
    }
    out
}
