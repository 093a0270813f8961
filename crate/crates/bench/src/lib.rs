//! Fixtures shared by the benchmarks in `benches/`.

use matroid_core::catalog::get_named;
use matroid_core::{built_in_case, BinaryMatroid, Gf2Matrix};

/// `name` from the catalog after its built-in certificate's operations.
pub fn case_host(name: &str) -> BinaryMatroid {
    let c = built_in_case(name).expect("built-in case");
    get_named(&c.base).unwrap().apply_minor_ops(&c.ops).unwrap()
}

/// Deterministic dense-ish matrix for rank timing.
pub fn pseudo_random_matrix(rows: usize, cols: usize, seed: u64) -> Gf2Matrix {
    let mut x = seed | 1;
    Gf2Matrix::from_fn(rows, cols, |_, _| {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        x & 1 == 1
    })
}
