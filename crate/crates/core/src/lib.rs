//! Binary matroids over GF(2): standard-form representations, minors,
//! isomorphism, minor search with checkable witnesses, and replay of
//! minor-containment certificates.

pub mod catalog;
pub mod certify;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod iso;
pub mod matroid;
pub mod minor;

pub use certify::{
    built_in_case, built_in_cases, load_certificates, replay_all, replay_case, CertificateCase,
    ClaimKind, ReplayReport, ReplaySummary,
};
pub use error::{MatroidError, Result};
pub use gf2::Gf2Matrix;
pub use graph::Graph;
pub use iso::{find_isomorphism, is_isomorphic, signature, IsoSignature};
pub use matroid::{BinaryMatroid, ElementLabel, MinorOp, MinorOpKind, OpEffect, OpTrace, Position};
pub use minor::{
    check_graphic_cocircuits, covering_cocircuit_witness, find_minor_witness, is_graphic,
    verify_witness, MinorWitness,
};
