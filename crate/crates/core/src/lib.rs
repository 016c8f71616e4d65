//! Striped Smith-Waterman local alignment with two ways of resolving the
//! cross-lane vertical-gap dependency: the lazy-F correction loop and a
//! log-step weighted max-scan.
//!
//! All kernels run on the [`vector::Backend`] abstraction, whose reference
//! implementation counts every vector operation; [`oracle`] holds the scalar
//! ground truth they are checked against.

pub mod alphabet;
pub mod error;
pub mod harness;
pub mod kernels;
pub mod oracle;
pub mod profile;
pub mod scoring;
pub mod vector;

pub use alphabet::Alphabet;
pub use error::{Error, Result};
pub use kernels::{align_lazyf, align_scan, AlignmentResult, CorrectionStats};
pub use profile::QueryProfile;
pub use scoring::{ScoringScheme, SubstitutionMatrix};
pub use vector::{Backend, OpCounters, Reference, ScoreVector, VectorSpec, SCORE_MAX};
