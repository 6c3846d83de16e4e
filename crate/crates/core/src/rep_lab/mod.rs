//! Explicit matrix representations of `D4`, used as an oracle for the
//! closed-form table.
//!
//! A [`Representation`] stores the actions of the generators `a, b, c, d`.
//! Everything built here keeps `b` and `c` diagonal ("weight basis"), which
//! lets kernels, Hom spaces and splittings work one weight block at a time.
//! The four weights are indexed by `w = [b = -1] + 2·[c = -1]`; `a` and `d`
//! map weight `w` to `w ^ 3`, and `bc` acts by `+1` on weights 0 and 3 and
//! by `-1` on weights 1 and 2.

mod braiding;
mod build;
mod cover;
mod decompose;
mod hom;
mod rep;
mod series;
mod util;

use thiserror::Error;

use crate::label::ModuleLabel;
use crate::linalg::LinalgError;

pub use braiding::{braiding_check, braiding_map, RMatrixElement, RMatrixTerm};
pub use build::build;
pub use cover::{cosyzygy, projective_cover_map, syzygy};
pub use decompose::{decompose, decompose_seeded, recover_eta};
pub use hom::{find_isomorphism, hom_space, is_isomorphic, is_isomorphic_seeded, HomSpace};
pub use rep::{check_relations, direct_sum, dual, tensor, Representation};
pub use series::{loewy_length, radical, socle, top_dimension};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_d4d4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("generator matrices must be {dim}x{dim}")]
    Shape { dim: usize },
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("action of b and c is not diagonalizable with eigenvalues +-1")]
    NotSemisimple,
    #[error("module is not of (s,s)-type: {0}")]
    NotBand(String),
    #[error("no splitting endomorphism found for a {dim}-dimensional summand with top {top} and socle {socle}")]
    Stalled {
        dim: usize,
        top: usize,
        socle: usize,
    },
    #[error("summand could not be certified as {0}")]
    Uncertified(ModuleLabel),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
