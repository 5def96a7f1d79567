//! Non-abelian tensor square `L ⊗ L` with `L` acting on itself by its bracket.
//!
//! The tensor square is presented by generators `x_i ⊗ x_j` and relations.
//! Because the bracket of two generators is again a generator, the
//! presentation collapses to a quotient of the symbol span by a relation
//! subspace `R`. [`closure`] computes `R` as a linear fixpoint; the
//! quotient, with the induced bracket, is returned as an ordinary
//! [`LieSuperAlgebra`].

mod closure;
mod square;
mod symbols;

pub use closure::{closure, exterior_seeds, pair_relations, LogEntry, PairRelation, RelationSystem, Rule};
pub use square::{
    analyze, central_quotient_inequality, exterior_square, exterior_square_with, exterior_two_way, module_tensor,
    multiplier_dim, square_ideal, square_ideal_of, tensor_square, tensor_square_with, Analysis, SquareIdeal,
    TensorSquareResult,
};
pub use symbols::{BracketTable, SymbolSpace};

use serde::Serialize;
use thiserror::Error;

use crate::exactlin::LinAlgError;
use crate::superalg::{AlgebraError, SuperDim};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TensorKind {
    Tensor,
    Exterior,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("{0} is not nilpotent")]
    NonNilpotent(String),
    #[error("the square ideal is not central in the tensor square")]
    NotCentral,
    #[error("exterior square mismatch: direct closure gives {direct}, tensor square modulo square ideal gives {via_quotient}")]
    ExteriorMismatch { direct: SuperDim, via_quotient: SuperDim },
    #[error("negative multiplier: dim L∧L = {exterior} but dim L² = {derived}")]
    NegativeMultiplier { exterior: SuperDim, derived: SuperDim },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}
