//! Non-abelian tensor squares of finite-dimensional Lie superalgebras.
//!
//! An algebra is given by structure constants over `Q` or `GF(p)`, `p > 3`.
//! From it the crate computes, by exact linear algebra:
//!
//! * the non-abelian tensor square `L ⊗ L` as an explicit Lie superalgebra,
//! * the exterior square `L ∧ L` and the square ideal `L □ L`,
//! * the universal quadratic functor `Γ(L/L²)`,
//! * the Schur multiplier dimension `dim(L ∧ L) − dim L²`,
//! * the upper bound `dim(L ⊗ L) ≤ (k+l−(r+s))(k+l−1)+2` for nilpotent `L`
//!   of dimension `(k|l)` with `dim L² = (r|s)`.
//!
//! With the default `parallel` feature, defect instantiation and family
//! sweeps run on rayon; without it everything runs on the calling thread.

pub mod bounds;
pub mod exactlin;
pub mod gamma;
pub mod parallel;
pub mod superalg;
pub mod tensor;

pub use exactlin::{Field, Scalar};
pub use parallel::Execution;
pub use superalg::{LieSuperAlgebra, SuperDim};
