use serde::Serialize;
use supertensor::bounds::{check_bound_with, BoundError};
use supertensor::tensor::{analyze, Analysis};
use supertensor::{Execution, LieSuperAlgebra, SuperDim};

/// Machine-readable summary of one algebra. Super-dimensions are `[even, odd]`.
#[derive(Debug, Serialize)]
pub struct Report {
    pub name: String,
    pub field: String,
    pub dim: [usize; 2],
    pub derived: [usize; 2],
    pub center: [usize; 2],
    pub nilpotency_class: Option<usize>,
    pub tensor: [usize; 2],
    pub tensor_abelian: bool,
    pub exterior: [usize; 2],
    pub square: [usize; 2],
    pub gamma: [usize; 2],
    pub multiplier: [usize; 2],
    pub bound: Option<usize>,
    pub actual: usize,
    pub slack: Option<i64>,
    pub equality: Option<bool>,
    pub classification: Option<String>,
}

fn pair(d: SuperDim) -> [usize; 2] {
    d.pair()
}

impl Report {
    /// Runs every computation on `l`. Bound fields stay empty for abelian input.
    pub fn build(l: &LieSuperAlgebra, exec: Execution) -> Result<Report, BoundError> {
        let a: Analysis = analyze(l, exec).map_err(BoundError::from)?;
        let bound = if l.is_abelian() {
            None
        } else {
            Some(check_bound_with(l, exec)?)
        };
        Ok(Report {
            name: a.name,
            field: l.field().to_string(),
            dim: pair(a.dim),
            derived: pair(a.derived),
            center: pair(a.center),
            nilpotency_class: a.nilpotency_class,
            tensor: pair(a.tensor),
            tensor_abelian: a.tensor_abelian,
            exterior: pair(a.exterior),
            square: pair(a.square),
            gamma: pair(a.gamma),
            multiplier: pair(a.multiplier),
            bound: bound.as_ref().map(|b| b.bound),
            actual: a.tensor.total(),
            slack: bound.as_ref().map(|b| b.slack),
            equality: bound.as_ref().map(|b| b.equality),
            classification: a.classification.map(|t| t.to_string()),
        })
    }
}
