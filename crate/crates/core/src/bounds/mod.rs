//! The upper bound `dim(L⊗L) ≤ (k+l−(r+s))(k+l−1)+2` as an executable check.
//!
//! [`check_bound`] computes the tensor square of one algebra and compares it
//! with the bound. When `dim L² = (1|0)` it also checks the equality
//! classification against the Heisenberg recognizer. [`family_sweep`] runs
//! the check over every `H(m,n) ⊕ A(a|b)` and `H_m ⊕ A(a|b)` up to a total
//! dimension, and [`claims`] collects the full table of published values.

pub mod claims;

use serde::Serialize;
use thiserror::Error;

use crate::parallel::Execution;
use crate::superalg::{
    abelian, derived_subalgebra, direct_sum, heisenberg_even, heisenberg_odd, nilpotency,
    recognize_heisenberg_plus_abelian, HeisenbergKind, HeisenbergTag, LieSuperAlgebra, SuperDim,
};
use crate::tensor::{tensor_square_with, TensorError};

/// Default ceiling on the total dimension accepted by [`family_sweep`].
pub const DEFAULT_CEILING: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("bound undefined for k={k}, l={l}, r={r}, s={s}: need k+l >= 1 and 1 <= r+s <= k+l")]
    Precondition { k: usize, l: usize, r: usize, s: usize },
    #[error("{0} is abelian; the bound concerns non-abelian algebras")]
    Abelian(String),
    #[error("{0} is not nilpotent")]
    NonNilpotent(String),
    #[error("sweep dimension {requested} exceeds the ceiling {ceiling}")]
    CeilingExceeded { requested: usize, ceiling: usize },
    #[error("bound violated by {name}: bound {bound}, actual {actual}")]
    BoundViolated { name: String, bound: usize, actual: usize },
    #[error("equality classification failed for {name}: {reason}")]
    Misclassified { name: String, reason: String },
    #[error(transparent)]
    Tensor(#[from] TensorError),
}

/// `(k+l−(r+s))(k+l−1)+2`.
pub fn upper_bound(k: usize, l: usize, r: usize, s: usize) -> Result<usize, BoundError> {
    let (n, d) = (k + l, r + s);
    if n == 0 || d == 0 || d > n {
        return Err(BoundError::Precondition { k, l, r, s });
    }
    Ok((n - d) * (n - 1) + 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub name: String,
    pub k: usize,
    pub l: usize,
    pub r: usize,
    pub s: usize,
    pub bound: usize,
    pub actual: usize,
    pub slack: i64,
    pub equality: bool,
    pub classification: Option<HeisenbergTag>,
}

impl BoundReport {
    pub fn verdict(&self) -> &'static str {
        if self.equality {
            "equality"
        } else {
            "strict"
        }
    }

    /// The classification tag as text, or `"unclassified"`.
    pub fn tag(&self) -> String {
        self.classification
            .map_or_else(|| "unclassified".to_string(), |t| t.to_string())
    }
}

pub fn check_bound(l: &LieSuperAlgebra) -> Result<BoundReport, BoundError> {
    check_bound_with(l, Execution::default())
}

pub fn check_bound_with(alg: &LieSuperAlgebra, exec: Execution) -> Result<BoundReport, BoundError> {
    let name = alg.name().to_string();
    if alg.is_abelian() {
        return Err(BoundError::Abelian(name));
    }
    if !nilpotency(alg).nilpotent {
        return Err(BoundError::NonNilpotent(name));
    }
    let SuperDim { even: k, odd: l } = alg.dim();
    let SuperDim { even: r, odd: s } = derived_subalgebra(alg).dim();
    let bound = upper_bound(k, l, r, s)?;
    let actual = tensor_square_with(alg, exec)?.dim().total();
    let report = BoundReport {
        name,
        k,
        l,
        r,
        s,
        bound,
        actual,
        slack: bound as i64 - actual as i64,
        equality: bound == actual,
        classification: recognize_heisenberg_plus_abelian(alg),
    };
    if actual > bound {
        return Err(BoundError::BoundViolated {
            name: report.name,
            bound,
            actual,
        });
    }
    if (r, s) == (1, 0) {
        check_even_line(&report)?;
    }
    Ok(report)
}

/// With `dim L² = (1|0)`: equality exactly for `H(1,0) ⊕ A`, and
/// `(k+l−1)²` for the other recognized Heisenberg shapes. Algebras the
/// recognizer cannot place are reported as unclassified, not as failures.
fn check_even_line(report: &BoundReport) -> Result<(), BoundError> {
    let fail = |reason: String| {
        Err(BoundError::Misclassified {
            name: report.name.clone(),
            reason,
        })
    };
    let Some(tag) = report.classification else {
        return Ok(());
    };
    let is_h10 = tag.kind == HeisenbergKind::Even { m: 1, n: 0 };
    if report.equality != is_h10 {
        return fail(format!("equality is {} but the recognizer says {tag}", report.equality));
    }
    if let HeisenbergKind::Even { m, n } = tag.kind {
        let square = (report.k + report.l - 1).pow(2);
        if !is_h10 && report.actual != square {
            return fail(format!(
                "H({m},{n}) shape should give (k+l-1)^2 = {square}, got {}",
                report.actual
            ));
        }
    }
    Ok(())
}

/// Ceiling and execution strategy for [`family_sweep_with`].
#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    pub ceiling: usize,
    pub exec: Execution,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            ceiling: DEFAULT_CEILING,
            exec: Execution::default(),
        }
    }
}

/// Every `H(m,n) ⊕ A(a|b)` and `H_m ⊕ A(a|b)` of total dimension at most `max_total`.
pub fn sweep_family(max_total: usize) -> Vec<LieSuperAlgebra> {
    let mut out = Vec::new();
    let mut cores = Vec::new();
    for m in 0..=max_total / 2 {
        for n in 0..=max_total {
            if m + n >= 1 && 2 * m + 1 + n <= max_total {
                cores.push(heisenberg_even(m, n).expect("m + n >= 1"));
            }
        }
    }
    for m in 1..=max_total / 2 {
        if 2 * m < max_total {
            cores.push(heisenberg_odd(m).expect("m >= 1"));
        }
    }
    for core in cores {
        let room = max_total - core.total();
        for a in 0..=room {
            for b in 0..=room - a {
                if a + b == 0 {
                    out.push(core.clone());
                } else {
                    out.push(direct_sum(&core, &abelian(a, b)).expect("same field"));
                }
            }
        }
    }
    out
}

pub fn family_sweep(max_total: usize) -> Result<Vec<BoundReport>, BoundError> {
    family_sweep_with(max_total, SweepConfig::default())
}

/// Runs [`check_bound`] on the whole sweep family. Entries are independent;
/// with [`Execution::Parallel`] they are spread over rayon and each entry
/// runs its closure sequentially.
pub fn family_sweep_with(max_total: usize, config: SweepConfig) -> Result<Vec<BoundReport>, BoundError> {
    if max_total > config.ceiling {
        return Err(BoundError::CeilingExceeded {
            requested: max_total,
            ceiling: config.ceiling,
        });
    }
    let family = sweep_family(max_total);
    let inner = if config.exec.is_parallel() {
        Execution::Sequential
    } else {
        config.exec
    };
    config
        .exec
        .map(&family, |alg| check_bound_with(alg, inner))
        .into_iter()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bound_arithmetic() {
        assert_eq!(upper_bound(3, 0, 1, 0), Ok(6));
        assert_eq!(upper_bound(5, 0, 1, 0), Ok(18));
        assert_eq!(upper_bound(4, 1, 1, 1), Ok(14));
        assert!(upper_bound(0, 0, 0, 0).is_err());
        assert!(upper_bound(2, 0, 0, 0).is_err());
        assert!(upper_bound(1, 0, 1, 1).is_err());
    }

    #[test]
    fn h10_is_extremal() {
        let r = check_bound(&heisenberg_even(1, 0).unwrap()).unwrap();
        assert_eq!((r.bound, r.actual, r.equality), (6, 6, true));
        assert_eq!(r.classification.unwrap().kind, HeisenbergKind::Even { m: 1, n: 0 });

        let r = check_bound(&direct_sum(&heisenberg_even(1, 0).unwrap(), &abelian(1, 0)).unwrap()).unwrap();
        assert_eq!((r.bound, r.actual, r.verdict()), (11, 11, "equality"));
    }

    #[test]
    fn strict_cases() {
        let r = check_bound(&heisenberg_even(1, 1).unwrap()).unwrap();
        assert_eq!((r.k, r.l, r.bound, r.actual, r.verdict()), (3, 1, 11, 9, "strict"));
        let r = check_bound(&heisenberg_odd(1).unwrap()).unwrap();
        assert_eq!((r.k, r.l, r.bound, r.actual, r.slack), (1, 2, 6, 5, 1));
    }

    #[test]
    fn rejects_abelian_and_non_nilpotent() {
        assert!(matches!(check_bound(&abelian(2, 1)), Err(BoundError::Abelian(_))));
        let mut a = abelian(2, 0);
        a.set_bracket(0, 1, &[(1, a.field().one())]);
        assert!(matches!(check_bound(&a), Err(BoundError::NonNilpotent(_))));
    }

    #[test]
    fn sweep_edges() {
        assert!(family_sweep(0).unwrap().is_empty());
        let three = family_sweep(3).unwrap();
        let names: Vec<&str> = three.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(
            names,
            ["H(0,1)", "H(0,1)+A(0|1)", "H(0,1)+A(1|0)", "H(0,2)", "H(1,0)", "H_1"]
        );
        assert_eq!(three.iter().filter(|r| r.equality).count(), 1);
        assert!(matches!(
            family_sweep(8),
            Err(BoundError::CeilingExceeded {
                requested: 8,
                ceiling: 7
            })
        ));
    }

    #[test]
    fn sweep_four_is_sound() {
        for r in family_sweep_with(
            4,
            SweepConfig {
                ceiling: 7,
                exec: Execution::Sequential,
            },
        )
        .unwrap()
        {
            assert!(r.slack >= 0, "{}", r.name);
        }
    }
}
