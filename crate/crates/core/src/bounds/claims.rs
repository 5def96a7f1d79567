//! The table of published values, recomputed.

use serde::Serialize;

use crate::exactlin::Field;
use crate::gamma::gamma_of_abelianization;
use crate::parallel::Execution;
use crate::superalg::{
    abelian, abelianization, derived_subalgebra, direct_sum, heisenberg_even, heisenberg_odd, model_filiform,
    odd_chain, HeisenbergKind, LieSuperAlgebra, SuperDim,
};
use crate::tensor::{
    exterior_square_with, exterior_two_way, module_tensor, square_ideal_of, tensor_square_with, TensorError,
};

use super::{family_sweep_with, SweepConfig};

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: usize,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
}

/// Eighteen small nilpotent algebras used by the identity and property checks.
pub fn test_family() -> Vec<LieSuperAlgebra> {
    let h = |m, n| heisenberg_even(m, n).expect("valid parameters");
    let ho = |m| heisenberg_odd(m).expect("valid parameters");
    vec![
        h(1, 0),
        h(0, 1),
        h(2, 0),
        h(1, 1),
        h(0, 2),
        h(2, 1),
        h(1, 2),
        ho(1),
        ho(2),
        ho(3),
        abelian(1, 0),
        abelian(0, 1),
        abelian(1, 1),
        abelian(2, 1),
        direct_sum(&h(1, 0), &abelian(1, 0)).expect("same field"),
        direct_sum(&ho(1), &abelian(0, 1)).expect("same field"),
        model_filiform(4).expect("n >= 3"),
        odd_chain(2).expect("n >= 2"),
    ]
}

const HEISENBERG_PARAMS: [(usize, usize); 5] = [(2, 0), (1, 1), (0, 2), (2, 1), (1, 2)];

fn tensor_dim(l: &LieSuperAlgebra, exec: Execution) -> Result<(SuperDim, bool), TensorError> {
    let t = tensor_square_with(l, exec)?;
    Ok((t.dim(), t.is_abelian()))
}

fn claim(id: usize, title: &'static str, outcome: Result<Vec<String>, TensorError>) -> Claim {
    match outcome {
        Ok(failures) if failures.is_empty() => Claim {
            id,
            title,
            pass: true,
            detail: String::new(),
        },
        Ok(failures) => Claim {
            id,
            title,
            pass: false,
            detail: failures.join("; "),
        },
        Err(e) => Claim {
            id,
            title,
            pass: false,
            detail: e.to_string(),
        },
    }
}

fn expect_tensor(
    l: &LieSuperAlgebra,
    want: SuperDim,
    abelian_required: bool,
    exec: Execution,
) -> Result<Option<String>, TensorError> {
    let (got, ab) = tensor_dim(l, exec)?;
    Ok(if got != want || (abelian_required && !ab) {
        Some(format!(
            "{}⊗{} = {got} (abelian: {ab}), expected {want}",
            l.name(),
            l.name()
        ))
    } else {
        None
    })
}

fn small_cases(field: Field, exec: Execution) -> Result<Vec<String>, TensorError> {
    let over = |l: LieSuperAlgebra| l.change_field(field);
    let mut failures = Vec::new();
    let cases = [
        (over(heisenberg_even(1, 0)?)?, SuperDim::new(6, 0), true),
        (over(heisenberg_even(0, 1)?)?, SuperDim::new(1, 0), false),
        (over(heisenberg_odd(1)?)?, SuperDim::new(2, 3), true),
    ];
    for (l, want, ab) in cases {
        failures.extend(expect_tensor(&l, want, ab, exec)?);
    }
    for (m, n) in HEISENBERG_PARAMS {
        let l = over(heisenberg_even(m, n)?)?;
        failures.extend(expect_tensor(
            &l,
            SuperDim::new(4 * m * m + n * n, 4 * m * n),
            false,
            exec,
        )?);
    }
    Ok(failures)
}

/// Recomputes every published dimension and identity. Each entry is one claim.
pub fn published_claims(exec: Execution) -> Vec<Claim> {
    let mut out = Vec::new();
    let single =
        |l: Result<LieSuperAlgebra, crate::superalg::AlgebraError>,
         want: SuperDim,
         ab: bool|
         -> Result<Vec<String>, TensorError> { Ok(expect_tensor(&l?, want, ab, exec)?.into_iter().collect()) };
    out.push(claim(
        1,
        "H(1,0)⊗H(1,0) is abelian of dimension (6|0)",
        single(heisenberg_even(1, 0), SuperDim::new(6, 0), true),
    ));
    out.push(claim(
        2,
        "H(0,1)⊗H(0,1) has dimension (1|0)",
        single(heisenberg_even(0, 1), SuperDim::new(1, 0), false),
    ));
    out.push(claim(
        3,
        "H_1⊗H_1 is abelian of dimension (2|3)",
        single(heisenberg_odd(1), SuperDim::new(2, 3), true),
    ));

    out.push(claim(
        4,
        "dim H(m,n)⊗H(m,n) = (4m²+n² | 4mn)",
        (|| {
            let mut failures = Vec::new();
            for (m, n) in HEISENBERG_PARAMS {
                let want = SuperDim::new(4 * m * m + n * n, 4 * m * n);
                failures.extend(expect_tensor(&heisenberg_even(m, n)?, want, false, exec)?);
                if want.total() != (2 * m + n).pow(2) {
                    failures.push(format!("total of {want} is not (2m+n)²"));
                }
            }
            Ok(failures)
        })(),
    ));

    out.push(claim(
        5,
        "H_m⊗H_m ≅ H_m^ab ⊗ H_m^ab with total 4m², m = 2, 3",
        (|| {
            let mut failures = Vec::new();
            for m in [2, 3] {
                let l = heisenberg_odd(m)?;
                let ab = abelianization(&l).dim();
                failures.extend(expect_tensor(&l, module_tensor(ab, ab), true, exec)?);
                let (got, _) = tensor_dim(&l, exec)?;
                if got.total() != 4 * m * m {
                    failures.push(format!("H_{m}: total {} ≠ 4m²", got.total()));
                }
            }
            Ok(failures)
        })(),
    ));

    out.push(claim(
        6,
        "dim H(m,n)□H(m,n) = (2m²+m+n(n−1)/2 | 2mn)",
        (|| {
            let mut failures = Vec::new();
            for (m, n) in HEISENBERG_PARAMS {
                let l = heisenberg_even(m, n)?;
                let got = square_ideal_of(&tensor_square_with(&l, exec)?)?.dim;
                let want = SuperDim::new(2 * m * m + m + n * (n.saturating_sub(1)) / 2, 2 * m * n);
                if got != want {
                    failures.push(format!("{}: □ = {got}, expected {want}", l.name()));
                }
            }
            Ok(failures)
        })(),
    ));

    out.push(claim(
        7,
        "Schur multiplier dimensions of the Heisenberg superalgebras",
        (|| {
            let mut cases: Vec<(LieSuperAlgebra, SuperDim)> = vec![
                (heisenberg_even(1, 0)?, SuperDim::new(2, 0)),
                (heisenberg_even(0, 1)?, SuperDim::new(0, 0)),
                (heisenberg_odd(1)?, SuperDim::new(1, 1)),
            ];
            for (m, n) in HEISENBERG_PARAMS {
                cases.push((
                    heisenberg_even(m, n)?,
                    SuperDim::new(2 * m * m + n * (n + 1) / 2 - m - 1, 2 * m * n),
                ));
            }
            for m in [2, 3] {
                cases.push((heisenberg_odd(m)?, SuperDim::new(m * m, m * m - 1)));
            }
            let mut failures = Vec::new();
            for (l, want) in cases {
                let ext = exterior_square_with(&l, exec)?.dim();
                let got = ext.checked_sub(derived_subalgebra(&l).dim());
                if got != Some(want) {
                    failures.push(format!("{}: ℳ = {got:?}, expected {want}", l.name()));
                }
            }
            Ok(failures)
        })(),
    ));

    out.push(claim(
        8,
        "dim ⊗ = dim □ + dim ∧ and dim □ = dim Γ(L^ab) on the test family",
        (|| {
            let mut failures = Vec::new();
            for l in test_family() {
                let t = tensor_square_with(&l, exec)?;
                let sq = square_ideal_of(&t)?.dim;
                let ext = exterior_square_with(&l, exec)?.dim();
                let gamma = gamma_of_abelianization(&l);
                if t.dim() != sq + ext || sq != gamma {
                    failures.push(format!("{}: ⊗ {}, □ {sq}, ∧ {ext}, Γ {gamma}", l.name(), t.dim()));
                }
            }
            Ok(failures)
        })(),
    ));

    out.push(match family_sweep_with(7, SweepConfig { ceiling: 7, exec }) {
        Ok(reports) => {
            let mut failures = Vec::new();
            for r in &reports {
                let h10 = r
                    .classification
                    .is_some_and(|t| t.kind == HeisenbergKind::Even { m: 1, n: 0 });
                if r.slack < 0 || r.equality != h10 {
                    failures.push(format!(
                        "{}: bound {}, actual {}, tag {}",
                        r.name,
                        r.bound,
                        r.actual,
                        r.tag()
                    ));
                }
            }
            claim(
                9,
                "bound holds up to dimension 7, equality exactly at H(1,0)⊕A",
                Ok(failures),
            )
        }
        Err(e) => Claim {
            id: 9,
            title: "bound holds up to dimension 7, equality exactly at H(1,0)⊕A",
            pass: false,
            detail: e.to_string(),
        },
    });

    out.push(claim(
        10,
        "direct-sum law for the tensor square",
        (|| {
            let base = [
                heisenberg_even(1, 0)?,
                heisenberg_even(0, 1)?,
                heisenberg_odd(1)?,
                abelian(1, 0),
                abelian(0, 1),
                abelian(1, 1),
            ];
            let mut failures = Vec::new();
            for i in 0..base.len() {
                for j in i..base.len() {
                    let (a, b) = (&base[i], &base[j]);
                    let sum = direct_sum(a, b)?;
                    let lhs = tensor_dim(&sum, exec)?.0;
                    let cross = module_tensor(abelianization(a).dim(), abelianization(b).dim());
                    let rhs = tensor_dim(a, exec)?.0 + tensor_dim(b, exec)?.0 + cross.scale(2);
                    if lhs != rhs {
                        failures.push(format!("{}: {lhs} ≠ {rhs}", sum.name()));
                    }
                }
            }
            Ok(failures)
        })(),
    ));

    out.push(claim(
        11,
        "closure fixpoint, derived map, quotient validity and exterior oracle",
        (|| {
            let mut failures = Vec::new();
            for l in test_family() {
                let t = tensor_square_with(&l, exec)?;
                let mut system = t.system().clone();
                if system.sweep(Execution::Sequential) != 0 {
                    failures.push(format!("{}: extra sweep grew the relations", l.name()));
                }
                failures.extend(t.verify().into_iter().map(|f| format!("{}: {f}", l.name())));
                failures.extend(
                    exterior_square_with(&l, exec)?
                        .verify()
                        .into_iter()
                        .map(|f| format!("{} ∧: {f}", l.name())),
                );
                if !exterior_two_way(&l, exec)? {
                    failures.push(format!(
                        "{}: exterior square disagrees between the two routes",
                        l.name()
                    ));
                }
            }
            Ok(failures)
        })(),
    ));

    out.push(claim(
        12,
        "claims 1–4 reproduce over GF(5) and GF(7)",
        (|| {
            let mut failures = Vec::new();
            for p in [5, 7] {
                let f = Field::prime(p)?;
                failures.extend(small_cases(f, exec)?.into_iter().map(|s| format!("GF({p}): {s}")));
            }
            Ok(failures)
        })(),
    ));

    out
}
