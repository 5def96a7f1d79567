use crate::exactlin::{Matrix, Scalar, Subspace};

use super::{AlgebraError, GradedSubspace, LieSuperAlgebra};

/// `L² = [L, L]`, spanned by the brackets of basis pairs.
pub fn derived_subalgebra(l: &LieSuperAlgebra) -> GradedSubspace {
    let t = l.total();
    let brackets = (0..t)
        .flat_map(|i| (i..t).map(move |j| (i, j)))
        .map(|(i, j)| l.bracket_basis(i, j));
    GradedSubspace::from_components(l.field(), l.dim(), brackets).expect("brackets have algebra length")
}

/// `Z(L)`: the solution space of `[z, x_i] = 0` for every basis vector, solved per parity.
pub fn center(l: &LieSuperAlgebra) -> GradedSubspace {
    let t = l.total();
    let f = l.field();
    let solve = |range: std::ops::Range<usize>| -> Subspace {
        let n = range.len();
        // Row (i, k), column a: coefficient of x_k in [x_a, x_i].
        let rows = (0..t)
            .flat_map(|i| (0..t).map(move |k| (i, k)))
            .map(|(i, k)| range.clone().map(|a| l.constant(a, i, k).clone()).collect())
            .collect();
        let m = Matrix::from_rows(f, n, rows).expect("rows have width n");
        Subspace::span(f, n, m.kernel()).expect("kernel vectors have width n")
    };
    let even = solve(0..l.dim().even);
    let odd = solve(l.dim().even..t);
    GradedSubspace::from_parts(l.dim(), even, odd).expect("parts match the algebra")
}

/// `[I, L]` for a graded subspace `I`.
fn bracket_with_algebra(l: &LieSuperAlgebra, i: &GradedSubspace) -> GradedSubspace {
    let t = l.total();
    let mut vectors = Vec::new();
    for v in i.basis() {
        for k in 0..t {
            vectors.push(l.bracket(&v, &l.basis_vector(k)).expect("lengths match"));
        }
    }
    GradedSubspace::from_components(l.field(), l.dim(), vectors).expect("lengths match")
}

/// `L = L¹ ⊇ L² ⊇ L³ ⊇ …`, with `L^{k+1} = [L^k, L]`. The list ends at the
/// first zero term, or at the first term equal to its predecessor.
pub fn lower_central_series(l: &LieSuperAlgebra) -> Vec<GradedSubspace> {
    let mut series = vec![GradedSubspace::full(l.field(), l.dim())];
    loop {
        let last = series.last().expect("nonempty");
        if last.is_zero() {
            break;
        }
        let next = bracket_with_algebra(l, last);
        if &next == last {
            break;
        }
        series.push(next);
    }
    series
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Nilpotency {
    pub nilpotent: bool,
    /// Largest `c` with `L^c ≠ 0`; `None` when not nilpotent. Abelian algebras report 1.
    pub class: Option<usize>,
}

pub fn nilpotency(l: &LieSuperAlgebra) -> Nilpotency {
    let series = lower_central_series(l);
    let last = series.last().expect("nonempty");
    if last.is_zero() {
        Nilpotency {
            nilpotent: true,
            class: Some(series.len() - 1),
        }
    } else {
        Nilpotency {
            nilpotent: false,
            class: None,
        }
    }
}

/// `L / I` on the complement basis given by the non-pivot coordinates of `I`.
pub fn quotient(l: &LieSuperAlgebra, ideal: &GradedSubspace) -> Result<LieSuperAlgebra, AlgebraError> {
    if ideal.ambient() != l.dim() {
        return Err(AlgebraError::LengthMismatch {
            expected: l.total(),
            found: ideal.ambient().total(),
        });
    }
    if !bracket_with_algebra(l, ideal).is_subspace_of(ideal)? {
        return Err(AlgebraError::NotAnIdeal);
    }
    let keep = ideal.complement_coordinates();
    let dim = l.dim().checked_sub(ideal.dim()).expect("ideal fits in algebra");
    let n = keep.len();
    let mut consts = Vec::with_capacity(n * n * n);
    for &a in &keep {
        for &b in &keep {
            let reduced = ideal.reduce(&l.bracket_basis(a, b))?;
            consts.extend(keep.iter().map(|&c| reduced[c].clone()));
        }
    }
    let q = LieSuperAlgebra::from_constants(format!("{}/I", l.name()), l.field(), dim, consts)?;
    let violations = q.validate();
    if !violations.is_empty() {
        return Err(AlgebraError::Invalid(violations));
    }
    Ok(q)
}

/// `L / L²`.
pub fn abelianization(l: &LieSuperAlgebra) -> LieSuperAlgebra {
    quotient(l, &derived_subalgebra(l))
        .expect("the derived subalgebra is an ideal")
        .with_name(format!("{}^ab", l.name()))
}

/// `L ⊕ M` with block-diagonal constants. The merged basis is: even part of
/// `L`, even part of `M`, odd part of `L`, odd part of `M`.
pub fn direct_sum(l: &LieSuperAlgebra, m: &LieSuperAlgebra) -> Result<LieSuperAlgebra, AlgebraError> {
    if l.field() != m.field() {
        return Err(AlgebraError::FieldMismatch);
    }
    let dim = l.dim() + m.dim();
    let place = |alg: &LieSuperAlgebra, offset_even: usize, offset_odd: usize| {
        let de = alg.dim().even;
        move |i: usize| if i < de { offset_even + i } else { offset_odd + i - de }
    };
    let pl = place(l, 0, dim.even);
    let pm = place(m, l.dim().even, dim.even + l.dim().odd);
    let mut out = LieSuperAlgebra::zero_brackets(format!("{}+{}", l.name(), m.name()), l.field(), dim);
    for (alg, p) in [(l, &pl as &dyn Fn(usize) -> usize), (m, &pm)] {
        let t = alg.total();
        for i in 0..t {
            for j in i..t {
                let terms: Vec<(usize, Scalar)> = (0..t)
                    .filter(|&k| !alg.constant(i, j, k).is_zero())
                    .map(|k| (p(k), alg.constant(i, j, k).clone()))
                    .collect();
                if !terms.is_empty() {
                    out.set_bracket(p(i), p(j), &terms);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;
    use crate::superalg::{abelian, heisenberg_even, heisenberg_odd, SuperDim};

    #[test]
    fn derived_of_families() {
        assert!(derived_subalgebra(&abelian(2, 3)).is_zero());
        assert_eq!(
            derived_subalgebra(&heisenberg_even(2, 1).unwrap()).dim(),
            SuperDim::new(1, 0)
        );
        assert_eq!(
            derived_subalgebra(&heisenberg_odd(3).unwrap()).dim(),
            SuperDim::new(0, 1)
        );
    }

    #[test]
    fn centers() {
        assert_eq!(center(&abelian(2, 2)).dim(), SuperDim::new(2, 2));
        assert_eq!(center(&heisenberg_even(1, 0).unwrap()).dim(), SuperDim::new(1, 0));
        let s = direct_sum(&heisenberg_even(1, 0).unwrap(), &abelian(2, 1)).unwrap();
        assert_eq!(center(&s).dim(), SuperDim::new(3, 1));
    }

    #[test]
    fn nilpotency_classes() {
        for (m, n) in [(1, 0), (0, 1), (2, 1)] {
            let h = heisenberg_even(m, n).unwrap();
            assert_eq!(
                nilpotency(&h),
                Nilpotency {
                    nilpotent: true,
                    class: Some(2)
                }
            );
        }
        assert_eq!(
            nilpotency(&abelian(2, 1)),
            Nilpotency {
                nilpotent: true,
                class: Some(1)
            }
        );

        // [x1, x2] = x2: L² = <x2>, L³ = [<x2>, L] = <x2> again.
        let mut a = abelian(2, 0);
        a.set_bracket(0, 1, &[(1, Field::Rational.one())]);
        let series = lower_central_series(&a);
        assert_eq!(series.len(), 2);
        assert_eq!(series[1].dim(), SuperDim::new(1, 0));
        assert_eq!(
            nilpotency(&a),
            Nilpotency {
                nilpotent: false,
                class: None
            }
        );
    }

    #[test]
    fn quotients() {
        let h = heisenberg_even(2, 1).unwrap();
        let ab = abelianization(&h);
        assert_eq!(ab.dim(), SuperDim::new(4, 1));
        assert!(ab.is_abelian());

        let h2 = heisenberg_odd(2).unwrap();
        let ab = abelianization(&h2);
        assert_eq!(ab.dim(), SuperDim::new(2, 2));
        assert!(ab.is_abelian());

        let zero = GradedSubspace::zero(Field::Rational, h.dim());
        let same = quotient(&h, &zero).unwrap();
        assert_eq!(same.constants(), h.constants());
    }

    #[test]
    fn quotient_rejects_non_ideal() {
        let h = heisenberg_even(1, 0).unwrap();
        let f = Field::Rational;
        let line = GradedSubspace::from_span(f, h.dim(), vec![h.basis_vector(0)]).unwrap();
        assert_eq!(quotient(&h, &line), Err(AlgebraError::NotAnIdeal));
    }

    #[test]
    fn direct_sums() {
        let h = heisenberg_even(1, 0).unwrap();
        let s = direct_sum(&h, &abelian(1, 0)).unwrap();
        assert_eq!(s.dim(), SuperDim::new(4, 0));
        assert_eq!(derived_subalgebra(&s).dim(), SuperDim::new(1, 0));

        let a = direct_sum(&abelian(1, 2), &abelian(3, 1)).unwrap();
        assert!(a.is_abelian());
        assert_eq!(a.dim(), SuperDim::new(4, 3));

        let hh = direct_sum(&h, &heisenberg_even(0, 1).unwrap()).unwrap();
        assert_eq!(hh.dim(), SuperDim::new(4, 1));
        assert_eq!(derived_subalgebra(&hh).dim(), SuperDim::new(2, 0));
        assert!(hh.validate().is_empty());
    }
}
