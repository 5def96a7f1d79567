//! Finite-dimensional Lie superalgebras given by structure constants.
//!
//! Basis vectors are ordered with every even vector before every odd one.
//! Everything downstream (symbol enumeration, quotient bases, the `.lsa`
//! format) relies on that convention.

mod dim;
mod families;
mod graded;
mod recognize;
mod structure;

pub use dim::{Parity, SuperDim};
pub use families::{abelian, heisenberg_even, heisenberg_odd, model_filiform, odd_chain};
pub use graded::GradedSubspace;
pub use recognize::{recognize_heisenberg_plus_abelian, HeisenbergKind, HeisenbergTag};
pub use structure::{
    abelianization, center, derived_subalgebra, direct_sum, lower_central_series, nilpotency, quotient, Nilpotency,
};

use std::fmt;

use thiserror::Error;

use crate::exactlin::{sign, Field, LinAlgError, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("expected {expected} structure constants, found {found}")]
    WrongConstantCount { expected: usize, found: usize },
    #[error("vector of length {found} does not match algebra dimension {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("structure constants mix scalars from different fields")]
    FieldMismatch,
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("subspace is not a graded ideal")]
    NotAnIdeal,
    #[error("subspace is not graded")]
    NotGraded,
    #[error("structure constants violate the axioms: {}", fmt_violations(.0))]
    Invalid(Vec<Violation>),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
}

fn fmt_violations(v: &[Violation]) -> String {
    let shown: Vec<String> = v.iter().take(5).map(|x| x.to_string()).collect();
    let more = if v.len() > 5 {
        format!(" (+{} more)", v.len() - 5)
    } else {
        String::new()
    };
    format!("{}{}", shown.join("; "), more)
}

/// One failed axiom instance. Indices are 0-based basis positions.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "axiom", rename_all = "kebab-case")]
pub enum Violation {
    /// `[x_i, x_j]` has a nonzero `x_k` component of the wrong parity.
    Grading { i: usize, j: usize, k: usize },
    /// `c[j][i][k] != -(-1)^{|i||j|} c[i][j][k]`.
    SkewSymmetry { i: usize, j: usize, k: usize },
    /// The graded Jacobi sum of `(x, y, z)` is nonzero.
    Jacobi { x: usize, y: usize, z: usize },
}

impl Violation {
    /// The unordered index pairs whose brackets the violation involves.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        match *self {
            Violation::Grading { i, j, .. } | Violation::SkewSymmetry { i, j, .. } => vec![(i, j)],
            Violation::Jacobi { x, y, z } => vec![(y, z), (z, x), (x, y)],
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Grading { i, j, k } => {
                write!(
                    f,
                    "grading: [{},{}] has a component on {} of the wrong parity",
                    i + 1,
                    j + 1,
                    k + 1
                )
            }
            Violation::SkewSymmetry { i, j, k } if i == j => {
                write!(
                    f,
                    "skew-symmetry: [{},{}] must have no component on {}",
                    i + 1,
                    i + 1,
                    k + 1
                )
            }
            Violation::SkewSymmetry { i, j, k } => {
                write!(
                    f,
                    "skew-symmetry: [{},{}] and [{},{}] disagree on {}",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1,
                    k + 1
                )
            }
            Violation::Jacobi { x, y, z } => write!(f, "Jacobi: triple ({},{},{})", x + 1, y + 1, z + 1),
        }
    }
}

/// A Lie superalgebra over a field, `[x_i, x_j] = Σ_k c[i][j][k] x_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieSuperAlgebra {
    name: String,
    field: Field,
    dim: SuperDim,
    consts: Vec<Scalar>,
}

impl LieSuperAlgebra {
    /// Wraps a full constant table indexed `(i * t + j) * t + k`. No axiom
    /// checking happens here; call [`LieSuperAlgebra::validate`].
    pub fn from_constants(
        name: impl Into<String>,
        field: Field,
        dim: SuperDim,
        consts: Vec<Scalar>,
    ) -> Result<Self, AlgebraError> {
        let t = dim.total();
        if consts.len() != t * t * t {
            return Err(AlgebraError::WrongConstantCount {
                expected: t * t * t,
                found: consts.len(),
            });
        }
        if consts.iter().any(|c| c.field() != field) {
            return Err(AlgebraError::FieldMismatch);
        }
        Ok(LieSuperAlgebra {
            name: name.into(),
            field,
            dim,
            consts,
        })
    }

    /// The abelian algebra skeleton; brackets are filled in with [`set_bracket`](Self::set_bracket).
    pub fn zero_brackets(name: impl Into<String>, field: Field, dim: SuperDim) -> Self {
        let t = dim.total();
        LieSuperAlgebra {
            name: name.into(),
            field,
            dim,
            consts: vec![field.zero(); t * t * t],
        }
    }

    /// Sets `[x_i, x_j] = Σ terms` and the partner `[x_j, x_i]` by graded skew-symmetry.
    pub fn set_bracket(&mut self, i: usize, j: usize, terms: &[(usize, Scalar)]) {
        let t = self.total();
        let s = sign(self.field, self.parity(i).is_odd() && self.parity(j).is_odd());
        for k in 0..t {
            self.consts[(i * t + j) * t + k] = self.field.zero();
            self.consts[(j * t + i) * t + k] = self.field.zero();
        }
        for (k, c) in terms {
            self.consts[(i * t + j) * t + k] += c;
        }
        for k in 0..t {
            let c = &self.consts[(i * t + j) * t + k];
            self.consts[(j * t + i) * t + k] = -(&s * c);
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> SuperDim {
        self.dim
    }

    pub fn total(&self) -> usize {
        self.dim.total()
    }

    pub fn parity(&self, i: usize) -> Parity {
        if i < self.dim.even {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn parities(&self) -> Vec<Parity> {
        (0..self.total()).map(|i| self.parity(i)).collect()
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let t = self.total();
        &self.consts[(i * t + j) * t + k]
    }

    pub fn constants(&self) -> &[Scalar] {
        &self.consts
    }

    /// `[x_i, x_j]` as a coefficient vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        let t = self.total();
        self.consts[(i * t + j) * t..(i * t + j + 1) * t].to_vec()
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        let t = self.total();
        for len in [u.len(), v.len()] {
            if len != t {
                return Err(AlgebraError::LengthMismatch {
                    expected: t,
                    found: len,
                });
            }
        }
        let mut out = vec![self.field.zero(); t];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                let row = &self.consts[(i * t + j) * t..(i * t + j + 1) * t];
                for (o, c) in out.iter_mut().zip(row) {
                    if !c.is_zero() {
                        *o += &(&ab * c);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(Scalar::is_zero)
    }

    /// Reinterprets the constants in another field (rationals reduce mod `p`).
    pub fn change_field(&self, field: Field) -> Result<Self, AlgebraError> {
        let consts = self
            .consts
            .iter()
            .map(|c| field.convert(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LieSuperAlgebra {
            name: self.name.clone(),
            field,
            dim: self.dim,
            consts,
        })
    }

    /// All axiom violations: grading, graded skew-symmetry, graded Jacobi.
    /// Empty iff the constants define a Lie superalgebra.
    pub fn validate(&self) -> Vec<Violation> {
        let t = self.total();
        let mut out = Vec::new();
        for i in 0..t {
            for j in 0..t {
                let target = self.parity(i) + self.parity(j);
                let s = sign(self.field, self.parity(i).is_odd() && self.parity(j).is_odd());
                for k in 0..t {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() && self.parity(k) != target {
                        out.push(Violation::Grading { i, j, k });
                    }
                    if i <= j && *self.constant(j, i, k) != -(&s * c) {
                        out.push(Violation::SkewSymmetry { i, j, k });
                    }
                }
            }
        }
        let sparse = self.sparse_table();
        for x in 0..t {
            for y in 0..t {
                for z in 0..t {
                    let idle =
                        sparse[y * t + z].is_empty() && sparse[z * t + x].is_empty() && sparse[x * t + y].is_empty();
                    if !idle && !self.jacobi_sum(&sparse, x, y, z).iter().all(Scalar::is_zero) {
                        out.push(Violation::Jacobi { x, y, z });
                    }
                }
            }
        }
        out
    }

    /// Nonzero entries of every `[x_i, x_j]`, indexed by `i * t + j`.
    fn sparse_table(&self) -> Vec<Vec<(usize, Scalar)>> {
        let t = self.total();
        (0..t * t)
            .map(|ij| {
                (0..t)
                    .filter_map(|k| {
                        let c = &self.consts[ij * t + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect()
    }

    /// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]]`.
    fn jacobi_sum(&self, sparse: &[Vec<(usize, Scalar)>], x: usize, y: usize, z: usize) -> Vec<Scalar> {
        let t = self.total();
        let mut out = vec![self.field.zero(); t];
        let terms = [(x, y, z, x, z), (y, z, x, y, x), (z, x, y, z, y)];
        for (a, b, c, p, q) in terms {
            let s = sign(self.field, self.parity(p).is_odd() && self.parity(q).is_odd());
            for (m, coef) in &sparse[b * t + c] {
                let w = &s * coef;
                for (k, cc) in &sparse[a * t + m] {
                    out[*k] += &(&w * cc);
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.total()];
        v[i] = self.field.one();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Scalar {
        Field::Rational.from_i64(n)
    }

    #[test]
    fn heisenberg_brackets() {
        let h = heisenberg_even(1, 0).unwrap();
        // basis x1, x2, z
        assert_eq!(
            h.bracket(&h.basis_vector(0), &h.basis_vector(1)).unwrap(),
            h.basis_vector(2)
        );
        let h1 = heisenberg_odd(1).unwrap();
        // basis x1 | y1, z
        assert_eq!(
            h1.bracket(&h1.basis_vector(0), &h1.basis_vector(1)).unwrap(),
            h1.basis_vector(2)
        );
    }

    #[test]
    fn even_self_bracket_vanishes() {
        let h = heisenberg_even(2, 1).unwrap();
        let u = vec![q(1), q(-2), q(3), q(5), q(0), q(0)];
        assert!(h.bracket(&u, &u).unwrap().iter().all(Scalar::is_zero));
    }

    #[test]
    fn bracket_length_mismatch() {
        let h = heisenberg_even(1, 0).unwrap();
        let err = h.bracket(&[q(1)], &h.basis_vector(0)).unwrap_err();
        assert_eq!(err, AlgebraError::LengthMismatch { expected: 3, found: 1 });
    }

    #[test]
    fn builtins_validate() {
        for a in [
            heisenberg_even(1, 0).unwrap(),
            heisenberg_even(0, 1).unwrap(),
            heisenberg_even(2, 2).unwrap(),
            heisenberg_odd(1).unwrap(),
            heisenberg_odd(3).unwrap(),
            abelian(2, 1),
        ] {
            assert_eq!(a.validate(), vec![], "{}", a.name());
        }
    }

    #[test]
    fn odd_square_into_odd_breaks_grading() {
        // A(2|1): x1, x2 | y1. Setting [y1,y1] = y1 maps odd x odd to odd.
        let mut a = abelian(2, 1);
        a.set_bracket(2, 2, &[(2, q(1))]);
        let v = a.validate();
        assert!(v.contains(&Violation::Grading { i: 2, j: 2, k: 2 }));

        // [y1,y1] = x1 is correctly graded and satisfies Jacobi (x1 is central).
        let mut b = abelian(2, 1);
        b.set_bracket(2, 2, &[(0, q(1))]);
        assert_eq!(b.validate(), vec![]);
    }

    #[test]
    fn even_diagonal_bracket_breaks_skew_symmetry() {
        let mut a = abelian(3, 0);
        let mut consts = a.constants().to_vec();
        consts[2] = q(1); // [e1,e1] = e3 sits at (0 * 3 + 0) * 3 + 2
        a = LieSuperAlgebra::from_constants("bad", Field::Rational, a.dim(), consts).unwrap();
        assert!(a.validate().contains(&Violation::SkewSymmetry { i: 0, j: 0, k: 2 }));
    }

    #[test]
    fn extra_bracket_breaks_jacobi() {
        // H(1,0) = <x1,x2,z>, plus [x1,z] = x1. By hand:
        // J(x1,x2,z) = [x1,[x2,z]] + [x2,[z,x1]] + [z,[x1,x2]] = 0 + [x2,-x1] + [z,z] = z != 0,
        // while J(x1,x1,x2) = [x1,z] + [x1,-z] + 0 = 0.
        let mut h = heisenberg_even(1, 0).unwrap();
        h.set_bracket(0, 2, &[(0, q(1))]);
        let v = h.validate();
        assert!(v.contains(&Violation::Jacobi { x: 0, y: 1, z: 2 }));
        assert!(!v.contains(&Violation::Jacobi { x: 0, y: 0, z: 1 }));
        assert!(v.iter().all(|x| matches!(x, Violation::Jacobi { .. })));
    }

    #[test]
    fn change_field_reduces() {
        let mut a = abelian(2, 0);
        a.set_bracket(0, 1, &[(1, Field::Rational.from_i64(7))]);
        let f5 = Field::prime(5).unwrap();
        let b = a.change_field(f5).unwrap();
        assert_eq!(*b.constant(0, 1, 1), f5.from_i64(2));
        assert_eq!(*b.constant(1, 0, 1), f5.from_i64(3));
    }

    #[test]
    fn wrong_constant_count() {
        let err = LieSuperAlgebra::from_constants("x", Field::Rational, SuperDim::new(1, 0), vec![]).unwrap_err();
        assert_eq!(err, AlgebraError::WrongConstantCount { expected: 1, found: 0 });
    }
}
