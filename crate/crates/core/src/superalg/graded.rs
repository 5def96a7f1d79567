use crate::exactlin::{Field, LinAlgError, Scalar, Subspace};

use super::{AlgebraError, SuperDim};

/// A graded subspace of a superspace of dimension `ambient`, stored as one
/// echelonized subspace per parity (even coordinates first, then odd).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSubspace {
    ambient: SuperDim,
    even: Subspace,
    odd: Subspace,
}

impl GradedSubspace {
    pub fn zero(field: Field, ambient: SuperDim) -> Self {
        GradedSubspace {
            ambient,
            even: Subspace::zero(field, ambient.even),
            odd: Subspace::zero(field, ambient.odd),
        }
    }

    pub fn full(field: Field, ambient: SuperDim) -> Self {
        GradedSubspace {
            ambient,
            even: Subspace::full(field, ambient.even),
            odd: Subspace::full(field, ambient.odd),
        }
    }

    pub fn from_parts(ambient: SuperDim, even: Subspace, odd: Subspace) -> Result<Self, AlgebraError> {
        if even.ambient() != ambient.even {
            return Err(LinAlgError::DimensionMismatch {
                expected: ambient.even,
                found: even.ambient(),
            }
            .into());
        }
        if odd.ambient() != ambient.odd {
            return Err(LinAlgError::DimensionMismatch {
                expected: ambient.odd,
                found: odd.ambient(),
            }
            .into());
        }
        Ok(GradedSubspace { ambient, even, odd })
    }

    /// Span of the homogeneous components of the given vectors. Use this
    /// when the span is known to be graded (brackets of basis vectors,
    /// kernels of graded maps); otherwise see [`GradedSubspace::from_span`].
    pub fn from_components<I>(field: Field, ambient: SuperDim, vectors: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut evens = Vec::new();
        let mut odds = Vec::new();
        for v in vectors {
            if v.len() != ambient.total() {
                return Err(AlgebraError::LengthMismatch {
                    expected: ambient.total(),
                    found: v.len(),
                });
            }
            let (e, o) = v.split_at(ambient.even);
            evens.push(e.to_vec());
            odds.push(o.to_vec());
        }
        Ok(GradedSubspace {
            ambient,
            even: Subspace::span(field, ambient.even, evens)?,
            odd: Subspace::span(field, ambient.odd, odds)?,
        })
    }

    /// Span of arbitrary vectors; fails with [`AlgebraError::NotGraded`] if
    /// that span does not contain the homogeneous components of its elements.
    pub fn from_span<I>(field: Field, ambient: SuperDim, vectors: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let vectors: Vec<Vec<Scalar>> = vectors.into_iter().collect();
        let plain = Subspace::span(field, ambient.total(), vectors.clone())?;
        let graded = GradedSubspace::from_components(field, ambient, vectors)?;
        if graded.dim().total() != plain.rank() {
            return Err(AlgebraError::NotGraded);
        }
        Ok(graded)
    }

    pub fn ambient(&self) -> SuperDim {
        self.ambient
    }

    pub fn dim(&self) -> SuperDim {
        SuperDim::new(self.even.rank(), self.odd.rank())
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    pub fn even(&self) -> &Subspace {
        &self.even
    }

    pub fn odd(&self) -> &Subspace {
        &self.odd
    }

    fn field(&self) -> Field {
        self.even.field()
    }

    /// Homogeneous basis as full-length vectors: even part first, then odd.
    pub fn basis(&self) -> Vec<Vec<Scalar>> {
        let f = self.field();
        let mut out = Vec::with_capacity(self.dim().total());
        for r in self.even.rows() {
            let mut v = r.clone();
            v.extend(std::iter::repeat_n(f.zero(), self.ambient.odd));
            out.push(v);
        }
        for r in self.odd.rows() {
            let mut v = vec![f.zero(); self.ambient.even];
            v.extend(r.iter().cloned());
            out.push(v);
        }
        out
    }

    /// Canonical representative of `v` modulo this subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        if v.len() != self.ambient.total() {
            return Err(AlgebraError::LengthMismatch {
                expected: self.ambient.total(),
                found: v.len(),
            });
        }
        let (e, o) = v.split_at(self.ambient.even);
        let mut out = self.even.reduce(e)?;
        out.extend(self.odd.reduce(o)?);
        Ok(out)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, AlgebraError> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    pub fn is_subspace_of(&self, other: &GradedSubspace) -> Result<bool, AlgebraError> {
        Ok(self.even.is_subspace_of(&other.even)? && self.odd.is_subspace_of(&other.odd)?)
    }

    pub fn intersection(&self, other: &GradedSubspace) -> Result<GradedSubspace, AlgebraError> {
        GradedSubspace::from_parts(
            self.ambient,
            self.even.intersection(&other.even)?,
            self.odd.intersection(&other.odd)?,
        )
    }

    pub fn sum(&self, other: &GradedSubspace) -> Result<GradedSubspace, AlgebraError> {
        GradedSubspace::from_parts(self.ambient, self.even.sum(&other.even)?, self.odd.sum(&other.odd)?)
    }

    /// Global coordinates not hit by a pivot, even ones first. Their
    /// coordinate vectors span a homogeneous complement.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        let mut out = self.even.free_columns();
        out.extend(self.odd.free_columns().into_iter().map(|c| c + self.ambient.even));
        out
    }
}
