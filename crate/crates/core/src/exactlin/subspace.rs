use super::matrix::rref_in_place;
use super::{Field, LinAlgError, Matrix, Scalar};

/// A linear subspace of `F^n`, stored as its canonical reduced row-echelon basis.
///
/// Two subspaces are equal iff their row lists are equal, so `==` is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        let rows = Matrix::identity(field, ambient).row_vectors();
        Subspace {
            field,
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given vectors.
    pub fn span<I>(field: Field, ambient: usize, vectors: I) -> Result<Self, LinAlgError>
    where
        I: IntoIterator<Item = Vec<Scalar>>,
    {
        let mut rows = Vec::new();
        for v in vectors {
            check_len(ambient, v.len())?;
            if v.iter().any(|x| !x.is_zero()) {
                rows.push(v);
            }
        }
        let pivots = rref_in_place(&mut rows, ambient);
        rows.truncate(pivots.len());
        Ok(Subspace {
            field,
            ambient,
            rows,
            pivots,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns that carry no pivot; their coordinate vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    pub fn quotient_dim(&self) -> usize {
        self.ambient - self.rank()
    }

    /// Canonical representative of `v` modulo this subspace: every pivot
    /// coordinate of the result is zero.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinAlgError> {
        check_len(self.ambient, v.len())?;
        let mut out = v.to_vec();
        self.reduce_in_place(&mut out);
        Ok(out)
    }

    pub(crate) fn reduce_in_place(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for j in p..self.ambient {
                if !row[j].is_zero() {
                    v[j].sub_mul(&factor, &row[j]);
                }
            }
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinAlgError> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    /// Adds `v` to the subspace, keeping the basis in canonical form.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, v: &[Scalar]) -> Result<bool, LinAlgError> {
        check_len(self.ambient, v.len())?;
        let mut v = v.to_vec();
        self.reduce_in_place(&mut v);
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = v[lead].inverse().expect("nonzero lead");
        for x in v[lead..].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[lead].is_zero() {
                continue;
            }
            let factor = row[lead].clone();
            for j in lead..self.ambient {
                if !v[j].is_zero() {
                    row[j].sub_mul(&factor, &v[j]);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.rows.insert(at, v);
        self.pivots.insert(at, lead);
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        check_len(self.ambient, other.ambient)?;
        let mut out = self.clone();
        for row in &other.rows {
            out.insert(row)?;
        }
        Ok(out)
    }

    /// `U ∩ V`, from the left kernel of the stacked basis `[U; -V]`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        check_len(self.ambient, other.ambient)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.field, self.ambient));
        }
        let mut stacked = self.rows.clone();
        stacked.extend(other.rows.iter().map(|r| r.iter().map(|x| -x).collect()));
        let m = Matrix::from_rows(self.field, self.ambient, stacked)?;
        let relations = m.transpose().kernel();
        let k = self.rank();
        let vectors = relations.into_iter().map(|coeffs| {
            let mut v = vec![self.field.zero(); self.ambient];
            for (c, row) in coeffs[..k].iter().zip(&self.rows) {
                if c.is_zero() {
                    continue;
                }
                for (x, r) in v.iter_mut().zip(row) {
                    *x += &(c * r);
                }
            }
            v
        });
        Subspace::span(self.field, self.ambient, vectors)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool, LinAlgError> {
        check_len(self.ambient, other.ambient)?;
        for row in &self.rows {
            if !other.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn check_len(expected: usize, found: usize) -> Result<(), LinAlgError> {
    if expected == found {
        Ok(())
    } else {
        Err(LinAlgError::DimensionMismatch { expected, found })
    }
}
