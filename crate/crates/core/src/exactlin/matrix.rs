use super::{Field, LinAlgError, Scalar};

/// Dense row-major matrix of exact scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(field: Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self, LinAlgError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(LinAlgError::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix {
            field,
            rows: n,
            cols,
            entries,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Result<Self, LinAlgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect();
        Matrix::from_rows(field, cols, rows)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// Reduced row-echelon form, rank and pivot columns.
    pub fn rref(&self) -> (Matrix, usize, Vec<usize>) {
        let mut rows = self.row_vectors();
        let pivots = rref_in_place(&mut rows, self.cols);
        let rank = pivots.len();
        let mut out = Matrix::zeros(self.field, self.rows, self.cols);
        for (i, row) in rows.into_iter().enumerate() {
            out.entries[i * self.cols..(i + 1) * self.cols].clone_from_slice(&row);
        }
        (out, rank, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Basis of the right null space `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, rank, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (i, &p) in pivots.iter().enumerate().take(rank) {
                v[p] = -&r[(i, free)];
            }
            basis.push(v);
        }
        basis
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.entries[i * self.cols + j]
    }
}

/// Gauss-Jordan elimination on a list of rows. Rows are permuted so the
/// nonzero rows come first in pivot order; returns the pivot columns.
pub(crate) fn rref_in_place(rows: &mut [Vec<Scalar>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        for x in rows[r][c..].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().expect("row r exists");
        for other in head.iter_mut().chain(rest.iter_mut()) {
            if other[c].is_zero() {
                continue;
            }
            let factor = other[c].clone();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    other[j].sub_mul(&factor, &pivot_row[j]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity() {
        let f = Field::Rational;
        let m = Matrix::identity(f, 2);
        let (r, rank, pivots) = m.rref();
        assert_eq!(r, m);
        assert_eq!(rank, 2);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_proportional_rows() {
        let f = Field::Rational;
        let m = Matrix::from_i64(f, &[&[1, 2], &[2, 4]]).unwrap();
        let (r, rank, pivots) = m.rref();
        assert_eq!(r, Matrix::from_i64(f, &[&[1, 2], &[0, 0]]).unwrap());
        assert_eq!(rank, 1);
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_full_rank_three_by_three() {
        // determinant of [[0,1,1],[1,0,1],[1,1,0]] is 2 (cofactor expansion), so rank 3 over Q
        let m = Matrix::from_i64(Field::Rational, &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]).unwrap();
        let (r, rank, pivots) = m.rref();
        assert_eq!(rank, 3);
        assert_eq!(pivots, vec![0, 1, 2]);
        assert_eq!(r, Matrix::identity(Field::Rational, 3));
    }

    #[test]
    fn rref_rational_pivots() {
        let f = Field::Rational;
        let m = Matrix::from_i64(f, &[&[2, 1, 0], &[4, 2, 3]]).unwrap();
        let (r, rank, _) = m.rref();
        assert_eq!(rank, 2);
        let half = &f.one() / &f.from_i64(2);
        assert_eq!(r[(0, 1)], half);
        assert_eq!(r[(1, 2)], f.one());
    }

    #[test]
    fn kernel_of_rank_one() {
        let f = Field::Rational;
        let m = Matrix::from_i64(f, &[&[1, 2, 3]]).unwrap();
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            let s = (0..3).fold(f.zero(), |acc, j| &acc + &(&m[(0, j)] * &v[j]));
            assert!(s.is_zero());
        }
    }

    #[test]
    fn ragged_rows_rejected() {
        let f = Field::Rational;
        let err = Matrix::from_rows(f, 2, vec![vec![f.one(), f.one()], vec![f.one()]]).unwrap_err();
        assert_eq!(err, LinAlgError::DimensionMismatch { expected: 2, found: 1 });
    }
}
