use crate::exactlin::Field;

use super::{AlgebraError, LieSuperAlgebra, SuperDim};

/// `A(a|b)`, the abelian Lie superalgebra of dimension `(a|b)`.
pub fn abelian(even: usize, odd: usize) -> LieSuperAlgebra {
    LieSuperAlgebra::zero_brackets(format!("A({even}|{odd})"), Field::Rational, SuperDim::new(even, odd))
}

/// `H(m, n)`: even center. Basis `x_1..x_{2m}, z | y_1..y_n` with
/// `[x_i, x_{m+i}] = z` and `[y_j, y_j] = z`.
pub fn heisenberg_even(m: usize, n: usize) -> Result<LieSuperAlgebra, AlgebraError> {
    if m + n == 0 {
        return Err(AlgebraError::InvalidParameters("H(m,n) needs m + n >= 1".into()));
    }
    let f = Field::Rational;
    let z = 2 * m;
    let mut h = LieSuperAlgebra::zero_brackets(format!("H({m},{n})"), f, SuperDim::new(2 * m + 1, n));
    for i in 0..m {
        h.set_bracket(i, m + i, &[(z, f.one())]);
    }
    for j in 0..n {
        let y = 2 * m + 1 + j;
        h.set_bracket(y, y, &[(z, f.one())]);
    }
    Ok(h)
}

/// `H_m`: odd center. Basis `x_1..x_m | y_1..y_m, z` with `[x_j, y_j] = z`.
pub fn heisenberg_odd(m: usize) -> Result<LieSuperAlgebra, AlgebraError> {
    if m == 0 {
        return Err(AlgebraError::InvalidParameters("H_m needs m >= 1".into()));
    }
    let f = Field::Rational;
    let z = 2 * m;
    let mut h = LieSuperAlgebra::zero_brackets(format!("H_{m}"), f, SuperDim::new(m, m + 1));
    for j in 0..m {
        h.set_bracket(j, m + j, &[(z, f.one())]);
    }
    Ok(h)
}

/// The model filiform Lie algebra of dimension `n >= 3`: `[x_1, x_i] = x_{i+1}`.
pub fn model_filiform(n: usize) -> Result<LieSuperAlgebra, AlgebraError> {
    if n < 3 {
        return Err(AlgebraError::InvalidParameters("model filiform needs n >= 3".into()));
    }
    let f = Field::Rational;
    let mut l = LieSuperAlgebra::zero_brackets(format!("F({n})"), f, SuperDim::new(n, 0));
    for i in 1..n - 1 {
        l.set_bracket(0, i, &[(i + 1, f.one())]);
    }
    Ok(l)
}

/// One even vector acting on `n >= 2` odd vectors by a single nilpotent
/// Jordan block: `[x, y_i] = y_{i+1}`. Dimension `(1|n)`, class `n`.
pub fn odd_chain(n: usize) -> Result<LieSuperAlgebra, AlgebraError> {
    if n < 2 {
        return Err(AlgebraError::InvalidParameters("odd chain needs n >= 2".into()));
    }
    let f = Field::Rational;
    let mut l = LieSuperAlgebra::zero_brackets(format!("C(1|{n})"), f, SuperDim::new(1, n));
    for i in 1..n {
        l.set_bracket(0, i, &[(i + 1, f.one())]);
    }
    Ok(l)
}
