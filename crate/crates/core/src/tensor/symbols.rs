use crate::exactlin::{linear_combination, sign, Field, Scalar};
use crate::superalg::{LieSuperAlgebra, Parity, SuperDim};

/// The free graded span of the pair symbols `e(i,j) = x_i ⊗ x_j`.
///
/// Columns enumerate even symbols first, then odd ones, each group in
/// lexicographic `(i, j)` order, so a quotient basis taken from a subset of
/// columns is automatically even-before-odd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolSpace {
    field: Field,
    source: SuperDim,
    column_of: Vec<usize>,
    symbol_of: Vec<(usize, usize)>,
    even_count: usize,
}

impl SymbolSpace {
    pub fn new(l: &LieSuperAlgebra) -> Self {
        let t = l.total();
        let mut symbol_of = Vec::with_capacity(t * t);
        for want in [Parity::Even, Parity::Odd] {
            for i in 0..t {
                for j in 0..t {
                    if l.parity(i) + l.parity(j) == want {
                        symbol_of.push((i, j));
                    }
                }
            }
        }
        let mut column_of = vec![0; t * t];
        for (col, &(i, j)) in symbol_of.iter().enumerate() {
            column_of[i * t + j] = col;
        }
        let d = l.dim();
        SymbolSpace {
            field: l.field(),
            source: d,
            column_of,
            symbol_of,
            even_count: d.even * d.even + d.odd * d.odd,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Dimension of the source algebra.
    pub fn source(&self) -> SuperDim {
        self.source
    }

    /// `(t_even² + t_odd² | 2 t_even t_odd)`.
    pub fn dim(&self) -> SuperDim {
        SuperDim::new(self.even_count, self.len() - self.even_count)
    }

    pub fn len(&self) -> usize {
        self.symbol_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbol_of.is_empty()
    }

    pub fn column(&self, i: usize, j: usize) -> usize {
        self.column_of[i * self.source.total() + j]
    }

    pub fn symbol(&self, col: usize) -> (usize, usize) {
        self.symbol_of[col]
    }

    pub fn parity(&self, col: usize) -> Parity {
        if col < self.even_count {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![self.field.zero(); self.len()]
    }

    pub fn unit(&self, col: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[col] = self.field.one();
        v
    }

    /// `a ⊗ b` for coefficient vectors `a, b` of the source algebra.
    pub fn pair(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (p, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (q, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                out[self.column(p, q)] += &(x * y);
            }
        }
        out
    }
}

/// The bracket induced on symbols by `[m⊗n, m'⊗n'] = −(−1)^{|m||n|} (ⁿm ⊗ ^{m'}n')`
/// with the self-action `ᵃb = [a, b]`.
///
/// The bracket of `e(i,j)` and `e(k,l)` is `left(i,j) ⊗ right(k,l)` where
/// `left(i,j) = −(−1)^{|i||j|}[x_j, x_i]` and `right(k,l) = [x_k, x_l]`.
#[derive(Clone, Debug)]
pub struct BracketTable {
    space: SymbolSpace,
    left: Vec<Vec<Scalar>>,
    right: Vec<Vec<Scalar>>,
    active: Vec<usize>,
    source_len: usize,
}

impl BracketTable {
    pub fn new(l: &LieSuperAlgebra) -> Self {
        let space = SymbolSpace::new(l);
        let f = l.field();
        let mut left: Vec<Vec<Scalar>> = Vec::with_capacity(space.len());
        let mut right: Vec<Vec<Scalar>> = Vec::with_capacity(space.len());
        for col in 0..space.len() {
            let (i, j) = space.symbol(col);
            let s = -sign(f, l.parity(i).is_odd() && l.parity(j).is_odd());
            left.push(l.bracket_basis(j, i).iter().map(|c| &s * c).collect());
            right.push(l.bracket_basis(i, j));
        }
        let active = (0..space.len())
            .filter(|&c| right[c].iter().any(|x| !x.is_zero()) || left[c].iter().any(|x| !x.is_zero()))
            .collect();
        BracketTable {
            space,
            left,
            right,
            active,
            source_len: l.total(),
        }
    }

    pub fn space(&self) -> &SymbolSpace {
        &self.space
    }

    /// Symbols whose bracket with anything can be nonzero; every other
    /// symbol is central in the symbol algebra.
    pub fn active(&self) -> &[usize] {
        &self.active
    }

    /// `Σ u_s left(s)`, an element of the source algebra.
    pub fn left_factor(&self, u: &[Scalar]) -> Vec<Scalar> {
        linear_combination(self.space.field(), self.source_len, u, &self.left)
    }

    /// `Σ u_s right(s)`. On symbols this is the derived map `e(i,j) ↦ [x_i, x_j]`.
    pub fn right_factor(&self, u: &[Scalar]) -> Vec<Scalar> {
        linear_combination(self.space.field(), self.source_len, u, &self.right)
    }

    pub fn derived(&self, u: &[Scalar]) -> Vec<Scalar> {
        self.right_factor(u)
    }

    pub fn left_of_symbol(&self, col: usize) -> &[Scalar] {
        &self.left[col]
    }

    pub fn derived_of_symbol(&self, col: usize) -> &[Scalar] {
        &self.right[col]
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        self.space.pair(&self.left_factor(u), &self.right_factor(v))
    }

    pub fn bracket_symbols(&self, a: usize, b: usize) -> Vec<Scalar> {
        self.space.pair(&self.left[a], &self.right[b])
    }

    /// `[u, v] + (−1)^{|u||v|}[v, u]` for symbols `u, v`.
    pub fn antisymmetry_defect(&self, u: usize, v: usize) -> Vec<Scalar> {
        let odd = self.space.parity(u).is_odd() && self.space.parity(v).is_odd();
        let s = sign(self.space.field(), odd);
        let mut out = self.bracket_symbols(u, v);
        for (o, x) in out.iter_mut().zip(self.bracket_symbols(v, u)) {
            if !x.is_zero() {
                *o += &(&s * &x);
            }
        }
        out
    }

    /// Graded Jacobi sum of the symbols `u, v, w`.
    pub fn jacobi_defect(&self, u: usize, v: usize, w: usize) -> Vec<Scalar> {
        let f = self.space.field();
        let p = |c: usize| self.space.parity(c).is_odd();
        let mut out = self.space.zero();
        for (a, b, c, s) in [
            (u, v, w, p(u) && p(w)),
            (v, w, u, p(v) && p(u)),
            (w, u, v, p(w) && p(v)),
        ] {
            let inner = self.bracket_symbols(b, c);
            let term = self.space.pair(&self.left[a], &self.right_factor(&inner));
            let s = sign(f, s);
            for (o, x) in out.iter_mut().zip(term) {
                if !x.is_zero() {
                    *o += &(&s * &x);
                }
            }
        }
        out
    }
}
