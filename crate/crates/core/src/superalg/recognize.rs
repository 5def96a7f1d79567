use serde::Serialize;

use crate::exactlin::Matrix;

use super::{center, derived_subalgebra, LieSuperAlgebra, SuperDim};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "center", rename_all = "lowercase")]
pub enum HeisenbergKind {
    /// `H(m, n)`, `m + n >= 1`.
    Even { m: usize, n: usize },
    /// `H_m`, `m >= 1`.
    Odd { m: usize },
}

/// `L ≅ H ⊕ A(complement)` with `H` the Heisenberg superalgebra named by `kind`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HeisenbergTag {
    pub kind: HeisenbergKind,
    pub complement: SuperDim,
}

impl std::fmt::Display for HeisenbergTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            HeisenbergKind::Even { m, n } => write!(f, "H({m},{n})")?,
            HeisenbergKind::Odd { m } => write!(f, "H_{m}")?,
        }
        if self.complement.total() > 0 {
            write!(f, "+A({}|{})", self.complement.even, self.complement.odd)?;
        }
        Ok(())
    }
}

/// Recognizes `H(m,n) ⊕ A` and `H_m ⊕ A` from the bracket form `L/Z(L) × L/Z(L) → L²`.
///
/// Parameters are read off block ranks of that form, so the answer classifies
/// `L` up to extension of scalars. Returns `None` when `L²` is not a central line.
pub fn recognize_heisenberg_plus_abelian(l: &LieSuperAlgebra) -> Option<HeisenbergTag> {
    let derived = derived_subalgebra(l);
    let d = derived.dim();
    if d != SuperDim::new(1, 0) && d != SuperDim::new(0, 1) {
        return None;
    }
    let z = center(l);
    if !derived.is_subspace_of(&z).ok()? {
        return None;
    }
    let generator = derived.basis().pop()?;
    let pivot = generator.iter().position(|c| !c.is_zero())?;
    let t = l.total();
    let e = l.dim().even;
    let form = |rows: std::ops::Range<usize>, cols: std::ops::Range<usize>| -> usize {
        let width = cols.len();
        let entries = rows
            .map(|i| {
                cols.clone()
                    .map(|j| l.constant(i, j, pivot) / &generator[pivot])
                    .collect()
            })
            .collect();
        Matrix::from_rows(l.field(), width, entries)
            .expect("uniform width")
            .rank()
    };
    let full_rank = form(0..t, 0..t);
    let quotient = l.dim().checked_sub(z.dim())?;
    if full_rank != quotient.total() {
        return None;
    }
    let complement = z.dim().checked_sub(d)?;
    let kind = if d.even == 1 {
        let even_rank = form(0..e, 0..e);
        let odd_rank = form(e..t, e..t);
        if even_rank % 2 != 0 || form(0..e, e..t) != 0 {
            return None;
        }
        HeisenbergKind::Even {
            m: even_rank / 2,
            n: odd_rank,
        }
    } else {
        let mixed = form(0..e, e..t);
        if form(0..e, 0..e) != 0 || form(e..t, e..t) != 0 || quotient != SuperDim::new(mixed, mixed) {
            return None;
        }
        HeisenbergKind::Odd { m: mixed }
    };
    Some(HeisenbergTag { kind, complement })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;
    use crate::superalg::{abelian, direct_sum, heisenberg_even, heisenberg_odd, model_filiform};

    #[test]
    fn heisenberg_plus_abelian() {
        let l = direct_sum(&heisenberg_even(1, 0).unwrap(), &abelian(2, 1)).unwrap();
        assert_eq!(
            recognize_heisenberg_plus_abelian(&l),
            Some(HeisenbergTag {
                kind: HeisenbergKind::Even { m: 1, n: 0 },
                complement: SuperDim::new(2, 1)
            })
        );
    }

    #[test]
    fn odd_center() {
        let l = heisenberg_odd(2).unwrap();
        assert_eq!(
            recognize_heisenberg_plus_abelian(&l),
            Some(HeisenbergTag {
                kind: HeisenbergKind::Odd { m: 2 },
                complement: SuperDim::ZERO
            })
        );
    }

    #[test]
    fn not_heisenberg() {
        assert_eq!(recognize_heisenberg_plus_abelian(&abelian(3, 2)), None);
        assert_eq!(recognize_heisenberg_plus_abelian(&model_filiform(4).unwrap()), None);
        // [x1, x2] = x2: derived line, not central.
        let mut a = abelian(2, 0);
        a.set_bracket(0, 1, &[(1, Field::Rational.one())]);
        assert_eq!(recognize_heisenberg_plus_abelian(&a), None);
    }

    #[test]
    fn scaled_generators() {
        // [y1, y1] = 2z, [y2, y2] = -3z: symmetric part of rank 2.
        let f = Field::Rational;
        let mut l = abelian(1, 2);
        l.set_bracket(1, 1, &[(0, f.from_i64(2))]);
        l.set_bracket(2, 2, &[(0, f.from_i64(-3))]);
        assert!(l.validate().is_empty());
        assert_eq!(
            recognize_heisenberg_plus_abelian(&l).map(|t| t.kind),
            Some(HeisenbergKind::Even { m: 0, n: 2 })
        );
    }
}
