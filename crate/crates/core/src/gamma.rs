//! The universal quadratic functor Γ on finite-dimensional supermodules.
//!
//! Over a field every supermodule is free, so Γ is described completely by
//! its homogeneous basis: `γ(x_i)` for each even basis vector and
//! `x_i ⊗ x_j` for each `i < j` in an ordering with evens first.

use serde::Serialize;

use crate::superalg::{abelianization, LieSuperAlgebra, Parity, SuperDim};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaGenerator {
    /// `γ(x_i)`, `x_i` even.
    Gamma(usize),
    /// `x_i ⊗ x_j`, `i < j`.
    Pair(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaBasis {
    pub source: SuperDim,
    pub generators: Vec<(GammaGenerator, Parity)>,
}

impl GammaBasis {
    pub fn new(source: SuperDim) -> Self {
        let t = source.total();
        let parity = |i: usize| if i < source.even { Parity::Even } else { Parity::Odd };
        let mut generators: Vec<(GammaGenerator, Parity)> = (0..source.even)
            .map(|i| (GammaGenerator::Gamma(i), Parity::Even))
            .collect();
        // Diagonal pairs are absent: x⊗x = 2γ(x) for even x, and x⊗x = 0 for odd x.
        for i in 0..t {
            for j in i + 1..t {
                generators.push((GammaGenerator::Pair(i, j), parity(i) + parity(j)));
            }
        }
        GammaBasis { source, generators }
    }

    pub fn dim(&self) -> SuperDim {
        let odd = self.generators.iter().filter(|(_, p)| p.is_odd()).count();
        SuperDim::new(self.generators.len() - odd, odd)
    }
}

fn choose2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// `dim Γ(m|n) = (m + C(m,2) + C(n,2) | mn)`.
pub fn gamma_dim(d: SuperDim) -> SuperDim {
    SuperDim::new(d.even + choose2(d.even) + choose2(d.odd), d.even * d.odd)
}

/// Checks `Γ(M ⊕ N) ≅ Γ(M) ⊕ Γ(N) ⊕ (M ⊗ N)` on dimensions.
pub fn gamma_direct_sum_check(a: SuperDim, b: SuperDim) -> bool {
    gamma_dim(a + b) == gamma_dim(a) + gamma_dim(b) + a * b
}

/// `dim Γ(L / L²)`, the predicted dimension of the square ideal `L □ L`.
pub fn gamma_of_abelianization(l: &LieSuperAlgebra) -> SuperDim {
    gamma_dim(abelianization(l).dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::{abelian, heisenberg_even, heisenberg_odd};

    #[test]
    fn small_dimensions() {
        assert_eq!(gamma_dim(SuperDim::new(2, 0)), SuperDim::new(3, 0));
        assert_eq!(gamma_dim(SuperDim::new(0, 1)), SuperDim::new(0, 0));
        assert_eq!(gamma_dim(SuperDim::new(2, 1)), SuperDim::new(3, 2));
        assert_eq!(gamma_dim(SuperDim::new(2, 2)), SuperDim::new(4, 4));
    }

    #[test]
    fn basis_enumeration_two_one() {
        let b = GammaBasis::new(SuperDim::new(2, 1));
        let gens: Vec<GammaGenerator> = b.generators.iter().map(|g| g.0).collect();
        assert_eq!(
            gens,
            vec![
                GammaGenerator::Gamma(0),
                GammaGenerator::Gamma(1),
                GammaGenerator::Pair(0, 1),
                GammaGenerator::Pair(0, 2),
                GammaGenerator::Pair(1, 2),
            ]
        );
        assert_eq!(b.dim(), SuperDim::new(3, 2));
    }

    #[test]
    fn basis_count_matches_formula() {
        for e in 0..=6 {
            for o in 0..=6 {
                let d = SuperDim::new(e, o);
                let b = GammaBasis::new(d);
                assert_eq!(b.dim(), gamma_dim(d));
                assert_eq!(b.dim().total(), e + choose2(e + o));
            }
        }
    }

    #[test]
    fn direct_sum_examples() {
        assert!(gamma_direct_sum_check(SuperDim::new(1, 0), SuperDim::new(1, 1)));
        assert!(gamma_direct_sum_check(SuperDim::ZERO, SuperDim::new(3, 2)));
        assert!(gamma_direct_sum_check(SuperDim::new(2, 0), SuperDim::new(0, 2)));
    }

    #[test]
    fn classical_and_exterior_cases() {
        for m in 0..=10 {
            assert_eq!(gamma_dim(SuperDim::new(m, 0)), SuperDim::new(m * (m + 1) / 2, 0));
            assert_eq!(gamma_dim(SuperDim::new(0, m)), SuperDim::new(choose2(m), 0));
        }
    }

    #[test]
    fn direct_sum_exhaustive() {
        for total_a in 0..=6 {
            for ae in 0..=total_a {
                for total_b in 0..=6 - total_a {
                    for be in 0..=total_b {
                        let a = SuperDim::new(ae, total_a - ae);
                        let b = SuperDim::new(be, total_b - be);
                        assert!(gamma_direct_sum_check(a, b), "{a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn abelianization_gamma() {
        for (m, n) in [(1, 0), (0, 1), (1, 1), (2, 0), (2, 1), (1, 2)] {
            let h = heisenberg_even(m, n).unwrap();
            let expected = SuperDim::new(2 * m * m + m + n * n.saturating_sub(1) / 2, 2 * m * n);
            assert_eq!(gamma_of_abelianization(&h), expected, "H({m},{n})");
        }
        assert_eq!(gamma_of_abelianization(&abelian(1, 0)), SuperDim::new(1, 0));
        assert_eq!(
            gamma_of_abelianization(&heisenberg_odd(1).unwrap()),
            SuperDim::new(1, 1)
        );
    }
}
