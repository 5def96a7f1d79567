use proptest::prelude::*;
use supertensor::gamma::{gamma_dim, gamma_direct_sum_check, gamma_of_abelianization};
use supertensor::superalg::{
    abelian, abelianization, direct_sum, heisenberg_even, heisenberg_odd, recognize_heisenberg_plus_abelian,
    HeisenbergKind, LieSuperAlgebra,
};
use supertensor::tensor::{
    exterior_square_with, module_tensor, square_ideal_of, tensor_square, tensor_square_with, TensorError,
};
use supertensor::{Execution, Field, SuperDim};

fn small_nilpotent() -> impl Strategy<Value = LieSuperAlgebra> {
    prop_oneof![
        (0usize..=2, 0usize..=2)
            .prop_filter("m+n>0", |(m, n)| m + n > 0 && 2 * m + 1 + n <= 5)
            .prop_map(|(m, n)| heisenberg_even(m, n).unwrap()),
        (1usize..=2).prop_map(|m| heisenberg_odd(m).unwrap()),
        (0usize..=2, 0usize..=2).prop_map(|(a, b)| abelian(a, b)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn abelian_tensor_square_is_module_tensor(a in 0usize..4, b in 0usize..4) {
        let l = abelian(a, b);
        let t = tensor_square(&l).unwrap();
        prop_assert!(t.is_abelian());
        prop_assert_eq!(t.dim(), module_tensor(l.dim(), l.dim()));
    }

    #[test]
    fn direct_sum_law(l in small_nilpotent(), m in small_nilpotent()) {
        let s = direct_sum(&l, &m).unwrap();
        prop_assume!(s.total() <= 7);
        let cross = module_tensor(abelianization(&l).dim(), abelianization(&m).dim());
        let lhs = tensor_square(&s).unwrap().dim();
        let rhs = tensor_square(&l).unwrap().dim() + tensor_square(&m).unwrap().dim() + cross.scale(2);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn split_through_square_ideal(l in small_nilpotent(), a in 0usize..2, b in 0usize..2) {
        let l = direct_sum(&l, &abelian(a, b)).unwrap();
        let t = tensor_square(&l).unwrap();
        let sq = square_ideal_of(&t).unwrap().dim;
        prop_assert_eq!(sq, gamma_of_abelianization(&l));
        let ext = exterior_square_with(&l, Execution::Sequential).unwrap().dim();
        prop_assert_eq!(t.dim(), sq + ext);
    }

    #[test]
    fn sequential_and_parallel_agree(l in small_nilpotent()) {
        let seq = tensor_square_with(&l, Execution::Sequential).unwrap();
        let par = tensor_square_with(&l, Execution::Parallel).unwrap();
        prop_assert_eq!(seq.system().relations(), par.system().relations());
        prop_assert_eq!(seq.algebra(), par.algebra());
    }

    #[test]
    fn recognizer_round_trip(m in 0usize..3, n in 0usize..3, a in 0usize..3, b in 0usize..3, odd in any::<bool>()) {
        let (core, kind) = if odd {
            prop_assume!(m >= 1);
            (heisenberg_odd(m).unwrap(), HeisenbergKind::Odd { m })
        } else {
            prop_assume!(m + n >= 1);
            (heisenberg_even(m, n).unwrap(), HeisenbergKind::Even { m, n })
        };
        let l = direct_sum(&core, &abelian(a, b)).unwrap();
        let tag = recognize_heisenberg_plus_abelian(&l).unwrap();
        prop_assert_eq!(tag.kind, kind);
        prop_assert_eq!(tag.complement, SuperDim::new(a, b));
    }

    #[test]
    fn gamma_is_additive_up_to_cross_terms(a in 0usize..6, b in 0usize..6, c in 0usize..6, d in 0usize..6) {
        prop_assert!(gamma_direct_sum_check(SuperDim::new(a, b), SuperDim::new(c, d)));
        let g = gamma_dim(SuperDim::new(a, b));
        prop_assert_eq!(g.total(), a + (a + b) * (a + b - usize::from(a + b > 0)) / 2);
    }
}

#[test]
fn tensor_square_over_prime_fields_matches_rationals() {
    for p in [5, 7, 11] {
        let f = Field::prime(p).unwrap();
        for l in [heisenberg_even(1, 1).unwrap(), heisenberg_odd(2).unwrap()] {
            let over_p = tensor_square(&l.change_field(f).unwrap()).unwrap();
            assert_eq!(
                over_p.dim(),
                tensor_square(&l).unwrap().dim(),
                "{} over GF({p})",
                l.name()
            );
            assert!(over_p.verify().is_empty());
        }
    }
}

#[test]
fn every_computed_quotient_is_a_lie_superalgebra() {
    for l in [heisenberg_even(2, 1).unwrap(), heisenberg_odd(3).unwrap()] {
        let t = tensor_square(&l).unwrap();
        assert!(t.verify().is_empty(), "{:?}", t.verify());
        assert!(t.grading_consistent());
    }
}

#[test]
fn non_nilpotent_input_is_rejected() {
    let mut l = abelian(2, 0);
    l.set_bracket(0, 1, &[(1, l.field().one())]);
    assert!(matches!(tensor_square(&l), Err(TensorError::NonNilpotent(_))));
}
