use proptest::prelude::*;

use super::{FieldSpec, Matrix};

fn matrix_strategy(field: FieldSpec) -> impl Strategy<Value = Matrix> {
    (0usize..6, 0usize..6).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-3i64..4, r * c).prop_map(move |v| {
            let data = v.into_iter().map(|x| field.from_i64(x)).collect();
            Matrix::from_vec(field, r, c, data)
        })
    })
}

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::PrimeField(2)),
        Just(FieldSpec::PrimeField(3)),
        Just(FieldSpec::PrimeField(7)),
    ]
}

proptest! {
    #[test]
    fn rank_equals_transpose_rank(m in fields().prop_flat_map(matrix_strategy)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_is_annihilated(m in fields().prop_flat_map(matrix_strategy)) {
        let k = m.kernel_basis();
        prop_assert!(m.mul(&k).is_zero());
        prop_assert_eq!(k.cols(), m.cols() - m.rank());
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn rref_is_idempotent(m in fields().prop_flat_map(matrix_strategy)) {
        let r = m.rref();
        prop_assert_eq!(r.rank, r.pivots.len());
        let again = r.reduced.rref();
        prop_assert_eq!(&again.reduced, &r.reduced);
    }

    #[test]
    fn solve_returns_solutions(m in fields().prop_flat_map(matrix_strategy), seed in 0i64..5) {
        let x0 = Matrix::from_vec(
            m.field(), m.cols(), 1,
            (0..m.cols() as i64).map(|i| m.field().from_i64(i * seed - 2)).collect(),
        );
        let b = m.mul(&x0);
        let x = m.solve(&b).unwrap();
        prop_assert!(x.is_some());
        prop_assert_eq!(m.mul(&x.unwrap()), b);
    }
}
