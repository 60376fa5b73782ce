use fibsum_core::transforms::{
    binomial_transform, inverse_transform, lemma2_lhs, nabla_direct, nabla_sum, theorem1_eval,
};
use fibsum_core::Seq;
use proptest::collection::vec;
use proptest::prelude::*;

fn seq(max_len: usize) -> impl Strategy<Value = Seq> {
    vec(-1_000_000i64..1_000_000, 1..=max_len).prop_map(|v| Seq::from_integers(v).unwrap())
}

fn pair(max_len: usize) -> impl Strategy<Value = (Seq, Seq)> {
    (1..=max_len).prop_flat_map(|n| {
        (vec(-1000i64..1000, n), vec(-1000i64..1000, n)).prop_map(|(a, c)| {
            (
                Seq::from_integers(a).unwrap(),
                Seq::from_integers(c).unwrap(),
            )
        })
    })
}

proptest! {
    #[test]
    fn transform_round_trips(a in seq(64)) {
        prop_assert_eq!(inverse_transform(&binomial_transform(&a)), a.clone());
        prop_assert_eq!(binomial_transform(&inverse_transform(&a)), a);
    }

    #[test]
    fn backward_difference_routes_agree(b in seq(17)) {
        for n in 0..b.len() {
            for m in 0..=n {
                prop_assert_eq!(nabla_direct(&b, m, n).unwrap(), nabla_sum(&b, m, n).unwrap());
            }
        }
    }

    #[test]
    fn lemma2_matches_difference_of_transform(a in seq(17)) {
        let b = binomial_transform(&a);
        for n in 0..a.len() {
            for m in 0..=n {
                prop_assert_eq!(lemma2_lhs(&a, m, n).unwrap(), nabla_sum(&b, m, n).unwrap());
            }
        }
    }

    #[test]
    fn theorem1_three_forms_agree((a, c) in pair(16)) {
        let (lhs, r8, r81) = theorem1_eval(&a, &c).unwrap();
        prop_assert_eq!(&lhs, &r8);
        prop_assert_eq!(&lhs, &r81);
    }
}
