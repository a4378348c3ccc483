mod common;

use proptest::prelude::*;
use rand::Rng;
use stochastic_tensors::diagonal::{enumerate_positive_diagonals, is_positive_diagonal};
use stochastic_tensors::fixtures::{example_e, example_f};
use stochastic_tensors::rational::ratio;
use stochastic_tensors::sampling::random_convex_combination;
use stochastic_tensors::{enumerate_vertices, find_positive_diagonal, Rational, Tensor3};

#[test]
fn search_agrees_with_exhaustive_filter() {
    let vertices = enumerate_vertices(3).unwrap().vertices;
    let mut rng = common::rng(500);
    let mut cases = vec![example_e(), example_f(), Tensor3::uniform(3)];
    cases.extend(vertices.iter().cloned());
    for _ in 0..500 {
        // mixtures of one to three vertices keep plenty of zeros around
        let k = rng.random_range(1..=3);
        let picks: Vec<Tensor3> = (0..k)
            .map(|_| vertices[rng.random_range(0..vertices.len())].clone())
            .collect();
        cases.push(random_convex_combination(&picks, &mut rng));
    }
    let mut with = 0;
    for t in &cases {
        let found = find_positive_diagonal(t);
        let all = enumerate_positive_diagonals(t).unwrap();
        assert_eq!(found.is_some(), !all.is_empty());
        if let Some(w) = found {
            assert_eq!(
                Some(&w),
                all.first(),
                "search must return the least witness"
            );
            with += 1;
        }
    }
    assert!(with > 0 && with < cases.len());
}

#[test]
fn order_four_search_agrees_with_filter() {
    let mut rng = common::rng(44);
    for _ in 0..40 {
        let mut t = common::random_stochastic(4, &mut rng);
        // knock out a few entries; stochasticity is irrelevant here
        for _ in 0..rng.random_range(0..12) {
            let (i, j, k) = (
                rng.random_range(0..4),
                rng.random_range(0..4),
                rng.random_range(0..4),
            );
            t.set(i, j, k, ratio(0, 1));
        }
        let found = find_positive_diagonal(&t);
        let all = enumerate_positive_diagonals(&t).unwrap();
        assert_eq!(found.as_ref(), all.first());
    }
}

fn small_nonneg() -> impl Strategy<Value = Rational> {
    prop_oneof![
        Just(ratio(0, 1)),
        (1i64..=5, 1i64..=3).prop_map(|(p, q)| ratio(p, q))
    ]
}

proptest! {
    #[test]
    fn cone_property(
        a in prop::collection::vec(small_nonneg(), 27),
        b in prop::collection::vec(small_nonneg(), 27),
        scale in (1i64..=9, 1i64..=9),
        shift in (1i64..=9, 1i64..=9),
    ) {
        let a = Tensor3::new(3, a).unwrap();
        let b = Tensor3::new(3, b).unwrap();
        if let Some(w) = find_positive_diagonal(&a) {
            let scaled = a.scale(&ratio(scale.0, scale.1));
            prop_assert!(is_positive_diagonal(&scaled, &w).unwrap());
            let sum = &a + &b.scale(&ratio(shift.0, shift.1));
            prop_assert!(is_positive_diagonal(&sum, &w).unwrap());
        }
    }
}
