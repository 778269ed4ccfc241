mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tropgroups::perm::Perm;
use tropgroups::rat;
use tropgroups::trop_core::{
    det_assignment, det_enumerate, invert_or_decompose, GenPermDecomposition, TropMatrix, TropValue,
};
use tropgroups::trop_group::TropGroup;

fn entry() -> impl Strategy<Value = TropValue> {
    prop_oneof![
        4 => (-20i64..20, 1i64..4).prop_map(|(p, q)| TropValue::finite(rat::frac(p, q))),
        1 => Just(TropValue::Infinity),
    ]
}

fn square_of(n: usize) -> impl Strategy<Value = TropMatrix> {
    proptest::collection::vec(entry(), n * n).prop_map(move |e| TropMatrix::new(n, n, e).unwrap())
}

fn square(max: usize) -> impl Strategy<Value = TropMatrix> {
    (1..=max).prop_flat_map(square_of)
}

fn gen_perm_of(n: usize) -> impl Strategy<Value = GenPermDecomposition> {
    (
        proptest::collection::vec((-20i64..20).prop_map(rat::int), n),
        Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
    )
        .prop_map(|(diag, p)| GenPermDecomposition {
            diag,
            perm: Perm(p),
        })
}

fn gen_perm(max: usize) -> impl Strategy<Value = GenPermDecomposition> {
    (1..=max).prop_flat_map(gen_perm_of)
}

/// Minimum over permutations of `Σ a_{i,σ(i)}`, written independently.
fn det_by_permutations(a: &TropMatrix) -> TropValue {
    Perm::all(a.n_rows())
        .iter()
        .map(|p| (0..a.n_rows()).fold(TropValue::one(), |acc, i| acc.otimes(a.get(i, p.apply(i)))))
        .fold(TropValue::zero(), |acc, v| acc.oplus(&v))
}

proptest! {
    #[test]
    fn determinant_routes_agree(a in square(6)) {
        let e = det_enumerate(&a).unwrap();
        prop_assert_eq!(e, det_assignment(&a).unwrap());
        prop_assert_eq!(e, det_by_permutations(&a));
    }

    #[test]
    fn gen_perm_product_matches_matrix_product(
        (a, b) in (1..=5usize).prop_flat_map(|n| (gen_perm_of(n), gen_perm_of(n)))
    ) {
        let lhs = a.to_matrix().mul(&b.to_matrix()).unwrap();
        prop_assert_eq!(lhs, a.compose(&b).to_matrix());
    }

    #[test]
    fn inverse_is_two_sided(a in gen_perm(6)) {
        let n = a.diag.len();
        let inv = a.inverse().to_matrix();
        prop_assert_eq!(a.to_matrix().mul(&inv).unwrap(), TropMatrix::identity(n));
        prop_assert_eq!(inv.mul(&a.to_matrix()).unwrap(), TropMatrix::identity(n));
        prop_assert_eq!(invert_or_decompose(&a.to_matrix()).unwrap(), a);
    }

    #[test]
    fn multiplication_is_associative(
        (a, b, c) in (1..=4usize).prop_flat_map(|n| (square_of(n), square_of(n), square_of(n)))
    ) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }
}

#[test]
fn constrained_pairs_are_members_and_violations_are_not() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (family, n) in common::model_cases() {
        let g = TropGroup::build(family, n).unwrap();
        for _ in 0..60 {
            let e = common::random_element(&g, &mut rng);
            let a = g.to_matrix(&e).unwrap();
            assert!(common::literal_member(family, &a, &mut rng), "{family}{n}");
            assert_eq!(g.from_matrix(&a).unwrap(), e);
            let bad = common::violating_matrix(family, &g, &e, &mut rng);
            assert!(
                !common::literal_member(family, &bad, &mut rng),
                "{family}{n}"
            );
        }
    }
}
