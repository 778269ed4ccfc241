mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tropgroups::lattice::{linalg, IntMatrix};
use tropgroups::rat::{self, Rational};
use tropgroups::root_data::Family;
use tropgroups::trop_core::{invert_or_decompose, TropMatrix};
use tropgroups::trop_group::{TropGroup, TropGroupHom};

fn equal_up_to_scalar(a: &TropMatrix, b: &TropMatrix) -> bool {
    let (da, db) = (
        invert_or_decompose(a).unwrap(),
        invert_or_decompose(b).unwrap(),
    );
    let shift = da.diag[0] - db.diag[0];
    da.perm == db.perm && da.diag.iter().zip(&db.diag).all(|(x, y)| *x - *y == shift)
}

#[test]
fn matrix_model_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (family, n) in common::model_cases() {
        let g = TropGroup::build(family, n).unwrap();
        for _ in 0..500 {
            let a = common::random_element(&g, &mut rng);
            let b = common::random_element(&g, &mut rng);
            let lhs = g.to_matrix(&a.compose(&b).unwrap()).unwrap();
            let rhs = g
                .to_matrix(&a)
                .unwrap()
                .mul(&g.to_matrix(&b).unwrap())
                .unwrap();
            if family == Family::PGL {
                assert!(equal_up_to_scalar(&lhs, &rhs));
            } else {
                assert_eq!(lhs, rhs, "{family}{n}");
            }
        }
    }
}

#[test]
fn group_axioms_and_determinant_additivity() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (family, n) in common::model_cases() {
        let g = TropGroup::build(family, n).unwrap();
        for _ in 0..100 {
            let a = common::random_element(&g, &mut rng);
            let b = common::random_element(&g, &mut rng);
            let c = common::random_element(&g, &mut rng);
            let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
            let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
            assert_eq!(ab_c, a_bc);
            assert_eq!(a.compose(&a.inverse()).unwrap(), g.identity());
            let d: Vec<Rational> = g
                .determinant_map(&a)
                .unwrap()
                .iter()
                .zip(g.determinant_map(&b).unwrap())
                .map(|(x, y)| x + y)
                .collect();
            assert_eq!(g.determinant_map(&a.compose(&b).unwrap()).unwrap(), d);
        }
    }
}

#[test]
fn center_dimension_is_corank_of_coroots() {
    for (family, n) in common::model_cases() {
        let g = TropGroup::build(family, n).unwrap();
        let coroots: linalg::QMatrix = g.datum().coroots().iter().map(|c| rat::ints(c)).collect();
        let span = if coroots.is_empty() {
            0
        } else {
            linalg::rank(&coroots)
        };
        assert_eq!(g.center().len(), g.rank() - span, "{family}{n}");
        for z in g.center() {
            for r in g.datum().roots() {
                let p: Rational = z.iter().zip(r).map(|(a, &b)| a * rat::int(b)).sum();
                assert_eq!(p, rat::int(0));
            }
        }
    }
}

fn standard_homs() -> Vec<TropGroupHom> {
    let mut out = Vec::new();
    for n in 2..=4 {
        let sl = TropGroup::build(Family::SL, n).unwrap();
        let gl = TropGroup::build(Family::GL, n).unwrap();
        let pgl = TropGroup::build(Family::PGL, n).unwrap();
        let gl1 = TropGroup::build(Family::GL, 1).unwrap();
        out.push(TropGroupHom::induced(&sl, &gl, sl.model().unwrap().lift.clone()).unwrap());
        out.push(TropGroupHom::induced(&gl, &pgl, pgl.model().unwrap().proj.clone()).unwrap());
        out.push(TropGroupHom::induced(&gl, &gl1, IntMatrix::from_rows(&[vec![1; n]])).unwrap());
    }
    for n in 1..=3 {
        let sp = TropGroup::build(Family::Sp, n).unwrap();
        let gl = TropGroup::build(Family::GL, 2 * n).unwrap();
        out.push(TropGroupHom::induced(&sp, &gl, sp.model().unwrap().lift.clone()).unwrap());
    }
    out
}

#[test]
fn homomorphisms_respect_composition() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for f in standard_homs() {
        for _ in 0..100 {
            let a = common::random_element(f.source(), &mut rng);
            let b = common::random_element(f.source(), &mut rng);
            let lhs = f.apply(&a.compose(&b).unwrap()).unwrap();
            let rhs = f.apply(&a).unwrap().compose(&f.apply(&b).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn sp_embedding_agrees_with_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in 1..=3 {
        let sp = TropGroup::build(Family::Sp, n).unwrap();
        let gl = TropGroup::build(Family::GL, 2 * n).unwrap();
        let f = TropGroupHom::induced(&sp, &gl, sp.model().unwrap().lift.clone()).unwrap();
        for _ in 0..50 {
            let a = common::random_element(&sp, &mut rng);
            assert_eq!(
                sp.to_matrix(&a).unwrap(),
                gl.to_matrix(&f.apply(&a).unwrap()).unwrap()
            );
        }
    }
}

#[test]
fn incompatible_weyl_map_is_rejected() {
    let gl = TropGroup::build(Family::GL, 2).unwrap();
    let id = IntMatrix::identity(2);
    let constant = vec![gl.weyl().identity(); gl.weyl().len()];
    assert!(TropGroupHom::new(&gl, &gl, id, constant).is_err());
}
