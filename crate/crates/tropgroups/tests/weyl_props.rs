use std::collections::BTreeSet;

use tropgroups::root_data::{Family, RootDatum};
use tropgroups::trop_core::hexagon_symmetries;
use tropgroups::weyl::{classical_order, WeylGroup};

fn groups(max_n: usize) -> Vec<(Family, usize, WeylGroup)> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for n in 1..=max_n {
            if let Ok(d) = RootDatum::build(f, n) {
                if f == Family::G2 && n > 1 {
                    continue;
                }
                out.push((f, n, WeylGroup::generate(&d).unwrap()));
            }
        }
    }
    out
}

#[test]
fn orders_match_the_classical_formulas() {
    for (f, n, w) in groups(4) {
        assert_eq!(w.len(), classical_order(f, n), "{f}{n}");
    }
}

#[test]
fn elements_permute_coroots_and_reflections_are_involutions() {
    for (f, n, w) in groups(4) {
        let coroots: BTreeSet<Vec<i64>> = w.datum().coroots().iter().cloned().collect();
        for i in 0..w.len() {
            let image: BTreeSet<Vec<i64>> = coroots.iter().map(|c| w.act(i, c)).collect();
            assert_eq!(image, coroots, "{f}{n}");
        }
        for &s in w.generators() {
            assert_eq!(w.order_of(s), 2);
            assert_eq!(w.inverse(s), s);
        }
    }
}

#[test]
fn class_equation() {
    for (f, n, w) in groups(4) {
        let classes = w.conjugacy_classes();
        assert_eq!(
            classes.iter().map(Vec::len).sum::<usize>(),
            w.len(),
            "{f}{n}"
        );
        for c in &classes {
            assert_eq!(w.len() % c.len(), 0);
            assert_eq!(c.len() * w.centralizer(c[0]).len(), w.len());
        }
    }
}

#[test]
fn indecomposables_form_one_class() {
    for (f, n, w) in groups(4) {
        if w.datum().semisimple_rank() > 4 {
            continue;
        }
        let s = w.datum().semisimple_rank();
        for mask in 0..1usize << s {
            let sub: Vec<usize> = (0..s).filter(|i| mask >> i & 1 == 1).collect();
            if w.type_a(&sub).is_err() {
                continue;
            }
            let wp = w.parabolic(&sub).unwrap();
            let inds: Vec<usize> = wp
                .iter()
                .copied()
                .filter(|&x| w.is_indecomposable(&sub, x).unwrap())
                .collect();
            assert!(!inds.is_empty());
            let class: BTreeSet<usize> = wp
                .iter()
                .map(|&v| w.mul(w.mul(v, inds[0]), w.inverse(v)))
                .collect();
            assert_eq!(class, inds.iter().copied().collect(), "{f}{n} {sub:?}");
        }
    }
}

#[test]
fn sign_is_multiplicative() {
    for (f, n, w) in groups(3) {
        for a in 0..w.len() {
            for b in 0..w.len() {
                assert_eq!(
                    w.sign(w.mul(a, b)).unwrap(),
                    w.sign(a).unwrap() * w.sign(b).unwrap(),
                    "{f}{n}"
                );
            }
        }
    }
}

#[test]
fn g2_acts_as_the_hexagon_group() {
    let w = WeylGroup::generate(&RootDatum::build(Family::G2, 1).unwrap()).unwrap();
    let mut perms: Vec<_> = (0..w.len())
        .map(|i| w.permutation(i).unwrap().clone())
        .collect();
    perms.sort();
    assert_eq!(perms, hexagon_symmetries());
}

#[test]
fn intrinsic_cycle_type_matches_the_matrix_model() {
    for n in 2..=5 {
        let w = WeylGroup::generate(&RootDatum::build(Family::GL, n).unwrap()).unwrap();
        let all: Vec<usize> = (0..n - 1).collect();
        let ta = w.type_a(&all).unwrap();
        for i in 0..w.len() {
            let intrinsic = &ta.factor_perms(w.element(i)).unwrap()[0];
            let model = w.permutation(i).unwrap();
            let mut a: Vec<usize> = intrinsic.cycles().iter().map(Vec::len).collect();
            let mut b: Vec<usize> = model.cycles().iter().map(Vec::len).collect();
            a.sort_unstable();
            b.sort_unstable();
            assert_eq!(a, b);
            assert_eq!(w.is_indecomposable(&all, i).unwrap(), model.is_full_cycle());
        }
    }
}
