#![allow(dead_code)]

use rand::Rng;
use std::collections::BTreeSet;

use tropgroups::circle_bundles::{to_multiline, CircleCocycle};
use tropgroups::perm::Perm;
use tropgroups::rat::{self, Rational};
use tropgroups::root_data::Family;
use tropgroups::trop_core::{
    eval_cubic, eval_quadratic, g2_identity, invert_or_decompose, orthogonal_identity,
    sign_involution, symplectic_identity, trop_det, GenPermDecomposition, Orthogonality,
    TropMatrix, TropValue,
};
use tropgroups::trop_group::{TropGroup, TropGroupElement};

/// Families and parameters covered by the matrix-model checks.
pub fn model_cases() -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for n in 1..=5 {
        out.push((Family::GL, n));
    }
    for n in 2..=5 {
        out.push((Family::SL, n));
        out.push((Family::PGL, n));
    }
    for n in 1..=3 {
        out.push((Family::Sp, n));
        out.push((Family::SoOdd, n));
    }
    for n in 2..=3 {
        out.push((Family::SoEven, n));
    }
    out.push((Family::G2, 1));
    out
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    rat::frac(rng.gen_range(-30..=30), rng.gen_range(1..=6))
}

pub fn random_element<R: Rng>(g: &TropGroup, rng: &mut R) -> TropGroupElement {
    let m = (0..g.rank()).map(|_| random_rational(rng)).collect();
    let w = rng.gen_range(0..g.weyl().len());
    g.element(m, w).unwrap()
}

fn random_point<R: Rng>(m: usize, rng: &mut R) -> Vec<TropValue> {
    (0..m)
        .map(|_| TropValue::int(rng.gen_range(-20..=20)))
        .collect()
}

/// Membership through the defining identities: invertibility, `det = 0`,
/// `AᵗJA = J`, `q(Ax) = q(x)` with the Dickson sign, `c(Ax) = c(x)`.
/// Identities of forms are also probed pointwise.
pub fn literal_member<R: Rng>(family: Family, a: &TropMatrix, rng: &mut R) -> bool {
    let size = a.n_rows();
    let invertible = invert_or_decompose(a).is_ok();
    let verdict = match family {
        Family::GL | Family::PGL => invertible,
        Family::SL => invertible && trop_det(a).unwrap() == TropValue::int(0),
        Family::Sp => symplectic_identity(a).unwrap(),
        Family::SoOdd | Family::SoEven => {
            orthogonal_identity(a, size).unwrap() == Orthogonality::InSo
        }
        Family::G2 => g2_identity(a).unwrap(),
    };
    if verdict {
        for _ in 0..5 {
            let x = random_point(size, rng);
            let ax = a.apply(&x).unwrap();
            match family {
                Family::SoOdd | Family::SoEven => assert_eq!(
                    eval_quadratic(&ax, size).unwrap(),
                    eval_quadratic(&x, size).unwrap()
                ),
                Family::G2 => assert_eq!(eval_cubic(&ax).unwrap(), eval_cubic(&x).unwrap()),
                _ => {}
            }
        }
    }
    verdict
}

/// A matrix near a group element that breaks exactly one defining condition.
pub fn violating_matrix<R: Rng>(
    family: Family,
    g: &TropGroup,
    e: &TropGroupElement,
    rng: &mut R,
) -> TropMatrix {
    let d = g.to_decomposition(e).unwrap();
    let size = d.diag.len();
    let bump = rat::frac(rng.gen_range(1..=12), rng.gen_range(1..=4));
    match family {
        Family::GL | Family::PGL => {
            if size == 1 {
                return TropMatrix::infinite(1, 1);
            }
            let mut a = d.to_matrix();
            let j = rng.gen_range(0..size);
            let i = (d.perm.apply(j) + rng.gen_range(1..size)) % size;
            a.set(i, j, TropValue::Finite(bump));
            a
        }
        Family::SL => {
            let mut diag = d.diag.clone();
            diag[rng.gen_range(0..size)] += bump;
            GenPermDecomposition { diag, perm: d.perm }.to_matrix()
        }
        Family::Sp | Family::SoOdd | Family::SoEven | Family::G2 => {
            if size == 2 || rng.gen_bool(0.5) {
                let mut diag = d.diag.clone();
                diag[rng.gen_range(0..size)] += bump;
                return GenPermDecomposition { diag, perm: d.perm }.to_matrix();
            }
            let iota = sign_involution(size);
            let (a, b) = loop {
                let a = rng.gen_range(0..size);
                let b = rng.gen_range(0..size);
                let allowed = match family {
                    Family::SoEven | Family::G2 => b != a,
                    _ => b != a && b != iota.apply(a),
                };
                if allowed {
                    break (a, b);
                }
            };
            let perm = d.perm.compose(&Perm::transposition(size, a, b));
            GenPermDecomposition { diag: d.diag, perm }.to_matrix()
        }
    }
}

pub fn random_cocycle_with<R: Rng>(g: &TropGroup, bound: i64, rng: &mut R) -> CircleCocycle {
    tropgroups::circle_bundles::random_cocycle(g, rat::int(1), bound, 6, rng)
}

/// Every cover component of the multi-line bundle has the same degree/length.
pub fn equal_slopes(c: &CircleCocycle) -> bool {
    let ml = to_multiline(c).unwrap();
    let slopes: BTreeSet<Rational> = ml
        .components
        .iter()
        .map(|x| rat::int(x.degree) / x.length)
        .collect();
    slopes.len() == 1
}
