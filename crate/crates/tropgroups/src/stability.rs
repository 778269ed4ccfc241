//! Slope maps, the dominance order, and stability of circle cocycles.

use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::circle_bundles::CircleCocycle;
use crate::error::{Error, Result};
use crate::lattice::{linalg, LatticeQuotient};
use crate::rat::{self, Rational};
use crate::trop_group::TropGroup;

/// A standard parabolic `P = M̌_ℝ ⋊ W_P`.
#[derive(Clone, Debug)]
pub struct ParabolicSubgroup {
    subset: Vec<usize>,
    elements: Vec<usize>,
    pi1: LatticeQuotient,
}

impl ParabolicSubgroup {
    pub fn new(group: &TropGroup, subset: &[usize]) -> Result<Self> {
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        let elements = group.weyl().parabolic(&subset)?;
        let datum = group.datum();
        let coroots: Vec<Vec<i64>> = subset
            .iter()
            .map(|&i| datum.simple_coroot(i).to_vec())
            .collect();
        Ok(ParabolicSubgroup {
            pi1: LatticeQuotient::from_generators(datum.rank(), &coroots),
            subset,
            elements,
        })
    }

    pub fn whole(group: &TropGroup) -> Self {
        let all: Vec<usize> = (0..group.datum().semisimple_rank()).collect();
        Self::new(group, &all).expect("all simple positions exist")
    }

    /// `D_P`, sorted.
    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    /// `W_P`, sorted.
    pub fn weyl_elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, w: usize) -> bool {
        self.elements.binary_search(&w).is_ok()
    }

    /// `π₁(P) = M̌/⟨α̌_i : i ∈ D_P⟩`.
    pub fn fundamental_group(&self) -> &LatticeQuotient {
        &self.pi1
    }
}

/// The coefficients `c_i` with `⟨α_j, λ̌ − Σ c_i α̌_i⟩ = 0` for `i, j ∈ D_P`.
fn slope_coefficients(group: &TropGroup, subset: &[usize], lambda: &[Rational]) -> Vec<Rational> {
    let datum = group.datum();
    let cartan = datum.cartan_matrix();
    let a: linalg::QMatrix = subset
        .iter()
        .map(|&j| subset.iter().map(|&i| rat::int(cartan[j][i])).collect())
        .collect();
    let b: Vec<Rational> = subset
        .iter()
        .map(|&j| pair(datum.simple_root(j), lambda))
        .collect();
    linalg::solve(&a, &b).expect("simple coroots are independent")
}

fn pair(root: &[i64], v: &[Rational]) -> Rational {
    root.iter()
        .zip(v)
        .map(|(a, x)| Rational::from_integer(*a as i128) * x)
        .sum()
}

/// `φ_P(λ̌) = λ̌ − Σ_{i ∈ D_P} c_i α̌_i`, central in the Levi of `P`.
pub fn slope(group: &TropGroup, p: &ParabolicSubgroup, lambda: &[Rational]) -> Vec<Rational> {
    let c = slope_coefficients(group, p.subset(), lambda);
    let mut phi = lambda.to_vec();
    for (&i, ci) in p.subset().iter().zip(&c) {
        for (x, &a) in phi.iter_mut().zip(group.datum().simple_coroot(i)) {
            *x -= ci * Rational::from_integer(a as i128);
        }
    }
    phi
}

/// `φ_G`.
pub fn slope_g(group: &TropGroup, lambda: &[Rational]) -> Vec<Rational> {
    slope(group, &ParabolicSubgroup::whole(group), lambda)
}

/// Coordinates of `v` in the simple-coroot basis, if `v` lies in their span.
fn coroot_coordinates(group: &TropGroup, v: &[Rational]) -> Option<Vec<Rational>> {
    let datum = group.datum();
    let s = datum.semisimple_rank();
    if s == 0 {
        return rat::is_zero_vec(v).then(Vec::new);
    }
    let a: linalg::QMatrix = (0..datum.rank())
        .map(|row| {
            (0..s)
                .map(|i| rat::int(datum.simple_coroot(i)[row]))
                .collect()
        })
        .collect();
    linalg::solve(&a, v)
}

/// `λ̌ ≤ μ̌`: `μ̌ − λ̌` is a nonnegative combination of simple coroots.
pub fn dominance_leq(group: &TropGroup, lambda: &[Rational], mu: &[Rational]) -> bool {
    let diff: Vec<Rational> = mu.iter().zip(lambda).map(|(a, b)| a - b).collect();
    coroot_coordinates(group, &diff)
        .is_some_and(|c| c.iter().all(|x| *x >= Rational::from_integer(0)))
}

/// `λ̌ < μ̌`: `λ̌ ≤ μ̌` and `λ̌ ≠ μ̌`.
pub fn dominance_lt(group: &TropGroup, lambda: &[Rational], mu: &[Rational]) -> bool {
    lambda != mu && dominance_leq(group, lambda, mu)
}

/// Degrees in `π₁(P)` of the reductions of `c` to `P`, keyed by reduced
/// coordinates, each with the lift `v·m` for the least admissible `v`.
///
/// A reduction to `P` is a cocycle with monodromy in `W_P` in the gauge
/// class of `c`. A gauge `(k, β, v)` sends `m` to `k + v·m − w′k` with
/// `w′ = v w v⁻¹`, so reductions exist exactly for `v` with `w′ ∈ W_P`.
/// Gauges that keep the monodromy in `W_P` change the slope part by
/// `(1 − w′)k` with `w′ ∈ W_P`, and `(1 − s_i)k = ⟨α_i, k⟩ α̌_i` shows that
/// `(1 − w′)M̌ ⊆ ⟨α̌_i : i ∈ D_P⟩`, so the class `[k + v·m − w′k]_P` equals
/// `[v·m]_P`. Conjugating afterwards by `u ∈ W_P` fixes classes too, since
/// `u·x − x` lies in the same span.
pub fn reduction_degrees(c: &CircleCocycle, p: &ParabolicSubgroup) -> BTreeMap<Vec<i64>, Vec<i64>> {
    let weyl = c.group().weyl();
    let mut out = BTreeMap::new();
    for v in 0..weyl.len() {
        if p.contains(weyl.conjugate(v, c.w())) {
            let lift = weyl.act(v, c.m());
            out.entry(p.fundamental_group().reduce(&lift))
                .or_insert(lift);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    #[serde(rename = "D_P")]
    pub d_p: Vec<usize>,
    #[serde(rename = "lambda_P")]
    pub lambda_p: Vec<i64>,
    #[serde(rename = "slope_P", with = "rat::serde_qvec")]
    pub slope_p: Vec<Rational>,
    #[serde(rename = "slope_G", with = "rat::serde_qvec")]
    pub slope_g: Vec<Rational>,
    /// Fails only the strict inequality, so semistability survives.
    pub strict_only: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub semistable: bool,
    pub stable: bool,
    pub violations: Vec<Violation>,
}

/// Proper standard parabolics, by `D_P` in increasing bitmask order.
pub fn proper_parabolics(group: &TropGroup) -> Vec<ParabolicSubgroup> {
    let s = group.datum().semisimple_rank();
    (0..(1usize << s) - 1)
        .map(|mask| {
            let subset: Vec<usize> = (0..s).filter(|i| mask >> i & 1 == 1).collect();
            ParabolicSubgroup::new(group, &subset).expect("valid positions")
        })
        .collect()
}

pub fn stability_report(c: &CircleCocycle) -> StabilityReport {
    let group = c.group();
    let phi_g = slope_g(group, &rat::ints(c.m()));
    let mut violations = Vec::new();
    for p in proper_parabolics(group) {
        for lift in reduction_degrees(c, &p).into_values() {
            let phi_p = slope(group, &p, &rat::ints(&lift));
            let leq = dominance_leq(group, &phi_p, &phi_g);
            let lt = leq && phi_p != phi_g;
            if !lt {
                violations.push(Violation {
                    d_p: p.subset().to_vec(),
                    lambda_p: lift,
                    slope_p: phi_p,
                    slope_g: phi_g.clone(),
                    strict_only: leq,
                });
            }
        }
    }
    StabilityReport {
        semistable: violations.iter().all(|v| v.strict_only),
        stable: violations.is_empty(),
        violations,
    }
}

pub fn is_semistable(c: &CircleCocycle) -> bool {
    stability_report(c).semistable
}

pub fn is_stable(c: &CircleCocycle) -> bool {
    stability_report(c).stable
}

/// Image of `λ̌` in `π₁(G^ad) = ∏ ℤ/n_iℤ`, one entry `(n_i, class)` per
/// Dynkin component of type `A_{n_i − 1}`.
pub fn adjoint_degree(group: &TropGroup, lambda: &[i64]) -> Result<Vec<(i64, i64)>> {
    let datum = group.datum();
    let all: Vec<usize> = (0..datum.semisimple_rank()).collect();
    datum
        .dynkin_components(&all)
        .into_iter()
        .map(|comp| {
            let chain = datum
                .type_a_chain(&comp)
                .ok_or_else(|| Error::NotTypeA(format!("component {comp:?}")))?;
            let n = chain.len() as i64 + 1;
            let class: i64 = chain
                .iter()
                .enumerate()
                .map(|(t, &i)| (t as i64 + 1) * datum.pairing(datum.simple_root(i), lambda))
                .sum();
            Ok((n, class.rem_euclid(n)))
        })
        .collect()
}

/// `gcd(d_i, n_i) = 1` for every factor of `π₁(G^ad)`.
pub fn is_stable_degree(group: &TropGroup, lambda: &[i64]) -> Result<bool> {
    Ok(adjoint_degree(group, lambda)?
        .iter()
        .all(|&(n, d)| n.gcd(&d) == 1))
}

/// `D_P = {i : ⟨ω_i, φ_G(λ̌) − λ̌⟩ ∉ ℤ}`.
pub fn minimal_parabolic_for_degree(group: &TropGroup, lambda: &[i64]) -> ParabolicSubgroup {
    let lam = rat::ints(lambda);
    let phi = slope_g(group, &lam);
    let diff: Vec<Rational> = phi.iter().zip(&lam).map(|(a, b)| a - b).collect();
    let subset: Vec<usize> = group
        .datum()
        .fundamental_weights()
        .iter()
        .enumerate()
        .filter(|(_, w)| {
            let p: Rational = w.iter().zip(&diff).map(|(a, b)| a * b).sum();
            !rat::is_integer(&p)
        })
        .map(|(i, _)| i)
        .collect();
    ParabolicSubgroup::new(group, &subset).expect("valid positions")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, int, ints};
    use crate::root_data::Family;

    fn gl(n: usize) -> TropGroup {
        TropGroup::build(Family::GL, n).unwrap()
    }

    fn cocycle(g: &TropGroup, m: Vec<i64>, w: usize) -> CircleCocycle {
        let r = m.len();
        CircleCocycle::new(g, m, vec![int(0); r], w, int(1)).unwrap()
    }

    #[test]
    fn slope_examples() {
        let g = gl(2);
        let torus = ParabolicSubgroup::new(&g, &[]).unwrap();
        assert_eq!(slope(&g, &torus, &ints(&[1, 0])), ints(&[1, 0]));
        assert_eq!(slope_g(&g, &ints(&[1, 0])), vec![frac(1, 2), frac(1, 2)]);
        let g4 = gl(4);
        assert_eq!(slope_g(&g4, &ints(&[3, 0, 0, 0])), vec![frac(3, 4); 4]);
    }

    #[test]
    fn dominance_examples() {
        let g = gl(2);
        let half = vec![frac(1, 2), frac(1, 2)];
        assert!(dominance_leq(&g, &half, &half));
        assert!(!dominance_lt(&g, &half, &half));
        assert!(!dominance_leq(&g, &ints(&[1, 0]), &half));
        assert!(dominance_leq(&g, &ints(&[0, 1]), &half));
        assert!(!dominance_leq(&g, &ints(&[0, 0]), &ints(&[1, 1])));
    }

    #[test]
    fn reduction_examples() {
        let g = gl(2);
        let torus = ParabolicSubgroup::new(&g, &[]).unwrap();
        let c = cocycle(&g, vec![1, 0], g.weyl().identity());
        let degs: Vec<Vec<i64>> = reduction_degrees(&c, &torus).into_keys().collect();
        assert_eq!(degs, vec![vec![0, 1], vec![1, 0]]);
        let c = cocycle(&g, vec![1, 0], g.weyl().generators()[0]);
        assert!(reduction_degrees(&c, &torus).is_empty());
        let whole = ParabolicSubgroup::whole(&g);
        let degs: Vec<Vec<i64>> = reduction_degrees(&c, &whole).into_keys().collect();
        assert_eq!(degs, vec![c.degree()]);
    }

    #[test]
    fn stability_examples() {
        let g = gl(2);
        let id = g.weyl().identity();
        let s = g.weyl().generators()[0];
        assert!(!is_semistable(&cocycle(&g, vec![1, 0], id)));
        let r = stability_report(&cocycle(&g, vec![1, 0], s));
        assert!(r.stable && r.semistable);
        let r = stability_report(&cocycle(&g, vec![1, 1], id));
        assert!(r.semistable && !r.stable);
        assert!(r.violations.iter().all(|v| v.strict_only));
    }

    #[test]
    fn stable_degrees_and_minimal_parabolics() {
        let g4 = gl(4);
        assert!(is_stable_degree(&g4, &[1, 0, 0, 0]).unwrap());
        assert!(is_stable_degree(&g4, &[2, 1, 0, 0]).unwrap());
        assert!(!is_stable_degree(&g4, &[2, 0, 0, 0]).unwrap());
        let p = minimal_parabolic_for_degree(&g4, &[2, 0, 0, 0]);
        assert_eq!(p.subset(), &[0, 2]);
        let p = minimal_parabolic_for_degree(&g4, &[1, 0, 0, 0]);
        assert_eq!(p.subset(), &[0, 1, 2]);
        for f in Family::ALL {
            let g = TropGroup::build(f, 2).unwrap();
            let zero = vec![0; g.rank()];
            assert!(minimal_parabolic_for_degree(&g, &zero).subset().is_empty());
        }
        let sp = TropGroup::build(Family::Sp, 2).unwrap();
        assert!(matches!(
            is_stable_degree(&sp, &[0, 0]),
            Err(Error::NotTypeA(_))
        ));
    }
}
