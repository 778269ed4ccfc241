//! Tropical principal bundles on a metric circle `ℝ/jℤ` as Čech cocycles
//! `(m, α, w)` on the two-vertex model.

use std::collections::BTreeSet;

use num_integer::Integer;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{linalg, IntMatrix, LatticeQuotient};
use crate::perm::Perm;
use crate::rat::{self, Rational};
use crate::root_data::Family;
use crate::trop_core::sign_involution;
use crate::trop_group::{TropGroup, TropGroupHom};

#[derive(Clone, Debug)]
pub struct CircleCocycle {
    group: TropGroup,
    m: Vec<i64>,
    alpha: Vec<Rational>,
    w: usize,
    j: Rational,
}

/// A gauge triple `(k, β, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gauge {
    pub k: Vec<i64>,
    #[serde(with = "rat::serde_qvec")]
    pub beta: Vec<Rational>,
    pub v: usize,
}

impl Gauge {
    pub fn identity(group: &TropGroup) -> Self {
        Gauge {
            k: vec![0; group.rank()],
            beta: vec![Rational::from_integer(0); group.rank()],
            v: group.weyl().identity(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CocycleJson {
    pub m: Vec<i64>,
    #[serde(with = "rat::serde_qvec")]
    pub alpha: Vec<Rational>,
    pub w: usize,
    #[serde(with = "rat::serde_q")]
    pub j: Rational,
}

impl CircleCocycle {
    pub fn new(
        group: &TropGroup,
        m: Vec<i64>,
        alpha: Vec<Rational>,
        w: usize,
        j: Rational,
    ) -> Result<Self> {
        let r = group.rank();
        if m.len() != r || alpha.len() != r {
            return Err(Error::DimensionMismatch(format!(
                "cocycle vectors must have length {r}"
            )));
        }
        group.weyl().check(w)?;
        if j <= Rational::from_integer(0) {
            return Err(Error::Parse(format!(
                "circle length {} is not positive",
                rat::format(&j)
            )));
        }
        Ok(CircleCocycle {
            group: group.clone(),
            m,
            alpha,
            w,
            j,
        })
    }

    pub fn from_json(group: &TropGroup, c: CocycleJson) -> Result<Self> {
        Self::new(group, c.m, c.alpha, c.w, c.j)
    }

    pub fn to_json(&self) -> CocycleJson {
        CocycleJson {
            m: self.m.clone(),
            alpha: self.alpha.clone(),
            w: self.w,
            j: self.j,
        }
    }

    pub fn group(&self) -> &TropGroup {
        &self.group
    }

    pub fn m(&self) -> &[i64] {
        &self.m
    }

    pub fn alpha(&self) -> &[Rational] {
        &self.alpha
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn j(&self) -> Rational {
        self.j
    }

    /// Reduced coordinates of `m` in `π₁(G)`.
    pub fn degree(&self) -> Vec<i64> {
        self.group.fundamental_group().reduce(&self.m)
    }
}

impl PartialEq for CircleCocycle {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group)
            && self.m == other.m
            && self.alpha == other.alpha
            && self.w == other.w
            && self.j == other.j
    }
}

impl Eq for CircleCocycle {}

impl Serialize for CircleCocycle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

fn add_q(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub_q(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale_q(a: &[Rational], s: Rational) -> Vec<Rational> {
    a.iter().map(|x| x * s).collect()
}

/// `(m, α, w) ↦ (k + v·m − w'·k, β + v·α − w'·(β + jk), w')` with
/// `w' = v w v⁻¹`.
pub fn gauge_transform(c: &CircleCocycle, g: &Gauge) -> Result<CircleCocycle> {
    let weyl = c.group.weyl();
    weyl.check(g.v)?;
    if g.k.len() != c.m.len() || g.beta.len() != c.m.len() {
        return Err(Error::DimensionMismatch(
            "gauge vectors have the wrong length".into(),
        ));
    }
    let w2 = weyl.conjugate(g.v, c.w);
    let vm = weyl.act(g.v, &c.m);
    let wk = weyl.act(w2, &g.k);
    let m = (0..c.m.len()).map(|i| g.k[i] + vm[i] - wk[i]).collect();
    let jk = scale_q(&rat::ints(&g.k), c.j);
    let inner = weyl.act_q(w2, &add_q(&g.beta, &jk));
    let alpha = sub_q(&add_q(&g.beta, &weyl.act_q(g.v, &c.alpha)), &inner);
    Ok(CircleCocycle {
        group: c.group.clone(),
        m,
        alpha,
        w: w2,
        j: c.j,
    })
}

/// The gauge equal to applying `first`, then `second`:
/// `(k₂ + v₂·k₁, β₂ + v₂·β₁, v₂v₁)`.
pub fn compose_gauges(group: &TropGroup, second: &Gauge, first: &Gauge) -> Gauge {
    let weyl = group.weyl();
    let vk = weyl.act(second.v, &first.k);
    Gauge {
        k: second.k.iter().zip(&vk).map(|(a, b)| a + b).collect(),
        beta: add_q(&second.beta, &weyl.act_q(second.v, &first.beta)),
        v: weyl.mul(second.v, first.v),
    }
}

fn one_minus(group: &TropGroup, w: usize) -> IntMatrix {
    IntMatrix::identity(group.rank()).sub(group.weyl().element(w))
}

/// `E = (1/N) Σ_{i<N} wⁱ`, the projection onto `ker(1 − w)` along `im(1 − w)`.
fn averaging(group: &TropGroup, w: usize, x: &[Rational]) -> Vec<Rational> {
    let weyl = group.weyl();
    let n = weyl.order_of(w);
    let mut acc = vec![Rational::from_integer(0); x.len()];
    let mut cur = x.to_vec();
    for _ in 0..n {
        acc = add_q(&acc, &cur);
        cur = weyl.act_q(w, &cur);
    }
    scale_q(&acc, Rational::new(1, n as i128))
}

/// Decides whether `c₁ ≅ c₂`, returning the witness with the least `v`.
///
/// For fixed `v` with `v w₁ v⁻¹ = w₂ =: w` the equations are
/// `(1 − w)k = m₂ − v·m₁ =: d_m` over `ℤ` and
/// `(1 − w)β = α₂ − v·α₁ + j·w·k` over `ℚ`. The second is solvable iff its
/// right side dies under `E`, and `E(w·k) = E(k)`, so with `k = k₀ + κ`,
/// `κ ∈ ker(1 − w) ∩ ℤʳ`, it forces `κ = −E(d_α/j + k₀)`, which must be
/// integral.
pub fn are_isomorphic(c1: &CircleCocycle, c2: &CircleCocycle) -> Result<Option<Gauge>> {
    if !c1.group.same_as(&c2.group) {
        return Err(Error::ParentMismatch);
    }
    if c1.j != c2.j {
        return Err(Error::LengthMismatch);
    }
    let group = &c1.group;
    let weyl = group.weyl();
    let w = c2.w;
    let lhs = one_minus(group, w);
    let lattice = LatticeQuotient::new(&lhs);
    let lhs_q = lhs.to_q();
    for v in 0..weyl.len() {
        if weyl.conjugate(v, c1.w) != w {
            continue;
        }
        let vm = weyl.act(v, &c1.m);
        let d_m: Vec<i64> = c2.m.iter().zip(&vm).map(|(a, b)| a - b).collect();
        let Some((k0, _)) = lattice.solve(&d_m) else {
            continue;
        };
        let d_alpha = sub_q(&c2.alpha, &weyl.act_q(v, &c1.alpha));
        let probe = add_q(&scale_q(&d_alpha, c1.j.recip()), &rat::ints(&k0));
        let t = averaging(group, w, &probe);
        if !t.iter().all(rat::is_integer) {
            continue;
        }
        let k: Vec<i64> = k0
            .iter()
            .zip(&t)
            .map(|(a, b)| a - rat::to_i64(b).expect("integral"))
            .collect();
        let rhs = add_q(&d_alpha, &scale_q(&weyl.act_q(w, &rat::ints(&k)), c1.j));
        let beta = linalg::solve(&lhs_q, &rhs).expect("averaging test guarantees a solution");
        let gauge = Gauge { k, beta, v };
        let moved = gauge_transform(c1, &gauge)?;
        assert!(moved == *c2, "isomorphism witness failed to verify");
        return Ok(Some(gauge));
    }
    Ok(None)
}

/// One connected component of the moduli space, per conjugacy class of `W`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentDescription {
    /// Least element of the class.
    pub class_rep: usize,
    pub class_size: usize,
    /// `rank ker(1 − w)`, the dimension of the torus part.
    pub torus_rank: usize,
    /// Invariant factors of `M̌/(1 − w)M̌`, torsion first, `0` per free `ℤ`.
    pub invariant_factors: Vec<i64>,
    pub centralizer_order: usize,
    /// `|M̌/(1 − w)M̌|` when finite.
    pub discrete_size: Option<u64>,
    /// Number of `C_W(w)`-orbits on the discrete set, when finite.
    pub orbit_count: Option<usize>,
    /// π₁-images of the generators of `M̌/(1 − w)M̌`.
    pub degree_map: Vec<Vec<i64>>,
    /// Distinct degrees met by the component, when the discrete set is finite.
    pub degrees: Option<Vec<Vec<i64>>>,
}

pub fn classify_components(group: &TropGroup) -> Vec<ComponentDescription> {
    let weyl = group.weyl();
    let pi1 = group.fundamental_group();
    let r = group.rank();
    weyl.conjugacy_classes()
        .into_iter()
        .map(|class| {
            let w = class[0];
            let lhs = one_minus(group, w);
            let coker = LatticeQuotient::new(&lhs);
            let centralizer = weyl.centralizer(w);
            let n_gens = coker.invariant_factors().len();
            let degree_map = (0..n_gens)
                .map(|i| {
                    let mut e = vec![0; n_gens];
                    e[i] = 1;
                    pi1.reduce(&coker.lift(&e))
                })
                .collect();
            let (orbit_count, degrees) = match coker.elements() {
                Some(points) => {
                    let mut seen = BTreeSet::new();
                    let mut orbits = 0;
                    for p in &points {
                        if seen.contains(p) {
                            continue;
                        }
                        orbits += 1;
                        let lifted = coker.lift(p);
                        for &v in &centralizer {
                            seen.insert(coker.reduce(&weyl.act(v, &lifted)));
                        }
                    }
                    let degs: BTreeSet<Vec<i64>> =
                        points.iter().map(|p| pi1.reduce(&coker.lift(p))).collect();
                    (Some(orbits), Some(degs.into_iter().collect()))
                }
                None => (None, None),
            };
            ComponentDescription {
                class_rep: w,
                class_size: class.len(),
                torus_rank: r - coker.relation_rank(),
                invariant_factors: coker.invariant_factors(),
                centralizer_order: centralizer.len(),
                discrete_size: coker.order(),
                orbit_count,
                degree_map,
                degrees,
            }
        })
        .collect()
}

/// `F_*(m, α, w) = (f(m), f(α), φ(w))`.
pub fn pushforward(f: &TropGroupHom, c: &CircleCocycle) -> Result<CircleCocycle> {
    if !f.source().same_as(&c.group) {
        return Err(Error::ParentMismatch);
    }
    CircleCocycle::new(
        f.target(),
        f.lattice_map().mul_vec(&c.m),
        f.lattice_map().mul_qvec(&c.alpha),
        f.weyl_map()[c.w],
        c.j,
    )
}

/// One circle of the cover with its line bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverComponent {
    /// Sheet indices `i, σ(i), σ²(i), …` starting at the least.
    pub cycle: Vec<usize>,
    #[serde(with = "rat::serde_q")]
    pub length: Rational,
    pub degree: i64,
    /// `Σ_t α_{i_t} − j Σ_t t·m_{i_t}` reduced into `[0, length)`.
    #[serde(with = "rat::serde_q")]
    pub jacobian: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiLineBundle {
    pub components: Vec<CoverComponent>,
    /// For each component, the index of its image under the involution.
    pub involution: Option<Vec<usize>>,
}

impl MultiLineBundle {
    pub fn total_degree(&self) -> i64 {
        self.components.iter().map(|c| c.degree).sum()
    }

    /// Multiset of `(ℓ, d, J mod gcd(ℓ, d)·j)`, invariant under isomorphism
    /// and deck rotation.
    pub fn iso_invariant(&self, j: Rational) -> Vec<(usize, i64, Rational)> {
        let mut out: Vec<_> = self
            .components
            .iter()
            .map(|c| {
                let l = c.cycle.len() as i64;
                let g = l.gcd(&c.degree);
                let modulus = j * Rational::from_integer(g as i128);
                (c.cycle.len(), c.degree, rat::modulo(&c.jacobian, &modulus))
            })
            .collect();
        out.sort();
        out
    }
}

fn multiline_from_parts(
    m: &[i64],
    alpha: &[Rational],
    sigma: &Perm,
    j: Rational,
) -> MultiLineBundle {
    let components = sigma
        .cycles()
        .into_iter()
        .map(|cycle| {
            let length = j * Rational::from_integer(cycle.len() as i128);
            let degree = cycle.iter().map(|&i| m[i]).sum();
            let twist: i64 = cycle
                .iter()
                .enumerate()
                .map(|(t, &i)| t as i64 * m[i])
                .sum();
            let raw = cycle.iter().map(|&i| alpha[i]).sum::<Rational>()
                - j * Rational::from_integer(twist as i128);
            CoverComponent {
                jacobian: rat::modulo(&raw, &length),
                cycle,
                length,
                degree,
            }
        })
        .collect();
    MultiLineBundle {
        components,
        involution: None,
    }
}

fn family_of(c: &CircleCocycle) -> Option<(Family, usize)> {
    c.group.datum().family()
}

/// The cover `Γ′ → Γ` given by the cycles of `σ`, with its line bundle.
pub fn to_multiline(c: &CircleCocycle) -> Result<MultiLineBundle> {
    match family_of(c) {
        Some((Family::GL, _)) => {}
        _ => {
            return Err(Error::Unsupported(
                "multi-line bundles need a GL parent".into(),
            ))
        }
    }
    let sigma = c
        .group
        .weyl()
        .permutation(c.w)
        .expect("GL has a permutation model");
    Ok(multiline_from_parts(&c.m, &c.alpha, sigma, c.j))
}

/// A multi-line bundle on the `2n` sheets with an involution, and the norm
/// bundle `(L ⊗ ι⁻¹L)/ι` on the `n` sheet pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignedStructure {
    pub cover: MultiLineBundle,
    pub norm: MultiLineBundle,
    pub violations: Vec<TrivializationViolation>,
}

/// A component of the norm bundle that is not trivial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivializationViolation {
    pub pairs: Vec<usize>,
    pub degree: i64,
    #[serde(with = "rat::serde_q")]
    pub jacobian: Rational,
}

impl SignedStructure {
    pub fn is_trivialized(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Signed structure of a `GL₂ₙ` cocycle whose permutation commutes with
/// `ι: i ↔ −i`.
pub fn signed_structure(c: &CircleCocycle) -> Result<SignedStructure> {
    let size = match family_of(c) {
        Some((Family::GL, size)) if size % 2 == 0 => size,
        _ => return Err(Error::Unsupported("signed structure needs GL_2n".into())),
    };
    let sigma = c
        .group
        .weyl()
        .permutation(c.w)
        .expect("GL has a permutation model");
    signed_from_parts(&c.m, &c.alpha, sigma, c.j, size / 2)
}

/// [`signed_structure`] of the image of an `Sp₂ₙ` cocycle under
/// `e_i ↦ e_i − e_{−i}`.
pub fn sp_structure(c: &CircleCocycle) -> Result<SignedStructure> {
    let n = match family_of(c) {
        Some((Family::Sp, n)) => n,
        _ => return Err(Error::Unsupported("Sp structure needs an Sp parent".into())),
    };
    let model = c.group.model().expect("Sp has a matrix model");
    let m = model.lift.mul_vec(&c.m);
    let alpha = model.lift.mul_qvec(&c.alpha);
    let sigma = c
        .group
        .weyl()
        .permutation(c.w)
        .expect("Sp has a permutation model");
    signed_from_parts(&m, &alpha, sigma, c.j, n)
}

fn signed_from_parts(
    m: &[i64],
    alpha: &[Rational],
    sigma: &Perm,
    j: Rational,
    n: usize,
) -> Result<SignedStructure> {
    let iota = sign_involution(2 * n);
    if sigma.compose(&iota) != iota.compose(sigma) {
        return Err(Error::NotInGroup(
            "permutation does not commute with the involution".into(),
        ));
    }
    let mut cover = multiline_from_parts(m, alpha, sigma, j);
    let component_of = |sheet: usize| {
        cover
            .components
            .iter()
            .position(|c| c.cycle.contains(&sheet))
            .expect("every sheet lies on a cycle")
    };
    let pairing = cover
        .components
        .iter()
        .map(|c| component_of(iota.apply(c.cycle[0])))
        .collect();
    cover.involution = Some(pairing);
    let pair = |i: usize| i % n;
    let norm_m: Vec<i64> = (0..n).map(|p| m[p] + m[p + n]).collect();
    let norm_alpha: Vec<Rational> = (0..n).map(|p| alpha[p] + alpha[p + n]).collect();
    let tau = Perm((0..n).map(|p| pair(sigma.apply(p))).collect());
    let norm = multiline_from_parts(&norm_m, &norm_alpha, &tau, j);
    let violations = norm
        .components
        .iter()
        .filter(|c| c.degree != 0 || c.jacobian != Rational::from_integer(0))
        .map(|c| TrivializationViolation {
            pairs: c.cycle.clone(),
            degree: c.degree,
            jacobian: c.jacobian,
        })
        .collect();
    Ok(SignedStructure {
        cover,
        norm,
        violations,
    })
}

/// Uniform sample with `m` and `α` entries in `[−bound, bound]`, `α` with
/// denominators dividing `denom`.
pub fn random_cocycle<R: Rng>(
    group: &TropGroup,
    j: Rational,
    bound: i64,
    denom: i64,
    rng: &mut R,
) -> CircleCocycle {
    let r = group.rank();
    let m = (0..r).map(|_| rng.gen_range(-bound..=bound)).collect();
    let alpha = (0..r)
        .map(|_| rat::frac(rng.gen_range(-bound * denom..=bound * denom), denom))
        .collect();
    let w = rng.gen_range(0..group.weyl().len());
    CircleCocycle::new(group, m, alpha, w, j).expect("sampled within bounds")
}

pub fn random_gauge<R: Rng>(group: &TropGroup, bound: i64, denom: i64, rng: &mut R) -> Gauge {
    let r = group.rank();
    Gauge {
        k: (0..r).map(|_| rng.gen_range(-bound..=bound)).collect(),
        beta: (0..r)
            .map(|_| rat::frac(rng.gen_range(-bound * denom..=bound * denom), denom))
            .collect(),
        v: rng.gen_range(0..group.weyl().len()),
    }
}
