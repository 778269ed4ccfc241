//! Root data, builders for the classical families and G₂, axiom checks,
//! fundamental groups and fundamental weights.
//!
//! `M` and `M̌` are both `ℤʳ` in dual bases, so the pairing is the dot
//! product. Roots are stored in `M`-coordinates, coroots in
//! `M̌`-coordinates, with `coroots[i]` the coroot of `roots[i]`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{linalg, IntMatrix, LatticeQuotient};
use crate::rat::{self, Rational};

/// The families with a tropical matrix model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `GLₙ`, `n ≥ 1`.
    GL,
    /// `SLₙ`, `n ≥ 2`.
    SL,
    /// `PGLₙ`, `n ≥ 2`.
    PGL,
    /// `Sp₂ₙ`, `n ≥ 1`.
    Sp,
    /// `SO₂ₙ₊₁`, `n ≥ 1`.
    SoOdd,
    /// `SO₂ₙ`, `n ≥ 2`.
    SoEven,
    G2,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::GL,
        Family::SL,
        Family::PGL,
        Family::Sp,
        Family::SoOdd,
        Family::SoEven,
        Family::G2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::GL => "GL",
            Family::SL => "SL",
            Family::PGL => "PGL",
            Family::Sp => "Sp",
            Family::SoOdd => "SO_odd",
            Family::SoEven => "SO_even",
            Family::G2 => "G2",
        }
    }

    fn min_n(self) -> usize {
        match self {
            Family::GL | Family::Sp | Family::SoOdd | Family::G2 => 1,
            Family::SL | Family::PGL | Family::SoEven => 2,
        }
    }

    /// Size of the square matrices in the matrix model.
    pub fn matrix_size(self, n: usize) -> usize {
        match self {
            Family::GL | Family::SL | Family::PGL => n,
            Family::Sp | Family::SoEven => 2 * n,
            Family::SoOdd => 2 * n + 1,
            Family::G2 => 7,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| *c != '_' && *c != '-')
            .collect::<String>()
            .to_ascii_lowercase();
        match key.as_str() {
            "gl" => Ok(Family::GL),
            "sl" => Ok(Family::SL),
            "pgl" => Ok(Family::PGL),
            "sp" => Ok(Family::Sp),
            "soodd" | "b" => Ok(Family::SoOdd),
            "soeven" | "d" => Ok(Family::SoEven),
            "g2" => Ok(Family::G2),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    rank: usize,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    simple: Vec<usize>,
    fundamental_weights: Vec<Vec<Rational>>,
    family: Option<(Family, usize)>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(y: &[i64], k: i64, x: &[i64]) -> Vec<i64> {
    y.iter().zip(x).map(|(a, b)| a + k * b).collect()
}

fn unit(r: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; r];
    v[i] = 1;
    v
}

impl RootDatum {
    /// Assembles a datum without validation. Simple roots are given as
    /// indices into `roots`, in Dynkin order.
    pub fn from_parts(
        rank: usize,
        roots: Vec<Vec<i64>>,
        coroots: Vec<Vec<i64>>,
        simple: Vec<usize>,
    ) -> Self {
        let mut d = RootDatum {
            rank,
            roots,
            coroots,
            simple,
            fundamental_weights: Vec::new(),
            family: None,
        };
        if d.validate().is_empty() {
            d.fundamental_weights = d.compute_fundamental_weights();
        }
        d
    }

    /// Validating constructor.
    pub fn new(
        rank: usize,
        roots: Vec<Vec<i64>>,
        coroots: Vec<Vec<i64>>,
        simple: Vec<usize>,
    ) -> Result<Self> {
        let d = Self::from_parts(rank, roots, coroots, simple);
        let v = d.validate();
        if v.is_empty() {
            Ok(d)
        } else {
            Err(Error::InvalidDatum(v))
        }
    }

    pub fn build(family: Family, n: usize) -> Result<Self> {
        if n < family.min_n() {
            return Err(Error::Unsupported(format!(
                "{family} needs n >= {}, got {n}",
                family.min_n()
            )));
        }
        let (rank, pairs, simple_roots) = match family {
            Family::GL => type_a_gl(n),
            Family::SL => type_a_sl(n),
            Family::PGL => type_a_pgl(n),
            Family::Sp => type_bc(n, true),
            Family::SoOdd => type_bc(n, false),
            Family::SoEven => type_d(n),
            Family::G2 => type_g2(),
        };
        let mut pairs = pairs;
        pairs.sort();
        pairs.dedup();
        let (roots, coroots): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let simple = simple_roots
            .iter()
            .map(|a| {
                roots
                    .iter()
                    .position(|r| r == a)
                    .expect("simple root is a root")
            })
            .collect();
        let mut d = Self::new(rank, roots, coroots, simple)?;
        d.family = Some((family, n));
        Ok(d)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn coroots(&self) -> &[Vec<i64>] {
        &self.coroots
    }

    /// Indices into [`roots`](Self::roots) of the simple roots, in Dynkin order.
    pub fn simple_indices(&self) -> &[usize] {
        &self.simple
    }

    pub fn simple_root(&self, i: usize) -> &[i64] {
        &self.roots[self.simple[i]]
    }

    pub fn simple_coroot(&self, i: usize) -> &[i64] {
        &self.coroots[self.simple[i]]
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple.len()
    }

    pub fn family(&self) -> Option<(Family, usize)> {
        self.family
    }

    pub fn fundamental_weights(&self) -> &[Vec<Rational>] {
        &self.fundamental_weights
    }

    pub fn pairing(&self, u: &[i64], v: &[i64]) -> i64 {
        dot(u, v)
    }

    /// `s_α̌(v) = v − ⟨α, v⟩ α̌` on `M̌`, as a matrix.
    pub fn coroot_reflection(&self, root: usize) -> IntMatrix {
        let a = &self.roots[root];
        let ac = &self.coroots[root];
        let mut m = IntMatrix::identity(self.rank);
        for i in 0..self.rank {
            for j in 0..self.rank {
                m.set(i, j, m.get(i, j) - ac[i] * a[j]);
            }
        }
        m
    }

    /// `A_{ij} = ⟨α_i, α̌_j⟩` over simple roots.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let s = self.simple.len();
        (0..s)
            .map(|i| {
                (0..s)
                    .map(|j| dot(self.simple_root(i), self.simple_coroot(j)))
                    .collect()
            })
            .collect()
    }

    /// Swaps `(M, R)` and `(M̌, Ř)`.
    pub fn dual(&self) -> RootDatum {
        RootDatum::from_parts(
            self.rank,
            self.coroots.clone(),
            self.roots.clone(),
            self.simple.clone(),
        )
    }

    /// Axioms (i) and (ii), reducedness, the root/coroot bijection, and that
    /// the simple roots form a base. Empty when valid.
    pub fn validate(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.roots.len() != self.coroots.len() {
            out.push(format!(
                "{} roots but {} coroots",
                self.roots.len(),
                self.coroots.len()
            ));
            return out;
        }
        if self
            .roots
            .iter()
            .chain(&self.coroots)
            .any(|v| v.len() != self.rank)
        {
            out.push("vector length differs from the lattice rank".into());
            return out;
        }
        let root_set: HashSet<&Vec<i64>> = self.roots.iter().collect();
        let coroot_set: HashSet<&Vec<i64>> = self.coroots.iter().collect();
        if root_set.len() != self.roots.len() || coroot_set.len() != self.coroots.len() {
            out.push("roots or coroots repeat, so R -> Ř is not a bijection".into());
        }
        for (i, (a, ac)) in self.roots.iter().zip(&self.coroots).enumerate() {
            let p = dot(a, ac);
            if p != 2 {
                out.push(format!(
                    "axiom (i): <alpha_{i}, coroot_{i}> = {p}, expected 2"
                ));
            }
        }
        for (i, (a, ac)) in self.roots.iter().zip(&self.coroots).enumerate() {
            for b in &self.roots {
                let img = axpy(b, -dot(b, ac), a);
                if !root_set.contains(&img) {
                    out.push(format!("axiom (ii): s_alpha_{i} maps {b:?} outside R"));
                    break;
                }
            }
            for bc in &self.coroots {
                let img = axpy(bc, -dot(a, bc), ac);
                if !coroot_set.contains(&img) {
                    out.push(format!("axiom (ii): s_coroot_{i} maps {bc:?} outside Ř"));
                    break;
                }
            }
            let twice: Vec<i64> = a.iter().map(|x| 2 * x).collect();
            if root_set.contains(&twice) {
                out.push(format!("not reduced: 2 alpha_{i} is a root"));
            }
        }
        out.extend(self.base_violations());
        out
    }

    fn base_violations(&self) -> Vec<String> {
        if self.simple.iter().any(|&i| i >= self.roots.len()) {
            return vec!["simple root index out of range".into()];
        }
        if self.roots.is_empty() {
            return Vec::new();
        }
        let simple_q: linalg::QMatrix = linalg::transpose(
            &self
                .simple
                .iter()
                .map(|&i| rat::ints(&self.roots[i]))
                .collect(),
        );
        if linalg::rank(&linalg::transpose(&simple_q)) != self.simple.len() {
            return vec!["simple roots are linearly dependent".into()];
        }
        for r in &self.roots {
            let ok = match linalg::solve(&simple_q, &rat::ints(r)) {
                Some(c) => {
                    c.iter().all(rat::is_integer)
                        && (c.iter().all(|x| *x >= Rational::from_integer(0))
                            || c.iter().all(|x| *x <= Rational::from_integer(0)))
                }
                None => false,
            };
            if !ok {
                return vec![format!(
                    "root {r:?} is not a signed combination of simple roots"
                )];
            }
        }
        Vec::new()
    }

    fn compute_fundamental_weights(&self) -> Vec<Vec<Rational>> {
        let s = self.simple.len();
        if s == 0 {
            return Vec::new();
        }
        let cartan = self.cartan_matrix();
        let cartan_t: linalg::QMatrix = (0..s)
            .map(|i| (0..s).map(|k| rat::int(cartan[k][i])).collect())
            .collect();
        (0..s)
            .map(|i| {
                let e: Vec<Rational> = (0..s).map(|k| rat::int((k == i) as i64)).collect();
                let x = linalg::solve(&cartan_t, &e).expect("Cartan matrix is invertible");
                let mut w = vec![Rational::from_integer(0); self.rank];
                for (k, xk) in x.iter().enumerate() {
                    for (wj, &aj) in w.iter_mut().zip(self.simple_root(k)) {
                        *wj += xk * Rational::from_integer(aj as i128);
                    }
                }
                w
            })
            .collect()
    }

    /// `π₁ = M̌ / ⟨Ř⟩`.
    pub fn fundamental_group(&self) -> LatticeQuotient {
        LatticeQuotient::from_generators(self.rank, &self.coroots)
    }

    /// Rational basis of `R^⊥ = {m : ⟨α, m⟩ = 0 for all α}` in `M̌ ⊗ ℚ`.
    pub fn center_basis(&self) -> Vec<Vec<Rational>> {
        let m: linalg::QMatrix = self.roots.iter().map(|r| rat::ints(r)).collect();
        if m.is_empty() {
            return (0..self.rank)
                .map(|i| rat::ints(&unit(self.rank, i)))
                .collect();
        }
        linalg::nullspace(&m, self.rank)
    }

    /// Connected components of the Dynkin diagram restricted to the given
    /// simple positions, each sorted, ordered by least element.
    pub fn dynkin_components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        let cartan = self.cartan_matrix();
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &s in &set {
            if seen.contains(&s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut k = 0;
            while k < comp.len() {
                let a = comp[k];
                for &b in &set {
                    if !seen.contains(&b) && (cartan[a][b] != 0 || cartan[b][a] != 0) {
                        seen.insert(b);
                        comp.push(b);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// If the component is of type `A_k`, its simple positions in path order.
    pub fn type_a_chain(&self, component: &[usize]) -> Option<Vec<usize>> {
        let cartan = self.cartan_matrix();
        let k = component.len();
        let mut degree = vec![0usize; k];
        let mut edges = 0;
        for x in 0..k {
            for y in x + 1..k {
                let (a, b) = (component[x], component[y]);
                match (cartan[a][b], cartan[b][a]) {
                    (0, 0) => {}
                    (-1, -1) => {
                        degree[x] += 1;
                        degree[y] += 1;
                        edges += 1;
                    }
                    _ => return None,
                }
            }
        }
        if k > 1 && (edges != k - 1 || degree.iter().any(|&d| d > 2)) {
            return None;
        }
        let start = (0..k).find(|&x| degree[x] <= 1).unwrap_or(0);
        let mut chain = vec![component[start]];
        let mut prev = usize::MAX;
        let mut cur = component[start];
        while chain.len() < k {
            let next = component
                .iter()
                .copied()
                .find(|&b| b != prev && b != cur && cartan[cur][b] != 0)?;
            prev = cur;
            cur = next;
            chain.push(cur);
        }
        Some(chain)
    }

    /// The coordinate maps of the matrix model, for builder data.
    pub fn matrix_model(&self) -> Option<MatrixModel> {
        self.family.map(|(f, n)| MatrixModel::for_family(f, n))
    }
}

/// Coordinates of `D(y) ⊙ P_σ` in terms of `m ∈ M̌`.
///
/// `lift` sends `m` to `y`; `proj` recovers `m` from `y`. For `PGLₙ` the
/// model is the quotient by scalars: `proj(y) = (y_i − y_n)_i` and `lift`
/// picks the representative with `y_n = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixModel {
    pub size: usize,
    pub lift: IntMatrix,
    pub proj: IntMatrix,
    pub modulo_scalars: bool,
}

impl MatrixModel {
    pub fn for_family(family: Family, n: usize) -> Self {
        let size = family.matrix_size(n);
        let (lift_rows, proj_rows): (Vec<Vec<i64>>, Vec<Vec<i64>>) = match family {
            Family::GL => (identity_rows(n), identity_rows(n)),
            Family::SL => (
                (0..n)
                    .map(|i| {
                        (0..n - 1)
                            .map(|k| (i == k) as i64 - (i == k + 1) as i64)
                            .collect()
                    })
                    .collect(),
                (0..n - 1)
                    .map(|k| (0..n).map(|i| (i <= k) as i64).collect())
                    .collect(),
            ),
            Family::PGL => (
                (0..n)
                    .map(|i| (0..n - 1).map(|k| (i == k) as i64).collect())
                    .collect(),
                (0..n - 1)
                    .map(|k| {
                        (0..n)
                            .map(|i| (i == k) as i64 - (i == n - 1) as i64)
                            .collect()
                    })
                    .collect(),
            ),
            Family::Sp | Family::SoEven => {
                let mut lift = identity_rows(n);
                lift.extend(identity_rows(n).into_iter().map(|r| neg(&r)));
                let proj = identity_rows(n)
                    .into_iter()
                    .map(|mut r| {
                        r.extend(vec![0; n]);
                        r
                    })
                    .collect();
                (lift, proj)
            }
            Family::SoOdd => {
                let mut lift = vec![vec![0; n]];
                lift.extend(identity_rows(n));
                lift.extend(identity_rows(n).into_iter().map(|r| neg(&r)));
                let proj = identity_rows(n)
                    .into_iter()
                    .map(|r| {
                        let mut row = vec![0];
                        row.extend(r);
                        row.extend(vec![0; n]);
                        row
                    })
                    .collect();
                (lift, proj)
            }
            Family::G2 => (
                vec![
                    vec![1, -1],
                    vec![2, -1],
                    vec![1, 0],
                    vec![-1, 1],
                    vec![-2, 1],
                    vec![-1, 0],
                    vec![0, 0],
                ],
                vec![vec![0, 0, 1, 0, 0, 0, 0], vec![-1, 0, 1, 0, 0, 0, 0]],
            ),
        };
        MatrixModel {
            size,
            lift: IntMatrix::from_rows(&lift_rows),
            proj: IntMatrix::from_rows(&proj_rows),
            modulo_scalars: family == Family::PGL,
        }
    }
}

fn identity_rows(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| unit(n, i)).collect()
}

fn neg(v: &[i64]) -> Vec<i64> {
    v.iter().map(|x| -x).collect()
}

type Pairs = Vec<(Vec<i64>, Vec<i64>)>;

fn gl_root(n: usize, i: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v[j] = -1;
    v
}

fn type_a_gl(n: usize) -> (usize, Pairs, Vec<Vec<i64>>) {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                pairs.push((gl_root(n, i, j), gl_root(n, i, j)));
            }
        }
    }
    let simple = (0..n - 1).map(|i| gl_root(n, i, i + 1)).collect();
    (n, pairs, simple)
}

/// `M̌ = ℤⁿ₀` in the basis `b_k = e_k − e_{k+1}`; `M` in the dual basis.
fn type_a_sl(n: usize) -> (usize, Pairs, Vec<Vec<i64>>) {
    let to_m = |i: usize, j: usize| -> Vec<i64> {
        let r = gl_root(n, i, j);
        (0..n - 1).map(|k| r[k] - r[k + 1]).collect()
    };
    let to_mc = |i: usize, j: usize| -> Vec<i64> {
        let (lo, hi, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
        (0..n - 1)
            .map(|k| if lo <= k && k < hi { s } else { 0 })
            .collect()
    };
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                pairs.push((to_m(i, j), to_mc(i, j)));
            }
        }
    }
    let simple = (0..n - 1).map(|i| to_m(i, i + 1)).collect();
    (n - 1, pairs, simple)
}

/// `M̌ = ℤⁿ/ℤ(1,…,1)` in the basis `ē_1, …, ē_{n−1}`; `M = ℤⁿ₀` in the
/// dual basis. Roots drop the last coordinate, coroots become `v_k − v_n`.
fn type_a_pgl(n: usize) -> (usize, Pairs, Vec<Vec<i64>>) {
    let drop = |v: Vec<i64>| v[..n - 1].to_vec();
    let shift = |v: Vec<i64>| (0..n - 1).map(|k| v[k] - v[n - 1]).collect::<Vec<_>>();
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                pairs.push((drop(gl_root(n, i, j)), shift(gl_root(n, i, j))));
            }
        }
    }
    let simple = (0..n - 1).map(|i| drop(gl_root(n, i, i + 1))).collect();
    (n - 1, pairs, simple)
}

fn pm_pairs(n: usize, pairs: &mut Pairs) {
    for i in 0..n {
        for j in i + 1..n {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = vec![0; n];
                v[i] = si;
                v[j] = sj;
                pairs.push((v.clone(), v));
            }
        }
    }
}

/// `symplectic = true`: roots `±2e_i, ±e_i±e_j`, coroots `±e_i, ±e_i±e_j`.
/// Otherwise the dual system of `SO₂ₙ₊₁`.
fn type_bc(n: usize, symplectic: bool) -> (usize, Pairs, Vec<Vec<i64>>) {
    let mut pairs = Vec::new();
    pm_pairs(n, &mut pairs);
    for i in 0..n {
        for s in [1, -1] {
            let short = {
                let mut v = vec![0; n];
                v[i] = s;
                v
            };
            let long: Vec<i64> = short.iter().map(|x| 2 * x).collect();
            if symplectic {
                pairs.push((long, short));
            } else {
                pairs.push((short, long));
            }
        }
    }
    let mut simple: Vec<Vec<i64>> = (0..n - 1).map(|i| gl_root(n, i, i + 1)).collect();
    let mut last = vec![0; n];
    last[n - 1] = if symplectic { 2 } else { 1 };
    simple.push(last);
    (n, pairs, simple)
}

fn type_d(n: usize) -> (usize, Pairs, Vec<Vec<i64>>) {
    let mut pairs = Vec::new();
    pm_pairs(n, &mut pairs);
    let mut simple: Vec<Vec<i64>> = (0..n - 1).map(|i| gl_root(n, i, i + 1)).collect();
    let mut last = vec![0; n];
    last[n - 2] = 1;
    last[n - 1] = 1;
    simple.push(last);
    (n, pairs, simple)
}

/// `M̌` has basis the simple coroots `α̌₁` (of the short root) and `α̌₂`;
/// `M` has basis the fundamental weights. All roots are produced by
/// reflecting the simple pair.
fn type_g2() -> (usize, Pairs, Vec<Vec<i64>>) {
    let simple: Pairs = vec![(vec![2, -1], vec![1, 0]), (vec![-3, 2], vec![0, 1])];
    let mut pairs = simple.clone();
    let mut k = 0;
    while k < pairs.len() {
        let (b, bc) = pairs[k].clone();
        for (a, ac) in &simple {
            let img = (axpy(&b, -dot(&b, ac), a), axpy(&bc, -dot(a, &bc), ac));
            if !pairs.contains(&img) {
                pairs.push(img);
            }
        }
        k += 1;
    }
    (2, pairs, simple.into_iter().map(|(a, _)| a).collect())
}

#[derive(Serialize)]
struct DatumJson<'a> {
    family: Option<Family>,
    n: Option<usize>,
    rank_m: usize,
    rank_mcheck: usize,
    pairing: Vec<Vec<i64>>,
    roots: &'a [Vec<i64>],
    coroots: &'a [Vec<i64>],
    simple_roots: &'a [usize],
}

impl Serialize for RootDatum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DatumJson {
            family: self.family.map(|f| f.0),
            n: self.family.map(|f| f.1),
            rank_m: self.rank,
            rank_mcheck: self.rank,
            pairing: identity_rows(self.rank),
            roots: &self.roots,
            coroots: &self.coroots,
            simple_roots: &self.simple,
        }
        .serialize(s)
    }
}
