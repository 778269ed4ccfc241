//! Weyl groups as integer matrices acting on `M̌`.
//!
//! Elements are addressed by their index in a fixed ordering: lexicographic
//! on the row-major entries of the matrix.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use crate::perm::Perm;
use crate::root_data::{Family, MatrixModel, RootDatum};

/// Default bound on `|W|`, overridable through `TROPGROUPS_GUARD`.
pub const DEFAULT_GUARD: usize = 10_000;

pub fn guard_limit() -> usize {
    std::env::var("TROPGROUPS_GUARD")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_GUARD)
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    datum: RootDatum,
    elements: Vec<IntMatrix>,
    index: HashMap<Vec<i64>, usize>,
    generators: Vec<usize>,
    inverses: Vec<usize>,
    identity: usize,
    perms: Option<Vec<Perm>>,
}

impl WeylGroup {
    pub fn generate(datum: &RootDatum) -> Result<Self> {
        Self::generate_with_guard(datum, guard_limit())
    }

    pub fn generate_with_guard(datum: &RootDatum, limit: usize) -> Result<Self> {
        let r = datum.rank();
        let gens: Vec<IntMatrix> = datum
            .simple_indices()
            .iter()
            .map(|&i| datum.coroot_reflection(i))
            .collect();
        let id = IntMatrix::identity(r);
        let mut seen: HashMap<Vec<i64>, IntMatrix> = HashMap::new();
        seen.insert(id.entries().to_vec(), id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for g in &gens {
                let h = g.mul(&w);
                if !seen.contains_key(h.entries()) {
                    if seen.len() >= limit {
                        return Err(Error::GuardExceeded { limit });
                    }
                    seen.insert(h.entries().to_vec(), h.clone());
                    queue.push_back(h);
                }
            }
        }
        let mut elements: Vec<IntMatrix> = seen.into_values().collect();
        elements.sort_by(|a, b| a.entries().cmp(b.entries()));
        let index: HashMap<Vec<i64>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, m)| (m.entries().to_vec(), i))
            .collect();
        let identity = index[IntMatrix::identity(r).entries()];
        let generators = gens.iter().map(|g| index[g.entries()]).collect();
        let mut group = WeylGroup {
            datum: datum.clone(),
            elements,
            index,
            generators,
            inverses: Vec::new(),
            identity,
            perms: None,
        };
        group.inverses = (0..group.len()).map(|i| group.find_inverse(i)).collect();
        group.perms = datum.matrix_model().and_then(|model| {
            (0..group.len())
                .map(|i| permutation_in_model(&model, &group.elements[i]))
                .collect::<Option<Vec<_>>>()
        });
        Ok(group)
    }

    fn find_inverse(&self, i: usize) -> usize {
        let mut cur = self.identity;
        let mut prev = self.identity;
        loop {
            cur = self.mul(cur, i);
            if cur == self.identity {
                return prev;
            }
            prev = cur;
        }
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn element(&self, i: usize) -> &IntMatrix {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.index.get(m.entries()).copied()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Simple reflections, in Dynkin order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let m = self.elements[a].mul(&self.elements[b]);
        self.index[m.entries()]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `v w v⁻¹`.
    pub fn conjugate(&self, v: usize, w: usize) -> usize {
        self.mul(self.mul(v, w), self.inverses[v])
    }

    pub fn act(&self, w: usize, m: &[i64]) -> Vec<i64> {
        self.elements[w].mul_vec(m)
    }

    pub fn act_q(&self, w: usize, m: &[crate::Rational]) -> Vec<crate::Rational> {
        self.elements[w].mul_qvec(m)
    }

    pub fn order_of(&self, w: usize) -> usize {
        let mut k = 1;
        let mut cur = w;
        while cur != self.identity {
            cur = self.mul(cur, w);
            k += 1;
        }
        k
    }

    pub fn check(&self, w: usize) -> Result<()> {
        if w < self.len() {
            Ok(())
        } else {
            Err(Error::NotInGroup(format!("no Weyl element with index {w}")))
        }
    }

    /// Conjugacy classes, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut class_of = vec![usize::MAX; self.len()];
        let mut classes = Vec::new();
        for start in 0..self.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[start] = id;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let w = members[k];
                for &g in &self.generators {
                    let c = self.conjugate(g, w);
                    if class_of[c] == usize::MAX {
                        class_of[c] = id;
                        members.push(c);
                    }
                }
                k += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    pub fn conjugacy_class(&self, w: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = (0..self.len()).map(|v| self.conjugate(v, w)).collect();
        set.into_iter().collect()
    }

    pub fn centralizer(&self, w: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.mul(v, w) == self.mul(w, v))
            .collect()
    }

    /// `W_P`, generated by the simple reflections at the given positions.
    pub fn parabolic(&self, subset: &[usize]) -> Result<Vec<usize>> {
        if let Some(&bad) = subset.iter().find(|&&i| i >= self.generators.len()) {
            return Err(Error::NotInGroup(format!(
                "no simple root at position {bad}"
            )));
        }
        let gens: Vec<usize> = subset.iter().map(|&i| self.generators[i]).collect();
        Ok(self.closure(&gens))
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = BTreeSet::from([self.identity]);
        let mut queue = VecDeque::from([self.identity]);
        while let Some(w) = queue.pop_front() {
            for &g in gens {
                let h = self.mul(g, w);
                if seen.insert(h) {
                    queue.push_back(h);
                }
            }
        }
        seen.into_iter().collect()
    }

    pub fn normalizer(&self, subgroup: &[usize]) -> Vec<usize> {
        let set: BTreeSet<usize> = subgroup.iter().copied().collect();
        (0..self.len())
            .filter(|&v| {
                subgroup
                    .iter()
                    .all(|&h| set.contains(&self.conjugate(v, h)))
            })
            .collect()
    }

    /// Permutation of matrix indices attached to `w` by the matrix model.
    pub fn permutation(&self, w: usize) -> Option<&Perm> {
        self.perms.as_ref().map(|p| &p[w])
    }

    /// Parity of the permutation image. `None` without a matrix model.
    pub fn sign(&self, w: usize) -> Option<i8> {
        self.permutation(w).map(Perm::sign)
    }

    /// Type-A structure of the parabolic `W_P`, or `NotTypeA`.
    pub fn type_a(&self, subset: &[usize]) -> Result<TypeA> {
        TypeA::new(&self.datum, subset)
    }

    /// Whether `w ∈ W_P` is a product of full cycles, one per Dynkin component.
    pub fn is_indecomposable(&self, subset: &[usize], w: usize) -> Result<bool> {
        self.check(w)?;
        let ta = self.type_a(subset)?;
        Ok(ta
            .factor_perms(&self.elements[w])
            .map(|ps| ps.iter().all(Perm::is_full_cycle))
            .unwrap_or(false))
    }

    /// Checks `C_{W}(w) ⊆ N_W(W_P)` and the coset bijection
    /// `C_W(w)/C_{W_P}(w) → N_W(W_P)/W_P` for indecomposable `w ∈ W_P`.
    pub fn relative_weyl_check(&self, subset: &[usize], w: usize) -> Result<RelativeWeylReport> {
        self.check(w)?;
        let wp = self.parabolic(subset)?;
        let wp_set: BTreeSet<usize> = wp.iter().copied().collect();
        if !wp_set.contains(&w) {
            return Err(Error::Hypothesis(format!("w = {w} is not in W_P")));
        }
        if !self.is_indecomposable(subset, w)? {
            return Err(Error::Hypothesis(format!(
                "w = {w} is not indecomposable in W_P"
            )));
        }
        let big = self.centralizer(w);
        let small: Vec<usize> = big.iter().copied().filter(|v| wp_set.contains(v)).collect();
        let normalizer = self.normalizer(&wp);
        let n_set: BTreeSet<usize> = normalizer.iter().copied().collect();
        if let Some(v) = big.iter().find(|v| !n_set.contains(v)) {
            return Err(Error::Hypothesis(format!(
                "centralizer element {v} does not normalize W_P"
            )));
        }
        let coset_rep = |g: usize, sub: &[usize]| -> usize {
            sub.iter().map(|&h| self.mul(g, h)).min().unwrap_or(g)
        };
        let left: BTreeSet<usize> = big.iter().map(|&g| coset_rep(g, &small)).collect();
        let right: BTreeSet<usize> = normalizer.iter().map(|&g| coset_rep(g, &wp)).collect();
        let bijection: Vec<(usize, usize)> = left.iter().map(|&g| (g, coset_rep(g, &wp))).collect();
        let image: BTreeSet<usize> = bijection.iter().map(|p| p.1).collect();
        if image.len() != left.len() || image != right {
            return Err(Error::Hypothesis(format!(
                "coset map is not a bijection: {} cosets onto {} of {}",
                left.len(),
                image.len(),
                right.len()
            )));
        }
        Ok(RelativeWeylReport {
            centralizer: big,
            parabolic_centralizer: small,
            normalizer,
            bijection,
        })
    }
}

/// `σ(j)` is where column `j` of `w·proj` sits among the columns of `proj`
/// (quotient model), or where row `j` of `lift` sits among the rows of
/// `lift·w` (embedded models).
fn permutation_in_model(model: &MatrixModel, w: &IntMatrix) -> Option<Perm> {
    let n = model.size;
    let (source, target): (Vec<Vec<i64>>, Vec<Vec<i64>>) = if model.modulo_scalars {
        let moved = w.mul(&model.proj);
        (
            (0..n).map(|j| moved.column(j)).collect(),
            (0..n).map(|j| model.proj.column(j)).collect(),
        )
    } else {
        let moved = model.lift.mul(w);
        (
            (0..n).map(|i| model.lift.row(i).to_vec()).collect(),
            (0..n).map(|i| moved.row(i).to_vec()).collect(),
        )
    };
    (0..n)
        .map(|j| target.iter().position(|t| *t == source[j]))
        .collect::<Option<Vec<usize>>>()
        .and_then(Perm::from_images)
}

/// Product-of-`A` structure of a parabolic: each Dynkin component `A_k`
/// acts on `k + 1` points through its coroots `Σ_{t=a}^{b−1} β̌_t`.
#[derive(Clone, Debug)]
pub struct TypeA {
    chains: Vec<Vec<usize>>,
    pair_of: Vec<HashMap<Vec<i64>, (usize, usize)>>,
}

impl TypeA {
    pub fn new(datum: &RootDatum, subset: &[usize]) -> Result<Self> {
        let mut chains = Vec::new();
        let mut pair_of = Vec::new();
        for comp in datum.dynkin_components(subset) {
            let chain = datum
                .type_a_chain(&comp)
                .ok_or_else(|| Error::NotTypeA(format!("component {comp:?}")))?;
            let k = chain.len();
            let mut map = HashMap::new();
            for a in 0..=k {
                for b in a + 1..=k {
                    let mut v = vec![0; datum.rank()];
                    for &t in &chain[a..b] {
                        for (x, c) in v.iter_mut().zip(datum.simple_coroot(t)) {
                            *x += c;
                        }
                    }
                    let neg: Vec<i64> = v.iter().map(|x| -x).collect();
                    map.insert(v, (a, b));
                    map.insert(neg, (b, a));
                }
            }
            chains.push(chain);
            pair_of.push(map);
        }
        Ok(TypeA { chains, pair_of })
    }

    /// Simple positions of each component, in path order.
    pub fn chains(&self) -> &[Vec<usize>] {
        &self.chains
    }

    /// Sizes `n_i` of the factors `S_{n_i}`.
    pub fn factor_sizes(&self) -> Vec<usize> {
        self.chains.iter().map(|c| c.len() + 1).collect()
    }

    /// Permutation of each factor, or `None` when `w` leaves some
    /// component's coroots.
    pub fn factor_perms(&self, w: &IntMatrix) -> Option<Vec<Perm>> {
        self.chains
            .iter()
            .zip(&self.pair_of)
            .map(|(chain, map)| {
                let k = chain.len();
                let mut images = vec![0; k + 1];
                let by_pair: HashMap<(usize, usize), &Vec<i64>> =
                    map.iter().map(|(v, &p)| (p, v)).collect();
                for (a, img) in images.iter_mut().enumerate() {
                    let c = if a == 0 { 1 } else { 0 };
                    let moved = w.mul_vec(by_pair[&(a, c)]);
                    *img = map.get(&moved)?.0;
                }
                Perm::from_images(images)
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeWeylReport {
    /// `C_W(w)`.
    pub centralizer: Vec<usize>,
    /// `C_{W_P}(w)`.
    pub parabolic_centralizer: Vec<usize>,
    /// `N_W(W_P)`.
    pub normalizer: Vec<usize>,
    /// Least coset representatives `(g C_{W_P}(w), g W_P)`.
    pub bijection: Vec<(usize, usize)>,
}

/// `|W|` for the builder families.
pub fn classical_order(family: Family, n: usize) -> usize {
    let fact = |k: usize| (1..=k).product::<usize>();
    match family {
        Family::GL | Family::SL | Family::PGL => fact(n),
        Family::Sp | Family::SoOdd => (1 << n) * fact(n),
        Family::SoEven => (1 << (n - 1)) * fact(n),
        Family::G2 => 12,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(f: Family, n: usize) -> WeylGroup {
        WeylGroup::generate(&RootDatum::build(f, n).unwrap()).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(group(Family::GL, 3).len(), 6);
        assert_eq!(group(Family::Sp, 2).len(), 8);
        assert_eq!(group(Family::G2, 1).len(), 12);
        assert_eq!(group(Family::GL, 1).len(), 1);
    }

    #[test]
    fn guard_is_enforced() {
        let d = RootDatum::build(Family::GL, 4).unwrap();
        assert!(matches!(
            WeylGroup::generate_with_guard(&d, 10),
            Err(Error::GuardExceeded { limit: 10 })
        ));
    }

    #[test]
    fn s3_classes_and_centralizers() {
        let w = group(Family::GL, 3);
        let mut sizes: Vec<usize> = w.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(w.centralizer(w.identity()).len(), 6);
        assert_eq!(w.parabolic(&[0]).unwrap().len(), 2);
    }

    #[test]
    fn gl_permutations_match_matrices() {
        let w = group(Family::GL, 3);
        for i in 0..w.len() {
            let p = w.permutation(i).unwrap();
            let m = w.element(i);
            for j in 0..3 {
                assert_eq!(m.get(p.apply(j), j), 1);
            }
        }
    }

    #[test]
    fn permutation_images_are_homomorphic() {
        for (f, n) in [
            (Family::PGL, 3),
            (Family::Sp, 2),
            (Family::SoOdd, 2),
            (Family::G2, 1),
        ] {
            let w = group(f, n);
            for a in 0..w.len() {
                for b in 0..w.len() {
                    let lhs = w.permutation(w.mul(a, b)).unwrap().clone();
                    let rhs = w.permutation(a).unwrap().compose(w.permutation(b).unwrap());
                    assert_eq!(lhs, rhs, "{f}");
                }
            }
        }
    }

    #[test]
    fn three_cycle_is_indecomposable() {
        let w = group(Family::GL, 3);
        let all = [0, 1];
        let cycles: Vec<usize> = (0..w.len())
            .filter(|&i| w.is_indecomposable(&all, i).unwrap())
            .collect();
        assert_eq!(cycles.len(), 2);
        for &c in &cycles {
            assert_eq!(w.order_of(c), 3);
        }
        assert!(!w.is_indecomposable(&all, w.identity()).unwrap());
    }

    #[test]
    fn product_of_a1_needs_both_swaps() {
        let w = group(Family::GL, 4);
        let d = [0, 2];
        let s0 = w.generators()[0];
        let s2 = w.generators()[2];
        assert!(!w.is_indecomposable(&d, s0).unwrap());
        assert!(w.is_indecomposable(&d, w.mul(s0, s2)).unwrap());
    }

    #[test]
    fn non_type_a_parabolic_is_refused() {
        let w = group(Family::Sp, 2);
        assert!(matches!(
            w.is_indecomposable(&[0, 1], 0),
            Err(Error::NotTypeA(_))
        ));
    }

    #[test]
    fn relative_weyl_examples() {
        let s3 = group(Family::GL, 3);
        let c = (0..s3.len())
            .find(|&i| s3.is_indecomposable(&[0, 1], i).unwrap())
            .unwrap();
        let rep = s3.relative_weyl_check(&[0, 1], c).unwrap();
        assert_eq!(rep.bijection.len(), 1);

        let sp4 = group(Family::Sp, 2);
        let s = sp4.generators()[0];
        let rep = sp4.relative_weyl_check(&[0], s).unwrap();
        assert_eq!(rep.bijection.len() * 2, rep.normalizer.len());

        let g2 = group(Family::G2, 1);
        for p in 0..2 {
            let s = g2.generators()[p];
            assert!(g2.relative_weyl_check(&[p], s).is_ok());
        }
    }

    #[test]
    fn d_type_is_kernel_of_sign() {
        for n in 2..=3 {
            let b = group(Family::SoOdd, n);
            let d = group(Family::SoEven, n);
            let even: Vec<&IntMatrix> = (0..b.len())
                .filter(|&i| b.sign(i) == Some(1))
                .map(|i| b.element(i))
                .collect();
            let all_d: Vec<&IntMatrix> = d.elements().iter().collect();
            assert_eq!(even, all_d);
        }
    }
}
