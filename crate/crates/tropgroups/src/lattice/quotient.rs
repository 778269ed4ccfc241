use super::linalg;
use super::snf::hermite_rows;
use super::{smith, IntMatrix, SmithForm};
use crate::rat::Rational;

/// `ℤʳ / L` where `L` is spanned by the columns of `relations`.
///
/// Coordinates on the quotient come from the Smith form `U·A·V = D`: a
/// torsion coordinate `(Ux)_i mod d_i` for each `d_i > 1`, then a free
/// coordinate `(Ux)_i` for each `i ≥ rank`. The free rows of `U` are put in
/// Hermite form so that they do not depend on elimination order.
#[derive(Clone, Debug)]
pub struct LatticeQuotient {
    ambient: usize,
    relations: IntMatrix,
    snf: SmithForm,
    u: IntMatrix,
    u_inv: IntMatrix,
    torsion: Vec<(usize, i64)>,
}

impl LatticeQuotient {
    pub fn new(relations: &IntMatrix) -> Self {
        let ambient = relations.n_rows();
        let snf = smith(relations);
        let mut u = snf.u.clone();
        hermite_rows(&mut u, snf.rank());
        let u_inv_q = linalg::inverse(&u.to_q()).expect("unimodular");
        let u_inv_rows: Vec<Vec<i64>> = u_inv_q
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        assert!(x.is_integer(), "unimodular inverse is integral");
                        *x.numer() as i64
                    })
                    .collect()
            })
            .collect();
        let torsion = snf
            .diagonal
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 1)
            .map(|(i, &d)| (i, d))
            .collect();
        LatticeQuotient {
            ambient,
            relations: relations.clone(),
            u_inv: IntMatrix::from_rows(&u_inv_rows),
            u,
            snf,
            torsion,
        }
    }

    /// Quotient of `ℤʳ` by the span of `generators`.
    pub fn from_generators(ambient: usize, generators: &[Vec<i64>]) -> Self {
        Self::new(&IntMatrix::from_columns(ambient, generators))
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn smith_form(&self) -> &SmithForm {
        &self.snf
    }

    /// Rank of the sublattice.
    pub fn relation_rank(&self) -> usize {
        self.snf.rank()
    }

    pub fn free_rank(&self) -> usize {
        self.ambient - self.snf.rank()
    }

    /// Nontrivial torsion factors in divisibility order, then one `0` per
    /// free ℤ summand.
    pub fn invariant_factors(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.torsion.iter().map(|&(_, d)| d).collect();
        out.extend(std::iter::repeat_n(0, self.free_rank()));
        out
    }

    pub fn torsion_factors(&self) -> Vec<i64> {
        self.torsion.iter().map(|&(_, d)| d).collect()
    }

    /// Cardinality, if finite.
    pub fn order(&self) -> Option<u64> {
        (self.free_rank() == 0).then(|| self.torsion.iter().map(|&(_, d)| d as u64).product())
    }

    /// Reduced coordinates: torsion coordinates then free coordinates.
    pub fn reduce(&self, v: &[i64]) -> Vec<i64> {
        let uv = self.u.mul_vec(v);
        let mut out: Vec<i64> = self
            .torsion
            .iter()
            .map(|&(i, d)| uv[i].rem_euclid(d))
            .collect();
        out.extend(&uv[self.snf.rank()..]);
        out
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Free coordinates of a rational vector: the map to `(ℤʳ/L) ⊗ ℚ`.
    pub fn free_part(&self, v: &[Rational]) -> Vec<Rational> {
        let uv = self.u.mul_qvec(v);
        uv[self.snf.rank()..].to_vec()
    }

    /// Integral functionals giving the free coordinates.
    pub fn free_functionals(&self) -> Vec<Vec<i64>> {
        (self.snf.rank()..self.ambient)
            .map(|i| self.u.row(i).to_vec())
            .collect()
    }

    /// A representative in `ℤʳ` of the class with the given reduced coordinates.
    pub fn lift(&self, coords: &[i64]) -> Vec<i64> {
        let mut y = vec![0i64; self.ambient];
        for (k, &(i, _)) in self.torsion.iter().enumerate() {
            y[i] = coords[k];
        }
        for (k, i) in (self.snf.rank()..self.ambient).enumerate() {
            y[i] = coords[self.torsion.len() + k];
        }
        self.u_inv.mul_vec(&y)
    }

    /// All reduced coordinate tuples, in lexicographic order, if finite.
    pub fn elements(&self) -> Option<Vec<Vec<i64>>> {
        self.order()?;
        let mut out = vec![Vec::new()];
        for &(_, d) in &self.torsion {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |x| {
                        let mut p = prefix.clone();
                        p.push(x);
                        p
                    })
                })
                .collect();
        }
        Some(out)
    }

    /// Solves `A x = b` over ℤ for the relation matrix `A`: one solution and
    /// a basis of the integer kernel.
    pub fn solve(&self, b: &[i64]) -> Option<(Vec<i64>, Vec<Vec<i64>>)> {
        let ub = self.snf.u.mul_vec(b);
        let rank = self.snf.rank();
        if ub[rank..].iter().any(|&x| x != 0) {
            return None;
        }
        let k = self.relations.n_cols();
        let mut y = vec![0i64; k];
        for i in 0..rank {
            let d = self.snf.diagonal[i];
            if ub[i] % d != 0 {
                return None;
            }
            y[i] = ub[i] / d;
        }
        let x = self.snf.v.mul_vec(&y);
        let kernel = (rank..k).map(|j| self.snf.v.column(j)).collect();
        Some((x, kernel))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_quotient() {
        let q = LatticeQuotient::from_generators(1, &[vec![4]]);
        assert_eq!(q.invariant_factors(), vec![4]);
        assert_eq!(q.order(), Some(4));
        assert_eq!(q.reduce(&[6]), q.reduce(&[2]));
        assert!(q.contains(&[8]));
        assert_eq!(q.elements().unwrap().len(), 4);
    }

    #[test]
    fn free_quotient_has_positive_functional() {
        let gens = vec![vec![1, -1, 0], vec![0, 1, -1]];
        let q = LatticeQuotient::from_generators(3, &gens);
        assert_eq!(q.invariant_factors(), vec![0]);
        assert_eq!(q.free_functionals(), vec![vec![1, 1, 1]]);
        assert_eq!(q.reduce(&[2, 0, 5]), vec![7]);
    }

    #[test]
    fn lift_inverts_reduce() {
        let gens = vec![vec![2, 0], vec![0, 6]];
        let q = LatticeQuotient::from_generators(2, &gens);
        assert_eq!(q.invariant_factors(), vec![2, 6]);
        for c in q.elements().unwrap() {
            assert_eq!(q.reduce(&q.lift(&c)), c);
        }
    }

    #[test]
    fn integer_solve() {
        let gens = vec![vec![2, 0], vec![0, 3]];
        let q = LatticeQuotient::from_generators(2, &gens);
        let (x, ker) = q.solve(&[4, 9]).unwrap();
        assert_eq!(q.relations().mul_vec(&x), vec![4, 9]);
        assert!(ker.is_empty());
        assert!(q.solve(&[1, 0]).is_none());
    }
}
