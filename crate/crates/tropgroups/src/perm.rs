//! Permutations of `{0, .., n-1}`, stored as image vectors.

use serde::Serialize;

/// `Perm(v)` sends `j` to `v[j]`. Composition `a.compose(b)` is `a ∘ b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Returns `None` unless `images` is a bijection of `0..len`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm(images))
    }

    /// Transposition of `a` and `b` in `S_n`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(a, b);
        Perm(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, j: usize) -> usize {
        self.0[j]
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len());
        Perm(other.0.iter().map(|&j| self.0[j]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (j, &i) in self.0.iter().enumerate() {
            inv[i] = j;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycles including fixed points, each starting at its least element,
    /// ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.0[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Parity as `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        let even = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_full_cycle(&self) -> bool {
        self.cycles().len() == 1
    }

    /// Permutes a vector: `(σ·y)_i = y_{σ⁻¹(i)}`.
    pub fn act<T: Clone>(&self, y: &[T]) -> Vec<T> {
        let mut out = y.to_vec();
        for (j, &i) in self.0.iter().enumerate() {
            out[i] = y[j].clone();
        }
        out
    }

    /// All of `S_n` in lexicographic order of image vectors.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm(cur.clone()));
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = Perm(vec![1, 2, 0]);
        let b = Perm::transposition(3, 0, 1);
        assert_eq!(a.compose(&b).0, vec![2, 1, 0]);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn sign_is_multiplicative_on_s4() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        for a in &all {
            for b in &all {
                assert_eq!(a.compose(b).sign(), a.sign() * b.sign());
            }
        }
    }

    #[test]
    fn act_moves_entries_forward() {
        let s = Perm(vec![1, 0]);
        assert_eq!(s.act(&[10, 20]), vec![20, 10]);
        let c = Perm(vec![1, 2, 0]);
        assert_eq!(c.act(&['a', 'b', 'c']), vec!['c', 'a', 'b']);
    }

    #[test]
    fn cycles_start_at_minimum() {
        let p = Perm(vec![2, 1, 3, 0]);
        assert_eq!(p.cycles(), vec![vec![0, 2, 3], vec![1]]);
        assert!(!p.is_full_cycle());
        assert!(Perm(vec![1, 2, 3, 0]).is_full_cycle());
    }
}
