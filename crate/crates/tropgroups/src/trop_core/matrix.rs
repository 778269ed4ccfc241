use serde::Serialize;

use super::TropValue;
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::rat::Rational;

/// A dense matrix over 𝕋.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<TropValue>,
}

impl TropMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<TropValue>) -> Result<Self> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(TropMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<TropValue>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Every entry ∞.
    pub fn infinite(rows: usize, cols: usize) -> Self {
        TropMatrix {
            rows,
            cols,
            entries: vec![TropValue::Infinity; rows * cols],
        }
    }

    /// `I_n`: 0 on the diagonal, ∞ elsewhere.
    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![Rational::from_integer(0); n])
    }

    /// `D(y₁,…,yₙ)`.
    pub fn diagonal(y: &[Rational]) -> Self {
        let n = y.len();
        let mut m = Self::infinite(n, n);
        for (i, v) in y.iter().enumerate() {
            m.set(i, i, TropValue::Finite(*v));
        }
        m
    }

    /// `P_σ` with `(P_σ)_{ij} = 0` iff `i = σ(j)`.
    pub fn permutation(sigma: &Perm) -> Self {
        let n = sigma.len();
        let mut m = Self::infinite(n, n);
        for j in 0..n {
            m.set(sigma.apply(j), j, TropValue::one());
        }
        m
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &TropValue {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: TropValue) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[TropValue] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<TropValue>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::infinite(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, *self.get(i, j));
            }
        }
        t
    }

    /// `(A⊙B)_{ij} = min_k (a_ik + b_kj)`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::infinite(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_finite() {
                    continue;
                }
                for j in 0..other.cols {
                    let cand = a.otimes(other.get(k, j));
                    if cand < *out.get(i, j) {
                        out.set(i, j, cand);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `A ⊙ x` for a column vector `x`.
    pub fn apply(&self, x: &[TropValue]) -> Result<Vec<TropValue>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                x.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .map(|(a, b)| a.otimes(b))
                    .fold(TropValue::Infinity, |acc, v| acc.oplus(&v))
            })
            .collect())
    }
}

impl Serialize for TropMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for TropMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<TropValue>>::deserialize(d)?;
        TropMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

/// `A = D(diag) ⊙ P_perm`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenPermDecomposition {
    pub diag: Vec<Rational>,
    pub perm: Perm,
}

impl GenPermDecomposition {
    pub fn identity(n: usize) -> Self {
        GenPermDecomposition {
            diag: vec![Rational::from_integer(0); n],
            perm: Perm::identity(n),
        }
    }

    pub fn to_matrix(&self) -> TropMatrix {
        let mut m = TropMatrix::infinite(self.diag.len(), self.diag.len());
        for j in 0..self.diag.len() {
            let i = self.perm.apply(j);
            m.set(i, j, TropValue::Finite(self.diag[i]));
        }
        m
    }

    /// `D(y)P_σ ⊙ D(z)P_τ = D(y + σ·z) P_{στ}`.
    pub fn compose(&self, other: &Self) -> Self {
        let moved = self.perm.act(&other.diag);
        GenPermDecomposition {
            diag: self.diag.iter().zip(&moved).map(|(a, b)| a + b).collect(),
            perm: self.perm.compose(&other.perm),
        }
    }

    /// `(D(y)P_σ)⁻¹ = D(−σ⁻¹·y) P_{σ⁻¹}`.
    pub fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        let neg: Vec<Rational> = self.diag.iter().map(|x| -x).collect();
        GenPermDecomposition {
            diag: inv.act(&neg),
            perm: inv,
        }
    }

    /// `(D(y)P_σ ⊙ x)_i = y_i + x_{σ⁻¹(i)}` on finite vectors.
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        let moved = self.perm.act(x);
        self.diag.iter().zip(&moved).map(|(a, b)| a + b).collect()
    }
}

/// Decomposes a generalized tropical permutation matrix; any other square
/// matrix is not invertible.
pub fn invert_or_decompose(a: &TropMatrix) -> Result<GenPermDecomposition> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch("matrix is not square".into()));
    }
    let n = a.n_rows();
    let mut images = vec![usize::MAX; n];
    for j in 0..n {
        let finite: Vec<usize> = (0..n).filter(|&i| a.get(i, j).is_finite()).collect();
        if finite.len() != 1 {
            return Err(Error::NotInvertible(format!(
                "column {j} has {} finite entries",
                finite.len()
            )));
        }
        images[j] = finite[0];
    }
    let perm = Perm::from_images(images)
        .ok_or_else(|| Error::NotInvertible("two columns share a finite row".into()))?;
    let mut diag = vec![Rational::from_integer(0); n];
    for j in 0..n {
        let i = perm.apply(j);
        diag[i] = *a.get(i, j).as_finite().expect("finite by construction");
    }
    Ok(GenPermDecomposition { diag, perm })
}
