use super::{invert_or_decompose, GenPermDecomposition, TropMatrix, TropPoly, TropValue};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::rat::Rational;

/// Membership verdict for the orthogonal groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orthogonality {
    NotMember,
    InO,
    InSo,
}

/// The involution `k ↦ −k` on matrix positions.
///
/// For even `m = 2n` positions are `1..n, −1..−n`; for odd `m = 2n+1` they
/// are `0, 1..n, −1..−n`, and `0` is fixed.
pub fn sign_involution(m: usize) -> Perm {
    let n = m / 2;
    let off = m % 2;
    let mut v: Vec<usize> = (0..m).collect();
    for k in 0..n {
        v[off + k] = off + n + k;
        v[off + n + k] = off + k;
    }
    Perm(v)
}

/// `σ` commutes with `ι`.
pub fn is_signed_permutation(sigma: &Perm, iota: &Perm) -> bool {
    sigma.compose(iota) == iota.compose(sigma)
}

fn antisymmetric(y: &[Rational], iota: &Perm) -> bool {
    (0..y.len()).all(|p| y[iota.apply(p)] == -y[p])
}

fn quadratic_poly(m: usize) -> TropPoly {
    let n = m / 2;
    let off = m % 2;
    let mut q = TropPoly::new();
    if off == 1 {
        q.add_term(vec![0, 0], Rational::from_integer(0));
    }
    for k in 0..n {
        q.add_term(vec![off + k, off + n + k], Rational::from_integer(0));
    }
    q
}

const CUBIC_MONOMIALS: [[usize; 3]; 5] = [[0, 2, 4], [1, 3, 5], [0, 3, 6], [1, 4, 6], [2, 5, 6]];

fn cubic_poly() -> TropPoly {
    let mut c = TropPoly::new();
    for mono in CUBIC_MONOMIALS {
        c.add_term(mono.to_vec(), Rational::from_integer(0));
    }
    c
}

/// `q_m(x)`: `min_k(x_k + x_{−k})`, with `2x₀` included when `m` is odd.
pub fn eval_quadratic(x: &[TropValue], m: usize) -> Result<TropValue> {
    if x.len() != m || m == 0 {
        return Err(Error::DimensionMismatch(format!(
            "q_{m} needs {m} coordinates, got {}",
            x.len()
        )));
    }
    Ok(quadratic_poly(m).eval(x))
}

/// The cubic form `c` on `𝕋⁷`.
pub fn eval_cubic(x: &[TropValue]) -> Result<TropValue> {
    if x.len() != 7 {
        return Err(Error::DimensionMismatch(format!(
            "the cubic form needs 7 coordinates, got {}",
            x.len()
        )));
    }
    Ok(cubic_poly().eval(x))
}

fn square_of_size(a: &TropMatrix, m: usize) -> Result<()> {
    if !a.is_square() || a.n_rows() != m {
        return Err(Error::DimensionMismatch(format!(
            "expected a {m}x{m} matrix, got {}x{}",
            a.n_rows(),
            a.n_cols()
        )));
    }
    Ok(())
}

fn even_size(a: &TropMatrix) -> Result<usize> {
    if !a.is_square() || !a.n_rows().is_multiple_of(2) {
        return Err(Error::DimensionMismatch(format!(
            "expected an even square matrix, got {}x{}",
            a.n_rows(),
            a.n_cols()
        )));
    }
    Ok(a.n_rows())
}

/// Decomposition constraints: `σ ∈ Sₙ^B` and `y_{−i} = −y_i`.
pub fn symplectic_constraints(a: &TropMatrix) -> Result<bool> {
    let m = even_size(a)?;
    let iota = sign_involution(m);
    Ok(match invert_or_decompose(a) {
        Ok(d) => is_signed_permutation(&d.perm, &iota) && antisymmetric(&d.diag, &iota),
        Err(_) => false,
    })
}

/// The literal identity `Aᵗ ⊙ J ⊙ A = J`.
pub fn symplectic_identity(a: &TropMatrix) -> Result<bool> {
    let m = even_size(a)?;
    let j = TropMatrix::permutation(&sign_involution(m));
    Ok(a.transpose().mul(&j)?.mul(a)? == j)
}

/// Both routes, which must agree.
pub fn check_symplectic(a: &TropMatrix) -> Result<bool> {
    let by_constraints = symplectic_constraints(a)?;
    let literal = symplectic_identity(a)?;
    assert_eq!(
        by_constraints, literal,
        "symplectic routes disagree on {a:?}"
    );
    Ok(literal)
}

/// Decomposition constraints for `O_m`, plus the Dickson sign for `SO_{2n}`.
pub fn orthogonal_constraints(a: &TropMatrix, m: usize) -> Result<Orthogonality> {
    square_of_size(a, m)?;
    let iota = sign_involution(m);
    let d = match invert_or_decompose(a) {
        Ok(d) => d,
        Err(_) => return Ok(Orthogonality::NotMember),
    };
    if !(is_signed_permutation(&d.perm, &iota) && antisymmetric(&d.diag, &iota)) {
        return Ok(Orthogonality::NotMember);
    }
    Ok(orientation(&d, m))
}

fn orientation(d: &GenPermDecomposition, m: usize) -> Orthogonality {
    if m % 2 == 1 || d.perm.sign() == 1 {
        Orthogonality::InSo
    } else {
        Orthogonality::InO
    }
}

/// `q_m(A ⊙ x) = q_m(x)` as tropical polynomials, plus the Dickson sign.
pub fn orthogonal_identity(a: &TropMatrix, m: usize) -> Result<Orthogonality> {
    square_of_size(a, m)?;
    let d = match invert_or_decompose(a) {
        Ok(d) => d,
        Err(_) => return Ok(Orthogonality::NotMember),
    };
    let q = quadratic_poly(m);
    if q.substitute(&d) != q {
        return Ok(Orthogonality::NotMember);
    }
    Ok(orientation(&d, m))
}

pub fn check_orthogonal(a: &TropMatrix, m: usize) -> Result<Orthogonality> {
    let by_constraints = orthogonal_constraints(a, m)?;
    let literal = orthogonal_identity(a, m)?;
    assert_eq!(
        by_constraints, literal,
        "orthogonal routes disagree on {a:?}"
    );
    Ok(literal)
}

/// The twelve symmetries of the hexagon on positions `0..6`, as elements of
/// `S₇` fixing position 6.
pub fn hexagon_symmetries() -> Vec<Perm> {
    let mut out = Vec::with_capacity(12);
    for k in 0..6 {
        let mut rot: Vec<usize> = (0..6).map(|i| (i + k) % 6).collect();
        rot.push(6);
        out.push(Perm(rot));
        let mut refl: Vec<usize> = (0..6).map(|i| (k + 6 - i) % 6).collect();
        refl.push(6);
        out.push(Perm(refl));
    }
    out.sort();
    out
}

fn in_u(y: &[Rational]) -> bool {
    let zero = Rational::from_integer(0);
    y[6] == zero
        && y[0] + y[3] == zero
        && y[1] + y[4] == zero
        && y[2] + y[5] == zero
        && y[0] + y[2] + y[4] == zero
}

/// `σ ∈ D₆` fixing the last position and `(y₁,…,y₆) ∈ U`, `y₇ = 0`.
pub fn g2_constraints(a: &TropMatrix) -> Result<bool> {
    square_of_size(a, 7)?;
    Ok(match invert_or_decompose(a) {
        Ok(d) => hexagon_symmetries().contains(&d.perm) && in_u(&d.diag),
        Err(_) => false,
    })
}

/// `c(A ⊙ x) = c(x)` as tropical polynomials.
pub fn g2_identity(a: &TropMatrix) -> Result<bool> {
    square_of_size(a, 7)?;
    Ok(match invert_or_decompose(a) {
        Ok(d) => {
            let c = cubic_poly();
            c.substitute(&d) == c
        }
        Err(_) => false,
    })
}

pub fn check_g2(a: &TropMatrix) -> Result<bool> {
    let by_constraints = g2_constraints(a)?;
    let literal = g2_identity(a)?;
    assert_eq!(by_constraints, literal, "G2 routes disagree on {a:?}");
    Ok(literal)
}
