use num_traits::Signed;

use super::{TropMatrix, TropValue};
use crate::error::{Error, Result};
use crate::rat::Rational;

const ENUMERATION_LIMIT: usize = 8;

/// `det A = min_σ Σ_i a_{iσ(i)}`: enumeration for `n ≤ 8`, assignment otherwise.
pub fn trop_det(a: &TropMatrix) -> Result<TropValue> {
    if a.n_rows() <= ENUMERATION_LIMIT {
        det_enumerate(a)
    } else {
        det_assignment(a)
    }
}

/// Brute force over all of `S_n`, with pruning on infinite partial sums.
pub fn det_enumerate(a: &TropMatrix) -> Result<TropValue> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(
            "determinant of a non-square matrix".into(),
        ));
    }
    let n = a.n_rows();
    let mut best = TropValue::Infinity;
    let mut used = vec![false; n];
    fn rec(a: &TropMatrix, i: usize, acc: Rational, used: &mut [bool], best: &mut TropValue) {
        let n = a.n_rows();
        if i == n {
            let v = TropValue::Finite(acc);
            if v < *best {
                *best = v;
            }
            return;
        }
        for j in 0..n {
            if used[j] {
                continue;
            }
            if let TropValue::Finite(x) = a.get(i, j) {
                used[j] = true;
                rec(a, i + 1, acc + x, used, best);
                used[j] = false;
            }
        }
    }
    rec(a, 0, Rational::from_integer(0), &mut used, &mut best);
    Ok(best)
}

/// Min-plus optimal assignment via the Hungarian method with potentials.
///
/// ∞ entries are replaced by a finite penalty `B` large enough that any
/// assignment touching one costs more than every all-finite assignment.
pub fn det_assignment(a: &TropMatrix) -> Result<TropValue> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch(
            "determinant of a non-square matrix".into(),
        ));
    }
    let n = a.n_rows();
    let zero = Rational::from_integer(0);
    let mut bound = zero;
    for i in 0..n {
        let row_max = a
            .row(i)
            .iter()
            .filter_map(TropValue::as_finite)
            .map(|x| x.abs())
            .max()
            .unwrap_or(zero);
        bound += row_max;
    }
    let penalty = bound * Rational::from_integer(2) + Rational::from_integer(1);
    let cost: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            a.row(i)
                .iter()
                .map(|v| v.as_finite().copied().unwrap_or(penalty))
                .collect()
        })
        .collect();
    let (total, assignment) = hungarian(&cost);
    let all_finite = (0..n).all(|i| a.get(i, assignment[i]).is_finite());
    if all_finite {
        debug_assert!(total <= bound);
        Ok(TropValue::Finite(total))
    } else {
        Ok(TropValue::Infinity)
    }
}

/// Returns the minimal cost and the column assigned to each row.
fn hungarian(cost: &[Vec<Rational>]) -> (Rational, Vec<usize>) {
    let n = cost.len();
    let zero = Rational::from_integer(0);
    let mut u = vec![zero; n + 1];
    let mut v = vec![zero; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv: Vec<Option<Rational>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta: Option<Rational> = None;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if minv[j].is_none_or(|m| cur < m) {
                    minv[j] = Some(cur);
                    way[j] = j0;
                }
                let mj = minv[j].expect("set above");
                if delta.is_none_or(|d| mj < d) {
                    delta = Some(mj);
                    j1 = j;
                }
            }
            let delta = delta.expect("an unused column remains");
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else if let Some(m) = minv[j].as_mut() {
                    *m -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0usize; n];
    for j in 1..=n {
        assignment[p[j] - 1] = j - 1;
    }
    let total = (0..n).map(|i| cost[i][assignment[i]]).sum();
    (total, assignment)
}
