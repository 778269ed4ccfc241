use super::IntMatrix;

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal,
/// `d_1 | d_2 | … | d_rank`, all positive.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub v: IntMatrix,
    /// The nonzero diagonal entries, in order.
    pub diagonal: Vec<i64>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

fn min_nonzero(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, i64)> = None;
    for i in t..m.n_rows() {
        for j in t..m.n_cols() {
            let x = m.get(i, j).abs();
            if x != 0 && best.is_none_or(|(_, _, b)| x < b) {
                best = Some((i, j, x));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

pub fn smith(a: &IntMatrix) -> SmithForm {
    let (r, c) = (a.n_rows(), a.n_cols());
    let mut m = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut diagonal = Vec::new();
    for t in 0..r.min(c) {
        loop {
            let Some((pi, pj)) = min_nonzero(&m, t) else {
                return SmithForm { u, v, diagonal };
            };
            m.swap_rows(t, pi);
            u.swap_rows(t, pi);
            m.swap_cols(t, pj);
            v.swap_cols(t, pj);
            let p = m.get(t, t);
            let mut clean = true;
            for i in t + 1..r {
                let q = m.get(i, t) / p;
                if q != 0 {
                    m.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
                clean &= m.get(i, t) == 0;
            }
            for j in t + 1..c {
                let q = m.get(t, j) / p;
                if q != 0 {
                    m.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                clean &= m.get(t, j) == 0;
            }
            if !clean {
                continue;
            }
            let bad_row = (t + 1..r).find(|&i| (t + 1..c).any(|j| m.get(i, j) % p != 0));
            if let Some(i) = bad_row {
                m.add_row(t, i, 1);
                u.add_row(t, i, 1);
                continue;
            }
            break;
        }
        if m.get(t, t) < 0 {
            m.negate_row(t);
            u.negate_row(t);
        }
        diagonal.push(m.get(t, t));
    }
    SmithForm { u, v, diagonal }
}

/// Brings rows `from..` of `m` to echelon form by unimodular row operations
/// on those rows only: pivots positive, entries above each pivot reduced.
pub(crate) fn hermite_rows(m: &mut IntMatrix, from: usize) {
    let rows = m.n_rows();
    let mut p = from;
    for j in 0..m.n_cols() {
        if p == rows {
            break;
        }
        loop {
            let best = (p..rows)
                .filter(|&i| m.get(i, j) != 0)
                .min_by_key(|&i| m.get(i, j).abs());
            let Some(b) = best else { break };
            m.swap_rows(p, b);
            let pivot = m.get(p, j);
            let mut done = true;
            for i in p + 1..rows {
                let q = m.get(i, j) / pivot;
                if q != 0 {
                    m.add_row(i, p, -q);
                }
                done &= m.get(i, j) == 0;
            }
            if done {
                break;
            }
        }
        if m.get(p, j) == 0 {
            continue;
        }
        if m.get(p, j) < 0 {
            m.negate_row(p);
        }
        let pivot = m.get(p, j);
        for i in from..p {
            let q = m.get(i, j).div_euclid(pivot);
            if q != 0 {
                m.add_row(i, p, -q);
            }
        }
        p += 1;
    }
}
