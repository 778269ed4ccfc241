use std::collections::BTreeMap;

use super::{GenPermDecomposition, TropValue};
use crate::rat::Rational;

/// A tropical polynomial with coefficient-free exponents of degree ≤ 1 per
/// occurrence: each monomial is a sorted multiset of variable indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TropPoly {
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl TropPoly {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coef ⊙ ⨀ x_v`; repeated monomials keep the smaller coefficient.
    pub fn add_term(&mut self, mut vars: Vec<usize>, coef: Rational) {
        vars.sort_unstable();
        self.terms
            .entry(vars)
            .and_modify(|c| {
                if coef < *c {
                    *c = coef;
                }
            })
            .or_insert(coef);
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.terms.iter()
    }

    pub fn eval(&self, x: &[TropValue]) -> TropValue {
        self.terms
            .iter()
            .map(|(vars, c)| {
                vars.iter()
                    .fold(TropValue::Finite(*c), |acc, &v| acc.otimes(&x[v]))
            })
            .fold(TropValue::Infinity, |acc, v| acc.oplus(&v))
    }

    /// The polynomial `p(D(y)P_σ ⊙ x)`, using `(D(y)P_σ x)_i = y_i + x_{σ⁻¹(i)}`.
    pub fn substitute(&self, a: &GenPermDecomposition) -> TropPoly {
        let inv = a.perm.inverse();
        let mut out = TropPoly::new();
        for (vars, c) in &self.terms {
            let coef = vars.iter().fold(*c, |acc, &i| acc + a.diag[i]);
            out.add_term(vars.iter().map(|&i| inv.apply(i)).collect(), coef);
        }
        out
    }
}
