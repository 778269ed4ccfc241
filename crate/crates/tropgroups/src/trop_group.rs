//! Tropical reductive groups `M̌_ℝ ⋊ W` and their homomorphisms.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{IntMatrix, LatticeQuotient};
use crate::perm::Perm;
use crate::rat::{self, Rational};
use crate::root_data::{Family, MatrixModel, RootDatum};
use crate::trop_core::{
    check_g2, check_orthogonal, check_symplectic, invert_or_decompose, GenPermDecomposition,
    Orthogonality, TropMatrix,
};
use crate::weyl::WeylGroup;

#[derive(Debug)]
struct Inner {
    datum: RootDatum,
    weyl: WeylGroup,
    pi1: LatticeQuotient,
    model: Option<MatrixModel>,
    by_perm: HashMap<Perm, usize>,
}

/// A tropical reductive group. Cloning shares the same group; elements
/// remember their parent by pointer.
#[derive(Clone, Debug)]
pub struct TropGroup(Arc<Inner>);

impl TropGroup {
    pub fn new(datum: RootDatum) -> Result<Self> {
        let weyl = WeylGroup::generate(&datum)?;
        let pi1 = datum.fundamental_group();
        let model = datum.matrix_model();
        let by_perm = (0..weyl.len())
            .filter_map(|w| weyl.permutation(w).map(|p| (p.clone(), w)))
            .collect();
        Ok(TropGroup(Arc::new(Inner {
            datum,
            weyl,
            pi1,
            model,
            by_perm,
        })))
    }

    pub fn build(family: Family, n: usize) -> Result<Self> {
        Self::new(RootDatum::build(family, n)?)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.0.datum
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.0.weyl
    }

    pub fn fundamental_group(&self) -> &LatticeQuotient {
        &self.0.pi1
    }

    pub fn model(&self) -> Option<&MatrixModel> {
        self.0.model.as_ref()
    }

    pub fn rank(&self) -> usize {
        self.0.datum.rank()
    }

    pub fn same_as(&self, other: &TropGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn element(&self, m: Vec<Rational>, w: usize) -> Result<TropGroupElement> {
        if m.len() != self.rank() {
            return Err(Error::DimensionMismatch(format!(
                "translation has length {}, lattice rank is {}",
                m.len(),
                self.rank()
            )));
        }
        self.weyl().check(w)?;
        Ok(TropGroupElement {
            m,
            w,
            parent: self.clone(),
        })
    }

    pub fn identity(&self) -> TropGroupElement {
        TropGroupElement {
            m: vec![Rational::from_integer(0); self.rank()],
            w: self.weyl().identity(),
            parent: self.clone(),
        }
    }

    /// `(m₁, w₁)(m₂, w₂) = (m₁ + w₁·m₂, w₁w₂)`.
    pub fn compose(&self, a: &TropGroupElement, b: &TropGroupElement) -> Result<TropGroupElement> {
        if !self.same_as(&a.parent) || !self.same_as(&b.parent) {
            return Err(Error::ParentMismatch);
        }
        let moved = self.weyl().act_q(a.w, &b.m);
        Ok(TropGroupElement {
            m: a.m.iter().zip(&moved).map(|(x, y)| x + y).collect(),
            w: self.weyl().mul(a.w, b.w),
            parent: self.clone(),
        })
    }

    /// `(m, w)⁻¹ = (−w⁻¹·m, w⁻¹)`.
    pub fn inverse(&self, a: &TropGroupElement) -> Result<TropGroupElement> {
        if !self.same_as(&a.parent) {
            return Err(Error::ParentMismatch);
        }
        let wi = self.weyl().inverse(a.w);
        let neg: Vec<Rational> = a.m.iter().map(|x| -x).collect();
        Ok(TropGroupElement {
            m: self.weyl().act_q(wi, &neg),
            w: wi,
            parent: self.clone(),
        })
    }

    /// Rational basis of the center `R^⊥`.
    pub fn center(&self) -> Vec<Vec<Rational>> {
        self.datum().center_basis()
    }

    /// `m` pushed to `(M̌/⟨Ř⟩) ⊗ ℚ`, in the free coordinates of the Smith form.
    pub fn determinant_map(&self, a: &TropGroupElement) -> Result<Vec<Rational>> {
        if !self.same_as(&a.parent) {
            return Err(Error::ParentMismatch);
        }
        Ok(self.0.pi1.free_part(&a.m))
    }

    fn require_model(&self) -> Result<&MatrixModel> {
        self.model()
            .ok_or_else(|| Error::Unsupported("datum has no matrix model".into()))
    }

    /// The generalized permutation `D(y) ⊙ P_σ` with `y = lift(m)`.
    pub fn to_decomposition(&self, a: &TropGroupElement) -> Result<GenPermDecomposition> {
        if !self.same_as(&a.parent) {
            return Err(Error::ParentMismatch);
        }
        let model = self.require_model()?;
        let perm = self
            .weyl()
            .permutation(a.w)
            .ok_or_else(|| Error::Unsupported("Weyl group has no permutation model".into()))?
            .clone();
        Ok(GenPermDecomposition {
            diag: model.lift.mul_qvec(&a.m),
            perm,
        })
    }

    pub fn to_matrix(&self, a: &TropGroupElement) -> Result<TropMatrix> {
        Ok(self.to_decomposition(a)?.to_matrix())
    }

    /// Inverse of [`to_matrix`](Self::to_matrix); for `PGLₙ` any scalar
    /// multiple is accepted.
    pub fn from_matrix(&self, a: &TropMatrix) -> Result<TropGroupElement> {
        let model = self.require_model()?;
        if a.n_rows() != model.size {
            return Err(Error::DimensionMismatch(format!(
                "expected a {0}x{0} matrix, got {1}x{2}",
                model.size,
                a.n_rows(),
                a.n_cols()
            )));
        }
        let d = invert_or_decompose(a)?;
        let (family, _) = self.datum().family().expect("model implies family");
        let member = match family {
            Family::GL | Family::PGL => true,
            Family::SL => d.diag.iter().sum::<Rational>() == Rational::from_integer(0),
            Family::Sp => check_symplectic(a)?,
            Family::SoOdd | Family::SoEven => {
                check_orthogonal(a, model.size)? == Orthogonality::InSo
            }
            Family::G2 => check_g2(a)?,
        };
        if !member {
            return Err(Error::NotInGroup(format!("matrix is not in {family}")));
        }
        let w = *self
            .0
            .by_perm
            .get(&d.perm)
            .ok_or_else(|| Error::NotInGroup("permutation is not in the Weyl image".into()))?;
        let m = model.proj.mul_qvec(&d.diag);
        let back = model.lift.mul_qvec(&m);
        let offset = if model.modulo_scalars {
            d.diag[model.size - 1]
        } else {
            Rational::from_integer(0)
        };
        if back.iter().zip(&d.diag).any(|(b, y)| *b + offset != *y) {
            return Err(Error::NotInGroup(
                "diagonal is not in the cocharacter image".into(),
            ));
        }
        self.element(m, w)
    }
}

#[derive(Clone, Debug)]
pub struct TropGroupElement {
    m: Vec<Rational>,
    w: usize,
    parent: TropGroup,
}

impl TropGroupElement {
    pub fn m(&self) -> &[Rational] {
        &self.m
    }

    pub fn w(&self) -> usize {
        self.w
    }

    pub fn group(&self) -> &TropGroup {
        &self.parent
    }

    pub fn compose(&self, other: &TropGroupElement) -> Result<TropGroupElement> {
        self.parent.compose(self, other)
    }

    pub fn inverse(&self) -> TropGroupElement {
        self.parent.inverse(self).expect("own parent")
    }
}

impl PartialEq for TropGroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.parent.same_as(&other.parent) && self.m == other.m && self.w == other.w
    }
}

impl Eq for TropGroupElement {}

impl fmt::Display for TropGroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.m.iter().map(rat::format).collect();
        write!(f, "(({}), w{})", m.join(", "), self.w)
    }
}

impl Serialize for TropGroupElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            #[serde(with = "rat::serde_qvec")]
            m: &'a [Rational],
            w: usize,
        }
        Repr {
            m: &self.m,
            w: self.w,
        }
        .serialize(s)
    }
}

/// `F = (f, φ)` with `φ(g)(f(m)) = f(g(m))`.
#[derive(Clone, Debug)]
pub struct TropGroupHom {
    source: TropGroup,
    target: TropGroup,
    f: IntMatrix,
    phi: Vec<usize>,
}

impl TropGroupHom {
    /// Checks the compatibility condition for every Weyl element and that
    /// `φ` is multiplicative.
    pub fn new(
        source: &TropGroup,
        target: &TropGroup,
        f: IntMatrix,
        phi: Vec<usize>,
    ) -> Result<Self> {
        if f.n_rows() != target.rank() || f.n_cols() != source.rank() {
            return Err(Error::DimensionMismatch(format!(
                "lattice map is {}x{}, expected {}x{}",
                f.n_rows(),
                f.n_cols(),
                target.rank(),
                source.rank()
            )));
        }
        let (w1, w2) = (source.weyl(), target.weyl());
        if phi.len() != w1.len() || phi.iter().any(|&x| x >= w2.len()) {
            return Err(Error::LengthMismatch);
        }
        for g in 0..w1.len() {
            if w2.element(phi[g]).mul(&f) != f.mul(w1.element(g)) {
                return Err(Error::Hypothesis(format!(
                    "phi({g}) does not intertwine the lattice map"
                )));
            }
        }
        for &a in w1.generators() {
            for b in 0..w1.len() {
                if phi[w1.mul(a, b)] != w2.mul(phi[a], phi[b]) {
                    return Err(Error::Hypothesis("phi is not a homomorphism".into()));
                }
            }
        }
        Ok(TropGroupHom {
            source: source.clone(),
            target: target.clone(),
            f,
            phi,
        })
    }

    /// Derives `φ` from `f`: `φ(w)` is the least element with `φ(w)·f = f·w`.
    pub fn induced(source: &TropGroup, target: &TropGroup, f: IntMatrix) -> Result<Self> {
        let (w1, w2) = (source.weyl(), target.weyl());
        let phi = (0..w1.len())
            .map(|g| {
                let want = f.mul(w1.element(g));
                (0..w2.len())
                    .find(|&h| w2.element(h).mul(&f) == want)
                    .ok_or_else(|| {
                        Error::Hypothesis(format!("no Weyl element matches source element {g}"))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, f, phi)
    }

    pub fn source(&self) -> &TropGroup {
        &self.source
    }

    pub fn target(&self) -> &TropGroup {
        &self.target
    }

    pub fn lattice_map(&self) -> &IntMatrix {
        &self.f
    }

    pub fn weyl_map(&self) -> &[usize] {
        &self.phi
    }

    pub fn apply(&self, a: &TropGroupElement) -> Result<TropGroupElement> {
        if !self.source.same_as(a.group()) {
            return Err(Error::ParentMismatch);
        }
        self.target.element(self.f.mul_qvec(a.m()), self.phi[a.w()])
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &TropGroupHom) -> Result<TropGroupHom> {
        if !first.target.same_as(&self.source) {
            return Err(Error::ParentMismatch);
        }
        let phi = first.phi.iter().map(|&w| self.phi[w]).collect();
        Self::new(&first.source, &self.target, self.f.mul(&first.f), phi)
    }
}
