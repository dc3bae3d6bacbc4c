//! Finite Lorentz transformations of R^{9,1} acting as `A ↦ MAM†`.
//!
//! Octonionic matrix products do not associate, so `MAM†` only makes sense
//! when `(MA)M† = M(AM†)`. That holds when the entries of `M` lie in one
//! complex subalgebra, or when the columns of `Im M` are real multiples of
//! each other. Spinor and vector actions agree (`(Mv)(Mv)† = M(vv†)M†`)
//! exactly for complex `M` with real determinant; those are the
//! *compatible* matrices. General transformations are built by nesting.

use std::f64::consts::FRAC_1_SQRT_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minkowski::{HermitianMatrix, Matrix2, Spinor, Vector10};
use crate::octonion::{spans_complex_subalgebra_within, BasisUnit, Octonion};
use crate::{scaled, EPSILON, PREDICATE_EPSILON};

/// The matrix `[[α, β], [γ, δ]]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformMatrix {
    pub alpha: Octonion,
    pub beta: Octonion,
    pub gamma: Octonion,
    pub delta: Octonion,
}

impl TransformMatrix {
    pub const IDENTITY: TransformMatrix = TransformMatrix {
        alpha: Octonion::ONE,
        beta: Octonion::ZERO,
        gamma: Octonion::ZERO,
        delta: Octonion::ONE,
    };

    pub fn new(alpha: Octonion, beta: Octonion, gamma: Octonion, delta: Octonion) -> Self {
        TransformMatrix { alpha, beta, gamma, delta }
    }

    pub fn diagonal(alpha: Octonion, delta: Octonion) -> Self {
        TransformMatrix::new(alpha, Octonion::ZERO, Octonion::ZERO, delta)
    }

    pub fn real(entries: [[f64; 2]; 2]) -> Self {
        TransformMatrix::new(
            Octonion::real(entries[0][0]),
            Octonion::real(entries[0][1]),
            Octonion::real(entries[1][0]),
            Octonion::real(entries[1][1]),
        )
    }

    pub fn entries(&self) -> [Octonion; 4] {
        [self.alpha, self.beta, self.gamma, self.delta]
    }

    pub fn to_matrix2(&self) -> Matrix2 {
        Matrix2([[self.alpha, self.beta], [self.gamma, self.delta]])
    }

    /// Squared Frobenius norm.
    pub fn scale(&self) -> f64 {
        self.entries().iter().map(Octonion::norm_sqr).sum()
    }

    /// `(MA)M†`, with no check that it agrees with `M(AM†)`.
    pub fn left_first(&self, a: &HermitianMatrix) -> Matrix2 {
        let m = self.to_matrix2();
        m.mul(&a.to_full()).mul(&m.dagger())
    }

    /// `M(AM†)`.
    pub fn right_first(&self, a: &HermitianMatrix) -> Matrix2 {
        let m = self.to_matrix2();
        m.mul(&a.to_full().mul(&m.dagger()))
    }

    /// Largest entrywise difference between the two parenthesizations.
    pub fn parenthesization_residual(&self, a: &HermitianMatrix) -> f64 {
        self.left_first(a).max_abs_diff(&self.right_first(a))
    }

    pub fn is_well_defined(&self) -> bool {
        self.is_well_defined_within(PREDICATE_EPSILON)
    }

    pub fn is_well_defined_within(&self, tol: f64) -> bool {
        spans_complex_subalgebra_within(&self.entries(), tol).is_some()
            || self.imaginary_columns_parallel(tol)
    }

    /// Whether `(Im α, Im γ)` and `(Im β, Im δ)` are real multiples of each
    /// other as vectors in R¹⁶.
    fn imaginary_columns_parallel(&self, tol: f64) -> bool {
        let col = |top: Octonion, bottom: Octonion| -> [f64; 16] {
            let mut v = [0.0; 16];
            v[..8].copy_from_slice(top.imag_part().coeffs());
            v[8..].copy_from_slice(bottom.imag_part().coeffs());
            v
        };
        let c1 = col(self.alpha, self.gamma);
        let c2 = col(self.beta, self.delta);
        let dot = |x: &[f64; 16], y: &[f64; 16]| x.iter().zip(y).map(|(a, b)| a * b).sum::<f64>();
        let (n1, n2) = (dot(&c1, &c1), dot(&c2, &c2));
        let (pivot, other, pn) = if n1 >= n2 { (c1, c2, n1) } else { (c2, c1, n2) };
        if pn.sqrt() <= tol {
            return true;
        }
        let t = dot(&other, &pivot) / pn;
        let off: f64 = other
            .iter()
            .zip(pivot.iter())
            .map(|(o, p)| (o - t * p).powi(2))
            .sum::<f64>()
            .sqrt();
        off <= scaled(tol, dot(&other, &other).sqrt())
    }

    /// `A ↦ MAM†`, failing when the parenthesizations disagree.
    pub fn apply_vector(&self, a: &HermitianMatrix) -> Result<HermitianMatrix> {
        let left = self.left_first(a);
        let residual = left.max_abs_diff(&self.right_first(a));
        if residual > scaled(PREDICATE_EPSILON, self.scale() * a.scale().sqrt()) {
            return Err(Error::NotWellDefined { residual });
        }
        Ok(left.to_hermitian())
    }

    pub fn apply_to_vector10(&self, v: &Vector10) -> Result<Vector10> {
        self.apply_vector(&v.to_matrix()).map(|a| a.to_vector())
    }

    /// `(αb + βc; γb + δc)` with no compatibility check.
    pub fn apply_spinor_unchecked(&self, v: &Spinor) -> Spinor {
        Spinor {
            b: self.alpha * v.b + self.beta * v.c,
            c: self.gamma * v.b + self.delta * v.c,
        }
    }

    pub fn apply_spinor(&self, v: &Spinor) -> Result<Spinor> {
        self.check_compatible()?;
        Ok(self.apply_spinor_unchecked(v))
    }

    /// `‖(Mv)(Mv)† − (M(vv†))M†‖`, the failure of spinor/vector compatibility.
    pub fn compatibility_residual(&self, v: &Spinor) -> f64 {
        let lhs = self.apply_spinor_unchecked(v).square().to_full();
        let rhs = self.left_first(&v.square());
        lhs.max_abs_diff(&rhs)
    }

    /// Hermitian `MM†`.
    pub fn mm_dagger(&self) -> HermitianMatrix {
        let TransformMatrix { alpha, beta, gamma, delta } = *self;
        HermitianMatrix {
            p: alpha.norm_sqr() + beta.norm_sqr(),
            m: gamma.norm_sqr() + delta.norm_sqr(),
            a: alpha * gamma.conj() + beta * delta.conj(),
        }
    }

    pub fn det_mmdagger(&self) -> f64 {
        self.mm_dagger().det()
    }

    /// `√det(MM†)`.
    pub fn dieudonne_det(&self) -> Result<f64> {
        let d = self.det_mmdagger();
        if d < -scaled(EPSILON, self.scale() * self.scale()) {
            return Err(Error::NegativeDeterminant(d));
        }
        Ok(d.max(0.0).sqrt())
    }

    /// `αδ − βγ`, defined only when all entries share a complex subalgebra.
    pub fn complex_det(&self) -> Result<Octonion> {
        spans_complex_subalgebra_within(&self.entries(), PREDICATE_EPSILON)
            .ok_or(Error::NotComplex)?;
        Ok(self.alpha * self.delta - self.beta * self.gamma)
    }

    pub fn is_compatible(&self) -> bool {
        self.check_compatible().is_ok()
    }

    /// Like [`is_compatible`](Self::is_compatible) but names the predicate that fails.
    pub fn check_compatible(&self) -> Result<()> {
        let det = self.complex_det().map_err(|_| Error::NotCompatible {
            reason: "entries do not lie in a single complex subalgebra".into(),
        })?;
        let im = det.imag_part().norm();
        if im > scaled(PREDICATE_EPSILON, det.norm()) {
            return Err(Error::NotCompatible {
                reason: format!("det M = {det} is not real"),
            });
        }
        Ok(())
    }
}

/// `A ↦ M_n(…(M₁AM₁†)…)M_n†`, innermost first.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NestedChain {
    elements: Vec<TransformMatrix>,
}

impl NestedChain {
    pub fn new(elements: Vec<TransformMatrix>) -> Self {
        NestedChain { elements }
    }

    /// Rejects any element that is not compatible.
    pub fn checked(elements: Vec<TransformMatrix>) -> Result<Self> {
        for m in &elements {
            m.check_compatible()?;
        }
        Ok(NestedChain { elements })
    }

    pub fn elements(&self) -> &[TransformMatrix] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn push(&mut self, m: TransformMatrix) {
        self.elements.push(m);
    }

    pub fn then(mut self, other: &NestedChain) -> NestedChain {
        self.elements.extend_from_slice(&other.elements);
        self
    }

    pub fn apply_vector(&self, a: &HermitianMatrix) -> Result<HermitianMatrix> {
        self.elements.iter().try_fold(*a, |acc, m| m.apply_vector(&acc))
    }

    pub fn apply_to_vector10(&self, v: &Vector10) -> Result<Vector10> {
        self.apply_vector(&v.to_matrix()).map(|a| a.to_vector())
    }

    pub fn apply_spinor(&self, v: &Spinor) -> Result<Spinor> {
        self.elements.iter().try_fold(*v, |acc, m| m.apply_spinor(&acc))
    }
}

impl From<TransformMatrix> for NestedChain {
    fn from(m: TransformMatrix) -> Self {
        NestedChain::new(vec![m])
    }
}

/// A catalog entry: one matrix, or a nested pair of flips.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Generator {
    Single(TransformMatrix),
    Chain(NestedChain),
}

impl Generator {
    pub fn to_chain(&self) -> NestedChain {
        match self {
            Generator::Single(m) => NestedChain::from(*m),
            Generator::Chain(c) => c.clone(),
        }
    }

    pub fn apply_vector(&self, a: &HermitianMatrix) -> Result<HermitianMatrix> {
        match self {
            Generator::Single(m) => m.apply_vector(a),
            Generator::Chain(c) => c.apply_vector(a),
        }
    }

    pub fn matrices(&self) -> Vec<TransformMatrix> {
        self.to_chain().elements
    }
}

/// `[[e^{ρ/2}, 0], [0, e^{−ρ/2}]]`: a boost along a⁹ with rapidity ρ.
pub fn boost(rho: f64) -> TransformMatrix {
    TransformMatrix::diagonal(
        Octonion::real((rho / 2.0).exp()),
        Octonion::real((-rho / 2.0).exp()),
    )
}

/// `diag(e^{uθ/2}, e^{−uθ/2})` for a unit imaginary `u`: rotates the plane
/// of `1` and `u` in the `a` slot by θ.
pub fn rotation(u: Octonion, theta: f64) -> TransformMatrix {
    let half = theta / 2.0;
    TransformMatrix::diagonal(
        Octonion::complex(half.cos(), half.sin(), u),
        Octonion::complex(half.cos(), -half.sin(), u),
    )
}

/// `[[1, z], [0, 1]]`.
pub fn null_upper(z: Octonion) -> TransformMatrix {
    TransformMatrix::new(Octonion::ONE, z, Octonion::ZERO, Octonion::ONE)
}

/// `[[1, 0], [z, 1]]`.
pub fn null_lower(z: Octonion) -> TransformMatrix {
    TransformMatrix::new(Octonion::ONE, Octonion::ZERO, z, Octonion::ONE)
}

/// `u·I` for a unit imaginary `u`; determinant −1.
pub fn flip(u: Octonion) -> TransformMatrix {
    TransformMatrix::diagonal(u, u)
}

/// `e^{uθ}·I`. Complex, but its determinant `e^{2uθ}` is real only for
/// `θ ∈ (π/2)Z`, so it is generally not compatible.
pub fn phase(u: Octonion, theta: f64) -> TransformMatrix {
    let e = Octonion::complex(theta.cos(), theta.sin(), u);
    TransformMatrix::diagonal(e, e)
}

/// Rotation by θ in the plane of the orthonormal imaginary units `u`, `w`,
/// as the nested pair `[flip(u), flip(cos(θ/2)u + sin(θ/2)w)]`.
pub fn transverse_rotation(u: Octonion, w: Octonion, theta: f64) -> NestedChain {
    let half = theta / 2.0;
    NestedChain::new(vec![flip(u), flip(u * half.cos() + w * half.sin())])
}

/// A generating set of compatible transformations: boosts, complex
/// rotations, null rotations and flips along every imaginary basis unit, and
/// two-flip transverse rotations for every pair of imaginary units.
pub fn generator_catalog() -> Vec<(String, Generator)> {
    let mut out = Vec::new();
    for rho in [0.0, 0.8, -1.3] {
        out.push((format!("boost({rho})"), Generator::Single(boost(rho))));
    }
    for unit in BasisUnit::imaginary() {
        let u = unit.to_octonion();
        let name = unit.name();
        out.push((format!("rotation({name}, 0.9)"), Generator::Single(rotation(u, 0.9))));
        out.push((
            format!("null_upper(0.4 - 0.7{name})"),
            Generator::Single(null_upper(Octonion::complex(0.4, -0.7, u))),
        ));
        out.push((
            format!("null_lower(-0.3 + 0.5{name})"),
            Generator::Single(null_lower(Octonion::complex(-0.3, 0.5, u))),
        ));
        out.push((
            format!("complex_sl2({name})"),
            Generator::Single(unit_det(TransformMatrix::new(
                Octonion::complex(FRAC_1_SQRT_2, 0.5, u),
                Octonion::complex(0.2, -0.3, u),
                Octonion::complex(-0.6, 0.1, u),
                Octonion::complex(1.1, 0.4, u),
            ))),
        ));
        out.push((format!("flip({name})"), Generator::Single(flip(u))));
    }
    for p in BasisUnit::imaginary() {
        for q in BasisUnit::imaginary().filter(|q| *q > p) {
            out.push((
                format!("transverse_rotation({}, {}, 1.1)", p.name(), q.name()),
                Generator::Chain(transverse_rotation(p.to_octonion(), q.to_octonion(), 1.1)),
            ));
        }
    }
    out
}

/// Rescales a complex matrix so that its determinant is exactly `+1`; the
/// top row absorbs `(αδ − βγ)⁻¹`. Matrices that are not complex, or are
/// singular, are returned unchanged.
pub fn unit_det(m: TransformMatrix) -> TransformMatrix {
    match m.complex_det().and_then(|d| d.inverse()) {
        Ok(inv) => TransformMatrix::new(inv * m.alpha, inv * m.beta, m.gamma, m.delta),
        Err(_) => m,
    }
}
