//! Octonionic Möbius transformations.
//!
//! For a compatible matrix `M = [[α, β], [γ, δ]]` the map
//!
//! ```text
//! f_M(w) = (αw + β)(γw + δ)⁻¹
//! ```
//!
//! agrees with the spinor action `(b, c) ↦ (αb + βc, γb + δc)` read through
//! `w = bc⁻¹`, whatever representative `(b, c)` of the point is chosen. That
//! makes the action well defined on the projective line OP¹, where
//! `(b, c) ~ ((bc⁻¹)ξ, ξ)` for every nonzero octonion `ξ`.
//!
//! All inverses are taken on the right.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extended::{Extended, ExtendedComplex, ExtendedOctonion};
use crate::lorentz::TransformMatrix;
use crate::minkowski::Spinor;
use crate::octonion::{associator, spans_complex_subalgebra, ComplexDirection, Octonion};
use crate::{EPSILON, PREDICATE_EPSILON};

/// A compatible transformation matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "TransformMatrix", into = "TransformMatrix")]
pub struct MoebiusParams(TransformMatrix);

impl TryFrom<TransformMatrix> for MoebiusParams {
    type Error = Error;
    fn try_from(m: TransformMatrix) -> Result<Self> {
        MoebiusParams::new(m)
    }
}

impl From<MoebiusParams> for TransformMatrix {
    fn from(p: MoebiusParams) -> Self {
        p.0
    }
}

impl MoebiusParams {
    pub const IDENTITY: MoebiusParams = MoebiusParams(TransformMatrix::IDENTITY);

    pub fn new(m: TransformMatrix) -> Result<Self> {
        m.check_compatible()?;
        Ok(MoebiusParams(m))
    }

    pub fn matrix(&self) -> &TransformMatrix {
        &self.0
    }

    pub fn apply(&self, w: &ExtendedOctonion) -> Result<ExtendedOctonion> {
        fractional_linear(&self.0, w)
    }

    pub fn apply_projective(&self, p: &OP1Point) -> Result<OP1Point> {
        spinor_action(&self.0, p)
    }
}

/// `(αw + β)(γw + δ)⁻¹` for any matrix, compatible or not.
///
/// `γw + δ = 0` sends `w` to ∞; `∞` goes to the class of `(α, γ)`.
pub fn fractional_linear(m: &TransformMatrix, w: &ExtendedOctonion) -> Result<ExtendedOctonion> {
    let w = match w {
        Extended::Infinity => {
            return spinor_action(m, &OP1Point::INFINITY).map(|p| p.to_extended());
        }
        Extended::Finite(w) => *w,
    };
    let num = m.alpha * w + m.beta;
    let den = m.gamma * w + m.delta;
    let size = (m.gamma.norm() * w.norm() + m.delta.norm()).max(1.0);
    if den.norm() <= EPSILON * size {
        let num_size = (m.alpha.norm() * w.norm() + m.beta.norm()).max(1.0);
        if num.norm() <= EPSILON * num_size {
            return Err(Error::DegenerateMap);
        }
        return Ok(Extended::Infinity);
    }
    Ok(Extended::Finite(num * den.inverse()?))
}

/// `[(b, c)] ↦ [(αb + βc, γb + δc)]` for any matrix.
pub fn spinor_action(m: &TransformMatrix, p: &OP1Point) -> Result<OP1Point> {
    let v = m.apply_spinor_unchecked(&p.to_spinor());
    OP1Point::new(v.b, v.c).map_err(|_| Error::DegenerateMap)
}

/// A representative `(b, c) ≠ (0, 0)` of a point of OP¹.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Spinor", into = "Spinor")]
pub struct OP1Point {
    b: Octonion,
    c: Octonion,
}

impl TryFrom<Spinor> for OP1Point {
    type Error = Error;
    fn try_from(v: Spinor) -> Result<Self> {
        OP1Point::new(v.b, v.c)
    }
}

impl From<OP1Point> for Spinor {
    fn from(p: OP1Point) -> Self {
        p.to_spinor()
    }
}

impl OP1Point {
    /// `[(1, 0)]`.
    pub const INFINITY: OP1Point = OP1Point { b: Octonion::ONE, c: Octonion::ZERO };

    pub fn new(b: Octonion, c: Octonion) -> Result<Self> {
        if b.is_zero() && c.is_zero() {
            return Err(Error::InvalidPoint);
        }
        Ok(OP1Point { b, c })
    }

    pub fn b(&self) -> Octonion {
        self.b
    }

    pub fn c(&self) -> Octonion {
        self.c
    }

    pub fn to_spinor(&self) -> Spinor {
        Spinor::new(self.b, self.c)
    }

    /// `bc⁻¹`, or ∞ when `c` vanishes relative to `b`.
    pub fn to_extended(&self) -> ExtendedOctonion {
        if self.c.norm() <= EPSILON * self.b.norm() {
            return Extended::Infinity;
        }
        let inv = self.c.inverse().expect("c is nonzero");
        Extended::Finite(self.b * inv)
    }

    /// `[(w, 1)]`, or `[(1, 0)]` for ∞.
    pub fn from_extended(w: &ExtendedOctonion) -> OP1Point {
        match w {
            Extended::Finite(w) => OP1Point { b: *w, c: Octonion::ONE },
            Extended::Infinity => OP1Point::INFINITY,
        }
    }

    /// The equivalent representative `((bc⁻¹)ξ, ξ)`.
    pub fn rescaled(&self, xi: Octonion) -> Result<OP1Point> {
        if xi.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let w = self.b * self.c.inverse()?;
        OP1Point::new(w * xi, xi)
    }

    /// Equality in OP¹: the images under [`to_extended`](Self::to_extended) agree.
    pub fn equivalent(&self, other: &OP1Point) -> bool {
        op1_equal(self, other)
    }
}

pub fn op1_equal(p: &OP1Point, q: &OP1Point) -> bool {
    p.to_extended().approx_eq(&q.to_extended(), PREDICATE_EPSILON)
}

/// `⟨[b, c, γ], δ⟩`, which vanishes whenever `γ` and `δ` share a complex
/// subalgebra.
pub fn associator_condition(b: Octonion, c: Octonion, gamma: Octonion, delta: Octonion) -> f64 {
    associator(b, c, gamma).inner(&delta)
}

/// Both sides of `|γb + δc|² = |γw + δ|²|c|²` with `w = bc⁻¹`.
pub fn norm_factorization_check(
    b: Octonion,
    c: Octonion,
    gamma: Octonion,
    delta: Octonion,
) -> Result<(f64, f64)> {
    let w = b * c.inverse()?;
    let lhs = (gamma * b + delta * c).norm_sqr();
    let rhs = (gamma * w + delta).norm_sqr() * c.norm_sqr();
    Ok((lhs, rhs))
}

/// Applies `chain[0]` first, then `chain[1]`, and so on.
pub fn compose_nested(chain: &[MoebiusParams], w: &ExtendedOctonion) -> Result<ExtendedOctonion> {
    chain.iter().try_fold(*w, |acc, p| p.apply(&acc))
}

/// The class of a spinor as a point of the extended octonions.
pub fn projectivize(v: &Spinor) -> Result<ExtendedOctonion> {
    Ok(OP1Point::new(v.b, v.c)?.to_extended())
}

/// Classical complex Möbius coefficients.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMoebius {
    pub alpha: Complex64,
    pub beta: Complex64,
    pub gamma: Complex64,
    pub delta: Complex64,
}

impl ComplexMoebius {
    /// Reads the entries of a complex matrix as complex numbers along `u`.
    pub fn from_matrix(m: &TransformMatrix, u: Octonion) -> Result<Self> {
        let z = |x: Octonion| to_complex(x, u);
        Ok(ComplexMoebius {
            alpha: z(m.alpha)?,
            beta: z(m.beta)?,
            gamma: z(m.gamma)?,
            delta: z(m.delta)?,
        })
    }

    pub fn to_matrix(&self, u: Octonion) -> TransformMatrix {
        TransformMatrix::new(
            from_complex(self.alpha, u),
            from_complex(self.beta, u),
            from_complex(self.gamma, u),
            from_complex(self.delta, u),
        )
    }
}

/// `x = re + im·u` read back as a complex number; fails off `span{1, u}`.
pub fn to_complex(x: Octonion, u: Octonion) -> Result<Complex64> {
    let im = x.inner(&u);
    let rest = x - Octonion::complex(x.real_part(), im, u);
    if rest.norm() > PREDICATE_EPSILON * x.norm().max(1.0) {
        return Err(Error::NotComplex);
    }
    Ok(Complex64::new(x.real_part(), im))
}

pub fn from_complex(z: Complex64, u: Octonion) -> Octonion {
    Octonion::complex(z.re, z.im, u)
}

/// The complex direction shared by a matrix and a point, if any.
pub fn common_direction(m: &TransformMatrix, w: &ExtendedOctonion) -> Option<ComplexDirection> {
    let mut xs = m.entries().to_vec();
    if let Extended::Finite(w) = w {
        xs.push(*w);
    }
    spans_complex_subalgebra(&xs)
}

/// `(αw + β)/(γw + δ)` in ordinary complex arithmetic.
pub fn complex_moebius_oracle(m: &ComplexMoebius, w: &ExtendedComplex) -> Result<ExtendedComplex> {
    match w {
        Extended::Infinity => {
            if m.gamma.norm() <= EPSILON * m.alpha.norm() {
                if m.alpha.norm() == 0.0 {
                    return Err(Error::DegenerateMap);
                }
                Ok(Extended::Infinity)
            } else {
                Ok(Extended::Finite(m.alpha / m.gamma))
            }
        }
        Extended::Finite(w) => {
            let num = m.alpha * w + m.beta;
            let den = m.gamma * w + m.delta;
            let size = (m.gamma.norm() * w.norm() + m.delta.norm()).max(1.0);
            if den.norm() <= EPSILON * size {
                let num_size = (m.alpha.norm() * w.norm() + m.beta.norm()).max(1.0);
                if num.norm() <= EPSILON * num_size {
                    return Err(Error::DegenerateMap);
                }
                return Ok(Extended::Infinity);
            }
            Ok(Extended::Finite(num / den))
        }
    }
}
