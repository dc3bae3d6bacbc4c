//! 10-dimensional Minkowski space as 2×2 octonionic Hermitian matrices.
//!
//! A vector `(a⁰, …, a⁹)` is identified with
//!
//! ```text
//! A = [ p   a ]     p = a⁰ + a⁹,  m = a⁰ − a⁹,  a = Σ_{q=1..8} a^q e_q
//!     [ ā   m ]
//! ```
//!
//! and `det A = pm − |a|²` is minus the Minkowski norm (signature `−+…+`).
//! Null matrices factor as `vv†` for a spinor `v = (b; c)`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extended::{Extended, ExtendedComplex};
use crate::octonion::Octonion;
use crate::{scaled, EPSILON, PREDICATE_EPSILON};

/// A vector in R^{9,1}, components `a⁰ … a⁹`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Vector10(pub [f64; 10]);

impl Vector10 {
    /// `(t, x, y, z, 0, …)` embedded with `x` real, `y` along `i`, `z = a⁹`.
    pub fn from_txyz(t: f64, x: f64, y: f64, z: f64) -> Self {
        let mut v = [0.0; 10];
        v[0] = t;
        v[1] = x;
        v[2] = y;
        v[9] = z;
        Vector10(v)
    }

    /// `η_{μν} v^μ v^ν` with `η = diag(−1, 1, …, 1)`.
    pub fn minkowski_norm(&self) -> f64 {
        -self.0[0] * self.0[0] + self.0[1..].iter().map(|c| c * c).sum::<f64>()
    }

    pub fn to_matrix(&self) -> HermitianMatrix {
        let v = &self.0;
        HermitianMatrix {
            p: v[0] + v[9],
            m: v[0] - v[9],
            a: Octonion::new([v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]]),
        }
    }

    pub fn max_abs_diff(&self, other: &Vector10) -> f64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// The Hermitian matrix `[[p, a], [ā, m]]`; Hermiticity is structural.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct HermitianMatrix {
    pub p: f64,
    pub m: f64,
    pub a: Octonion,
}

impl HermitianMatrix {
    pub const IDENTITY: HermitianMatrix = HermitianMatrix { p: 1.0, m: 1.0, a: Octonion::ZERO };

    pub fn new(p: f64, m: f64, a: Octonion) -> Self {
        HermitianMatrix { p, m, a }
    }

    pub fn to_vector(&self) -> Vector10 {
        let a = self.a.coeffs();
        let mut v = [0.0; 10];
        v[0] = 0.5 * (self.p + self.m);
        v[9] = 0.5 * (self.p - self.m);
        v[1..9].copy_from_slice(a);
        Vector10(v)
    }

    /// `pm − |a|²`.
    pub fn det(&self) -> f64 {
        self.p * self.m - self.a.norm_sqr()
    }

    /// Squared Frobenius norm; the natural magnitude for `det`.
    pub fn scale(&self) -> f64 {
        self.p * self.p + self.m * self.m + 2.0 * self.a.norm_sqr()
    }

    pub fn is_null(&self) -> bool {
        self.is_null_within(PREDICATE_EPSILON)
    }

    pub fn is_null_within(&self, tol: f64) -> bool {
        self.det().abs() <= scaled(tol, self.scale())
    }

    pub fn to_full(&self) -> Matrix2 {
        Matrix2([
            [Octonion::real(self.p), self.a],
            [self.a.conj(), Octonion::real(self.m)],
        ])
    }

    pub fn max_abs_diff(&self, other: &HermitianMatrix) -> f64 {
        (self.p - other.p)
            .abs()
            .max((self.m - other.m).abs())
            .max(self.a.max_abs_diff(&other.a))
    }

    /// A spinor `v` with `vv† = self`, in the gauge `c = √m ≥ 0` real
    /// (or `b = √p`, `c = 0` when `m` vanishes).
    pub fn null_factor(&self) -> Result<Spinor> {
        let tol = EPSILON * self.scale().sqrt().max(1.0);
        if self.p < -tol || self.m < -tol {
            return Err(Error::NotFuturePointing { p: self.p, m: self.m });
        }
        if !self.is_null() {
            return Err(Error::NotNull { det: self.det() });
        }
        if self.m <= tol {
            return Ok(Spinor {
                b: Octonion::real(self.p.max(0.0).sqrt()),
                c: Octonion::ZERO,
            });
        }
        let root = self.m.sqrt();
        Ok(Spinor {
            b: self.a / root,
            c: Octonion::real(root),
        })
    }
}

impl From<Vector10> for HermitianMatrix {
    fn from(v: Vector10) -> Self {
        v.to_matrix()
    }
}

impl From<HermitianMatrix> for Vector10 {
    fn from(a: HermitianMatrix) -> Self {
        a.to_vector()
    }
}

/// A general 2×2 octonionic matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Matrix2(pub [[Octonion; 2]; 2]);

impl Matrix2 {
    pub fn dagger(&self) -> Matrix2 {
        let e = &self.0;
        Matrix2([
            [e[0][0].conj(), e[1][0].conj()],
            [e[0][1].conj(), e[1][1].conj()],
        ])
    }

    /// Entrywise product; each entry is `x₀y₀ + x₁y₁`, with no hidden regrouping.
    pub fn mul(&self, o: &Matrix2) -> Matrix2 {
        let (x, y) = (&self.0, &o.0);
        Matrix2(std::array::from_fn(|r| {
            std::array::from_fn(|c| x[r][0] * y[0][c] + x[r][1] * y[1][c])
        }))
    }

    pub fn max_abs_diff(&self, o: &Matrix2) -> f64 {
        (0..2)
            .flat_map(|r| (0..2).map(move |c| (r, c)))
            .map(|(r, c)| self.0[r][c].max_abs_diff(&o.0[r][c]))
            .fold(0.0, f64::max)
    }

    /// Largest deviation from Hermiticity.
    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    /// Reads `[[p, a], [ā, m]]` off the upper triangle.
    pub fn to_hermitian(&self) -> HermitianMatrix {
        HermitianMatrix {
            p: self.0[0][0].real_part(),
            m: self.0[1][1].real_part(),
            a: self.0[0][1],
        }
    }
}

/// The column `(b; c)`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Spinor {
    pub b: Octonion,
    pub c: Octonion,
}

impl Spinor {
    pub fn new(b: Octonion, c: Octonion) -> Self {
        Spinor { b, c }
    }

    /// `vv† = [[|b|², b c̄], [c b̄, |c|²]]`.
    pub fn square(&self) -> HermitianMatrix {
        HermitianMatrix {
            p: self.b.norm_sqr(),
            m: self.c.norm_sqr(),
            a: self.b * self.c.conj(),
        }
    }

    pub fn max_abs_diff(&self, o: &Spinor) -> f64 {
        self.b.max_abs_diff(&o.b).max(self.c.max_abs_diff(&o.c))
    }
}

/// A point of the unit sphere S² ⊂ R³.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointS2 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl PointS2 {
    pub const NORTH: PointS2 = PointS2 { x: 0.0, y: 0.0, z: 1.0 };

    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let norm = (x * x + y * y + z * z).sqrt();
        if (norm - 1.0).abs() > PREDICATE_EPSILON {
            return Err(Error::NotUnit { name: "point", norm });
        }
        Ok(PointS2 { x, y, z })
    }

    pub fn distance(&self, o: &PointS2) -> f64 {
        ((self.x - o.x).powi(2) + (self.y - o.y).powi(2) + (self.z - o.z).powi(2)).sqrt()
    }
}

/// `w = (x + iy)/(1 − z)`; the north pole goes to ∞.
pub fn stereo_project(p: &PointS2) -> ExtendedComplex {
    let denom = 1.0 - p.z;
    if denom <= EPSILON {
        return Extended::Infinity;
    }
    Extended::Finite(Complex64::new(p.x, p.y) / denom)
}

/// The other form `w = (1 + z)/(x − iy)`, singular at both poles' axis.
pub fn stereo_project_alt(p: &PointS2) -> Option<Complex64> {
    let denom = Complex64::new(p.x, -p.y);
    (denom.norm() > EPSILON).then(|| Complex64::new(1.0 + p.z, 0.0) / denom)
}

pub fn stereo_unproject(w: &ExtendedComplex) -> PointS2 {
    match w {
        Extended::Infinity => PointS2::NORTH,
        Extended::Finite(w) => {
            let r = w.norm_sqr();
            PointS2 {
                x: 2.0 * w.re / (r + 1.0),
                y: 2.0 * w.im / (r + 1.0),
                z: (r - 1.0) / (r + 1.0),
            }
        }
    }
}

/// `w = (x + iy)/(t − z)` on the future light cone of the complex slice
/// `(t, x, y, z)` (components `a⁰, a¹, a², a⁹`).
pub fn lightcone_project(v: &Vector10) -> Result<ExtendedComplex> {
    let c = &v.0;
    let (t, x, y, z) = (c[0], c[1], c[2], c[9]);
    let size = c.iter().map(|a| a * a).sum::<f64>().sqrt();
    if c[3..9].iter().any(|a| a.abs() > scaled(EPSILON, size)) {
        return Err(Error::NotOnLightCone(
            "components a³..a⁸ must vanish for the complex slice".into(),
        ));
    }
    if t <= 0.0 {
        return Err(Error::NotOnLightCone(format!("t = {t} is not positive")));
    }
    let interval = t * t - x * x - y * y - z * z;
    if interval.abs() > scaled(PREDICATE_EPSILON, t * t) {
        return Err(Error::NotOnLightCone(format!("t² − |r|² = {interval}")));
    }
    let denom = t - z;
    if denom <= EPSILON * t {
        return Ok(Extended::Infinity);
    }
    Ok(Extended::Finite(Complex64::new(x, y) / denom))
}
