//! Octonion arithmetic.
//!
//! Coefficients are stored over the basis `{1, i, j, k, kl, jl, il, l}`
//! (`e₁ … e₈`). The product is the Cayley–Dickson doubling of the quaternions
//! with `ℓ = e₈`:
//!
//! ```text
//! (x₁ + x₂ℓ)(y₁ + y₂ℓ) = (x₁y₁ − ȳ₂x₂) + (y₂x₁ + x₂ȳ₁)ℓ
//! ```
//!
//! so `x₂` carries the coefficients of `(l, il, jl, kl)` in that order.
//! Products of basis units only ever combine coefficients in `{−1, 0, 1}`, so
//! table-level products are exact in floating point.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{scaled, PREDICATE_EPSILON};

/// Conventional names of `e₁ … e₈`.
pub const UNIT_NAMES: [&str; 8] = ["1", "i", "j", "k", "kl", "jl", "il", "l"];

/// A real quaternion `w + xi + yj + zk`, the base of the doubling.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 4]", into = "[f64; 4]")]
pub struct Quaternion(pub [f64; 4]);

impl From<[f64; 4]> for Quaternion {
    fn from(c: [f64; 4]) -> Self {
        Quaternion(c)
    }
}

impl From<Quaternion> for [f64; 4] {
    fn from(q: Quaternion) -> Self {
        q.0
    }
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion([0.0; 4]);

    pub fn conj(self) -> Self {
        let [w, x, y, z] = self.0;
        Quaternion([w, -x, -y, -z])
    }
}

impl Add for Quaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Quaternion(std::array::from_fn(|n| self.0[n] + o.0[n]))
    }
}

impl Sub for Quaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Quaternion(std::array::from_fn(|n| self.0[n] - o.0[n]))
    }
}

impl Mul for Quaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let [w1, x1, y1, z1] = self.0;
        let [w2, x2, y2, z2] = o.0;
        Quaternion([
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        ])
    }
}

/// An octonion `Σ a^q e_q` with finite real coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "[f64; 8]", into = "[f64; 8]")]
pub struct Octonion {
    coeffs: [f64; 8],
}

impl TryFrom<[f64; 8]> for Octonion {
    type Error = Error;
    fn try_from(coeffs: [f64; 8]) -> Result<Self> {
        Octonion::try_new(coeffs)
    }
}

impl From<Octonion> for [f64; 8] {
    fn from(x: Octonion) -> Self {
        x.coeffs
    }
}

impl From<f64> for Octonion {
    fn from(r: f64) -> Self {
        Octonion::real(r)
    }
}

impl Octonion {
    pub const ZERO: Octonion = Octonion { coeffs: [0.0; 8] };
    pub const ONE: Octonion = Octonion::unit(0);
    pub const I: Octonion = Octonion::unit(1);
    pub const J: Octonion = Octonion::unit(2);
    pub const K: Octonion = Octonion::unit(3);
    pub const KL: Octonion = Octonion::unit(4);
    pub const JL: Octonion = Octonion::unit(5);
    pub const IL: Octonion = Octonion::unit(6);
    pub const L: Octonion = Octonion::unit(7);

    /// Panics on NaN or infinite coefficients.
    pub fn new(coeffs: [f64; 8]) -> Self {
        Self::try_new(coeffs).expect("octonion coefficients must be finite")
    }

    pub fn try_new(coeffs: [f64; 8]) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_finite()) {
            Ok(Octonion { coeffs })
        } else {
            Err(Error::Parse(format!("non-finite octonion coefficients {coeffs:?}")))
        }
    }

    /// `e_{index+1}`, i.e. `unit(0) = 1`, `unit(1) = i`, …, `unit(7) = l`.
    pub const fn unit(index: usize) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[index] = 1.0;
        Octonion { coeffs }
    }

    pub const fn real(r: f64) -> Self {
        let mut coeffs = [0.0; 8];
        coeffs[0] = r;
        Octonion { coeffs }
    }

    /// `re + im·u`; the embedding of a complex number along the direction `u`.
    pub fn complex(re: f64, im: f64, u: Octonion) -> Self {
        Octonion::real(re) + u * im
    }

    pub fn coeffs(&self) -> &[f64; 8] {
        &self.coeffs
    }

    pub fn real_part(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn imag_part(&self) -> Octonion {
        let mut coeffs = self.coeffs;
        coeffs[0] = 0.0;
        Octonion { coeffs }
    }

    pub fn conj(&self) -> Octonion {
        let mut coeffs = self.coeffs.map(|c| -c);
        coeffs[0] = self.coeffs[0];
        Octonion { coeffs }
    }

    /// The Euclidean inner product inherited from R⁸.
    pub fn inner(&self, other: &Octonion) -> f64 {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.inner(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// `conj(x) / |x|²`.
    pub fn inverse(&self) -> Result<Octonion> {
        let n = self.norm_sqr();
        if n == 0.0 {
            return Err(Error::ZeroDivisor);
        }
        Ok(self.conj() / n)
    }

    /// Unit octonion in the direction of `self`.
    pub fn normalized(&self) -> Result<Octonion> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::ZeroDivisor);
        }
        Ok(*self / n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.imag_part().norm() <= tol
    }

    /// Largest absolute coefficient difference.
    pub fn max_abs_diff(&self, other: &Octonion) -> f64 {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `self · self · … · self` (`n` factors); powers of a single octonion associate.
    pub fn powi(&self, n: u32) -> Octonion {
        (0..n).fold(Octonion::ONE, |acc, _| acc * *self)
    }

    /// The exponential `e^{r}(cos|v| + v̂ sin|v|)` of `r + v`.
    pub fn exp(&self) -> Octonion {
        let v = self.imag_part();
        let theta = v.norm();
        let scale = self.real_part().exp();
        if theta == 0.0 {
            return Octonion::real(scale);
        }
        (Octonion::real(theta.cos()) + v * (theta.sin() / theta)) * scale
    }

    pub fn cd_split(&self) -> CayleyDicksonPair {
        let a = &self.coeffs;
        CayleyDicksonPair {
            x1: Quaternion([a[0], a[1], a[2], a[3]]),
            x2: Quaternion([a[7], a[6], a[5], a[4]]),
        }
    }

    pub fn cd_join(pair: &CayleyDicksonPair) -> Octonion {
        let [w1, x1, y1, z1] = pair.x1.0;
        let [w2, x2, y2, z2] = pair.x2.0;
        Octonion { coeffs: [w1, x1, y1, z1, z2, y2, x2, w2] }
    }
}

/// `x = x₁ + x₂ℓ` with quaternionic halves over `{1, i, j, k}`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct CayleyDicksonPair {
    pub x1: Quaternion,
    pub x2: Quaternion,
}

impl From<Octonion> for CayleyDicksonPair {
    fn from(x: Octonion) -> Self {
        x.cd_split()
    }
}

impl From<CayleyDicksonPair> for Octonion {
    fn from(p: CayleyDicksonPair) -> Self {
        Octonion::cd_join(&p)
    }
}

/// One of the eight basis units `e₁ … e₈` (1-based, as written in the algebra).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisUnit(u8);

impl BasisUnit {
    pub fn new(index: u8) -> Option<Self> {
        (1..=8).contains(&index).then_some(BasisUnit(index))
    }

    pub fn all() -> impl Iterator<Item = BasisUnit> {
        (1..=8).map(BasisUnit)
    }

    pub fn imaginary() -> impl Iterator<Item = BasisUnit> {
        (2..=8).map(BasisUnit)
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn name(self) -> &'static str {
        UNIT_NAMES[self.0 as usize - 1]
    }

    pub fn from_name(name: &str) -> Option<Self> {
        UNIT_NAMES
            .iter()
            .position(|n| *n == name)
            .map(|p| BasisUnit(p as u8 + 1))
    }

    pub fn to_octonion(self) -> Octonion {
        Octonion::unit(self.0 as usize - 1)
    }
}

impl fmt::Display for BasisUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Add for Octonion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Octonion {
            coeffs: std::array::from_fn(|n| self.coeffs[n] + o.coeffs[n]),
        }
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for Octonion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Octonion {
            coeffs: std::array::from_fn(|n| self.coeffs[n] - o.coeffs[n]),
        }
    }
}

impl SubAssign for Octonion {
    fn sub_assign(&mut self, o: Self) {
        *self = *self - o;
    }
}

impl Neg for Octonion {
    type Output = Self;
    fn neg(self) -> Self {
        Octonion {
            coeffs: self.coeffs.map(|c| -c),
        }
    }
}

impl Mul for Octonion {
    type Output = Self;
    fn mul(self, y: Self) -> Self {
        let CayleyDicksonPair { x1, x2 } = self.cd_split();
        let CayleyDicksonPair { x1: y1, x2: y2 } = y.cd_split();
        Octonion::cd_join(&CayleyDicksonPair {
            x1: x1 * y1 - y2.conj() * x2,
            x2: y2 * x1 + x2 * y1.conj(),
        })
    }
}

impl Mul<f64> for Octonion {
    type Output = Self;
    fn mul(self, r: f64) -> Self {
        Octonion {
            coeffs: self.coeffs.map(|c| c * r),
        }
    }
}

impl Mul<Octonion> for f64 {
    type Output = Octonion;
    fn mul(self, x: Octonion) -> Octonion {
        x * self
    }
}

impl Div<f64> for Octonion {
    type Output = Self;
    fn div(self, r: f64) -> Self {
        Octonion {
            coeffs: self.coeffs.map(|c| c / r),
        }
    }
}

impl Index<usize> for Octonion {
    type Output = f64;
    fn index(&self, n: usize) -> &f64 {
        &self.coeffs[n]
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (q, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let sign = if c < 0.0 { "-" } else { "+" };
            match (first, sign) {
                (true, "-") => f.write_str("-")?,
                (true, _) => {}
                (false, s) => write!(f, " {s} ")?,
            }
            let mag = c.abs();
            if q == 0 {
                write!(f, "{mag}")?;
            } else if mag == 1.0 {
                f.write_str(UNIT_NAMES[q])?;
            } else {
                write!(f, "{mag}{}", UNIT_NAMES[q])?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FromStr for Octonion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::expr::eval(s)
    }
}

/// `[x, y, z] = (xy)z − x(yz)`.
pub fn associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion {
    (x * y) * z - x * (y * z)
}

/// `conj(xy) = conj(y) conj(x)` within a tolerance relative to `|x||y|`.
pub fn conj_antiautomorphism_check(x: Octonion, y: Octonion) -> bool {
    let lhs = (x * y).conj();
    let rhs = y.conj() * x.conj();
    (lhs - rhs).norm() <= scaled(crate::EPSILON, x.norm() * y.norm())
}

/// The complex subalgebra shared by a set of octonions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexDirection {
    /// Every input is real; any imaginary unit spans a common subalgebra.
    Real,
    /// Every input lies in `span{1, u}` for this unit imaginary `u`.
    Along(Octonion),
}

impl ComplexDirection {
    /// The imaginary unit, with `i` standing in for the all-real case.
    pub fn unit(&self) -> Octonion {
        match self {
            ComplexDirection::Real => Octonion::I,
            ComplexDirection::Along(u) => *u,
        }
    }
}

/// See [`spans_complex_subalgebra_within`]; uses [`PREDICATE_EPSILON`].
pub fn spans_complex_subalgebra(xs: &[Octonion]) -> Option<ComplexDirection> {
    spans_complex_subalgebra_within(xs, PREDICATE_EPSILON)
}

/// Rank test on the imaginary parts: they must all be parallel to the
/// largest one.
pub fn spans_complex_subalgebra_within(xs: &[Octonion], tol: f64) -> Option<ComplexDirection> {
    let imags: Vec<Octonion> = xs.iter().map(Octonion::imag_part).collect();
    let Some(pivot) = imags
        .iter()
        .copied()
        .max_by(|a, b| a.norm_sqr().total_cmp(&b.norm_sqr()))
    else {
        return Some(ComplexDirection::Real);
    };
    let pivot_norm = pivot.norm();
    if pivot_norm <= tol {
        return Some(ComplexDirection::Real);
    }
    let u = pivot / pivot_norm;
    for v in &imags {
        let off_axis = *v - u * v.inner(&u);
        if off_axis.norm() > scaled(tol, v.norm()) {
            return None;
        }
    }
    Some(ComplexDirection::Along(u))
}

/// Orthonormal basis of `span(vs)` by Gram–Schmidt; vectors within `tol` of
/// the span so far are dropped.
pub fn gram_schmidt(vs: &[Octonion], tol: f64) -> Vec<Octonion> {
    let mut basis: Vec<Octonion> = Vec::new();
    for v in vs {
        let mut r = *v;
        for q in &basis {
            r -= *q * r.inner(q);
        }
        let n = r.norm();
        if n > tol {
            basis.push(r / n);
        }
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    const I: Octonion = Octonion::I;
    const J: Octonion = Octonion::J;
    const K: Octonion = Octonion::K;
    const L: Octonion = Octonion::L;
    const IL: Octonion = Octonion::IL;
    const JL: Octonion = Octonion::JL;

    fn oct(c: [f64; 8]) -> Octonion {
        Octonion::new(c)
    }

    #[test]
    fn basis_products() {
        assert_eq!(I * J, K);
        assert_eq!(I * L, IL);
        assert_eq!(IL * JL, -K);
        let x = oct([1.5, -2.0, 0.25, 3.0, 0.0, 7.0, -1.0, 2.0]);
        assert_eq!(Octonion::ONE * x, x);
        assert_eq!(x * Octonion::ONE, x);
    }

    #[test]
    fn imaginary_units_square_to_minus_one_and_anticommute() {
        for p in BasisUnit::imaginary() {
            let ep = p.to_octonion();
            assert_eq!(ep * ep, -Octonion::ONE);
            for q in BasisUnit::imaginary().filter(|&q| q != p) {
                let eq = q.to_octonion();
                assert_eq!(ep * eq, -(eq * ep));
                let prod = ep * eq;
                let nonzero: Vec<_> = prod.coeffs().iter().filter(|c| **c != 0.0).collect();
                assert_eq!(nonzero.len(), 1);
                assert_eq!(nonzero[0].abs(), 1.0);
                assert_eq!(prod.real_part(), 0.0);
            }
        }
    }

    #[test]
    fn quaternion_subalgebra_matches_hamilton() {
        let q = |w, x, y, z| oct([w, x, y, z, 0.0, 0.0, 0.0, 0.0]);
        let a = q(1.0, 2.0, -3.0, 0.5);
        let b = q(-0.5, 1.0, 4.0, 2.0);
        let expected = Quaternion([1.0, 2.0, -3.0, 0.5]) * Quaternion([-0.5, 1.0, 4.0, 2.0]);
        let p = a * b;
        assert_eq!(&p.coeffs()[..4], &expected.0);
        assert!(p.coeffs()[4..].iter().all(|c| *c == 0.0));
    }

    #[test]
    fn conjugation() {
        assert_eq!(Octonion::ONE.conj(), Octonion::ONE);
        assert_eq!(I.conj(), -I);
        let x = Octonion::real(2.0) + I * 3.0 - L;
        assert_eq!(x.conj(), Octonion::real(2.0) - I * 3.0 + L);
        assert_eq!(x.conj().conj(), x);
        assert!(conj_antiautomorphism_check(I, J));
        assert!(conj_antiautomorphism_check(Octonion::ZERO, x));
    }

    #[test]
    fn inner_and_norm() {
        assert_eq!(I.inner(&I), 1.0);
        assert_eq!(I.inner(&J), 0.0);
        let a = Octonion::real(2.0) + J * 3.0;
        let b = Octonion::real(4.0) + J * 5.0;
        assert_eq!(a.inner(&b), 23.0);
        assert_eq!(Octonion::ZERO.norm(), 0.0);
        assert_eq!((I + J).norm(), 2f64.sqrt());
        let rewrite = (a * b.conj() + b * a.conj()) * 0.5;
        assert_eq!(rewrite.real_part(), 23.0);
        assert!(rewrite.imag_part().norm() < 1e-15);
    }

    #[test]
    fn inverse() {
        assert_eq!(Octonion::ONE.inverse().unwrap(), Octonion::ONE);
        assert_eq!(I.inverse().unwrap(), -I);
        let x = Octonion::real(3.0) + I * 4.0;
        assert_eq!(x.inverse().unwrap(), (Octonion::real(3.0) - I * 4.0) / 25.0);
        assert_eq!(Octonion::ZERO.inverse(), Err(Error::ZeroDivisor));
    }

    #[test]
    fn associator_examples() {
        assert!(associator(I, J, I).is_zero());
        // (ij)l = kl, i(jl) = −kl
        let a = associator(I, J, L);
        assert_eq!(a, Octonion::KL * 2.0);
    }

    #[test]
    fn cd_split_examples() {
        assert_eq!(
            I.cd_split(),
            CayleyDicksonPair { x1: Quaternion([0.0, 1.0, 0.0, 0.0]), x2: Quaternion::ZERO }
        );
        assert_eq!(
            L.cd_split(),
            CayleyDicksonPair { x1: Quaternion::ZERO, x2: Quaternion([1.0, 0.0, 0.0, 0.0]) }
        );
        assert_eq!(
            JL.cd_split(),
            CayleyDicksonPair { x1: Quaternion::ZERO, x2: Quaternion([0.0, 0.0, 1.0, 0.0]) }
        );
        // jl is j·l under the product
        assert_eq!(J * L, JL);
    }

    #[test]
    fn complex_subalgebra_predicate() {
        let a = Octonion::real(1.0) + I * 2.0;
        let b = Octonion::real(3.0) - I;
        assert_eq!(spans_complex_subalgebra(&[a, b]), Some(ComplexDirection::Along(I)));
        assert_eq!(spans_complex_subalgebra(&[I, L]), None);
        assert_eq!(
            spans_complex_subalgebra(&[Octonion::real(2.0), Octonion::real(5.0)]),
            Some(ComplexDirection::Real)
        );
        assert_eq!(spans_complex_subalgebra(&[]), Some(ComplexDirection::Real));
    }

    #[test]
    fn display() {
        assert_eq!(Octonion::ZERO.to_string(), "0");
        assert_eq!((Octonion::real(2.0) + I * 3.0 - L).to_string(), "2 + 3i - l");
        assert_eq!((-Octonion::KL * 0.5).to_string(), "-0.5kl");
    }

    #[test]
    fn json_is_a_plain_array() {
        let x = Octonion::real(2.0) - JL;
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "[2.0,0.0,0.0,0.0,0.0,-1.0,0.0,0.0]");
        assert_eq!(serde_json::from_str::<Octonion>(&s).unwrap(), x);
        assert!(serde_json::from_str::<Octonion>("[1,2,3]").is_err());
    }

    #[test]
    fn exp_of_imaginary_is_unit() {
        let u = (I + K).normalized().unwrap();
        let e = (u * 0.7).exp();
        assert!((e.norm() - 1.0).abs() < 1e-15);
        assert!((e.real_part() - 0.7f64.cos()).abs() < 1e-15);
    }
}
