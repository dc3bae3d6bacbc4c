//! Candidate G2 automorphisms of the octonions.
//!
//! Three triality-related forms parameterized by unit octonions `a`, `b`
//! ([`FormKind`]) are automorphisms only when `ababa = ba³b`
//! ([`td_criterion`]), and `GTWO` additionally when `ababa = −ba³b`. For
//! generic `a`, `b` they are not. The nested forms ([`NestedKind`]) built
//! from pure imaginary units `c`, `d` and a unit `ℓ` orthogonal to their
//! quaternionic span are automorphisms for every valid choice.
//!
//! [`apply_gt`] evaluates the conformal composition on R⁸ that uses the first
//! form with `a = U/|U|`, `b = V/|V|`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::octonion::{gram_schmidt, Octonion};
use crate::sample::Sampler;
use crate::{EPSILON, PREDICATE_EPSILON};

/// A real-linear map `O → O`.
pub trait OctonionMap {
    fn apply(&self, y: Octonion) -> Octonion;
}

impl<F: Fn(Octonion) -> Octonion> OctonionMap for F {
    fn apply(&self, y: Octonion) -> Octonion {
        self(y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FormKind {
    /// `(conj(ab)) [b (a y ā) b̄] (ab)`
    Gtwo,
    /// `(conj(ab)) [b (a y a²) b²] (conj(ab))²`
    SpinorI,
    /// `(ab)² [b̄² (ā² y ā) b̄] (ab)`
    #[serde(rename = "SPINOR_II")]
    SpinorII,
}

impl FormKind {
    pub const ALL: [FormKind; 3] = [FormKind::Gtwo, FormKind::SpinorI, FormKind::SpinorII];
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AutomorphismForm {
    pub kind: FormKind,
    pub a: Octonion,
    pub b: Octonion,
}

fn check_unit(name: &'static str, x: &Octonion) -> Result<()> {
    let norm = x.norm();
    if (norm - 1.0).abs() > PREDICATE_EPSILON {
        return Err(Error::NotUnit { name, norm });
    }
    Ok(())
}

impl AutomorphismForm {
    pub fn new(kind: FormKind, a: Octonion, b: Octonion) -> Result<Self> {
        check_unit("a", &a)?;
        check_unit("b", &b)?;
        Ok(AutomorphismForm { kind, a, b })
    }

    pub fn eval(&self, y: Octonion) -> Octonion {
        let (a, b) = (self.a, self.b);
        let ab = a * b;
        match self.kind {
            FormKind::Gtwo => {
                let inner = (b * ((a * y) * a.conj())) * b.conj();
                (ab.conj() * inner) * ab
            }
            FormKind::SpinorI => {
                let inner = (b * ((a * y) * (a * a))) * (b * b);
                let cab = ab.conj();
                (cab * inner) * (cab * cab)
            }
            FormKind::SpinorII => {
                let (ca, cb) = (a.conj(), b.conj());
                let inner = ((cb * cb) * (((ca * ca) * y) * ca)) * cb;
                ((ab * ab) * inner) * ab
            }
        }
    }
}

impl OctonionMap for AutomorphismForm {
    fn apply(&self, y: Octonion) -> Octonion {
        self.eval(y)
    }
}

/// The two sides `(ababa, ba³b)`, bracketed as `((((ab)a)b)a)` and
/// `(b(a(aa)))b`.
pub fn td_words(a: Octonion, b: Octonion) -> (Octonion, Octonion) {
    let ababa = (((a * b) * a) * b) * a;
    let ba3b = (b * (a * (a * a))) * b;
    (ababa, ba3b)
}

/// `ababa − ba³b`.
pub fn td_criterion(a: Octonion, b: Octonion) -> Octonion {
    let (lhs, rhs) = td_words(a, b);
    lhs - rhs
}

/// `max ‖φ(xy) − φ(x)φ(y)‖` over `samples` seeded random pairs.
pub fn automorphism_defect(map: &impl OctonionMap, samples: usize, seed: u64) -> f64 {
    let mut rng = Sampler::new(seed);
    (0..samples)
        .map(|_| {
            let (x, y) = (rng.octonion(), rng.octonion());
            (map.apply(x * y) - map.apply(x) * map.apply(y)).norm()
        })
        .fold(0.0, f64::max)
}

/// `(defect ≤ PREDICATE_EPSILON, defect)`.
pub fn is_automorphism(map: &impl OctonionMap, samples: usize, seed: u64) -> (bool, f64) {
    let defect = automorphism_defect(map, samples, seed);
    (defect <= PREDICATE_EPSILON, defect)
}

/// The 8×8 matrix of a linear map in the basis `e₁ … e₈`, column `q` = `φ(e_q)`.
pub fn matrix_of(map: &impl OctonionMap) -> [[f64; 8]; 8] {
    let mut m = [[0.0; 8]; 8];
    for q in 0..8 {
        let image = map.apply(Octonion::unit(q));
        for (r, row) in m.iter_mut().enumerate() {
            row[q] = image[r];
        }
    }
    m
}

/// `dim ker(φ − id)`, by Gaussian elimination with pivot threshold `tol`.
pub fn fixed_subspace_dim(map: &impl OctonionMap, tol: f64) -> usize {
    let mut m = matrix_of(map);
    for (n, row) in m.iter_mut().enumerate() {
        row[n] -= 1.0;
    }
    let mut rank = 0;
    for col in 0..8 {
        let Some(pivot) = (rank..8).max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
        else {
            break;
        };
        if m[pivot][col].abs() <= tol {
            continue;
        }
        m.swap(rank, pivot);
        for r in 0..8 {
            if r != rank {
                let f = m[r][col] / m[rank][col];
                for c in col..8 {
                    m[r][c] -= f * m[rank][c];
                }
            }
        }
        rank += 1;
    }
    8 - rank
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NestedKind {
    /// `(dℓ)((cℓ)[d(c y c̄)d̄](conj(cℓ)))(conj(dℓ))`
    CamI,
    /// `(dℓ)((cℓ)[d(cy)])`
    #[serde(rename = "CAM_II_LEFT")]
    CamIILeft,
    /// `(([(y c̄)d̄])(conj(cℓ)))(conj(dℓ))`
    #[serde(rename = "CAM_II_RIGHT")]
    CamIIRight,
}

impl NestedKind {
    pub const ALL: [NestedKind; 3] = [NestedKind::CamI, NestedKind::CamIILeft, NestedKind::CamIIRight];

    /// The form in [`FormKind`] that this one matches under `c = ae`, `d = be`.
    pub fn counterpart(self) -> FormKind {
        match self {
            NestedKind::CamI => FormKind::Gtwo,
            NestedKind::CamIILeft => FormKind::SpinorI,
            NestedKind::CamIIRight => FormKind::SpinorII,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NestedForm {
    pub kind: NestedKind,
    pub c: Octonion,
    pub d: Octonion,
    pub ell: Octonion,
}

impl NestedForm {
    /// `c`, `d` pure imaginary units; `ℓ` an imaginary unit orthogonal to
    /// `span{1, c, d, cd}`.
    pub fn new(kind: NestedKind, c: Octonion, d: Octonion, ell: Octonion) -> Result<Self> {
        for (name, x) in [("c", &c), ("d", &d)] {
            if x.real_part().abs() > PREDICATE_EPSILON {
                return Err(Error::NotImaginary { name });
            }
            check_unit(name, x)?;
        }
        let span = gram_schmidt(&[Octonion::ONE, c, d, c * d], 1e-9);
        let defect = span
            .iter()
            .map(|q| ell.inner(q).abs())
            .fold((ell.norm() - 1.0).abs(), f64::max);
        if defect > PREDICATE_EPSILON {
            return Err(Error::InvalidEll { defect });
        }
        Ok(NestedForm { kind, c, d, ell })
    }

    pub fn eval(&self, y: Octonion) -> Octonion {
        let (c, d) = (self.c, self.d);
        let cl = c * self.ell;
        let dl = d * self.ell;
        match self.kind {
            NestedKind::CamI => {
                let inner = (d * ((c * y) * c.conj())) * d.conj();
                let mid = (cl * inner) * cl.conj();
                (dl * mid) * dl.conj()
            }
            NestedKind::CamIILeft => dl * (cl * (d * (c * y))),
            NestedKind::CamIIRight => (((y * c.conj()) * d.conj()) * cl.conj()) * dl.conj(),
        }
    }
}

impl OctonionMap for NestedForm {
    fn apply(&self, y: Octonion) -> Octonion {
        self.eval(y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AgreementReport {
    pub a: Octonion,
    pub b: Octonion,
    /// Largest `‖nested(y) − form(y)‖` over the sampled `y` and the three
    /// pairings in [`NestedKind::counterpart`].
    pub residual: f64,
}

/// Solves `c = ae`, `d = be` for `a`, `b` and compares each nested form with
/// its counterpart on `samples` seeded random octonions.
pub fn agreement_check(
    c: Octonion,
    d: Octonion,
    ell: Octonion,
    e_dir: Octonion,
    samples: usize,
    seed: u64,
) -> Result<AgreementReport> {
    let cd = c.inner(&d);
    if cd.abs() > PREDICATE_EPSILON {
        return Err(Error::NotOrthogonal(cd));
    }
    check_unit("e", &e_dir)?;
    let e_inv = e_dir.inverse()?;
    let a = c * e_inv;
    let b = d * e_inv;
    let h = gram_schmidt(&[Octonion::ONE, a, b, a * b], 1e-9);
    let e_defect = h.iter().map(|q| e_dir.inner(q).abs()).fold(0.0, f64::max);
    if e_defect > PREDICATE_EPSILON {
        return Err(Error::InvalidEll { defect: e_defect });
    }
    let mut rng = Sampler::new(seed);
    let ys: Vec<Octonion> = (0..samples).map(|_| rng.octonion()).collect();
    let mut residual: f64 = 0.0;
    for kind in NestedKind::ALL {
        let nested = NestedForm::new(kind, c, d, ell)?;
        let form = AutomorphismForm::new(kind.counterpart(), a, b)?;
        for y in &ys {
            residual = residual.max((nested.eval(*y) - form.eval(*y)).norm());
        }
    }
    Ok(AgreementReport { a, b, residual })
}

/// Parameters of the conformal composition on R⁸.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConformalParams {
    /// Dilation.
    pub lambda: f64,
    /// Translation `A`.
    pub translation: Octonion,
    /// Special conformal parameter `C`.
    pub special: Octonion,
    /// Unit `K`.
    pub k: Octonion,
    /// Unit `L`.
    pub l: Octonion,
    pub u: Octonion,
    pub v: Octonion,
    /// Apply `K` innermost and `L` outside it instead.
    #[serde(default)]
    pub swap_kl: bool,
}

impl ConformalParams {
    /// `λ = 1`, all other parameters trivial: the identity map.
    pub const IDENTITY: ConformalParams = ConformalParams {
        lambda: 1.0,
        translation: Octonion::ZERO,
        special: Octonion::ZERO,
        k: Octonion::ONE,
        l: Octonion::ONE,
        u: Octonion::ONE,
        v: Octonion::ONE,
        swap_kl: false,
    };

    pub fn validate(&self) -> Result<()> {
        check_unit("K", &self.k)?;
        check_unit("L", &self.l)?;
        if self.lambda == 0.0 {
            return Err(Error::ZeroParameter("lambda"));
        }
        if self.u.is_zero() {
            return Err(Error::ZeroParameter("U"));
        }
        if self.v.is_zero() {
            return Err(Error::ZeroParameter("V"));
        }
        Ok(())
    }
}

/// `x ↦ (UV)⁻¹{V(U[K(L(λ(x−A)⁻¹ + C̄)⁻¹L̄)K]U⁻¹)V⁻¹}(UV)`, evaluated
/// innermost-out.
pub fn apply_gt(params: &ConformalParams, x: Octonion) -> Result<Octonion> {
    params.validate()?;
    let shifted = x - params.translation;
    let size = x.norm().max(params.translation.norm()).max(1.0);
    if shifted.norm() <= EPSILON * size {
        return Err(Error::PoleHit);
    }
    let s = shifted.inverse()? * params.lambda + params.special.conj();
    if s.norm() <= EPSILON * s.norm().max(params.special.norm()).max(1.0) {
        return Err(Error::PoleHit);
    }
    let t = s.inverse()?;
    let (inner, outer) = if params.swap_kl {
        (params.k, params.l)
    } else {
        (params.l, params.k)
    };
    let r = (inner * t) * inner.conj();
    let r = (outer * r) * outer;
    let (u, v) = (params.u, params.v);
    let r = (u * r) * u.inverse()?;
    let r = (v * r) * v.inverse()?;
    let uv = u * v;
    Ok((uv.inverse()? * r) * uv)
}

/// [`apply_gt`] followed by an extra nested G2 map.
pub fn apply_gt_with_g2(params: &ConformalParams, extra: &NestedForm, x: Octonion) -> Result<Octonion> {
    apply_gt(params, x).map(|y| extra.eval(y))
}
