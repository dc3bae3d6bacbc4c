//! Seeded property suites with a JSON report.
//!
//! Each suite draws from its own [`Sampler`] seeded with the user seed, so a
//! suite's numbers do not depend on which other suites ran. Everything is
//! single-threaded and deterministic.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extended::{Extended, ExtendedOctonion};
use crate::g2::{
    agreement_check, automorphism_defect, td_criterion, AutomorphismForm, FormKind, NestedForm,
    NestedKind,
};
use crate::lorentz::{generator_catalog, phase, TransformMatrix};
use crate::minkowski::{stereo_project, stereo_unproject, HermitianMatrix, Spinor};
use crate::moebius::{
    associator_condition, complex_moebius_oracle, fractional_linear, from_complex,
    norm_factorization_check, projectivize, spinor_action, to_complex, ComplexMoebius, OP1Point,
};
use crate::octonion::{associator, BasisUnit, Octonion};
use crate::oracle::{eval_all_bracketings, generate_table};
use crate::sample::{Sampler, Subspace};
use crate::{EPSILON, PREDICATE_EPSILON};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Core,
    Minkowski,
    Lorentz,
    Moebius,
    G2,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["core", "minkowski", "lorentz", "moebius", "g2", "all"];

    fn parts(self) -> Vec<Suite> {
        match self {
            Suite::All => vec![Suite::Core, Suite::Minkowski, Suite::Lorentz, Suite::Moebius, Suite::G2],
            s => vec![s],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "core" => Suite::Core,
            "minkowski" => Suite::Minkowski,
            "lorentz" => Suite::Lorentz,
            "moebius" => Suite::Moebius,
            "g2" => Suite::G2,
            "all" => Suite::All,
            other => return Err(Error::UnknownSuite(other.to_string())),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(Suite::NAMES[*self as usize])
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    pub seed: u64,
    pub samples: usize,
    /// Replaces every floating-point upper-bound tolerance when set. Exact
    /// checks and lower bounds on witnesses keep their own thresholds.
    pub epsilon: Option<f64>,
    pub subspace: Subspace,
}

impl Default for Config {
    fn default() -> Self {
        Config { seed: 0, samples: 200, epsilon: None, subspace: Subspace::Octonionic }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Bound {
    /// The worst (largest) residual must not exceed the tolerance.
    AtMost,
    /// The smallest residual must exceed the tolerance: a witness that
    /// something genuinely fails.
    AtLeast,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    pub name: String,
    pub bound: Bound,
    /// Largest residual for `at_most`, smallest for `at_least`.
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub seed: u64,
    pub samples: usize,
    pub subspace: &'static str,
    pub properties: Vec<PropertyReport>,
    pub pass: bool,
}

impl Report {
    pub fn property(&self, name: &str) -> Option<&PropertyReport> {
        self.properties.iter().find(|p| p.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyReport> {
        self.properties.iter().filter(|p| !p.pass)
    }
}

pub fn run(suite: Suite, cfg: &Config) -> Report {
    let mut props = Props { cfg, out: Vec::new() };
    for part in suite.parts() {
        // The G2 forms need room outside a quaternion subalgebra, so that
        // suite always draws octonions; it checks H separately.
        let subspace = if part == Suite::G2 { Subspace::Octonionic } else { cfg.subspace };
        let mut rng = Sampler::with_subspace(cfg.seed, subspace);
        match part {
            Suite::Core => core(&mut props, &mut rng),
            Suite::Minkowski => minkowski(&mut props, &mut rng),
            Suite::Lorentz => lorentz(&mut props, &mut rng),
            Suite::Moebius => moebius(&mut props, &mut rng),
            Suite::G2 => g2(&mut props, &mut rng),
            Suite::All => unreachable!(),
        }
    }
    let pass = props.out.iter().all(|p| p.pass);
    Report {
        suite,
        seed: cfg.seed,
        samples: cfg.samples,
        subspace: match cfg.subspace {
            Subspace::Octonionic => "octonionic",
            Subspace::Quaternionic => "quaternionic",
        },
        properties: props.out,
        pass,
    }
}

struct Props<'a> {
    cfg: &'a Config,
    out: Vec<PropertyReport>,
}

/// Max that lets a NaN through instead of hiding it.
fn worst(acc: f64, r: f64) -> f64 {
    if acc.is_nan() || r.is_nan() {
        f64::NAN
    } else {
        acc.max(r)
    }
}

impl Props<'_> {
    fn push(&mut self, name: &str, bound: Bound, residual: f64, tolerance: f64) {
        let pass = match bound {
            Bound::AtMost => residual <= tolerance,
            Bound::AtLeast => residual > tolerance,
        };
        self.out.push(PropertyReport { name: name.into(), bound, residual, tolerance, pass });
    }

    /// Floating-point upper bound; subject to `--epsilon`.
    fn at_most(&mut self, name: &str, tol: f64, residuals: impl IntoIterator<Item = f64>) {
        let tol = self.cfg.epsilon.unwrap_or(tol);
        let r = residuals.into_iter().fold(0.0, worst);
        self.push(name, Bound::AtMost, r, tol);
    }

    fn exact(&mut self, name: &str, residuals: impl IntoIterator<Item = f64>) {
        let r = residuals.into_iter().fold(0.0, worst);
        self.push(name, Bound::AtMost, r, 0.0);
    }

    fn at_least(&mut self, name: &str, tol: f64, residuals: impl IntoIterator<Item = f64>) {
        let r = residuals.into_iter().fold(f64::INFINITY, |acc, r| {
            if acc.is_nan() || r.is_nan() { f64::NAN } else { acc.min(r) }
        });
        self.push(name, Bound::AtLeast, r, tol);
    }

    fn n(&self) -> usize {
        self.cfg.samples.max(1)
    }
}

fn rel(residual: f64, size: f64) -> f64 {
    residual / size.max(1.0)
}

/// Relative distance on the extended line; mismatched infinities count as ∞.
pub fn extended_rel_distance(x: &ExtendedOctonion, y: &ExtendedOctonion) -> f64 {
    match (x, y) {
        (Extended::Finite(a), Extended::Finite(b)) => rel((*a - *b).norm(), a.norm().max(b.norm())),
        _ => x.distance(y),
    }
}

fn ok_or_inf(r: Result<f64>) -> f64 {
    r.unwrap_or(f64::INFINITY)
}

fn core(p: &mut Props, rng: &mut Sampler) {
    let n = p.n();
    let table = generate_table();
    let basis: Vec<Octonion> = BasisUnit::all().map(BasisUnit::to_octonion).collect();

    p.at_most(
        "core.norm_multiplicativity",
        EPSILON,
        (0..n).map(|_| {
            let (a, b) = (rng.nonzero_octonion(), rng.nonzero_octonion());
            let expect = a.norm() * b.norm();
            ((a * b).norm() - expect).abs() / expect
        }),
    );
    p.exact(
        "core.alternativity_on_basis",
        basis.iter().flat_map(|a| basis.iter().map(move |b| associator(*a, *b, *a).norm())),
    );
    p.at_most(
        "core.alternativity",
        EPSILON,
        (0..n).map(|_| {
            let (a, b) = (rng.octonion(), rng.octonion());
            let size = a.norm_sqr() * b.norm();
            [associator(a, b, a), associator(a, a, b), associator(b, a, a)]
                .iter()
                .map(|x| rel(x.norm(), size))
                .fold(0.0, worst)
        }),
    );
    p.at_most(
        "core.associator_antisymmetry",
        EPSILON,
        (0..n).map(|_| {
            let (x, y, z) = (rng.octonion(), rng.octonion(), rng.octonion());
            let s = associator(x, y, z);
            let size = x.norm() * y.norm() * z.norm();
            [
                s + associator(y, x, z),
                s + associator(x, z, y),
                s + associator(z, y, x),
                s - associator(y, z, x),
            ]
            .iter()
            .map(|d| rel(d.norm(), size))
            .fold(0.0, worst)
        }),
    );
    p.at_most(
        "core.associator_is_imaginary",
        EPSILON,
        (0..n).map(|_| {
            let (x, y, z) = (rng.octonion(), rng.octonion(), rng.octonion());
            rel(associator(x, y, z).real_part().abs(), x.norm() * y.norm() * z.norm())
        }),
    );
    p.at_most(
        "core.conjugation_reverses_products",
        EPSILON,
        (0..n).map(|_| {
            let (a, b) = (rng.octonion(), rng.octonion());
            rel(((a * b).conj() - b.conj() * a.conj()).norm(), a.norm() * b.norm())
        }),
    );
    p.at_most(
        "core.inverse",
        EPSILON,
        (0..n).map(|_| {
            let a = rng.nonzero_octonion();
            ok_or_inf(a.inverse().map(|inv| (a * inv - Octonion::ONE).norm()))
        }),
    );
    p.exact(
        "core.table_matches_product",
        basis.iter().flat_map(|x| basis.iter().map(|y| table.mul(x, y).max_abs_diff(&(*x * *y)))),
    );
    p.at_most(
        "core.two_direction_words_associate",
        EPSILON,
        (0..n.div_ceil(10)).map(|_| {
            let (a, b) = (rng.octonion(), rng.octonion());
            let size = a.norm().powi(3) * b.norm().powi(2);
            ok_or_inf(eval_all_bracketings(&[a, b, a, b, a]).map(|vals| {
                vals.iter().map(|v| rel((*v - vals[0]).norm(), size)).fold(0.0, worst)
            }))
        }),
    );
}

fn minkowski(p: &mut Props, rng: &mut Sampler) {
    let n = p.n();
    p.at_most(
        "minkowski.det_is_minus_norm",
        EPSILON,
        (0..n).map(|_| {
            let v = rng.vector10();
            let m = v.to_matrix();
            rel((m.det() + v.minkowski_norm()).abs(), m.scale())
        }),
    );
    p.at_most(
        "minkowski.matrix_roundtrip",
        EPSILON,
        (0..n).map(|_| {
            let v = rng.vector10();
            v.to_matrix().to_vector().max_abs_diff(&v)
        }),
    );
    p.at_most(
        "minkowski.spinor_square_is_null",
        EPSILON,
        (0..n).map(|_| {
            let s = rng.spinor();
            let size = s.b.norm_sqr() + s.c.norm_sqr();
            rel(s.square().det().abs(), size * size)
        }),
    );
    p.at_most(
        "minkowski.null_factor_roundtrip",
        EPSILON,
        (0..n).map(|_| {
            let a = rng.spinor().square();
            ok_or_inf(a.null_factor().map(|s| rel(s.square().max_abs_diff(&a), a.scale().sqrt())))
        }),
    );
    p.at_most(
        "minkowski.stereographic_roundtrip",
        EPSILON,
        (0..n).map(|_| {
            let q = rng.point_s2();
            stereo_unproject(&stereo_project(&q)).distance(&q)
        }),
    );
}

/// `(MA)M† = M(AM†)` fails for `diag(i, l)` on `a = j`: the off-diagonal
/// entries differ by the associator `[i, j, l] = 2kl`.
pub fn incompatible_lorentz_witness() -> (TransformMatrix, HermitianMatrix) {
    (
        TransformMatrix::diagonal(Octonion::I, Octonion::L),
        HermitianMatrix::new(1.0, 1.0, Octonion::J),
    )
}

/// `e^{iπ/5}·I` has non-real complex determinant `e^{2iπ/5}`; the spinor
/// identity fails for spinors leaving the `i` subalgebra.
pub fn phase_witness() -> (TransformMatrix, Spinor) {
    (
        phase(Octonion::I, std::f64::consts::PI / 5.0),
        Spinor::new(Octonion::J + Octonion::KL, Octonion::L - Octonion::K * 0.5),
    )
}

fn lorentz(p: &mut Props, rng: &mut Sampler) {
    let n = p.n();
    let catalog = generator_catalog();
    let per_generator = n.div_ceil(2);

    let mut well_defined = Vec::new();
    let mut preserved = Vec::new();
    for (_, g) in &catalog {
        for _ in 0..per_generator {
            let a = rng.hermitian();
            let mut cur = a;
            for m in g.matrices() {
                well_defined.push(rel(m.parenthesization_residual(&cur), m.scale() * cur.scale().sqrt()));
                cur = m.left_first(&cur).to_hermitian();
            }
            preserved.push(rel((cur.det() - a.det()).abs(), cur.scale().max(a.scale())));
        }
    }
    p.at_most("lorentz.catalog_well_defined", EPSILON, well_defined);
    p.at_most("lorentz.catalog_preserves_norm", EPSILON, preserved);
    p.at_most(
        "lorentz.chains_preserve_norm",
        EPSILON,
        (0..n).map(|_| {
            let chain = rng.catalog_chain(&catalog, 3);
            let a = rng.hermitian();
            ok_or_inf(
                chain
                    .apply_vector(&a)
                    .map(|b| rel((b.det() - a.det()).abs(), b.scale().max(a.scale()))),
            )
        }),
    );
    p.at_most(
        "lorentz.compatibility_identity",
        EPSILON,
        (0..n).map(|_| {
            let m = rng.compatible_matrix();
            let v = rng.spinor();
            let size = m.scale() * (v.b.norm_sqr() + v.c.norm_sqr());
            rel(m.compatibility_residual(&v), size)
        }),
    );
    let (m, a) = incompatible_lorentz_witness();
    p.at_least("lorentz.incompatible_parenthesization_witness", 1e-3, [m.parenthesization_residual(&a)]);
    let (m, v) = phase_witness();
    p.at_least("lorentz.phase_compatibility_witness", 1e-3, [m.compatibility_residual(&v)]);
}

/// A non-compatible matrix (entries along `i`, `j`, `l`, `kl`) and a pair
/// `(b, c)` for which the fractional linear map and the spinor action
/// disagree by about 1.08.
pub fn incompatible_moebius_witness() -> (TransformMatrix, OP1Point) {
    let m = TransformMatrix::new(
        Octonion::ONE + Octonion::I,
        Octonion::J,
        Octonion::L,
        Octonion::ONE + Octonion::KL,
    );
    let p = OP1Point::new(Octonion::K + Octonion::IL * 0.5, Octonion::ONE + Octonion::JL)
        .expect("nonzero");
    (m, p)
}

/// `max` relative disagreement between `f_M(bc⁻¹)` and the spinor action on
/// `(b, c)` and on the rescaled representative `(bξ', ξ)`.
pub fn main_theorem_residual(m: &TransformMatrix, p: &OP1Point, xi: Octonion) -> f64 {
    let w = p.to_extended();
    let Ok(direct) = fractional_linear(m, &w) else {
        return f64::INFINITY;
    };
    let mut r = 0.0;
    for q in [Ok(*p), p.rescaled(xi)] {
        let image = q.and_then(|q| spinor_action(m, &q)).map(|img| img.to_extended());
        r = worst(r, image.map_or(f64::INFINITY, |img| extended_rel_distance(&direct, &img)));
    }
    r
}

fn moebius(p: &mut Props, rng: &mut Sampler) {
    let n = p.n();
    p.at_most(
        "moebius.main_theorem",
        PREDICATE_EPSILON,
        (0..n).map(|_| {
            let m = rng.compatible_matrix();
            let point = OP1Point::new(rng.octonion(), rng.nonzero_octonion()).expect("c ≠ 0");
            main_theorem_residual(&m, &point, rng.nonzero_octonion())
        }),
    );
    let (m, point) = incompatible_moebius_witness();
    p.at_least(
        "moebius.incompatible_witness",
        1e-3,
        [main_theorem_residual(&m, &point, Octonion::ONE)],
    );
    p.at_most(
        "moebius.associator_lemma",
        EPSILON,
        (0..n).map(|_| {
            let u = rng.imaginary_unit();
            let (b, c) = (rng.octonion(), rng.octonion());
            let (gamma, delta) = (rng.complex_along(u), rng.complex_along(u));
            let size = b.norm() * c.norm() * gamma.norm() * delta.norm();
            rel(associator_condition(b, c, gamma, delta).abs(), size)
        }),
    );
    p.at_most(
        "moebius.norm_factorization",
        EPSILON,
        (0..n).map(|_| {
            let u = rng.imaginary_unit();
            let (b, c) = (rng.octonion(), rng.nonzero_octonion());
            let (gamma, delta) = (rng.complex_along(u), rng.complex_along(u));
            ok_or_inf(norm_factorization_check(b, c, gamma, delta).map(|(l, r)| rel((l - r).abs(), l)))
        }),
    );
    p.at_most(
        "moebius.complex_oracle",
        EPSILON,
        (0..n).map(|_| {
            let u = rng.imaginary_unit();
            let m = rng.compatible_matrix_along(u);
            let w = rng.complex_along(u);
            let ours = fractional_linear(&m, &Extended::Finite(w));
            let oracle = ComplexMoebius::from_matrix(&m, u).and_then(|cm| {
                complex_moebius_oracle(&cm, &Extended::Finite(to_complex(w, u)?))
            });
            match (ours, oracle) {
                (Ok(x), Ok(z)) => extended_rel_distance(&x, &z.map(|z| from_complex(z, u))),
                _ => f64::INFINITY,
            }
        }),
    );
    p.at_most(
        "moebius.classical_spinor_action",
        EPSILON,
        (0..n).map(|_| {
            let u = rng.imaginary_unit();
            let m = rng.compatible_matrix_along(u);
            let (b, c) = (rng.complex_along(u), rng.complex_along(u));
            let ours = m.apply_spinor(&Spinor::new(b, c)).and_then(|s| projectivize(&s));
            let classical = (|| -> Result<ExtendedOctonion> {
                let cm = ComplexMoebius::from_matrix(&m, u)?;
                let (b, c): (Complex64, Complex64) = (to_complex(b, u)?, to_complex(c, u)?);
                let (nb, nc) = (cm.alpha * b + cm.beta * c, cm.gamma * b + cm.delta * c);
                Ok(Extended::Finite(from_complex(nb / nc, u)))
            })();
            match (ours, classical) {
                (Ok(x), Ok(y)) => extended_rel_distance(&x, &y),
                _ => f64::INFINITY,
            }
        }),
    );
}

/// `(a, b)` with `a` an imaginary unit and `b = cos β + sin β·n`, `n ⟂ a`
/// imaginary: parameters satisfying the criterion.
pub fn draw_td_parameters(rng: &mut Sampler) -> (Octonion, Octonion) {
    let a = rng.imaginary_unit();
    let n = rng.imaginary_unit_orthogonal_to(&[a]);
    let beta = rng.uniform(-std::f64::consts::PI, std::f64::consts::PI);
    (a, Octonion::real(beta.cos()) + n * beta.sin())
}

/// Unit parameters whose criterion residual exceeds 0.1.
pub fn draw_generic_parameters(rng: &mut Sampler) -> (Octonion, Octonion) {
    loop {
        let (a, b) = (rng.unit_octonion(), rng.unit_octonion());
        if td_criterion(a, b).norm() > 0.1 {
            return (a, b);
        }
    }
}

/// `(c, d, ℓ)` valid for the nested forms.
pub fn draw_nested_parameters(rng: &mut Sampler) -> (Octonion, Octonion, Octonion) {
    let c = rng.imaginary_unit();
    let d = loop {
        let d = rng.imaginary_unit();
        if d.inner(&c).abs() < 0.9 {
            break d;
        }
    };
    let ell = rng.imaginary_unit_orthogonal_to(&[c, d, c * d]);
    (c, d, ell)
}

/// `(c, d, ℓ, e)` with `c = ae`, `d = be` for orthogonal imaginary units
/// `a, b`, `e ⟂ span{1, a, b, ab}` and `ℓ` in the plane of `a` and `b`.
pub fn draw_identification(rng: &mut Sampler) -> (Octonion, Octonion, Octonion, Octonion) {
    let a = rng.imaginary_unit();
    let b = rng.imaginary_unit_orthogonal_to(&[a]);
    let e = rng.imaginary_unit_orthogonal_to(&[a, b, a * b]);
    let phi = rng.uniform(0.0, std::f64::consts::TAU);
    (a * e, b * e, a * phi.cos() + b * phi.sin(), e)
}

/// `a = i`, `b = (i + j)/√2` satisfies `ababa = −ba³b`.
pub fn footnote_witness() -> (Octonion, Octonion) {
    (Octonion::I, (Octonion::I + Octonion::J) * std::f64::consts::FRAC_1_SQRT_2)
}

/// Least-squares slope of `log y` against `log x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let n = points.len() as f64;
    let (xs, ys): (Vec<f64>, Vec<f64>) = points.iter().map(|(x, y)| (x.ln(), y.ln())).unzip();
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

/// Fitted exponent of the automorphism defect for `a = exp(εu)`,
/// `b = exp(εw)`, the smallest over the three forms.
pub fn second_order_exponent(u: Octonion, w: Octonion, epsilons: &[f64], samples: usize, seed: u64) -> f64 {
    let expo = |eps: f64, x: Octonion| Octonion::real(eps.cos()) + x * eps.sin();
    FormKind::ALL
        .iter()
        .map(|&kind| {
            let pts: Vec<(f64, f64)> = epsilons
                .iter()
                .map(|&eps| {
                    let f = AutomorphismForm::new(kind, expo(eps, u), expo(eps, w)).expect("unit");
                    (eps, automorphism_defect(&f, samples, seed))
                })
                .collect();
            loglog_slope(&pts)
        })
        .fold(f64::INFINITY, f64::min)
}

fn g2(p: &mut Props, rng: &mut Sampler) {
    let draws = p.n().div_ceil(10);
    let pairs = 20;
    let seed = p.cfg.seed;

    let mut td = Vec::new();
    let mut defects = Vec::new();
    for k in 0..draws {
        let (a, b) = draw_td_parameters(rng);
        td.push(td_criterion(a, b).norm());
        for kind in FormKind::ALL {
            let f = AutomorphismForm::new(kind, a, b).expect("unit");
            defects.push(automorphism_defect(&f, pairs, seed ^ k as u64));
        }
    }
    p.at_most("g2.td_parameters_satisfy_criterion", PREDICATE_EPSILON, td);
    p.at_most("g2.td_parameters_give_automorphisms", PREDICATE_EPSILON, defects);

    p.at_least(
        "g2.generic_parameters_fail",
        1e-3,
        (0..draws).flat_map(|k| {
            let (a, b) = draw_generic_parameters(rng);
            FormKind::ALL.map(|kind| {
                let f = AutomorphismForm::new(kind, a, b).expect("unit");
                automorphism_defect(&f, pairs, seed ^ k as u64)
            })
        }),
    );
    p.at_most(
        "g2.complex_parameters_give_identity",
        EPSILON,
        (0..draws).flat_map(|_| {
            let u = rng.imaginary_unit();
            let a = rng.complex_along(u).normalized().expect("nonzero");
            let b = rng.complex_along(u).normalized().expect("nonzero");
            let y = rng.octonion();
            FormKind::ALL.map(|kind| {
                let f = AutomorphismForm::new(kind, a, b).expect("unit");
                rel((f.eval(y) - y).norm(), y.norm())
            })
        }),
    );
    let (a, b) = footnote_witness();
    let gtwo = AutomorphismForm::new(FormKind::Gtwo, a, b).expect("unit");
    let (lhs, rhs) = crate::g2::td_words(a, b);
    p.at_most("g2.footnote_witness_criterion", EPSILON, [(lhs + rhs).norm()]);
    p.at_most(
        "g2.footnote_witness_gtwo_automorphism",
        PREDICATE_EPSILON,
        [automorphism_defect(&gtwo, 200, seed)],
    );

    let (u, w) = (rng.imaginary_unit(), rng.imaginary_unit());
    p.at_least(
        "g2.second_order_exponent",
        2.8,
        [second_order_exponent(u, w, &[1e-1, 1e-2, 1e-3], 50, seed)],
    );

    p.at_most(
        "g2.cam_i_automorphism",
        PREDICATE_EPSILON,
        (0..draws).map(|k| {
            let (c, d, ell) = draw_nested_parameters(rng);
            ok_or_inf(
                NestedForm::new(NestedKind::CamI, c, d, ell)
                    .map(|f| automorphism_defect(&f, pairs, seed ^ k as u64)),
            )
        }),
    );
    p.at_most(
        "g2.nested_agreement",
        PREDICATE_EPSILON,
        (0..draws).map(|k| {
            let (c, d, ell, e) = draw_identification(rng);
            ok_or_inf(agreement_check(c, d, ell, e, pairs, seed ^ k as u64).map(|r| r.residual))
        }),
    );

    let mut quat = Sampler::with_subspace(seed, Subspace::Quaternionic);
    p.at_most(
        "g2.gtwo_is_an_automorphism_of_h",
        PREDICATE_EPSILON,
        (0..draws).map(|_| {
            let (a, b) = (quat.unit_octonion(), quat.unit_octonion());
            let f = AutomorphismForm::new(FormKind::Gtwo, a, b).expect("unit");
            (0..pairs)
                .map(|_| {
                    let (x, y) = (quat.octonion(), quat.octonion());
                    (f.eval(x * y) - f.eval(x) * f.eval(y)).norm()
                })
                .fold(0.0, worst)
        }),
    );
}
