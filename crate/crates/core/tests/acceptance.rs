//! The fifteen acceptance criteria. Prints one PASS/FAIL line per criterion
//! and exits non-zero if any fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::Instant;

use octo_moebius::extended::Extended;
use octo_moebius::g2::{
    agreement_check, automorphism_defect, td_criterion, td_words, AutomorphismForm, FormKind,
    NestedForm, NestedKind,
};
use octo_moebius::lorentz::{generator_catalog, Generator, NestedChain, TransformMatrix};
use octo_moebius::minkowski::{stereo_project, stereo_unproject, HermitianMatrix, Spinor};
use octo_moebius::moebius::{
    associator_condition, complex_moebius_oracle, fractional_linear, from_complex, projectivize,
    to_complex, ComplexMoebius, OP1Point,
};
use octo_moebius::octonion::associator;
use octo_moebius::sample::{Sampler, Subspace};
use octo_moebius::verify::{
    draw_generic_parameters, draw_identification, draw_nested_parameters, draw_td_parameters,
    extended_rel_distance, footnote_witness, incompatible_lorentz_witness,
    incompatible_moebius_witness, main_theorem_residual, phase_witness, second_order_exponent,
};
use octo_moebius::Octonion;

const SEED: u64 = 0;
const TIGHT: f64 = 1e-12;
const LOOSE: f64 = 1e-10;
const WITNESS: f64 = 1e-3;

struct Check {
    pass: bool,
    detail: String,
}

/// Collects sub-checks; the criterion passes when all of them do.
#[derive(Default)]
struct Criterion {
    checks: Vec<Check>,
}

impl Criterion {
    fn at_most(&mut self, what: &str, value: f64, tol: f64) -> &mut Self {
        self.checks.push(Check { pass: value <= tol, detail: format!("{what} {value:.2e} <= {tol:e}") });
        self
    }

    fn above(&mut self, what: &str, value: f64, tol: f64) -> &mut Self {
        self.checks.push(Check { pass: value > tol, detail: format!("{what} {value:.2e} > {tol:e}") });
        self
    }

    fn holds(&mut self, what: &str, ok: bool) -> &mut Self {
        self.checks.push(Check { pass: ok, detail: what.to_string() });
        self
    }

    fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

fn max(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, |acc, x| if x.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(x) })
}

fn min(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(f64::INFINITY, |acc, x| if x.is_nan() || acc.is_nan() { f64::NAN } else { acc.min(x) })
}

fn in_quaternions(x: &Octonion) -> bool {
    x.coeffs()[4..].iter().all(|c| *c == 0.0)
}

fn catalog_for(sub: Subspace) -> Vec<(String, Generator)> {
    generator_catalog()
        .into_iter()
        .filter(|(_, g)| {
            sub == Subspace::Octonionic
                || g.matrices().iter().all(|m| m.entries().iter().all(in_quaternions))
        })
        .collect()
}

fn basis(sub: Subspace) -> Vec<Octonion> {
    (0..sub.dim()).map(Octonion::unit).collect()
}

fn c1(sub: Subspace) -> Criterion {
    let mut rng = Sampler::with_subspace(SEED, sub);
    let err = max((0..10_000).map(|_| {
        let (a, b) = (rng.nonzero_octonion(), rng.nonzero_octonion());
        ((a * b).norm() - a.norm() * b.norm()).abs() / (a.norm() * b.norm())
    }));
    let mut c = Criterion::default();
    c.at_most("max relative error over 1e4 pairs", err, TIGHT);
    c
}

fn c2(sub: Subspace) -> Criterion {
    let mut rng = Sampler::with_subspace(SEED, sub);
    let units = basis(sub);
    let exact = units.iter().all(|a| units.iter().all(|b| associator(*a, *b, *a) == Octonion::ZERO));
    let random = max((0..1000).map(|_| {
        let (a, b) = (rng.octonion(), rng.octonion());
        associator(a, b, a).norm()
    }));
    let mut c = Criterion::default();
    c.holds("[e_p, e_q, e_p] = 0 exactly on all basis pairs", exact)
        .at_most("random [a,b,a]", random, TIGHT);
    c
}

fn c3(sub: Subspace) -> Criterion {
    let mut rng = Sampler::with_subspace(SEED, sub);
    let (mut anti, mut real) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let (x, y, z) = (rng.octonion(), rng.octonion(), rng.octonion());
        let s = associator(x, y, z);
        for t in [
            s + associator(y, x, z),
            s + associator(x, z, y),
            s + associator(z, y, x),
            s - associator(y, z, x),
            s - associator(z, x, y),
        ] {
            anti = anti.max(t.norm());
        }
        real = real.max(s.real_part().abs());
    }
    let mut c = Criterion::default();
    c.at_most("antisymmetry", anti, TIGHT).at_most("real part", real, TIGHT);
    c
}

fn c4(sub: Subspace) -> Criterion {
    let mut rng = Sampler::with_subspace(SEED, sub);
    let err = max((0..1000).map(|_| {
        let v = rng.vector10();
        (v.to_matrix().det() + v.minkowski_norm()).abs()
    }));
    let mut c = Criterion::default();
    c.at_most("|det A + v.v|", err, TIGHT);
    c
}

fn c5(sub: Subspace) -> Criterion {
    let mut rng = Sampler::with_subspace(SEED, sub);
    let (mut null, mut roundtrip) = (0.0f64, 0.0f64);
    for _ in 0..1000 {
        let a = rng.spinor().square();
        null = null.max(a.det().abs());
        roundtrip = roundtrip.max(a.null_factor().map_or(f64::INFINITY, |s| s.square().max_abs_diff(&a)));
    }
    let mut c = Criterion::default();
    c.at_most("|det(vv†)|", null, TIGHT).at_most("square(null_factor(A)) - A", roundtrip, TIGHT);
    c
}

fn c6(sub: Subspace) -> Criterion {
    let mut rng = Sampler::with_subspace(SEED, sub);
    let catalog = catalog_for(sub);
    let mut worst = 0.0f64;
    for (_, g) in &catalog {
        for _ in 0..100 {
            let mut a = rng.hermitian();
            for m in g.matrices() {
                worst = worst.max(m.parenthesization_residual(&a));
                a = m.left_first(&a).to_hermitian();
            }
        }
    }
    let mut c = Criterion::default();
    c.at_most(&format!("(MA)M† - M(AM†) over {} generators x 100", catalog.len()), worst, TIGHT);
    match sub {
        Subspace::Octonionic => {
            let (m, a) = incompatible_lorentz_witness();
            c.above("stored diag(i, l) witness", m.parenthesization_residual(&a), WITNESS);
        }
        Subspace::Quaternionic => {
            // H is associative, so the two bracketings agree for every matrix
            let m = TransformMatrix::diagonal(Octonion::I, Octonion::J);
            let a = HermitianMatrix::new(1.0, 1.0, Octonion::K);
            c.at_most("diag(i, j) on a = k (no witness exists in H)", m.parenthesization_residual(&a), TIGHT);
        }
    }
    c
}

fn minus_det_drift(chain: &NestedChain, a: &HermitianMatrix) -> f64 {
    chain
        .apply_vector(a)
        .map_or(f64::INFINITY, |b| (b.det() - a.det()).abs() / b.scale().max(a.scale()).max(1.0))
}

fn c7(sub: Subspace) -> Criterion {
    let mut rng = Sampler::with_subspace(SEED, sub);
    let catalog = catalog_for(sub);
    let mut generators = 0.0f64;
    for (_, g) in &catalog {
        let chain = g.to_chain();
        for _ in 0..100 {
            generators = generators.max(minus_det_drift(&chain, &rng.hermitian()));
        }
    }
    let mut chains = 0.0f64;
    let mut stays_in_6d = true;
    for _ in 0..100 {
        let chain = rng.catalog_chain(&catalog, 3);
        for _ in 0..100 {
            let a = rng.hermitian();
            chains = chains.max(minus_det_drift(&chain, &a));
            if sub == Subspace::Quaternionic {
                let v = chain.apply_vector(&a).map(|b| b.to_vector());
                stays_in_6d &= v.is_ok_and(|v| v.0[5..9].iter().all(|x| *x == 0.0));
            }
        }
    }
    let mut c = Criterion::default();
    c.at_most("generators, relative", generators, TIGHT).at_most("depth <= 3 chains, relative", chains, TIGHT);
    if sub == Subspace::Quaternionic {
        c.holds("images stay in the 6D subspace", stays_in_6d);
    }
    c
}

fn c8(sub: Subspace) -> Criterion {
    let mut rng = Sampler::with_subspace(SEED, sub);
    let worst = max((0..1000).map(|_| {
        let m = rng.compatible_matrix();
        let v = rng.spinor();
        let size = m.scale() * (v.b.norm_sqr() + v.c.norm_sqr());
        m.compatibility_residual(&v) / size.max(1.0)
    }));
    let mut c = Criterion::default();
    c.at_most("(Mv)(Mv)† - M(vv†)M†, relative", worst, TIGHT);
    match sub {
        Subspace::Octonionic => {
            let (m, v) = phase_witness();
            c.holds("e^{iπ/5} I is rejected as incompatible", !m.is_compatible())
                .above("stored e^{iπ/5} I witness", m.compatibility_residual(&v), WITNESS);
        }
        Subspace::Quaternionic => {
            let m = octo_moebius::lorentz::phase(Octonion::I, PI / 5.0);
            let v = Spinor::new(Octonion::J, Octonion::K - Octonion::ONE * 0.5);
            c.holds("e^{iπ/5} I is rejected as incompatible", !m.is_compatible())
                .at_most("its spinor identity still holds in H", m.compatibility_residual(&v), TIGHT);
        }
    }
    c
}

fn c9(sub: Subspace) -> Criterion {
    let mut rng = Sampler::with_subspace(SEED, sub);
    let worst = max((0..1000).map(|_| {
        let m = rng.compatible_matrix();
        let p = OP1Point::new(rng.octonion(), rng.nonzero_octonion()).expect("c != 0");
        main_theorem_residual(&m, &p, rng.nonzero_octonion())
    }));
    let mut c = Criterion::default();
    c.at_most("f_M(bc⁻¹) vs [M(b, c)] incl. rescaling", worst, LOOSE);
    match sub {
        Subspace::Octonionic => {
            let (m, p) = incompatible_moebius_witness();
            c.holds("witness matrix is incompatible", !m.is_compatible())
                .above("stored incompatible witness", main_theorem_residual(&m, &p, Octonion::ONE), WITNESS);
        }
        Subspace::Quaternionic => {
            // without associators any quaternionic matrix satisfies it
            let m = TransformMatrix::new(Octonion::ONE + Octonion::I, Octonion::J, Octonion::K, Octonion::ONE);
            let p = OP1Point::new(Octonion::K, Octonion::ONE + Octonion::J).unwrap();
            c.holds("quaternionic matrix is incompatible", !m.is_compatible())
                .at_most("yet the identity holds in H", main_theorem_residual(&m, &p, Octonion::I + Octonion::ONE), LOOSE);
        }
    }
    c
}

fn c10() -> Criterion {
    let mut rng = Sampler::new(SEED);
    let worst = max((0..1000).map(|_| {
        let u = rng.imaginary_unit();
        let (b, c) = (rng.octonion(), rng.octonion());
        associator_condition(b, c, rng.complex_along(u), rng.complex_along(u)).abs()
    }));
    let mut c = Criterion::default();
    c.at_most("<[b,c,γ],δ> with γ, δ in one complex subalgebra", worst, TIGHT);
    c
}

fn c11() -> Criterion {
    let mut rng = Sampler::new(SEED);
    let (mut td, mut td_defect, mut generic_defect) = (0.0f64, 0.0f64, f64::INFINITY);
    let mut identity = 0.0f64;
    for n in 0..100u64 {
        let (a, b) = draw_td_parameters(&mut rng);
        td = td.max(td_criterion(a, b).norm());
        let (ga, gb) = draw_generic_parameters(&mut rng);
        let u = rng.imaginary_unit();
        let ca = rng.complex_along(u).normalized().unwrap();
        let cb = rng.complex_along(u).normalized().unwrap();
        for kind in FormKind::ALL {
            let f = AutomorphismForm::new(kind, a, b).unwrap();
            td_defect = td_defect.max(automorphism_defect(&f, 50, n));
            let g = AutomorphismForm::new(kind, ga, gb).unwrap();
            generic_defect = generic_defect.min(automorphism_defect(&g, 50, n));
            let h = AutomorphismForm::new(kind, ca, cb).unwrap();
            for _ in 0..10 {
                let y = rng.octonion();
                identity = identity.max((h.eval(y) - y).norm());
            }
        }
    }
    let (a, b) = footnote_witness();
    let (lhs, rhs) = td_words(a, b);
    let gtwo = AutomorphismForm::new(FormKind::Gtwo, a, b).unwrap();
    let mut c = Criterion::default();
    c.at_most("criterion on satisfying draws", td, LOOSE)
        .at_most("their automorphism defect", td_defect, LOOSE)
        .above("smallest defect on generic draws", generic_defect, WITNESS)
        .at_most("complex parameters vs identity", identity, TIGHT)
        .at_most("ababa + ba³b at a = i, b = (i+j)/√2", (lhs + rhs).norm(), TIGHT)
        .at_most("GTWO defect there", automorphism_defect(&gtwo, 200, SEED), LOOSE);
    c
}

fn c12() -> Criterion {
    let mut rng = Sampler::new(SEED);
    let worst = min((0..5).map(|n| {
        let (u, w) = (rng.imaginary_unit(), rng.imaginary_unit());
        second_order_exponent(u, w, &[1e-1, 1e-2, 1e-3], 50, n)
    }));
    let mut c = Criterion::default();
    c.above("smallest fitted exponent over 5 directions x 3 forms", worst, 2.8);
    c
}

fn c13() -> Criterion {
    let mut rng = Sampler::new(SEED);
    let cam = max((0..100u64).map(|n| {
        let (c, d, ell) = draw_nested_parameters(&mut rng);
        NestedForm::new(NestedKind::CamI, c, d, ell)
            .map_or(f64::INFINITY, |f| automorphism_defect(&f, 200, n))
    }));
    let agreement = max((0..100u64).map(|n| {
        let (c, d, ell, e) = draw_identification(&mut rng);
        agreement_check(c, d, ell, e, 20, n).map_or(f64::INFINITY, |r| r.residual)
    }));
    let mut c = Criterion::default();
    c.at_most("CAM_I defect over 100 draws x 200 pairs", cam, LOOSE)
        .at_most("nested vs candidate forms under c = ae, d = be", agreement, LOOSE);
    c
}

fn c14() -> Criterion {
    let mut c = Criterion::default();
    let reruns: [(&str, fn(Subspace) -> Criterion); 9] =
        [("1", c1), ("2", c2), ("3", c3), ("4", c4), ("5", c5), ("6", c6), ("7", c7), ("8", c8), ("9", c9)];
    for (id, f) in reruns {
        let sub = f(Subspace::Quaternionic);
        for check in sub.checks {
            c.checks.push(Check { pass: check.pass, detail: format!("[{id}] {}", check.detail) });
        }
    }
    c
}

fn c15() -> Criterion {
    let mut rng = Sampler::new(SEED);
    let (mut oracle, mut classical, mut stereo) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..1000 {
        let u = rng.imaginary_unit();
        let m = rng.compatible_matrix_along(u);
        let cm = ComplexMoebius::from_matrix(&m, u).unwrap();
        let w = rng.complex_along(u);
        let ours = fractional_linear(&m, &Extended::Finite(w)).unwrap();
        let theirs = complex_moebius_oracle(&cm, &Extended::Finite(to_complex(w, u).unwrap())).unwrap();
        oracle = oracle.max(extended_rel_distance(&ours, &theirs.map(|z| from_complex(z, u))));

        let (b, cc) = (rng.complex_along(u), rng.complex_along(u));
        let image = projectivize(&m.apply_spinor(&Spinor::new(b, cc)).unwrap()).unwrap();
        let (zb, zc) = (to_complex(b, u).unwrap(), to_complex(cc, u).unwrap());
        let z = (cm.alpha * zb + cm.beta * zc) / (cm.gamma * zb + cm.delta * zc);
        classical = classical.max(extended_rel_distance(&image, &Extended::Finite(from_complex(z, u))));

        let p = rng.point_s2();
        stereo = stereo.max(stereo_unproject(&stereo_project(&p)).distance(&p));
    }
    let mut c = Criterion::default();
    c.at_most("apply vs complex oracle, relative", oracle, TIGHT)
        .at_most("spinor action vs classical matrix action, relative", classical, TIGHT)
        .at_most("stereographic round trip", stereo, TIGHT);
    c
}

fn main() -> ExitCode {
    let start = Instant::now();
    let criteria: [(&str, fn() -> Criterion); 15] = [
        ("norm multiplicativity", || c1(Subspace::Octonionic)),
        ("alternativity", || c2(Subspace::Octonionic)),
        ("associator antisymmetric and imaginary", || c3(Subspace::Octonionic)),
        ("determinant is minus the Minkowski norm", || c4(Subspace::Octonionic)),
        ("spinor squares are null", || c5(Subspace::Octonionic)),
        ("catalog generators are well defined", || c6(Subspace::Octonionic)),
        ("nested action preserves the norm", || c7(Subspace::Octonionic)),
        ("spinor/vector compatibility", || c8(Subspace::Octonionic)),
        ("projective Möbius action is representative independent", || c9(Subspace::Octonionic)),
        ("associator inner-product lemma", c10),
        ("automorphism criterion for the candidate forms", c11),
        ("second-order agreement", c12),
        ("nested forms", c13),
        ("quaternionic restriction", c14),
        ("complex baseline", c15),
    ];
    let mut failed = 0;
    for (n, (title, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let c = f();
        let verdict = if c.pass() { "PASS" } else { "FAIL" };
        failed += usize::from(!c.pass());
        println!("{verdict} criterion {:>2}: {title} ({:.2?})", n + 1, t.elapsed());
        for check in &c.checks {
            println!("       {} {}", if check.pass { "ok  " } else { "FAIL" }, check.detail);
        }
    }
    let elapsed = start.elapsed();
    println!("{} of 15 criteria passed in {elapsed:.2?}", 15 - failed);
    if elapsed.as_secs() >= 60 {
        println!("FAIL runtime budget of 60 s exceeded");
        failed += 1;
    }
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
