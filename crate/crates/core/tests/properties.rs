use proptest::prelude::*;

use octo_moebius::extended::{Extended, ExtendedOctonion};
use octo_moebius::g2::{automorphism_defect, AutomorphismForm, FormKind};
use octo_moebius::lorentz::generator_catalog;
use octo_moebius::minkowski::{Spinor, Vector10};
use octo_moebius::moebius::{op1_equal, OP1Point};
use octo_moebius::octonion::associator;
use octo_moebius::sample::Sampler;
use octo_moebius::verify::{draw_td_parameters, main_theorem_residual};
use octo_moebius::Octonion;

fn octonion() -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(-10.0..10.0f64).prop_map(Octonion::new)
}

fn vector10() -> impl Strategy<Value = Vector10> {
    prop::array::uniform10(-10.0..10.0f64).prop_map(Vector10)
}

fn rel(x: f64, size: f64) -> f64 {
    x / size.max(1.0)
}

proptest! {
    #[test]
    fn norm_is_multiplicative(a in octonion(), b in octonion()) {
        prop_assert!(rel(((a * b).norm() - a.norm() * b.norm()).abs(), a.norm() * b.norm()) < 1e-13);
    }

    #[test]
    fn moufang_identity(x in octonion(), y in octonion(), z in octonion()) {
        // (xy)(zx) = (x(yz))x
        let lhs = (x * y) * (z * x);
        let rhs = (x * (y * z)) * x;
        prop_assert!(rel((lhs - rhs).norm(), x.norm_sqr() * y.norm() * z.norm()) < 1e-13);
    }

    #[test]
    fn associator_is_alternating(x in octonion(), y in octonion()) {
        let size = x.norm_sqr() * y.norm();
        prop_assert!(rel(associator(x, y, x).norm(), size) < 1e-13);
        prop_assert!(rel(associator(x, x, y).norm(), size) < 1e-13);
    }

    #[test]
    fn display_parses_back(x in octonion()) {
        let back: Octonion = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn extended_json_round_trip(x in octonion(), inf in any::<bool>()) {
        let w: ExtendedOctonion = if inf { Extended::Infinity } else { Extended::Finite(x) };
        let text = serde_json::to_string(&w).unwrap();
        prop_assert_eq!(serde_json::from_str::<ExtendedOctonion>(&text).unwrap(), w);
    }

    #[test]
    fn determinant_is_minus_norm(v in vector10()) {
        let m = v.to_matrix();
        prop_assert!(rel((m.det() + v.minkowski_norm()).abs(), m.scale()) < 1e-13);
    }

    #[test]
    fn spinor_squares_are_null(b in octonion(), c in octonion()) {
        let a = Spinor::new(b, c).square();
        prop_assert!(rel(a.det().abs(), a.scale()) < 1e-13);
    }

    #[test]
    fn catalog_preserves_the_norm(idx in 0usize..59, v in vector10()) {
        let catalog = generator_catalog();
        let (name, g) = &catalog[idx];
        let a = v.to_matrix();
        let b = g.apply_vector(&a).unwrap();
        prop_assert!(rel((b.det() - a.det()).abs(), b.scale().max(a.scale())) < 1e-12, "{}", name);
    }

    #[test]
    fn main_theorem(seed in any::<u64>()) {
        let mut rng = Sampler::new(seed);
        let m = rng.compatible_matrix();
        let p = OP1Point::new(rng.octonion(), rng.nonzero_octonion()).unwrap();
        prop_assert!(main_theorem_residual(&m, &p, rng.nonzero_octonion()) < 1e-10);
    }

    #[test]
    fn rescaled_representatives_are_equal(b in octonion(), c in octonion(), xi in octonion()) {
        prop_assume!(c.norm() > 1e-3 && xi.norm() > 1e-3);
        let p = OP1Point::new(b, c).unwrap();
        prop_assert!(op1_equal(&p, &p.rescaled(xi).unwrap()));
    }

    #[test]
    fn criterion_parameters_give_automorphisms(seed in any::<u64>()) {
        let mut rng = Sampler::new(seed);
        let (a, b) = draw_td_parameters(&mut rng);
        for kind in FormKind::ALL {
            let f = AutomorphismForm::new(kind, a, b).unwrap();
            prop_assert!(automorphism_defect(&f, 10, seed) < 1e-10);
        }
    }
}

#[test]
fn catalog_size() {
    assert_eq!(generator_catalog().len(), 59);
}
