//! Seeded random draws.
//!
//! Every stream is a `ChaCha8Rng` seeded with `seed_from_u64`, which gives
//! the same sequence on every platform. Coefficients are uniform on
//! `[−1, 1)`.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lorentz::{Generator, NestedChain, TransformMatrix};
use crate::minkowski::{HermitianMatrix, PointS2, Spinor, Vector10};
use crate::octonion::{gram_schmidt, Octonion};

/// Which subalgebra the draws are confined to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Subspace {
    #[default]
    Octonionic,
    /// `span{1, i, j, k}`.
    Quaternionic,
}

impl Subspace {
    pub fn dim(self) -> usize {
        match self {
            Subspace::Octonionic => 8,
            Subspace::Quaternionic => 4,
        }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
    subspace: Subspace,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self::with_subspace(seed, Subspace::Octonionic)
    }

    pub fn with_subspace(seed: u64, subspace: Subspace) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), subspace }
    }

    pub fn subspace(&self) -> Subspace {
        self.subspace
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.random_range(lo..hi)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.random_range(0..n)
    }

    pub fn sign(&mut self) -> f64 {
        if self.rng.random_bool(0.5) { 1.0 } else { -1.0 }
    }

    pub fn octonion(&mut self) -> Octonion {
        let dim = self.subspace.dim();
        let mut c = [0.0; 8];
        for x in c.iter_mut().take(dim) {
            *x = self.uniform(-1.0, 1.0);
        }
        Octonion::new(c)
    }

    /// Norm bounded below by 0.1.
    pub fn nonzero_octonion(&mut self) -> Octonion {
        loop {
            let x = self.octonion();
            if x.norm() > 0.1 {
                return x;
            }
        }
    }

    pub fn unit_octonion(&mut self) -> Octonion {
        self.nonzero_octonion().normalized().expect("nonzero")
    }

    pub fn imaginary(&mut self) -> Octonion {
        self.octonion().imag_part()
    }

    pub fn imaginary_unit(&mut self) -> Octonion {
        loop {
            let v = self.imaginary();
            if v.norm() > 0.1 {
                return v.normalized().expect("nonzero");
            }
        }
    }

    /// A unit imaginary orthogonal to `1` and to every element of `others`.
    pub fn imaginary_unit_orthogonal_to(&mut self, others: &[Octonion]) -> Octonion {
        let mut span = vec![Octonion::ONE];
        span.extend_from_slice(others);
        let basis = gram_schmidt(&span, 1e-9);
        loop {
            let mut v = self.imaginary();
            for q in &basis {
                v -= *q * v.inner(q);
            }
            if v.norm() > 0.1 {
                return v.normalized().expect("nonzero");
            }
        }
    }

    /// `re + im·u` with `re, im` uniform.
    pub fn complex_along(&mut self, u: Octonion) -> Octonion {
        let re = self.uniform(-1.0, 1.0);
        let im = self.uniform(-1.0, 1.0);
        Octonion::complex(re, im, u)
    }

    pub fn vector10(&mut self) -> Vector10 {
        let mut v = [0.0; 10];
        for (n, x) in v.iter_mut().enumerate() {
            let in_range = match self.subspace {
                Subspace::Octonionic => true,
                Subspace::Quaternionic => n < 5 || n == 9,
            };
            if in_range {
                *x = self.uniform(-1.0, 1.0);
            }
        }
        Vector10(v)
    }

    pub fn hermitian(&mut self) -> HermitianMatrix {
        self.vector10().to_matrix()
    }

    pub fn spinor(&mut self) -> Spinor {
        Spinor::new(self.octonion(), self.octonion())
    }

    pub fn point_s2(&mut self) -> PointS2 {
        loop {
            let (x, y, z) = (self.uniform(-1.0, 1.0), self.uniform(-1.0, 1.0), self.uniform(-1.0, 1.0));
            let n = (x * x + y * y + z * z).sqrt();
            if n > 0.1 && n <= 1.0 {
                return PointS2 { x: x / n, y: y / n, z: z / n };
            }
        }
    }

    /// A complex matrix along a random direction with determinant `±1`.
    pub fn compatible_matrix(&mut self) -> TransformMatrix {
        let u = self.imaginary_unit();
        self.compatible_matrix_along(u)
    }

    pub fn compatible_matrix_along(&mut self, u: Octonion) -> TransformMatrix {
        loop {
            let m = TransformMatrix::new(
                self.complex_along(u),
                self.complex_along(u),
                self.complex_along(u),
                self.complex_along(u),
            );
            let det = m.alpha * m.delta - m.beta * m.gamma;
            if det.norm() < 0.2 {
                continue;
            }
            // Divide the top row by det (optionally negated): the new
            // determinant is ±1.
            let inv = det.inverse().expect("nonzero") * self.sign();
            return TransformMatrix::new(inv * m.alpha, inv * m.beta, m.gamma, m.delta);
        }
    }

    /// A chain of between 1 and `max_depth` catalog generators.
    pub fn catalog_chain(&mut self, catalog: &[(String, Generator)], max_depth: usize) -> NestedChain {
        let depth = 1 + self.index(max_depth);
        (0..depth).fold(NestedChain::default(), |acc, _| {
            let (_, g) = &catalog[self.index(catalog.len())];
            acc.then(&g.to_chain())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Sampler::new(42);
        let mut b = Sampler::new(42);
        for _ in 0..10 {
            assert_eq!(a.octonion(), b.octonion());
        }
    }

    #[test]
    fn quaternionic_draws_stay_in_h() {
        let mut s = Sampler::with_subspace(3, Subspace::Quaternionic);
        for _ in 0..20 {
            assert!(s.octonion().coeffs()[4..].iter().all(|c| *c == 0.0));
            assert!(s.compatible_matrix().entries().iter().all(|x| x.coeffs()[4..].iter().all(|c| *c == 0.0)));
            assert!(s.vector10().0[5..9].iter().all(|c| *c == 0.0));
        }
    }

    #[test]
    fn compatible_draws_are_compatible() {
        let mut s = Sampler::new(9);
        for _ in 0..50 {
            let m = s.compatible_matrix();
            assert!(m.is_compatible());
            assert!((m.det_mmdagger() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn orthogonal_units() {
        let mut s = Sampler::new(1);
        let c = s.imaginary_unit();
        let d = s.imaginary_unit_orthogonal_to(&[c]);
        assert!(c.inner(&d).abs() < 1e-14);
        assert!((d.norm() - 1.0).abs() < 1e-14);
        assert_eq!(d.real_part(), 0.0);
    }
}
