//! Möbius maps on the extended octonions and their projective counterpart on
//! spinors, including a map whose entries are too generic to be consistent.

use octo_moebius::lorentz::TransformMatrix;
use octo_moebius::moebius::{compose_nested, op1_equal, MoebiusParams, OP1Point};
use octo_moebius::verify::{incompatible_moebius_witness, main_theorem_residual};
use octo_moebius::{ExtendedOctonion, Octonion as O};

fn main() -> octo_moebius::Result<()> {
    // entries in the complex subalgebra spanned by kl, with real determinant
    let u = O::KL;
    let m = TransformMatrix::new(O::complex(1.0, 1.0, u), O::complex(0.0, 2.0, u), O::complex(0.5, 0.0, u), O::ONE);
    let f = MoebiusParams::new(m)?;
    println!("det = {}", m.complex_det()?);

    let w = ExtendedOctonion::Finite(O::I - O::JL * 0.5);
    let image = f.apply(&w)?;
    println!("f(w) = {image}");
    println!("f(∞) = {}", f.apply(&ExtendedOctonion::Infinity)?);

    let p = OP1Point::from_extended(&w);
    let q = f.apply_projective(&p)?;
    println!("projective image agrees: {}", op1_equal(&q, &OP1Point::from_extended(&image)));
    println!("main theorem residual (ξ = 1 + l): {:e}", main_theorem_residual(&m, &p, O::ONE + O::L));

    let chain = [f, f];
    println!("f(f(w)) = {}", compose_nested(&chain, &w)?);

    let (bad, p) = incompatible_moebius_witness();
    println!("\ngeneric entries: MoebiusParams::new -> {:?}", MoebiusParams::new(bad).err());
    println!("residual if used anyway: {:.3}", main_theorem_residual(&bad, &p, O::ONE));
    Ok(())
}
