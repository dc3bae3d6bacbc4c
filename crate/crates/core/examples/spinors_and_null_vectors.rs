//! Vectors in 10D Minkowski space as Hermitian matrices, spinors squaring to
//! null vectors, and the light cone projected onto the celestial sphere.

use octo_moebius::minkowski::{lightcone_project, stereo_unproject, Spinor, Vector10};
use octo_moebius::Octonion as O;

fn main() -> octo_moebius::Result<()> {
    let v = Vector10([2.0, 0.5, 0.0, -1.0, 0.0, 0.0, 0.3, 0.0, 0.0, 1.0]);
    let m = v.to_matrix();
    println!("v = {:?}", v.0);
    println!("norm = {}, -det = {}", v.minkowski_norm(), -m.det());

    let psi = Spinor::new(O::ONE + O::L, O::I * 0.5 - O::JL);
    let a = psi.square();
    println!("\nψψ† has det {:e} (null)", a.det());
    let back = a.null_factor()?;
    println!("refactored: b = {}, c = {}", back.b, back.c);
    println!("(refactored)² matches: {:e}", back.square().max_abs_diff(&a));

    // a null vector in the t,x,y,z slice lands on the Riemann sphere
    let n = Vector10::from_txyz(1.0, 0.6, 0.0, 0.8);
    let w = lightcone_project(&n)?;
    println!("\nnull direction (1, 0.6, 0, 0.8) ↦ {w:?}");
    println!("back on S²: {:?}", stereo_unproject(&w));
    Ok(())
}
