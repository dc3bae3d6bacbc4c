//! The conformal composition on R⁸: translation, inversion, dilation,
//! special conformal shift, then G2 and octonionic rotations.

use octo_moebius::g2::{apply_gt, ConformalParams};
use octo_moebius::Octonion as O;

fn main() -> octo_moebius::Result<()> {
    let x = O::new([0.3, 1.0, -0.5, 0.0, 2.0, 0.0, 0.25, -1.0]);

    let dilate = ConformalParams { lambda: 2.0, ..ConformalParams::IDENTITY };
    println!("λ = 2 gives x/2:  {}", apply_gt(&dilate, x)?);
    let shift = ConformalParams { translation: O::L, ..ConformalParams::IDENTITY };
    println!("A = l gives x − l: {}", apply_gt(&shift, x)?);

    let s = std::f64::consts::FRAC_1_SQRT_2;
    let general = ConformalParams {
        lambda: 1.5,
        translation: O::I * 0.2,
        special: O::JL * 0.1,
        k: (O::J + O::K) * s,
        l: (O::ONE + O::IL) * s,
        u: O::ONE + O::KL,
        v: O::L - O::real(0.5),
        swap_kl: false,
    };
    let y = O::new([-1.0, 0.0, 0.5, 0.5, 0.0, 1.0, 0.0, 0.0]);
    let (gx, gy) = (apply_gt(&general, x)?, apply_gt(&general, y)?);
    // conformal: distances scale by a factor depending on the points
    println!("general:      {gx}");
    println!("|g(x) − g(y)| = {:.6}, |x − y| = {:.6}", (gx - gy).norm(), (x - y).norm());
    println!("at the pole:  {:?}", apply_gt(&general, general.translation).err());
    Ok(())
}
