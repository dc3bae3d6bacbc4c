//! Products, the associator, inverses and the expression evaluator.

use octo_moebius::octonion::associator;
use octo_moebius::{expr, Octonion as O};

fn main() -> octo_moebius::Result<()> {
    println!("ij = {}", O::I * O::J);
    println!("(il)l = {}", O::IL * O::L);
    println!("[i, j, l] = {}", associator(O::I, O::J, O::L));
    println!("[i, j, k] = {}  (quaternionic, so zero)", associator(O::I, O::J, O::K));

    let x: O = "1 + 2i - 0.5jl + l".parse()?;
    let y = O::new([0.0, 1.0, -1.0, 0.0, 3.0, 0.0, 0.0, 0.5]);
    println!("|xy| = {:.12}  |x||y| = {:.12}", (x * y).norm(), x.norm() * y.norm());
    println!("x x⁻¹ = {}", x * x.inverse()?);

    for src in ["(i*j)*l - i*(j*l)", "[i, kl, l]", "exp(3.14159265358979*i/2)", "norm(1 + i + j + l)"] {
        println!("{src:>28}  =  {}", expr::eval(src)?);
    }
    Ok(())
}
