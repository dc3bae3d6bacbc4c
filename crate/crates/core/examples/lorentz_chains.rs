//! Finite Lorentz transformations: when a single octonionic matrix acts on
//! vectors, nested chains of flips, and the generator catalog.

use octo_moebius::lorentz::{boost, flip, generator_catalog, transverse_rotation, TransformMatrix};
use octo_moebius::minkowski::Vector10;
use octo_moebius::Octonion as O;

fn main() -> octo_moebius::Result<()> {
    let v = Vector10([2.0, 0.5, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, -1.0, 0.3]);
    println!("norm(v) = {}", v.minkowski_norm());

    let b = boost(0.8).apply_to_vector10(&v)?;
    println!("boost:     norm = {:.12}", b.minkowski_norm());

    // two flips make a rotation in the (i, j) plane
    let r = transverse_rotation(O::I, O::J, 0.7).apply_to_vector10(&v)?;
    println!("rotation:  norm = {:.12}  {:?}", r.minkowski_norm(), r.0);

    let f = flip(O::L);
    println!("flip(l) well defined: {}", f.is_well_defined());

    // diag(i, l) depends on where the brackets go once `a` leaves ⟨i, l⟩
    let m = TransformMatrix::diagonal(O::I, O::L);
    let inside = Vector10([1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).to_matrix();
    let outside = Vector10([1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]).to_matrix();
    println!("\ndiag(i, l) on a = i: residual {}", m.parenthesization_residual(&inside));
    println!("diag(i, l) on a = j: residual {}", m.parenthesization_residual(&outside));
    println!("apply on a = j: {:?}", m.apply_vector(&outside).map(|_| ()));

    let catalog = generator_catalog();
    let worst = catalog
        .iter()
        .map(|(_, g)| {
            let w = g.apply_vector(&v.to_matrix()).unwrap();
            (w.det() - v.to_matrix().det()).abs()
        })
        .fold(0.0, f64::max);
    println!("\n{} generators, worst det drift {worst:e}", catalog.len());
    Ok(())
}
