//! The symbolic multiplication table, its Fano lines, and every bracketing of
//! a short word evaluated independently of the float product.

use octo_moebius::octonion::UNIT_NAMES;
use octo_moebius::oracle::{bracketings, fano_triples, generate_table};
use octo_moebius::Octonion as O;

fn main() -> octo_moebius::Result<()> {
    let table = generate_table();
    print!("{}", table.render_grid(true));

    println!("\nquaternionic triples (1-based):");
    for t in fano_triples(&table)? {
        let names: Vec<_> = t.iter().map(|&q| UNIT_NAMES[q as usize - 1]).collect();
        println!("  {t:?}  {}", names.join(" "));
    }

    // both products must agree on arbitrary inputs
    let x = O::new([0.5, -1.0, 2.0, 0.0, 0.25, 1.0, -3.0, 0.75]);
    let y = O::new([1.0, 0.0, -0.5, 1.5, 2.0, 0.0, 1.0, -1.0]);
    println!("\ntable vs doubling product: {:e}", table.mul(&x, &y).max_abs_diff(&(x * y)));

    let word = [O::I, O::J, O::L, O::K];
    println!("\nbracketings of i j l k:");
    for tree in bracketings(word.len())? {
        println!("  {tree:<16} {}", tree.eval(&table, &word));
    }
    Ok(())
}
