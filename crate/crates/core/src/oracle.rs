//! Independent verification layer.
//!
//! The multiplication table here is derived symbolically, on signed basis
//! indices rather than floats, by doubling the quaternion unit table. Products
//! evaluated through it share no code with [`Octonion`]'s `Mul`, so the two
//! can check each other.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::octonion::{Octonion, UNIT_NAMES};

/// `e_q · e_r = sign · e_s`, indices 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub q: u8,
    pub r: u8,
    pub sign: i8,
    pub s: u8,
}

/// Signed quaternion unit: index 0..4 over `{1, i, j, k}`.
#[derive(Clone, Copy)]
struct SignedUnit(i8, u8);

fn quaternion_unit_product(a: u8, b: u8) -> SignedUnit {
    match (a, b) {
        (0, _) => SignedUnit(1, b),
        (_, 0) => SignedUnit(1, a),
        _ if a == b => SignedUnit(-1, 0),
        _ => {
            let c = 6 - a - b;
            let cyclic = matches!((a, b), (1, 2) | (2, 3) | (3, 1));
            SignedUnit(if cyclic { 1 } else { -1 }, c)
        }
    }
}

fn quaternion_unit_conj(a: u8) -> i8 {
    if a == 0 {
        1
    } else {
        -1
    }
}

/// Octonion unit index (0-based) as (half, quaternion index); the second
/// half holds `(l, il, jl, kl)`.
fn halves(q: u8) -> (u8, u8) {
    if q < 4 {
        (0, q)
    } else {
        (1, 7 - q)
    }
}

fn from_halves(half: u8, idx: u8) -> u8 {
    if half == 0 {
        idx
    } else {
        7 - idx
    }
}

/// `(x₁ + x₂ℓ)(y₁ + y₂ℓ) = (x₁y₁ − ȳ₂x₂) + (y₂x₁ + x₂ȳ₁)ℓ` on single units.
fn unit_product(q: u8, r: u8) -> (i8, u8) {
    let ((hq, a), (hr, b)) = (halves(q), halves(r));
    let (sign, half, SignedUnit(s, idx)) = match (hq, hr) {
        (0, 0) => (1, 0, quaternion_unit_product(a, b)),
        (0, _) => (1, 1, quaternion_unit_product(b, a)),
        (_, 0) => (quaternion_unit_conj(b), 1, quaternion_unit_product(a, b)),
        _ => (-quaternion_unit_conj(b), 0, quaternion_unit_product(b, a)),
    };
    (sign * s, from_halves(half, idx))
}

/// The full 8×8 table, indexed 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationTable {
    cells: [[(i8, u8); 8]; 8],
}

impl MultiplicationTable {
    pub fn from_entries(entries: &[TableEntry]) -> Result<Self> {
        let mut cells = [[(0i8, 0u8); 8]; 8];
        let mut seen = [[false; 8]; 8];
        for e in entries {
            let ok = (1..=8).contains(&e.q)
                && (1..=8).contains(&e.r)
                && (1..=8).contains(&e.s)
                && e.sign.abs() == 1;
            if !ok {
                return Err(Error::MalformedTable(format!("bad entry {e:?}")));
            }
            let (q, r) = (e.q as usize - 1, e.r as usize - 1);
            if seen[q][r] {
                return Err(Error::MalformedTable(format!("duplicate entry {e:?}")));
            }
            seen[q][r] = true;
            cells[q][r] = (e.sign, e.s - 1);
        }
        if seen.iter().flatten().any(|s| !s) {
            return Err(Error::MalformedTable("missing entries".into()));
        }
        Ok(MultiplicationTable { cells })
    }

    pub fn entries(&self) -> Vec<TableEntry> {
        let mut out = Vec::with_capacity(64);
        for q in 0..8 {
            for r in 0..8 {
                let (sign, s) = self.cells[q][r];
                out.push(TableEntry { q: q as u8 + 1, r: r as u8 + 1, sign, s: s + 1 });
            }
        }
        out
    }

    /// `(sign, s)` with `e_q e_r = sign·e_s`, all 0-based.
    pub fn product(&self, q: usize, r: usize) -> (i8, usize) {
        let (sign, s) = self.cells[q][r];
        (sign, s as usize)
    }

    /// `Σ x_q y_r sign(q,r) e_{s(q,r)}`.
    pub fn mul(&self, x: &Octonion, y: &Octonion) -> Octonion {
        let mut out = [0.0; 8];
        for q in 0..8 {
            if x[q] == 0.0 {
                continue;
            }
            for r in 0..8 {
                let (sign, s) = self.product(q, r);
                out[s] += f64::from(sign) * x[q] * y[r];
            }
        }
        Octonion::new(out)
    }

    /// Rows of signed 1-based indices, e.g. `-1` for `e_q e_q = −e₁`; with
    /// `names`, unit names instead.
    pub fn render_grid(&self, names: bool) -> String {
        let cell = |sign: i8, s: u8| -> String {
            let body = if names { UNIT_NAMES[s as usize].to_string() } else { (s + 1).to_string() };
            format!("{}{}", if sign < 0 { "-" } else { "+" }, body)
        };
        let mut out = String::new();
        if names {
            out.push_str(&format!("{:>4}", ""));
            for n in UNIT_NAMES {
                out.push_str(&format!("{n:>4}"));
            }
            out.push('\n');
        }
        for q in 0..8 {
            if names {
                out.push_str(&format!("{:>4}", UNIT_NAMES[q]));
            }
            for r in 0..8 {
                let (sign, s) = self.cells[q][r];
                out.push_str(&format!("{:>4}", cell(sign, s)));
            }
            out.push('\n');
        }
        out
    }
}

/// The table derived from the doubling formula.
pub fn generate_table() -> MultiplicationTable {
    let mut cells = [[(0i8, 0u8); 8]; 8];
    for (q, row) in cells.iter_mut().enumerate() {
        for (r, cell) in row.iter_mut().enumerate() {
            *cell = unit_product(q as u8, r as u8);
        }
    }
    MultiplicationTable { cells }
}

/// The 7 oriented lines `(a, b, c)` with `e_a e_b = e_c` (1-based), each
/// rotated so its smallest index comes first.
pub fn fano_triples(table: &MultiplicationTable) -> Result<Vec<[u8; 3]>> {
    let bad = |msg: String| Err(Error::MalformedTable(msg));
    for q in 0..8 {
        if table.product(0, q) != (1, q) || table.product(q, 0) != (1, q) {
            return bad(format!("e1 is not neutral on e{}", q + 1));
        }
    }
    let mut lines: Vec<[u8; 3]> = Vec::new();
    for q in 1..8 {
        if table.product(q, q) != (-1, 0) {
            return bad(format!("e{} does not square to -1", q + 1));
        }
        for r in (q + 1)..8 {
            let (sign, s) = table.product(q, r);
            let (rs, rq) = table.product(r, q);
            if rq != s || rs != -sign || s == 0 || s == q || s == r {
                return bad(format!("e{} e{} is not an antisymmetric imaginary product", q + 1, r + 1));
            }
            let (a, b) = if sign > 0 { (q, r) } else { (r, q) };
            let mut line = [a as u8 + 1, b as u8 + 1, s as u8 + 1];
            let min = line.iter().position(|x| *x == *line.iter().min().unwrap()).unwrap();
            line.rotate_left(min);
            if !lines.contains(&line) {
                lines.push(line);
            }
        }
    }
    for line in &lines {
        let [a, b, c] = line.map(|x| x as usize - 1);
        let cyclic = [(a, b, c), (b, c, a), (c, a, b)];
        if cyclic.iter().any(|&(x, y, z)| table.product(x, y) != (1, z)) {
            return bad(format!("line {line:?} is not cyclically closed"));
        }
    }
    if lines.len() != 7 {
        return bad(format!("found {} lines, expected 7", lines.len()));
    }
    lines.sort();
    Ok(lines)
}

/// One parenthesization of a word `x₀ x₁ … x_{n−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BracketTree {
    Leaf(usize),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn leaves(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 1,
            BracketTree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    pub fn eval(&self, table: &MultiplicationTable, word: &[Octonion]) -> Octonion {
        match self {
            BracketTree::Leaf(n) => word[*n],
            BracketTree::Node(l, r) => table.mul(&l.eval(table, word), &r.eval(table, word)),
        }
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf(n) => write!(f, "x{n}"),
            BracketTree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

fn trees(lo: usize, hi: usize) -> Vec<BracketTree> {
    if hi - lo == 1 {
        return vec![BracketTree::Leaf(lo)];
    }
    let mut out = Vec::new();
    for split in (lo + 1)..hi {
        for l in trees(lo, split) {
            for r in trees(split, hi) {
                out.push(BracketTree::Node(Box::new(l.clone()), Box::new(r)));
            }
        }
    }
    out
}

pub const MAX_WORD_LEN: usize = 6;

/// Every full binary tree over `n` leaves (Catalan(n−1) of them).
pub fn bracketings(n: usize) -> Result<Vec<BracketTree>> {
    if n > MAX_WORD_LEN {
        return Err(Error::WordTooLong(n));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(trees(0, n))
}

/// The word evaluated under every bracketing, in [`bracketings`] order.
pub fn eval_all_bracketings(word: &[Octonion]) -> Result<Vec<Octonion>> {
    let table = generate_table();
    Ok(bracketings(word.len())?
        .iter()
        .map(|t| t.eval(&table, word))
        .collect())
}

/// One fixture line: a word, a bracketing, and its table-evaluated value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fixture {
    pub inputs: Vec<Octonion>,
    pub bracketing: String,
    pub value: Octonion,
}

/// Fixtures for a few words: two-direction words (all values equal) and
/// words mixing three directions (values differ by associators).
pub fn standard_fixtures() -> Vec<Fixture> {
    let (i, j, k, l) = (Octonion::I, Octonion::J, Octonion::K, Octonion::L);
    let a = (Octonion::ONE + i + l) * (1.0 / 3f64.sqrt());
    let words: Vec<Vec<Octonion>> = vec![
        vec![i, j],
        vec![i, j, l],
        vec![i, j, i, j, i],
        vec![Octonion::IL, Octonion::JL, Octonion::KL, l],
        vec![a, j, a, j, a],
        vec![j, k, l, i],
    ];
    let table = generate_table();
    let mut out = Vec::new();
    for word in words {
        for tree in bracketings(word.len()).expect("short word") {
            out.push(Fixture {
                value: tree.eval(&table, &word),
                bracketing: tree.to_string(),
                inputs: word.clone(),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::{BasisUnit, Octonion as O};

    #[test]
    fn table_examples() {
        let t = generate_table();
        assert_eq!(t.product(1, 2), (1, 3)); // ij = k
        for q in 1..8 {
            assert_eq!(t.product(q, q), (-1, 0));
        }
        assert_eq!(t.product(6, 7), (-1, 1)); // (il)l = −i
        assert_eq!(t.entries().len(), 64);
        assert_eq!(
            t.entries()[1 * 8 + 2],
            TableEntry { q: 2, r: 3, sign: 1, s: 4 }
        );
    }

    #[test]
    fn table_matches_octonion_product_bit_exactly() {
        let t = generate_table();
        for p in BasisUnit::all() {
            for q in BasisUnit::all() {
                let (x, y) = (p.to_octonion(), q.to_octonion());
                assert_eq!(t.mul(&x, &y), x * y, "{p} {q}");
            }
        }
    }

    #[test]
    fn fano_lines() {
        let lines = fano_triples(&generate_table()).unwrap();
        assert_eq!(lines.len(), 7);
        assert!(lines.contains(&[2, 3, 4]));
        for p in 2..=8u8 {
            assert_eq!(lines.iter().filter(|l| l.contains(&p)).count(), 3);
        }
        for (n, a) in lines.iter().enumerate() {
            for b in &lines[n + 1..] {
                assert_eq!(a.iter().filter(|x| b.contains(x)).count(), 1);
            }
        }
    }

    #[test]
    fn malformed_tables_are_rejected() {
        let mut entries = generate_table().entries();
        entries[1 * 8 + 2].sign = -1;
        let t = MultiplicationTable::from_entries(&entries).unwrap();
        assert!(matches!(fano_triples(&t), Err(Error::MalformedTable(_))));
        entries.pop();
        assert!(MultiplicationTable::from_entries(&entries).is_err());
    }

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| bracketings(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42]);
        assert_eq!(bracketings(7), Err(Error::WordTooLong(7)));
        assert_eq!(bracketings(3).unwrap()[0].to_string(), "(x0 (x1 x2))");
    }

    #[test]
    fn bracketing_examples() {
        assert_eq!(eval_all_bracketings(&[O::I, O::J]).unwrap(), vec![O::K]);
        let vals = eval_all_bracketings(&[O::I, O::J, O::I, O::J, O::I]).unwrap();
        assert_eq!(vals.len(), 14);
        assert!(vals.iter().all(|v| *v == vals[0]));
        let vals = eval_all_bracketings(&[O::I, O::J, O::L]).unwrap();
        assert_eq!(vals.len(), 2);
        // i(jl) − (ij)l = −[i, j, l]
        assert_eq!(vals[0] - vals[1], -crate::octonion::associator(O::I, O::J, O::L));
    }

    #[test]
    fn fixtures_round_trip_through_json() {
        let fx = standard_fixtures();
        assert_eq!(fx.len(), 1 + 2 + 14 + 5 + 14 + 5);
        let line = serde_json::to_string(&fx[1]).unwrap();
        assert_eq!(serde_json::from_str::<Fixture>(&line).unwrap(), fx[1]);
    }
}
