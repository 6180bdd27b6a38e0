//! The five small reference instances, built in code.
//!
//! The same instances ship as JSON under `fixtures/` at the repository
//! root. Element names map to indices as follows: T1 `e=0`; LZ2 `a=0,b=1`;
//! CH2 `0,1`; Z2g `e=0,g=1`; ZS2 `z=0,a=1`.

use crate::semigroup::OrderedSemigroup;

fn build(table: &[&[usize]], leq: &[&[u8]]) -> OrderedSemigroup {
    let n = table.len();
    let table: Vec<Vec<usize>> = table.iter().map(|r| r.to_vec()).collect();
    let leq: Vec<Vec<bool>> = leq
        .iter()
        .map(|r| r.iter().map(|&v| v == 1).collect())
        .collect();
    OrderedSemigroup::validate(n, &table, &leq).expect("fixture is a valid ordered semigroup")
}

/// `{e}`, `e·e = e`.
pub fn t1() -> OrderedSemigroup {
    build(&[&[0]], &[&[1]])
}

/// Left-zero semigroup on `{a, b}`, discrete order.
pub fn lz2() -> OrderedSemigroup {
    build(&[&[0, 0], &[1, 1]], &[&[1, 0], &[0, 1]])
}

/// Two-element chain under `min`, `0 <= 1`.
pub fn ch2() -> OrderedSemigroup {
    build(&[&[0, 0], &[0, 1]], &[&[1, 1], &[0, 1]])
}

/// The group of order two, discrete order.
pub fn z2g() -> OrderedSemigroup {
    build(&[&[0, 1], &[1, 0]], &[&[1, 0], &[0, 1]])
}

/// Null semigroup `{z, a}` with every product `z`, `z <= a`.
pub fn zs2() -> OrderedSemigroup {
    build(&[&[0, 0], &[0, 0]], &[&[1, 1], &[0, 1]])
}

/// `(name, instance)` for every fixture, in catalog order.
pub fn catalog() -> Vec<(&'static str, OrderedSemigroup)> {
    vec![
        ("T1", t1()),
        ("LZ2", lz2()),
        ("CH2", ch2()),
        ("Z2g", z2g()),
        ("ZS2", zs2()),
    ]
}

pub fn all() -> Vec<OrderedSemigroup> {
    catalog().into_iter().map(|(_, s)| s).collect()
}

pub fn by_name(name: &str) -> Option<OrderedSemigroup> {
    catalog()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, s)| s)
}
