//! Brute-force oracles, independent of the search engine under test.
#![allow(dead_code)] // each test target compiles its own copy

use narylab::{ClassSpec, Elem, OpTable};

/// Every table for the given shape, by direct odometer over value vectors.
pub fn all_tables(m: usize, arity: usize) -> Vec<OpTable> {
    let cells = m.pow(arity as u32);
    let mut values = vec![0usize; cells];
    let mut out = Vec::new();
    loop {
        out.push(OpTable::from_values(m, arity, values.clone()).unwrap());
        let mut pos = cells;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            values[pos] += 1;
            if values[pos] < m {
                break;
            }
            values[pos] = 0;
        }
    }
}

/// Reference class filter over the full table space.
pub fn brute_filter(m: usize, arity: usize, class: &ClassSpec) -> Vec<OpTable> {
    all_tables(m, arity)
        .into_iter()
        .filter(|t| class.matches(t))
        .collect()
}

/// Hand-rolled binary associativity check (no library predicate involved).
pub fn assoc_binary_direct(g: &OpTable) -> bool {
    let m = g.size();
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                let xy = g.apply(&[x, y]);
                let yz = g.apply(&[y, z]);
                if g.apply(&[xy, z]) != g.apply(&[x, yz]) {
                    return false;
                }
            }
        }
    }
    true
}

/// Left fold of `g` over every tuple of the given arity; the naive
/// counterpart of `derive` without its associativity gate.
pub fn fold_table(g: &OpTable, arity: usize) -> OpTable {
    OpTable::from_fn(g.size(), arity, |t| {
        t[1..].iter().fold(t[0], |acc, &x| g.apply(&[acc, x]))
    })
    .unwrap()
}

/// Naive reduction search: every binary table, kept when it is associative
/// (by the direct triple check) and folds to `f`.
pub fn naive_reductions(f: &OpTable) -> Vec<OpTable> {
    all_tables(f.size(), 2)
        .into_iter()
        .filter(|g| assoc_binary_direct(g) && fold_table(g, f.arity()) == *f)
        .collect()
}

/// All 2^7 property-flag combinations.
pub fn all_class_specs() -> Vec<ClassSpec> {
    let mut out = Vec::new();
    for bits in 0u32..128 {
        out.push(ClassSpec {
            associative: bits & 1 != 0,
            idempotent: bits & 2 != 0,
            symmetric: bits & 4 != 0,
            quasitrivial: bits & 8 != 0,
            nondecreasing: bits & 16 != 0,
            monotone: bits & 32 != 0,
            has_neutral: bits & 64 != 0,
        });
    }
    out
}

pub fn table_of(m: usize, arity: usize, values: &[Elem]) -> OpTable {
    OpTable::from_values(m, arity, values.to_vec()).unwrap()
}
