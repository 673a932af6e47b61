//! Extremality certificates: does the operation depend only on the minimum
//! and maximum of its arguments?

use std::collections::BTreeMap;

use crate::chain::Elem;
use crate::table::{next_tuple_lex, OpTable};

/// Which reading of extremality to certify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExtremalMode {
    /// Each tuple may independently match `G(min, max)` or `G(max, min)`.
    #[default]
    Either,
    /// Every tuple must match the single orientation `G(min, max)`.
    GlobalMinMax,
}

/// Find a binary `G` certifying that `F` is extremal in the requested mode,
/// or `None` when no such table exists.
///
/// Tuples are grouped by `(min, max)`. Constant tuples force the diagonal.
/// In [`ExtremalMode::GlobalMinMax`] each group must realize a single value,
/// which becomes `G(min, max)`; cells with `a > c` mirror `G(c, a)` so the
/// returned table is total. In [`ExtremalMode::Either`] a group may realize
/// two values, assigned to the slots `G(a, c)` (value of the group's first
/// tuple in lexicographic order) and `G(c, a)`; three or more values in one
/// group rule out every assignment.
pub fn extremal_witness(f: &OpTable, mode: ExtremalMode) -> Option<OpTable> {
    let m = f.size();
    let n = f.arity();

    // values realized per (min, max) group, in first-seen lex-tuple order
    let mut groups: BTreeMap<(Elem, Elem), Vec<Elem>> = BTreeMap::new();
    let mut tuple = vec![0; n];
    loop {
        let lo = *tuple.iter().min().unwrap();
        let hi = *tuple.iter().max().unwrap();
        let value = f.apply(&tuple);
        let seen = groups.entry((lo, hi)).or_default();
        if !seen.contains(&value) {
            seen.push(value);
        }
        if !next_tuple_lex(&mut tuple, m) {
            break;
        }
    }

    let mut cells: Vec<Option<Elem>> = vec![None; m * m];
    for (&(a, c), values) in &groups {
        match (mode, values.as_slice()) {
            (_, [v]) => {
                cells[a * m + c] = Some(*v);
                if cells[c * m + a].is_none() {
                    cells[c * m + a] = Some(*v);
                }
            }
            (ExtremalMode::Either, [v1, v2]) => {
                debug_assert!(a < c, "constant tuples force singleton diagonal groups");
                cells[a * m + c] = Some(*v1);
                cells[c * m + a] = Some(*v2);
            }
            _ => return None,
        }
    }
    // cells untouched by any group (possible only off-diagonal for n = 1)
    // default to the mirrored or diagonal value
    let values: Vec<Elem> = (0..m * m)
        .map(|k| {
            let (a, c) = (k / m, k % m);
            cells[k]
                .or(cells[c * m + a])
                .unwrap_or_else(|| f.apply(&vec![a.min(c); n]))
        })
        .collect();
    let g = OpTable::from_values(m, 2, values).expect("values come from the carrier");

    // paranoia-free guarantee: the witness satisfies the defining equation
    debug_assert!({
        let mut ok = true;
        let mut t = vec![0; n];
        loop {
            let lo = *t.iter().min().unwrap();
            let hi = *t.iter().max().unwrap();
            let v = f.apply(&t);
            let fits = match mode {
                ExtremalMode::GlobalMinMax => v == g.apply(&[lo, hi]),
                ExtremalMode::Either => v == g.apply(&[lo, hi]) || v == g.apply(&[hi, lo]),
            };
            if !fits {
                ok = false;
                break;
            }
            if !next_tuple_lex(&mut t, m) {
                break;
            }
        }
        ok
    });
    Some(g)
}
