//! Decision procedures for the structural predicates of an operation table.
//!
//! Every predicate either holds or fails with a [`Witness`] that pins down a
//! concrete violation. Witnesses are deterministic: each predicate scans its
//! search space in a fixed documented order and reports the first violation,
//! so two runs (and two implementations following the same order) agree.
//!
//! Scan orders. Cell-pair scans (`quasitrivial`, associativity instances)
//! run in lexicographic tuple order with the first coordinate most
//! significant. The coordinate-local scans (`symmetric`, `nondecreasing`)
//! run in colexicographic order (first coordinate fastest), which is the
//! order their witnesses are quoted in throughout the test corpus.

use crate::chain::Elem;
use crate::table::{next_tuple_colex, next_tuple_lex, OpTable};

/// Positions, coordinates and windows in witnesses are 1-based, matching the
/// convention `x₁, …, xₙ` used in reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// Collapsing the window starting at `window+1` disagrees with
    /// collapsing the leftmost window on the same `(2n−1)`-tuple.
    Associativity {
        tuple: Vec<Elem>,
        window: usize,
        leftmost: Elem,
        grouped: Elem,
    },
    /// `F(x,…,x) = value ≠ x`.
    Idempotency { element: Elem, value: Elem },
    /// Swapping adjacent coordinates `position, position+1` changes the value.
    Symmetry {
        tuple: Vec<Elem>,
        position: usize,
        value: Elem,
        swapped: Elem,
    },
    /// `value = F(tuple)` is not among the coordinates of `tuple`.
    Quasitriviality { tuple: Vec<Elem>, value: Elem },
    /// Incrementing `coordinate` strictly decreases the value.
    Nondecreasing {
        tuple: Vec<Elem>,
        coordinate: usize,
        value: Elem,
        bumped: Elem,
    },
    /// A unary section that is neither order-preserving nor order-reversing:
    /// the section at `coordinate` (others fixed to `fixed`) takes `values`
    /// on the three increasing `points`, forming a strict peak or valley.
    Monotonicity {
        coordinate: usize,
        fixed: Vec<Elem>,
        points: [Elem; 3],
        values: [Elem; 3],
    },
    /// `F(e,…,e,x,e,…,e) = value ≠ x` with `x` at `position`.
    Neutral {
        element: Elem,
        position: usize,
        input: Elem,
        value: Elem,
    },
}

impl Witness {
    /// Re-evaluate the witness on `f` and confirm it still exhibits the
    /// recorded violation.
    pub fn reproduces(&self, f: &OpTable) -> bool {
        match self {
            Witness::Associativity {
                tuple,
                window,
                leftmost,
                grouped,
            } => {
                let n = f.arity();
                if tuple.len() != 2 * n - 1 || *window == 0 || *window >= n {
                    return false;
                }
                collapse(f, tuple, 0) == *leftmost
                    && collapse(f, tuple, *window) == *grouped
                    && *leftmost != *grouped
            }
            Witness::Idempotency { element, value } => {
                let t = vec![*element; f.arity()];
                f.apply(&t) == *value && *value != *element
            }
            Witness::Symmetry {
                tuple,
                position,
                value,
                swapped,
            } => {
                if tuple.len() != f.arity() || *position == 0 || *position >= f.arity() {
                    return false;
                }
                let mut s = tuple.clone();
                s.swap(*position - 1, *position);
                f.apply(tuple) == *value && f.apply(&s) == *swapped && *value != *swapped
            }
            Witness::Quasitriviality { tuple, value } => {
                tuple.len() == f.arity() && f.apply(tuple) == *value && !tuple.contains(value)
            }
            Witness::Nondecreasing {
                tuple,
                coordinate,
                value,
                bumped,
            } => {
                if tuple.len() != f.arity() || *coordinate == 0 || *coordinate > f.arity() {
                    return false;
                }
                let mut s = tuple.clone();
                s[*coordinate - 1] += 1;
                if s[*coordinate - 1] >= f.size() {
                    return false;
                }
                f.apply(tuple) == *value && f.apply(&s) == *bumped && *bumped < *value
            }
            Witness::Monotonicity {
                coordinate,
                fixed,
                points,
                values,
            } => {
                if fixed.len() + 1 != f.arity() || *coordinate == 0 || *coordinate > f.arity() {
                    return false;
                }
                let at = |x: Elem| {
                    let mut t = fixed.clone();
                    t.insert(*coordinate - 1, x);
                    f.apply(&t)
                };
                let ok_points = points[0] < points[1] && points[1] < points[2];
                let observed = [at(points[0]), at(points[1]), at(points[2])];
                let peak = observed[0] < observed[1] && observed[1] > observed[2];
                let valley = observed[0] > observed[1] && observed[1] < observed[2];
                ok_points && observed == *values && (peak || valley)
            }
            Witness::Neutral {
                element,
                position,
                input,
                value,
            } => {
                if *position == 0 || *position > f.arity() {
                    return false;
                }
                let mut t = vec![*element; f.arity()];
                t[*position - 1] = *input;
                f.apply(&t) == *value && *value != *input
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }
}

/// Value of the grouping that collapses `tuple[i..i+n]` first (0-based `i`).
fn collapse(f: &OpTable, tuple: &[Elem], i: usize) -> Elem {
    let n = f.arity();
    let mut args = Vec::with_capacity(n);
    args.extend_from_slice(&tuple[..i]);
    args.push(f.apply(&tuple[i..i + n]));
    args.extend_from_slice(&tuple[i + n..]);
    f.apply(&args)
}

/// Associativity in the `n`-ary sense: collapsing any consecutive `n`-window
/// of a `(2n−1)`-tuple agrees with collapsing the leftmost window.
///
/// The witness is the first `(tuple, window)` in lexicographic order whose
/// window disagrees with the leftmost grouping.
pub fn is_associative(f: &OpTable) -> Verdict {
    let n = f.arity();
    let m = f.size();
    if n == 1 {
        return Verdict::Holds;
    }
    let mut tuple = vec![0; 2 * n - 1];
    loop {
        let leftmost = collapse(f, &tuple, 0);
        for window in 1..n {
            let grouped = collapse(f, &tuple, window);
            if grouped != leftmost {
                return Verdict::Fails(Witness::Associativity {
                    tuple,
                    window,
                    leftmost,
                    grouped,
                });
            }
        }
        if !next_tuple_lex(&mut tuple, m) {
            return Verdict::Holds;
        }
    }
}

/// `F(x,…,x) = x` for every `x`; witness is the least violating `x`.
pub fn is_idempotent(f: &OpTable) -> Verdict {
    for x in 0..f.size() {
        let value = f.apply(&vec![x; f.arity()]);
        if value != x {
            return Verdict::Fails(Witness::Idempotency { element: x, value });
        }
    }
    Verdict::Holds
}

/// Invariance under all permutations of the arguments, decided through the
/// adjacent transpositions that generate the symmetric group.
pub fn is_symmetric(f: &OpTable) -> Verdict {
    let n = f.arity();
    let m = f.size();
    if n == 1 {
        return Verdict::Holds;
    }
    let mut tuple = vec![0; n];
    loop {
        let value = f.apply(&tuple);
        for position in 1..n {
            if tuple[position - 1] == tuple[position] {
                continue;
            }
            tuple.swap(position - 1, position);
            let swapped = f.apply(&tuple);
            tuple.swap(position - 1, position);
            if swapped != value {
                return Verdict::Fails(Witness::Symmetry {
                    tuple,
                    position,
                    value,
                    swapped,
                });
            }
        }
        if !next_tuple_colex(&mut tuple, m) {
            return Verdict::Holds;
        }
    }
}

/// The output is always one of the inputs (conservativeness).
pub fn is_quasitrivial(f: &OpTable) -> Verdict {
    let m = f.size();
    let mut tuple = vec![0; f.arity()];
    loop {
        let value = f.apply(&tuple);
        if !tuple.contains(&value) {
            return Verdict::Fails(Witness::Quasitriviality { tuple, value });
        }
        if !next_tuple_lex(&mut tuple, m) {
            return Verdict::Holds;
        }
    }
}

/// No single-coordinate increment decreases the value; equivalent to the
/// componentwise formulation by chaining increments.
pub fn is_nondecreasing(f: &OpTable) -> Verdict {
    let n = f.arity();
    let m = f.size();
    let mut tuple = vec![0; n];
    loop {
        let value = f.apply(&tuple);
        for coordinate in 1..=n {
            if tuple[coordinate - 1] + 1 >= m {
                continue;
            }
            tuple[coordinate - 1] += 1;
            let bumped = f.apply(&tuple);
            tuple[coordinate - 1] -= 1;
            if bumped < value {
                return Verdict::Fails(Witness::Nondecreasing {
                    tuple,
                    coordinate,
                    value,
                    bumped,
                });
            }
        }
        if !next_tuple_colex(&mut tuple, m) {
            return Verdict::Holds;
        }
    }
}

/// Every unary section is order-preserving or order-reversing, both read
/// nonstrictly, so constant sections qualify as both.
pub fn is_monotone(f: &OpTable) -> Verdict {
    let n = f.arity();
    let m = f.size();
    let mut section = vec![0; m];
    for coordinate in 1..=n {
        let mut fixed = vec![0; n - 1];
        loop {
            for (x, slot) in section.iter_mut().enumerate() {
                let mut t = fixed.clone();
                t.insert(coordinate - 1, x);
                *slot = f.apply(&t);
            }
            let preserving = section.windows(2).all(|w| w[0] <= w[1]);
            let reversing = section.windows(2).all(|w| w[0] >= w[1]);
            if !preserving && !reversing {
                let (points, values) = section_break(&section);
                return Verdict::Fails(Witness::Monotonicity {
                    coordinate,
                    fixed,
                    points,
                    values,
                });
            }
            if n == 1 || !next_tuple_lex(&mut fixed, m) {
                break;
            }
        }
    }
    Verdict::Holds
}

/// First triple of section points (in lexicographic order) forming a strict
/// peak or valley. Exists whenever the section is neither preserving nor
/// reversing.
fn section_break(section: &[Elem]) -> ([Elem; 3], [Elem; 3]) {
    let m = section.len();
    for p1 in 0..m {
        for p2 in p1 + 1..m {
            for p3 in p2 + 1..m {
                let v = [section[p1], section[p2], section[p3]];
                if (v[0] < v[1] && v[1] > v[2]) || (v[0] > v[1] && v[1] < v[2]) {
                    return ([p1, p2, p3], v);
                }
            }
        }
    }
    unreachable!("a section violating both orientations has a peak or valley triple");
}

/// Check that `e` is neutral: placing any `x` at any position among copies
/// of `e` returns `x`.
pub fn check_neutral(f: &OpTable, e: Elem) -> Result<(), Witness> {
    let n = f.arity();
    for position in 1..=n {
        for x in 0..f.size() {
            let mut t = vec![e; n];
            t[position - 1] = x;
            let value = f.apply(&t);
            if value != x {
                return Err(Witness::Neutral {
                    element: e,
                    position,
                    input: x,
                    value,
                });
            }
        }
    }
    Ok(())
}

/// All neutral elements of `f`, in ascending order. There can be more than
/// one, and a neutral element need not exist.
pub fn neutral_elements(f: &OpTable) -> Vec<Elem> {
    (0..f.size())
        .filter(|&e| check_neutral(f, e).is_ok())
        .collect()
}

/// Verdicts for all predicates plus the neutral elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyReport {
    pub associative: Verdict,
    pub idempotent: Verdict,
    pub symmetric: Verdict,
    pub quasitrivial: Verdict,
    pub nondecreasing: Verdict,
    pub monotone: Verdict,
    pub neutral_elements: Vec<Elem>,
}

pub fn classify(f: &OpTable) -> PropertyReport {
    PropertyReport {
        associative: is_associative(f),
        idempotent: is_idempotent(f),
        symmetric: is_symmetric(f),
        quasitrivial: is_quasitrivial(f),
        nondecreasing: is_nondecreasing(f),
        monotone: is_monotone(f),
        neutral_elements: neutral_elements(f),
    }
}
