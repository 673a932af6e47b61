//! Constructing binary generators for n-ary operations, and certifying that
//! none exists.
//!
//! An n-ary `F` is *reducible* when some associative binary `G` satisfies
//! `F(x₁…xₙ) = x₁ ∘ … ∘ xₙ`. Three constructions can produce such a `G`:
//! the repeated-argument candidate, the neutral-slot reduction and an
//! exhaustive oracle. The arity-lowering contraction and neutral-element
//! adjunction round out the toolkit. Every construction that claims success
//! is re-verified against the defining fold equation before being returned.

use thiserror::Error;

use crate::chain::{Chain, Elem};
use crate::enumeration::ClassSpec;
use crate::limits::Limits;
use crate::properties::{self, Witness};
use crate::search::{backtrack, Partial, SearchSpace};
use crate::table::{derive, next_tuple_lex, OpTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("carrier size {carrier} exceeds the oracle cap of {cap}")]
    OracleCap { carrier: usize, cap: usize },
    #[error("cannot reduce an operation of arity {0}")]
    ArityTooSmall(usize),
}

/// The two repeated-argument evaluations disagree at `(a, c)`:
/// `F((n−1)·a, c) = head_repeated` but `F(a, (n−1)·c) = tail_repeated`.
///
/// Signals that `F` lies outside the class where the candidate construction
/// is well defined (or is irreducible by this route).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "candidate mismatch at ({a}, {c}): tail-repeated value {tail_repeated} ≠ head-repeated value {head_repeated}"
)]
pub struct CandidateMismatch {
    pub a: Elem,
    pub c: Elem,
    pub tail_repeated: Elem,
    pub head_repeated: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CandidateError {
    #[error("cannot build a binary candidate for arity {0}")]
    ArityTooSmall(usize),
    #[error(transparent)]
    Mismatch(CandidateMismatch),
}

/// The binary candidate `G(a, c) = F(a, (n−1)·c) = F((n−1)·a, c)`.
///
/// Both repeated-argument forms are evaluated independently; the first
/// disagreement in lexicographic `(a, c)` order is reported instead of a
/// table. No associativity check is performed here; the verified ladder in
/// [`reduce`] is the guaranteed route.
pub fn candidate_binary(f: &OpTable) -> Result<OpTable, CandidateError> {
    let n = f.arity();
    if n < 2 {
        return Err(CandidateError::ArityTooSmall(n));
    }
    if n == 2 {
        return Ok(f.clone());
    }
    let m = f.size();
    let mut values = Vec::with_capacity(m * m);
    let mut args = vec![0; n];
    for a in 0..m {
        for c in 0..m {
            args[0] = a;
            args[1..].fill(c);
            let tail_repeated = f.apply(&args);
            args[..n - 1].fill(a);
            args[n - 1] = c;
            let head_repeated = f.apply(&args);
            if tail_repeated != head_repeated {
                return Err(CandidateError::Mismatch(CandidateMismatch {
                    a,
                    c,
                    tail_repeated,
                    head_repeated,
                }));
            }
            values.push(tail_repeated);
        }
    }
    Ok(
        OpTable::new(Chain::new(m).expect("carrier is nonempty"), 2, values)
            .expect("values come from the carrier"),
    )
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NeutralReductionError {
    #[error("neutral-slot reduction requires arity at least 2, got {0}")]
    ArityTooSmall(usize),
    #[error("element {element} is not neutral")]
    NotNeutral { element: Elem, witness: Witness },
}

/// The neutral-slot reduction `G(a, b) = F(a, (n−2)·e, b)` for a neutral
/// element `e` of `F`. That `e` is neutral is checked, not assumed.
pub fn neutral_reduction(f: &OpTable, e: Elem) -> Result<OpTable, NeutralReductionError> {
    let n = f.arity();
    if n < 2 {
        return Err(NeutralReductionError::ArityTooSmall(n));
    }
    if let Err(witness) = properties::check_neutral(f, e) {
        return Err(NeutralReductionError::NotNeutral {
            element: e,
            witness,
        });
    }
    let m = f.size();
    let mut args = vec![e; n];
    Ok(OpTable::from_fn(m, 2, |t| {
        args[0] = t[0];
        args[n - 1] = t[1];
        f.apply(&args)
    })
    .expect("values come from the carrier"))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdjoinError {
    #[error("can only adjoin a neutral element to a binary operation, got arity {0}")]
    NotBinary(usize),
    #[error("generator is not associative")]
    NotAssociative(Witness),
}

/// A binary table extended by one fresh element acting as a two-sided
/// neutral element.
///
/// The new element is the top index of the enlarged carrier but carries no
/// chain position: order-dependent predicates are not meaningful on
/// `table` until [`AdjoinedBinary::place`] assigns one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjoinedBinary {
    pub table: OpTable,
    pub adjoined: Elem,
}

impl AdjoinedBinary {
    /// Relabel the carrier so the adjoined element sits at `position` in the
    /// chain order (elements at or above it shift up by one).
    pub fn place(&self, position: usize) -> Option<OpTable> {
        let m = self.table.size();
        if position >= m {
            return None;
        }
        let relabel = |x: Elem| -> Elem {
            if x == self.adjoined {
                position
            } else if x < position {
                x
            } else {
                x + 1
            }
        };
        let unrelabel: Vec<Elem> = {
            let mut inv = vec![0; m];
            for x in 0..m {
                inv[relabel(x)] = x;
            }
            inv
        };
        Some(
            OpTable::from_fn(m, 2, |t| {
                relabel(self.table.apply(&[unrelabel[t[0]], unrelabel[t[1]]]))
            })
            .expect("relabelling is a bijection"),
        )
    }
}

/// Extend an associative binary `G` on `{0,…,m−1}` to `{0,…,m}` where the
/// new element `m` satisfies `G′(x, m) = G′(m, x) = x`. The extension is
/// associative whenever `G` is; this is re-checked.
pub fn adjoin_neutral_binary(g: &OpTable) -> Result<AdjoinedBinary, AdjoinError> {
    if g.arity() != 2 {
        return Err(AdjoinError::NotBinary(g.arity()));
    }
    if let Some(w) = properties::is_associative(g).witness() {
        return Err(AdjoinError::NotAssociative(w.clone()));
    }
    let m = g.size();
    let table = OpTable::from_fn(m + 1, 2, |t| {
        if t[0] == m {
            t[1]
        } else if t[1] == m {
            t[0]
        } else {
            g.apply(t)
        }
    })
    .expect("values come from the enlarged carrier");
    assert!(
        properties::is_associative(&table).holds(),
        "adjoining a neutral element preserves associativity"
    );
    assert!(properties::check_neutral(&table, m).is_ok());
    Ok(AdjoinedBinary { table, adjoined: m })
}

/// Doubling coordinate `first` and coordinate `second` of the same
/// `(n−1)`-tuple gave different values, so the contraction is not well
/// defined. Placements are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "doubling placements {first} and {second} disagree at {tuple:?}: {first_value} ≠ {second_value}"
)]
pub struct DoublingMismatch {
    pub first: usize,
    pub second: usize,
    pub tuple: Vec<Elem>,
    pub first_value: Elem,
    pub second_value: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArityReduceError {
    #[error("arity reduction requires arity at least 3, got {0}")]
    ArityTooSmall(usize),
    #[error(transparent)]
    Mismatch(DoublingMismatch),
}

/// The `(n−1)`-ary contraction `H(x₁,…,xₙ₋₁) = F(2·x₁, x₂,…,xₙ₋₁)`.
///
/// Well-definedness demands that doubling any single coordinate yields the
/// same operation; all `n−1` placements are compared and the first
/// disagreement (tuples in lexicographic order, then placement pairs) is
/// reported.
pub fn arity_reduce(f: &OpTable) -> Result<OpTable, ArityReduceError> {
    let n = f.arity();
    if n < 3 {
        return Err(ArityReduceError::ArityTooSmall(n));
    }
    let m = f.size();
    let mut tuple = vec![0; n - 1];
    let mut args = vec![0; n];
    let mut values = Vec::new();
    loop {
        let mut placements = Vec::with_capacity(n - 1);
        for i in 1..n {
            let mut pos = 0;
            for (j, &x) in tuple.iter().enumerate() {
                args[pos] = x;
                pos += 1;
                if j + 1 == i {
                    args[pos] = x;
                    pos += 1;
                }
            }
            debug_assert_eq!(pos, n);
            placements.push(f.apply(&args));
        }
        for i in 0..placements.len() {
            for j in i + 1..placements.len() {
                if placements[i] != placements[j] {
                    return Err(ArityReduceError::Mismatch(DoublingMismatch {
                        first: i + 1,
                        second: j + 1,
                        tuple,
                        first_value: placements[i],
                        second_value: placements[j],
                    }));
                }
            }
        }
        values.push(placements[0]);
        if !next_tuple_lex(&mut tuple, m) {
            break;
        }
    }
    Ok(OpTable::from_values(m, n - 1, values).expect("values come from the carrier"))
}

/// A pair `b₁ < b₂` such that on every odd-arity tuple over `{b₁, b₂}` the
/// operation returns whichever element occurs an odd number of times.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AckermanWitness {
    pub b1: Elem,
    pub b2: Elem,
}

impl AckermanWitness {
    /// Re-check the defining parity condition exhaustively.
    pub fn reproduces(&self, f: &OpTable) -> bool {
        let n = f.arity();
        if n.is_multiple_of(2) || self.b1 >= self.b2 || self.b2 >= f.size() {
            return false;
        }
        parity_pair_holds(f, self.b1, self.b2)
    }
}

fn parity_pair_holds(f: &OpTable, b1: Elem, b2: Elem) -> bool {
    let n = f.arity();
    let mut args = vec![b1; n];
    for mask in 0u64..(1u64 << n) {
        let mut high = 0usize;
        for (j, arg) in args.iter_mut().enumerate() {
            if mask >> j & 1 == 1 {
                *arg = b2;
                high += 1;
            } else {
                *arg = b1;
            }
        }
        let expected = if high % 2 == 1 { b2 } else { b1 };
        if f.apply(&args) != expected {
            return false;
        }
    }
    true
}

/// Search for a parity pair. Returns `None` immediately for even arity,
/// where the condition is vacuous; otherwise the least pair in lexicographic
/// order, if any.
pub fn ackerman_witness(f: &OpTable) -> Option<AckermanWitness> {
    let n = f.arity();
    if n.is_multiple_of(2) || n >= u64::BITS as usize {
        return None;
    }
    let m = f.size();
    for b1 in 0..m {
        for b2 in b1 + 1..m {
            if parity_pair_holds(f, b1, b2) {
                return Some(AckermanWitness { b1, b2 });
            }
        }
    }
    None
}

/// Result of the exhaustive oracle: every admissible binary generator, in
/// lexicographic table order, with an explanatory note when the search was
/// short-circuited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReductions {
    pub tables: Vec<OpTable>,
    pub note: Option<String>,
}

/// Decide reducibility exactly by backtracking over the `m²` cells of a
/// binary table.
///
/// Returns every associative binary `G` in `g_class` whose fold equals `F`.
/// Cells are filled in lexicographic order with ascending values; partial
/// associativity instances and fully determined folds prune as soon as they
/// are decided, so the search never enumerates all `m^(m²)` tables. A
/// non-associative `F` yields an empty result with a note, since any fold of
/// an associative binary operation is associative.
pub fn oracle_reduce(
    f: &OpTable,
    g_class: &ClassSpec,
    limits: &Limits,
) -> Result<OracleReductions, ReductionError> {
    let m = f.size();
    if m > limits.oracle_cap {
        return Err(ReductionError::OracleCap {
            carrier: m,
            cap: limits.oracle_cap,
        });
    }
    let n = f.arity();
    if n < 2 {
        return Ok(OracleReductions {
            tables: Vec::new(),
            note: Some(format!("an operation of arity {n} has no binary generator")),
        });
    }
    if !properties::is_associative(f).holds() {
        return Ok(OracleReductions {
            tables: Vec::new(),
            note: Some(
                "input is not associative, and every operation derived from a binary one is"
                    .to_string(),
            ),
        });
    }

    let space = SearchSpace {
        m,
        arity: 2,
        assoc: true,
        idempotent: g_class.idempotent,
        nondecreasing: g_class.nondecreasing,
        quasitrivial: g_class.quasitrivial,
    };
    // Prune on every fold of F that the partial G already determines.
    let fold_consistent = move |partial: &Partial| -> bool {
        let mut tuple = vec![0; n];
        loop {
            let mut acc = Some(tuple[0]);
            for &x in &tuple[1..] {
                acc = match acc {
                    Some(a) => partial.cells[a * m + x],
                    None => break,
                };
            }
            if let Some(value) = acc {
                if value != f.apply(&tuple) {
                    return false;
                }
            }
            if !next_tuple_lex(&mut tuple, m) {
                return true;
            }
        }
    };
    let accept = |values: &[Elem]| -> Option<OpTable> {
        let g = OpTable::from_values(m, 2, values.to_vec()).expect("search yields valid cells");
        if !g_class.matches(&g) {
            return None;
        }
        match derive(&g, n) {
            Ok(folded) if folded == *f => Some(g),
            _ => None,
        }
    };
    let tables = backtrack(&space, Some(&fold_consistent), &accept, limits.threads);
    Ok(OracleReductions { tables, note: None })
}

/// How a reduction was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Repeated-argument candidate.
    Candidate,
    /// Neutral-slot reduction through the recorded neutral element.
    Neutral(Elem),
    /// Oracle reduction packaged with a neutral-element extension.
    Adjoin,
    /// Exhaustive oracle.
    Oracle,
}

/// Strategy selector for [`reduce_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ReduceStrategy {
    /// candidate → neutral-slot → oracle, first verified generator wins.
    #[default]
    Auto,
    Candidate,
    Neutral,
    Adjoin,
    Oracle,
}

/// A verified reduction: `derive(binary, F.arity) = F` holds exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduced {
    pub binary: OpTable,
    pub strategy: Strategy,
    /// Always true: every route re-checks the fold equation before returning.
    pub verified: bool,
    /// For the adjoin strategy, the generator extended by a fresh neutral
    /// element.
    pub extension: Option<AdjoinedBinary>,
}

/// Certificate that no admissible binary generator exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibilityEvidence {
    /// The class over which the oracle search was exhausted.
    pub searched_class: ClassSpec,
    pub oracle_note: Option<String>,
    /// Parity-pair certificate, attached when present. Recorded as
    /// supporting evidence only; reducibility is always decided by the
    /// exhaustive search.
    pub ackerman: Option<AckermanWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionResult {
    Reduced(Reduced),
    Irreducible(IrreducibilityEvidence),
    /// A restricted strategy failed without exhausting the search space, so
    /// no irreducibility claim is made.
    NotReduced {
        strategy: ReduceStrategy,
        reason: String,
    },
}

impl ReductionResult {
    pub fn reduced(&self) -> Option<&Reduced> {
        match self {
            ReductionResult::Reduced(r) => Some(r),
            _ => None,
        }
    }
}

fn verified(f: &OpTable, g: &OpTable, g_class: &ClassSpec) -> bool {
    g_class.matches(g) && matches!(derive(g, f.arity()), Ok(folded) if folded == *f)
}

fn try_candidate(f: &OpTable, g_class: &ClassSpec) -> Result<Reduced, String> {
    match candidate_binary(f) {
        Ok(g) => {
            if verified(f, &g, g_class) {
                Ok(Reduced {
                    binary: g,
                    strategy: Strategy::Candidate,
                    verified: true,
                    extension: None,
                })
            } else {
                Err("candidate table exists but does not generate the input".to_string())
            }
        }
        Err(e) => Err(e.to_string()),
    }
}

fn try_neutral(f: &OpTable, g_class: &ClassSpec) -> Result<Reduced, String> {
    let neutrals = properties::neutral_elements(f);
    if neutrals.is_empty() {
        return Err("no neutral element".to_string());
    }
    for e in neutrals {
        if let Ok(g) = neutral_reduction(f, e) {
            if verified(f, &g, g_class) {
                return Ok(Reduced {
                    binary: g,
                    strategy: Strategy::Neutral(e),
                    verified: true,
                    extension: None,
                });
            }
        }
    }
    Err("no neutral-slot reduction generates the input".to_string())
}

/// Reduce `F` with the given strategy, restricting acceptable generators to
/// `g_class` (use [`ClassSpec::any`] for no restriction).
pub fn reduce_with(
    f: &OpTable,
    strategy: ReduceStrategy,
    g_class: &ClassSpec,
    limits: &Limits,
) -> Result<ReductionResult, ReductionError> {
    if f.arity() < 2 {
        return Err(ReductionError::ArityTooSmall(f.arity()));
    }
    let not_reduced = |reason: String| ReductionResult::NotReduced { strategy, reason };
    match strategy {
        ReduceStrategy::Auto => {
            if let Ok(r) = try_candidate(f, g_class) {
                return Ok(ReductionResult::Reduced(r));
            }
            if let Ok(r) = try_neutral(f, g_class) {
                return Ok(ReductionResult::Reduced(r));
            }
            let oracle = oracle_reduce(f, g_class, limits)?;
            match oracle.tables.into_iter().next() {
                Some(g) => Ok(ReductionResult::Reduced(Reduced {
                    binary: g,
                    strategy: Strategy::Oracle,
                    verified: true,
                    extension: None,
                })),
                None => Ok(ReductionResult::Irreducible(IrreducibilityEvidence {
                    searched_class: *g_class,
                    oracle_note: oracle.note,
                    ackerman: ackerman_witness(f),
                })),
            }
        }
        ReduceStrategy::Candidate => Ok(try_candidate(f, g_class)
            .map(ReductionResult::Reduced)
            .unwrap_or_else(not_reduced)),
        ReduceStrategy::Neutral => Ok(try_neutral(f, g_class)
            .map(ReductionResult::Reduced)
            .unwrap_or_else(not_reduced)),
        ReduceStrategy::Adjoin => {
            let oracle = oracle_reduce(f, g_class, limits)?;
            match oracle.tables.into_iter().next() {
                Some(g) => {
                    let extension =
                        adjoin_neutral_binary(&g).expect("oracle results are associative");
                    Ok(ReductionResult::Reduced(Reduced {
                        binary: g,
                        strategy: Strategy::Adjoin,
                        verified: true,
                        extension: Some(extension),
                    }))
                }
                None => Ok(not_reduced(
                    "no binary generator found to extend".to_string(),
                )),
            }
        }
        ReduceStrategy::Oracle => {
            let oracle = oracle_reduce(f, g_class, limits)?;
            match oracle.tables.into_iter().next() {
                Some(g) => Ok(ReductionResult::Reduced(Reduced {
                    binary: g,
                    strategy: Strategy::Oracle,
                    verified: true,
                    extension: None,
                })),
                None => Ok(ReductionResult::Irreducible(IrreducibilityEvidence {
                    searched_class: *g_class,
                    oracle_note: oracle.note,
                    ackerman: ackerman_witness(f),
                })),
            }
        }
    }
}

/// The verified strategy ladder: repeated-argument candidate, then
/// neutral-slot reductions, then the exhaustive oracle; ties among oracle
/// results go to the lexicographically least table. Failure of all three is
/// an irreducibility certificate by oracle exhaustion.
pub fn reduce(f: &OpTable, limits: &Limits) -> Result<ReductionResult, ReductionError> {
    reduce_with(f, ReduceStrategy::Auto, &ClassSpec::any(), limits)
}
