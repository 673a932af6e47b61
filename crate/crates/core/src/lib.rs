//! Finite-chain operation tables and the decision procedures around them:
//! property predicates with deterministic counterexample witnesses, binary
//! reductions of n-ary operations with verification, irreducibility and
//! extremality certificates, exhaustive class enumeration, and audits of the
//! structural facts the constructions rely on.
//!
//! Everything is exact: carriers are the chains `{0, …, m−1}`, operations
//! are dense integer tables, and every claim the library makes (a binary
//! table generates F, a class has 17 members) is re-checked against the
//! defining equations before it is reported.

pub mod audit;
pub mod chain;
pub mod enumeration;
pub mod extremal;
pub mod limits;
pub mod properties;
pub mod reduction;
mod search;
pub mod table;
pub mod testing;

pub use chain::{Chain, Elem};
pub use enumeration::{count, enumerate, ClassSpec, ClassSpecParseError, Dedup, EnumError};
pub use extremal::{extremal_witness, ExtremalMode};
pub use limits::Limits;
pub use properties::{classify, PropertyReport, Verdict, Witness};
pub use reduction::{
    ackerman_witness, adjoin_neutral_binary, arity_reduce, candidate_binary, neutral_reduction,
    oracle_reduce, reduce, reduce_with, AckermanWitness, AdjoinedBinary, OracleReductions,
    ReduceStrategy, Reduced, ReductionError, ReductionResult, Strategy,
};
pub use table::{derive, DeriveError, OpTable, TableError, TupleIndex};
