//! Dense operation tables over a finite chain.
//!
//! An [`OpTable`] stores an `n`-ary operation on `{0, …, m−1}` as a flat
//! vector of length `m^n` in row-major order with the first argument most
//! significant: `index(x₁…xₙ) = Σᵢ xᵢ·m^(n−i)`. The layout is fixed so that
//! tables are portable byte-for-byte across tools.

use thiserror::Error;

use crate::chain::{Chain, Elem};
use crate::properties::{self, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("carrier must have at least one element")]
    EmptyChain,
    #[error("operations must take at least one argument")]
    ZeroArity,
    #[error("table for m={m}, n={arity} needs {expected} values, got {got}")]
    WrongLength {
        m: usize,
        arity: usize,
        expected: usize,
        got: usize,
    },
    #[error("value {value} at index {index} is out of range for a chain of size {m}")]
    ValueOutOfRange { index: usize, value: Elem, m: usize },
    #[error("expected {expected} arguments, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("argument {value} at position {position} is out of range for a chain of size {m}")]
    ArgumentOutOfRange {
        position: usize,
        value: Elem,
        m: usize,
    },
    #[error("table for m={m}, n={arity} is too large to index")]
    TooLarge { m: usize, arity: usize },
}

/// Number of cells `m^arity`, or an error if it does not fit in `usize`.
pub fn cell_count(m: usize, arity: usize) -> Result<usize, TableError> {
    let mut cells: usize = 1;
    for _ in 0..arity {
        cells = cells
            .checked_mul(m)
            .ok_or(TableError::TooLarge { m, arity })?;
    }
    Ok(cells)
}

/// Flat index of a coordinate tuple, first coordinate most significant.
pub fn pack(m: usize, coords: &[Elem]) -> usize {
    let mut k = 0;
    for &x in coords {
        debug_assert!(x < m);
        k = k * m + x;
    }
    k
}

/// Inverse of [`pack`]: coordinates of a flat index.
pub fn unpack(m: usize, arity: usize, mut flat: usize) -> Vec<Elem> {
    let mut coords = vec![0; arity];
    for slot in coords.iter_mut().rev() {
        *slot = flat % m;
        flat /= m;
    }
    coords
}

/// A coordinate tuple together with its flat table index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleIndex {
    pub coords: Vec<Elem>,
    pub flat: usize,
}

impl TupleIndex {
    pub fn from_coords(m: usize, coords: &[Elem]) -> Result<Self, TableError> {
        for (position, &value) in coords.iter().enumerate() {
            if value >= m {
                return Err(TableError::ArgumentOutOfRange {
                    position: position + 1,
                    value,
                    m,
                });
            }
        }
        Ok(TupleIndex {
            flat: pack(m, coords),
            coords: coords.to_vec(),
        })
    }

    pub fn from_flat(m: usize, arity: usize, flat: usize) -> Result<Self, TableError> {
        let cells = cell_count(m, arity)?;
        if flat >= cells {
            return Err(TableError::ValueOutOfRange {
                index: flat,
                value: flat,
                m: cells,
            });
        }
        Ok(TupleIndex {
            coords: unpack(m, arity, flat),
            flat,
        })
    }
}

/// Advance `t` to the next tuple in lexicographic order (last coordinate
/// fastest). Returns `false` after the last tuple.
pub fn next_tuple_lex(t: &mut [Elem], m: usize) -> bool {
    for slot in t.iter_mut().rev() {
        *slot += 1;
        if *slot < m {
            return true;
        }
        *slot = 0;
    }
    false
}

/// Advance `t` to the next tuple in colexicographic order (first coordinate
/// fastest). Returns `false` after the last tuple.
pub fn next_tuple_colex(t: &mut [Elem], m: usize) -> bool {
    for slot in t.iter_mut() {
        *slot += 1;
        if *slot < m {
            return true;
        }
        *slot = 0;
    }
    false
}

/// A dense `n`-ary operation table on a finite chain.
///
/// Immutable after construction; all entries are verified to lie on the
/// carrier. Equality and ordering compare `(m, arity, values)`, so for tables
/// of one shape the derived order is the lexicographic order of value
/// vectors used throughout enumeration and reduction.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OpTable {
    carrier: Chain,
    arity: usize,
    values: Vec<Elem>,
}

impl OpTable {
    pub fn new(carrier: Chain, arity: usize, values: Vec<Elem>) -> Result<Self, TableError> {
        if arity == 0 {
            return Err(TableError::ZeroArity);
        }
        let m = carrier.size();
        let expected = cell_count(m, arity)?;
        if values.len() != expected {
            return Err(TableError::WrongLength {
                m,
                arity,
                expected,
                got: values.len(),
            });
        }
        for (index, &value) in values.iter().enumerate() {
            if value >= m {
                return Err(TableError::ValueOutOfRange { index, value, m });
            }
        }
        Ok(OpTable {
            carrier,
            arity,
            values,
        })
    }

    /// Convenience constructor from raw sizes.
    pub fn from_values(m: usize, arity: usize, values: Vec<Elem>) -> Result<Self, TableError> {
        Self::new(Chain::new(m)?, arity, values)
    }

    /// Build a table by evaluating `f` on every tuple in lexicographic order.
    pub fn from_fn(
        m: usize,
        arity: usize,
        mut f: impl FnMut(&[Elem]) -> Elem,
    ) -> Result<Self, TableError> {
        let carrier = Chain::new(m)?;
        let cells = cell_count(m, arity)?;
        let mut values = Vec::with_capacity(cells);
        let mut t = vec![0; arity];
        loop {
            values.push(f(&t));
            if !next_tuple_lex(&mut t, m) {
                break;
            }
        }
        Self::new(carrier, arity, values)
    }

    pub fn carrier(&self) -> Chain {
        self.carrier
    }

    /// Size of the carrier chain.
    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &[Elem] {
        &self.values
    }

    pub fn cells(&self) -> usize {
        self.values.len()
    }

    /// Evaluate the operation on a tuple, validating arity and ranges.
    pub fn eval(&self, t: &[Elem]) -> Result<Elem, TableError> {
        if t.len() != self.arity {
            return Err(TableError::ArityMismatch {
                expected: self.arity,
                got: t.len(),
            });
        }
        let m = self.size();
        for (position, &value) in t.iter().enumerate() {
            if value >= m {
                return Err(TableError::ArgumentOutOfRange {
                    position: position + 1,
                    value,
                    m,
                });
            }
        }
        Ok(self.values[pack(m, t)])
    }

    /// Evaluate without validation. Arguments must be on the carrier.
    pub fn apply(&self, t: &[Elem]) -> Elem {
        debug_assert_eq!(t.len(), self.arity);
        self.values[pack(self.size(), t)]
    }

    /// Conjugate by order reversal: `dual(F)(x₁…xₙ) = r(F(r(x₁)…r(xₙ)))`
    /// with `r(x) = m−1−x`. An involution.
    pub fn dual(&self) -> OpTable {
        let m = self.size();
        let r = |x: Elem| m - 1 - x;
        let mut values = vec![0; self.values.len()];
        let mut t = vec![0; self.arity];
        let mut rev = vec![0; self.arity];
        let mut flat = 0;
        loop {
            for (dst, &x) in rev.iter_mut().zip(t.iter()) {
                *dst = r(x);
            }
            values[flat] = r(self.apply(&rev));
            flat += 1;
            if !next_tuple_lex(&mut t, m) {
                break;
            }
        }
        OpTable {
            carrier: self.carrier,
            arity: self.arity,
            values,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeriveError {
    #[error("generator must be binary, got arity {0}")]
    NotBinary(usize),
    #[error("derived arity must be at least 2, got {0}")]
    ArityTooSmall(usize),
    #[error("generator is not associative")]
    NotAssociative(Witness),
    #[error(transparent)]
    Table(#[from] TableError),
}

/// The `n`-ary operation `x₁ ∘ … ∘ xₙ` generated by an associative binary
/// operation, computed as a left fold.
///
/// Associativity of the generator is a checked precondition: without it the
/// composite expression is not well defined. For `arity == 2` the generator
/// itself is returned.
pub fn derive(g: &OpTable, arity: usize) -> Result<OpTable, DeriveError> {
    if g.arity() != 2 {
        return Err(DeriveError::NotBinary(g.arity()));
    }
    if arity < 2 {
        return Err(DeriveError::ArityTooSmall(arity));
    }
    if let Some(w) = properties::is_associative(g).witness() {
        return Err(DeriveError::NotAssociative(w.clone()));
    }
    if arity == 2 {
        return Ok(g.clone());
    }
    let m = g.size();
    let table = OpTable::from_fn(m, arity, |t| {
        t[1..].iter().fold(t[0], |acc, &x| g.apply(&[acc, x]))
    })?;
    Ok(table)
}
