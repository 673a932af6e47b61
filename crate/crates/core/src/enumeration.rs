//! Exhaustive generation of operation tables satisfying a property class.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::limits::Limits;
use crate::properties;
use crate::search::{backtrack, SearchSpace};
use crate::table::{cell_count, OpTable};

/// A conjunction of required properties.
///
/// Flag letters follow the command-line convention: `a`ssociative,
/// `i`dempotent, `s`ymmetric, `q`uasitrivial, non`d`ecreasing, `m`onotone,
/// n`e`utral element present.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ClassSpec {
    pub associative: bool,
    pub idempotent: bool,
    pub symmetric: bool,
    pub quasitrivial: bool,
    pub nondecreasing: bool,
    pub monotone: bool,
    pub has_neutral: bool,
}

impl ClassSpec {
    /// The unrestricted class.
    pub fn any() -> ClassSpec {
        ClassSpec::default()
    }

    pub fn is_unrestricted(&self) -> bool {
        *self == ClassSpec::default()
    }

    /// Test membership with the full decision procedures; this is the
    /// definition the enumerator is held to.
    pub fn matches(&self, f: &OpTable) -> bool {
        (!self.associative || properties::is_associative(f).holds())
            && (!self.idempotent || properties::is_idempotent(f).holds())
            && (!self.symmetric || properties::is_symmetric(f).holds())
            && (!self.quasitrivial || properties::is_quasitrivial(f).holds())
            && (!self.nondecreasing || properties::is_nondecreasing(f).holds())
            && (!self.monotone || properties::is_monotone(f).holds())
            && (!self.has_neutral || !properties::neutral_elements(f).is_empty())
    }

    fn letters(&self) -> Vec<char> {
        let mut out = Vec::new();
        for (flag, letter) in [
            (self.associative, 'a'),
            (self.idempotent, 'i'),
            (self.symmetric, 's'),
            (self.quasitrivial, 'q'),
            (self.nondecreasing, 'd'),
            (self.monotone, 'm'),
            (self.has_neutral, 'e'),
        ] {
            if flag {
                out.push(letter);
            }
        }
        out
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.letters();
        if letters.is_empty() {
            return write!(f, "unrestricted");
        }
        let joined: Vec<String> = letters.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", joined.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown property flag {flag:?}; expected letters from a,i,s,q,d,m,e")]
pub struct ClassSpecParseError {
    pub flag: String,
}

impl FromStr for ClassSpec {
    type Err = ClassSpecParseError;

    /// Parse flag letters, with or without comma separators: `"a,i,d"`,
    /// `"aid"` and `""` (unrestricted) are all accepted.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut spec = ClassSpec::default();
        for token in s.split(',') {
            for c in token.trim().chars() {
                match c {
                    'a' => spec.associative = true,
                    'i' => spec.idempotent = true,
                    's' => spec.symmetric = true,
                    'q' => spec.quasitrivial = true,
                    'd' => spec.nondecreasing = true,
                    'm' => spec.monotone = true,
                    'e' => spec.has_neutral = true,
                    _ => {
                        return Err(ClassSpecParseError {
                            flag: c.to_string(),
                        })
                    }
                }
            }
        }
        Ok(spec)
    }
}

/// Deduplication policy for enumerated streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Dedup {
    #[default]
    None,
    /// Keep only the lexicographically least member of each `{F, dual(F)}`
    /// pair. Self-dual tables are kept.
    Dual,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("carrier must have at least one element")]
    EmptyChain,
    #[error("enumeration requires arity at least 2, got {0}")]
    BadArity(usize),
    #[error("a table for m={m}, n={arity} has {cells} cells, over the budget of {budget} cells")]
    BudgetExceeded {
        m: usize,
        arity: usize,
        cells: usize,
        budget: usize,
    },
}

pub(crate) fn check_budget(m: usize, arity: usize, limits: &Limits) -> Result<(), EnumError> {
    if m == 0 {
        return Err(EnumError::EmptyChain);
    }
    if arity < 2 {
        return Err(EnumError::BadArity(arity));
    }
    let cells = cell_count(m, arity).map_err(|_| EnumError::BudgetExceeded {
        m,
        arity,
        cells: usize::MAX,
        budget: limits.cell_budget,
    })?;
    if cells > limits.cell_budget {
        return Err(EnumError::BudgetExceeded {
            m,
            arity,
            cells,
            budget: limits.cell_budget,
        });
    }
    Ok(())
}

fn space_for(m: usize, arity: usize, class: &ClassSpec) -> SearchSpace {
    SearchSpace {
        m,
        arity,
        assoc: class.associative,
        idempotent: class.idempotent,
        nondecreasing: class.nondecreasing,
        quasitrivial: class.quasitrivial,
    }
}

/// All tables on the `m`-chain with the given arity that satisfy `class`,
/// in lexicographic order of their value vectors.
///
/// Symmetry, monotonicity and neutral-element requirements are decided on
/// completed tables; the remaining flags prune during the search. Every
/// emitted table is re-checked against [`ClassSpec::matches`], so the stream
/// is sound by construction and deterministic for any worker count.
pub fn enumerate(
    m: usize,
    arity: usize,
    class: &ClassSpec,
    dedup: Dedup,
    limits: &Limits,
) -> Result<Vec<OpTable>, EnumError> {
    check_budget(m, arity, limits)?;
    let space = space_for(m, arity, class);
    let accept = |values: &[usize]| {
        let table =
            OpTable::from_values(m, arity, values.to_vec()).expect("search yields valid cells");
        if !class.matches(&table) {
            return None;
        }
        if dedup == Dedup::Dual {
            let dual = table.dual();
            if dual.values() < table.values() {
                return None;
            }
        }
        Some(table)
    };
    Ok(backtrack(&space, None, &accept, limits.threads))
}

/// Number of tables [`enumerate`] would yield without deduplication, without
/// materializing them.
pub fn count(m: usize, arity: usize, class: &ClassSpec, limits: &Limits) -> Result<u64, EnumError> {
    check_budget(m, arity, limits)?;
    let space = space_for(m, arity, class);
    let accept = |values: &[usize]| {
        let table =
            OpTable::from_values(m, arity, values.to_vec()).expect("search yields valid cells");
        class.matches(&table).then_some(())
    };
    Ok(backtrack(&space, None, &accept, limits.threads).len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::tables::*;

    #[test]
    fn binary_ain_class_on_two_chain() {
        let class: ClassSpec = "a,i,d".parse().unwrap();
        let got = enumerate(2, 2, &class, Dedup::None, &Limits::default()).unwrap();
        assert_eq!(got, vec![min2(), proj_left2(), proj_right2(), max2()]);
    }

    #[test]
    fn binary_associative_count_on_two_chain() {
        let class: ClassSpec = "a".parse().unwrap();
        assert_eq!(count(2, 2, &class, &Limits::default()).unwrap(), 8);
    }

    #[test]
    fn ternary_ain_tables_are_exactly_the_derived_ones() {
        let class: ClassSpec = "a,i,d".parse().unwrap();
        let ternary = enumerate(2, 3, &class, Dedup::None, &Limits::default()).unwrap();
        let mut derived: Vec<OpTable> = enumerate(2, 2, &class, Dedup::None, &Limits::default())
            .unwrap()
            .iter()
            .map(|g| crate::table::derive(g, 3).unwrap())
            .collect();
        derived.sort();
        assert_eq!(ternary, derived);
        assert_eq!(count(2, 3, &class, &Limits::default()).unwrap(), 4);
    }

    #[test]
    fn dual_dedup_keeps_lex_least_representatives() {
        let class: ClassSpec = "a,i,d".parse().unwrap();
        let got = enumerate(2, 2, &class, Dedup::Dual, &Limits::default()).unwrap();
        // min2/max2 collapse to min2; both projections are self-dual
        assert_eq!(got, vec![min2(), proj_left2(), proj_right2()]);
    }

    #[test]
    fn trivial_chain_has_one_table() {
        assert_eq!(
            count(1, 3, &ClassSpec::any(), &Limits::default()).unwrap(),
            1
        );
    }

    #[test]
    fn budget_violations_name_the_budget() {
        let err = count(3, 5, &ClassSpec::any(), &Limits::default()).unwrap_err();
        assert_eq!(
            err,
            EnumError::BudgetExceeded {
                m: 3,
                arity: 5,
                cells: 243,
                budget: 81
            }
        );
        assert_eq!(
            count(2, 1, &ClassSpec::any(), &Limits::default()),
            Err(EnumError::BadArity(1))
        );
        assert_eq!(
            count(0, 2, &ClassSpec::any(), &Limits::default()),
            Err(EnumError::EmptyChain)
        );
    }

    #[test]
    fn class_spec_parsing_round_trips() {
        let spec: ClassSpec = "a,i,d".parse().unwrap();
        assert!(spec.associative && spec.idempotent && spec.nondecreasing);
        assert_eq!(spec.to_string(), "a,i,d");
        assert_eq!("aid".parse::<ClassSpec>().unwrap(), spec);
        assert_eq!("".parse::<ClassSpec>().unwrap(), ClassSpec::any());
        assert!("a,x".parse::<ClassSpec>().is_err());
    }
}
