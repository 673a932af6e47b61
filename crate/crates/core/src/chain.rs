use crate::table::TableError;

/// An element of a chain, identified by its rank in the order.
pub type Elem = usize;

/// The finite chain `{0, …, m−1}` under the natural order.
///
/// Every carrier in this crate is such a prefix of the naturals; external
/// labels for elements are resolved to ranks at the I/O boundary and never
/// reach the algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    size: usize,
}

impl Chain {
    /// A chain with `size` elements. `size` must be at least 1.
    pub fn new(size: usize) -> Result<Self, TableError> {
        if size == 0 {
            return Err(TableError::EmptyChain);
        }
        Ok(Chain { size })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, x: Elem) -> bool {
        x < self.size
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.size
    }

    /// Order reversal `x ↦ m−1−x`, the unique nontrivial order anti-automorphism.
    pub fn reverse(&self, x: Elem) -> Elem {
        debug_assert!(x < self.size);
        self.size - 1 - x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_chain() {
        assert!(Chain::new(0).is_err());
        assert!(Chain::new(1).is_ok());
    }

    #[test]
    fn reverse_is_involutive() {
        let c = Chain::new(5).unwrap();
        for x in c.elements() {
            assert_eq!(c.reverse(c.reverse(x)), x);
        }
    }
}
