//! Small named tables used across the test suites.

pub mod tables {
    use crate::table::OpTable;

    /// Binary minimum on the 2-chain.
    pub fn min2() -> OpTable {
        OpTable::from_values(2, 2, vec![0, 0, 0, 1]).unwrap()
    }

    /// Binary maximum on the 2-chain.
    pub fn max2() -> OpTable {
        OpTable::from_values(2, 2, vec![0, 1, 1, 1]).unwrap()
    }

    /// Projection to the first coordinate, binary, on the 2-chain.
    pub fn proj_left2() -> OpTable {
        OpTable::from_values(2, 2, vec![0, 0, 1, 1]).unwrap()
    }

    /// Projection to the second coordinate, binary, on the 2-chain.
    pub fn proj_right2() -> OpTable {
        OpTable::from_values(2, 2, vec![0, 1, 0, 1]).unwrap()
    }

    /// Binary exclusive or on the 2-chain.
    pub fn xor2() -> OpTable {
        OpTable::from_values(2, 2, vec![0, 1, 1, 0]).unwrap()
    }

    /// Complement of xor, `1 ⊕ a ⊕ b`. Associative and also folds to the
    /// ternary parity table.
    pub fn xnor2() -> OpTable {
        OpTable::from_values(2, 2, vec![1, 0, 0, 1]).unwrap()
    }

    /// Ternary minimum on the 2-chain.
    pub fn min3() -> OpTable {
        OpTable::from_values(2, 3, vec![0, 0, 0, 0, 0, 0, 0, 1]).unwrap()
    }

    /// Ternary parity on the 2-chain.
    pub fn xor3() -> OpTable {
        OpTable::from_values(2, 3, vec![0, 1, 1, 0, 1, 0, 0, 1]).unwrap()
    }

    /// Ternary projection to the first coordinate on the `m`-chain.
    pub fn proj1_3(m: usize) -> OpTable {
        OpTable::from_fn(m, 3, |t| t[0]).unwrap()
    }

    /// Ternary median on the 3-chain; idempotent but not associative.
    pub fn median3() -> OpTable {
        OpTable::from_fn(3, 3, |t| {
            let mut s = [t[0], t[1], t[2]];
            s.sort_unstable();
            s[1]
        })
        .unwrap()
    }

    /// Ternary minimum on the `m`-chain.
    pub fn min3_on(m: usize) -> OpTable {
        OpTable::from_fn(m, 3, |t| *t.iter().min().unwrap()).unwrap()
    }
}
