/// Resource limits shared by the search-backed operations.
///
/// Budgets are expressed in deterministic units (cell counts, carrier sizes)
/// rather than wall-clock time so that refusals are reproducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Worker count for partitionable searches. Results are independent of
    /// this value; only elapsed time changes.
    pub threads: usize,
    /// Maximum table size `m^n`, in cells, accepted by enumeration and the
    /// audits built on it.
    pub cell_budget: usize,
    /// Maximum carrier size accepted by the exhaustive reduction oracle.
    pub oracle_cap: usize,
}

pub const DEFAULT_CELL_BUDGET: usize = 81;
pub const DEFAULT_ORACLE_CAP: usize = 4;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            threads: 1,
            cell_budget: DEFAULT_CELL_BUDGET,
            oracle_cap: DEFAULT_ORACLE_CAP,
        }
    }
}

impl Limits {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }

    pub fn with_cell_budget(mut self, cells: usize) -> Self {
        self.cell_budget = cells;
        self
    }

    pub fn with_oracle_cap(mut self, cap: usize) -> Self {
        self.oracle_cap = cap;
        self
    }
}
