//! Backtracking search over partial operation tables.
//!
//! Cells are filled in lexicographic index order with candidate values tried
//! in ascending order, so completed tables come out in lexicographic order of
//! their value vectors. Structural constraints prune during the search:
//!
//! * idempotency (and quasitriviality, which implies it on the diagonal)
//!   pre-fills the diagonal cells;
//! * quasitriviality restricts each cell to the coordinates of its tuple;
//! * nondecreasingness bounds each cell between already-assigned lattice
//!   neighbours;
//! * associativity instances are enforced as soon as every cell they touch
//!   is assigned; before that, any two determined groupings of the same
//!   `(2n−1)`-tuple must already agree.
//!
//! Worker partitioning splits the tree at the first few free cells; each
//! subtree is searched sequentially and results are concatenated in subtree
//! order, so the output stream does not depend on the worker count.

use std::collections::VecDeque;
use std::sync::Mutex;

use crate::chain::Elem;
use crate::table::{next_tuple_lex, pack, unpack};

#[derive(Debug, Clone, Copy)]
pub(crate) struct SearchSpace {
    pub m: usize,
    pub arity: usize,
    pub assoc: bool,
    pub idempotent: bool,
    pub nondecreasing: bool,
    pub quasitrivial: bool,
}

/// A partially assigned table exposed to extra pruning checks. Cells are
/// indexed by the packed tuple index.
pub(crate) struct Partial {
    pub cells: Vec<Option<Elem>>,
}

/// Extra admissibility check run after every assignment (and once after the
/// diagonal pre-fill). Must only reject partial tables that cannot complete
/// to a solution.
pub(crate) type ExtraCheck<'a> = &'a (dyn Fn(&Partial) -> bool + Sync);
pub(crate) type Accept<'a, T> = &'a (dyn Fn(&[Elem]) -> Option<T> + Sync);
pub(crate) type Task<'env, R> = Box<dyn FnOnce() -> R + Send + 'env>;

pub(crate) fn backtrack<T: Send>(
    space: &SearchSpace,
    extra: Option<ExtraCheck<'_>>,
    accept: Accept<'_, T>,
    threads: usize,
) -> Vec<T> {
    let geometry = Geometry::new(space);
    let mut root = Searcher::new(space, &geometry, extra, accept);
    if !root.prefill_consistent() {
        return Vec::new();
    }
    let threads = threads.max(1);
    if threads == 1 || geometry.free.len() <= 1 {
        root.dfs(0);
        return root.out;
    }

    // Split at the first free cells until there is enough work to share.
    let mut depth = 0;
    let mut width = 1usize;
    while width < 2 * threads && depth < geometry.free.len().min(4) {
        depth += 1;
        width *= space.m;
    }
    let mut prefixes = Vec::new();
    root.collect_prefixes(0, depth, &mut prefixes);
    let tasks: Vec<Task<'_, Vec<T>>> = prefixes
        .into_iter()
        .map(|cells| {
            let space = *space;
            let geometry = &geometry;
            Box::new(move || {
                let mut worker = Searcher::new(&space, geometry, extra, accept);
                worker.partial.cells = cells;
                worker.dfs(depth);
                worker.out
            }) as Task<'_, Vec<T>>
        })
        .collect();
    run_ordered(tasks, threads).into_iter().flatten().collect()
}

/// Per-space immutable data: tuples, lattice neighbours, quasitrivial
/// domains and the list of free (non-prefilled) cells.
struct Geometry {
    cells: usize,
    free: Vec<usize>,
    prefilled: Vec<(usize, Elem)>,
    below: Vec<Vec<usize>>,
    above: Vec<Vec<usize>>,
    domains: Vec<Vec<Elem>>,
}

impl Geometry {
    fn new(space: &SearchSpace) -> Geometry {
        let m = space.m;
        let n = space.arity;
        let cells = m
            .checked_pow(n as u32)
            .expect("cell budget enforced by callers");
        let diagonal = space.idempotent || space.quasitrivial;

        let mut prefilled = Vec::new();
        let mut is_prefilled = vec![false; cells];
        if diagonal {
            for x in 0..m {
                let flat = pack(m, &vec![x; n]);
                prefilled.push((flat, x));
                is_prefilled[flat] = true;
            }
        }
        let free = (0..cells).filter(|&k| !is_prefilled[k]).collect();

        let mut below = vec![Vec::new(); cells];
        let mut above = vec![Vec::new(); cells];
        let mut domains = vec![Vec::new(); cells];
        for flat in 0..cells {
            let t = unpack(m, n, flat);
            if space.nondecreasing {
                for j in 0..n {
                    let mut s = t.clone();
                    if t[j] > 0 {
                        s[j] -= 1;
                        below[flat].push(pack(m, &s));
                        s[j] += 1;
                    }
                    if t[j] + 1 < m {
                        s[j] += 1;
                        above[flat].push(pack(m, &s));
                    }
                }
            }
            domains[flat] = if space.quasitrivial {
                let mut d = t.clone();
                d.sort_unstable();
                d.dedup();
                d
            } else {
                (0..m).collect()
            };
        }
        Geometry {
            cells,
            free,
            prefilled,
            below,
            above,
            domains,
        }
    }
}

struct Searcher<'a, T> {
    space: &'a SearchSpace,
    geometry: &'a Geometry,
    extra: Option<ExtraCheck<'a>>,
    accept: Accept<'a, T>,
    partial: Partial,
    window: Vec<Elem>,
    out: Vec<T>,
}

impl<'a, T> Searcher<'a, T> {
    fn new(
        space: &'a SearchSpace,
        geometry: &'a Geometry,
        extra: Option<ExtraCheck<'a>>,
        accept: Accept<'a, T>,
    ) -> Self {
        let mut cells = vec![None; geometry.cells];
        for &(flat, v) in &geometry.prefilled {
            cells[flat] = Some(v);
        }
        Searcher {
            space,
            geometry,
            extra,
            accept,
            partial: Partial { cells },
            window: vec![0; 2 * space.arity - 1],
            out: Vec::new(),
        }
    }

    /// Instances fully determined by the diagonal pre-fill are never seen by
    /// the per-assignment checks, so validate once up front. Covers m = 1.
    fn prefill_consistent(&mut self) -> bool {
        self.admissible()
    }

    fn dfs(&mut self, pos: usize) {
        if pos == self.geometry.free.len() {
            let values: Vec<Elem> = self.partial.cells.iter().map(|c| c.unwrap()).collect();
            if let Some(item) = (self.accept)(&values) {
                self.out.push(item);
            }
            return;
        }
        let flat = self.geometry.free[pos];
        let (lo, hi) = self.bounds(flat);
        for i in 0..self.geometry.domains[flat].len() {
            let v = self.geometry.domains[flat][i];
            if v < lo || v > hi {
                continue;
            }
            self.partial.cells[flat] = Some(v);
            if self.admissible() {
                self.dfs(pos + 1);
            }
            self.partial.cells[flat] = None;
        }
    }

    /// Like `dfs` but stops at `depth` free cells, emitting the admissible
    /// cell snapshots instead of recursing further.
    fn collect_prefixes(&mut self, pos: usize, depth: usize, out: &mut Vec<Vec<Option<Elem>>>) {
        if pos == depth || pos == self.geometry.free.len() {
            out.push(self.partial.cells.clone());
            return;
        }
        let flat = self.geometry.free[pos];
        let (lo, hi) = self.bounds(flat);
        for i in 0..self.geometry.domains[flat].len() {
            let v = self.geometry.domains[flat][i];
            if v < lo || v > hi {
                continue;
            }
            self.partial.cells[flat] = Some(v);
            if self.admissible() {
                self.collect_prefixes(pos + 1, depth, out);
            }
            self.partial.cells[flat] = None;
        }
    }

    fn bounds(&self, flat: usize) -> (Elem, Elem) {
        if !self.space.nondecreasing {
            return (0, self.space.m - 1);
        }
        let mut lo = 0;
        let mut hi = self.space.m - 1;
        for &k in &self.geometry.below[flat] {
            if let Some(v) = self.partial.cells[k] {
                lo = lo.max(v);
            }
        }
        for &k in &self.geometry.above[flat] {
            if let Some(v) = self.partial.cells[k] {
                hi = hi.min(v);
            }
        }
        (lo, hi)
    }

    fn admissible(&mut self) -> bool {
        if self.space.assoc && !self.assoc_consistent() {
            return false;
        }
        if let Some(extra) = self.extra {
            if !extra(&self.partial) {
                return false;
            }
        }
        true
    }

    /// All determined groupings of every `(2n−1)`-tuple must agree.
    fn assoc_consistent(&mut self) -> bool {
        let n = self.space.arity;
        let m = self.space.m;
        if n == 1 {
            return true;
        }
        for slot in self.window.iter_mut() {
            *slot = 0;
        }
        loop {
            let mut reference: Option<Elem> = None;
            for w in 0..n {
                if let Some(v) = self.eval_window(w) {
                    match reference {
                        None => reference = Some(v),
                        Some(r) if r != v => return false,
                        Some(_) => {}
                    }
                }
            }
            if !next_tuple_lex(&mut self.window, m) {
                return true;
            }
        }
    }

    /// Value of the grouping collapsing `window[w..w+n]`, if determined.
    fn eval_window(&self, w: usize) -> Option<Elem> {
        let n = self.space.arity;
        let m = self.space.m;
        let t = &self.window;
        let mut ki = 0;
        for &x in &t[w..w + n] {
            ki = ki * m + x;
        }
        let inner = self.partial.cells[ki]?;
        let mut k = 0;
        for &x in &t[..w] {
            k = k * m + x;
        }
        k = k * m + inner;
        for &x in &t[w + n..] {
            k = k * m + x;
        }
        self.partial.cells[k]
    }
}

/// Run boxed tasks on up to `threads` workers, returning the results in task
/// order regardless of scheduling.
pub(crate) fn run_ordered<'env, R: Send>(tasks: Vec<Task<'env, R>>, threads: usize) -> Vec<R> {
    let n = tasks.len();
    if threads <= 1 || n <= 1 {
        return tasks.into_iter().map(|task| task()).collect();
    }
    let queue: Mutex<VecDeque<(usize, Task<'env, R>)>> =
        Mutex::new(tasks.into_iter().enumerate().collect());
    let results: Mutex<Vec<Option<R>>> = Mutex::new((0..n).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..threads.min(n) {
            scope.spawn(|| loop {
                let job = queue.lock().unwrap().pop_front();
                match job {
                    Some((i, task)) => {
                        let r = task();
                        results.lock().unwrap()[i] = Some(r);
                    }
                    None => break,
                }
            });
        }
    });
    results
        .into_inner()
        .unwrap()
        .into_iter()
        .map(|r| r.expect("every task ran"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn run_ordered_preserves_task_order() {
        let tasks: Vec<Box<dyn FnOnce() -> usize + Send>> = (0..32usize)
            .map(|i| Box::new(move || i * i) as Box<dyn FnOnce() -> usize + Send>)
            .collect();
        let got = run_ordered(tasks, 8);
        assert_eq!(got, (0..32).map(|i| i * i).collect::<Vec<_>>());
    }

    #[test]
    fn unconstrained_search_counts_all_tables() {
        let space = SearchSpace {
            m: 2,
            arity: 2,
            assoc: false,
            idempotent: false,
            nondecreasing: false,
            quasitrivial: false,
        };
        let all = backtrack(&space, None, &|v: &[Elem]| Some(v.to_vec()), 1);
        assert_eq!(all.len(), 16);
        // lexicographic output order
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }
}
