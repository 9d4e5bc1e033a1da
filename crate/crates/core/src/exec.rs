//! Work dispatch for the embarrassingly parallel sweeps.
//!
//! With the `parallel` feature (default) the helpers fan blocks out over the
//! rayon pool; without it they run sequentially. [`run_sequential`] forces the
//! sequential path at runtime even when the feature is on, so tests and
//! benches can compare both code paths in one binary. Results are concatenated
//! in block order, so output is identical either way.

use std::cell::Cell;
use std::ops::Range;

thread_local! {
    static FORCE_SEQUENTIAL: Cell<bool> = const { Cell::new(false) };
}

/// Run `f` with all exec helpers on this thread forced to the sequential path.
pub fn run_sequential<R>(f: impl FnOnce() -> R) -> R {
    FORCE_SEQUENTIAL.with(|c| c.set(true));
    let out = f();
    FORCE_SEQUENTIAL.with(|c| c.set(false));
    out
}

fn forced_sequential() -> bool {
    FORCE_SEQUENTIAL.with(|c| c.get())
}

fn blocks(range: Range<u64>, block: u64) -> Vec<Range<u64>> {
    let block = block.max(1);
    let mut out = Vec::new();
    let mut lo = range.start;
    while lo < range.end {
        let hi = (lo + block).min(range.end);
        out.push(lo..hi);
        lo = hi;
    }
    out
}

/// Split `range` into blocks, map each block to a vector, concatenate in order.
#[cfg(feature = "parallel")]
pub fn flat_map_blocks<T, F>(range: Range<u64>, block: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u64>) -> Vec<T> + Sync + Send,
{
    if forced_sequential() || range.end - range.start <= block {
        return blocks(range, block).into_iter().flat_map(f).collect();
    }
    use rayon::prelude::*;
    blocks(range, block)
        .into_par_iter()
        .map(f)
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

#[cfg(not(feature = "parallel"))]
pub fn flat_map_blocks<T, F>(range: Range<u64>, block: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u64>) -> Vec<T> + Sync + Send,
{
    blocks(range, block).into_iter().flat_map(f).collect()
}

/// Map each item of a slice, preserving order.
#[cfg(feature = "parallel")]
pub fn map_items<I, T, F>(items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    if forced_sequential() || items.len() < 2 {
        return items.iter().map(f).collect();
    }
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_items<I, T, F>(items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn block_split_covers_range() {
        let bs = blocks(3..17, 5);
        assert_eq!(bs, vec![3..8, 8..13, 13..17]);
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let f = |r: Range<u64>| r.map(|x| x * x).collect::<Vec<_>>();
        let par = flat_map_blocks(0..1000, 64, f);
        let seq = run_sequential(|| flat_map_blocks(0..1000, 64, f));
        assert_eq!(par, seq);
        assert_eq!(par.len(), 1000);
        assert_eq!(par[999], 999 * 999);
    }
}
