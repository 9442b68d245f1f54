//! Execution strategy for the data-parallel kernels.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Exec {
    Sequential,
    /// Uses rayon when the `parallel` feature is on; otherwise sequential.
    #[default]
    Parallel,
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Sets the global worker count once; later calls are ignored.
pub fn init_threads(n: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    #[cfg(not(feature = "parallel"))]
    let _ = n;
}

/// Folds `0..len` in chunks, possibly in parallel, and merges the partial
/// results. The merge must be associative and commutative for the result to
/// be independent of scheduling.
pub fn fold_range<T, I, F, M>(exec: Exec, len: u64, chunk: u64, init: I, fold: F, merge: M) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, std::ops::Range<u64>) -> T + Sync + Send,
    M: Fn(T, T) -> T + Sync + Send,
{
    let chunk = chunk.max(1);
    let chunks = len.div_ceil(chunk);
    let range = move |k: u64| (k * chunk)..((k + 1) * chunk).min(len);
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..chunks)
            .into_par_iter()
            .fold(&init, |acc, k| fold(acc, range(k)))
            .reduce(&init, &merge);
    }
    let _ = (exec, &merge);
    (0..chunks).fold(init(), |acc, k| fold(acc, range(k)))
}

/// Maps a slice of items, possibly in parallel, preserving input order.
pub fn map_vec<A, B, F>(exec: Exec, items: &[A], f: F) -> Vec<B>
where
    A: Sync,
    B: Send,
    F: Fn(&A) -> B + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}
