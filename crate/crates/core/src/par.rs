//! Thin switch between rayon data-parallelism and a sequential fallback.
//!
//! With the default `parallel` feature the map helpers fan out over the
//! current rayon pool; without it they run sequentially. Results are
//! identical either way: every caller reduces in a fixed order and all
//! arithmetic is exact.

/// Runs `f` on a pool with the requested number of worker threads.
///
/// `threads = 0` keeps rayon's default sizing. Without the `parallel`
/// feature the closure simply runs on the calling thread.
#[cfg(feature = "parallel")]
pub fn run_with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if threads > 0 {
        builder = builder.num_threads(threads);
    }
    builder
        .build()
        .expect("failed to build worker pool")
        .install(f)
}

#[cfg(not(feature = "parallel"))]
pub fn run_with_threads<R: Send>(_threads: usize, f: impl FnOnce() -> R + Send) -> R {
    f()
}

/// Maps `f` over `items`, preserving input order in the output.
#[cfg(feature = "parallel")]
pub(crate) fn ordered_map<I, T, F>(items: Vec<I>, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn ordered_map<I, T, F>(items: Vec<I>, f: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    items.into_iter().map(f).collect()
}
