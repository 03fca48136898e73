//! Data-parallel map-reduce over element index ranges.
//!
//! With the `parallel` feature (default) the work runs on rayon; without it
//! the same entry point degrades to a sequential fold. `fold_range_serial`
//! is always sequential and exists for benchmarks and determinism checks.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Fold `map(i)` for i in 0..count into an accumulator. `merge` must be
/// commutative and associative so the parallel schedule cannot change the
/// result.
#[cfg(feature = "parallel")]
pub fn fold_range<A, M, S, G>(count: u128, init: M, step: S, merge: G) -> A
where
    A: Send,
    M: Fn() -> A + Sync + Send,
    S: Fn(A, u128) -> A + Sync + Send,
    G: Fn(A, A) -> A + Sync + Send,
{
    debug_assert!(count <= u64::MAX as u128);
    (0..count as u64)
        .into_par_iter()
        .fold(&init, |acc, i| step(acc, i as u128))
        .reduce(&init, &merge)
}

#[cfg(not(feature = "parallel"))]
pub fn fold_range<A, M, S, G>(count: u128, init: M, step: S, merge: G) -> A
where
    A: Send,
    M: Fn() -> A + Sync + Send,
    S: Fn(A, u128) -> A + Sync + Send,
    G: Fn(A, A) -> A + Sync + Send,
{
    let _ = merge;
    fold_range_serial(count, init, step)
}

/// Sequential reference fold over the same range.
pub fn fold_range_serial<A, M, S>(count: u128, init: M, step: S) -> A
where
    M: Fn() -> A,
    S: Fn(A, u128) -> A,
{
    (0..count).fold(init(), step)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_matches_serial() {
        let sum = fold_range(10_000, || 0u128, |a, i| a + i * i, |a, b| a + b);
        let reference = fold_range_serial(10_000, || 0u128, |a, i| a + i * i);
        assert_eq!(sum, reference);
    }
}
