//! Data-parallel kernels with a sequential fallback.
//!
//! The heavy loops (candidate filtering, law checking over enumerated
//! windows) fan out through these helpers. With the `parallel` feature
//! (default) they run on rayon; without it they run sequentially. Both
//! paths produce identical output ordering, so reports stay byte-stable.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// "parallel" or "sequential"; benchmark ids and reports use it.
pub const MODE: &str = if cfg!(feature = "parallel") {
    "parallel"
} else {
    "sequential"
};

/// Order-preserving map over an index range.
pub fn map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Always-sequential twin of [`map_range`], kept for benchmark baselines.
pub fn map_range_seq<U, F>(n: usize, f: F) -> Vec<U>
where
    F: Fn(usize) -> U,
{
    (0..n).map(f).collect()
}

/// First index in `0..n` failing the predicate, scanning left to right.
pub fn first_violation<F>(n: usize, ok: F) -> Option<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().find_first(|&i| !ok(i))
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).find(|&i| !ok(i))
    }
}

/// All indices in `0..n` failing the predicate, in order.
pub fn violations<F>(n: usize, ok: F) -> Vec<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().filter(|&i| !ok(i)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).filter(|&i| !ok(i)).collect()
    }
}

/// Order-preserving flat_map over an index range.
pub fn flat_map_range<U, F>(n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> Vec<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().flat_map_iter(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).flat_map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_and_sequential_agree() {
        let a = map_range(100, |i| i * i);
        let b = map_range_seq(100, |i| i * i);
        assert_eq!(a, b);
    }

    #[test]
    fn first_violation_is_leftmost() {
        assert_eq!(first_violation(100, |i| i % 7 != 3), Some(3));
        assert_eq!(first_violation(100, |_| true), None);
    }
}
