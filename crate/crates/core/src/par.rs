//! Chunked index scans with an optional rayon backend.
//!
//! Results are always returned in index order, so parallel and sequential
//! runs produce identical output.

use std::ops::Range;

/// Execution strategy for the enumeration kernels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parallelism {
    Sequential,
    /// Uses the rayon thread pool when the `parallel` feature is enabled and
    /// falls back to sequential execution otherwise.
    Parallel,
}

impl Default for Parallelism {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Parallelism::Parallel
        } else {
            Parallelism::Sequential
        }
    }
}

const CHUNK: u64 = 4096;

/// Splits `0..count` into chunks and calls `f` on each, collecting whatever
/// `f` pushes. Output order matches a sequential scan.
pub fn scan_chunks<T, F>(count: u64, parallelism: Parallelism, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(Range<u64>, &mut Vec<T>) + Sync + Send,
{
    let chunks = count.div_ceil(CHUNK);
    let range = |c: u64| c * CHUNK..((c + 1) * CHUNK).min(count);
    match parallelism {
        #[cfg(feature = "parallel")]
        Parallelism::Parallel if chunks > 1 => {
            use rayon::prelude::*;
            let parts: Vec<Vec<T>> = (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let mut out = Vec::new();
                    f(range(c), &mut out);
                    out
                })
                .collect();
            parts.into_iter().flatten().collect()
        }
        _ => {
            let mut out = Vec::new();
            for c in 0..chunks {
                f(range(c), &mut out);
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let f = |r: Range<u64>, out: &mut Vec<u64>| out.extend(r.filter(|i| i % 7 == 3));
        let a = scan_chunks(50_000, Parallelism::Sequential, f);
        let b = scan_chunks(50_000, Parallelism::Parallel, f);
        assert_eq!(a, b);
        assert_eq!(a.len(), (0..50_000u64).filter(|i| i % 7 == 3).count());
        assert!(a.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn empty_scan() {
        let out: Vec<u64> = scan_chunks(0, Parallelism::Parallel, |r, o| o.extend(r));
        assert!(out.is_empty());
    }
}
