//! Order-preserving parallel map. With the `parallel` feature off, or with
//! the runtime switch set, everything runs on the calling thread. Results
//! are always returned in input order so reductions stay deterministic.

use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Forces the sequential path at runtime (benchmarks compare both).
pub fn set_sequential(on: bool) {
    FORCE_SEQUENTIAL.store(on, Ordering::SeqCst);
}

pub fn is_sequential() -> bool {
    !cfg!(feature = "parallel") || FORCE_SEQUENTIAL.load(Ordering::SeqCst)
}

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if !is_sequential() {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
    }
    items.iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    #[test]
    fn order_is_preserved() {
        let v: Vec<u64> = (0..1000).collect();
        let out = super::map(&v, |x| x * x);
        assert_eq!(out, v.iter().map(|x| x * x).collect::<Vec<_>>());
    }
}
