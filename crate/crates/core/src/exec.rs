//! Data-parallel execution with a sequential fallback.
//!
//! With the `parallel` feature, work is spread over a rayon pool; without
//! it, or with one worker, everything runs in order on the calling thread.
//! Results always come back in input order.

use std::fmt;
use std::ops::Range;
#[cfg(feature = "parallel")]
use std::sync::Arc;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone)]
pub struct Execution {
    workers: usize,
    #[cfg(feature = "parallel")]
    pool: Option<Arc<rayon::ThreadPool>>,
}

impl Execution {
    pub fn sequential() -> Self {
        Execution {
            workers: 1,
            #[cfg(feature = "parallel")]
            pool: None,
        }
    }

    /// `workers == 0` means one per available core. Falls back to
    /// sequential when built without the `parallel` feature.
    pub fn parallel(workers: usize) -> Self {
        #[cfg(feature = "parallel")]
        {
            if workers == 1 {
                return Self::sequential();
            }
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .ok()
                .map(Arc::new);
            let workers = pool.as_ref().map(|p| p.current_num_threads()).unwrap_or(1);
            Execution { workers, pool }
        }
        #[cfg(not(feature = "parallel"))]
        {
            let _ = workers;
            Self::sequential()
        }
    }

    pub fn workers(&self) -> usize {
        self.workers
    }

    pub fn is_parallel(&self) -> bool {
        self.workers > 1
    }

    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            return pool.install(|| items.par_iter().map(&f).collect());
        }
        items.iter().map(f).collect()
    }

    pub fn map_range<R, F>(&self, range: Range<usize>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            return pool.install(|| range.into_par_iter().map(&f).collect());
        }
        range.map(f).collect()
    }

    /// Splits `0..total` into blocks of `block` and maps each block.
    pub fn map_blocks<R, F>(&self, total: usize, block: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(Range<usize>) -> R + Sync + Send,
    {
        let block = block.max(1);
        let count = total.div_ceil(block);
        self.map_range(0..count, |b| f(b * block..((b + 1) * block).min(total)))
    }
}

impl Default for Execution {
    /// Parallel over all cores when available.
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Self::parallel(0)
        } else {
            Self::sequential()
        }
    }
}

impl fmt::Debug for Execution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Execution")
            .field("workers", &self.workers)
            .finish()
    }
}
