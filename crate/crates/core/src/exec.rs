//! Data-parallel execution with a sequential fallback.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] fans
//! independent work items out over the rayon pool. Without it, both variants
//! run sequentially. Results always come back in input order, so output is
//! identical regardless of schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Parallel,
    Sequential,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// `f(i)` for every `i` in `0..len`, in order.
    pub fn map_indices<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().map(f).collect(),
            _ => (0..len).map(f).collect(),
        }
    }

    /// Like [`map_indices`](Self::map_indices) but stops at the first error.
    pub fn try_map_indices<R, E, F>(self, len: usize, f: F) -> Result<Vec<R>, E>
    where
        R: Send,
        E: Send,
        F: Fn(usize) -> Result<R, E> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().map(f).collect(),
            _ => (0..len).map(f).collect(),
        }
    }
}

/// Runs `f` with at most `threads` workers. `None` keeps the global pool.
pub fn with_threads<R: Send>(threads: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if let Some(n) = threads {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool");
        return pool.install(f);
    }
    let _ = threads;
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree_and_keep_order() {
        let a = Execution::Parallel.map_indices(100, |i| i * i);
        let b = Execution::Sequential.map_indices(100, |i| i * i);
        assert_eq!(a, b);
        assert_eq!(a[7], 49);
    }

    #[test]
    fn try_map_surfaces_errors() {
        let r: Result<Vec<usize>, usize> =
            Execution::Parallel.try_map_indices(10, |i| if i == 4 { Err(i) } else { Ok(i) });
        assert_eq!(r, Err(4));
    }

    #[test]
    fn thread_cap_runs_closure() {
        assert_eq!(with_threads(Some(2), || 5), 5);
        assert_eq!(with_threads(None, || 6), 6);
    }
}
