//! Execution mode for the batch scans (pair/triple scans, subset sweeps,
//! random sampling).
//!
//! With the `parallel` feature the scans run on the rayon pool unless the
//! caller is inside [`sequential`]. Without the feature everything runs on
//! the calling thread. Results never depend on the mode: every helper returns
//! its output in index order.

use std::cell::Cell;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

thread_local! {
    static FORCE_SEQUENTIAL: Cell<bool> = const { Cell::new(false) };
}

/// The mode the helpers will use on this thread.
pub fn current() -> Exec {
    if cfg!(feature = "parallel") && !FORCE_SEQUENTIAL.with(Cell::get) {
        Exec::Parallel
    } else {
        Exec::Sequential
    }
}

/// Runs `f` with every scan on this thread forced onto the sequential path.
pub fn sequential<T>(f: impl FnOnce() -> T) -> T {
    struct Restore(bool);
    impl Drop for Restore {
        fn drop(&mut self) {
            FORCE_SEQUENTIAL.with(|c| c.set(self.0));
        }
    }
    let _restore = Restore(FORCE_SEQUENTIAL.with(|c| c.replace(true)));
    f()
}

pub(crate) fn map<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if current() == Exec::Parallel {
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// Indices in `0..n` satisfying `pred`, ascending.
pub(crate) fn filter<F>(n: usize, pred: F) -> Vec<usize>
where
    F: Fn(usize) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if current() == Exec::Parallel {
        return (0..n).into_par_iter().filter(|&i| pred(i)).collect();
    }
    (0..n).filter(|&i| pred(i)).collect()
}

/// Smallest index in `0..n` for which `f` yields a value.
pub(crate) fn find_first<T, F>(n: usize, f: F) -> Option<T>
where
    T: Send,
    F: Fn(usize) -> Option<T> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if current() == Exec::Parallel {
        return (0..n).into_par_iter().find_map_first(f);
    }
    (0..n).find_map(f)
}
