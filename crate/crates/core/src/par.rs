//! Data-parallel helpers. With the `parallel` feature they run on rayon;
//! without it, or with [`Execution::Sequential`], they fall back to plain
//! iterators. Results are always returned in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
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
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

pub fn map_with<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_with(Execution::default(), items, f)
}

/// `map` over `0..n`.
pub fn map_range_with<R, F>(exec: Execution, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// The first item (in input order) for which `f` returns `Some`.
pub fn find_map_first_with<T, R, F>(exec: Execution, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().find_map_first(f);
    }
    let _ = exec;
    items.iter().find_map(f)
}

pub fn find_map_first<T, R, F>(items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    find_map_first_with(Execution::default(), items, f)
}

/// Runs `f` inside a pool of `threads` workers (0 = rayon default).
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    if threads > 0 {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            return pool.install(f);
        }
    }
    let _ = threads;
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map_with(Execution::Sequential, &xs, |x| x * x);
        let b = map_with(Execution::Parallel, &xs, |x| x * x);
        assert_eq!(a, b);
        let f = |x: &u64| (x % 97 == 96).then_some(*x);
        assert_eq!(find_map_first_with(Execution::Parallel, &xs, f), Some(96));
        assert_eq!(find_map_first_with(Execution::Sequential, &xs, f), Some(96));
        assert_eq!(with_threads(2, || map_range_with(Execution::Parallel, 5, |i| i)), vec![0, 1, 2, 3, 4]);
    }
}
