//! Data-parallel sweep helpers with a sequential fallback.
//!
//! Law checks here are embarrassingly parallel: a large set of
//! independent instances, each mapped to zero or more violations.
//! With the `parallel` feature (default) the sweep fans out over
//! rayon; without it, or via the `*_seq` entry points, it runs
//! sequentially. Results are sorted afterwards, so both paths produce
//! identical reports.

use crate::report::{ValidationReport, Violation};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map every item to its violations and merge into one canonical report.
pub fn sweep<T, F>(items: Vec<T>, check: F) -> ValidationReport
where
    T: Send,
    F: Fn(&T) -> Vec<Violation> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        let n = items.len() as u64;
        let violations: Vec<Violation> = items
            .par_iter()
            .flat_map_iter(|item| check(item))
            .collect();
        let mut report = ValidationReport {
            checks: n,
            violations,
        };
        report.canonicalize();
        report
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_seq(items, check)
    }
}

/// Sequential reference implementation of [`sweep`].
pub fn sweep_seq<T, F>(items: Vec<T>, check: F) -> ValidationReport
where
    F: Fn(&T) -> Vec<Violation>,
{
    let mut report = ValidationReport {
        checks: items.len() as u64,
        violations: Vec::new(),
    };
    for item in &items {
        report.violations.extend(check(item));
    }
    report.canonicalize();
    report
}

/// Map items in parallel, collecting outputs in input order.
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(|t| f(t)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(|t| f(t)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_even(n: &u64) -> Vec<Violation> {
        if n % 2 == 0 {
            vec![]
        } else {
            vec![Violation {
                rule: "even".into(),
                at: n.to_string(),
                detail: "odd".into(),
            }]
        }
    }

    #[test]
    fn parallel_and_sequential_sweeps_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let a = sweep(items.clone(), check_even);
        let b = sweep_seq(items, check_even);
        assert_eq!(a, b);
        assert_eq!(a.checks, 1000);
        assert_eq!(a.violations.len(), 500);
    }
}
