//! Range sweeps over `n = 0..=max_n`, the unit of work the CLI `verify`
//! command and the benchmarks fan out.
//!
//! Each sweep has a `_seq` twin that always runs on the current thread;
//! the unsuffixed entry point uses rayon when the `parallel` feature is
//! enabled (the default) and falls back to the sequential twin otherwise.
//! Results are exact integers, so the two always agree bit-for-bit.

use num_bigint::BigUint;

use crate::durfee::{count_at_most_squares, count_g};
use crate::partition::{enumerate_overpartitions, enumerate_partitions};
use crate::rrg::count_dki;
use crate::weighted::{verify_weighted_identity, WeightedIdentityReport};
use crate::Result;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

fn range_map_seq<T: Send>(max_n: u64, f: impl Fn(u64) -> T + Sync) -> Vec<T> {
    (0..=max_n).map(f).collect()
}

#[allow(unused_variables)]
fn range_map<T: Send>(max_n: u64, f: impl Fn(u64) -> T + Sync) -> Vec<T> {
    if_rayon!(
        (0..=max_n).into_par_iter().map(&f).collect(),
        range_map_seq(max_n, f)
    )
}

/// `p(n)` for `n = 0..=max_n`, by enumeration.
pub fn partition_counts(max_n: u64) -> Vec<BigUint> {
    range_map(max_n, |n| BigUint::from(enumerate_partitions(n).count()))
}

/// Sequential twin of [`partition_counts`].
pub fn partition_counts_seq(max_n: u64) -> Vec<BigUint> {
    range_map_seq(max_n, |n| BigUint::from(enumerate_partitions(n).count()))
}

/// `pbar(n)` for `n = 0..=max_n`, by enumeration.
pub fn overpartition_counts(max_n: u64) -> Vec<BigUint> {
    range_map(max_n, |n| {
        BigUint::from(enumerate_overpartitions(n).count())
    })
}

/// Sequential twin of [`overpartition_counts`].
pub fn overpartition_counts_seq(max_n: u64) -> Vec<BigUint> {
    range_map_seq(max_n, |n| {
        BigUint::from(enumerate_overpartitions(n).count())
    })
}

/// `g(n)` for `n = 0..=max_n`.
pub fn count_g_range(max_n: u64) -> Vec<BigUint> {
    range_map(max_n, count_g)
}

/// Sequential twin of [`count_g_range`].
pub fn count_g_range_seq(max_n: u64) -> Vec<BigUint> {
    range_map_seq(max_n, count_g)
}

/// `D_{k,i}(n)` for `n = 0..=max_n`.
pub fn count_dki_range(max_n: u64, k: u64, i: u64) -> Result<Vec<BigUint>> {
    count_dki(0, k, i)?; // validate once
    Ok(range_map(max_n, |n| {
        count_dki(n, k, i).expect("validated parameters")
    }))
}

/// Sequential twin of [`count_dki_range`].
pub fn count_dki_range_seq(max_n: u64, k: u64, i: u64) -> Result<Vec<BigUint>> {
    count_dki(0, k, i)?;
    Ok(range_map_seq(max_n, |n| {
        count_dki(n, k, i).expect("validated parameters")
    }))
}

/// Overpartitions of `n` with at most `j` squares, for `n = 0..=max_n`.
pub fn count_at_most_squares_range(max_n: u64, j: u64) -> Vec<BigUint> {
    range_map(max_n, |n| count_at_most_squares(n, j))
}

/// Sequential twin of [`count_at_most_squares_range`].
pub fn count_at_most_squares_range_seq(max_n: u64, j: u64) -> Vec<BigUint> {
    range_map_seq(max_n, |n| count_at_most_squares(n, j))
}

/// Weighted-identity reports for `n = 0..=max_n`.
///
/// The per-`n` sweeps already parallelize internally, so this driver stays
/// sequential over `n` and keeps the reports in order.
pub fn weighted_reports(max_n: u64, k: u64) -> Result<Vec<WeightedIdentityReport>> {
    (0..=max_n).map(|n| verify_weighted_identity(n, k)).collect()
}
