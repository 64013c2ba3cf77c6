//! Rogers-Ramanujan-Gordon type overpartitions.
//!
//! For `k >= 2` and `1 <= i <= k`, an overpartition qualifies when the part
//! 1 occurs as a non-overlined part at most `i - 1` times, and for every
//! window `lambda_j - lambda_{j+k-1} >= 1` if `lambda_j` is overlined and
//! `>= 2` otherwise, with parts read in canonical order.

use num_bigint::BigUint;

use crate::partition::{enumerate_overpartitions, Overpartition};
use crate::{Error, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

fn validate_ki(k: u64, i: u64) -> Result<()> {
    if k < 2 || i < 1 || i > k {
        return Err(Error::InvalidKi { k, i });
    }
    Ok(())
}

/// Does `op` satisfy the multiplicity and difference conditions for the
/// parameters `(k, i)`?
pub fn is_rrg(op: &Overpartition, k: u64, i: u64) -> Result<bool> {
    validate_ki(k, i)?;
    let parts = op.parts();
    let plain_ones = parts
        .iter()
        .filter(|p| p.value == 1 && !p.overlined)
        .count() as u64;
    if plain_ones > i - 1 {
        return Ok(false);
    }
    let window = (k - 1) as usize;
    for j in 0..parts.len().saturating_sub(window) {
        let head = parts[j];
        let tail = parts[j + window];
        let required = if head.overlined { 1 } else { 2 };
        if head.value - tail.value < required {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Brute-force count of Rogers-Ramanujan-Gordon overpartitions of `n`.
pub fn count_dki(n: u64, k: u64, i: u64) -> Result<BigUint> {
    validate_ki(k, i)?;
    let matching = if_rayon!(
        {
            let all: Vec<_> = enumerate_overpartitions(n).collect();
            all.par_iter()
                .filter(|o| is_rrg(o, k, i).expect("validated parameters"))
                .count()
        },
        enumerate_overpartitions(n)
            .filter(|o| is_rrg(o, k, i).expect("validated parameters"))
            .count()
    );
    Ok(BigUint::from(matching))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(text: &str) -> Overpartition {
        Overpartition::parse(text).unwrap()
    }

    #[test]
    fn is_rrg_examples() {
        assert!(is_rrg(&op("2o,1"), 2, 2).unwrap());
        assert!(!is_rrg(&op("2,1"), 2, 2).unwrap());
        assert!(is_rrg(&Overpartition::empty(), 2, 1).unwrap());
        assert!(is_rrg(&Overpartition::empty(), 4, 4).unwrap());
    }

    #[test]
    fn invalid_parameters() {
        assert_eq!(is_rrg(&op("1"), 1, 1), Err(Error::InvalidKi { k: 1, i: 1 }));
        assert_eq!(is_rrg(&op("1"), 2, 0), Err(Error::InvalidKi { k: 2, i: 0 }));
        assert_eq!(is_rrg(&op("1"), 2, 3), Err(Error::InvalidKi { k: 2, i: 3 }));
        assert!(count_dki(3, 5, 6).is_err());
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_dki(0, 2, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(count_dki(1, 2, 1).unwrap(), BigUint::from(1u32));
        assert_eq!(count_dki(3, 2, 2).unwrap(), BigUint::from(4u32));

        let hits: Vec<_> = enumerate_overpartitions(3)
            .filter(|o| is_rrg(o, 2, 2).unwrap())
            .map(|o| o.format())
            .collect();
        let mut hits = hits;
        hits.sort();
        assert_eq!(hits, vec!["2o,1", "2o,1o", "3", "3o"]);
    }

    #[test]
    fn loosening_the_one_cap_is_monotone() {
        for k in 2..=3u64 {
            for n in 0..=12u64 {
                for i in 1..k {
                    assert!(count_dki(n, k, i).unwrap() <= count_dki(n, k, i + 1).unwrap());
                }
            }
        }
    }
}
