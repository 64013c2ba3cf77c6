//! Generalized and successive Durfee squares for overpartitions.
//!
//! The generalized Durfee square of an overpartition has size `N` when `N`
//! is the largest integer such that the number of overlined parts plus the
//! number of non-overlined parts `>= N` is at least `N`. Successive squares
//! repeat the ordinary Durfee square on the partition of rows left below
//! the previous square.

use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::partition::{enumerate_overpartitions, Overpartition, Part};
use crate::{Error, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Rows in Durfee order: overlined parts in decreasing value order first,
/// then non-overlined parts in decreasing value order.
pub fn durfee_order(op: &Overpartition) -> Vec<Part> {
    let mut rows: Vec<Part> = op.parts().iter().copied().filter(|p| p.overlined).collect();
    rows.extend(op.parts().iter().copied().filter(|p| !p.overlined));
    rows
}

/// Size of the generalized Durfee square; 0 for the empty overpartition.
pub fn generalized_durfee_size(op: &Overpartition) -> u64 {
    let overlined = op.overline_count() as u64;
    let mut best = 0;
    for n in 1..=op.len() as u64 {
        let tall = op
            .parts()
            .iter()
            .filter(|p| !p.overlined && p.value >= n)
            .count() as u64;
        if overlined + tall >= n {
            best = n;
        }
    }
    best
}

/// The successive Durfee square dissection.
///
/// `sizes[0]` is the generalized Durfee square size; deeper entries are the
/// ordinary Durfee square sizes of the residual partitions. `levels[j]`
/// holds the rows constituting level `j+1`; level 1 rows may be overlined,
/// all deeper rows are plain. Concatenating the levels reproduces the
/// Durfee-ordered overpartition, so the dissection is lossless.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DurfeeDissection {
    sizes: Vec<u64>,
    levels: Vec<Vec<Part>>,
}

impl DurfeeDissection {
    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn levels(&self) -> &[Vec<Part>] {
        &self.levels
    }

    pub fn num_squares(&self) -> usize {
        self.sizes.len()
    }

    /// All rows in Durfee order (levels concatenated).
    pub fn rows(&self) -> Vec<Part> {
        self.levels.iter().flatten().copied().collect()
    }

    /// JSON form: `{"sizes":[...], "levels":[[...],...]}` with level-1 rows
    /// as `{"v":..,"o":..}` objects and deeper rows as plain integers.
    pub fn to_json(&self) -> Value {
        let levels: Vec<Value> = self
            .levels
            .iter()
            .enumerate()
            .map(|(j, rows)| {
                if j == 0 {
                    json!(rows)
                } else {
                    Value::Array(rows.iter().map(|p| json!(p.value)).collect())
                }
            })
            .collect();
        json!({ "sizes": self.sizes, "levels": levels })
    }
}

/// Ordinary Durfee square size of a plain partition: largest `d` with
/// `parts[d-1] >= d`.
fn classical_durfee_size(parts: &[u64]) -> u64 {
    let mut d = 0;
    for (i, &p) in parts.iter().enumerate() {
        if p >= (i + 1) as u64 {
            d = (i + 1) as u64;
        } else {
            break;
        }
    }
    d
}

/// Compute the successive Durfee square dissection of an overpartition.
pub fn dissect(op: &Overpartition) -> DurfeeDissection {
    let rows = durfee_order(op);
    let n1 = generalized_durfee_size(op);
    if n1 == 0 {
        return DurfeeDissection { sizes: Vec::new(), levels: Vec::new() };
    }
    let n1u = n1 as usize;
    let mut sizes = vec![n1];
    let mut levels = vec![rows[..n1u].to_vec()];
    debug_assert!(rows[n1u..].iter().all(|p| !p.overlined && p.value <= n1));
    let mut below: Vec<u64> = rows[n1u..].iter().map(|p| p.value).collect();
    while !below.is_empty() {
        let d = classical_durfee_size(&below);
        let du = d as usize;
        sizes.push(d);
        levels.push(below[..du].iter().map(|&v| Part::plain(v)).collect());
        below.drain(..du);
    }
    debug_assert!(sizes.windows(2).all(|w| w[0] >= w[1]));
    DurfeeDissection { sizes, levels }
}

/// Number of successive Durfee squares; 0 only for the empty overpartition.
pub fn num_successive_squares(op: &Overpartition) -> u64 {
    dissect(op).num_squares() as u64
}

/// Brute-force count of overpartitions of `n` whose number of parts equals
/// the generalized Durfee square size.
pub fn count_g(n: u64) -> BigUint {
    let matching = if_rayon!(
        {
            let all: Vec<_> = enumerate_overpartitions(n).collect();
            all.par_iter()
                .filter(|o| o.len() as u64 == generalized_durfee_size(o))
                .count()
        },
        enumerate_overpartitions(n)
            .filter(|o| o.len() as u64 == generalized_durfee_size(o))
            .count()
    );
    BigUint::from(matching)
}

/// Brute-force count of overpartitions of `n` with at most `j` successive
/// Durfee squares.
pub fn count_at_most_squares(n: u64, j: u64) -> BigUint {
    let matching = if_rayon!(
        {
            let all: Vec<_> = enumerate_overpartitions(n).collect();
            all.par_iter()
                .filter(|o| num_successive_squares(o) <= j)
                .count()
        },
        enumerate_overpartitions(n)
            .filter(|o| num_successive_squares(o) <= j)
            .count()
    );
    BigUint::from(matching)
}

/// Validate CLI-facing parameters for the at-most-squares count.
pub fn validate_squares_bound(j: u64) -> Result<()> {
    if j == 0 {
        return Err(Error::InvalidK(j));
    }
    Ok(())
}
