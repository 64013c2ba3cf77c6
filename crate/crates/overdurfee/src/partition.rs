//! Canonical partition and overpartition types, Ferrers-graph operations,
//! and the exhaustive enumerators used as counting oracles.
//!
//! An [`Overpartition`] is kept in canonical order: weakly decreasing by
//! value, and at equal value the overlined copy comes first. At most one
//! part per value may be overlined. The text grammar is
//! `part ("," part)*` with `part := DIGITS ["o"]`, e.g. `"7,6,6,5o,3o,3,2,1o"`.

use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// One row of an overpartition: a positive value plus an overline flag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Part {
    #[serde(rename = "v")]
    pub value: u64,
    #[serde(rename = "o")]
    pub overlined: bool,
}

impl Part {
    pub fn plain(value: u64) -> Self {
        Part { value, overlined: false }
    }

    pub fn overlined(value: u64) -> Self {
        Part { value, overlined: true }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.overlined { "o" } else { "" })
    }
}

/// An ordinary partition: weakly decreasing positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Build a partition from arbitrary-order positive parts.
    /// Parts are sorted into weakly decreasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 1-based index, 0 beyond the end.
    pub fn part_or_zero(&self, index1: usize) -> u64 {
        if index1 >= 1 {
            self.parts.get(index1 - 1).copied().unwrap_or(0)
        } else {
            0
        }
    }

    /// Sum of the parts.
    pub fn sigma(&self) -> BigUint {
        self.parts.iter().map(|&p| BigUint::from(p)).sum()
    }

    /// All parts pairwise distinct (strictly decreasing).
    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// Transpose of the Ferrers graph.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let width = self.parts[0] as usize;
        let mut cols = Vec::with_capacity(width);
        for j in 0..width as u64 {
            let count = self.parts.iter().take_while(|&&p| p > j).count() as u64;
            cols.push(count);
        }
        Partition { parts: cols }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// An overpartition in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Overpartition {
    parts: Vec<Part>,
}

impl Overpartition {
    pub fn empty() -> Self {
        Overpartition { parts: Vec::new() }
    }

    /// Build from arbitrary-order rows. Rows are re-sorted into canonical
    /// order; zero values and duplicate overlined values are rejected.
    pub fn new(mut parts: Vec<Part>) -> Result<Self> {
        if parts.iter().any(|p| p.value == 0) {
            return Err(Error::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| {
            b.value.cmp(&a.value).then(b.overlined.cmp(&a.overlined))
        });
        for w in parts.windows(2) {
            if w[0].overlined && w[1].overlined && w[0].value == w[1].value {
                return Err(Error::DuplicateOverline(w[0].value));
            }
        }
        Ok(Overpartition { parts })
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the part values; overlines do not change the weight.
    pub fn sigma(&self) -> BigUint {
        self.parts.iter().map(|p| BigUint::from(p.value)).sum()
    }

    pub fn overline_count(&self) -> usize {
        self.parts.iter().filter(|p| p.overlined).count()
    }

    /// Parse the text grammar `part ("," part)*`, `part := DIGITS ["o"]`.
    /// The empty (or all-whitespace) string is the empty overpartition.
    /// Input order is irrelevant; the result is canonical.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(Overpartition::empty());
        }
        let mut parts = Vec::new();
        for raw in trimmed.split(',') {
            let token = raw.trim();
            let (digits, overlined) = match token.strip_suffix('o') {
                Some(d) => (d, true),
                None => (token, false),
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::MalformedToken(token.to_string()));
            }
            let value: u64 = digits
                .parse()
                .map_err(|_| Error::MalformedToken(token.to_string()))?;
            if value == 0 {
                return Err(Error::ZeroPart);
            }
            parts.push(Part { value, overlined });
        }
        Overpartition::new(parts)
    }

    /// Canonical text form, the inverse of [`Overpartition::parse`].
    pub fn format(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for Overpartition {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let parts = Vec::<Part>::deserialize(deserializer)?;
        Overpartition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// Strictly decreasing nonnegative integers; the `delta` side of the
/// Durfee-square bijection, bounded by the square size in context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctDelta {
    parts: Vec<u64>,
}

impl DistinctDelta {
    pub fn empty() -> Self {
        DistinctDelta { parts: Vec::new() }
    }

    /// Build from arbitrary-order nonnegative parts; duplicates are rejected.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::DeltaNotDistinct);
        }
        Ok(DistinctDelta { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, value: u64) -> bool {
        self.parts.binary_search_by(|p| value.cmp(p)).is_ok()
    }

    pub fn sigma(&self) -> BigUint {
        self.parts.iter().map(|&p| BigUint::from(p)).sum()
    }

    /// All parts within `0..bound`.
    pub fn check_bound(&self, bound: u64) -> Result<()> {
        match self.parts.first() {
            Some(&p) if p >= bound => Err(Error::DeltaOutOfRange { part: p, bound }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for DistinctDelta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Row-wise Ferrers sum on raw rows, preserving row order and overlines.
/// Row `i` of the result is `rows[i] + overlay[i]` (overlay padded with
/// zeros) and keeps the overline flag of `rows[i]`.
pub fn add_overlay_rows(rows: &[Part], overlay: &Partition) -> Result<Vec<Part>> {
    if overlay.len() > rows.len() {
        return Err(Error::OverlayTooManyRows {
            got: overlay.len(),
            limit: rows.len(),
        });
    }
    Ok(rows
        .iter()
        .enumerate()
        .map(|(i, p)| Part {
            value: p.value + overlay.parts().get(i).copied().unwrap_or(0),
            overlined: p.overlined,
        })
        .collect())
}

/// Row-wise Ferrers sum on the canonical rows of `a`, re-canonicalized.
pub fn add_overlay(a: &Overpartition, overlay: &Partition) -> Result<Overpartition> {
    let rows = add_overlay_rows(a.parts(), overlay)?;
    Overpartition::new(rows)
}

/// Iterator over all partitions of `n` in lexicographically decreasing
/// order: `(n), (n-1,1), ..., (1,1,...,1)`.
pub struct PartitionIter {
    next: Option<Vec<u64>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        self.next = successor(&current);
        Some(Partition { parts: current })
    }
}

fn successor(parts: &[u64]) -> Option<Vec<u64>> {
    // Rightmost part > 1; everything after it is a tail of 1s.
    let pivot = parts.iter().rposition(|&p| p > 1)?;
    let tail_sum = parts[pivot] + (parts.len() - pivot - 1) as u64;
    let v = parts[pivot] - 1;
    let mut next = parts[..pivot].to_vec();
    // Largest lexicographic refill: as many parts of size v as fit.
    let q = tail_sum / v;
    let r = tail_sum % v;
    next.extend(std::iter::repeat(v).take(q as usize));
    if r > 0 {
        next.push(r);
    }
    Some(next)
}

/// Yield every partition of `n` exactly once, lexicographically decreasing.
pub fn enumerate_partitions(n: u64) -> PartitionIter {
    let start = if n == 0 { Vec::new() } else { vec![n] };
    PartitionIter { next: Some(start) }
}

/// Iterator over all overpartitions of `n`: each underlying partition in
/// enumeration order combined with every subset of its distinct values as
/// the overlined set, in increasing bitmask order.
pub struct OverpartitionIter {
    partitions: PartitionIter,
    current: Option<(Vec<u64>, Vec<u64>)>, // (parts, distinct values desc)
    mask: u64,
}

impl Iterator for OverpartitionIter {
    type Item = Overpartition;

    fn next(&mut self) -> Option<Overpartition> {
        loop {
            if let Some((parts, distinct)) = &self.current {
                if self.mask < (1u64 << distinct.len()) {
                    let mask = self.mask;
                    self.mask += 1;
                    return Some(apply_mask(parts, distinct, mask));
                }
                self.current = None;
            }
            let p = self.partitions.next()?;
            let mut distinct: Vec<u64> = p.parts().to_vec();
            distinct.dedup();
            self.current = Some((p.parts().to_vec(), distinct));
            self.mask = 0;
        }
    }
}

fn apply_mask(parts: &[u64], distinct: &[u64], mask: u64) -> Overpartition {
    let mut rows = Vec::with_capacity(parts.len());
    let mut overlined_values: Vec<u64> = Vec::new();
    for (bit, &v) in distinct.iter().enumerate() {
        if mask & (1 << bit) != 0 {
            overlined_values.push(v);
        }
    }
    let mut used = std::collections::HashSet::new();
    for &v in parts {
        let overline = overlined_values.contains(&v) && used.insert(v);
        rows.push(Part { value: v, overlined: overline });
    }
    // Rows are already canonical: values decrease, overlined copy first.
    Overpartition { parts: rows }
}

/// Yield every overpartition of `n` exactly once, deterministic order.
pub fn enumerate_overpartitions(n: u64) -> OverpartitionIter {
    OverpartitionIter {
        partitions: enumerate_partitions(n),
        current: None,
        mask: 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(text: &str) -> Overpartition {
        Overpartition::parse(text).unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(Overpartition::empty().sigma(), BigUint::from(0u32));
        assert_eq!(op("7o,7,6,5o,2,1o").sigma(), BigUint::from(28u32));
        assert_eq!(op("6o,5o,7,5,5").sigma(), BigUint::from(28u32));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(
            Partition::new(vec![3, 2]).unwrap().conjugate(),
            Partition::new(vec![2, 2, 1]).unwrap()
        );
        assert_eq!(
            Partition::new(vec![1, 1]).unwrap().conjugate(),
            Partition::new(vec![2]).unwrap()
        );
    }

    #[test]
    fn conjugate_is_involution_and_preserves_sigma() {
        for n in 0..=12 {
            for p in enumerate_partitions(n) {
                let c = p.conjugate();
                assert_eq!(c.sigma(), p.sigma());
                assert_eq!(c.conjugate(), p);
            }
        }
    }

    #[test]
    fn add_overlay_examples() {
        let a = op("5o,3");
        let b = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(add_overlay(&a, &b).unwrap(), op("7o,4"));

        let a = op("3o");
        let b = Partition::new(vec![1]).unwrap();
        assert_eq!(add_overlay(&a, &b).unwrap(), op("4o"));

        let a = op("2");
        assert_eq!(add_overlay(&a, &Partition::empty()).unwrap(), op("2"));
    }

    #[test]
    fn add_overlay_rejects_overlong_overlay() {
        let a = op("2");
        let b = Partition::new(vec![1, 1]).unwrap();
        assert!(matches!(
            add_overlay(&a, &b),
            Err(Error::OverlayTooManyRows { .. })
        ));
    }

    #[test]
    fn add_overlay_preserves_weight_and_overlines() {
        for n in 0..=8 {
            for a in enumerate_overpartitions(n) {
                for m in 0..=4u64 {
                    for b in enumerate_partitions(m) {
                        if b.len() > a.len() {
                            continue;
                        }
                        let sum = add_overlay(&a, &b).unwrap();
                        assert_eq!(sum.sigma(), a.sigma() + b.sigma());
                        assert_eq!(sum.overline_count(), a.overline_count());
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_partitions_counts_and_order() {
        let zero: Vec<_> = enumerate_partitions(0).collect();
        assert_eq!(zero, vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4).count(), 5);
        assert_eq!(enumerate_partitions(5).count(), 7);

        let four: Vec<Vec<u64>> = enumerate_partitions(4)
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(
            four,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn enumerate_overpartitions_counts() {
        let one: Vec<_> = enumerate_overpartitions(1).collect();
        assert_eq!(one, vec![op("1"), op("1o")]);
        assert_eq!(enumerate_overpartitions(3).count(), 8);
        assert_eq!(enumerate_overpartitions(4).count(), 14);
    }

    #[test]
    fn enumerate_overpartitions_unique_and_valid() {
        for n in 0..=10 {
            let all: Vec<_> = enumerate_overpartitions(n).collect();
            let set: std::collections::HashSet<_> = all.iter().cloned().collect();
            assert_eq!(set.len(), all.len());
            for o in &all {
                assert_eq!(o.sigma(), BigUint::from(n));
                assert_eq!(Overpartition::new(o.parts().to_vec()).unwrap(), *o);
            }
        }
    }

    #[test]
    fn parse_and_format() {
        let alpha = op("7,6,6,5o,3o,3,2,1o");
        assert_eq!(alpha.sigma(), BigUint::from(33u32));
        assert_eq!(alpha.format(), "7,6,6,5o,3o,3,2,1o");

        assert_eq!(op(""), Overpartition::empty());
        assert_eq!(op("  "), Overpartition::empty());
        assert_eq!(Overpartition::empty().format(), "");

        // canonicalization: order and overline-first ties
        assert_eq!(op("1,2").format(), "2,1");
        assert_eq!(op("3,3o").format(), "3o,3");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            Overpartition::parse("2o,2o"),
            Err(Error::DuplicateOverline(2))
        );
        assert_eq!(Overpartition::parse("0"), Err(Error::ZeroPart));
        assert!(matches!(
            Overpartition::parse("2,,1"),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            Overpartition::parse("x"),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            Overpartition::parse("3oo"),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            Overpartition::parse("+3"),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            Overpartition::parse("-3"),
            Err(Error::MalformedToken(_))
        ));
    }

    #[test]
    fn parse_format_round_trip_enumerated() {
        for n in 0..=12 {
            for o in enumerate_overpartitions(n) {
                assert_eq!(Overpartition::parse(&o.format()).unwrap(), o);
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let alpha = op("7,6,6,5o,3o,3,2,1o");
        let json = serde_json::to_string(&alpha).unwrap();
        assert_eq!(
            json,
            "[{\"v\":7,\"o\":false},{\"v\":6,\"o\":false},{\"v\":6,\"o\":false},\
             {\"v\":5,\"o\":true},{\"v\":3,\"o\":true},{\"v\":3,\"o\":false},\
             {\"v\":2,\"o\":false},{\"v\":1,\"o\":true}]"
        );
        let back: Overpartition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, alpha);
    }

    #[test]
    fn delta_validation() {
        let d = DistinctDelta::new(vec![0, 3, 4]).unwrap();
        assert_eq!(d.parts(), &[4, 3, 0]);
        assert!(d.contains(3));
        assert!(!d.contains(2));
        assert_eq!(DistinctDelta::new(vec![1, 1]), Err(Error::DeltaNotDistinct));
        assert!(d.check_bound(5).is_ok());
        assert!(matches!(
            d.check_bound(4),
            Err(Error::DeltaOutOfRange { part: 4, bound: 4 })
        ));
    }
}
