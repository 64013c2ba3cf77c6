//! The Durfee-square bijection, the squares-collapsing surjection `phi`,
//! fiber enumeration, and the weighted-identity verification driver.
//!
//! `thm21_forward` / `thm21_inverse` realize the bijection between pairs
//! `(gamma, delta)` and overpartitions whose part count equals their
//! generalized Durfee square size. `phi` collapses an overpartition with
//! `k` or more successive Durfee squares down to at most `k - 1` squares
//! while preserving the weight; its fibers carry the combinatorial weights
//! that recover the unrestricted overpartition count.
//!
//! The literal product formula for those weights (`weight_literal`) is
//! implemented verbatim and compared against the fiber sizes; the two are
//! known to disagree on small cases, so the fiber count is the ground
//! truth and every divergence is surfaced in the report rather than
//! patched over.

use num_bigint::BigUint;
use num_traits::One;
use serde_json::{json, Value};

use crate::durfee::{dissect, generalized_durfee_size, num_successive_squares};
use crate::partition::{
    add_overlay_rows, enumerate_overpartitions, DistinctDelta, Overpartition, Part, Partition,
};
use crate::{Error, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// A pair `(gamma, delta)`: a partition with `N` distinct parts and a
/// strictly decreasing sequence of integers in `0..N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm21Pair {
    gamma: Partition,
    delta: DistinctDelta,
}

impl Thm21Pair {
    pub fn new(gamma: Partition, delta: DistinctDelta) -> Result<Self> {
        if !gamma.has_distinct_parts() {
            return Err(Error::GammaNotDistinct);
        }
        delta.check_bound(gamma.len() as u64)?;
        Ok(Thm21Pair { gamma, delta })
    }

    pub fn gamma(&self) -> &Partition {
        &self.gamma
    }

    pub fn delta(&self) -> &DistinctDelta {
        &self.delta
    }

    pub fn sigma(&self) -> BigUint {
        self.gamma.sigma() + self.delta.sigma()
    }
}

/// Forward direction of the bijection: overline every part of `gamma`,
/// then for each `delta`-part `i - 1` add `i - 1` to the `i`-th part of
/// `gamma` and remove its overline. The image has `N` parts and
/// generalized Durfee square size `N`.
pub fn thm21_forward(pair: &Thm21Pair) -> Overpartition {
    let n = pair.gamma.len();
    let mut rows: Vec<Part> = Vec::with_capacity(n);
    for i in 1..=n {
        let base = pair.gamma.parts()[i - 1];
        if pair.delta.contains((i - 1) as u64) {
            rows.push(Part::plain(base + (i - 1) as u64));
        } else {
            rows.push(Part::overlined(base));
        }
    }
    Overpartition::new(rows).expect("distinct gamma parts keep overlines distinct")
}

/// Inverse direction: strip overlines into `gamma`, then insert each
/// non-overlined part `a` back as `a - m` where `m` is the smallest index
/// with `a - m > gamma_{m+1}` (reading `gamma_{m+1} = 0` past the end),
/// recording `m` in `delta`.
///
/// Accepts exactly the overpartitions whose part count equals their
/// generalized Durfee square size.
pub fn thm21_inverse(op: &Overpartition) -> Result<Thm21Pair> {
    let n = op.len() as u64;
    let size = generalized_durfee_size(op);
    if size != n {
        return Err(Error::NotInGSet { parts: op.len(), size });
    }
    let rows = crate::durfee::durfee_order(op);
    let overlined = op.overline_count();
    let mut gamma: Vec<u64> = rows[..overlined].iter().map(|p| p.value).collect();
    let mut delta_parts: Vec<u64> = Vec::with_capacity(rows.len() - overlined);
    for row in &rows[overlined..] {
        let a = row.value;
        let mut m = 0usize;
        loop {
            let below = gamma.get(m).copied().unwrap_or(0);
            if a > m as u64 && a - m as u64 > below {
                break;
            }
            m += 1;
            assert!(
                m <= gamma.len(),
                "insertion index escaped gamma while inverting part {a}"
            );
        }
        gamma.insert(m, a - m as u64);
        delta_parts.push(m as u64);
    }
    let gamma = Partition::new(gamma).expect("inserted parts are positive");
    let delta = DistinctDelta::new(delta_parts)
        .expect("insertion indices of the inverse map are distinct");
    Thm21Pair::new(gamma, delta)
}

/// Add `shift` to every overlined value, keeping flags.
fn lift_overlined(op: &Overpartition, shift: u64) -> Overpartition {
    let rows: Vec<Part> = op
        .parts()
        .iter()
        .map(|p| {
            if p.overlined {
                Part::overlined(p.value + shift)
            } else {
                *p
            }
        })
        .collect();
    Overpartition::new(rows).expect("shifting overlined values keeps them distinct")
}

/// The surjection onto overpartitions with at most `k - 1` successive
/// Durfee squares. Weight-preserving and idempotent.
pub fn phi(lam: &Overpartition, k: u64) -> Result<Overpartition> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let diss = dissect(lam);
    if (diss.num_squares() as u64) <= k - 1 {
        return Ok(lam.clone());
    }
    let n1 = diss.sizes()[0];

    // lift overlined parts out of tie range, then re-dissect from scratch
    let lifted = lift_overlined(lam, n1);
    let lifted_diss = dissect(&lifted);
    assert_eq!(
        lifted_diss.num_squares(),
        diss.num_squares(),
        "lifting changed the square count for {lam}"
    );
    assert_eq!(
        lifted_diss.sizes()[0],
        n1,
        "lifting changed the first square size for {lam}"
    );

    // split below the (k-1)-th square
    let cut: u64 = lifted_diss.sizes()[..(k - 1) as usize].iter().sum();
    let rows = lifted_diss.rows();
    let (above, below) = rows.split_at(cut as usize);
    assert!(
        below.iter().all(|p| !p.overlined),
        "rows below the cut must be plain for {lam}"
    );
    let below = Partition::new(below.iter().map(|p| p.value).collect())
        .expect("plain rows form a partition");

    // fold the tail back in as columns, then undo the lift
    let summed = add_overlay_rows(above, &below.conjugate())
        .expect("conjugate height is bounded by the retained square rows");
    let rows: Vec<Part> = summed
        .into_iter()
        .map(|p| {
            if p.overlined {
                assert!(p.value > n1, "overlined row fell below the lift for {lam}");
                Part::overlined(p.value - n1)
            } else {
                p
            }
        })
        .collect();
    Ok(Overpartition::new(rows).expect("overlined rows stay distinct after the shift back"))
}

/// Literal product formula for the fiber weight of `beta`, evaluated
/// verbatim: 1 when `beta` has fewer than `k - 1` squares, otherwise
/// `prod_{i=1}^{N_{k-1}} (beta'_i - beta'_{i+1} + 1 - eps(beta'_{i+1}))`
/// where `beta'` is `beta` with `N_1` added to each overlined part and
/// sorted decreasingly, indices past the end read as non-overlined zeros,
/// and `eps` is 1 exactly on overlined parts.
///
/// This formula is known to over-count the actual fiber sizes on small
/// inputs; compare against [`fibers`].
pub fn weight_literal(beta: &Overpartition, k: u64) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let diss = dissect(beta);
    let squares = diss.num_squares() as u64;
    if squares > k - 1 {
        return Err(Error::TooManySquares { squares: diss.num_squares(), max: k - 1 });
    }
    if squares < k - 1 {
        return Ok(BigUint::one());
    }
    let n1 = diss.sizes()[0];
    let last_square = *diss.sizes().last().expect("k - 1 >= 1 squares");
    let lifted = lift_overlined(beta, n1);
    let part_at = |index1: u64| -> Part {
        lifted
            .parts()
            .get((index1 - 1) as usize)
            .copied()
            .unwrap_or(Part::plain(0))
    };
    let mut weight = BigUint::one();
    for i in 1..=last_square {
        let head = part_at(i);
        let next = part_at(i + 1);
        let eps = u64::from(next.overlined);
        weight *= BigUint::from(head.value - next.value + 1 - eps);
    }
    Ok(weight)
}

/// The preimage of a single target overpartition under [`phi`], computed
/// by exhaustive forward search, together with the literal weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberReport {
    pub beta: Overpartition,
    pub fiber: Vec<Overpartition>,
    pub literal_weight: BigUint,
    pub agrees: bool,
}

impl FiberReport {
    pub fn fiber_count(&self) -> usize {
        self.fiber.len()
    }

    /// JSON form:
    /// `{"beta":.., "fiber":[..], "literal_weight":"..", "fiber_count":.., "agrees":..}`.
    pub fn to_json(&self) -> Value {
        json!({
            "beta": self.beta,
            "fiber": self.fiber,
            "literal_weight": self.literal_weight.to_string(),
            "fiber_count": self.fiber.len(),
            "agrees": self.agrees,
        })
    }
}

/// Enumerate the fiber of `beta` under `phi` by sweeping every
/// overpartition of the same weight.
pub fn fibers(beta: &Overpartition, k: u64) -> Result<FiberReport> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let squares = num_successive_squares(beta);
    if squares > k - 1 {
        return Err(Error::TooManySquares { squares: squares as usize, max: k - 1 });
    }
    let n = u64::try_from(beta.sigma())
        .map_err(|_| Error::WeightTooLarge(beta.sigma().to_string()))?;
    let fiber: Vec<Overpartition> = if_rayon!(
        {
            let all: Vec<_> = enumerate_overpartitions(n).collect();
            all.into_par_iter()
                .filter(|lam| phi(lam, k).expect("validated k") == *beta)
                .collect()
        },
        enumerate_overpartitions(n)
            .filter(|lam| phi(lam, k).expect("validated k") == *beta)
            .collect()
    );
    let literal_weight = weight_literal(beta, k)?;
    let agrees = literal_weight == BigUint::from(fiber.len());
    Ok(FiberReport { beta: beta.clone(), fiber, literal_weight, agrees })
}

/// Every valid `(gamma, delta)` pair of combined weight `total`.
///
/// These are the preimages of the Durfee-square bijection, so their number
/// equals the count of overpartitions of `total` whose part count matches
/// their generalized Durfee square size.
pub fn enumerate_thm21_pairs(total: u64) -> Vec<Thm21Pair> {
    fn distinct_partitions(
        weight: u64,
        parts: u64,
        max: u64,
        prefix: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if parts == 0 {
            if weight == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        // the parts below the leading one need at least T(parts - 1)
        let tail_min = (parts - 1) * parts / 2;
        let hi = max.min(weight.saturating_sub(tail_min));
        for v in (parts..=hi).rev() {
            prefix.push(v);
            distinct_partitions(weight - v, parts - 1, v - 1, prefix, out);
            prefix.pop();
        }
    }

    let mut pairs = Vec::new();
    let mut n_parts = 0u64;
    while n_parts * (n_parts + 1) / 2 <= total {
        for gamma_weight in (n_parts * (n_parts + 1) / 2)..=total {
            let mut gammas = Vec::new();
            if n_parts == 0 {
                if gamma_weight == 0 {
                    gammas.push(Vec::new());
                }
            } else {
                let mut prefix = Vec::new();
                distinct_partitions(gamma_weight, n_parts, gamma_weight, &mut prefix, &mut gammas);
            }
            let need = total - gamma_weight;
            for gamma in gammas {
                for mask in 0u64..(1 << n_parts) {
                    let delta_parts: Vec<u64> =
                        (0..n_parts).filter(|i| mask & (1 << i) != 0).collect();
                    if delta_parts.iter().sum::<u64>() != need {
                        continue;
                    }
                    let pair = Thm21Pair::new(
                        Partition::new(gamma.clone()).expect("positive parts"),
                        DistinctDelta::new(delta_parts).expect("distinct by construction"),
                    )
                    .expect("bounds hold by construction");
                    pairs.push(pair);
                }
            }
        }
        n_parts += 1;
    }
    pairs
}

/// Per-target row of a weighted-identity verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedEntry {
    pub beta: Overpartition,
    pub fiber_count: BigUint,
    pub literal_weight: BigUint,
    pub agrees: bool,
}

impl WeightedEntry {
    pub fn to_json(&self) -> Value {
        json!({
            "beta": self.beta,
            "fiber_count": self.fiber_count.to_string(),
            "literal_weight": self.literal_weight.to_string(),
            "agrees": self.agrees,
        })
    }
}

/// Full verification of the weighted identity at one weight `n`:
/// fiber sizes over the at-most-`k-1`-squares targets sum to the
/// unrestricted overpartition count, with the literal-formula comparison
/// reported per target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedIdentityReport {
    pub n: u64,
    pub k: u64,
    /// Unrestricted overpartition count, by enumeration.
    pub pbar: BigUint,
    /// Number of targets (overpartitions of `n` with at most `k-1` squares).
    pub beta_count: BigUint,
    /// Sum of fiber sizes over the targets.
    pub fiber_sum: BigUint,
    /// Sum of the literal weights over the targets.
    pub literal_sum: BigUint,
    /// Every image of `phi` lands in the target set, preserving weight.
    pub total_map: bool,
    /// `phi` fixes every target pointwise (hence is idempotent).
    pub fixes_beta_set: bool,
    pub entries: Vec<WeightedEntry>,
    /// Fiber-based identity: `fiber_sum == pbar`, totality, pointwise fix.
    pub pass: bool,
}

impl WeightedIdentityReport {
    /// Entries where the literal formula disagrees with the fiber size.
    pub fn disagreements(&self) -> impl Iterator<Item = &WeightedEntry> {
        self.entries.iter().filter(|e| !e.agrees)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "k": self.k,
            "pbar": self.pbar.to_string(),
            "beta_count": self.beta_count.to_string(),
            "fiber_sum": self.fiber_sum.to_string(),
            "literal_sum": self.literal_sum.to_string(),
            "total_map": self.total_map,
            "fixes_beta_set": self.fixes_beta_set,
            "pass": self.pass,
            "entries": self.entries.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Sweep every overpartition of `n` through `phi` and reconcile the fiber
/// census against the unrestricted count.
pub fn verify_weighted_identity(n: u64, k: u64) -> Result<WeightedIdentityReport> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let all: Vec<Overpartition> = enumerate_overpartitions(n).collect();
    let pbar = BigUint::from(all.len());

    let images: Vec<Overpartition> = if_rayon!(
        all.par_iter().map(|lam| phi(lam, k).expect("validated k")).collect(),
        all.iter().map(|lam| phi(lam, k).expect("validated k")).collect()
    );

    let mut total_map = true;
    let mut census: std::collections::HashMap<&Overpartition, u64> =
        std::collections::HashMap::new();
    for (lam, image) in all.iter().zip(&images) {
        if image.sigma() != lam.sigma() || num_successive_squares(image) > k - 1 {
            total_map = false;
        }
        *census.entry(image).or_insert(0) += 1;
    }

    let mut entries = Vec::new();
    let mut fixes_beta_set = true;
    let mut fiber_sum = BigUint::ZERO;
    let mut literal_sum = BigUint::ZERO;
    for beta in all.iter().filter(|o| num_successive_squares(o) <= k - 1) {
        if phi(beta, k)? != *beta {
            fixes_beta_set = false;
        }
        let fiber_count = BigUint::from(census.get(beta).copied().unwrap_or(0));
        let literal_weight = weight_literal(beta, k)?;
        fiber_sum += &fiber_count;
        literal_sum += &literal_weight;
        let agrees = fiber_count == literal_weight;
        entries.push(WeightedEntry {
            beta: beta.clone(),
            fiber_count,
            literal_weight,
            agrees,
        });
    }

    let beta_count = BigUint::from(entries.len());
    let pass = fiber_sum == pbar && total_map && fixes_beta_set;
    Ok(WeightedIdentityReport {
        n,
        k,
        pbar,
        beta_count,
        fiber_sum,
        literal_sum,
        total_map,
        fixes_beta_set,
        entries,
        pass,
    })
}
