//! Truncated formal power series in `q` over big integers, plus every
//! generating-function family the crate verifies.
//!
//! A [`QSeries`] tracks coefficients for `q^0..q^O` exactly; operations on
//! mismatched orders truncate to the smaller one. Division never appears:
//! quotients are multiplications by [`QSeries::invert_unit`] of a unit
//! series, so everything stays in integer arithmetic.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Formal power series truncated at `q^order` with exact integer
/// coefficients (`coeffs[n]` is the coefficient of `q^n`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries { coeffs: vec![BigInt::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    pub fn monomial(coeff: BigInt, degree: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if degree <= order {
            s.coeffs[degree] = coeff;
        }
        s
    }

    /// Truncation degree `O`: coefficients are exact for `q^0..q^O`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^n` (zero beyond the truncation order).
    pub fn coeff(&self, n: usize) -> BigInt {
        self.coeffs.get(n).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Drop coefficients above `order` (which must not exceed the current
    /// truncation degree).
    pub fn truncated(&self, order: usize) -> QSeries {
        assert!(order <= self.order(), "cannot extend a truncated series");
        QSeries { coeffs: self.coeffs[..=order].to_vec() }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] + &other.coeffs[n])
            .collect();
        QSeries { coeffs }
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| &self.coeffs[n] - &other.coeffs[n])
            .collect();
        QSeries { coeffs }
    }

    pub fn scale(&self, factor: &BigInt) -> QSeries {
        QSeries { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs }
    }

    /// Multiply by `q^shift`, truncating at the current order.
    pub fn shifted(&self, shift: usize) -> QSeries {
        let order = self.order();
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            if n + shift <= order {
                coeffs[n + shift] = c.clone();
            }
        }
        QSeries { coeffs }
    }

    /// In-place multiplication by `(1 - sign * q^e)`.
    fn mul_one_minus(&mut self, negative: bool, e: usize) {
        if e == 0 {
            // constant factor (1 - sign): 2 when negative, 0 otherwise
            let factor = if negative { BigInt::from(2) } else { BigInt::zero() };
            for c in &mut self.coeffs {
                *c *= &factor;
            }
            return;
        }
        if e > self.order() {
            return;
        }
        for j in (e..=self.order()).rev() {
            let lower = self.coeffs[j - e].clone();
            if negative {
                self.coeffs[j] += lower;
            } else {
                self.coeffs[j] -= lower;
            }
        }
    }

    /// Multiplicative inverse modulo `q^{O+1}`; the constant term must be
    /// `+1` or `-1` so the inverse stays integral.
    pub fn invert_unit(&self) -> Result<QSeries> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(Error::NonUnitConstant);
        }
        let order = self.order();
        let mut inv = vec![BigInt::zero(); order + 1];
        inv[0] = c0.clone(); // (+-1)^{-1} = +-1
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &inv[n - i];
                }
            }
            inv[n] = -c0 * acc;
        }
        Ok(QSeries { coeffs: inv })
    }
}

/// A signed monomial `(+-1) * q^s`, the allowed first argument of the
/// finite q-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedMonomial {
    pub negative: bool,
    pub power: u64,
}

impl SignedMonomial {
    /// `-1` (so the product factors are `1 + q^i`).
    pub fn neg_one() -> Self {
        SignedMonomial { negative: true, power: 0 }
    }

    /// `q` (factors `1 - q^{i+1}`).
    pub fn q() -> Self {
        SignedMonomial { negative: false, power: 1 }
    }

    /// `-q` (factors `1 + q^{i+1}`).
    pub fn neg_q() -> Self {
        SignedMonomial { negative: true, power: 1 }
    }
}

/// Finite q-Pochhammer product `(x; q)_n = prod_{i=0}^{n-1} (1 - x q^i)`
/// truncated at `order`; `(x; q)_0 = 1`.
pub fn poch_finite(x: SignedMonomial, n: u64, order: usize) -> QSeries {
    let mut acc = QSeries::one(order);
    for i in 0..n {
        let e = x.power + i;
        if e > order as u64 {
            break; // remaining factors are 1 modulo q^{O+1}
        }
        acc.mul_one_minus(x.negative, e as usize);
    }
    acc
}

fn triangular(n: u64) -> u64 {
    n * (n + 1) / 2
}

/// Generating function of ordinary partitions, `1 / (q; q)_inf`.
pub fn gf_partitions(order: usize) -> QSeries {
    poch_finite(SignedMonomial::q(), order as u64, order)
        .invert_unit()
        .expect("(q;q)_n has constant term 1")
}

/// Product form of the overpartition generating function,
/// `(-q; q)_inf / (q; q)_inf`.
pub fn gf_overpartitions_product(order: usize) -> QSeries {
    let numer = poch_finite(SignedMonomial::neg_q(), order as u64, order);
    numer.mul(&gf_partitions(order))
}

/// Sum form of the overpartition generating function,
/// `sum_n (-1; q)_n q^{n(n+1)/2} / (q; q)_n^2`.
pub fn gf_overpartitions_sum(order: usize) -> QSeries {
    let mut acc = QSeries::zero(order);
    let mut n = 0u64;
    while triangular(n) <= order as u64 {
        let numer = poch_finite(SignedMonomial::neg_one(), n, order);
        let inv = poch_finite(SignedMonomial::q(), n, order)
            .invert_unit()
            .expect("unit constant");
        let term = numer.mul(&inv).mul(&inv).shifted(triangular(n) as usize);
        acc = acc.add(&term);
        n += 1;
    }
    acc
}

/// Generating function of overpartitions whose number of parts equals the
/// generalized Durfee square size: `sum_N (-1; q)_N q^{N(N+1)/2} / (q; q)_N`.
pub fn gf_g(order: usize) -> QSeries {
    let mut acc = QSeries::zero(order);
    let mut n = 0u64;
    while triangular(n) <= order as u64 {
        let numer = poch_finite(SignedMonomial::neg_one(), n, order);
        let inv = poch_finite(SignedMonomial::q(), n, order)
            .invert_unit()
            .expect("unit constant");
        let term = numer.mul(&inv).shifted(triangular(n) as usize);
        acc = acc.add(&term);
        n += 1;
    }
    acc
}

/// Weakly decreasing tuples `(N_1, ..., N_len)` with
/// `N_1(N_1+1)/2 + N_2^2 + ... + N_len^2 <= order`. Any excluded tuple
/// contributes only above `q^order`.
fn decreasing_tuples(len: usize, order: usize) -> Vec<Vec<u64>> {
    fn rec(
        pos: usize,
        len: usize,
        used: u64,
        prev: u64,
        order: u64,
        current: &mut Vec<u64>,
        out: &mut Vec<Vec<u64>>,
    ) {
        if pos == len {
            out.push(current.clone());
            return;
        }
        let mut v = 0u64;
        loop {
            if pos > 0 && v > prev {
                break;
            }
            let cost = if pos == 0 { triangular(v) } else { v * v };
            if used + cost > order {
                break;
            }
            current.push(v);
            rec(pos + 1, len, used + cost, v, order, current, out);
            current.pop();
            v += 1;
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    rec(0, len, 0, 0, order as u64, &mut current, &mut out);
    out
}

/// Which multisum summand to evaluate for a tuple.
#[derive(Clone, Copy)]
enum Summand {
    /// General summand with the `(1 + q^{N_i})` and `(-q)_{N_1 - 1}`
    /// factors and the extra linear exponent `N_{i+1} + ... + N_{k-1}`.
    Dki { i: u64 },
    /// Specialized `i = k` summand with the `(-1)_{N_1}` factor.
    Dkk,
}

fn multisum_term(tuple: &[u64], summand: Summand, order: usize) -> QSeries {
    let n1 = tuple[0];
    if n1 == 0 {
        // the all-zero tuple contributes exactly 1
        return QSeries::one(order);
    }
    let mut exponent = triangular(n1);
    for &nj in &tuple[1..] {
        exponent += nj * nj;
    }
    let numer = match summand {
        Summand::Dki { i } => {
            for j in (i + 1)..=(tuple.len() as u64) {
                exponent += tuple[(j - 1) as usize];
            }
            if exponent > order as u64 {
                return QSeries::zero(order);
            }
            let ni = if (i as usize) <= tuple.len() { tuple[(i - 1) as usize] } else { 0 };
            let base = poch_finite(SignedMonomial::neg_q(), n1 - 1, order);
            // multiply by (1 + q^{N_i}); N_i = 0 gives the constant 2
            if ni == 0 {
                base.scale(&BigInt::from(2))
            } else {
                let factor = QSeries::one(order).add(&QSeries::monomial(
                    BigInt::one(),
                    ni as usize,
                    order,
                ));
                base.mul(&factor)
            }
        }
        Summand::Dkk => {
            if exponent > order as u64 {
                return QSeries::zero(order);
            }
            poch_finite(SignedMonomial::neg_one(), n1, order)
        }
    };
    let mut denom = QSeries::one(order);
    for w in tuple.windows(2) {
        denom = denom.mul(&poch_finite(SignedMonomial::q(), w[0] - w[1], order));
    }
    denom = denom.mul(&poch_finite(
        SignedMonomial::q(),
        *tuple.last().expect("nonempty tuple"),
        order,
    ));
    let inv = denom.invert_unit().expect("unit constant");
    numer.mul(&inv).shifted(exponent as usize)
}

fn multisum_seq(k: u64, summand: Summand, order: usize) -> QSeries {
    decreasing_tuples((k - 1) as usize, order)
        .iter()
        .map(|t| multisum_term(t, summand, order))
        .fold(QSeries::zero(order), |acc, term| acc.add(&term))
}

#[allow(unused_variables)]
fn multisum(k: u64, summand: Summand, order: usize) -> QSeries {
    if_rayon!(
        decreasing_tuples((k - 1) as usize, order)
            .par_iter()
            .map(|t| multisum_term(t, summand, order))
            .reduce(|| QSeries::zero(order), |a, b| a.add(&b)),
        multisum_seq(k, summand, order)
    )
}

fn validate_ki(k: u64, i: u64) -> Result<()> {
    if k < 2 || i < 1 || i > k {
        return Err(Error::InvalidKi { k, i });
    }
    Ok(())
}

/// Multisum generating function of the Rogers-Ramanujan-Gordon counts
/// `D_{k,i}(n)`, truncated at `order`.
pub fn gf_dki(k: u64, i: u64, order: usize) -> Result<QSeries> {
    validate_ki(k, i)?;
    Ok(multisum(k, Summand::Dki { i }, order))
}

/// Sequential evaluation of [`gf_dki`].
pub fn gf_dki_seq(k: u64, i: u64, order: usize) -> Result<QSeries> {
    validate_ki(k, i)?;
    Ok(multisum_seq(k, Summand::Dki { i }, order))
}

/// Specialized `i = k` multisum for `D_{k,k}(n)`.
pub fn gf_dkk(k: u64, order: usize) -> Result<QSeries> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    Ok(multisum(k, Summand::Dkk, order))
}

/// Sequential evaluation of [`gf_dkk`].
pub fn gf_dkk_seq(k: u64, order: usize) -> Result<QSeries> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    Ok(multisum_seq(k, Summand::Dkk, order))
}

/// Generating function of overpartitions with at most `k-1` successive
/// Durfee squares: the same multisum construction as [`gf_dkk`].
pub fn gf_at_most_squares(k: u64, order: usize) -> Result<QSeries> {
    gf_dkk(k, order)
}

/// Bivariate series in the overline marker `a` and weight variable `q`:
/// `rows[m]` is the `q`-series multiplying `a^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedQSeries {
    order: usize,
    rows: Vec<QSeries>,
}

impl RefinedQSeries {
    pub fn zero(order: usize) -> Self {
        RefinedQSeries { order, rows: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient of `a^m q^n`.
    pub fn coeff(&self, m: usize, n: usize) -> BigInt {
        self.rows.get(m).map(|r| r.coeff(n)).unwrap_or_else(BigInt::zero)
    }

    /// Largest tracked `a`-degree plus one.
    pub fn a_degree_bound(&self) -> usize {
        self.rows.len()
    }

    pub fn add(&self, other: &RefinedQSeries) -> RefinedQSeries {
        let order = self.order.min(other.order);
        let len = self.rows.len().max(other.rows.len());
        let zero = QSeries::zero(order);
        let rows = (0..len)
            .map(|m| {
                let a = self.rows.get(m).map(|r| r.truncated(order)).unwrap_or_else(|| zero.clone());
                let b = other.rows.get(m).map(|r| r.truncated(order)).unwrap_or_else(|| zero.clone());
                a.add(&b)
            })
            .collect();
        RefinedQSeries { order, rows }
    }

    /// Univariate specialization at `a = 1` (sum of the `a`-rows).
    pub fn eval_at_a_one(&self) -> QSeries {
        self.rows
            .iter()
            .fold(QSeries::zero(self.order), |acc, r| acc.add(r))
    }
}

/// Refined generating function for overpartitions with generalized Durfee
/// square size `n_square`: `a^N q^{N(N+1)/2} (-1/a; q)_N / (q; q)_N^2`,
/// where the exponent of `a` counts overlined parts. The `a`-polynomial
/// `a^N (-1/a)_N` expands to `prod_{i=0}^{N-1} (a + q^i)`, so no negative
/// `a`-powers survive.
pub fn gf_durfee_refined(n_square: u64, order: usize) -> RefinedQSeries {
    if triangular(n_square) > order as u64 {
        return RefinedQSeries::zero(order);
    }
    // prod_{i=0}^{N-1} (a + q^i) as a vector of q-series indexed by a-degree
    let mut apoly: Vec<QSeries> = vec![QSeries::one(order)];
    for i in 0..n_square {
        let mut next: Vec<QSeries> = Vec::with_capacity(apoly.len() + 1);
        for m in 0..=apoly.len() {
            let from_a = if m >= 1 { apoly[m - 1].clone() } else { QSeries::zero(order) };
            let from_q = if m < apoly.len() {
                if i <= order as u64 {
                    apoly[m].shifted(i as usize)
                } else {
                    QSeries::zero(order)
                }
            } else {
                QSeries::zero(order)
            };
            next.push(from_a.add(&from_q));
        }
        apoly = next;
    }
    let inv = poch_finite(SignedMonomial::q(), n_square, order)
        .invert_unit()
        .expect("unit constant");
    let base = inv.mul(&inv).shifted(triangular(n_square) as usize);
    let rows = apoly.iter().map(|row| row.mul(&base)).collect();
    RefinedQSeries { order, rows }
}

/// Sum of [`gf_durfee_refined`] over all square sizes contributing below
/// the truncation order; at `a = 1` this is the overpartition generating
/// function.
pub fn gf_durfee_refined_sum(order: usize) -> RefinedQSeries {
    let mut acc = RefinedQSeries::zero(order);
    let mut n = 0u64;
    while triangular(n) <= order as u64 {
        acc = acc.add(&gf_durfee_refined(n, order));
        n += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::durfee::{count_at_most_squares, count_g, generalized_durfee_size};
    use crate::partition::{enumerate_overpartitions, enumerate_partitions};
    use crate::rrg::count_dki;
    use num_bigint::BigUint;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn ring_operations() {
        let one_plus_q = QSeries::one(5).add(&QSeries::monomial(big(1), 1, 5));
        let one_minus_q = QSeries::one(5).sub(&QSeries::monomial(big(1), 1, 5));
        let prod = one_plus_q.mul(&one_minus_q);
        assert_eq!(prod.coeff(0), big(1));
        assert_eq!(prod.coeff(1), big(0));
        assert_eq!(prod.coeff(2), big(-1));

        let s = QSeries::monomial(big(7), 2, 5);
        assert_eq!(s.add(&QSeries::zero(5)), s);

        let q3 = QSeries::monomial(big(1), 3, 5);
        let q4 = QSeries::monomial(big(1), 4, 5);
        assert_eq!(q3.mul(&q4), QSeries::zero(5));
    }

    #[test]
    fn mismatched_orders_truncate_to_smaller() {
        let a = QSeries::one(10);
        let b = QSeries::monomial(big(3), 2, 4);
        assert_eq!(a.add(&b).order(), 4);
        assert_eq!(a.mul(&b).order(), 4);
    }

    #[test]
    fn invert_unit_examples() {
        let one_minus_q = QSeries::one(6).sub(&QSeries::monomial(big(1), 1, 6));
        let inv = one_minus_q.invert_unit().unwrap();
        assert!((0..=6).all(|n| inv.coeff(n) == big(1)));
        assert_eq!(one_minus_q.mul(&inv), QSeries::one(6));

        let one_plus_q = QSeries::one(6).add(&QSeries::monomial(big(1), 1, 6));
        let inv = one_plus_q.invert_unit().unwrap();
        assert!((0..=6).all(|n| inv.coeff(n) == big(if n % 2 == 0 { 1 } else { -1 })));

        let two_plus_q = QSeries::monomial(big(2), 0, 6).add(&QSeries::monomial(big(1), 1, 6));
        assert_eq!(two_plus_q.invert_unit(), Err(Error::NonUnitConstant));
    }

    #[test]
    fn invert_unit_round_trips_random_units() {
        // a handful of deterministic unit series
        for seed in 0..6u64 {
            let mut s = QSeries::one(12);
            for n in 1..=12usize {
                let c = ((seed.wrapping_mul(0x9e3779b97f4a7c15).rotate_left(n as u32) >> 40)
                    as i64
                    % 7)
                    - 3;
                s = s.add(&QSeries::monomial(big(c), n, 12));
            }
            let inv = s.invert_unit().unwrap();
            assert_eq!(s.mul(&inv), QSeries::one(12));
        }
    }

    #[test]
    fn poch_examples() {
        let p = poch_finite(SignedMonomial::neg_one(), 2, 5);
        assert_eq!(p.coeff(0), big(2));
        assert_eq!(p.coeff(1), big(2));
        assert_eq!(p.coeff(2), big(0));

        let p = poch_finite(SignedMonomial::q(), 1, 5);
        assert_eq!(p, QSeries::one(5).sub(&QSeries::monomial(big(1), 1, 5)));

        // (1+q)(1+q^2)(1+q^3) = 1 + q + q^2 + 2q^3 + q^4 + q^5 + q^6
        let p = poch_finite(SignedMonomial::neg_q(), 3, 6);
        let expected = [1, 1, 1, 2, 1, 1, 1];
        for (n, e) in expected.iter().enumerate() {
            assert_eq!(p.coeff(n), big(*e));
        }

        assert_eq!(poch_finite(SignedMonomial::q(), 0, 5), QSeries::one(5));
    }

    #[test]
    fn gf_partitions_matches_enumeration() {
        let gf = gf_partitions(12);
        assert_eq!(gf.coeff(0), big(1));
        assert_eq!(gf.coeff(5), big(7));
        assert_eq!(gf.coeff(10), big(42));
        for n in 0..=12u64 {
            let count = enumerate_partitions(n).count();
            assert_eq!(gf.coeff(n as usize), BigInt::from(count));
        }
    }

    #[test]
    fn gf_overpartitions_product_matches_enumeration() {
        let gf = gf_overpartitions_product(12);
        assert_eq!(gf.coeff(0), big(1));
        assert_eq!(gf.coeff(3), big(8));
        assert_eq!(gf.coeff(4), big(14));
        for n in 0..=12u64 {
            let count = enumerate_overpartitions(n).count();
            assert_eq!(gf.coeff(n as usize), BigInt::from(count));
        }
    }

    #[test]
    fn gf_overpartitions_sum_form() {
        let sum = gf_overpartitions_sum(25);
        assert_eq!(sum.coeff(0), big(1));
        assert_eq!(sum.coeff(1), big(2));
        assert_eq!(sum, gf_overpartitions_product(25));
    }

    #[test]
    fn gf_g_matches_counts() {
        let gf = gf_g(14);
        assert_eq!(gf.coeff(0), big(1));
        assert_eq!(gf.coeff(3), big(4));
        assert_eq!(gf.coeff(5), big(8));
        for n in 0..=14u64 {
            assert_eq!(gf.coeff(n as usize), BigInt::from(count_g(n)));
        }
    }

    #[test]
    fn gf_dki_spot_values() {
        let gf = gf_dki(2, 1, 10).unwrap();
        assert_eq!(gf.coeff(0), big(1));
        assert_eq!(gf.coeff(1), big(1));

        let gf = gf_dki(2, 2, 10).unwrap();
        assert_eq!(gf.coeff(0), big(1));
        assert_eq!(gf.coeff(3), big(4));

        assert_eq!(gf_dki(3, 2, 8).unwrap().coeff(0), big(1));
        assert_eq!(gf_dki(1, 1, 8), Err(Error::InvalidKi { k: 1, i: 1 }));
        assert_eq!(gf_dki(3, 4, 8), Err(Error::InvalidKi { k: 3, i: 4 }));
        assert_eq!(gf_dki(3, 0, 8), Err(Error::InvalidKi { k: 3, i: 0 }));
    }

    #[test]
    fn gf_dkk_specializations() {
        assert_eq!(gf_dkk(2, 20).unwrap(), gf_g(20));
        let gf = gf_dkk(3, 8).unwrap();
        assert_eq!(gf.coeff(0), big(1));
        assert_eq!(gf.coeff(4), BigInt::from(count_dki(4, 3, 3).unwrap()));
        assert_eq!(gf_dkk(1, 8), Err(Error::InvalidK(1)));
    }

    #[test]
    fn gf_dki_equals_gf_dkk_at_i_equals_k() {
        for k in 2..=4u64 {
            assert_eq!(gf_dki(k, k, 16).unwrap(), gf_dkk(k, 16).unwrap());
            assert_eq!(gf_at_most_squares(k, 16).unwrap(), gf_dkk(k, 16).unwrap());
        }
    }

    #[test]
    fn gf_at_most_squares_matches_counts() {
        for k in 2..=3u64 {
            let gf = gf_at_most_squares(k, 10).unwrap();
            for n in 0..=10u64 {
                assert_eq!(
                    gf.coeff(n as usize),
                    BigInt::from(count_at_most_squares(n, k - 1)),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn parallel_and_sequential_multisums_agree() {
        assert_eq!(gf_dki(3, 2, 20).unwrap(), gf_dki_seq(3, 2, 20).unwrap());
        assert_eq!(gf_dkk(3, 20).unwrap(), gf_dkk_seq(3, 20).unwrap());
    }

    #[test]
    fn refined_gf_small_cases() {
        let r = gf_durfee_refined(0, 8);
        assert_eq!(r.coeff(0, 0), big(1));
        assert_eq!(r.eval_at_a_one(), QSeries::one(8));

        let r = gf_durfee_refined(1, 8);
        assert_eq!(r.coeff(1, 1), big(1));

        let r = gf_durfee_refined(2, 8);
        assert_eq!(r.coeff(0, 3), big(0));
        // only (2, 1o) has weight 3, Durfee size 2, one overline
        assert_eq!(r.coeff(1, 3), big(1));
    }

    #[test]
    fn refined_gf_matches_brute_force() {
        // coefficient of a^m q^n in the size-N refined series counts
        // overpartitions of n with generalized Durfee size N and m overlines
        for n_square in 0..=4u64 {
            let r = gf_durfee_refined(n_square, 12);
            for n in 0..=12u64 {
                for m in 0..=(n as usize + 1) {
                    let count = enumerate_overpartitions(n)
                        .filter(|o| {
                            generalized_durfee_size(o) == n_square && o.overline_count() == m
                        })
                        .count();
                    assert_eq!(
                        r.coeff(m, n as usize),
                        BigInt::from(count),
                        "N={n_square} m={m} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn refined_sum_at_a_one_is_overpartition_gf() {
        let total = gf_durfee_refined_sum(16);
        assert_eq!(total.eval_at_a_one(), gf_overpartitions_product(16));
    }

    #[test]
    fn counts_fit_in_coefficients() {
        // BigUint counts and BigInt coefficients compare after conversion
        let c: BigUint = count_g(6);
        assert_eq!(BigInt::from(c), gf_g(6).coeff(6));
    }
}
