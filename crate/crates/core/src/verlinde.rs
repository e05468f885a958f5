//! Verlinde numbers `dim H⁰(M_r, Lⁿ)` for `SU(r)` at level `n` in genus `g`.
//!
//! The closed form is the sine-product expression
//!
//! ```text
//! P = (r·N^(r-1))^(g-1) · Σ_λ Π_{i<j} (2 sin(π(l_i - l_j)/N))^(2-2g),   N = n + r,
//! ```
//!
//! where `λ` runs over the level-`n` weights written as shifted parts
//! `l_1 > ... > l_{r-1} > l_r = 0` with `l_1 <= N - 1`.
//!
//! The trigonometric sum is evaluated in outward-rounded fixed-point
//! interval arithmetic. The working precision doubles until the whole
//! enclosure lies within `10⁻⁶` of one integer; that integer is returned
//! together with the certified distance. Fixed-point sums are exact, so the
//! result does not depend on how the weights are split across workers.

use std::thread;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::interval::{self, Interval};

/// Certified distance to the returned integer must be below this.
pub const CERTIFICATION_BOUND: f64 = 1e-6;
const BOUND_DENOMINATOR: u64 = 1_000_000;

pub const DEFAULT_INITIAL_PRECISION: u32 = 64;
pub const DEFAULT_MAX_PRECISION: u32 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerlindeError {
    #[error("rank must be at least 2, got {0}")]
    Rank(u32),
    #[error("genus must be at least 1, got {0}")]
    Genus(u32),
    #[error("precision must be at least 8 bits, got {0}")]
    Precision(u32),
    #[error(
        "could not certify the Verlinde sum: distance {bound:e} to the nearest integer at {precision} bits"
    )]
    Certification { precision: u32, bound: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct VerlindeQuery {
    pub rank: u32,
    pub level: u32,
    pub genus: u32,
}

impl VerlindeQuery {
    pub fn new(rank: u32, level: u32, genus: u32) -> Result<Self, VerlindeError> {
        if rank < 2 {
            return Err(VerlindeError::Rank(rank));
        }
        if genus < 1 {
            return Err(VerlindeError::Genus(genus));
        }
        Ok(VerlindeQuery { rank, level, genus })
    }

    fn modulus(&self) -> u32 {
        self.level + self.rank
    }
}

/// A level weight as strictly decreasing shifted parts ending in 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LevelWeight(Vec<u32>);

impl LevelWeight {
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    fn differences(&self) -> impl Iterator<Item = u32> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(move |(i, &a)| self.0[i + 1..].iter().map(move |&b| a - b))
    }
}

/// All level-`level` weights of `SU(rank)`, in lexicographic order.
pub fn level_weights(rank: u32, level: u32) -> Vec<LevelWeight> {
    assert!(rank >= 2, "rank must be at least 2");
    let top = level + rank - 1;
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(rank as usize);
    fill_weights(rank - 1, top, &mut current, &mut out);
    out
}

// Chooses `remaining` more strictly decreasing entries, each at most `max`,
// and pushes the completed tuple (with the trailing 0) in lexicographic order.
fn fill_weights(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<LevelWeight>) {
    if remaining == 0 {
        let mut parts = current.clone();
        parts.push(0);
        out.push(LevelWeight(parts));
        return;
    }
    for v in remaining..=max {
        current.push(v);
        fill_weights(remaining - 1, v - 1, current, out);
        current.pop();
    }
}

/// Evaluation knobs. The defaults escalate from 64 bits to 16384 bits on a
/// single worker.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalOptions {
    pub initial_precision: u32,
    pub max_precision: u32,
    pub workers: usize,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions {
            initial_precision: DEFAULT_INITIAL_PRECISION,
            max_precision: DEFAULT_MAX_PRECISION,
            workers: 1,
        }
    }
}

impl EvalOptions {
    /// A single attempt at exactly `bits` of precision.
    pub fn fixed(bits: u32) -> Self {
        EvalOptions {
            initial_precision: bits,
            max_precision: bits,
            workers: 1,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerlindeResult {
    #[serde(flatten)]
    pub query: VerlindeQuery,
    #[serde(serialize_with = "serialize_biguint")]
    pub value: BigUint,
    /// Upper bound on the distance between the enclosed sum and `value`.
    pub error_bound: f64,
    #[serde(skip)]
    pub precision_bits: u32,
}

pub(crate) fn serialize_biguint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    let n: serde_json::Number = v
        .to_string()
        .parse()
        .map_err(serde::ser::Error::custom)?;
    n.serialize(s)
}

pub fn verlinde_number(q: VerlindeQuery) -> Result<VerlindeResult, VerlindeError> {
    verlinde_number_with(q, &EvalOptions::default())
}

pub fn verlinde_number_with(
    q: VerlindeQuery,
    opts: &EvalOptions,
) -> Result<VerlindeResult, VerlindeError> {
    if opts.initial_precision < 8 {
        return Err(VerlindeError::Precision(opts.initial_precision));
    }
    let weights = level_weights(q.rank, q.level);
    let mut prec = opts.initial_precision;
    loop {
        let enclosure = enclose_sum(&q, &weights, prec, opts.workers);
        let attempt = enclosure.as_ref().map(certify);
        match attempt {
            Some(Ok((value, bound))) => {
                return Ok(VerlindeResult {
                    query: q,
                    value,
                    error_bound: bound,
                    precision_bits: prec,
                });
            }
            _ if prec < opts.max_precision => {
                prec = prec.saturating_mul(2).min(opts.max_precision);
            }
            other => {
                let bound = match other {
                    Some(Err(b)) => b,
                    _ => f64::INFINITY,
                };
                return Err(VerlindeError::Certification {
                    precision: prec,
                    bound,
                });
            }
        }
    }
}

/// `(r·N^(r-1))^(g-1)`, exactly.
fn prefactor(q: &VerlindeQuery) -> BigInt {
    let n = BigInt::from(q.modulus());
    let base = BigInt::from(q.rank) * num_traits::pow(n, (q.rank - 1) as usize);
    num_traits::pow(base, (q.genus - 1) as usize)
}

/// Enclosures of `(2 sin(πd/N))^(-2·exponent)` for `d = 0..N` (entry 0 unused).
fn inverse_sine_powers(modulus: u32, exponent: u32, prec: u32) -> Option<Vec<Interval>> {
    let pi = interval::pi(prec);
    let n = BigInt::from(modulus);
    let mut cache: Vec<Interval> = Vec::with_capacity(modulus as usize);
    cache.push(Interval::zero(prec));
    for d in 1..modulus {
        if 2 * d > modulus {
            // sin(πd/N) = sin(π(N-d)/N)
            let mirrored = cache[(modulus - d) as usize].clone();
            cache.push(mirrored);
            continue;
        }
        let x = pi.scale(&BigInt::from(d)).div_int(&n);
        let s = interval::sin(&x);
        let four_s2 = s.mul(&s).scale(&BigInt::from(4));
        cache.push(four_s2.recip()?.pow(exponent));
    }
    Some(cache)
}

fn weight_term(w: &LevelWeight, cache: &[Interval], exponent: u32, prec: u32) -> Interval {
    if exponent == 0 {
        return Interval::one(prec);
    }
    w.differences()
        .fold(Interval::one(prec), |acc, d| acc.mul(&cache[d as usize]))
}

fn partial_sum(chunk: &[LevelWeight], cache: &[Interval], exponent: u32, prec: u32) -> Interval {
    chunk.iter().fold(Interval::zero(prec), |acc, w| {
        acc.add(&weight_term(w, cache, exponent, prec))
    })
}

/// Enclosure of the full Verlinde sum (prefactor included) at `prec` bits.
fn enclose_sum(
    q: &VerlindeQuery,
    weights: &[LevelWeight],
    prec: u32,
    workers: usize,
) -> Option<Interval> {
    let exponent = q.genus - 1;
    let cache = if exponent == 0 {
        Vec::new()
    } else {
        inverse_sine_powers(q.modulus(), exponent, prec)?
    };
    let workers = workers.max(1).min(weights.len().max(1));
    let sum = if workers == 1 {
        partial_sum(weights, &cache, exponent, prec)
    } else {
        let chunk_len = weights.len().div_ceil(workers);
        let partials: Vec<Interval> = thread::scope(|scope| {
            let handles: Vec<_> = weights
                .chunks(chunk_len)
                .map(|chunk| {
                    let cache = &cache;
                    scope.spawn(move || partial_sum(chunk, cache, exponent, prec))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        });
        partials
            .iter()
            .fold(Interval::zero(prec), |acc, p| acc.add(p))
    };
    Some(sum.scale(&prefactor(q)))
}

/// Rounds the enclosure to the nearest integer and checks that every point
/// of it lies within the certification bound. On failure returns the
/// achieved bound.
fn certify(iv: &Interval) -> Result<(BigUint, f64), f64> {
    let prec = iv.prec();
    let unit = BigInt::one() << prec;
    // round(mid) = floor((lo + hi + unit) / (2 * unit))
    let nearest: BigInt = num_integer::Integer::div_floor(
        &(iv.lo() + iv.hi() + &unit),
        &(&unit << 1u32),
    );
    let scaled = &nearest << prec;
    let dist = (iv.hi() - &scaled).max(&scaled - iv.lo());
    let bound = ratio_upper(&dist, prec);
    let certified = &dist * BigInt::from(BOUND_DENOMINATOR) < unit;
    if !certified || nearest.is_negative() {
        return Err(bound);
    }
    Ok((nearest.to_biguint().expect("non-negative"), bound))
}

/// `dist / 2^prec` as an f64, rounded up.
fn ratio_upper(dist: &BigInt, prec: u32) -> f64 {
    if dist.is_zero() {
        return 0.0;
    }
    let bits = dist.bits();
    let keep = 52u64;
    let (mantissa, shift) = if bits > keep {
        let drop = bits - keep;
        ((dist >> drop) + 1u32, drop as i64)
    } else {
        (dist.clone(), 0)
    };
    let m = mantissa.to_f64().unwrap_or(f64::INFINITY);
    let exp = shift - prec as i64;
    let exp = exp.clamp(i32::MIN as i64, i32::MAX as i64) as i32;
    let v = m * 2f64.powi(exp);
    if v == 0.0 {
        f64::MIN_POSITIVE
    } else {
        v
    }
}

/// `C(n, k)` as a big integer.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(r: u32, n: u32, g: u32) -> u64 {
        let res = verlinde_number(VerlindeQuery::new(r, n, g).unwrap()).unwrap();
        assert!(res.error_bound < CERTIFICATION_BOUND);
        res.value.to_u64().unwrap()
    }

    // Straight double-precision evaluation of the same closed form; only
    // trustworthy for small cases.
    fn f64_oracle(r: u32, n: u32, g: u32) -> f64 {
        let big_n = (n + r) as f64;
        let pre = (r as f64 * big_n.powi(r as i32 - 1)).powi(g as i32 - 1);
        let mut sum = 0.0;
        for w in level_weights(r, n) {
            let mut prod = 1.0;
            for d in w.differences() {
                let s = 2.0 * (std::f64::consts::PI * d as f64 / big_n).sin();
                prod *= s.powi(2 - 2 * g as i32);
            }
            sum += prod;
        }
        pre * sum
    }

    #[test]
    fn level_weight_examples() {
        let w = level_weights(2, 1);
        assert_eq!(w, vec![LevelWeight(vec![1, 0]), LevelWeight(vec![2, 0])]);
        assert_eq!(level_weights(4, 1).len(), 4);
        for r in 2..6 {
            assert_eq!(
                level_weights(r, 0),
                vec![LevelWeight((0..r).rev().collect())]
            );
        }
    }

    #[test]
    fn level_weight_counts_and_order() {
        for r in 2..=5u32 {
            for n in 0..=8u32 {
                let w = level_weights(r, n);
                assert_eq!(
                    BigUint::from(w.len()),
                    binomial((n + r - 1) as u64, (r - 1) as u64)
                );
                assert!(w.windows(2).all(|p| p[0] < p[1]));
                for x in &w {
                    assert_eq!(x.parts().len(), r as usize);
                    assert_eq!(*x.parts().last().unwrap(), 0);
                    assert!(x.parts()[0] < n + r);
                    assert!(x.parts().windows(2).all(|p| p[0] > p[1]));
                }
            }
        }
    }

    #[test]
    fn verlinde_examples() {
        assert_eq!(v(4, 1, 2), 16);
        assert_eq!(v(4, 8, 2), 984539);
        assert_eq!(v(2, 1, 2), 4);
        for r in 2..=5 {
            assert_eq!(v(r, 0, 2), 1);
            assert_eq!(v(r, 0, 3), 1);
        }
        assert_eq!(v(3, 2, 1), 6);
        assert_eq!(v(4, 5, 2), 21024);
    }

    #[test]
    fn agrees_with_double_precision_oracle() {
        for r in 2..=4 {
            for n in 0..=6 {
                for g in 1..=3 {
                    let exact = v(r, n, g) as f64;
                    let approx = f64_oracle(r, n, g);
                    assert!(
                        (exact - approx).abs() <= 1e-6 * exact.max(1.0),
                        "r={r} n={n} g={g}: {exact} vs {approx}"
                    );
                }
            }
        }
    }

    #[test]
    fn sl2_genus2_closed_form() {
        // For SU(2) in genus 2 the count is (n+1)(n+2)(n+3)/6.
        for n in 0..=12u64 {
            assert_eq!(v(2, n as u32, 2), (n + 1) * (n + 2) * (n + 3) / 6);
        }
    }

    #[test]
    fn invalid_queries_rejected() {
        assert_eq!(VerlindeQuery::new(1, 1, 2), Err(VerlindeError::Rank(1)));
        assert_eq!(VerlindeQuery::new(4, 1, 0), Err(VerlindeError::Genus(0)));
        let q = VerlindeQuery::new(4, 1, 2).unwrap();
        assert_eq!(
            verlinde_number_with(q, &EvalOptions::fixed(4)),
            Err(VerlindeError::Precision(4))
        );
    }

    #[test]
    fn low_precision_fails_loudly() {
        let q = VerlindeQuery::new(4, 8, 2).unwrap();
        match verlinde_number_with(q, &EvalOptions::fixed(16)) {
            Err(VerlindeError::Certification { precision, bound }) => {
                assert_eq!(precision, 16);
                assert!(!(bound < CERTIFICATION_BOUND));
            }
            other => panic!("expected certification failure, got {other:?}"),
        }
    }

    #[test]
    fn workers_do_not_change_result() {
        let q = VerlindeQuery::new(5, 7, 3).unwrap();
        let base = verlinde_number(q).unwrap();
        for workers in [2, 3, 8, 64] {
            let r = verlinde_number_with(q, &EvalOptions::default().with_workers(workers)).unwrap();
            assert_eq!(r, base);
        }
    }

    #[test]
    fn json_shape() {
        let r = verlinde_number(VerlindeQuery::new(4, 1, 2).unwrap()).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["rank"], 4);
        assert_eq!(json["level"], 1);
        assert_eq!(json["genus"], 2);
        assert_eq!(json["value"], 16);
        assert!(json["error_bound"].as_f64().unwrap() < 1e-6);
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(11, 3), BigUint::from(165u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
    }
}
