//! Exact interpolation of the Hilbert polynomial in the shifted binomial
//! basis `Q_k(X) = C(X + offset, k)`.
//!
//! The input is the run of values `P(-offset), ..., P(D - offset)`. Since
//! `Q_k` vanishes at `-offset, ..., -offset + k - 1` and equals 1 at
//! `-offset + k`, the coefficients are the forward differences of that run
//! at its first point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("expected {expected} values, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("dimension {dimension} must be at least the offset {offset}")]
    Shape { offset: usize, dimension: usize },
    #[error("P({n}) must vanish, got {value}")]
    NonVanishing { n: i64, value: BigInt },
    #[error("P(0) must be 1, got {0}")]
    BadConstant(BigInt),
    #[error("base locus count {base} exceeds the top coefficient {c_top}")]
    NegativeDegree { c_top: BigInt, base: BigInt },
}

/// Values of `P` at `-offset ..= dimension - offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertInput {
    offset: usize,
    dimension: usize,
    values: Vec<BigInt>,
}

impl HilbertInput {
    pub fn new(offset: usize, dimension: usize, values: Vec<BigInt>) -> Result<Self, HilbertError> {
        if dimension < offset {
            return Err(HilbertError::Shape { offset, dimension });
        }
        if values.len() != dimension + 1 {
            return Err(HilbertError::WrongCount {
                expected: dimension + 1,
                got: values.len(),
            });
        }
        for (i, v) in values[..offset].iter().enumerate() {
            if !v.is_zero() {
                return Err(HilbertError::NonVanishing {
                    n: i as i64 - offset as i64,
                    value: v.clone(),
                });
            }
        }
        if !values[offset].is_one() {
            return Err(HilbertError::BadConstant(values[offset].clone()));
        }
        Ok(HilbertInput {
            offset,
            dimension,
            values,
        })
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `(n, P(n))` for every sample point.
    pub fn points(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        let start = -(self.offset as i64);
        self.values
            .iter()
            .enumerate()
            .map(move |(i, v)| (start + i as i64, v))
    }
}

/// Prepends the forced values `0, ..., 0, 1` at `n = -offset ..= 0` to
/// `P(1), ..., P(dimension - offset)`.
pub fn assemble_input(
    positive: &[BigInt],
    offset: usize,
    dimension: usize,
) -> Result<HilbertInput, HilbertError> {
    if dimension < offset {
        return Err(HilbertError::Shape { offset, dimension });
    }
    if positive.len() != dimension - offset {
        return Err(HilbertError::WrongCount {
            expected: dimension - offset,
            got: positive.len(),
        });
    }
    let mut values = vec![BigInt::zero(); offset];
    values.push(BigInt::one());
    values.extend_from_slice(positive);
    HilbertInput::new(offset, dimension, values)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertCoefficients {
    pub offset: usize,
    #[serde(serialize_with = "serialize_bigints")]
    pub alpha: Vec<BigInt>,
    #[serde(serialize_with = "serialize_bigint")]
    pub c_top: BigInt,
}

fn to_number(v: &BigInt) -> serde_json::Number {
    v.to_string().parse().expect("integer literal")
}

fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    to_number(v).serialize(s)
}

fn serialize_bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(to_number))
}

impl HilbertCoefficients {
    pub fn dimension(&self) -> usize {
        self.alpha.len() - 1
    }

    /// `Σ α_k Q_k(x)` over the rationals.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        evaluate(self, x, self.offset)
    }

    pub fn evaluate_int(&self, n: i64) -> BigRational {
        self.evaluate(&BigRational::from_integer(BigInt::from(n)))
    }
}

/// Newton forward differences of the sample run.
pub fn coefficients(input: &HilbertInput) -> HilbertCoefficients {
    let mut row: Vec<BigInt> = input.values.clone();
    let mut alpha = Vec::with_capacity(row.len());
    while let Some(first) = row.first() {
        alpha.push(first.clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let c_top = alpha.last().cloned().unwrap_or_default();
    HilbertCoefficients {
        offset: input.offset,
        alpha,
        c_top,
    }
}

/// Generalized binomial `C(x + offset, k)`.
pub fn basis_value(k: usize, x: &BigRational, offset: usize) -> BigRational {
    let y = x + BigRational::from_integer(BigInt::from(offset));
    let mut acc = BigRational::one();
    for i in 0..k {
        acc = acc * (&y - BigRational::from_integer(BigInt::from(i)))
            / BigRational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// `Σ α_k C(x + offset, k)`, evaluated incrementally.
pub fn evaluate(coeffs: &HilbertCoefficients, x: &BigRational, offset: usize) -> BigRational {
    let y = x + BigRational::from_integer(BigInt::from(offset));
    let mut q = BigRational::one();
    let mut total = BigRational::zero();
    for (k, a) in coeffs.alpha.iter().enumerate() {
        if k > 0 {
            q = q * (&y - BigRational::from_integer(BigInt::from(k - 1)))
                / BigRational::from_integer(BigInt::from(k));
        }
        if !a.is_zero() {
            total += &q * BigRational::from_integer(a.clone());
        }
    }
    total
}

/// `deg θ = c_top - base_locus_count`.
pub fn degree_theta(c_top: &BigInt, base_locus_count: &BigInt) -> Result<BigInt, HilbertError> {
    let d = c_top - base_locus_count;
    if d.is_negative() {
        return Err(HilbertError::NegativeDegree {
            c_top: c_top.clone(),
            base: base_locus_count.clone(),
        });
    }
    Ok(d)
}
