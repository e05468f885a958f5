//! The degree of the rank-4 theta map: Verlinde numbers, interpolation of
//! the Hilbert polynomial, and subtraction of the base locus.

use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use thiserror::Error;

use crate::f2geometry;
use crate::hilbert::{self, HilbertCoefficients, HilbertError};
use crate::verlinde::{self, EvalOptions, VerlindeError, VerlindeQuery};

/// Genus of the curve throughout.
pub const GENUS: u32 = 2;

/// The only rank for which reference tables exist.
pub const SUPPORTED_RANK: u32 = 4;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PipelineError {
    #[error("no reference data for rank {0}: only rank 4 is supported")]
    UnsupportedRank(u32),
    #[error(transparent)]
    Verlinde(#[from] VerlindeError),
    #[error(transparent)]
    Hilbert(#[from] HilbertError),
}

/// Shape of the Hilbert polynomial of the moduli space of rank-`r` bundles
/// with trivial determinant in genus 2: the canonical bundle is `L^(-2r)`,
/// so `P` vanishes on `-(2r-1) ..= -1`, and the degree is `r² - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HilbertShape {
    pub offset: usize,
    pub dimension: usize,
}

impl HilbertShape {
    pub fn for_rank(rank: u32) -> Self {
        HilbertShape {
            offset: (2 * rank - 1) as usize,
            dimension: (rank * rank - 1) as usize,
        }
    }

    /// Number of levels `n = 1, 2, ...` that must be supplied.
    pub fn positive_levels(&self) -> usize {
        self.dimension - self.offset
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelValue {
    pub n: u32,
    #[serde(serialize_with = "verlinde::serialize_biguint")]
    pub value: BigUint,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeReport {
    pub rank: u32,
    pub genus: u32,
    pub shape: HilbertShape,
    pub p_values: Vec<LevelValue>,
    pub coefficients: HilbertCoefficients,
    pub base_locus_count: usize,
    #[serde(serialize_with = "serialize_int")]
    pub degree: BigInt,
}

fn serialize_int<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    let n: serde_json::Number = v.to_string().parse().map_err(serde::ser::Error::custom)?;
    n.serialize(s)
}

pub fn degree_pipeline(rank: u32) -> Result<DegreeReport, PipelineError> {
    degree_pipeline_with(rank, &EvalOptions::default())
}

pub fn degree_pipeline_with(rank: u32, opts: &EvalOptions) -> Result<DegreeReport, PipelineError> {
    if rank != SUPPORTED_RANK {
        return Err(PipelineError::UnsupportedRank(rank));
    }
    let shape = HilbertShape::for_rank(rank);
    let mut p_values = Vec::with_capacity(shape.positive_levels());
    for n in 1..=shape.positive_levels() as u32 {
        let q = VerlindeQuery::new(rank, n, GENUS)?;
        let r = verlinde::verlinde_number_with(q, opts)?;
        p_values.push(LevelValue { n, value: r.value });
    }
    let positive: Vec<BigInt> = p_values.iter().map(|lv| BigInt::from(lv.value.clone())).collect();
    let input = hilbert::assemble_input(&positive, shape.offset, shape.dimension)?;
    let coefficients = hilbert::coefficients(&input);
    let (_, characteristics) = f2geometry::enumerate_all();
    let base_locus_count = characteristics.len();
    let degree = hilbert::degree_theta(&coefficients.c_top, &BigInt::from(base_locus_count))?;
    Ok(DegreeReport {
        rank,
        genus: GENUS,
        shape,
        p_values,
        coefficients,
        base_locus_count,
        degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank4_shape() {
        let s = HilbertShape::for_rank(4);
        assert_eq!((s.offset, s.dimension, s.positive_levels()), (7, 15, 8));
    }

    #[test]
    fn rank4_degree_is_thirty() {
        let r = degree_pipeline(4).unwrap();
        assert_eq!(r.base_locus_count, 16);
        assert_eq!(r.coefficients.c_top, BigInt::from(46));
        assert_eq!(r.degree, BigInt::from(30));
    }

    #[test]
    fn other_ranks_rejected() {
        assert_eq!(degree_pipeline(3), Err(PipelineError::UnsupportedRank(3)));
    }
}
