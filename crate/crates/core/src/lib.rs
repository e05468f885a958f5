//! Exact computations around rank-4 bundles without theta divisor on a
//! genus-2 curve.
//!
//! - [`f2geometry`]: 2-torsion points, theta-characteristics, `S(κ)` and the
//!   identities they satisfy, in the Weierstrass-point model.
//! - [`verlinde`]: certified Verlinde numbers for `SU(r)`.
//! - [`hilbert`]: exact interpolation of the Hilbert polynomial and the
//!   degree formula.
//! - [`pipeline`]: the rank-4 degree computation end to end.
//! - [`report`], [`tables`], [`cli`]: invariant suites, CSV tables and the
//!   command-line front end.

pub mod cli;
pub mod f2geometry;
pub mod hilbert;
pub mod interval;
pub mod pipeline;
pub mod report;
pub mod tables;
pub mod verlinde;

pub use f2geometry::{Parity, SSet, ThetaCharacteristic, TwoTorsionPoint};
pub use hilbert::{HilbertCoefficients, HilbertInput};
pub use pipeline::{degree_pipeline, DegreeReport};
pub use verlinde::{verlinde_number, VerlindeQuery, VerlindeResult};
