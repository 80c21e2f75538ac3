//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by geometry, integration, body, and smoothing routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("space parameters differ between operands: {0}")]
    SpaceMismatch(String),

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("operator is not symmetric (max asymmetry {defect:e})")]
    NotSymmetric { defect: f64 },

    #[error("state became non-finite at t = {t}")]
    NonFiniteState { t: f64 },

    #[error("barrier undefined at t = {t} (pole at eps = {eps})")]
    BarrierDomain { t: f64, eps: f64 },

    #[error("comparison hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("sampled path too coarse: {len} samples, need at least {min}")]
    GridTooCoarse { len: usize, min: usize },

    #[error("point is not on the boundary (signed distance {distance:e})")]
    NotOnBoundary { distance: f64 },

    #[error("point is not in the body (distance {distance:e})")]
    NotInBody { distance: f64 },

    #[error("erosion by {s} empties the body")]
    ErodedToEmpty { s: f64 },

    #[error("no ray from the interior anchor exits the body")]
    NoExitingRay,

    #[error("boundary tracing failed: {0}")]
    BoundaryTracing(String),

    #[error("finite-difference step {h} too large for kernel radius {kappa} (need h <= kappa/4)")]
    StepTooLarge { h: f64, kappa: f64 },

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("body spec error: {0}")]
    BodySpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
