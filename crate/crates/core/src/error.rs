// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter {t} is outside the curve domain [{a}, {b}]")]
    Domain { t: f64, a: f64, b: f64 },

    /// Speed vanishes on a whole neighbourhood, so no tangent limit exists.
    #[error("degenerate curve near t = {t}: tangent direction is undefined")]
    DegenerateCurve { t: f64 },

    #[error("non-finite integrand at u = {u}")]
    NonFinite { u: f64 },

    #[error("tower depth {depth} exceeds the limit of {max}")]
    DepthLimit { depth: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("level 0 has no closed-form involute; use the base arc instead")]
    BaseLevel,

    #[error("expression is not a tower curve: {0}")]
    NotInClosure(String),
}
