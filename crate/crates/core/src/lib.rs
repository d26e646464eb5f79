// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

pub mod curve;
pub mod error;
pub mod involute;
pub mod polygon;
pub mod series;
pub mod symbolic;

pub use error::{Error, Result};
