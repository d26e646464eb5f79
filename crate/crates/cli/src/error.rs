// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use involute_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Bad flag values; exit status 2.
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_)
            | CliError::Core(
                CoreError::InvalidArgument(_)
                | CoreError::DepthLimit { .. }
                | CoreError::Domain { .. },
            ) => 2,
            _ => 1,
        }
    }
}
