// Copyright 2026 the Involute Tower Authors
// SPDX-License-Identifier: Apache-2.0

use std::process::ExitCode;

use clap::Parser;
use involute_cli::{run, Cli};

fn main() -> ExitCode {
    // clap exits with status 2 on malformed flags.
    let cli = Cli::parse();
    match run(cli) {
        Ok(outcome) if outcome.pass => ExitCode::SUCCESS,
        Ok(_) => {
            eprintln!("involute: some checks failed");
            ExitCode::from(1)
        }
        Err(err) => {
            eprintln!("involute: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
