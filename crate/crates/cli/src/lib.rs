//! Front end for `ore-engine`: polynomial parsing, one function per
//! subcommand, and rendering of the resulting reports as text, JSON or CSV.
//!
//! The JSON layout is described in `docs/json-schema.md`.

pub mod commands;
pub mod json;
pub mod parse;
pub mod report;

pub use commands::{classify, factor, polygon, sweep, Mode, ResidueClass, SweepOptions};
pub use parse::{parse_poly, ParseError};
pub use report::{canonical_json, CliError, Format, Report, ENGINE_VERSION};

/// Environment variable overriding the trial-division bound used to
/// certify that `m` is squarefree.
pub const SQUAREFREE_BOUND_VAR: &str = "ORE_SQUAREFREE_BOUND";

pub fn squarefree_bound() -> Result<u64, CliError> {
    match std::env::var(SQUAREFREE_BOUND_VAR) {
        Err(_) => Ok(ore_engine::monogenity::DEFAULT_SQUAREFREE_BOUND),
        Ok(v) => v
            .trim()
            .parse()
            .ok()
            .filter(|&b: &u64| b >= 2)
            .ok_or_else(|| {
                CliError::Usage(format!(
                    "{SQUAREFREE_BOUND_VAR} must be an integer >= 2, got '{v}'"
                ))
            }),
    }
}
