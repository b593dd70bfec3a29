//! Named end-to-end scenarios: each builds its objects, runs every check
//! that applies and collects the results in a deterministic report.

pub mod config;
pub mod mutation;
pub mod report;
pub mod scenarios;
pub mod tables;
mod stages;

pub use config::{ScenarioConfig, SCENARIOS};
pub use mutation::{Mutation, CATALOGUE};
pub use report::{check_golden, default_golden_dir, record_golden, ScenarioReport, Section, Summary};
pub use scenarios::{build, Built, ScenarioRun};
pub use tables::{table, OBJECTS};

#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    #[error("unknown scenario {0:?}")]
    UnknownScenario(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("invalid mutation: {0}")]
    Mutation(String),
    #[error("could not build the scenario: {0}")]
    Build(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("no golden file at {0}")]
    MissingGolden(String),
}

/// Runs `cfg`, optionally with one corrupted structure constant.
pub fn run_scenario(cfg: &ScenarioConfig, mutation: Option<&Mutation>) -> Result<ScenarioRun, ScenarioError> {
    scenarios::run(cfg, mutation)
}
