//! Scenario parsing, suite execution and JSON reports for the `duplicial`
//! command.

pub mod report;
pub mod scenario;
pub mod suites;

use std::time::Instant;

use report::Report;
use scenario::Scenario;
use suites::{run_suite, scenario_json, RunContext, Suite};

pub use duplicial_core::comonad::DEFAULT_PROBE_BOUND;

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Overrides the scenario's suite list when non-empty.
    pub suites: Vec<Suite>,
    pub level_cap: Option<usize>,
    pub timing: bool,
    pub probe_bound: Option<usize>,
}

/// `DUPLICIAL_PROBE_BOUND`, or [`DEFAULT_PROBE_BOUND`].
pub fn probe_bound_from_env() -> usize {
    std::env::var("DUPLICIAL_PROBE_BOUND")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_PROBE_BOUND)
}

pub fn run(scenario: &Scenario, opts: &RunOptions) -> Result<Report, String> {
    let cap = opts.level_cap.unwrap_or(scenario.level_cap);
    if cap == 0 {
        return Err("level cap must be at least 1".into());
    }
    let bound = opts.probe_bound.unwrap_or_else(probe_bound_from_env);
    let rc = RunContext::new(scenario, cap, bound)?;
    let mut suites = if opts.suites.is_empty() {
        scenario.suites.clone()
    } else {
        opts.suites.clone()
    };
    suites.sort();
    suites.dedup();
    let mut reports = Vec::with_capacity(suites.len());
    for s in suites {
        let start = Instant::now();
        let mut r = run_suite(s, &rc);
        if opts.timing {
            r.elapsed_ms = Some(start.elapsed().as_millis());
        }
        reports.push(r);
    }
    Ok(Report::new(scenario_json(scenario), cap, reports))
}
