//! `reproduce` subcommand: re-derive the bundled reference results and
//! report PASS / FAIL / SKIP per entry.
//!
//! With no arguments every bundled target runs; otherwise each named
//! target runs in order. Targets are the four parameter tables
//! (`table1`..`table4`), the three worked constructions (`ex68`, `ex69`,
//! `ex610`), and the small generator-matrix walkthrough (`section3`).

use clap::Args;
use skewcodec_core::{Error, Result};

use crate::manifest::{self, TARGETS};
use crate::report::{ReproduceReport, Verdict};

#[derive(Args, Debug)]
pub struct ReproduceArgs {
    /// Targets to re-derive (default: all bundled targets).
    pub targets: Vec<String>,
}

pub fn run(args: &ReproduceArgs, budget: u64) -> Result<Vec<ReproduceReport>> {
    let names: Vec<String> = if args.targets.is_empty() {
        TARGETS.iter().map(|s| s.to_string()).collect()
    } else {
        args.targets.clone()
    };
    for name in &names {
        if !TARGETS.contains(&name.as_str()) {
            return Err(Error::unsupported(format!(
                "unknown reproduce target {name:?} (expected one of {})",
                TARGETS.join(", ")
            )));
        }
    }
    names.iter().map(|name| manifest::run_target(name, budget)).collect()
}

/// True when every entry in every report passed.
pub fn all_passed(reports: &[ReproduceReport]) -> bool {
    reports.iter().all(|r| r.failed == 0)
}

pub fn human(reports: &[ReproduceReport]) -> String {
    let mut lines = Vec::new();
    for r in reports {
        lines.push(format!("== {} ==", r.target));
        for e in &r.entries {
            lines.push(crate::report::human_entry(e));
        }
        lines.push(format!(
            "{}: {} passed, {} failed, {} skipped",
            r.target, r.passed, r.failed, r.skipped
        ));
    }
    let (p, f, s) = reports.iter().fold((0, 0, 0), |(p, f, s), r| {
        (p + r.passed, f + r.failed, s + r.skipped)
    });
    let verdict = if f == 0 { Verdict::Pass } else { Verdict::Fail };
    lines.push(format!("total: {p} passed, {f} failed, {s} skipped -> {verdict}"));
    lines.join("\n")
}
