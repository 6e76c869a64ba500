//! Subcommand implementations behind the `msort` binary.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context};
use msort_core::listspec::{elms, keys};
use msort_core::refinement::{self, Mutant, Programs, RunOptions};
use msort_core::{ArrayState, Report};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

/// Which obligations a run covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Selection {
    All,
    Only(Vec<String>),
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub max_len: Option<usize>,
    pub alphabet: Option<usize>,
    pub obligations: Selection,
    pub report_path: Option<PathBuf>,
    pub fail_fast: bool,
    pub mutant: Mutant,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_len: None,
            alphabet: None,
            obligations: Selection::All,
            report_path: None,
            fail_fast: false,
            mutant: Mutant::None,
        }
    }
}

impl RunConfig {
    /// Rejects bad bounds and unknown obligation names.
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.alphabet == Some(0) {
            bail!("--alphabet must be at least 1");
        }
        if let Selection::Only(names) = &self.obligations {
            if names.is_empty() {
                bail!("no obligations selected");
            }
            for n in names {
                refinement::find(n)?;
            }
        }
        Ok(())
    }

    fn options(&self) -> RunOptions {
        RunOptions {
            max_len: self.max_len,
            alphabet: self.alphabet,
            mutant: self.mutant,
            failure_cap: 0,
            fail_fast: self.fail_fast,
        }
    }

    pub fn run(&self) -> anyhow::Result<Report> {
        self.validate()?;
        let names = match &self.obligations {
            Selection::All => Vec::new(),
            Selection::Only(names) => names.clone(),
        };
        Ok(refinement::run_obligations(&names, &self.options())?)
    }
}

fn exit_for(report: &Report) -> i32 {
    if report.passed {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// Human-readable projection of a report.
pub fn render(report: &Report, out: &mut impl Write) -> std::io::Result<()> {
    for v in &report.obligations {
        let status = if v.passed() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "{status} {:<30} cases_run={:<9} max_len={} alphabet={}  {}",
            v.obligation, v.cases_run, v.bounds.max_len, v.bounds.alphabet, v.paper_anchor
        )?;
        if let Some(cx) = v.failures.first() {
            writeln!(out, "     counterexample (size {}): {}", cx.size, cx.input)?;
            writeln!(out, "       expected: {}", cx.expected)?;
            writeln!(out, "       actual:   {}", cx.actual)?;
            if v.failures.len() > 1 {
                writeln!(out, "     ({} more kept)", v.failures.len() - 1)?;
            }
        }
    }
    let failed = report.failed().count();
    writeln!(
        out,
        "{} obligations, {} failed, {} cases, mutant {}",
        report.obligations.len(),
        failed,
        report.total_cases,
        report.mutant
    )
}

pub fn cmd_laws(config: &RunConfig, out: &mut impl Write) -> anyhow::Result<i32> {
    let report = config.run()?;
    render(&report, out)?;
    if let Some(path) = &config.report_path {
        write_report(&report, path)?;
    }
    Ok(exit_for(&report))
}

pub fn write_report(report: &Report, path: &PathBuf) -> anyhow::Result<()> {
    let json = serde_json::to_string_pretty(report)?;
    fs::write(path, json + "\n")
        .with_context(|| format!("cannot write report to {}", path.display()))
}

/// Writes the JSON report to `config.report_path`, or to `out` when unset.
pub fn cmd_report(config: &RunConfig, out: &mut impl Write) -> anyhow::Result<i32> {
    if let Some(path) = &config.report_path {
        // Fail on an unwritable path before spending time on the run.
        fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .with_context(|| format!("cannot write report to {}", path.display()))?;
    }
    let report = config.run()?;
    match &config.report_path {
        Some(path) => write_report(&report, path)?,
        None => writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?,
    }
    Ok(exit_for(&report))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SortMode {
    List,
    Array,
}

/// Sorts plain integer keys; tags are assigned by position.
pub fn sort_keys(input: &[i64], mode: SortMode) -> anyhow::Result<Vec<i64>> {
    let xs = elms(input);
    let programs = Programs::pristine();
    let listed = keys(&programs.qsort(&xs));
    if mode == SortMode::List {
        return Ok(listed);
    }
    let mut arr = ArrayState::from_list(0, &xs);
    programs.iqsort_on(&mut arr, 0, xs.len())?;
    let arrayed = keys(&arr.segment(0, xs.len())?);
    if arrayed != listed {
        bail!("array and list modes disagree: {arrayed:?} vs {listed:?}");
    }
    Ok(arrayed)
}

pub fn cmd_sort(input: &[i64], mode: SortMode, out: &mut impl Write) -> anyhow::Result<i32> {
    let sorted = sort_keys(input, mode)?;
    let line: Vec<String> = sorted.iter().map(i64::to_string).collect();
    writeln!(out, "{}", line.join(" "))?;
    Ok(EXIT_PASS)
}
