//! Command-line front end: reads a sectioned TOML config, runs the requested
//! analyses and writes CSV tables, `summary.txt` and a `MANIFEST`.
//!
//! Exit codes: 0 on success, 2 when the config cannot be read or parsed
//! (nothing is written), 3 when an analysis fails (completed reports are kept
//! and listed in the MANIFEST), 1 when the output cannot be written.

pub mod analyses;
pub mod config;
pub mod output;

use std::fs;
use std::path::{Path, PathBuf};

use clap::Parser;
use rayon::prelude::*;

use analyses::{run_analysis, AnalysisOutput, RunSettings};
use config::{Config, Section};
use output::{render_csv, Manifest};

#[derive(Debug, Clone, Parser)]
#[command(name = "entire-growth", about = "Growth bounds for entire functions from their Taylor coefficients")]
pub struct Args {
    /// Path to the TOML config.
    #[arg(long)]
    pub config: PathBuf,
    /// Output directory, created if missing.
    #[arg(long)]
    pub out: PathBuf,
    /// Do not echo the summary to stdout.
    #[arg(long)]
    pub quiet: bool,
    /// Term cap for series summation.
    #[arg(long)]
    pub max_terms: Option<usize>,
    /// Number of points in the default epsilon grid.
    #[arg(long)]
    pub eps_points: Option<usize>,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_MODULE: i32 = 3;

#[derive(Debug)]
pub struct SectionResult {
    pub name: String,
    pub label: String,
    /// Completed analyses in config order, followed by the first failure.
    pub outputs: Vec<(&'static str, AnalysisOutput)>,
    pub failure: Option<(&'static str, crate::Error)>,
}

/// Runs every section of `cfg`. Sections run concurrently, analyses inside a
/// section run in order and stop at the first failure.
pub fn evaluate(cfg: &Config, settings: &RunSettings) -> Vec<SectionResult> {
    cfg.sections.par_iter().map(|s| evaluate_section(s, settings)).collect()
}

fn evaluate_section(s: &Section, settings: &RunSettings) -> SectionResult {
    let mut res = SectionResult { name: s.name.clone(), label: s.family.label(), outputs: Vec::new(), failure: None };
    for &a in &s.analyses {
        match run_analysis(s, a, settings) {
            Ok(out) => res.outputs.push((a.name(), out)),
            Err(e) => {
                res.failure = Some((a.name(), e));
                break;
            }
        }
    }
    res
}

/// Writes results under `out`. Returns the error text of the first failing
/// analysis, if any; sections after it are not written.
pub fn write_results(results: &[SectionResult], out: &Path) -> std::io::Result<(String, Option<String>)> {
    fs::create_dir_all(out)?;
    let mut manifest = Manifest::default();
    let mut summary = String::new();
    let mut failure = None;
    for r in results {
        summary.push_str(&format!("[{}] {}\n", r.name, r.label));
        for (analysis, o) in &r.outputs {
            for t in &o.tables {
                let rel = format!("{}/{}", r.name, t.file);
                manifest.write(out, &rel, &render_csv(t)?, t.rows.len())?;
            }
            for line in &o.summary {
                summary.push_str(&format!("  {analysis}: {line}\n"));
            }
        }
        if let Some((analysis, e)) = &r.failure {
            let msg = format!("[{}] {analysis}: {e}", r.name);
            summary.push_str(&format!("  {analysis}: FAILED: {e}\n"));
            failure = Some(msg);
            break;
        }
    }
    manifest.write(out, "summary.txt", summary.as_bytes(), summary.lines().count())?;
    manifest.finish(out)?;
    Ok((summary, failure))
}

pub fn run(args: &Args) -> i32 {
    let text = match fs::read_to_string(&args.config) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", args.config.display());
            return EXIT_CONFIG;
        }
    };
    let base = args.config.parent().unwrap_or(Path::new("."));
    let cfg = match config::parse(&text, base) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}: {e}", args.config.display());
            return EXIT_CONFIG;
        }
    };
    let mut settings = RunSettings::default();
    if let Some(m) = args.max_terms {
        if m == 0 {
            eprintln!("error: --max-terms must be positive");
            return EXIT_CONFIG;
        }
        settings.max_terms = m;
    }
    if let Some(p) = args.eps_points {
        if p == 0 {
            eprintln!("error: --eps-points must be positive");
            return EXIT_CONFIG;
        }
        settings.eps_points = p;
    }
    let results = evaluate(&cfg, &settings);
    match write_results(&results, &args.out) {
        Ok((summary, failure)) => {
            if !args.quiet {
                print!("{summary}");
            }
            match failure {
                Some(msg) => {
                    eprintln!("error: {msg}");
                    EXIT_MODULE
                }
                None => EXIT_OK,
            }
        }
        Err(e) => {
            eprintln!("error: writing {}: {e}", args.out.display());
            EXIT_IO
        }
    }
}
