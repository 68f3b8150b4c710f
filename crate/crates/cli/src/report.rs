use crate::error::{usage, CliError};
use crate::output::{emit, read};
use crate::verify::{render, summary};
use crate::{Format, OutArgs};
use clap::Args;
use egstab::verify::{self, CheckReport};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};

#[derive(Args, Debug)]
pub struct ReportArgs {
    /// A report written by `verify`.
    #[arg(long = "in")]
    input: PathBuf,
    /// Run each embedded config again and compare, ignoring timing.
    #[arg(long, conflicts_with = "recheck")]
    rerun: bool,
    /// Replay every counterexample record.
    #[arg(long)]
    recheck: bool,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    out: OutArgs,
}

fn load(path: &Path) -> Result<Vec<CheckReport>, CliError> {
    let text = read(path)?;
    let value: Value = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let parse = |v: Value| serde_json::from_value::<CheckReport>(v).map_err(|e| usage(format!("not a report: {e}")));
    match value {
        Value::Array(items) => items.into_iter().map(parse).collect(),
        v => Ok(vec![parse(v)?]),
    }
}

pub fn run(args: ReportArgs) -> Result<u8, CliError> {
    let reports = load(&args.input)?;
    let out = args.out.out.as_deref();
    if args.rerun {
        let mut fresh = Vec::new();
        let mut same = true;
        for r in &reports {
            let again = verify::run(&r.config, args.jobs).map_err(CliError::Internal)?;
            let equal = again.without_timing() == r.without_timing();
            eprintln!("{} [{}]", summary(&again), if equal { "identical" } else { "differs" });
            same &= equal;
            fresh.push(again);
        }
        emit(out, &render(&fresh, args.format)?)?;
        return Ok(if same { 0 } else { 1 });
    }
    if args.recheck {
        let mut rows = Vec::new();
        let mut all = true;
        for r in &reports {
            for (i, rec) in r.counterexamples.iter().enumerate() {
                let again = verify::recheck(rec).map_err(CliError::Internal)?;
                all &= again;
                rows.push(json!({ "suite": r.suite, "index": i, "claim": rec.claim, "reproduces": again }));
            }
        }
        eprintln!(
            "{} record(s), {}",
            rows.len(),
            if all { "all reproduce" } else { "some do not reproduce" }
        );
        emit(
            out,
            &(serde_json::to_string_pretty(&rows).map_err(egstab::Error::from)? + "\n"),
        )?;
        return Ok(if all { 0 } else { 1 });
    }
    for r in &reports {
        eprintln!("{}", summary(r));
    }
    emit(out, &render(&reports, args.format)?)?;
    Ok(0)
}
