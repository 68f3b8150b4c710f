use crate::error::{usage, CliError};
use crate::grid::List;
use crate::output::{emit, read};
use crate::{Format, OutArgs};
use clap::Args;
use egstab::verify::{self, CheckReport, Suite, VerifyConfig};
use serde_json::Value;
use std::path::PathBuf;

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite id, or `all`.
    #[arg(long)]
    suite: Option<String>,
    /// Config to start from: a report (or list of reports) or a bare config.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    k: Option<List>,
    #[arg(long)]
    alpha: Option<List>,
    #[arg(long)]
    beta: Option<List>,
    #[arg(long)]
    s: Option<List>,
    #[arg(long)]
    r: Option<List>,
    #[arg(long)]
    delta: Option<List>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Allow exhaustive runs at order 10.
    #[arg(long)]
    deep: bool,
    /// Worker threads; defaults to all cores.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    out: OutArgs,
}

/// Configs embedded in a report file, a list of reports, or a bare config.
pub fn configs_from(value: Value) -> Result<Vec<VerifyConfig>, CliError> {
    let one = |v: Value| -> Result<VerifyConfig, CliError> {
        let v = match v.get("config") {
            Some(c) => c.clone(),
            None => v,
        };
        serde_json::from_value(v).map_err(|e| usage(format!("not a verify config: {e}")))
    };
    match value {
        Value::Array(items) => items.into_iter().map(one).collect(),
        v => Ok(vec![one(v)?]),
    }
}

fn apply(a: &VerifyArgs, c: &mut VerifyConfig) {
    let set = |dst: &mut Vec<usize>, src: &Option<List>| {
        if let Some(l) = src {
            dst.clone_from(&l.0);
        }
    };
    if let Some(x) = a.n_min {
        c.n_min = x;
    }
    if let Some(x) = a.n_max {
        c.n_max = x;
    }
    set(&mut c.k, &a.k);
    set(&mut c.alpha, &a.alpha);
    set(&mut c.beta, &a.beta);
    set(&mut c.s, &a.s);
    set(&mut c.r, &a.r);
    set(&mut c.delta, &a.delta);
    if let Some(x) = a.trials {
        c.trials = x;
    }
    if let Some(x) = a.seed {
        c.seed = x;
    }
    c.deep |= a.deep;
}

fn resolve(a: &VerifyArgs) -> Result<Vec<VerifyConfig>, CliError> {
    let mut cfgs = match (&a.config, a.suite.as_deref()) {
        (Some(path), sel) => {
            let text = read(path)?;
            let value: Value = serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            let mut v = configs_from(value)?;
            if let Some(id) = sel.filter(|&s| s != "all") {
                let suite: Suite = id.parse()?;
                v.retain(|c| c.suite == suite);
            }
            v
        }
        (None, Some("all")) => Suite::ALL.iter().map(|&s| VerifyConfig::defaults(s)).collect(),
        (None, Some(id)) => vec![VerifyConfig::defaults(id.parse()?)],
        (None, None) => return Err(usage("verify needs --suite or --config")),
    };
    if cfgs.is_empty() {
        return Err(usage("no matching suite in the config file"));
    }
    for c in &mut cfgs {
        apply(a, c);
        c.validate()?;
    }
    Ok(cfgs)
}

pub fn summary(r: &CheckReport) -> String {
    let vacuous = r.grid.iter().filter(|c| c.vacuous).count();
    format!(
        "{}: {} graphs, {} units, {} passes, {} failures, {} skips, {} vacuous cells, {} ms",
        r.suite,
        r.counts.examined,
        r.counts.applied,
        r.counts.passes,
        r.counts.failures,
        r.counts.skips,
        vacuous,
        r.timing.wall_ms
    )
}

pub fn render(reports: &[CheckReport], format: Format) -> Result<String, CliError> {
    Ok(match (format, reports) {
        (Format::Json, [one]) => one.to_json()?,
        (Format::Json, many) => serde_json::to_string_pretty(many).map_err(egstab::Error::from)? + "\n",
        (Format::Csv, [one]) => one.to_csv(),
        (Format::Csv, _) => return Err(usage("csv output takes a single suite")),
        (Format::Graph6, _) => reports
            .iter()
            .flat_map(|r| &r.counterexamples)
            .map(|c| c.graph6.clone() + "\n")
            .collect(),
    })
}

pub fn run(args: VerifyArgs) -> Result<u8, CliError> {
    let cfgs = resolve(&args)?;
    if args.format == Format::Csv && cfgs.len() > 1 {
        return Err(usage("csv output takes a single suite"));
    }
    let mut reports = Vec::new();
    for c in &cfgs {
        let r = verify::run(c, args.jobs).map_err(CliError::Internal)?;
        eprintln!("{}", summary(&r));
        for note in &r.errata {
            eprintln!("  note: {note}");
        }
        reports.push(r);
    }
    emit(args.out.out.as_deref(), &render(&reports, args.format)?)?;
    Ok(verify::exit_code(&reports) as u8)
}
