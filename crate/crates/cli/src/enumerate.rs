use crate::error::{usage, CliError};
use crate::grid::List;
use crate::output::emit;
use crate::{Format, OutArgs};
use clap::{Args, ValueEnum};
use egstab::graph::{enumerate_connected, enumerate_two_connected, graph6_encode, EnumerateOptions};
use serde_json::json;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Class {
    Connected,
    TwoConnected,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// Orders, e.g. `4..7`.
    #[arg(long)]
    n: List,
    #[arg(long, value_enum, default_value = "two-connected")]
    class: Class,
    /// Allow orders above the default limit.
    #[arg(long)]
    deep: bool,
    /// graph6 lists every graph; json gives counts per order.
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    #[command(flatten)]
    out: OutArgs,
}

pub fn run(args: EnumerateArgs) -> Result<u8, CliError> {
    let opts = EnumerateOptions {
        allow_large: args.deep,
        ..EnumerateOptions::from_env()
    };
    let mut text = String::new();
    let mut counts = Vec::new();
    for &n in &args.n.0 {
        let graphs = match args.class {
            Class::Connected => enumerate_connected(n, &opts)?,
            Class::TwoConnected => enumerate_two_connected(n, &opts)?,
        };
        eprintln!("n={n}: {} classes", graphs.len());
        counts.push(json!({ "n": n, "count": graphs.len() }));
        if args.format == Format::Graph6 {
            for g in graphs.iter() {
                text.push_str(&graph6_encode(g));
                text.push('\n');
            }
        }
    }
    match args.format {
        Format::Graph6 => {}
        Format::Json => text = serde_json::to_string_pretty(&counts).map_err(egstab::Error::from)? + "\n",
        Format::Csv => {
            text = "n,count\n".into();
            for c in &counts {
                text.push_str(&format!("{},{}\n", c["n"], c["count"]));
            }
        }
    }
    if args.n.0.is_empty() {
        return Err(usage("--n is empty"));
    }
    emit(args.out.out.as_deref(), &text)?;
    Ok(0)
}
