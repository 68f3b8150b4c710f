use crate::error::{usage, CliError};
use crate::output::{emit, read};
use crate::OutArgs;
use clap::{Args, ValueEnum};
use egstab::algorithms::{
    circumference, clique_tally, contains_subgraph, disintegration, greedy_maximal_path, posa_cycle, posa_guarantee,
};
use egstab::graph::{graph6_decode, read_graph6_lines};
use egstab::Graph;
use serde_json::{json, Value};
use std::path::PathBuf;
use std::time::Instant;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Circ,
    Cliques,
    Disint,
    Posa,
    Subiso,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    op: Op,
    /// graph6 file, one graph per line.
    #[arg(long = "in")]
    input: PathBuf,
    /// Degree threshold for disint.
    #[arg(long, default_value_t = 1)]
    alpha: usize,
    /// graph6 file whose first line is the pattern for subiso.
    #[arg(long)]
    pattern: Option<PathBuf>,
    /// Start vertex of the greedy path for posa.
    #[arg(long, default_value_t = 0)]
    start: usize,
    #[command(flatten)]
    out: OutArgs,
}

fn solve(op: Op, g: &Graph, args: &SolveArgs, pattern: Option<&Graph>) -> Result<(Value, Value), CliError> {
    Ok(match op {
        Op::Circ => match circumference(g) {
            Some((len, w)) => (json!(len), json!(w.vertices())),
            None => (json!(0), Value::Null),
        },
        Op::Cliques => (
            json!(clique_tally(g).iter().map(|c| c.to_string()).collect::<Vec<_>>()),
            Value::Null,
        ),
        Op::Disint => {
            let core = disintegration(g, args.alpha).to_vec();
            (json!(core.len()), json!(core))
        }
        Op::Posa => {
            if args.start >= g.n() {
                return Err(usage(format!(
                    "--start {} is not a vertex of a graph on {} vertices",
                    args.start,
                    g.n()
                )));
            }
            let path = greedy_maximal_path(g, args.start, None);
            let target = posa_guarantee(g, &path)?;
            let cycle = posa_cycle(g, &path)?;
            (
                json!({ "cycle": cycle.len(), "guarantee": target, "path": path.vertices() }),
                json!(cycle.vertices()),
            )
        }
        Op::Subiso => {
            let p = pattern.expect("pattern loaded for subiso");
            match contains_subgraph(g, p) {
                Some(emb) => (json!(true), json!(emb)),
                None => (json!(false), Value::Null),
            }
        }
    })
}

pub fn run(args: SolveArgs) -> Result<u8, CliError> {
    let text = read(&args.input)?;
    let graphs = read_graph6_lines(text.as_bytes())?;
    let pattern = match (&args.pattern, args.op) {
        (Some(p), _) => {
            let line = read(p)?
                .lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .map(String::from);
            Some(graph6_decode(
                &line.ok_or_else(|| usage(format!("{} is empty", p.display())))?,
            )?)
        }
        (None, Op::Subiso) => return Err(usage("subiso needs --pattern")),
        (None, _) => None,
    };
    let mut out = String::new();
    let mut errors = 0usize;
    for (index, g) in graphs.iter().enumerate() {
        let start = Instant::now();
        let rec = match solve(args.op, g, &args, pattern.as_ref()) {
            Ok((result, witness)) => json!({
                "index": index,
                "result": result,
                "witness": witness,
                "micros": start.elapsed().as_micros() as u64,
            }),
            Err(CliError::Core(e)) => {
                errors += 1;
                json!({ "index": index, "error": e.to_string(), "micros": start.elapsed().as_micros() as u64 })
            }
            Err(e) => return Err(e),
        };
        out.push_str(&rec.to_string());
        out.push('\n');
    }
    emit(args.out.out.as_deref(), &out)?;
    eprintln!("{} graph(s), {errors} error(s)", graphs.len());
    Ok(0)
}
