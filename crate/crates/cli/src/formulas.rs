use crate::error::{usage, CliError};
use crate::grid::List;
use crate::output::emit;
use crate::OutArgs;
use clap::{Args, ValueEnum};
use egstab::formulas;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Table {
    #[value(name = "h_s")]
    HS,
    #[value(name = "f_s")]
    FS,
    #[value(name = "g_s")]
    GS,
    #[value(name = "bound_pair_max")]
    BoundPairMax,
    Fan,
    Eg,
    Conjecture,
}

#[derive(Args, Debug)]
pub struct FormulaArgs {
    #[arg(long, value_enum)]
    table: Table,
    #[arg(long)]
    n: List,
    #[arg(long)]
    k: Option<List>,
    /// `a` for h_s, the first parameter for bound_pair_max.
    #[arg(long)]
    a: Option<List>,
    /// Second parameter for bound_pair_max.
    #[arg(long)]
    a2: Option<List>,
    #[arg(long)]
    r: Option<List>,
    #[arg(long)]
    s: Option<List>,
    #[command(flatten)]
    out: OutArgs,
}

fn need<'a>(l: &'a Option<List>, flag: &str, table: Table) -> Result<&'a [usize], CliError> {
    l.as_ref().map(|l| l.0.as_slice()).ok_or_else(|| {
        usage(format!(
            "--table {} needs --{flag}",
            table
                .to_possible_value()
                .map_or(String::new(), |v| v.get_name().to_string())
        ))
    })
}

pub fn run(args: FormulaArgs) -> Result<u8, CliError> {
    let t = args.table;
    let (names, points): (Vec<&str>, Vec<Vec<usize>>) = match t {
        Table::HS => (
            vec!["k", "a", "s"],
            product(&[need(&args.k, "k", t)?, need(&args.a, "a", t)?, need(&args.s, "s", t)?]),
        ),
        Table::FS => (
            vec!["k", "r", "s"],
            product(&[need(&args.k, "k", t)?, need(&args.r, "r", t)?, need(&args.s, "s", t)?]),
        ),
        Table::GS => (
            vec!["k", "s"],
            product(&[need(&args.k, "k", t)?, need(&args.s, "s", t)?]),
        ),
        Table::BoundPairMax => (
            vec!["k", "a1", "a2", "s"],
            product(&[
                need(&args.k, "k", t)?,
                need(&args.a, "a", t)?,
                need(&args.a2, "a2", t)?,
                need(&args.s, "s", t)?,
            ]),
        ),
        Table::Fan => (vec!["r"], product(&[need(&args.r, "r", t)?])),
        Table::Eg => (vec!["k"], product(&[need(&args.k, "k", t)?])),
        Table::Conjecture => (
            vec!["r", "s"],
            product(&[need(&args.r, "r", t)?, need(&args.s, "s", t)?]),
        ),
    };
    let column = match t {
        Table::HS => "h",
        Table::FS => "f",
        Table::GS => "g",
        Table::BoundPairMax => "bound",
        Table::Fan => "fan",
        Table::Eg => "eg",
        Table::Conjecture => "conjecture",
    };

    let mut csv = format!("n,{},{column}\n", names.join(","));
    let mut skipped = 0usize;
    for p in &points {
        let q: Vec<i64> = p.iter().map(|&x| x as i64).collect();
        for &n in &args.n.0 {
            let n = n as i64;
            let value = match t {
                Table::HS => formulas::h_s(n, q[0], q[1], q[2]).map(|v| v.to_string()),
                Table::FS => formulas::f_s(n, q[0], q[1], q[2]).map(|v| v.to_string()),
                Table::GS => formulas::g_s(n, q[0], q[1]).map(|v| v.to_string()),
                Table::BoundPairMax => formulas::bound_pair_max(n, q[0], q[1], q[2], q[3]).map(|v| v.to_string()),
                Table::Fan => formulas::fan_bound(q[0], n).map(|v| v.to_string()),
                Table::Eg => formulas::eg_bound(q[0], n).map(|v| v.to_string()),
                Table::Conjecture => formulas::conjecture_bound(n, q[0], q[1]).map(|v| v.to_string()),
            };
            match value {
                Ok(v) => {
                    let cols: Vec<String> = std::iter::once(n.to_string())
                        .chain(p.iter().map(|x| x.to_string()))
                        .collect();
                    csv.push_str(&format!("{},{v}\n", cols.join(",")));
                }
                Err(egstab::Error::OutOfDomain(_)) => skipped += 1,
                Err(e) => return Err(e.into()),
            }
        }
    }
    if skipped > 0 {
        eprintln!("skipped {skipped} points outside the formula's domain");
    }
    emit(args.out.out.as_deref(), &csv)?;
    Ok(0)
}

fn product(lists: &[&[usize]]) -> Vec<Vec<usize>> {
    lists.iter().fold(vec![Vec::new()], |acc, l| {
        acc.iter()
            .flat_map(|p| l.iter().map(move |&x| [p.as_slice(), &[x]].concat()))
            .collect()
    })
}
