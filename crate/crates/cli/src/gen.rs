use crate::error::{usage, CliError};
use crate::output::emit;
use crate::{Format, OutArgs};
use clap::Args;
use egstab::families::{self, FamilyDescriptor, FamilyType, KFamilySpec, SpecialTag};
use egstab::graph::graph6_encode;
use egstab::Graph;
use serde_json::json;
use std::path::PathBuf;

#[derive(Args, Debug)]
pub struct GenArgs {
    /// h, z, fell, e, gnk3, F0..F5, type1..type4 or kfam.
    #[arg(long)]
    family: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    /// `l` for fell.
    #[arg(long)]
    l: Option<usize>,
    /// Member order; defaults to `k`.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    alpha: Option<usize>,
    /// Largest member order for kfam.
    #[arg(long)]
    m_max: Option<usize>,
    /// graph6 (default) or json.
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    #[command(flatten)]
    out: OutArgs,
}

struct Item {
    graph: Graph,
    meta: Vec<(String, String)>,
}

fn get(v: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| usage(format!("--family {family} needs --{flag}")))
}

fn describe(d: &FamilyDescriptor) -> Vec<(String, String)> {
    let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
    let pairs = |v: &[(usize, usize)]| v.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(",");
    let mut m = vec![
        ("type".to_string(), d.ftype.to_string()),
        ("special".into(), d.special.map_or(String::new(), |s| s.to_string())),
        ("m".into(), d.m.to_string()),
        ("k".into(), d.k.to_string()),
        ("r".into(), d.r.to_string()),
        ("A".into(), join(&d.a)),
        ("B".into(), join(&d.b)),
        ("C".into(), join(&d.c)),
        ("D".into(), join(&d.d)),
        ("layout".into(), d.cd_layout.clone()),
        ("a_missing".into(), pairs(&d.a_missing)),
        ("d_edges".into(), pairs(&d.d_edges)),
        ("attachments".into(), pairs(&d.attachments)),
    ];
    m.extend(d.labels.iter().map(|(k, v)| (format!("label.{k}"), v.to_string())));
    m
}

fn build(a: &GenArgs) -> Result<Vec<Item>, CliError> {
    let f = a.family.as_str();
    let plain = |graph: Graph, params: &[(&str, usize)]| {
        let mut meta = vec![("family".to_string(), f.to_string())];
        meta.extend(params.iter().map(|(k, v)| (k.to_string(), v.to_string())));
        vec![Item { graph, meta }]
    };
    let from_desc = |list: Vec<(FamilyDescriptor, Graph)>| -> Vec<Item> {
        list.into_iter()
            .map(|(d, graph)| {
                let mut meta = vec![("family".to_string(), f.to_string())];
                meta.extend(describe(&d));
                Item { graph, meta }
            })
            .collect()
    };
    Ok(match f {
        "h" => {
            let (n, k, x) = (get(a.n, "n", f)?, get(a.k, "k", f)?, get(a.a, "a", f)?);
            plain(families::build_h(n, k, x)?, &[("n", n), ("k", k), ("a", x)])
        }
        "z" => {
            let (n, k, d) = (get(a.n, "n", f)?, get(a.k, "k", f)?, get(a.delta, "delta", f)?);
            plain(families::build_z(n, k, d)?, &[("n", n), ("k", k), ("delta", d)])
        }
        "fell" => {
            let l = get(a.l, "l", f)?;
            plain(families::build_f_ell(l)?, &[("l", l)])
        }
        "e" => {
            let n = get(a.n, "n", f)?;
            plain(families::build_e(n)?, &[("n", n)])
        }
        "gnk3" => {
            let (n, k) = (get(a.n, "n", f)?, get(a.k, "k", f)?);
            plain(families::build_gnk3(n, k)?, &[("n", n), ("k", k)])
        }
        "kfam" => {
            let k = get(a.k, "k", f)?;
            let spec = KFamilySpec {
                k,
                alpha: get(a.alpha, "alpha", f)?,
                m_max: a.m_max,
            };
            families::enumerate_k_family(&spec)?
                .into_iter()
                .map(|m| Item {
                    graph: m.graph,
                    meta: vec![
                        ("family".into(), f.into()),
                        ("item".into(), m.item.to_string()),
                        ("name".into(), m.name),
                        ("canonical".into(), m.canonical),
                    ],
                })
                .collect()
        }
        _ => {
            let k = get(a.k, "k", f)?;
            let l = (k.max(5) - 1) / 2;
            if let Ok(tag) = f.parse::<SpecialTag>() {
                // F4 has four vertices in D, one more than F0.
                let m = a.m.unwrap_or(if tag == SpecialTag::F4 { 2 * l + 3 } else { k });
                let r = match tag {
                    SpecialTag::F5 => a.r.unwrap_or(2),
                    SpecialTag::F0 | SpecialTag::F4 => a.r.unwrap_or(l.saturating_sub(2)),
                    _ => get(a.r, "r", f)?,
                };
                from_desc(vec![families::build_special(tag, m, k, r)?])
            } else {
                let ftype = match f {
                    "type1" => FamilyType::I,
                    "type2" => FamilyType::II,
                    "type3" => FamilyType::III,
                    "type4" => FamilyType::IV,
                    _ => return Err(usage(format!("unknown family {f:?}"))),
                };
                let r = get(a.r, "r", f)?;
                let m = a.m.unwrap_or(k);
                from_desc(
                    families::enumerate_family(m, k, r)?
                        .into_iter()
                        .filter(|(d, _)| d.ftype == ftype)
                        .collect(),
                )
            }
        }
    })
}

pub fn run(args: GenArgs) -> Result<u8, CliError> {
    let items = build(&args)?;
    if items.is_empty() {
        eprintln!("no graphs for these parameters");
    }
    let text = match args.format {
        Format::Graph6 => items.iter().map(|i| graph6_encode(&i.graph) + "\n").collect(),
        Format::Json => {
            let docs: Vec<_> = items
                .iter()
                .map(|i| {
                    let meta: serde_json::Map<_, _> = i.meta.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
                    json!({ "graph6": graph6_encode(&i.graph), "meta": meta })
                })
                .collect();
            serde_json::to_string_pretty(&docs).map_err(egstab::Error::from)? + "\n"
        }
        Format::Csv => return Err(usage("gen writes graph6 or json")),
    };
    emit(args.out.out.as_deref(), &text)?;
    if let (Some(out), Format::Graph6) = (&args.out.out, args.format) {
        let mut side = String::new();
        for i in &items {
            side.push_str(&format!("graph6={}\n", graph6_encode(&i.graph)));
            for (k, v) in &i.meta {
                side.push_str(&format!("{k}={v}\n"));
            }
            side.push('\n');
        }
        let mut path = out.clone().into_os_string();
        path.push(".desc");
        emit(Some(&PathBuf::from(path)), &side)?;
    }
    eprintln!("{} graph(s)", items.len());
    Ok(0)
}
