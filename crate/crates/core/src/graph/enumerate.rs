//! Isomorph-free generation of connected and 2-connected graphs.
//!
//! Graphs on `n` vertices are grown from the connected graphs on `n - 1`
//! vertices by attaching one new vertex. A graph is kept only when the new
//! vertex has minimum degree among its non-cut vertices, which every class
//! admits; survivors are deduplicated by canonical code and emitted sorted.

use super::canon::{canonical_code, CanonCode};
use super::connectivity::{cut_vertices, is_two_connected};
use super::graph6::{graph6_encode, read_graph6_lines};
use super::{Bits, Graph, VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::par;
use std::collections::{HashMap, HashSet};
use std::fs;
use std::io::{BufReader, Write};
use std::path::{Path as FsPath, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

/// Orders above this need `allow_large`.
pub const MAX_SOFT_ORDER: usize = 10;

const CHUNK: usize = 2048;

/// Controls for enumeration.
#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions {
    /// Permit orders above [`MAX_SOFT_ORDER`].
    pub allow_large: bool,
    /// Directory for graph6 cache files.
    pub cache_dir: Option<PathBuf>,
}

impl EnumerateOptions {
    /// Options taking the cache directory from `EGSTAB_CACHE_DIR`.
    pub fn from_env() -> Self {
        EnumerateOptions {
            allow_large: false,
            cache_dir: std::env::var_os("EGSTAB_CACHE_DIR").map(PathBuf::from),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Kind {
    Connected,
    TwoConnected,
}

impl Kind {
    fn label(self) -> &'static str {
        match self {
            Kind::Connected => "connected",
            Kind::TwoConnected => "twoconnected",
        }
    }
}

type Memo = Mutex<HashMap<(Kind, usize), Arc<Vec<Graph>>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, sorted by canonical graph6 string.
pub fn enumerate_connected(n: usize, opts: &EnumerateOptions) -> Result<Arc<Vec<Graph>>> {
    enumerate(Kind::Connected, n, opts)
}

/// One representative per isomorphism class of 2-connected graphs on `n`
/// vertices, sorted by canonical graph6 string.
pub fn enumerate_two_connected(n: usize, opts: &EnumerateOptions) -> Result<Arc<Vec<Graph>>> {
    if n < 3 {
        return Ok(Arc::new(Vec::new()));
    }
    enumerate(Kind::TwoConnected, n, opts)
}

fn enumerate(kind: Kind, n: usize, opts: &EnumerateOptions) -> Result<Arc<Vec<Graph>>> {
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded(format!("cannot enumerate order {n}")));
    }
    if n > MAX_SOFT_ORDER && !opts.allow_large {
        return Err(Error::InvalidParameters(format!(
            "order {n} is above the soft cap {MAX_SOFT_ORDER}; enable allow_large"
        )));
    }
    if let Some(hit) = memo().lock().expect("memo lock").get(&(kind, n)) {
        return Ok(hit.clone());
    }
    let cache = opts
        .cache_dir
        .as_ref()
        .map(|d| d.join(format!("{}-n{n}.g6", kind.label())));
    let graphs = match cache.as_deref().filter(|p| p.exists()) {
        Some(p) => load_cache(p, kind, n)?,
        None => {
            let gs = generate(kind, n, opts)?;
            if let Some(p) = &cache {
                store_cache(p, kind, n, &gs)?;
            }
            gs
        }
    };
    let graphs = Arc::new(graphs);
    memo().lock().expect("memo lock").insert((kind, n), graphs.clone());
    Ok(graphs)
}

fn header(kind: Kind, n: usize) -> String {
    format!("#egstab-enum n={n} {}", kind.label())
}

fn load_cache(p: &FsPath, kind: Kind, n: usize) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(p)?;
    let first = text.lines().next().unwrap_or("");
    if first != header(kind, n) {
        return Err(Error::Parse(format!("{}: unexpected cache header", p.display())));
    }
    let gs = read_graph6_lines(BufReader::new(text.as_bytes()))?;
    if gs.iter().any(|g| g.n() != n) {
        return Err(Error::Parse(format!("{}: wrong order in cache", p.display())));
    }
    Ok(gs)
}

fn store_cache(p: &FsPath, kind: Kind, n: usize, gs: &[Graph]) -> Result<()> {
    if let Some(dir) = p.parent() {
        fs::create_dir_all(dir)?;
    }
    let tmp = p.with_extension(format!("tmp{}", std::process::id()));
    {
        let mut f = std::io::BufWriter::new(fs::File::create(&tmp)?);
        writeln!(f, "{}", header(kind, n))?;
        for g in gs {
            writeln!(f, "{}", graph6_encode(g))?;
        }
        f.flush()?;
    }
    fs::rename(&tmp, p)?;
    Ok(())
}

fn generate(kind: Kind, n: usize, opts: &EnumerateOptions) -> Result<Vec<Graph>> {
    match n {
        0 => return Ok(Vec::new()),
        1 if kind == Kind::Connected => return Ok(vec![Graph::empty(1)?]),
        _ => {}
    }
    let parents = enumerate(Kind::Connected, n - 1, opts)?;
    let min_nbrs = if kind == Kind::TwoConnected { 2 } else { 1 };
    let mut seen: HashSet<CanonCode> = HashSet::new();
    for chunk in parents.chunks(CHUNK) {
        let found = par::map(chunk, |p| children(p, kind, min_nbrs));
        for codes in found {
            seen.extend(codes);
        }
    }
    let mut codes: Vec<CanonCode> = seen.into_iter().collect();
    codes.sort_unstable();
    Ok(codes.iter().map(CanonCode::to_graph).collect())
}

fn children(parent: &Graph, kind: Kind, min_nbrs: u32) -> Vec<CanonCode> {
    let m = parent.n();
    let mut local: HashSet<CanonCode> = HashSet::new();
    for s in 1u64..1 << m {
        let d = s.count_ones() as usize;
        if d < min_nbrs as usize {
            continue;
        }
        // In a 2-connected child every vertex is a non-cut vertex, so the new
        // one must reach the minimum degree.
        if kind == Kind::TwoConnected && (0..m).any(|u| parent.degree(u) + ((s >> u & 1) as usize) < d) {
            continue;
        }
        let child = parent.with_vertex(VertexSet(s)).expect("order checked");
        let keep = match kind {
            Kind::TwoConnected => is_two_connected(&child),
            Kind::Connected => {
                let cuts = cut_vertices(&child);
                Bits(child.vertices().0 & !cuts.0).all(|u| child.degree(u) >= d)
            }
        };
        if keep {
            local.insert(canonical_code(&child));
        }
    }
    local.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let o = EnumerateOptions::default();
        let conn: Vec<usize> = (1..=7).map(|n| enumerate_connected(n, &o).unwrap().len()).collect();
        assert_eq!(conn, vec![1, 1, 2, 6, 21, 112, 853]);
        let two: Vec<usize> = (3..=7).map(|n| enumerate_two_connected(n, &o).unwrap().len()).collect();
        assert_eq!(two, vec![1, 3, 10, 56, 468]);
    }

    #[test]
    fn soft_cap() {
        let o = EnumerateOptions::default();
        assert!(matches!(
            enumerate_two_connected(11, &o),
            Err(Error::InvalidParameters(_))
        ));
    }
}
