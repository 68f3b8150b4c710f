//! Parameter sweeps, one per suite.

use super::checks::{self, ell, CorollaryPoint, TheoremPoint};
use super::report::{params, CheckReport, Collector, Params, Timing, Unit};
use super::{Suite, VerifyConfig};
use crate::algorithms::{circumference_len, clique_tally};
use crate::error::Result;
use crate::families::{enumerate_family_layouts, FamilyDescriptor, FamilyType, KFamilyMember, SpecialTag};
use crate::formulas::conjecture_bound;
use crate::graph::{
    canonical_form, enumerate_connected, enumerate_two_connected, is_connected, EnumerateOptions, Graph, VertexSet,
};
use crate::par;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::collections::{BTreeMap, BTreeSet, HashMap};

const CHUNK: usize = 2048;
/// Most findings listed in an observation.
const MAX_FINDINGS: usize = 200;

type Units = Vec<(usize, Unit)>;
type Observations = BTreeMap<String, Value>;
type SpotJob = (usize, usize, usize, usize, Vec<SpecialTag>, Graph, VertexSet);

/// Cells in insertion order.
#[derive(Default)]
struct Grid {
    cells: Vec<Params>,
}

impl Grid {
    fn add(&mut self, pairs: &[(&str, usize)]) -> usize {
        let p: Vec<(&str, i64)> = pairs.iter().map(|&(k, v)| (k, v as i64)).collect();
        self.cells.push(params(&p));
        self.cells.len() - 1
    }
}

fn options(cfg: &VerifyConfig) -> EnumerateOptions {
    EnumerateOptions {
        allow_large: cfg.deep,
        ..EnumerateOptions::from_env()
    }
}

/// Applies `f` to every graph in parallel and absorbs the units in order.
fn sweep<F>(col: &mut Collector, graphs: &[Graph], f: F) -> Result<()>
where
    F: Fn(&Graph) -> Result<Units> + Sync + Send,
{
    for chunk in graphs.chunks(CHUNK) {
        for units in par::map(chunk, |g| f(g)) {
            for (cell, unit) in units? {
                col.absorb(cell, unit);
            }
        }
    }
    col.examined += graphs.len() as u64;
    Ok(())
}

fn tally_at(tally: &[u128], s: usize) -> u128 {
    tally.get(s).copied().unwrap_or(0)
}

pub(crate) fn run(cfg: &VerifyConfig) -> Result<CheckReport> {
    let mut obs = Observations::new();
    let col = match cfg.suite {
        Suite::ErdosGallai => erdos_gallai(cfg)?,
        Suite::KopylovLuo => kopylov_luo(cfg)?,
        Suite::MainLemma => main_lemma(cfg, &mut obs)?,
        Suite::TheoremMain => theorem_main(cfg, &mut obs)?,
        Suite::PropPaths => prop_paths(cfg, &mut obs)?,
        Suite::LemmaCounts => lemma_counts(cfg, &mut obs)?,
        Suite::Fan => fan(cfg)?,
        Suite::Conjecture => conjecture(cfg)?,
        Suite::Classify => classify(cfg, &mut obs)?,
        Suite::Corollary => corollary(cfg, &mut obs)?,
    };
    let vacuous: Vec<Value> = col
        .cells
        .iter()
        .filter(|c| c.vacuous)
        .map(|c| json!(c.params))
        .collect();
    obs.insert("vacuous_cells".into(), json!(vacuous.len()));
    let counts = col.counts();
    Ok(CheckReport {
        suite: cfg.suite.id().into(),
        asserting: cfg.suite.asserting(),
        config: cfg.clone(),
        grid: col.cells,
        counts,
        counterexamples: col.records,
        counterexamples_truncated: col.truncated,
        observations: obs,
        errata: Vec::new(),
        timing: Timing::default(),
    })
}

fn erdos_gallai(cfg: &VerifyConfig) -> Result<Collector> {
    let mut grid = Grid::default();
    let mut plan = Vec::new();
    for n in cfg.n_min.max(1)..=cfg.n_max {
        let ks: Vec<(usize, usize)> = cfg.k.iter().map(|&k| (k, grid.add(&[("n", n), ("k", k)]))).collect();
        plan.push((n, ks));
    }
    let mut col = Collector::new(grid.cells);
    for (n, ks) in plan {
        let graphs = enumerate_connected(n, &options(cfg))?;
        sweep(&mut col, &graphs, |g| {
            let circ = circumference_len(g);
            ks.iter()
                .map(|&(k, c)| Ok((c, checks::edge_bound(g, k, circ)?)))
                .collect()
        })?;
    }
    Ok(col)
}

fn kopylov_luo(cfg: &VerifyConfig) -> Result<Collector> {
    let mut grid = Grid::default();
    let mut plan = Vec::new();
    for n in cfg.n_min.max(3)..=cfg.n_max {
        let mut pts = Vec::new();
        for &k in cfg.k.iter().filter(|&&k| k <= n) {
            for &s in &cfg.s {
                pts.push((k, s, grid.add(&[("n", n), ("k", k), ("s", s)])));
            }
        }
        plan.push((n, pts));
    }
    let mut col = Collector::new(grid.cells);
    for (n, pts) in plan {
        if pts.is_empty() {
            continue;
        }
        let graphs = enumerate_two_connected(n, &options(cfg))?;
        sweep(&mut col, &graphs, |g| {
            let circ = circumference_len(g);
            let tally = clique_tally(g);
            pts.iter()
                .map(|&(k, s, c)| Ok((c, checks::clique_bound(g, k, s, circ, &tally)?)))
                .collect()
        })?;
    }
    Ok(col)
}

fn main_lemma(cfg: &VerifyConfig, obs: &mut Observations) -> Result<Collector> {
    let mut grid = Grid::default();
    let mut plan = Vec::new();
    for n in cfg.n_min.max(3)..=cfg.n_max {
        let pts: Vec<(usize, usize, usize)> = cfg
            .k
            .iter()
            .filter(|&&k| k <= n)
            .map(|&k| {
                (
                    k,
                    grid.add(&[("n", n), ("k", k)]),
                    grid.add(&[("n", n), ("k", k), ("window", 1)]),
                )
            })
            .collect();
        plan.push((n, pts));
    }
    let mut members: HashMap<(usize, usize), Vec<(usize, Graph)>> = HashMap::new();
    for &k in &cfg.k {
        for m in k..=cfg.n_max.max(k) {
            members.insert((k, m), checks::lemma_members(m, k)?);
        }
    }
    obs.insert(
        "family_sizes".into(),
        json!(members
            .iter()
            .map(|(&(k, m), v)| (format!("k={k} m={m}"), v.len()))
            .collect::<BTreeMap<_, _>>()),
    );
    obs.insert(
        "legend".into(),
        json!({"window=1": "minimal crossing pairs on longest core paths"}),
    );
    let mut col = Collector::new(grid.cells);
    for (n, pts) in plan {
        if pts.is_empty() {
            continue;
        }
        let graphs = enumerate_two_connected(n, &options(cfg))?;
        sweep(&mut col, &graphs, |g| {
            let circ = circumference_len(g);
            let mut out = Vec::new();
            for &(k, lemma_cell, window_cell) in &pts {
                let fam = |m: usize| Ok(members.get(&(k, m)).cloned().unwrap_or_default());
                out.push((lemma_cell, checks::family_embedding(g, k, circ, fam)?));
                out.push((window_cell, checks::crossing_window(g, k, circ, cfg.path_cap)?));
            }
            Ok(out)
        })?;
    }
    Ok(col)
}

fn theorem_main(cfg: &VerifyConfig, obs: &mut Observations) -> Result<Collector> {
    let mut grid = Grid::default();
    let mut plan = Vec::new();
    let mut pairs = BTreeSet::new();
    for n in cfg.n_min.max(3)..=cfg.n_max {
        let mut pts = Vec::new();
        for &k in cfg.k.iter().filter(|&&k| k <= n) {
            let l = ell(k);
            for &alpha in cfg.alpha.iter().filter(|&&a| a == 0 || a + 2 <= l) {
                for &beta in cfg.beta.iter().filter(|&&b| b >= 2 && b + alpha <= l) {
                    for &s in &cfg.s {
                        pairs.insert((k, alpha));
                        let c = grid.add(&[("n", n), ("k", k), ("alpha", alpha), ("beta", beta), ("s", s)]);
                        pts.push((TheoremPoint { k, alpha, beta, s }, c));
                    }
                }
            }
        }
        plan.push((n, pts));
    }
    let mut fams: HashMap<(usize, usize), Vec<KFamilyMember>> = HashMap::new();
    for &(k, alpha) in &pairs {
        fams.insert((k, alpha), checks::k_family(k, alpha, cfg.n_max.max(k + 1))?);
    }
    obs.insert(
        "forbidden_family_sizes".into(),
        json!(fams
            .iter()
            .map(|(&(k, a), v)| (format!("k={k} alpha={a}"), v.len()))
            .collect::<BTreeMap<_, _>>()),
    );
    let mut col = Collector::new(grid.cells);
    for (n, pts) in plan {
        if pts.is_empty() {
            continue;
        }
        let graphs = enumerate_two_connected(n, &options(cfg))?;
        sweep(&mut col, &graphs, |g| {
            let circ = circumference_len(g);
            let tally = clique_tally(g);
            let mut saturated: HashMap<(usize, usize), bool> = HashMap::new();
            let mut out = Vec::new();
            for (pt, c) in &pts {
                let fam = &fams[&(pt.k, pt.alpha)];
                let sat = || {
                    *saturated
                        .entry((pt.k, pt.alpha))
                        .or_insert_with(|| checks::is_saturated(g, pt.k, fam))
                };
                out.push((*c, checks::clique_disjunction(g, pt, circ, &tally, fam, sat)?));
            }
            Ok(out)
        })?;
    }
    Ok(col)
}

const EDGES: usize = 1;
const NON_EDGES: usize = 2;
const CROSS: usize = 3;
const SUPERGRAPHS: usize = 4;
const HAM_EDGE: usize = 5;
const LONG_PATH: usize = 6;
const HAM_ADDED: usize = 7;

fn prop_legend() -> Value {
    json!({
        "check=1": "cycles through member edges",
        "check=2": "cycles through added pairs inside A, B and D",
        "check=3": "cycles through added pairs between C and the rest",
        "check=4": "star forest outside A, B and C in random supergraphs",
        "check=5": "Hamilton c1-c2 paths through each edge",
        "check=6": "near-spanning paths from each vertex to {c1, c2}",
        "check=7": "Hamilton c1-c2 paths through each added pair",
    })
}

struct MemberItem {
    k: usize,
    m: usize,
    r: usize,
    index: usize,
    desc: FamilyDescriptor,
    graph: Graph,
    cells: [usize; 7],
}

fn prop_paths(cfg: &VerifyConfig, obs: &mut Observations) -> Result<Collector> {
    let mut grid = Grid::default();
    let mut items = Vec::new();
    for &k in &cfg.k {
        let l = ell(k);
        for m in k..=k + cfg.m_extra {
            for &r in cfg.r.iter().filter(|&&r| r >= 1 && r + 2 <= l) {
                let mut cells = [0; 7];
                for (i, c) in cells.iter_mut().enumerate() {
                    *c = grid.add(&[("k", k), ("m", m), ("r", r), ("check", i + 1)]);
                }
                for (index, (desc, graph)) in enumerate_family_layouts(m, k, r)?.into_iter().enumerate() {
                    items.push(MemberItem {
                        k,
                        m,
                        r,
                        index,
                        desc,
                        graph,
                        cells,
                    });
                }
            }
        }
    }
    let mut plan = Vec::new();
    for n in cfg.n_min.max(6)..=cfg.n_max {
        let cells = [
            grid.add(&[("n", n), ("check", HAM_EDGE)]),
            grid.add(&[("n", n), ("check", LONG_PATH)]),
            grid.add(&[("n", n), ("check", HAM_ADDED)]),
        ];
        plan.push((n, cells));
    }
    obs.insert("legend".into(), prop_legend());
    obs.insert("labeled_members".into(), json!(items.len()));
    let mut col = Collector::new(grid.cells);
    for units in par::map(&items, |it| member_units(cfg, it)) {
        for (c, u) in units? {
            col.absorb(c, u);
        }
    }
    col.examined += items.len() as u64;
    for (n, cells) in plan {
        let base = params(&[("n", n as i64)]);
        sweep(&mut col, &near_complete_graphs(n), |g| {
            near_complete_units(g, 0, 1, cells, &base)
        })?;
    }
    Ok(col)
}

/// Every graph on `n` vertices where `0` and `1` are non-adjacent and each
/// other vertex misses exactly one vertex, connected ones only. Labeled, so
/// isomorphic copies may repeat.
fn near_complete_graphs(n: usize) -> Vec<Graph> {
    fn go(v: usize, n: usize, miss: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        if v == n {
            out.push(miss.iter().map(|m| m.unwrap_or(usize::MAX)).collect());
            return;
        }
        if miss[v].is_some() {
            go(v + 1, n, miss, out);
            return;
        }
        for target in 0..n {
            let free = target < 2 || (target > v && miss[target].is_none());
            if target == v || !free {
                continue;
            }
            miss[v] = Some(target);
            if target >= 2 {
                miss[target] = Some(v);
            }
            go(v + 1, n, miss, out);
            miss[v] = None;
            if target >= 2 {
                miss[target] = None;
            }
        }
    }
    let mut assignments = Vec::new();
    let mut miss = vec![None; n];
    miss[0] = Some(1);
    miss[1] = Some(0);
    go(2, n, &mut miss, &mut assignments);
    let mut out = Vec::new();
    for a in assignments {
        let mut edges = Vec::new();
        for (u, &miss_u) in a.iter().enumerate().skip(2) {
            for v in 0..n {
                if v != u && miss_u != v && (v < 2 || v > u) {
                    edges.push((u.min(v), u.max(v)));
                }
            }
        }
        if let Ok(g) = Graph::from_edges(n, &edges) {
            if is_connected(&g) {
                out.push(g);
            }
        }
    }
    out
}

fn near_complete_units(g: &Graph, c1: usize, c2: usize, cells: [usize; 3], base: &Params) -> Result<Units> {
    let n = g.n();
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        out.push((cells[0], checks::hamilton_unit(g, c1, c2, a, b, base.clone())?));
    }
    for v in (0..n).filter(|&v| v != c1 && v != c2) {
        out.push((cells[1], checks::path_from_vertex(g, v, c1, c2, base.clone())?));
    }
    let degs = [g.degree(c1), g.degree(c2)];
    let exception = degs.contains(&1) && degs.contains(&(n - 3));
    for (a, b) in g.non_edges() {
        if (a, b) == (c1.min(c2), c1.max(c2)) {
            continue;
        }
        let h = g.with_edge(a, b);
        let unit = checks::hamilton_unit(&h, c1, c2, a, b, base.clone())?;
        if exception {
            let tag = if unit.is_fail() {
                "exception-fails"
            } else {
                "exception-holds"
            };
            out.push((cells[2], Unit::skip().tag(tag)));
        } else {
            out.push((cells[2], unit));
        }
    }
    Ok(out)
}

fn member_units(cfg: &VerifyConfig, it: &MemberItem) -> Result<Units> {
    let MemberItem {
        k,
        m,
        r,
        index,
        desc,
        graph: g,
        cells,
    } = it;
    let (k, r) = (*k, *r);
    let lab = |s: &str| desc.labels.get(s).copied();
    let set = |vs: &[usize]| VertexSet::from_slice(vs);
    let (a_set, b_set, c_set, d_set) = (set(&desc.a), set(&desc.b), set(&desc.c), set(&desc.d));
    let base = params(&[
        ("k", k as i64),
        ("m", *m as i64),
        ("r", r as i64),
        ("member", *index as i64),
    ]);
    let norm = |a: usize, b: usize| (a.min(b), a.max(b));

    let mut special: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (x, y) in [
        ("x1", "x2"),
        ("z1", "z2"),
        ("z1'", "z2'"),
        ("v", "v1"),
        ("v", "v2"),
        ("y1", "y2"),
    ] {
        if let (Some(a), Some(b)) = (lab(x), lab(y)) {
            special.insert(norm(a, b));
        }
    }
    let u1 = lab("u1");
    let y1 = lab("y1");
    for c in c_set {
        if let Some(u) = u1 {
            special.insert(norm(u, c));
        }
        if let (Some(y), true) = (y1, r >= 2) {
            special.insert(norm(y, c));
        }
    }

    let mut out = Vec::new();
    for (a, b) in g.edges() {
        let is_special = special.contains(&(a, b));
        let need = if is_special { k - 2 } else { k - 1 };
        let mut unit = checks::cycle_through_pair(g, a, b, need, base.clone())?;
        if unit.is_fail() {
            // Edges into the C-neighbour of y or of a shared z end that the
            // special list leaves out.
            let into =
                |c: Option<usize>| c.is_some_and(|c| (a == c && a_set.contains(b)) || (b == c && a_set.contains(a)));
            if into(lab("y2")) {
                unit = unit.tag("unlisted:A-y2");
            } else if lab("z2") == lab("z2'") && into(lab("z2")) {
                unit = unit.tag("unlisted:A-z2");
            }
        }
        if is_special && !unit.is_fail() {
            unit = unit.tag("special");
            if !crate::algorithms::cycle_through_edge_at_least(g, a, b, k - 1)? {
                unit = unit.tag("special-exact");
            }
        }
        out.push((cells[EDGES - 1], unit));
    }

    let abd = a_set.union(b_set).union(d_set);
    let with = |extra: Option<usize>| extra.map_or(a_set, |x| a_set.union(VertexSet::singleton(x)));
    for (a, b) in g.non_edges() {
        let pair = set(&[a, b]);
        let h = g.with_edge(a, b);
        if pair.is_subset(abd) {
            let lower = pair.is_subset(a_set)
                || lab("x").is_some() && pair.is_subset(with(lab("x")))
                || lab("y").is_some() && pair.is_subset(with(lab("y")))
                || u1.is_some_and(|u| pair.contains(u))
                || (r >= 2 && y1.is_some_and(|y| pair.contains(y)));
            let need = if lower { k - 1 } else { k };
            out.push((
                cells[NON_EDGES - 1],
                checks::cycle_through_pair(&h, a, b, need, base.clone())?,
            ));
        } else if pair.intersection(c_set).len() == 1 && pair.intersection(abd).len() == 1 {
            let to_a = pair.intersection(a_set).len() == 1;
            let need = if to_a && !u1.is_some_and(|u| pair.contains(u)) {
                k - 1
            } else {
                k - 2
            };
            out.push((
                cells[CROSS - 1],
                checks::cycle_through_pair(&h, a, b, need, base.clone())?,
            ));
        }
    }

    let seed =
        cfg.seed ^ (((k * 64 + *m) * 64 + r) as u64 * 1_000_003 + *index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let removed = a_set.union(b_set).union(c_set);
    for _ in 0..cfg.trials {
        let mut h = g.clone();
        let mut pool: Vec<usize> = c_set.union(d_set).to_vec();
        for _ in 0..rng.gen_range(1..=3) {
            let size = rng.gen_range(2..=3.min(pool.len()));
            let nbrs: Vec<usize> = pool.choose_multiple(&mut rng, size).copied().collect();
            h = h.with_vertex(set(&nbrs))?;
            pool.push(h.n() - 1);
        }
        out.push((
            cells[SUPERGRAPHS - 1],
            checks::star_forest_outside(&h, k, removed, base.clone())?,
        ));
    }

    if desc.ftype == FamilyType::II && desc.a.len() == r + 1 {
        let path = &desc.cd_paths[0];
        let (c1, c2) = (path[0], path[path.len() - 1]);
        let keep = a_set.union(set(&[c1, c2]));
        let (sub, map) = crate::graph::induced_subgraph(g, keep)?;
        let pos = |v: usize| map.iter().position(|&x| x == v).unwrap_or(usize::MAX);
        let (s1, s2) = (pos(c1), pos(c2));
        if checks::near_complete_shape(&sub, s1, s2) {
            let cells3 = [cells[HAM_EDGE - 1], cells[LONG_PATH - 1], cells[HAM_ADDED - 1]];
            out.extend(near_complete_units(&sub, s1, s2, cells3, &base)?);
        } else {
            out.push((cells[HAM_EDGE - 1], Unit::skip().tag("skip:shape")));
        }
    }
    Ok(out)
}

fn lemma_counts(cfg: &VerifyConfig, obs: &mut Observations) -> Result<Collector> {
    let mut grid = Grid::default();
    let mut chain_cells = Vec::new();
    let mut g_cells = Vec::new();
    let mut spot_cells = Vec::new();
    for &k in &cfg.k {
        chain_cells.push((k, grid.add(&[("k", k), ("check", 1)])));
        if k % 2 == 0 && k >= 10 {
            g_cells.push((k, grid.add(&[("k", k), ("check", 2)])));
        }
        spot_cells.push((k, grid.add(&[("k", k), ("check", 3)])));
    }
    obs.insert(
        "legend".into(),
        json!({
            "check=1": "f_s(n,k,r) <= h_s(n,k,t) for l-r+1 <= t <= l",
            "check=2": "g_s(n,k,3) <= h_s(n,k,t) for 4 <= t <= l, recorded only",
            "check=3": "member supergraphs with vertices joined to all of C",
        }),
    );
    let mut col = Collector::new(grid.cells);

    for &(k, cell) in &chain_cells {
        let l = ell(k);
        for n in k..=k + cfg.n_span {
            for r in 1..=l.saturating_sub(2) {
                for &s in cfg.s.iter().filter(|&&s| s <= l) {
                    for t in l - r + 1..=l {
                        col.absorb(cell, checks::formula_chain(n, k, r, s, t)?);
                    }
                }
            }
        }
    }

    let mut findings = Vec::new();
    for &(k, cell) in &g_cells {
        let l = ell(k);
        for n in k..=k + cfg.n_span {
            for &s in cfg.s.iter().filter(|&&s| s <= l) {
                for t in 4..=l {
                    let (gv, hv) = checks::g_chain(n, k, s, t)?;
                    let mut u = Unit::pass();
                    if gv > hv {
                        u = u.tag("finding");
                        if findings.len() < MAX_FINDINGS {
                            findings.push(format!("n={n} k={k} s={s} t={t}: g={gv} > h={hv}"));
                        }
                    }
                    col.absorb(cell, u);
                }
            }
        }
    }
    obs.insert("g_chain_findings".into(), json!(findings));

    let mut jobs: Vec<SpotJob> = Vec::new();
    for &(k, cell) in &spot_cells {
        let l = ell(k);
        for m in k..=k + 1 {
            for r in 1..=l.saturating_sub(2) {
                let mut classes: BTreeMap<String, (Vec<SpecialTag>, Graph, VertexSet)> = BTreeMap::new();
                for (d, g) in enumerate_family_layouts(m, k, r)? {
                    let entry = classes
                        .entry(canonical_form(&g))
                        .or_insert_with(|| (Vec::new(), g.clone(), VertexSet::from_slice(&d.c)));
                    if let Some(t) = d.special {
                        if !entry.0.contains(&t) {
                            entry.0.push(t);
                        }
                    }
                }
                for (_, (tags, g, c)) in classes {
                    jobs.push((cell, k, m, r, tags, g, c));
                }
            }
        }
    }
    col.examined += jobs.len() as u64;
    let results = par::map(&jobs, |(cell, k, m, r, tags, g, c)| -> Result<Units> {
        let mut out = Vec::new();
        let mut h = g.clone();
        for t in 0..=cfg.attach_max {
            if t > 0 {
                h = h.with_vertex(*c)?;
            }
            let n = h.n();
            let ok = crate::graph::is_two_connected(&h) && !crate::algorithms::has_cycle_at_least(&h, *k);
            let tally = if ok { clique_tally(&h) } else { Vec::new() };
            for &s in &cfg.s {
                let bound = checks::member_count_bound(n, *k, *m, *r, s, tags)?;
                let unit = if ok {
                    checks::supergraph_count_with(&h, *k, s, bound, &tally)
                } else {
                    Unit::skip()
                };
                out.push((*cell, unit));
            }
        }
        Ok(out)
    });
    for units in results {
        for (c, u) in units? {
            col.absorb(c, u);
        }
    }
    Ok(col)
}

fn fan(cfg: &VerifyConfig) -> Result<Collector> {
    let mut grid = Grid::default();
    let mut plan = Vec::new();
    for n in cfg.n_min.max(3)..=cfg.n_max {
        let pts: Vec<(usize, usize)> = cfg.r.iter().map(|&r| (r, grid.add(&[("n", n), ("r", r)]))).collect();
        plan.push((n, pts));
    }
    let mut col = Collector::new(grid.cells);
    for (n, pts) in plan {
        let graphs = enumerate_two_connected(n, &options(cfg))?;
        sweep(&mut col, &graphs, |g| {
            let paths = checks::fan_edge_paths(g);
            pts.iter()
                .map(|&(r, c)| Ok((c, checks::fan_unit(g, r, &paths)?)))
                .collect()
        })?;
    }
    Ok(col)
}

fn conjecture(cfg: &VerifyConfig) -> Result<Collector> {
    let mut grid = Grid::default();
    let mut plan = Vec::new();
    for n in cfg.n_min.max(3)..=cfg.n_max {
        let mut pts = Vec::new();
        for &r in &cfg.r {
            for &s in &cfg.s {
                let bound = conjecture_bound(n as i64, r as i64, s as i64)?;
                pts.push((r, s, bound, grid.add(&[("n", n), ("r", r), ("s", s)])));
            }
        }
        plan.push((n, pts));
    }
    let mut col = Collector::new(grid.cells);
    for (n, pts) in plan {
        let graphs = enumerate_two_connected(n, &options(cfg))?;
        sweep(&mut col, &graphs, |g| {
            let tally = clique_tally(g);
            let needed = pts.iter().any(|&(_, s, bound, _)| tally_at(&tally, s) > bound);
            let cycles = if needed { checks::edge_cycles(g)? } else { Vec::new() };
            pts.iter()
                .map(|&(r, s, _, c)| Ok((c, checks::edge_cycle_search(g, r, s, &tally, &cycles)?)))
                .collect()
        })?;
    }
    Ok(col)
}

fn classify(cfg: &VerifyConfig, obs: &mut Observations) -> Result<Collector> {
    let mut grid = Grid::default();
    let mut plan = Vec::new();
    for n in cfg.n_min.max(3)..=cfg.n_max {
        let mut pts = Vec::new();
        for &k in cfg.k.iter().filter(|&&k| k <= n) {
            let s_max = 2.max(ell(k) - 1);
            for &s in cfg.s.iter().filter(|&&s| s <= s_max) {
                pts.push((k, s, grid.add(&[("n", n), ("k", k), ("s", s)])));
            }
        }
        plan.push((n, pts));
    }
    obs.insert(
        "legend".into(),
        json!({
            "a": "s = 3 and k in {9, 10}",
            "b": "k odd, k != 7, subgraph of H(n,k,l)",
            "c": "k even or k = 7, star forest after deleting at most l vertices",
            "none": "no exception applies; expected at small n",
        }),
    );
    let mut col = Collector::new(grid.cells);
    for (n, pts) in plan {
        if pts.is_empty() {
            continue;
        }
        let graphs = enumerate_two_connected(n, &options(cfg))?;
        sweep(&mut col, &graphs, |g| {
            let circ = circumference_len(g);
            let tally = clique_tally(g);
            pts.iter()
                .map(|&(k, s, c)| Ok((c, checks::classify(g, k, s, circ, &tally)?)))
                .collect()
        })?;
    }
    Ok(col)
}

fn corollary(cfg: &VerifyConfig, obs: &mut Observations) -> Result<Collector> {
    let mut grid = Grid::default();
    let mut plan = Vec::new();
    for n in cfg.n_min.max(3)..=cfg.n_max {
        let mut pts = Vec::new();
        for &k in cfg.k.iter().filter(|&&k| k <= n) {
            for &delta in cfg.delta.iter().filter(|&&d| d >= 2 && d + 2 <= ell(k)) {
                for &s in &cfg.s {
                    let c = grid.add(&[("n", n), ("k", k), ("delta", delta), ("s", s)]);
                    pts.push((CorollaryPoint { k, delta, s }, c));
                }
            }
        }
        plan.push((n, pts));
    }
    let cone_cells: Vec<(usize, usize)> = (2..=cfg.cone_n_max)
        .map(|n| (n, grid.add(&[("n", n), ("cone", 1)])))
        .collect();
    let mut fams: HashMap<usize, Vec<KFamilyMember>> = HashMap::new();
    for &k in &cfg.k {
        fams.insert(k, checks::trichotomy_members(k, cfg.n_max)?);
    }
    obs.insert(
        "member_counts".into(),
        json!(fams
            .iter()
            .map(|(k, v)| (format!("k={k}"), v.len()))
            .collect::<BTreeMap<_, _>>()),
    );
    let mut col = Collector::new(grid.cells);
    for (n, pts) in plan {
        if pts.is_empty() {
            continue;
        }
        let graphs = enumerate_two_connected(n, &options(cfg))?;
        sweep(&mut col, &graphs, |g| {
            let circ = circumference_len(g);
            let tally = clique_tally(g);
            pts.iter()
                .map(|(pt, c)| Ok((*c, checks::trichotomy(g, pt, circ, &tally, &fams[&pt.k])?)))
                .collect()
        })?;
    }
    for (n, c) in cone_cells {
        let graphs = enumerate_connected(n, &options(cfg))?;
        sweep(&mut col, &graphs, |g| Ok(vec![(c, checks::cone_unit(g)?)]))?;
    }
    Ok(col)
}
