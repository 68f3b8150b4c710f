//! Single checks on one graph and one parameter point. Sweeps call these
//! with precomputed values; [`replay`] recomputes everything from a record.

use super::report::{params, CounterexampleRecord, Outcome, Params, Unit};
use crate::algorithms::{
    all_longest_s_paths, circumference_len, clique_tally, contains_subgraph, crossing_pairs,
    cycle_through_edge_at_least, disintegration, hamilton_path_between_sets, has_cycle_at_least, is_star_forest,
    longest_cycle_through_edge, longest_path_between, longest_s_path, star_forest_after_deletion,
};
use crate::error::{Error, Result};
use crate::families::{
    build_f_ell, build_h, build_special, build_z, enumerate_family, enumerate_k_family, find_member, KFamilyMember,
    KFamilySpec, SpecialTag,
};
use crate::formulas::{bound_pair_max, conjecture_bound, eg_bound, f_s, fan_bound, g_s, h_s, Rational};
use crate::graph::{
    components, graph6_decode, graph6_encode, induced_subgraph, is_connected, is_two_connected, Graph, VertexSet,
};

pub const EDGE_BOUND: &str = "edge-bound";
pub const CLIQUE_BOUND: &str = "clique-bound";
pub const FAMILY_EMBEDDING: &str = "family-embedding";
pub const CROSSING_WINDOW: &str = "crossing-window";
pub const CLIQUE_DISJUNCTION: &str = "clique-disjunction";
pub const CYCLE_THROUGH_PAIR: &str = "cycle-through-pair";
pub const STAR_FOREST_OUTSIDE: &str = "star-forest-outside";
pub const HAMILTON_THROUGH_EDGE: &str = "hamilton-through-edge";
pub const PATH_FROM_VERTEX: &str = "path-from-vertex";
pub const FORMULA_CHAIN: &str = "formula-chain";
pub const SUPERGRAPH_COUNT: &str = "supergraph-count";
pub const FAN_BOUND: &str = "fan-bound";
pub const FAN_EQUALITY: &str = "fan-equality";
pub const CONE: &str = "cone";
pub const TRICHOTOMY: &str = "trichotomy";
pub const EDGE_CYCLE_SEARCH: &str = "edge-cycle-search";

pub(crate) fn record(
    claim: &str,
    g: Option<&Graph>,
    p: Params,
    observed: impl ToString,
    expected: impl ToString,
) -> CounterexampleRecord {
    CounterexampleRecord {
        graph6: g.map(graph6_encode).unwrap_or_default(),
        params: p,
        observed: observed.to_string(),
        expected: expected.to_string(),
        claim: claim.to_string(),
    }
}

pub(crate) fn ell(k: usize) -> usize {
    (k - 1) / 2
}

fn h(n: usize, k: usize, a: usize, s: usize) -> Result<u128> {
    h_s(n as i64, k as i64, a as i64, s as i64)
}

/// No cycle of length `k` or more caps the edge count.
pub(crate) fn edge_bound(g: &Graph, k: usize, circ: usize) -> Result<Unit> {
    if circ >= k {
        return Ok(Unit::skip());
    }
    let n = g.n();
    let bound = eg_bound(k as i64, n as i64)?;
    let e = Rational::from_integer(g.edge_count() as i128);
    Ok(if e < bound {
        Unit::pass()
    } else if e == bound {
        Unit::pass().tag("equality")
    } else {
        Unit::fail(record(
            EDGE_BOUND,
            Some(g),
            params(&[("n", n as i64), ("k", k as i64)]),
            e,
            format!("<= {bound}"),
        ))
    })
}

/// 2-connected, no cycle of length `k` or more caps the `s`-clique count.
pub(crate) fn clique_bound(g: &Graph, k: usize, s: usize, circ: usize, tally: &[u128]) -> Result<Unit> {
    if circ >= k {
        return Ok(Unit::skip());
    }
    let n = g.n();
    let bound = bound_pair_max(n as i64, k as i64, 2, ell(k) as i64, s as i64)?;
    let ns = tally.get(s).copied().unwrap_or(0);
    Ok(if ns < bound {
        Unit::pass()
    } else if ns == bound {
        Unit::pass().tag("equality")
    } else {
        let p = params(&[("n", n as i64), ("k", k as i64), ("s", s as i64)]);
        Unit::fail(record(CLIQUE_BOUND, Some(g), p, ns, format!("<= {bound}")))
    })
}

/// The core and the longest path with both ends in it, when the lemma's
/// hypotheses hold. `Err(tag)` names the failed hypothesis.
pub(crate) fn lemma_setup(g: &Graph, k: usize, circ: usize) -> std::result::Result<(VertexSet, usize), &'static str> {
    if circ >= k {
        return Err("skip:circumference");
    }
    let core = disintegration(g, ell(k) - 1);
    if core.is_empty() {
        return Err("skip:empty-core");
    }
    let m = longest_s_path(g, core).map_or(0, |(m, _)| m);
    if m < k {
        return Err("skip:short-path");
    }
    Ok((core, m))
}

/// Members of `F(m,k,r)` over `1 <= r <= l`, each tagged with its `r`.
pub(crate) fn lemma_members(m: usize, k: usize) -> Result<Vec<(usize, Graph)>> {
    let mut out = Vec::new();
    for r in 1..=ell(k) {
        for (_, g) in enumerate_family(m, k, r)? {
            out.push((r, g));
        }
    }
    Ok(out)
}

pub(crate) fn family_embedding(
    g: &Graph,
    k: usize,
    circ: usize,
    members: impl Fn(usize) -> Result<Vec<(usize, Graph)>>,
) -> Result<Unit> {
    let (_, m) = match lemma_setup(g, k, circ) {
        Ok(x) => x,
        Err(tag) => return Ok(Unit::skip().tag(tag)),
    };
    let fam = members(m)?;
    if let Some(&(r, _)) = fam.iter().find(|(_, f)| contains_subgraph(g, f).is_some()) {
        return Ok(Unit::pass().tag(format!("r={r}")));
    }
    let p = params(&[("n", g.n() as i64), ("k", k as i64), ("m", m as i64)]);
    Ok(Unit::fail(record(
        FAMILY_EMBEDDING,
        Some(g),
        p,
        format!("none of {} members embeds", fam.len()),
        "a member of F(m,k,r) for some r <= l",
    )))
}

/// Minimal crossing pairs on longest core paths satisfy
/// `m - k < j - i - 1 <= m - 2l`.
pub(crate) fn crossing_window(g: &Graph, k: usize, circ: usize, cap: usize) -> Result<Unit> {
    let (core, m) = match lemma_setup(g, k, circ) {
        Ok(x) => x,
        Err(tag) => return Ok(Unit::skip().tag(tag)),
    };
    let l = ell(k);
    let (_, paths) = all_longest_s_paths(g, core, cap);
    let mut seen = 0;
    for p in &paths {
        for pair in crossing_pairs(g, p)?.minimal_pairs() {
            seen += 1;
            let len = pair.length();
            if !(len + k > m && len + 2 * l <= m) {
                let prm = params(&[("n", g.n() as i64), ("k", k as i64), ("cap", cap as i64)]);
                return Ok(Unit::fail(record(
                    CROSSING_WINDOW,
                    Some(g),
                    prm,
                    format!("pair ({},{}) on {:?} has j-i-1 = {len}", pair.i, pair.j, p.vertices()),
                    format!("{} < j-i-1 <= {}", m as i64 - k as i64, m as i64 - 2 * l as i64),
                )));
            }
        }
    }
    Ok(if seen == 0 {
        Unit::pass().tag("no-minimal-pair")
    } else {
        Unit::pass()
    })
}

pub(crate) fn k_family(k: usize, alpha: usize, m_max: usize) -> Result<Vec<KFamilyMember>> {
    enumerate_k_family(&KFamilySpec {
        k,
        alpha,
        m_max: Some(m_max),
    })
}

/// Every non-edge closes a long cycle or a forbidden member.
pub(crate) fn is_saturated(g: &Graph, k: usize, fam: &[KFamilyMember]) -> bool {
    g.non_edges().into_iter().all(|(a, b)| {
        let h = g.with_edge(a, b);
        has_cycle_at_least(&h, k) || find_member(&h, fam).is_some()
    })
}

pub(crate) struct TheoremPoint {
    pub k: usize,
    pub alpha: usize,
    pub beta: usize,
    pub s: usize,
}

pub(crate) fn clique_disjunction(
    g: &Graph,
    pt: &TheoremPoint,
    circ: usize,
    tally: &[u128],
    fam: &[KFamilyMember],
    saturated: impl FnOnce() -> bool,
) -> Result<Unit> {
    let TheoremPoint { k, alpha, beta, s } = *pt;
    let n = g.n();
    let l = ell(k);
    if circ >= k {
        return Ok(Unit::skip().tag("skip:circumference"));
    }
    let bound = bound_pair_max(n as i64, k as i64, (l - alpha) as i64, beta as i64, s as i64)?;
    let ns = tally.get(s).copied().unwrap_or(0);
    if ns <= bound {
        return Ok(Unit::skip().tag("skip:count"));
    }
    if find_member(g, fam).is_some() {
        return Ok(Unit::skip().tag("skip:contains-member"));
    }
    if !saturated() {
        return Ok(Unit::skip().tag("skip:not-maximal"));
    }
    let omega = tally.iter().rposition(|&c| c > 0).unwrap_or(0);
    let core = disintegration(g, l - 1).len();
    if omega + beta > k {
        Ok(Unit::pass().tag("clique-number"))
    } else if core + l < k + alpha {
        Ok(Unit::pass().tag("small-core"))
    } else {
        let p = params(&[
            ("n", n as i64),
            ("k", k as i64),
            ("alpha", alpha as i64),
            ("beta", beta as i64),
            ("s", s as i64),
        ]);
        Ok(Unit::fail(record(
            CLIQUE_DISJUNCTION,
            Some(g),
            p,
            format!("omega={omega} core={core}"),
            format!("omega > {} or core < {}", k - beta, k + alpha - l),
        )))
    }
}

/// Longest cycle through `ab` in `g` (which already contains `ab`) is at
/// least `need`.
pub(crate) fn cycle_through_pair(g: &Graph, a: usize, b: usize, need: usize, base: Params) -> Result<Unit> {
    if cycle_through_edge_at_least(g, a, b, need)? {
        return Ok(Unit::pass());
    }
    let got = longest_cycle_through_edge(g, a, b)?.map_or(0, |(l, _)| l);
    let mut p = base;
    p.insert("a".into(), a as i64);
    p.insert("b".into(), b as i64);
    p.insert("need".into(), need as i64);
    Ok(Unit::fail(record(
        CYCLE_THROUGH_PAIR,
        Some(g),
        p,
        got,
        format!(">= {need}"),
    )))
}

/// `g` minus `removed` is a star forest, given 2-connectivity and no cycle of
/// length `k` or more.
pub(crate) fn star_forest_outside(g: &Graph, k: usize, removed: VertexSet, base: Params) -> Result<Unit> {
    if !is_two_connected(g) || has_cycle_at_least(g, k) {
        return Ok(Unit::skip());
    }
    let rest = g.vertices().difference(removed);
    let ok = rest.is_empty() || is_star_forest(&induced_subgraph(g, rest)?.0);
    if ok {
        return Ok(Unit::pass());
    }
    let mut p = base;
    p.insert("k".into(), k as i64);
    p.insert("removed".into(), removed.bits() as i64);
    Ok(Unit::fail(record(
        STAR_FOREST_OUTSIDE,
        Some(g),
        p,
        "not a star forest",
        "a star forest",
    )))
}

/// Hamilton `c1`-`c2` path using the edge `ab`, found by subdividing `ab`.
pub(crate) fn hamilton_through_edge(g: &Graph, c1: usize, c2: usize, a: usize, b: usize) -> Result<bool> {
    if c1 == c2 || !g.has_edge(a, b) {
        return Ok(false);
    }
    let sub = g.without_edge(a, b).with_vertex(VertexSet::from_slice(&[a, b]))?;
    Ok(hamilton_path_between_sets(&sub, VertexSet::singleton(c1), VertexSet::singleton(c2)).is_some())
}

pub(crate) fn hamilton_unit(g: &Graph, c1: usize, c2: usize, a: usize, b: usize, base: Params) -> Result<Unit> {
    if hamilton_through_edge(g, c1, c2, a, b)? {
        return Ok(Unit::pass());
    }
    let mut p = base;
    for (key, v) in [("c1", c1), ("c2", c2), ("a", a), ("b", b)] {
        p.insert(key.into(), v as i64);
    }
    Ok(Unit::fail(record(
        HAMILTON_THROUGH_EDGE,
        Some(g),
        p,
        "no such path",
        "a Hamilton c1-c2 path through ab",
    )))
}

/// A path on at least `n - 1` vertices from `v` to `c1` or `c2`.
pub(crate) fn path_from_vertex(g: &Graph, v: usize, c1: usize, c2: usize, base: Params) -> Result<Unit> {
    let best = [c1, c2]
        .iter()
        .filter_map(|&c| longest_path_between(g, v, c))
        .map(|p| p.len())
        .max()
        .unwrap_or(0);
    if best + 1 >= g.n() {
        return Ok(Unit::pass());
    }
    let mut p = base;
    for (key, x) in [("v", v), ("c1", c1), ("c2", c2)] {
        p.insert(key.into(), x as i64);
    }
    Ok(Unit::fail(record(
        PATH_FROM_VERTEX,
        Some(g),
        p,
        best,
        format!(">= {}", g.n() - 1),
    )))
}

/// Whether `g` fits the near-complete shape: `c1c2` is a non-edge and every
/// other vertex has degree `n - 2`.
pub(crate) fn near_complete_shape(g: &Graph, c1: usize, c2: usize) -> bool {
    let n = g.n();
    n >= 6
        && is_connected(g)
        && !g.has_edge(c1, c2)
        && (0..n).filter(|&v| v != c1 && v != c2).all(|v| g.degree(v) == n - 2)
}

pub(crate) fn formula_chain(n: usize, k: usize, r: usize, s: usize, t: usize) -> Result<Unit> {
    let f = f_s(n as i64, k as i64, r as i64, s as i64)?;
    let hv = h(n, k, t, s)?;
    if f <= hv {
        return Ok(Unit::pass());
    }
    let p = params(&[
        ("n", n as i64),
        ("k", k as i64),
        ("r", r as i64),
        ("s", s as i64),
        ("t", t as i64),
    ]);
    Ok(Unit::fail(record(FORMULA_CHAIN, None, p, f, format!("<= {hv}"))))
}

/// `g_s(n,k,3) <= h_s(n,k,t)`; returns both sides.
pub(crate) fn g_chain(n: usize, k: usize, s: usize, t: usize) -> Result<(u128, u128)> {
    Ok((g_s(n as i64, k as i64, s as i64)?, h(n, k, t, s)?))
}

/// Which count bound applies to a member, given the tags of its
/// isomorphism class.
pub(crate) fn member_count_bound(
    n: usize,
    k: usize,
    m: usize,
    r: usize,
    s: usize,
    tags: &[SpecialTag],
) -> Result<u128> {
    let l = ell(k);
    let min_h = |from: usize| -> Result<u128> {
        let mut best = u128::MAX;
        for t in from..=l {
            best = best.min(h(n, k, t, s)?);
        }
        Ok(best)
    };
    let mut best = u128::MAX;
    let mut named = false;
    for &tag in tags {
        let b = match tag {
            SpecialTag::F2 if m == k => Some(min_h((l - r + 2).min(l))?),
            SpecialTag::F5 if m == k => Some(h(n, k, l, s)?),
            SpecialTag::F0 | SpecialTag::F4 if r + 2 == l => {
                Some(g_s(n as i64, k as i64, s as i64)?.min(if l >= 4 { min_h(4)? } else { u128::MAX }))
            }
            _ => None,
        };
        if let Some(b) = b {
            named = true;
            best = best.min(b);
        }
    }
    if !named {
        best = min_h(l - r + 1)?;
    }
    Ok(best)
}

pub(crate) fn supergraph_count(g: &Graph, k: usize, s: usize, bound: u128) -> Result<Unit> {
    if !is_two_connected(g) || has_cycle_at_least(g, k) {
        return Ok(Unit::skip());
    }
    Ok(supergraph_count_with(g, k, s, bound, &clique_tally(g)))
}

/// [`supergraph_count`] once the hypotheses are known to hold.
pub(crate) fn supergraph_count_with(g: &Graph, k: usize, s: usize, bound: u128, tally: &[u128]) -> Unit {
    let ns = tally.get(s).copied().unwrap_or(0);
    if ns <= bound {
        return Unit::pass();
    }
    let p = params(&[
        ("n", g.n() as i64),
        ("k", k as i64),
        ("s", s as i64),
        ("bound", bound as i64),
    ]);
    Unit::fail(record(SUPERGRAPH_COUNT, Some(g), p, ns, format!("<= {bound}")))
}

/// `G - {a,b}` splits into cliques of `r - 2` vertices each.
pub(crate) fn fan_extremal_shape(g: &Graph, a: usize, b: usize, r: usize) -> Result<bool> {
    let rest = g.vertices().difference(VertexSet::from_slice(&[a, b]));
    if rest.is_empty() {
        return Ok(r == 2);
    }
    let (h, _) = induced_subgraph(g, rest)?;
    Ok(components(&h)
        .into_iter()
        .all(|c| c.len() + 2 == r && c.iter().all(|v| h.neighbors(v).union(VertexSet::singleton(v)) == c)))
}

/// `edge_paths[i]` is the longest `a`-`b` path (in vertices) for the `i`-th
/// edge of `g.edges()`.
pub(crate) fn fan_unit(g: &Graph, r: usize, edge_paths: &[usize]) -> Result<Unit> {
    let edges = g.edges();
    let short: Vec<(usize, usize)> = edges
        .iter()
        .zip(edge_paths)
        .filter(|(_, &l)| l <= r)
        .map(|(&e, _)| e)
        .collect();
    if short.is_empty() {
        return Ok(Unit::skip());
    }
    let n = g.n();
    let bound = fan_bound(r as i64, n as i64)?;
    let e = Rational::from_integer(g.edge_count() as i128);
    let base = params(&[("n", n as i64), ("r", r as i64)]);
    if e > bound {
        return Ok(Unit::fail(record(FAN_BOUND, Some(g), base, e, format!("<= {bound}"))));
    }
    if e < bound {
        return Ok(Unit::pass());
    }
    for &(a, b) in &short {
        if !fan_extremal_shape(g, a, b, r)? {
            let mut p = base;
            p.insert("a".into(), a as i64);
            p.insert("b".into(), b as i64);
            return Ok(Unit::fail(record(
                FAN_EQUALITY,
                Some(g),
                p,
                "equality without the clique split",
                format!("G-{{a,b}} a disjoint union of K_{}", r - 2),
            )));
        }
    }
    Ok(Unit::pass().tag("equality"))
}

pub(crate) fn fan_edge_paths(g: &Graph) -> Vec<usize> {
    g.edges()
        .into_iter()
        .map(|(a, b)| longest_path_between(g, a, b).map_or(2, |p| p.len()))
        .collect()
}

/// The cone over a connected graph is 2-connected and its longest cycle is
/// one more than the longest path of `g`.
pub(crate) fn cone_unit(g: &Graph) -> Result<Unit> {
    if g.n() < 2 || !is_connected(g) {
        return Ok(Unit::skip());
    }
    let longest = longest_s_path(g, g.vertices()).map_or(0, |(m, _)| m);
    let cone = g.cone()?;
    let circ = circumference_len(&cone);
    if is_two_connected(&cone) && circ <= longest + 1 {
        return Ok(Unit::pass());
    }
    Ok(Unit::fail(record(
        CONE,
        Some(g),
        params(&[("n", g.n() as i64)]),
        format!("two_connected={} circumference={circ}", is_two_connected(&cone)),
        format!("two_connected=true circumference<={}", longest + 1),
    )))
}

pub(crate) struct CorollaryPoint {
    pub k: usize,
    pub delta: usize,
    pub s: usize,
}

/// Structures allowed by the trichotomy: forbidden members for `(k, n)`.
pub(crate) fn trichotomy_members(k: usize, n_max: usize) -> Result<Vec<KFamilyMember>> {
    let l = ell(k);
    let even = k.is_multiple_of(2);
    let mut raw: Vec<(String, Graph)> = Vec::new();
    for m in k..=n_max.max(k) {
        for r in [1, l - 1, l] {
            for (_, g) in enumerate_family(m, k, r)? {
                raw.push((format!("F({m},{k},{r})"), g));
            }
        }
        if even && 2 < l {
            for (d, g) in enumerate_family(m, k, 2)? {
                if matches!(d.special, Some(SpecialTag::F2) | Some(SpecialTag::F5)) {
                    raw.push((format!("{}({m},{k},2)", d.special.unwrap_or(SpecialTag::F2)), g));
                }
            }
        }
    }
    if k == 10 {
        raw.push(("F0(10,10,2)".into(), build_special(SpecialTag::F0, 10, 10, 2)?.1));
        raw.push(("F4(11,10,2)".into(), build_special(SpecialTag::F4, 11, 10, 2)?.1));
    }
    if even {
        raw.push((format!("F({l})"), build_f_ell(l)?));
    }
    let mut out: Vec<KFamilyMember> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (name, graph) in raw {
        let canonical = crate::graph::canonical_form(&graph);
        if seen.insert(canonical.clone()) {
            out.push(KFamilyMember {
                item: 'a',
                name,
                canonical,
                graph,
            });
        }
    }
    out.sort_by(|x, y| (x.graph.n(), &x.canonical).cmp(&(y.graph.n(), &y.canonical)));
    Ok(out)
}

pub(crate) fn trichotomy(
    g: &Graph,
    pt: &CorollaryPoint,
    circ: usize,
    tally: &[u128],
    fam: &[KFamilyMember],
) -> Result<Unit> {
    let CorollaryPoint { k, delta, s } = *pt;
    let n = g.n();
    let l = ell(k);
    if g.min_degree() != delta {
        return Ok(Unit::skip().tag("skip:min-degree"));
    }
    if circ >= k {
        return Ok(Unit::skip().tag("skip:circumference"));
    }
    let bound = bound_pair_max(n as i64, k as i64, (l - 1) as i64, (delta + 1) as i64, s as i64)?;
    if tally.get(s).copied().unwrap_or(0) <= bound {
        return Ok(Unit::skip().tag("skip:count"));
    }
    if let Some((m, _)) = find_member(g, fam) {
        return Ok(Unit::pass().tag(format!("a:{}", m.name)));
    }
    if let Ok(z) = build_z(n, k, delta) {
        if contains_subgraph(&z, g).is_some() {
            return Ok(Unit::pass().tag("b"));
        }
    }
    if contains_subgraph(&build_h(n, k, delta)?, g).is_some() {
        return Ok(Unit::pass().tag("c"));
    }
    let p = params(&[
        ("n", n as i64),
        ("k", k as i64),
        ("delta", delta as i64),
        ("s", s as i64),
    ]);
    Ok(Unit::fail(record(
        TRICHOTOMY,
        Some(g),
        p,
        "none of the three structures",
        "member, Z-subgraph or H-subgraph",
    )))
}

/// Buckets for a graph exceeding `h_s(n,k,l-1)`; a skip when it does not.
pub(crate) fn classify(g: &Graph, k: usize, s: usize, circ: usize, tally: &[u128]) -> Result<Unit> {
    let n = g.n();
    let l = ell(k);
    if circ >= k || tally.get(s).copied().unwrap_or(0) <= h(n, k, l - 1, s)? {
        return Ok(Unit::skip());
    }
    let mut u = Unit::pass();
    let mut any = false;
    if s == 3 && (k == 9 || k == 10) {
        u = u.tag("a");
        any = true;
    }
    if k % 2 == 1 && k != 7 && contains_subgraph(&build_h(n, k, l)?, g).is_some() {
        u = u.tag("b");
        any = true;
    }
    if (k.is_multiple_of(2) || k == 7) && star_forest_after_deletion(g, l).is_some() {
        u = u.tag("c");
        any = true;
    }
    Ok(if any { u } else { u.tag("none") })
}

/// Longest cycle through every edge reaches `r` when the count exceeds the
/// threshold. A miss is a search hit, not an internal error.
pub(crate) fn edge_cycle_search(g: &Graph, r: usize, s: usize, tally: &[u128], edge_cycles: &[usize]) -> Result<Unit> {
    let n = g.n();
    if tally.get(s).copied().unwrap_or(0) <= conjecture_bound(n as i64, r as i64, s as i64)? {
        return Ok(Unit::skip());
    }
    let edges = g.edges();
    if let Some((&(a, b), &c)) = edges.iter().zip(edge_cycles).find(|(_, &c)| c < r) {
        let p = params(&[
            ("n", n as i64),
            ("r", r as i64),
            ("s", s as i64),
            ("a", a as i64),
            ("b", b as i64),
        ]);
        return Ok(Unit::fail(record(EDGE_CYCLE_SEARCH, Some(g), p, c, format!(">= {r}"))));
    }
    Ok(Unit::pass())
}

pub(crate) fn edge_cycles(g: &Graph) -> Result<Vec<usize>> {
    g.edges()
        .into_iter()
        .map(|(a, b)| Ok(longest_cycle_through_edge(g, a, b)?.map_or(0, |(l, _)| l)))
        .collect()
}

fn get(p: &Params, key: &str) -> Result<usize> {
    p.get(key)
        .copied()
        .filter(|&v| v >= 0)
        .map(|v| v as usize)
        .ok_or_else(|| Error::InvalidInput(format!("record lacks parameter {key:?}")))
}

/// Re-runs the check named by a record.
pub(crate) fn replay(rec: &CounterexampleRecord) -> Result<Outcome> {
    let p = &rec.params;
    if rec.claim == FORMULA_CHAIN {
        return Ok(formula_chain(get(p, "n")?, get(p, "k")?, get(p, "r")?, get(p, "s")?, get(p, "t")?)?.outcome);
    }
    let g = graph6_decode(&rec.graph6)?;
    let tally = clique_tally(&g);
    let unit = match rec.claim.as_str() {
        EDGE_BOUND => edge_bound(&g, get(p, "k")?, circumference_len(&g))?,
        CLIQUE_BOUND => clique_bound(&g, get(p, "k")?, get(p, "s")?, circumference_len(&g), &tally)?,
        FAMILY_EMBEDDING => {
            let k = get(p, "k")?;
            family_embedding(&g, k, circumference_len(&g), |m| lemma_members(m, k))?
        }
        CROSSING_WINDOW => crossing_window(&g, get(p, "k")?, circumference_len(&g), get(p, "cap")?)?,
        CLIQUE_DISJUNCTION => {
            let pt = TheoremPoint {
                k: get(p, "k")?,
                alpha: get(p, "alpha")?,
                beta: get(p, "beta")?,
                s: get(p, "s")?,
            };
            let fam = k_family(pt.k, pt.alpha, g.n().max(pt.k + 1))?;
            clique_disjunction(&g, &pt, circumference_len(&g), &tally, &fam, || {
                is_saturated(&g, pt.k, &fam)
            })?
        }
        CYCLE_THROUGH_PAIR => cycle_through_pair(&g, get(p, "a")?, get(p, "b")?, get(p, "need")?, Params::new())?,
        STAR_FOREST_OUTSIDE => {
            let removed = VertexSet(p.get("removed").copied().unwrap_or(0) as u64);
            star_forest_outside(&g, get(p, "k")?, removed, Params::new())?
        }
        HAMILTON_THROUGH_EDGE => hamilton_unit(
            &g,
            get(p, "c1")?,
            get(p, "c2")?,
            get(p, "a")?,
            get(p, "b")?,
            Params::new(),
        )?,
        PATH_FROM_VERTEX => path_from_vertex(&g, get(p, "v")?, get(p, "c1")?, get(p, "c2")?, Params::new())?,
        SUPERGRAPH_COUNT => supergraph_count(&g, get(p, "k")?, get(p, "s")?, get(p, "bound")? as u128)?,
        FAN_BOUND | FAN_EQUALITY => fan_unit(&g, get(p, "r")?, &fan_edge_paths(&g))?,
        CONE => cone_unit(&g)?,
        TRICHOTOMY => {
            let pt = CorollaryPoint {
                k: get(p, "k")?,
                delta: get(p, "delta")?,
                s: get(p, "s")?,
            };
            let fam = trichotomy_members(pt.k, g.n())?;
            trichotomy(&g, &pt, circumference_len(&g), &tally, &fam)?
        }
        EDGE_CYCLE_SEARCH => edge_cycle_search(&g, get(p, "r")?, get(p, "s")?, &tally, &edge_cycles(&g)?)?,
        other => return Err(Error::InvalidInput(format!("unknown claim {other:?}"))),
    };
    Ok(unit.outcome)
}
