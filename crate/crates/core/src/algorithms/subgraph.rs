//! Non-induced subgraph containment by backtracking.

use crate::graph::{Bits, Graph};

/// Injective map from pattern vertices to host vertices preserving edges.
pub type Embedding = Vec<usize>;

/// Finds an embedding of `pattern` into `host` as a (not necessarily
/// induced) subgraph. Candidates are filtered by degree and by domination of
/// the sorted neighbor-degree sequences before the search.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let (np, nh) = (pattern.n(), host.n());
    if np > nh || pattern.edge_count() > host.edge_count() {
        return None;
    }
    if np == 0 {
        return Some(Vec::new());
    }
    let nbr_degs = |g: &Graph, v: usize| -> Vec<usize> {
        let mut d: Vec<usize> = Bits(g.adj(v)).map(|u| g.degree(u)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    };
    let host_seq: Vec<Vec<usize>> = (0..nh).map(|h| nbr_degs(host, h)).collect();
    let mut compat = vec![0u64; np];
    for (p, mask) in compat.iter_mut().enumerate() {
        let ps = nbr_degs(pattern, p);
        for (h, hs) in host_seq.iter().enumerate() {
            if hs.len() >= ps.len() && ps.iter().zip(hs).all(|(a, b)| b >= a) {
                *mask |= 1 << h;
            }
        }
        if *mask == 0 {
            return None;
        }
    }
    let order = match_order(pattern);
    let mut map = vec![usize::MAX; np];
    if extend(host, pattern, &order, &compat, 0, 0, &mut map) {
        Some(map)
    } else {
        None
    }
}

/// Greedy order: each step takes the vertex with most already-ordered
/// neighbors, then highest degree, then smallest index.
fn match_order(p: &Graph) -> Vec<usize> {
    let n = p.n();
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((p.adj(v) & placed).count_ones(), p.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed |= 1 << v;
        order.push(v);
    }
    order
}

fn extend(
    host: &Graph,
    pat: &Graph,
    order: &[usize],
    compat: &[u64],
    depth: usize,
    used: u64,
    map: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut cand = compat[p] & !used;
    for q in Bits(pat.adj(p)) {
        if map[q] != usize::MAX {
            cand &= host.adj(map[q]);
        }
    }
    for h in Bits(cand) {
        map[p] = h;
        if extend(host, pat, order, compat, depth + 1, used | 1 << h, map) {
            return true;
        }
    }
    map[p] = usize::MAX;
    false
}

/// Checks that `emb` is an injective, edge-preserving map.
pub fn is_embedding(host: &Graph, pattern: &Graph, emb: &[usize]) -> bool {
    emb.len() == pattern.n()
        && emb.iter().all(|&h| h < host.n())
        && emb.iter().copied().collect::<std::collections::HashSet<_>>().len() == emb.len()
        && pattern.edges().iter().all(|&(a, b)| host.has_edge(emb[a], emb[b]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let e = contains_subgraph(&Graph::complete(5), &Graph::cycle(5)).unwrap();
        assert!(is_embedding(&Graph::complete(5), &Graph::cycle(5), &e));
        assert!(contains_subgraph(&Graph::cycle(6), &Graph::complete(3)).is_none());
        assert!(contains_subgraph(&Graph::cycle(6), &Graph::path(6)).is_some());
        assert!(contains_subgraph(&Graph::path(6), &Graph::cycle(6)).is_none());
        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(contains_subgraph(&Graph::path(4), &two_k2).is_some());
        assert!(contains_subgraph(&Graph::path(3), &two_k2).is_none());
        assert_eq!(
            contains_subgraph(&Graph::path(3), &Graph::empty(0).unwrap()),
            Some(vec![])
        );
    }
}
