use super::{Bits, Graph, VertexSet};
use crate::error::{Error, Result};

/// Vertices reachable from `start` inside `within` (`start` must lie in `within`).
#[inline]
pub(crate) fn reach(g: &Graph, start: usize, within: u64) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u64;
        for v in Bits(frontier) {
            next |= g.adj(v);
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Connected component containing `v`.
pub fn component_of(g: &Graph, v: usize) -> VertexSet {
    VertexSet(reach(g, v, g.vertices().0))
}

/// Connected components, each listed by its smallest vertex first.
pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut left = g.vertices().0;
    let mut out = Vec::new();
    while left != 0 {
        let v = left.trailing_zeros() as usize;
        let c = reach(g, v, left);
        out.push(VertexSet(c));
        left &= !c;
    }
    out
}

/// The empty graph counts as disconnected; `K1` is connected.
pub fn is_connected(g: &Graph) -> bool {
    g.n() > 0 && reach(g, 0, g.vertices().0) == g.vertices().0
}

/// Cut vertices of a connected graph, as a set.
pub fn cut_vertices(g: &Graph) -> VertexSet {
    let all = g.vertices().0;
    let mut cuts = VertexSet::EMPTY;
    if g.n() < 3 {
        return cuts;
    }
    for v in 0..g.n() {
        let rest = all & !(1 << v);
        let s = rest.trailing_zeros() as usize;
        if reach(g, s, rest) != rest {
            cuts.insert(v);
        }
    }
    cuts
}

/// At least three vertices, connected, and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && g.min_degree() >= 2 && is_connected(g) && cut_vertices(g).is_empty()
}

/// Induced subgraph on `s`, relabeled in ascending order. The returned map
/// sends each new index to its original vertex.
pub fn induced_subgraph(g: &Graph, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
    if s.is_empty() {
        return Err(Error::InvalidInput("induced subgraph of the empty set".into()));
    }
    if !s.is_subset(g.vertices()) {
        return Err(Error::InvalidInput("vertex set exceeds the graph".into()));
    }
    let map = s.to_vec();
    let mut pos = [usize::MAX; 64];
    for (i, &v) in map.iter().enumerate() {
        pos[v] = i;
    }
    let adj = map
        .iter()
        .map(|&v| Bits(g.adj(v) & s.0).fold(0u64, |r, u| r | 1 << pos[u]))
        .collect();
    Ok((Graph::from_adjacency_unchecked(adj), map))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity_examples() {
        assert!(is_two_connected(&Graph::complete(4)));
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert!(is_connected(&bowtie));
        assert!(!is_two_connected(&bowtie));
        assert_eq!(cut_vertices(&bowtie).to_vec(), vec![2]);
        let p4 = Graph::path(4);
        assert!(is_connected(&p4));
        assert!(!is_two_connected(&p4));
        assert!(!is_two_connected(&Graph::complete(2)));
        assert!(is_connected(&Graph::empty(1).unwrap()));
        assert!(!is_connected(&Graph::empty(2).unwrap()));
    }

    #[test]
    fn components_split() {
        let g = Graph::from_edges(6, &[(0, 3), (1, 2), (4, 5)]).unwrap();
        let cs: Vec<Vec<usize>> = components(&g).into_iter().map(|c| c.to_vec()).collect();
        assert_eq!(cs, vec![vec![0, 3], vec![1, 2], vec![4, 5]]);
    }

    #[test]
    fn induced_examples() {
        let (h, map) = induced_subgraph(&Graph::complete(4), VertexSet::from_slice(&[0, 1, 2])).unwrap();
        assert_eq!(h, Graph::complete(3));
        assert_eq!(map, vec![0, 1, 2]);
        let (h, _) = induced_subgraph(&Graph::cycle(5), VertexSet::from_slice(&[0, 1, 2])).unwrap();
        assert_eq!(h, Graph::path(3));
        assert!(induced_subgraph(&Graph::cycle(5), VertexSet::EMPTY).is_err());
    }
}
