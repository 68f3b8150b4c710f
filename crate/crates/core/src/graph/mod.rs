//! Small simple undirected graphs stored as adjacency bitsets.

mod canon;
mod connectivity;
mod enumerate;
mod graph6;

pub use canon::{canonical_code, canonical_form, canonical_labeling, CanonCode};
pub use connectivity::{component_of, components, cut_vertices, induced_subgraph, is_connected, is_two_connected};
pub use enumerate::{enumerate_connected, enumerate_two_connected, EnumerateOptions, MAX_SOFT_ORDER};
pub use graph6::{graph6_decode, graph6_encode, read_graph6_lines};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Hard cap on the number of vertices.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices packed into one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_slice(vs: &[usize]) -> Self {
        vs.iter().copied().collect()
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn union(self, o: VertexSet) -> VertexSet {
        VertexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: VertexSet) -> VertexSet {
        VertexSet(self.0 & o.0)
    }

    pub fn difference(self, o: VertexSet) -> VertexSet {
        VertexSet(self.0 & !o.0)
    }

    pub fn is_subset(self, o: VertexSet) -> bool {
        self.0 & !o.0 == 0
    }

    /// Ascending iterator over members.
    pub fn iter(self) -> Bits {
        Bits(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in it {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        Bits(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Immutable simple undirected graph on at most 64 labeled vertices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking the invariants.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Graph> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded(format!(
                "{n} vertices exceeds the limit of {MAX_VERTICES}"
            )));
        }
        let mask = low_mask(n);
        for (u, &row) in adj.iter().enumerate() {
            if row & !mask != 0 || row >> u & 1 == 1 {
                return Err(Error::InvalidInput(format!("bad adjacency row {u}")));
            }
            for v in Bits(row) {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::InvalidInput(format!("asymmetric pair ({u},{v})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Graph {
        Graph { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Graph {
        assert!(n <= MAX_VERTICES);
        let full = low_mask(n);
        Graph {
            n,
            adj: (0..n).map(|v| full & !(1 << v)).collect(),
        }
    }

    pub fn cycle(n: usize) -> Graph {
        assert!((3..=MAX_VERTICES).contains(&n));
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn path(n: usize) -> Graph {
        assert!((1..=MAX_VERTICES).contains(&n));
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Neighbor word of `v`.
    #[inline]
    pub fn adj(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in Bits(self.adj[u] & !low_mask(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, sorted.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            let miss = !self.adj[u] & low_mask(self.n) & !low_mask(u + 1);
            for v in Bits(miss) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Copy of the graph with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u < self.n && v < self.n && u != v);
        let mut g = self.clone();
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        g
    }

    /// Copy of the graph with edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g
    }

    /// Copy of the graph with one new vertex adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        if self.n >= MAX_VERTICES {
            return Err(Error::CapacityExceeded("cannot add a 65th vertex".into()));
        }
        if !nbrs.is_subset(self.vertices()) {
            return Err(Error::InvalidInput("neighbor outside the graph".into()));
        }
        let v = self.n;
        let mut adj = self.adj.clone();
        for u in nbrs {
            adj[u] |= 1 << v;
        }
        adj.push(nbrs.0);
        Ok(Graph { n: v + 1, adj })
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut row = 0u64;
            for v in Bits(self.adj[u]) {
                row |= 1 << perm[v];
            }
            adj[perm[u]] = row;
        }
        Graph { n: self.n, adj }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded(format!("union has {n} vertices")));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Graph with one new vertex joined to every existing vertex.
    pub fn cone(&self) -> Result<Graph> {
        self.with_vertex(self.vertices())
    }

    /// True when every edge of `self` is also an edge of `other` (same labels).
    pub fn is_spanning_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} {:?})", graph6_encode(self), self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6_encode(self))
    }
}

/// Serialized as its graph6 string.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&graph6_encode(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        graph6_decode(&s).map_err(serde::de::Error::custom)
    }
}

/// An ordered sequence of distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path(pub Vec<usize>);

impl Path {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    pub fn last(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    /// Checks distinctness and consecutive adjacency in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        if self.0.is_empty() || self.0.iter().any(|&v| v >= g.n()) {
            return false;
        }
        if self.vertex_set().len() != self.0.len() {
            return false;
        }
        self.0.windows(2).all(|w| g.has_edge(w[0], w[1]))
    }

    pub fn reversed(&self) -> Path {
        Path(self.0.iter().rev().copied().collect())
    }
}

/// A cycle given as a cyclic vertex sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleWitness(pub Vec<usize>);

impl CycleWitness {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Cycle length, which equals its vertex count.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True when the sequence is a genuine cycle of `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let c = &self.0;
        c.len() >= 3 && Path(c.clone()).is_valid_in(g) && g.has_edge(c[0], c[c.len() - 1])
    }

    /// True when consecutive vertices `a`, `b` appear as a cycle edge.
    pub fn uses_edge(&self, a: usize, b: usize) -> bool {
        let c = &self.0;
        let k = c.len();
        (0..k).any(|i| {
            let (x, y) = (c[i], c[(i + 1) % k]);
            (x == a && y == b) || (x == b && y == a)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_basic() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        let e4 = Graph::from_edges(4, &[]).unwrap();
        assert_eq!(e4.edge_count(), 0);
        assert_eq!(e4.n(), 4);
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5, Graph::cycle(5));
    }

    #[test]
    fn from_edges_errors() {
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(Error::InvalidInput(_))));
        assert!(matches!(Graph::from_edges(3, &[(0, 3)]), Err(Error::InvalidInput(_))));
        assert!(matches!(Graph::from_edges(65, &[]), Err(Error::CapacityExceeded(_))));
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn full_word_graph() {
        let g = Graph::complete(64);
        assert_eq!(g.edge_count(), 64 * 63 / 2);
        assert_eq!(g.degree(63), 63);
    }

    #[test]
    fn adjacency_validation() {
        assert!(Graph::from_adjacency(vec![0b10, 0b01]).is_ok());
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(vec![0b01]).is_err());
    }

    #[test]
    fn relabel_preserves_edges() {
        let p = Graph::path(4);
        let r = p.relabel(&[3, 2, 1, 0]);
        assert_eq!(r, p);
        let r = p.relabel(&[1, 0, 2, 3]);
        assert!(r.has_edge(0, 1) && r.has_edge(0, 2) && !r.has_edge(1, 2));
    }

    #[test]
    fn witnesses() {
        let c5 = Graph::cycle(5);
        assert!(CycleWitness(vec![0, 1, 2, 3, 4]).is_valid_in(&c5));
        assert!(!CycleWitness(vec![0, 1, 2]).is_valid_in(&c5));
        assert!(Path(vec![2, 3, 4, 0]).is_valid_in(&c5));
        assert!(!Path(vec![2, 3, 2]).is_valid_in(&c5));
    }
}
