//! Extremal constructions and the structured families used by the verifier.

mod kfamily;
mod members;
mod validate;

pub(crate) use kfamily::find_member;
pub use kfamily::{contains_k_family_member, enumerate_k_family, KFamilyMember, KFamilySpec};
pub use members::{
    build_special, enumerate_family, enumerate_family_layouts, FamilyDescriptor, FamilyType, SpecialTag,
};
pub use validate::{validate_member, ValidationReport};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use serde::{Deserialize, Serialize};

/// Parameters of `H(n,k,a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HParams {
    pub n: usize,
    pub k: usize,
    pub a: usize,
}

impl HParams {
    pub fn new(n: usize, k: usize, a: usize) -> Result<Self> {
        if !(n >= k && k >= 2 * a && a >= 1) {
            return Err(Error::OutOfDomain(format!(
                "H(n,k,a) needs n >= k >= 2a >= 2, got n={n} k={k} a={a}"
            )));
        }
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded(format!("n={n} exceeds {MAX_VERTICES}")));
        }
        Ok(HParams { n, k, a })
    }

    /// The parts `(A, B, C)` in vertex order.
    pub fn parts(&self) -> (VertexSet, VertexSet, VertexSet) {
        let HParams { n, k, a } = *self;
        let b_end = n - k + 2 * a;
        ((0..a).collect(), (a..b_end).collect(), (b_end..n).collect())
    }

    pub fn build(&self) -> Graph {
        let (a, b, c) = self.parts();
        let clique = a.union(c);
        let mut adj = vec![0u64; self.n];
        for v in clique {
            adj[v] |= clique.bits() & !(1 << v);
        }
        for v in a {
            adj[v] |= b.bits();
        }
        for v in b {
            adj[v] |= a.bits();
        }
        Graph::from_adjacency_unchecked(adj)
    }
}

/// `H(n,k,a)`: `A` of size `a` joined to everything in `B`, `A ∪ C` a
/// clique of size `k - a`, `B` independent of size `n - k + a`.
pub fn build_h(n: usize, k: usize, a: usize) -> Result<Graph> {
    Ok(HParams::new(n, k, a)?.build())
}

/// Cliques sharing the two vertices `{0, 1}`: one `K_{k-d}` and
/// `(n-k+d)/(d-1)` copies of `K_{d+1}`.
pub fn build_z(n: usize, k: usize, delta: usize) -> Result<Graph> {
    if delta < 2 || k < 2 * delta + 1 {
        return Err(Error::InvalidParameters(format!(
            "Z(n,k,d) needs d >= 2 and k-d >= d+1, got k={k} d={delta}"
        )));
    }
    if n + delta < k || !(n + delta - k).is_multiple_of(delta - 1) {
        return Err(Error::InvalidParameters(format!(
            "n-k+d = {} is not a nonnegative multiple of d-1 = {}",
            n as i64 - k as i64 + delta as i64,
            delta - 1
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded(format!("n={n} exceeds {MAX_VERTICES}")));
    }
    let t = (n + delta - k) / (delta - 1);
    let mut edges = Vec::new();
    let mut add_clique = |vs: &[usize]| {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                edges.push((u, v));
            }
        }
    };
    let big: Vec<usize> = (0..k - delta).collect();
    add_clique(&big);
    let mut next = k - delta;
    for _ in 0..t {
        let mut vs = vec![0, 1];
        vs.extend(next..next + delta - 1);
        next += delta - 1;
        add_clique(&vs);
    }
    Graph::from_edges(n, &edges)
}

/// Path on `2l - 1` vertices with three independent vertices joined to the
/// `l` even-position path vertices.
pub fn build_f_ell(l: usize) -> Result<Graph> {
    if l < 2 {
        return Err(Error::InvalidParameters(format!("F(l) needs l >= 2, got {l}")));
    }
    let p = 2 * l - 1;
    let mut edges: Vec<(usize, usize)> = (1..p).map(|i| (i - 1, i)).collect();
    for extra in p..p + 3 {
        for v in (0..p).step_by(2) {
            edges.push((v, extra));
        }
    }
    Graph::from_edges(p + 3, &edges)
}

/// `m` vertices carrying `floor(m/2)` disjoint edges.
pub fn build_e(m: usize) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = (0..m / 2).map(|i| (2 * i, 2 * i + 1)).collect();
    Graph::from_edges(m, &edges)
}

/// The clique-count extremal graph for even `k`: two cliques of size `l+1`
/// sharing a triangle `C`, and `n-k+3` further vertices paired into disjoint
/// edges (one left over when the count is odd), all joined to `C`.
///
/// Vertex order: `A` (`l-2`), `B` (`l-2`), `C` (3), the remaining vertices.
pub fn build_gnk3(n: usize, k: usize) -> Result<Graph> {
    if k < 10 || !k.is_multiple_of(2) || n < k + 1 {
        return Err(Error::InvalidParameters(format!(
            "G(n,k,3) needs even k >= 10 and n >= k+1, got n={n} k={k}"
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded(format!("n={n} exceeds {MAX_VERTICES}")));
    }
    let l = (k - 1) / 2;
    let s = l - 2;
    let c0 = 2 * s;
    let c: Vec<usize> = (c0..c0 + 3).collect();
    let mut edges = Vec::new();
    for side in [0..s, s..2 * s] {
        let clique: Vec<usize> = side.chain(c.iter().copied()).collect();
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    let rest = c0 + 3..n;
    for v in rest.clone() {
        for &w in &c {
            edges.push((v, w));
        }
    }
    let rest: Vec<usize> = rest.collect();
    for pair in rest.chunks_exact(2) {
        edges.push((pair[0], pair[1]));
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::{circumference_len, count_cliques};
    use crate::graph::is_two_connected;

    #[test]
    fn h_shape() {
        let h = build_h(9, 9, 3).unwrap();
        assert_eq!(h.n(), 9);
        assert_eq!(h.edge_count(), 24);
        let h = build_h(12, 9, 3).unwrap();
        assert_eq!(circumference_len(&h), 8);
        assert_eq!(count_cliques(&h, 3), 38);
        assert!(matches!(build_h(8, 9, 3), Err(Error::OutOfDomain(_))));
        let (_, b, _) = HParams::new(9, 9, 3).unwrap().parts();
        assert_eq!(b.len(), 3);
    }

    #[test]
    fn z_shape() {
        let z = build_z(6, 9, 3).unwrap();
        assert_eq!(z, Graph::complete(6));
        assert!(matches!(build_z(11, 9, 3), Err(Error::InvalidParameters(_))));
        let z = build_z(12, 9, 3).unwrap();
        assert_eq!(z.n(), 12);
        assert!(is_two_connected(&z));
        assert_eq!(circumference_len(&z), 8);
    }

    #[test]
    fn f_ell_and_e() {
        let f = build_f_ell(4).unwrap();
        assert_eq!(f.n(), 10);
        assert_eq!(f.edge_count(), 6 + 12);
        assert!(circumference_len(&f) <= 9);
        let e = build_e(5).unwrap();
        assert_eq!((e.n(), e.edge_count()), (5, 2));
    }

    #[test]
    fn gnk3_shape() {
        let g = build_gnk3(13, 10).unwrap();
        assert_eq!(g.n(), 13);
        assert!(circumference_len(&g) < 10);
        assert!(build_gnk3(10, 10).is_err());
    }
}
