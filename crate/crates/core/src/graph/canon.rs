//! Canonical labeling by partition refinement and individualization.
//!
//! Leaves of the search tree are discrete ordered partitions. Each leaf gives a
//! relabeling; the canonical one is the leaf whose relabeled adjacency bits,
//! read in graph6 order, are lexicographically smallest. Twin vertices and
//! automorphisms found at equal leaves prune sibling branches.

use super::{graph6_encode, low_mask, Bits, Graph};
use std::cmp::Ordering;

/// Adjacency bits of a canonically relabeled graph in graph6 order, packed
/// most significant bit first. Ordering matches the order of the graph6 strings
/// for graphs of equal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonCode {
    n: usize,
    words: Vec<u64>,
}

impl CanonCode {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Rebuilds the canonical representative.
    pub fn to_graph(&self) -> Graph {
        let mut adj = vec![0u64; self.n];
        let mut k = 0usize;
        for j in 1..self.n {
            for i in 0..j {
                if self.words[k / 64] >> (63 - k % 64) & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                k += 1;
            }
        }
        Graph::from_adjacency_unchecked(adj)
    }

    pub fn to_graph6(&self) -> String {
        graph6_encode(&self.to_graph())
    }
}

fn leaf_code(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = lab.len();
    let nbits = n * n.saturating_sub(1) / 2;
    let mut words = vec![0u64; nbits.div_ceil(64).max(1)];
    let mut k = 0usize;
    for j in 1..n {
        let row = g.adj(lab[j]);
        for &li in &lab[..j] {
            if row >> li & 1 == 1 {
                words[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    words
}

/// Refines an ordered partition (cells as vertex masks) to the coarsest
/// equitable refinement. Splits are ordered by neighbor-count signatures, so
/// the result is equivariant under relabeling.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut sig = [[0u8; 64]; 64];
    loop {
        let nc = cells.len();
        if nc == g.n() {
            return;
        }
        for &cell in cells.iter() {
            if cell & (cell - 1) == 0 {
                continue;
            }
            for v in Bits(cell) {
                let row = g.adj(v);
                for (c, &other) in cells.iter().enumerate() {
                    sig[v][c] = (row & other).count_ones() as u8;
                }
            }
        }
        let mut next = Vec::with_capacity(nc);
        let mut verts: Vec<usize> = Vec::with_capacity(64);
        for &cell in cells.iter() {
            if cell & (cell - 1) == 0 {
                next.push(cell);
                continue;
            }
            verts.clear();
            verts.extend(Bits(cell));
            verts.sort_by(|&a, &b| sig[a][..nc].cmp(&sig[b][..nc]).then(a.cmp(&b)));
            let mut cur = 1u64 << verts[0];
            for w in verts.windows(2) {
                if sig[w[0]][..nc] == sig[w[1]][..nc] {
                    cur |= 1 << w[1];
                } else {
                    next.push(cur);
                    cur = 1 << w[1];
                }
            }
            next.push(cur);
        }
        if next.len() == nc {
            return;
        }
        *cells = next;
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn leaf(&mut self, cells: &[u64]) {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let code = leaf_code(self.g, &lab);
        match &self.best {
            None => self.best = Some((code, lab)),
            Some((bc, bl)) => match code.cmp(bc) {
                Ordering::Less => self.best = Some((code, lab)),
                Ordering::Equal => {
                    let mut gamma = vec![0usize; lab.len()];
                    for (i, &v) in bl.iter().enumerate() {
                        gamma[v] = lab[i];
                    }
                    if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                        self.autos.push(gamma);
                    }
                }
                Ordering::Greater => {}
            },
        }
    }

    /// Orbit representative table for the group generated by stored
    /// automorphisms fixing every prefix vertex.
    fn orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.autos {
            if prefix.iter().any(|&v| gamma[v] != v) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn dfs(&mut self, cells: Vec<u64>, prefix: &mut Vec<usize>) {
        if cells.len() == self.g.n() {
            self.leaf(&cells);
            return;
        }
        let t = cells
            .iter()
            .position(|c| c & (c - 1) != 0)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[t];
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(cell) {
            let twin = explored
                .iter()
                .any(|&w| self.g.adj(v) & !(1 << w) == self.g.adj(w) & !(1 << v));
            if twin {
                continue;
            }
            if !explored.is_empty() && !self.autos.is_empty() {
                let orb = self.orbits(prefix);
                if explored.iter().any(|&w| orb[w] == orb[v]) {
                    continue;
                }
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.g, &mut child);
            prefix.push(v);
            self.dfs(child, prefix);
            prefix.pop();
            explored.push(v);
        }
    }
}

/// Canonical labeling: `perm[v]` is the canonical index of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 1 {
        return (0..n).collect();
    }
    let mut cells = vec![low_mask(n)];
    refine(g, &mut cells);
    let mut s = Search {
        g,
        best: None,
        autos: Vec::new(),
    };
    s.dfs(cells, &mut Vec::new());
    let (_, lab) = s.best.expect("search visits at least one leaf");
    let mut perm = vec![0usize; n];
    for (i, &v) in lab.iter().enumerate() {
        perm[v] = i;
    }
    perm
}

/// Canonical adjacency code; equal codes mean isomorphic graphs.
pub fn canonical_code(g: &Graph) -> CanonCode {
    let n = g.n();
    let perm = canonical_labeling(g);
    let mut lab = vec![0usize; n];
    for (v, &i) in perm.iter().enumerate() {
        lab[i] = v;
    }
    CanonCode {
        n,
        words: leaf_code(g, &lab),
    }
}

/// Canonical form as a graph6 string of the canonically relabeled graph.
pub fn canonical_form(g: &Graph) -> String {
    graph6_encode(&g.relabel(&canonical_labeling(g)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn relabeling_invariance() {
        let c5 = Graph::cycle(5);
        let other = c5.relabel(&[2, 4, 1, 3, 0]);
        assert_ne!(c5, other);
        assert_eq!(canonical_form(&c5), canonical_form(&other));
    }

    #[test]
    fn distinguishes_same_degree_sum() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&Graph::path(4)), canonical_form(&star));
    }

    #[test]
    fn code_round_trip() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (2, 5)]).unwrap();
        let code = canonical_code(&g);
        assert_eq!(graph6_encode(&code.to_graph()), canonical_form(&g));
        assert_eq!(canonical_code(&code.to_graph()), code);
    }

    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let es: Vec<_> = Bits(mask).map(|b| pairs[b]).collect();
            Graph::from_edges(n, &es).unwrap()
        })
    }

    #[test]
    fn class_counts() {
        for (n, want) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)] {
            let set: HashSet<String> = all_graphs(n).map(|g| canonical_form(&g)).collect();
            assert_eq!(set.len(), want, "n={n}");
        }
    }

    #[test]
    fn symmetric_graphs() {
        let petersen = Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        let shuffled = petersen.relabel(&[7, 3, 9, 0, 5, 1, 8, 2, 6, 4]);
        assert_eq!(canonical_form(&petersen), canonical_form(&shuffled));
        let k = Graph::complete(30);
        assert_eq!(canonical_form(&k), graph6_encode(&k));
        let c = Graph::cycle(40);
        assert_eq!(
            canonical_form(&c),
            canonical_form(&c.relabel(&(0..40).rev().collect::<Vec<_>>()))
        );
    }
}
