use super::cycles::longest_path_between_impl;
use crate::graph::{Bits, Graph, Path, VertexSet};

#[inline]
fn reach_from(g: &Graph, seeds: u64, within: u64) -> u64 {
    let mut seen = seeds & within;
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

/// Longest path with both endpoints in `s`, counted in vertices. A single
/// vertex of `s` is a path with one vertex. `None` when `s` is empty.
pub fn longest_s_path(g: &Graph, s: VertexSet) -> Option<(usize, Path)> {
    let s = s.intersection(g.vertices());
    let first = s.min()?;
    let mut st = SPath {
        g,
        s: s.0,
        best: 1,
        witness: vec![first],
        path: Vec::new(),
        collect: None,
    };
    for v in s {
        st.path = vec![v];
        st.go(v, 1 << v);
        if st.best == g.n() {
            break;
        }
    }
    Some((st.best, Path(st.witness)))
}

/// Every longest path with both endpoints in `s`, each orientation listed,
/// stopping after `cap` paths. Returns the length and the paths found.
pub fn all_longest_s_paths(g: &Graph, s: VertexSet, cap: usize) -> (usize, Vec<Path>) {
    let Some((m, _)) = longest_s_path(g, s) else {
        return (0, Vec::new());
    };
    let mut st = SPath {
        g,
        s: s.0,
        best: m,
        witness: Vec::new(),
        path: Vec::new(),
        collect: Some((Vec::new(), cap)),
    };
    for v in s.intersection(g.vertices()) {
        st.path = vec![v];
        if m == 1 {
            st.push_found();
        } else {
            st.go(v, 1 << v);
        }
    }
    let (found, _) = st.collect.expect("collect mode");
    (m, found.into_iter().map(Path).collect())
}

struct SPath<'a> {
    g: &'a Graph,
    s: u64,
    best: usize,
    witness: Vec<usize>,
    path: Vec<usize>,
    collect: Option<(Vec<Vec<usize>>, usize)>,
}

impl SPath<'_> {
    fn push_found(&mut self) {
        if let Some((found, cap)) = &mut self.collect {
            if found.len() < *cap {
                found.push(self.path.clone());
            }
        }
    }

    fn full(&self) -> bool {
        self.collect.as_ref().is_some_and(|(f, cap)| f.len() >= *cap)
    }

    fn go(&mut self, v: usize, visited: u64) {
        let len = self.path.len();
        if self.s >> v & 1 == 1 && len > 1 {
            if self.collect.is_some() {
                if len == self.best {
                    self.push_found();
                    return;
                }
            } else if len > self.best {
                self.best = len;
                self.witness.clone_from(&self.path);
            }
        }
        let avail = self.g.vertices().0 & !visited;
        let nbrs = self.g.adj(v) & avail;
        if nbrs == 0 || self.full() {
            return;
        }
        let r = reach_from(self.g, nbrs, avail);
        let bound = len + r.count_ones() as usize;
        let cut = if self.collect.is_some() {
            bound < self.best
        } else {
            bound <= self.best
        };
        if cut || r & self.s == 0 {
            return;
        }
        for u in Bits(nbrs) {
            self.path.push(u);
            self.go(u, visited | 1 << u);
            self.path.pop();
            if self.best == self.g.n() && self.collect.is_none() {
                return;
            }
        }
    }
}

/// Longest `a`-`b` path, counted in vertices (the edge `ab` alone counts 2).
pub fn longest_path_between(g: &Graph, a: usize, b: usize) -> Option<Path> {
    longest_path_between_impl(g, a, b, false, usize::MAX).map(Path)
}

/// Hamilton path starting in `from` and ending in `to`.
pub fn hamilton_path_between_sets(g: &Graph, from: VertexSet, to: VertexSet) -> Option<Path> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    if n == 1 {
        return (from.contains(0) && to.contains(0)).then(|| Path(vec![0]));
    }
    if n <= 24 {
        hamilton_dp(g, from.0, to.0)
    } else {
        hamilton_dfs(g, from.0, to.0)
    }
}

/// `ends[mask]` holds the possible last vertices of paths that start in
/// `from` and cover exactly `mask`.
fn hamilton_dp(g: &Graph, from: u64, to: u64) -> Option<Path> {
    let n = g.n();
    let full = g.vertices().0;
    let mut ends = vec![0u64; 1 << n];
    for v in Bits(from & full) {
        ends[1 << v] |= 1 << v;
    }
    for mask in 1usize..1 << n {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        let mut grow = 0u64;
        for v in Bits(e) {
            grow |= g.adj(v);
        }
        for u in Bits(grow & !(mask as u64)) {
            ends[mask | 1 << u] |= 1 << u;
        }
    }
    let last = (ends[full as usize] & to).trailing_zeros() as usize;
    if last >= 64 {
        return None;
    }
    let mut path = vec![last];
    let mut mask = full as usize;
    let mut cur = last;
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << cur);
        let prev = Bits(ends[prev_mask] & g.adj(cur))
            .next()
            .expect("dp table is consistent");
        path.push(prev);
        mask = prev_mask;
        cur = prev;
    }
    path.reverse();
    Some(Path(path))
}

fn hamilton_dfs(g: &Graph, from: u64, to: u64) -> Option<Path> {
    fn go(g: &Graph, to: u64, path: &mut Vec<usize>, visited: u64) -> bool {
        let v = *path.last().expect("nonempty");
        let full = g.vertices().0;
        if visited == full {
            return to >> v & 1 == 1;
        }
        let avail = full & !visited;
        if reach_from(g, g.adj(v) & avail, avail) != avail {
            return false;
        }
        for u in Bits(g.adj(v) & avail) {
            path.push(u);
            if go(g, to, path, visited | 1 << u) {
                return true;
            }
            path.pop();
        }
        false
    }
    for s in Bits(from & g.vertices().0) {
        let mut path = vec![s];
        if go(g, to, &mut path, 1 << s) {
            return Some(Path(path));
        }
    }
    None
}

/// Greedy maximal path: start at `start`, step to `first`, then repeatedly
/// extend the tail and afterwards the head by the smallest free neighbor.
pub fn greedy_maximal_path(g: &Graph, start: usize, first: Option<usize>) -> Path {
    let mut path = vec![start];
    let mut used = 1u64 << start;
    if let Some(f) = first.filter(|&f| g.has_edge(start, f)) {
        path.push(f);
        used |= 1 << f;
    }
    loop {
        let tail = *path.last().expect("nonempty");
        match Bits(g.adj(tail) & !used).next() {
            Some(u) => {
                path.push(u);
                used |= 1 << u;
            }
            None => break,
        }
    }
    path.reverse();
    loop {
        let tail = *path.last().expect("nonempty");
        match Bits(g.adj(tail) & !used).next() {
            Some(u) => {
                path.push(u);
                used |= 1 << u;
            }
            None => break,
        }
    }
    path.reverse();
    Path(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_h;

    #[test]
    fn s_paths() {
        let c5 = Graph::cycle(5);
        assert_eq!(longest_s_path(&c5, c5.vertices()).unwrap().0, 5);
        let k4 = Graph::complete(4);
        let (m, p) = longest_s_path(&k4, VertexSet::singleton(2)).unwrap();
        assert_eq!((m, p.0), (1, vec![2]));
        assert!(longest_s_path(&k4, VertexSet::EMPTY).is_none());
        let h = build_h(9, 9, 3).unwrap();
        let ac: VertexSet = (0..3).chain(6..9).collect();
        // B has three vertices seeing only A, so at most two fit inside.
        let (m, p) = longest_s_path(&h, ac).unwrap();
        assert_eq!(m, 8);
        assert!(p.is_valid_in(&h) && ac.contains(p.first()) && ac.contains(p.last()));
    }

    #[test]
    fn all_longest() {
        let c4 = Graph::cycle(4);
        let (m, ps) = all_longest_s_paths(&c4, c4.vertices(), 1000);
        assert_eq!(m, 4);
        assert_eq!(ps.len(), 8);
        let (m, ps) = all_longest_s_paths(&c4, VertexSet::from_slice(&[0, 2]), 1000);
        assert_eq!(m, 3);
        assert_eq!(ps.len(), 4);
    }

    #[test]
    fn hamilton() {
        let p = Graph::path(5);
        assert!(hamilton_path_between_sets(&p, VertexSet::singleton(0), VertexSet::singleton(4)).is_some());
        assert!(hamilton_path_between_sets(&p, VertexSet::singleton(1), p.vertices()).is_none());
        let c = Graph::cycle(30);
        let h = hamilton_path_between_sets(&c, VertexSet::singleton(0), VertexSet::singleton(1)).unwrap();
        assert!(h.is_valid_in(&c) && h.len() == 30);
        let k = Graph::complete(6);
        let h = hamilton_path_between_sets(&k, VertexSet::singleton(3), VertexSet::singleton(5)).unwrap();
        assert!(h.is_valid_in(&k) && h.first() == 3 && h.last() == 5);
    }

    #[test]
    fn greedy() {
        let c5 = Graph::cycle(5);
        let p = greedy_maximal_path(&c5, 0, Some(4));
        assert!(p.is_valid_in(&c5));
        assert_eq!(p.len(), 5);
    }
}
