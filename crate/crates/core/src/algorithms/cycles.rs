//! Exact longest-cycle search by branch and bound.
//!
//! Every cycle is found from its smallest vertex `s`, extending a path through
//! vertices larger than `s`. A branch is cut when the path length plus the
//! number of vertices still reachable cannot beat the incumbent, or when no
//! reachable vertex is adjacent to `s`.

use crate::error::{Error, Result};
use crate::graph::{Bits, CycleWitness, Graph};

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

struct CycleSearch<'a> {
    g: &'a Graph,
    start: usize,
    allowed: u64,
    best: usize,
    target: usize,
    path: Vec<usize>,
    witness: Vec<usize>,
}

impl CycleSearch<'_> {
    fn done(&self) -> bool {
        self.best >= self.target
    }

    fn extend(&mut self, v: usize, visited: u64) {
        let len = self.path.len();
        let home = self.g.adj(self.start);
        if len >= 3 && home >> v & 1 == 1 && len > self.best {
            self.best = len;
            self.witness.clone_from(&self.path);
            if self.done() {
                return;
            }
        }
        let avail = self.allowed & !visited;
        let nbrs = self.g.adj(v) & avail;
        if nbrs == 0 {
            return;
        }
        let r = reach_from(self.g, nbrs, avail);
        if r & home == 0 || len + r.count_ones() as usize <= self.best {
            return;
        }
        for u in Bits(nbrs) {
            self.path.push(u);
            self.extend(u, visited | 1 << u);
            self.path.pop();
            if self.done() {
                return;
            }
        }
    }
}

fn search(g: &Graph, target: usize) -> Option<CycleWitness> {
    let n = g.n();
    let mut best = 2usize;
    let mut witness = Vec::new();
    for s in 0..n {
        let allowed = g.vertices().0 & !((1u64 << s) | ((1u64 << s) - 1));
        if g.adj(s) & allowed == 0 {
            continue;
        }
        let comp = reach_from(g, g.adj(s) & allowed, allowed);
        if (comp.count_ones() as usize) < best {
            continue;
        }
        let mut cs = CycleSearch {
            g,
            start: s,
            allowed,
            best,
            target,
            path: vec![s],
            witness: Vec::new(),
        };
        cs.extend(s, 1 << s);
        if cs.best > best {
            best = cs.best;
            witness = cs.witness;
        }
        if best >= target {
            break;
        }
    }
    (best >= 3).then_some(CycleWitness(witness))
}

/// Length of a longest cycle with a witness, or `None` for forests.
pub fn circumference(g: &Graph) -> Option<(usize, CycleWitness)> {
    search(g, usize::MAX).map(|c| (c.len(), c))
}

/// Length of a longest cycle, zero for forests.
pub fn circumference_len(g: &Graph) -> usize {
    circumference(g).map_or(0, |(l, _)| l)
}

/// A cycle of length at least `k`, if one exists.
pub fn cycle_at_least(g: &Graph, k: usize) -> Option<CycleWitness> {
    search(g, k.max(3)).filter(|c| c.len() >= k)
}

/// Whether `g` has a cycle of length at least `k`.
pub fn has_cycle_at_least(g: &Graph, k: usize) -> bool {
    cycle_at_least(g, k).is_some()
}

/// Longest path from `a` to `b` (as a vertex sequence starting at `a`).
/// With `skip_direct` the single edge `ab` is not accepted as the path.
pub(crate) fn longest_path_between_impl(
    g: &Graph,
    a: usize,
    b: usize,
    skip_direct: bool,
    target: usize,
) -> Option<Vec<usize>> {
    struct S<'a> {
        g: &'a Graph,
        b: usize,
        skip_direct: bool,
        best: usize,
        target: usize,
        path: Vec<usize>,
        witness: Vec<usize>,
    }
    impl S<'_> {
        fn go(&mut self, v: usize, visited: u64) {
            let avail = self.g.vertices().0 & !visited;
            let mut nbrs = self.g.adj(v) & avail;
            if self.skip_direct && self.path.len() == 1 {
                nbrs &= !(1 << self.b);
            }
            if nbrs == 0 {
                return;
            }
            let r = reach_from(self.g, nbrs, avail);
            if r >> self.b & 1 == 0 || self.path.len() + r.count_ones() as usize <= self.best {
                return;
            }
            if nbrs >> self.b & 1 == 1 && self.path.len() + 1 > self.best {
                self.path.push(self.b);
                self.best = self.path.len();
                self.witness.clone_from(&self.path);
                self.path.pop();
                if self.best >= self.target {
                    return;
                }
            }
            for u in Bits(nbrs & !(1 << self.b)) {
                self.path.push(u);
                self.go(u, visited | 1 << u);
                self.path.pop();
                if self.best >= self.target {
                    return;
                }
            }
        }
    }
    if a == b || a >= g.n() || b >= g.n() {
        return None;
    }
    let mut s = S {
        g,
        b,
        skip_direct,
        best: 0,
        target,
        path: vec![a],
        witness: Vec::new(),
    };
    s.go(a, 1 << a);
    (!s.witness.is_empty()).then_some(s.witness)
}

/// Longest cycle through the edge `ab`, with a witness starting `a, .., b`.
pub fn longest_cycle_through_edge(g: &Graph, a: usize, b: usize) -> Result<Option<(usize, CycleWitness)>> {
    if !g.has_edge(a, b) {
        return Err(Error::InvalidInput(format!("({a},{b}) is not an edge")));
    }
    Ok(longest_path_between_impl(g, a, b, true, usize::MAX).map(|p| (p.len(), CycleWitness(p))))
}

/// Whether some cycle through the edge `ab` has length at least `k`.
pub fn cycle_through_edge_at_least(g: &Graph, a: usize, b: usize, k: usize) -> Result<bool> {
    if !g.has_edge(a, b) {
        return Err(Error::InvalidInput(format!("({a},{b}) is not an edge")));
    }
    Ok(longest_path_between_impl(g, a, b, true, k).is_some_and(|p| p.len() >= k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        Graph::from_edges(
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
        .unwrap()
    }

    #[test]
    fn basic_circumference() {
        assert_eq!(circumference_len(&Graph::cycle(5)), 5);
        assert_eq!(circumference_len(&Graph::complete(6)), 6);
        assert_eq!(circumference_len(&Graph::path(6)), 0);
        assert!(circumference(&Graph::path(6)).is_none());
        let (l, w) = circumference(&petersen()).unwrap();
        assert_eq!(l, 9);
        assert!(w.is_valid_in(&petersen()));
    }

    #[test]
    fn threshold_queries() {
        let p = petersen();
        assert!(has_cycle_at_least(&p, 9));
        assert!(!has_cycle_at_least(&p, 10));
        assert!(cycle_at_least(&p, 8).unwrap().len() >= 8);
    }

    #[test]
    fn through_edge() {
        let k4 = Graph::complete(4);
        assert_eq!(longest_cycle_through_edge(&k4, 0, 1).unwrap().unwrap().0, 4);
        let shared = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        assert_eq!(longest_cycle_through_edge(&shared, 0, 1).unwrap().unwrap().0, 3);
        let (l, w) = longest_cycle_through_edge(&shared, 0, 2).unwrap().unwrap();
        assert_eq!(l, 4);
        assert!(w.is_valid_in(&shared) && w.uses_edge(0, 2));
        assert!(longest_cycle_through_edge(&shared, 2, 3).is_err());
        assert_eq!(longest_cycle_through_edge(&Graph::path(3), 0, 1).unwrap(), None);
        assert!(cycle_through_edge_at_least(&shared, 0, 2, 4).unwrap());
        assert!(!cycle_through_edge_at_least(&shared, 0, 1, 4).unwrap());
    }
}
