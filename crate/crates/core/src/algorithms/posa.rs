//! Rotation and detour constructions for long cycles from a path.
//!
//! Path positions are 1-based throughout: `P = x_1 .. x_m`.

use super::cycles::cycle_at_least;
use crate::error::{Error, Result};
use crate::graph::{is_two_connected, Bits, CycleWitness, Graph, Path};
use serde::{Deserialize, Serialize};

/// A pair of positions `i < j` with `x_i ~ x_m` and `x_j ~ x_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CrossingPair {
    pub i: usize,
    pub j: usize,
    pub minimal: bool,
}

impl CrossingPair {
    /// `j - i - 1`.
    pub fn length(&self) -> usize {
        self.j - self.i - 1
    }
}

/// All crossing pairs of a path with `s_P` and `t_P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingInfo {
    pub pairs: Vec<CrossingPair>,
    /// `min{h : x_{h+1} ~ x_m}`.
    pub s_p: Option<usize>,
    /// `max{h : x_{h-1} ~ x_1}`.
    pub t_p: Option<usize>,
}

impl CrossingInfo {
    pub fn minimal_pairs(&self) -> impl Iterator<Item = &CrossingPair> {
        self.pairs.iter().filter(|p| p.minimal)
    }
}

/// Positions on `p` of the neighbors of `v` in `g`, as a bitmask where bit
/// `h - 1` stands for `x_h`.
fn positions_adjacent(g: &Graph, p: &[usize], v: usize) -> u64 {
    let mut mask = 0u64;
    for (idx, &x) in p.iter().enumerate() {
        if g.has_edge(v, x) {
            mask |= 1 << idx;
        }
    }
    mask
}

fn positions(mask: u64) -> impl Iterator<Item = usize> {
    Bits(mask).map(|b| b + 1)
}

fn first_pos(mask: u64) -> usize {
    mask.trailing_zeros() as usize + 1
}

fn last_pos(mask: u64) -> usize {
    64 - mask.leading_zeros() as usize
}

/// Crossing pairs with both positions interior to the path
/// (`2 <= i < j <= m-1`), sorted by `(i, j)`.
pub fn crossing_pairs(g: &Graph, path: &Path) -> Result<CrossingInfo> {
    if !path.is_valid_in(g) {
        return Err(Error::InvalidInput("path is not valid in the graph".into()));
    }
    let p = path.vertices();
    let m = p.len();
    let n1 = positions_adjacent(g, p, p[0]);
    let nm = positions_adjacent(g, p, p[m - 1]);
    let ends = n1 | nm;
    let mut pairs = Vec::new();
    for i in positions(nm).filter(|&i| i >= 2 && i < m) {
        for j in positions(n1).filter(|&j| j > i && j < m) {
            let minimal = positions(ends).all(|h| h <= i || h >= j);
            pairs.push(CrossingPair { i, j, minimal });
        }
    }
    let s_p = (nm != 0).then(|| first_pos(nm) - 1);
    let t_p = (n1 != 0).then(|| last_pos(n1) + 1);
    Ok(CrossingInfo { pairs, s_p, t_p })
}

/// The length every cycle returned by [`posa_cycle`] reaches:
/// `min{m, d_P(x_1) + d_P(x_m) + e}` where `e` is 1 when the last neighbor of
/// `x_1` equals the first neighbor of `x_m`, 2 when it comes before it, and 0
/// otherwise.
pub fn posa_guarantee(g: &Graph, path: &Path) -> Result<usize> {
    let p = path.vertices();
    if p.len() < 2 || !path.is_valid_in(g) {
        return Err(Error::InvalidInput(
            "need a valid path with at least two vertices".into(),
        ));
    }
    let m = p.len();
    let n1 = positions_adjacent(g, p, p[0]);
    let nm = positions_adjacent(g, p, p[m - 1]);
    let (i, j) = (first_pos(nm), last_pos(n1));
    let extra = match j.cmp(&i) {
        std::cmp::Ordering::Equal => 1,
        std::cmp::Ordering::Less => 2,
        std::cmp::Ordering::Greater => 0,
    };
    let d = (n1.count_ones() + nm.count_ones()) as usize;
    Ok(m.min(d + extra))
}

/// A cycle at least as long as [`posa_guarantee`], built from `path`.
///
/// Uses, in order: the closing edge `x_1 x_m`, a rotation edge pair, a
/// shortest crossing pair, or a detour through vertices off the path.
/// Configurations with no detour of the usual shape fall back to an exact
/// search for a cycle of the required length.
pub fn posa_cycle(g: &Graph, path: &Path) -> Result<CycleWitness> {
    let target = posa_guarantee(g, path)?;
    if !is_two_connected(g) {
        return Err(Error::InvalidInput("graph is not 2-connected".into()));
    }
    let p = path.vertices();
    let m = p.len();
    let x = |h: usize| p[h - 1];
    let seg = |from: usize, to: usize| -> Vec<usize> {
        if from <= to {
            (from..=to).map(x).collect()
        } else {
            (to..=from).rev().map(x).collect()
        }
    };

    if m == 2 {
        return super::cycles::longest_cycle_through_edge(g, p[0], p[1])?
            .map(|(_, c)| c)
            .ok_or_else(|| Error::InvalidInput("edge lies on no cycle".into()));
    }
    let n1 = positions_adjacent(g, p, p[0]);
    let nm = positions_adjacent(g, p, p[m - 1]);

    if n1 >> (m - 1) & 1 == 1 {
        return Ok(CycleWitness(p.to_vec()));
    }
    if let Some(h) = positions(nm & (n1 >> 1)).next() {
        let mut c = seg(1, h);
        c.extend(seg(m, h + 1));
        return Ok(CycleWitness(c));
    }

    let (i, j) = (first_pos(nm), last_pos(n1));
    if i < j {
        let info = crossing_pairs(g, path)?;
        let best = info
            .pairs
            .iter()
            .min_by_key(|c| (c.length(), c.i, c.j))
            .expect("i < j gives a crossing pair");
        let mut c = seg(1, best.i);
        c.extend(seg(m, best.j));
        return Ok(CycleWitness(c));
    }

    // Detour Q from x_u (u left of the pivot block) to x_v (right of it).
    let (left, right) = (low_positions(j), high_positions(i, m));
    let on_path = path.vertex_set().0;
    if let Some((u, v, interior)) = shortest_jump(g, p, left, right, on_path) {
        let pp = positions(n1).find(|&h| h > u);
        let qq = positions(nm).filter(|&h| h < v).last();
        if let (Some(pp), Some(qq)) = (pp, qq) {
            let mut c = seg(1, u);
            c.extend(interior);
            c.extend(seg(v, m));
            c.extend(seg(qq, pp));
            let w = CycleWitness(c);
            if w.is_valid_in(g) && w.len() >= target {
                return Ok(w);
            }
        }
    }
    cycle_at_least(g, target).ok_or_else(|| {
        Error::InvalidInput("no cycle of the guaranteed length; input violates the preconditions".into())
    })
}

/// Positions `1..limit` (exclusive) as a mask.
fn low_positions(limit: usize) -> u64 {
    (1u64 << (limit - 1)) - 1
}

/// Positions `from+1..=m` as a mask.
fn high_positions(from: usize, m: usize) -> u64 {
    let upto = if m >= 64 { u64::MAX } else { (1u64 << m) - 1 };
    upto & !((1u64 << from) - 1)
}

/// Shortest path from some `x_u` (`u` in `from`) to some `x_v` (`v` in
/// `to`) whose interior avoids `blocked`. Ties go to the smallest `(u, v)`.
/// Returns `(u, v, interior vertices in order)`.
fn shortest_jump(g: &Graph, p: &[usize], from: u64, to: u64, blocked: u64) -> Option<(usize, usize, Vec<usize>)> {
    let free = g.vertices().0 & !blocked;
    let mut best: Option<(usize, usize, usize, Vec<usize>)> = None;
    for u in positions(from) {
        let xu = p[u - 1];
        // BFS over free vertices from the neighbors of x_u.
        let mut parent = vec![usize::MAX; g.n()];
        let mut dist = vec![usize::MAX; g.n()];
        let mut queue = std::collections::VecDeque::new();
        for w in Bits(g.adj(xu) & free) {
            dist[w] = 1;
            queue.push_back(w);
        }
        while let Some(w) = queue.pop_front() {
            for y in Bits(g.adj(w) & free) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[w] + 1;
                    parent[y] = w;
                    queue.push_back(y);
                }
            }
        }
        for v in positions(to) {
            let xv = p[v - 1];
            let cand = if g.has_edge(xu, xv) {
                Some((1, Vec::new()))
            } else {
                Bits(g.adj(xv) & free)
                    .filter(|&w| dist[w] != usize::MAX)
                    .min_by_key(|&w| (dist[w], w))
                    .map(|w| {
                        let mut inner = vec![w];
                        let mut cur = w;
                        while parent[cur] != usize::MAX {
                            cur = parent[cur];
                            inner.push(cur);
                        }
                        inner.reverse();
                        (dist[w] + 1, inner)
                    })
            };
            if let Some((len, inner)) = cand {
                if best.as_ref().is_none_or(|b| len < b.0) {
                    best = Some((len, u, v, inner));
                }
            }
        }
    }
    best.map(|(_, u, v, inner)| (u, v, inner))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_examples() {
        let c6 = Graph::cycle(6);
        let info = crossing_pairs(&c6, &Path((0..6).collect())).unwrap();
        assert!(info.pairs.is_empty());
        let k4 = Graph::complete(4);
        let info = crossing_pairs(&k4, &Path(vec![0, 1, 2, 3])).unwrap();
        assert_eq!(
            info.pairs,
            vec![CrossingPair {
                i: 2,
                j: 3,
                minimal: true
            }]
        );
        assert_eq!(info.s_p, Some(0));
        assert_eq!(info.t_p, Some(5));
    }

    #[test]
    fn small_cycles() {
        let c5 = Graph::cycle(5);
        let w = posa_cycle(&c5, &Path((0..5).collect())).unwrap();
        assert_eq!(w.len(), 5);
        let k4 = Graph::complete(4);
        let w = posa_cycle(&k4, &Path(vec![0, 1, 2, 3])).unwrap();
        assert!(w.is_valid_in(&k4) && w.len() == 4);
        assert!(posa_cycle(&Graph::path(4), &Path(vec![0, 1, 2, 3])).is_err());
    }

    #[test]
    fn detour_with_shared_pivot() {
        // Path 0..6, x_1 ~ x_4, x_7 ~ x_4, detour 1-7-5 off the path.
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (0, 3),
                (6, 3),
                (1, 7),
                (7, 5),
            ],
        )
        .unwrap();
        let path = Path((0..7).collect());
        let t = posa_guarantee(&g, &path).unwrap();
        assert_eq!(t, 5);
        let w = posa_cycle(&g, &path).unwrap();
        assert!(w.is_valid_in(&g) && w.len() >= t);
    }
}
