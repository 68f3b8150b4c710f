//! Clique counting by pivoting over a succinct clique tree.
//!
//! Each root-to-leaf path of the recursion holds some vertices that every
//! clique on the path contains and some pivots that may or may not be added.
//! A leaf with `r` held vertices and `p` pivots accounts for `C(p, j)`
//! cliques of size `r + j`, and every clique is produced exactly once.

use crate::formulas::binom;
use crate::graph::{Bits, Graph};

/// `tally[s]` is the number of `s`-cliques; `tally[0] = 1`.
pub fn clique_tally(g: &Graph) -> Vec<u128> {
    let n = g.n();
    let mut tally = vec![0u128; n + 1];
    sct(g, g.vertices().0, 0, 0, &mut tally);
    tally
}

fn sct(g: &Graph, cand: u64, held: usize, pivots: usize, tally: &mut [u128]) {
    if cand == 0 {
        for j in 0..=pivots {
            tally[held + j] += binom(pivots as i64, j as i64);
        }
        return;
    }
    let mut pivot = 0;
    let mut best = -1i32;
    for v in Bits(cand) {
        let d = (g.adj(v) & cand).count_ones() as i32;
        if d > best {
            best = d;
            pivot = v;
        }
    }
    let mut rest = cand;
    for v in Bits(cand & !g.adj(pivot)) {
        let next = rest & g.adj(v);
        if v == pivot {
            sct(g, next, held, pivots + 1, tally);
        } else {
            sct(g, next, held + 1, pivots, tally);
        }
        rest &= !(1 << v);
    }
}

/// Number of `s`-cliques.
pub fn count_cliques(g: &Graph, s: usize) -> u128 {
    clique_tally(g).get(s).copied().unwrap_or(0)
}

/// Order of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    clique_tally(g).iter().rposition(|&c| c > 0).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(g: &Graph, s: usize) -> u128 {
        let n = g.n();
        let mut c = 0;
        for mask in 0u64..1 << n {
            if mask.count_ones() as usize != s {
                continue;
            }
            if Bits(mask).all(|v| g.adj(v) & mask == mask & !(1 << v)) {
                c += 1;
            }
        }
        c
    }

    #[test]
    fn small_cases() {
        let k4 = Graph::complete(4);
        assert_eq!(count_cliques(&k4, 3), 4);
        assert_eq!(clique_number(&k4), 4);
        assert_eq!(clique_tally(&Graph::complete(5)), vec![1, 5, 10, 10, 5, 1]);
        assert_eq!(clique_number(&Graph::empty(3).unwrap()), 1);
        assert_eq!(clique_number(&Graph::empty(0).unwrap()), 0);
        assert_eq!(count_cliques(&Graph::cycle(5), 3), 0);
        assert_eq!(count_cliques(&Graph::cycle(5), 9), 0);
    }

    #[test]
    fn matches_brute_force() {
        let g = Graph::from_edges(
            8,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (2, 3),
                (3, 4),
                (2, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (4, 6),
                (0, 7),
                (1, 3),
            ],
        )
        .unwrap();
        for s in 0..=8 {
            assert_eq!(count_cliques(&g, s), brute(&g, s), "s={s}");
        }
    }
}
