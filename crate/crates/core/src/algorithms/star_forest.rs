use crate::graph::{components, induced_subgraph, Bits, Graph, VertexSet};

fn star_forest_on(g: &Graph, keep: u64) -> bool {
    if keep == 0 {
        return true;
    }
    let (h, _) = induced_subgraph(g, VertexSet(keep)).expect("nonempty subset");
    is_star_forest(&h)
}

/// Every component is a star (an isolated vertex or `K_{1,t}`).
pub fn is_star_forest(g: &Graph) -> bool {
    components(g).into_iter().all(|c| {
        let edges: usize = Bits(c.0).map(|v| g.degree(v)).sum::<usize>() / 2;
        let centers = Bits(c.0).filter(|&v| g.degree(v) >= 2).count();
        edges + 1 == c.len() && centers <= 1
    })
}

/// Smallest set `A` with `|A| <= bound` such that `g - A` is a star forest;
/// among sets of equal size the lexicographically first is returned.
pub fn star_forest_after_deletion(g: &Graph, bound: usize) -> Option<VertexSet> {
    let n = g.n();
    let all = g.vertices().0;
    for size in 0..=bound.min(n) {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let a = idx.iter().fold(0u64, |m, &v| m | 1 << v);
            if star_forest_on(g, all & !a) {
                return Some(VertexSet(a));
            }
            if !next_combination(&mut idx, n) {
                break;
            }
        }
    }
    None
}

/// Advances `idx` to the next `idx.len()`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_h;

    #[test]
    fn stars() {
        let g = Graph::from_edges(9, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (6, 7)]).unwrap();
        assert!(is_star_forest(&g));
        assert!(!is_star_forest(&Graph::complete(3)));
        assert!(!is_star_forest(&Graph::path(4)));
        assert!(is_star_forest(&Graph::path(3)));
        assert_eq!(
            star_forest_after_deletion(&Graph::complete(3), 1),
            Some(VertexSet::singleton(0))
        );
        assert_eq!(star_forest_after_deletion(&Graph::complete(5), 2), None);
        assert_eq!(star_forest_after_deletion(&Graph::path(3), 2), Some(VertexSet::EMPTY));
    }

    #[test]
    fn h_minus_a() {
        // H(12,9,3) minus A still holds the triangle C; one more C vertex must go.
        let h = build_h(12, 9, 3).unwrap();
        let a = VertexSet::from_slice(&[0, 1, 2]);
        assert!(!star_forest_on(&h, h.vertices().0 & !a.0));
        assert_eq!(star_forest_after_deletion(&h, 3), None);
        let w = star_forest_after_deletion(&h, 4).unwrap();
        assert_eq!(w, VertexSet::from_slice(&[0, 1, 2, 9]));
    }

    #[test]
    fn combinations() {
        let mut idx = vec![0, 1];
        let mut seen = vec![idx.clone()];
        while next_combination(&mut idx, 4) {
            seen.push(idx.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.last().unwrap(), &vec![2, 3]);
    }
}
