use crate::graph::{Bits, Graph, VertexSet};

/// Vertices left after repeatedly deleting vertices of degree at most `alpha`.
/// The result induces minimum degree at least `alpha + 1`, or is empty.
pub fn disintegration(g: &Graph, alpha: usize) -> VertexSet {
    let mut alive = g.vertices().0;
    loop {
        let low = Bits(alive)
            .filter(|&v| (g.adj(v) & alive).count_ones() as usize <= alpha)
            .fold(0u64, |m, v| m | 1 << v);
        if low == 0 {
            return VertexSet(alive);
        }
        alive &= !low;
    }
}

/// Same result computed one deletion at a time, always deleting the first
/// low-degree vertex in `order`.
pub fn disintegration_in_order(g: &Graph, alpha: usize, order: &[usize]) -> VertexSet {
    let mut alive = g.vertices().0;
    while let Some(&v) = order
        .iter()
        .find(|&&v| alive >> v & 1 == 1 && (g.adj(v) & alive).count_ones() as usize <= alpha)
    {
        alive &= !(1 << v);
    }
    VertexSet(alive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_h;

    #[test]
    fn examples() {
        assert!(disintegration(&Graph::cycle(7), 2).is_empty());
        assert_eq!(disintegration(&Graph::cycle(7), 1), Graph::cycle(7).vertices());
        assert_eq!(disintegration(&Graph::complete(5), 3), Graph::complete(5).vertices());
        assert!(disintegration(&Graph::complete(5), 4).is_empty());
        let h = build_h(12, 9, 3).unwrap();
        let ac: VertexSet = (0..3).chain(9..12).collect();
        assert_eq!(disintegration(&h, 3), ac);
        let rev: Vec<usize> = (0..12).rev().collect();
        assert_eq!(disintegration_in_order(&h, 3, &rev), ac);
    }
}
