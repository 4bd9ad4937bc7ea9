//! Canonical forms for small graphs by individualization and refinement,
//! and exhaustive generation of all graphs up to isomorphism.

use std::collections::BTreeMap;

use super::{GraphBuilder, SimpleGraph};

/// Largest order for which [`canonical_code`] fits in a `u64`.
pub const MAX_CANON_ORDER: usize = 11;

fn refine(g: &SimpleGraph, colors: &mut Vec<usize>) {
    let n = g.vertex_count();
    let mut classes = colors.iter().copied().max().map_or(0, |c| c + 1);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut counts = vec![0usize; classes];
                for &w in g.neighbors(v) {
                    counts[colors[w]] += 1;
                }
                (colors[v], counts)
            })
            .collect();
        let mut ranked: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        ranked.sort();
        ranked.dedup();
        if ranked.len() == classes {
            return;
        }
        for v in 0..n {
            colors[v] = ranked.binary_search(&&sigs[v]).expect("present");
        }
        classes = ranked.len();
    }
}

fn leaf_code(g: &SimpleGraph, colors: &[usize]) -> u64 {
    let n = g.vertex_count();
    let mut order = vec![0usize; n];
    for (v, &c) in colors.iter().enumerate() {
        order[c] = v;
    }
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | g.has_edge(order[i], order[j]) as u64;
        }
    }
    code
}

fn search(g: &SimpleGraph, colors: Vec<usize>, best: &mut Option<u64>) {
    let n = g.vertex_count();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    // first non-singleton cell in colour order; invariant under relabelling
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        let code = leaf_code(g, &colors);
        if best.is_none_or(|b| code > b) {
            *best = Some(code);
        }
        return;
    };
    for v in (0..n).filter(|&v| colors[v] == target) {
        let mut next: Vec<usize> = colors.iter().map(|&c| 2 * c + 1).collect();
        next[v] = 2 * target;
        let mut ranks: Vec<usize> = next.clone();
        ranks.sort_unstable();
        ranks.dedup();
        for c in next.iter_mut() {
            *c = ranks.binary_search(c).expect("present");
        }
        refine(g, &mut next);
        search(g, next, best);
    }
}

/// A code equal for two graphs iff they are isomorphic. Only defined for
/// orders up to [`MAX_CANON_ORDER`].
pub fn canonical_code(g: &SimpleGraph) -> u64 {
    let n = g.vertex_count();
    assert!(n <= MAX_CANON_ORDER, "canonical_code supports at most {MAX_CANON_ORDER} vertices");
    if n == 0 {
        return 0;
    }
    let mut colors = vec![0; n];
    refine(g, &mut colors);
    let mut best = None;
    search(g, colors, &mut best);
    // the order is part of the code so graphs of different size never collide
    best.expect("at least one leaf") ^ ((n as u64) << 58)
}

/// One representative of every isomorphism class of graphs on exactly `n`
/// vertices, in increasing canonical-code order.
pub fn nonisomorphic_graphs(n: usize) -> Vec<SimpleGraph> {
    assert!(n <= 9, "exhaustive generation is limited to 9 vertices");
    if n == 0 {
        return vec![GraphBuilder::new(0).build()];
    }
    let mut layer: Vec<SimpleGraph> = vec![GraphBuilder::new(1).build()];
    for m in 2..=n {
        let mut found: BTreeMap<u64, SimpleGraph> = BTreeMap::new();
        for g in &layer {
            for mask in 0u32..(1 << (m - 1)) {
                let mut b = GraphBuilder::new(m);
                for (u, v) in g.edges() {
                    b.add_edge_unchecked(u, v);
                }
                for u in 0..m - 1 {
                    if mask >> u & 1 == 1 {
                        b.add_edge_unchecked(u, m - 1);
                    }
                }
                let h = b.build();
                found.entry(canonical_code(&h)).or_insert(h);
            }
        }
        layer = found.into_values().collect();
    }
    layer
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::make_cycle;

    #[test]
    fn relabelled_graphs_share_a_code() {
        let c6 = make_cycle(6).unwrap();
        let perm = [3, 0, 5, 1, 4, 2];
        let moved = SimpleGraph::from_edges(6, c6.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        assert_eq!(canonical_code(&c6), canonical_code(&moved));
        let two_triangles = SimpleGraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_ne!(canonical_code(&c6), canonical_code(&two_triangles));
    }

    #[test]
    fn class_counts_for_small_orders() {
        // number of graphs on n unlabelled vertices
        let expected = [1, 1, 2, 4, 11, 34, 156];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(nonisomorphic_graphs(n).len(), count, "n = {n}");
        }
    }
}
