//! BFS oracles: odd girth, girth, bipartiteness.

use std::collections::VecDeque;

use super::SimpleGraph;

const UNSEEN: u32 = u32::MAX;

/// Shortest walk lengths of each parity from one root, i.e. BFS distances
/// in the bipartite double cover.
#[derive(Clone, Debug)]
pub struct ParityDistances {
    dist: [Vec<u32>; 2],
}

impl ParityDistances {
    /// Shortest walk from the root to `v` whose length has the given parity.
    pub fn get(&self, v: usize, parity: usize) -> Option<usize> {
        match self.dist[parity & 1][v] {
            UNSEEN => None,
            d => Some(d as usize),
        }
    }

    /// Ordinary graph distance.
    pub fn distance(&self, v: usize) -> Option<usize> {
        match (self.get(v, 0), self.get(v, 1)) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

/// BFS over the double cover from `(root, even)`, stopping after `limit`
/// layers when given.
pub fn parity_distances(g: &SimpleGraph, root: usize, limit: Option<usize>) -> ParityDistances {
    let n = g.vertex_count();
    let mut dist = [vec![UNSEEN; n], vec![UNSEEN; n]];
    dist[0][root] = 0;
    let mut queue = VecDeque::from([(root, 0usize)]);
    while let Some((x, p)) = queue.pop_front() {
        let d = dist[p][x];
        if limit.is_some_and(|l| d as usize >= l) {
            continue;
        }
        let q = p ^ 1;
        for &y in g.neighbors(x) {
            if dist[q][y] == UNSEEN {
                dist[q][y] = d + 1;
                queue.push_back((y, q));
            }
        }
    }
    ParityDistances { dist }
}

/// Length of a shortest odd cycle, `None` for bipartite graphs.
///
/// From each root, the first BFS layer containing an edge between two
/// vertices of equal depth `d` closes an odd walk of length `2d + 1`. A
/// shortest odd cycle is isometric, so rooting at one of its vertices finds
/// its antipodal edge at depth exactly `(g - 1) / 2`; the minimum over roots
/// is therefore exact.
pub fn odd_girth_bfs(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![UNSEEN; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for s in 0..n {
        for &v in &order {
            dist[v] = UNSEEN;
        }
        order.clear();
        dist[s] = 0;
        order.push(s);
        let mut head = 0;
        'bfs: while head < order.len() {
            let x = order[head];
            head += 1;
            let d = dist[x] as usize;
            if 2 * d + 1 >= best {
                break;
            }
            for &y in g.neighbors(x) {
                if dist[y] == UNSEEN {
                    dist[y] = d as u32 + 1;
                    order.push(y);
                } else if dist[y] as usize == d {
                    best = 2 * d + 1;
                    break 'bfs;
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Length of a shortest cycle, `None` for forests.
pub fn girth_bfs(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut dist = vec![UNSEEN; n];
    let mut parent = vec![usize::MAX; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for s in 0..n {
        for &v in &order {
            dist[v] = UNSEEN;
        }
        order.clear();
        dist[s] = 0;
        parent[s] = usize::MAX;
        order.push(s);
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            let d = dist[x] as usize;
            if 2 * d >= best {
                break;
            }
            for &y in g.neighbors(x) {
                if dist[y] == UNSEEN {
                    dist[y] = d as u32 + 1;
                    parent[y] = x;
                    order.push(y);
                } else if parent[x] != y {
                    best = best.min(d + dist[y] as usize + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

pub fn is_bipartite(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if side[y] == u8::MAX {
                    side[y] = side[x] ^ 1;
                    stack.push(y);
                } else if side[y] == side[x] {
                    return false;
                }
            }
        }
    }
    true
}
