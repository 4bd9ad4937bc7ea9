use super::{GraphBuilder, SimpleGraph};
use crate::error::{bail, Result};

/// The cycle `C_n` with edges `i ~ i+1 (mod n)`.
pub fn make_cycle(n: usize) -> Result<SimpleGraph> {
    if n < 3 {
        bail!(InvalidParameter, "cycle length must be at least 3, got {n}");
    }
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        b.add_edge_unchecked(i, (i + 1) % n);
    }
    Ok(b.build().with_name(format!("C_{n}")))
}

pub fn make_complete(n: usize) -> SimpleGraph {
    let mut b = GraphBuilder::new(n);
    for i in 0..n {
        for j in i + 1..n {
            b.add_edge_unchecked(i, j);
        }
    }
    b.build().with_name(format!("K_{n}"))
}

pub fn make_empty(n: usize) -> SimpleGraph {
    GraphBuilder::new(n).build()
}

/// The circular complete graph `K_{p/q}`: `i ~ j` iff `q <= |i-j| <= p-q`.
pub fn make_circular_complete(p: usize, q: usize) -> Result<SimpleGraph> {
    if q < 1 || p < 2 * q {
        bail!(InvalidParameter, "K_{{{p}/{q}}} requires p >= 2q >= 2");
    }
    let mut b = GraphBuilder::new(p);
    for i in 0..p {
        for j in i + q..=(i + p - q).min(p - 1) {
            b.add_edge_unchecked(i, j);
        }
    }
    Ok(b.build().with_name(format!("K_{{{p}/{q}}}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::odd_girth_bfs;

    #[test]
    fn cycles() {
        assert!(make_cycle(2).is_err());
        let c3 = make_cycle(3).unwrap();
        assert_eq!(c3.edge_count(), 3);
        assert_eq!(odd_girth_bfs(&make_cycle(5).unwrap()), Some(5));
        assert_eq!(odd_girth_bfs(&make_cycle(6).unwrap()), None);
    }

    #[test]
    fn circular_complete_cases() {
        assert!(make_circular_complete(5, 3).is_err());
        assert!(make_circular_complete(5, 0).is_err());
        // K_{5/2}: each vertex adjacent to i±2, which is a 5-cycle
        let k52 = make_circular_complete(5, 2).unwrap();
        assert!(k52.is_regular(2));
        assert_eq!(k52.edge_count(), 5);
        assert_eq!(odd_girth_bfs(&k52), Some(5));
        assert_eq!(k52.components().len(), 1);
        // q = 1 is the complete graph
        assert!(make_circular_complete(6, 1).unwrap().same_edges(&make_complete(6)));
        // p = 2q is a perfect matching
        let m = make_circular_complete(6, 3).unwrap();
        assert_eq!(m.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 4), (2, 5)]);
    }
}
