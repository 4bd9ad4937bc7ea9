//! Immutable simple graphs with dense bit-row adjacency.
//!
//! Vertices are `0..vertex_count`. Adjacency is stored twice: as one bit row
//! per vertex (constant-time `has_edge`, cheap row intersections) and as
//! sorted neighbour lists for traversal.

mod builders;
mod canon;
mod cycles;
mod edgelist;
mod signature;
mod transform;

pub use builders::{make_circular_complete, make_complete, make_cycle, make_empty};
pub use canon::{canonical_code, nonisomorphic_graphs};
pub use cycles::{girth_bfs, is_bipartite, odd_girth_bfs, parity_distances, ParityDistances};
pub use edgelist::{read_edge_list, write_edge_list};
pub use signature::{cycle_signature, CycleSignature};
pub use transform::{complement, fractional_power, subdivide, walk_power};

use crate::error::{bail, Result};

/// Fixed-width bit set over `0..len`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn new(len: usize) -> Self {
        BitRow { words: vec![0; len.div_ceil(64)] }
    }

    pub fn full(len: usize) -> Self {
        let mut row = Self::new(len);
        for i in 0..len {
            row.insert(i);
        }
        row
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersects(&self, other: &BitRow) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// An undirected simple graph. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    rows: Vec<BitRow>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
    name: Option<String>,
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("name", &self.name)
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl SimpleGraph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(vertex_count);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn row(&self, v: usize) -> &BitRow {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        (0..self.vertex_count()).all(|v| self.degree(v) == degree)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.vertex_count() {
            bail!(
                InvalidInput,
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            );
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// True when every edge of `self` is an edge of `other` (same vertex set).
    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.vertex_count() == other.vertex_count() && self.edges().all(|(u, v)| other.has_edge(u, v))
    }

    /// Same vertex count and edge set; labels and names are ignored.
    pub fn same_edges(&self, other: &SimpleGraph) -> bool {
        self.vertex_count() == other.vertex_count() && self.rows == other.rows
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let x = comp[i];
                i += 1;
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Incremental construction; the only way to obtain a [`SimpleGraph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    rows: Vec<BitRow>,
}

impl GraphBuilder {
    pub fn new(vertex_count: usize) -> Self {
        GraphBuilder { rows: vec![BitRow::new(vertex_count); vertex_count] }
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    /// Adds `uv`; repeated edges are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.rows.len();
        if u >= n || v >= n {
            bail!(InvalidInput, "edge ({u}, {v}) has an endpoint outside 0..{n}");
        }
        if u == v {
            bail!(InvalidInput, "self-loop at vertex {u}");
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    /// Like [`add_edge`](Self::add_edge) for indices the caller has already
    /// reduced into range; loops are dropped silently.
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        if u != v {
            self.rows[u].insert(v);
            self.rows[v].insert(u);
        }
    }

    pub fn build(self) -> SimpleGraph {
        let adj: Vec<Vec<usize>> = self.rows.iter().map(|r| r.iter().collect()).collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        SimpleGraph { rows: self.rows, adj, edge_count, labels: None, name: None }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(SimpleGraph::from_edges(3, [(0, 0)]).is_err());
        assert!(SimpleGraph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = SimpleGraph::from_edges(3, [(0, 1), (1, 0), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn bitrow_iterates_across_words() {
        let mut r = BitRow::new(200);
        for i in [0, 63, 64, 130, 199] {
            r.insert(i);
        }
        assert_eq!(r.iter().collect::<Vec<_>>(), vec![0, 63, 64, 130, 199]);
        assert_eq!(r.count(), 5);
        r.remove(64);
        assert!(!r.contains(64));
        assert_eq!(BitRow::full(70).count(), 70);
    }

    #[test]
    fn components_are_ordered() {
        let g = SimpleGraph::from_edges(5, [(3, 4), (0, 2)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 2], vec![1], vec![3, 4]]);
    }
}
