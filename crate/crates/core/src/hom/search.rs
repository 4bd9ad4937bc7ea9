//! Backtracking homomorphism search over bitset domains with arc
//! consistency.

use serde::{Deserialize, Serialize};

use super::{Verdict, VertexMap};
use crate::graph::{odd_girth_bfs, BitRow, SimpleGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of value trials before giving up.
    pub budget: u64,
    /// Require distinct images.
    pub injective: bool,
    /// The target is vertex-transitive, so one source vertex may be pinned
    /// to target vertex 0. Only set this for targets that really are.
    pub vertex_transitive_target: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: 50_000_000, injective: false, vertex_transitive_target: false }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions { budget, ..Default::default() }
    }

    pub fn transitive(mut self) -> Self {
        self.vertex_transitive_target = true;
        self
    }

    pub fn injective(mut self) -> Self {
        self.injective = true;
        self
    }
}

/// Why no homomorphism exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Refutation {
    EdgelessTarget,
    BipartiteTarget,
    OddGirth { source: usize, target: usize },
    TooFewTargetVertices,
    /// The whole search tree was explored.
    Exhausted,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    Found(VertexMap, SearchStats),
    None(Refutation, SearchStats),
    BudgetExhausted(SearchStats),
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, SearchOutcome::Found(..))
    }

    pub fn is_none(&self) -> bool {
        matches!(self, SearchOutcome::None(..))
    }

    pub fn stats(&self) -> SearchStats {
        match self {
            SearchOutcome::Found(_, s) | SearchOutcome::None(_, s) | SearchOutcome::BudgetExhausted(s) => *s,
        }
    }

    pub fn into_map(self) -> Option<VertexMap> {
        match self {
            SearchOutcome::Found(m, _) => Some(m),
            _ => None,
        }
    }
}

/// Decides whether `g -> h` exists. `None` is only returned after a
/// preflight obstruction or a complete search; running out of budget is
/// reported separately.
///
/// Variables are chosen by smallest domain, then largest degree, then
/// lowest index; values are tried in ascending order.
pub fn search_hom(g: &SimpleGraph, h: &SimpleGraph, opts: &SearchOptions) -> SearchOutcome {
    let none = |r| SearchOutcome::None(r, SearchStats::default());
    if opts.injective && g.vertex_count() > h.vertex_count() {
        return none(Refutation::TooFewTargetVertices);
    }
    if g.edge_count() > 0 && h.edge_count() == 0 {
        return none(Refutation::EdgelessTarget);
    }
    if let Some(og) = odd_girth_bfs(g) {
        match odd_girth_bfs(h) {
            None => return none(Refutation::BipartiteTarget),
            Some(oh) if oh > og => return none(Refutation::OddGirth { source: og, target: oh }),
            _ => {}
        }
    }

    let mut s = Solver { g, h, opts, nodes: 0, assigned: vec![false; g.vertex_count()], solution: None };
    let mut doms = s.initial_domains();
    let mut queue: Vec<usize> = (0..g.vertex_count()).collect();
    if opts.vertex_transitive_target && g.vertex_count() > 0 && h.vertex_count() > 0 {
        let pin = (0..g.vertex_count()).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
        let keep = doms[pin].contains(0);
        doms[pin] = BitRow::new(h.vertex_count());
        if keep {
            doms[pin].insert(0);
        }
    }
    let result = if doms.iter().any(BitRow::is_empty) || !s.propagate(&mut doms, &mut queue) {
        Ok(false)
    } else {
        s.solve(doms)
    };
    let stats = SearchStats { nodes: s.nodes };
    match result {
        Err(Exhausted) => SearchOutcome::BudgetExhausted(stats),
        Ok(false) => SearchOutcome::None(Refutation::Exhausted, stats),
        Ok(true) => {
            let assignment = s.solution.take().expect("solution recorded");
            let mut map = VertexMap::new(g.clone(), h.clone(), assignment).expect("images in range");
            assert_eq!(map.verify(), Verdict::Hom, "search produced a non-homomorphism");
            SearchOutcome::Found(map, stats)
        }
    }
}

struct Exhausted;

struct Solver<'a> {
    g: &'a SimpleGraph,
    h: &'a SimpleGraph,
    opts: &'a SearchOptions,
    nodes: u64,
    assigned: Vec<bool>,
    solution: Option<Vec<usize>>,
}

impl Solver<'_> {
    fn initial_domains(&self) -> Vec<BitRow> {
        let m = self.h.vertex_count();
        let mut non_isolated = BitRow::new(m);
        for b in (0..m).filter(|&b| self.h.degree(b) > 0) {
            non_isolated.insert(b);
        }
        (0..self.g.vertex_count())
            .map(|v| if self.g.degree(v) > 0 { non_isolated.clone() } else { BitRow::full(m) })
            .collect()
    }

    /// AC-3 style: the domain of `y` shrinks to the neighbourhood of the
    /// domain of each neighbour `z`. Returns false on a wipe-out.
    fn propagate(&self, doms: &mut [BitRow], queue: &mut Vec<usize>) -> bool {
        let m = self.h.vertex_count();
        let mut queued = vec![false; doms.len()];
        for &z in queue.iter() {
            queued[z] = true;
        }
        while let Some(z) = queue.pop() {
            queued[z] = false;
            let mut support = BitRow::new(m);
            for c in doms[z].iter() {
                support.union_with(self.h.row(c));
            }
            for &y in self.g.neighbors(z) {
                let before = doms[y].count();
                doms[y].intersect_with(&support);
                let after = doms[y].count();
                if after == 0 {
                    return false;
                }
                if after < before && !queued[y] {
                    queued[y] = true;
                    queue.push(y);
                }
            }
        }
        true
    }

    fn pick(&self, doms: &[BitRow]) -> Option<usize> {
        (0..doms.len())
            .filter(|&v| !self.assigned[v])
            .min_by_key(|&v| (doms[v].count(), std::cmp::Reverse(self.g.degree(v)), v))
    }

    fn solve(&mut self, doms: Vec<BitRow>) -> Result<bool, Exhausted> {
        let Some(x) = self.pick(&doms) else {
            self.solution = Some(doms.iter().map(|d| d.first().expect("non-empty")).collect());
            return Ok(true);
        };
        self.assigned[x] = true;
        for a in doms[x].iter() {
            self.nodes += 1;
            if self.nodes > self.opts.budget {
                self.assigned[x] = false;
                return Err(Exhausted);
            }
            let mut next = doms.clone();
            next[x] = BitRow::new(self.h.vertex_count());
            next[x].insert(a);
            let mut queue = vec![x];
            let mut ok = true;
            if self.opts.injective {
                for y in 0..next.len() {
                    if y != x && next[y].contains(a) {
                        next[y].remove(a);
                        if next[y].is_empty() {
                            ok = false;
                            break;
                        }
                        queue.push(y);
                    }
                }
            }
            if ok && self.propagate(&mut next, &mut queue) && self.solve(next)? {
                return Ok(true);
            }
        }
        self.assigned[x] = false;
        Ok(false)
    }
}
