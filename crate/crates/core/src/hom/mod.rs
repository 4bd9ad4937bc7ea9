//! Homomorphism witnesses, exhaustive search and the explicit maps into
//! cycle powers, circulants and circular cliques.

mod chi;
mod embed;
mod maps;
mod search;

pub use chi::{chi_c_exact, fractions_up_to};
pub use embed::{clique_embedding, clique_embeddings, interleave_embedding, CliqueWitness, InterleaveReport};
pub use maps::{
    c5_coloring, circular_clique_hom, collapse_pet_to_pb, eta_cycle_power_coloring, pb_circular_coloring,
    pet_to_cycle_power, CircularColoring,
};
pub use search::{search_hom, Refutation, SearchOptions, SearchOutcome, SearchStats};

use serde::{Deserialize, Serialize};

use crate::error::{bail, Result};
use crate::graph::SimpleGraph;

/// Outcome of checking a vertex map edge by edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Hom,
    /// The first source edge (in `edges()` order) whose image is not an edge.
    Broken { edge: (usize, usize) },
}

impl Verdict {
    pub fn is_hom(&self) -> bool {
        matches!(self, Verdict::Hom)
    }
}

/// A map `V(source) -> V(target)`. `verified` is set only by
/// [`VertexMap::verify`] after every edge has been checked.
#[derive(Clone, Debug)]
pub struct VertexMap {
    source: SimpleGraph,
    target: SimpleGraph,
    assignment: Vec<usize>,
    verified: bool,
}

impl VertexMap {
    pub fn new(source: SimpleGraph, target: SimpleGraph, assignment: Vec<usize>) -> Result<Self> {
        if assignment.len() != source.vertex_count() {
            bail!(
                InvalidInput,
                "assignment has {} entries for {} source vertices",
                assignment.len(),
                source.vertex_count()
            );
        }
        if let Some(&bad) = assignment.iter().find(|&&t| t >= target.vertex_count()) {
            bail!(InvalidInput, "image {bad} is not a target vertex");
        }
        Ok(VertexMap { source, target, assignment, verified: false })
    }

    pub fn source(&self) -> &SimpleGraph {
        &self.source
    }

    pub fn target(&self) -> &SimpleGraph {
        &self.target
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn image(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn verify(&mut self) -> Verdict {
        let verdict = check_edges(&self.source, &self.target, &self.assignment);
        self.verified = verdict.is_hom();
        verdict
    }

    /// Verifies and turns a failure into an internal error, for
    /// constructions that are supposed to be unconditional.
    pub(crate) fn verified_or_internal(mut self, what: &str) -> Result<Self> {
        match self.verify() {
            Verdict::Hom => Ok(self),
            Verdict::Broken { edge: (a, b) } => bail!(
                Internal,
                "{what}: edge {}-{} maps to non-edge {}-{}",
                self.source.label(a),
                self.source.label(b),
                self.target.label(self.assignment[a]),
                self.target.label(self.assignment[b])
            ),
        }
    }

    /// `next ∘ self`. The middle graphs must have the same edge set.
    pub fn then(&self, next: &VertexMap) -> Result<VertexMap> {
        if !self.target.same_edges(&next.source) {
            bail!(InvalidInput, "composition through two different middle graphs");
        }
        let assignment = self.assignment.iter().map(|&m| next.assignment[m]).collect();
        let mut out = VertexMap::new(self.source.clone(), next.target.clone(), assignment)?;
        if self.verified && next.verified {
            out.verified = true;
        }
        Ok(out)
    }

    pub fn to_witness(&self) -> Witness {
        Witness {
            source: graph_name(&self.source),
            target: graph_name(&self.target),
            assignment: self.assignment.clone(),
            verified: self.verified,
        }
    }
}

/// Checks a raw assignment without building a [`VertexMap`].
pub fn verify_hom(source: &SimpleGraph, target: &SimpleGraph, assignment: &[usize]) -> Result<Verdict> {
    if assignment.len() != source.vertex_count() {
        bail!(InvalidInput, "assignment length {} != {}", assignment.len(), source.vertex_count());
    }
    if assignment.iter().any(|&t| t >= target.vertex_count()) {
        bail!(InvalidInput, "assignment leaves the target vertex range");
    }
    Ok(check_edges(source, target, assignment))
}

fn check_edges(source: &SimpleGraph, target: &SimpleGraph, f: &[usize]) -> Verdict {
    source
        .edges()
        .find(|&(a, b)| !target.has_edge(f[a], f[b]))
        .map_or(Verdict::Hom, |edge| Verdict::Broken { edge })
}

pub(crate) fn graph_name(g: &SimpleGraph) -> String {
    g.name().map_or_else(|| format!("graph on {} vertices", g.vertex_count()), str::to_string)
}

/// Serialized form of a [`VertexMap`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub source: String,
    pub target: String,
    pub assignment: Vec<usize>,
    pub verified: bool,
}

impl Witness {
    /// Rebuilds the map against concrete graphs and re-verifies it; the
    /// stored `verified` flag is not trusted.
    pub fn against(&self, source: &SimpleGraph, target: &SimpleGraph) -> Result<VertexMap> {
        let mut m = VertexMap::new(source.clone(), target.clone(), self.assignment.clone())?;
        m.verify();
        Ok(m)
    }
}
