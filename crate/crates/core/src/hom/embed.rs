//! Cliques and complements of circular cliques inside walk powers of
//! `Pet(n,k)`.

use serde::{Deserialize, Serialize};

use crate::error::{bail, Result};
use crate::graph::{parity_distances, walk_power, SimpleGraph};
use crate::odd_girth::{ip_enumerate, IpSolution};
use crate::petersen::{build_petersen, GPParams};
use crate::rational::Rational;

/// A vertex set claimed to be a clique of `host`.
#[derive(Clone, Debug, Serialize)]
pub struct CliqueWitness {
    #[serde(skip)]
    pub host: SimpleGraph,
    pub host_name: String,
    pub power: usize,
    pub solution: IpSolution,
    pub vertices: Vec<usize>,
    pub labels: Vec<String>,
    /// Pairs of `vertices` that are not adjacent in `host`.
    pub missing_pairs: Vec<(usize, usize)>,
    pub verified: bool,
}

impl CliqueWitness {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// The `4r+2` vertices `u_0..u_u, v_0..v_u` together with `u_j, v_j` for
/// `j = u + h sgn(v) k`, `1 <= h < |v|`, checked pairwise in
/// `Pet(n,k)^{2r+1}`.
///
/// Requires that no optimal point of the program is trivial and that `sol`
/// is one of the optimal points with `t != 0`.
pub fn clique_embedding(p: GPParams, sol: &IpSolution) -> Result<CliqueWitness> {
    let e = ip_enumerate(p);
    if !e.is_feasible() {
        bail!(Domain, "{p} is bipartite");
    }
    if e.trivial_optimum {
        bail!(Domain, "{p}: the program has a trivial optimal solution");
    }
    if !e.optima.contains(sol) {
        bail!(InvalidInput, "({}, {}, t={}) is not an optimal point for {p}", sol.u, sol.v, sol.t);
    }
    if sol.t == 0 {
        bail!(Domain, "the (k, -1, t=0) optimum has no clique construction");
    }
    let power = sol.objective as usize;
    let host = walk_power(&build_petersen(p), power)?;
    let step = sol.v.signum() * p.k() as i64;
    let mut vertices = Vec::with_capacity(2 * power);
    for i in 0..=sol.u {
        vertices.extend([p.outer(i), p.inner(i)]);
    }
    for h in 1..sol.v.abs() {
        let j = sol.u + h * step;
        vertices.extend([p.outer(j), p.inner(j)]);
    }
    let mut missing_pairs = Vec::new();
    for (a, &x) in vertices.iter().enumerate() {
        for &y in &vertices[a + 1..] {
            if !host.has_edge(x, y) {
                missing_pairs.push((x, y));
            }
        }
    }
    let labels = vertices.iter().map(|&v| p.vertex_label(v)).collect();
    Ok(CliqueWitness {
        host_name: format!("{p}^{power}"),
        host,
        power,
        solution: *sol,
        verified: missing_pairs.is_empty(),
        vertices,
        labels,
        missing_pairs,
    })
}

/// [`clique_embedding`] for every optimal point with `t != 0`.
pub fn clique_embeddings(p: GPParams) -> Result<Vec<CliqueWitness>> {
    let e = ip_enumerate(p);
    let forms: Vec<_> = e.nontrivial_t_forms().copied().collect();
    if e.is_feasible() && !e.trivial_optimum && forms.is_empty() {
        bail!(Domain, "{p}: no optimal point with t != 0");
    }
    forms.iter().map(|s| clique_embedding(p, s)).collect()
}

/// Adjacency of `x_i, x_{i+l}` in `Pet(n,K)^{K+1}` for the ordering
/// `x_{2i} = u_i`, `x_{2i+1} = v_i`, with `K` the (even) inner step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InterleaveReport {
    pub params: GPParams,
    pub power: usize,
    /// Offsets `1..q` were checked.
    pub q: usize,
    /// Largest `L` with every offset `l <= L` adjacent for every `i`.
    pub max_verified_offset: usize,
    /// `(i, l)` pairs with `l < q` that are not adjacent.
    pub failures: Vec<(usize, usize)>,
    pub verified: bool,
    /// `2n / q`: the embedded graph is the complement of this circular
    /// clique when `verified`.
    pub complement_of: Rational,
}

pub fn interleave_embedding(p: GPParams, q: Option<usize>) -> Result<InterleaveReport> {
    let (n, k) = (p.n(), p.k());
    if k % 2 == 1 {
        bail!(Domain, "requires an even inner step, got {k}");
    }
    let q = q.unwrap_or(2 * k + 2);
    if q < 2 || q > 2 * n {
        bail!(InvalidParameter, "q must lie in [2, 2n] = [2, {}]", 2 * n);
    }
    let power = k + 1;
    let g = build_petersen(p);
    let order: Vec<usize> = (0..n).flat_map(|i| [i, n + i]).collect();
    let m = order.len();
    // adjacent[i][l]: x_i ~ x_{i+l} in the power
    let adjacent: Vec<Vec<bool>> = order
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let d = parity_distances(&g, x, Some(power));
            (0..m).map(|l| l > 0 && d.get(order[(i + l) % m], 1).is_some_and(|len| len <= power)).collect()
        })
        .collect();
    let mut failures = Vec::new();
    for l in 1..q {
        for (i, row) in adjacent.iter().enumerate() {
            if !row[l] {
                failures.push((i, l));
            }
        }
    }
    let max_verified_offset = (1..m).take_while(|&l| adjacent.iter().all(|row| row[l])).last().unwrap_or(0);
    Ok(InterleaveReport {
        params: p,
        power,
        q,
        max_verified_offset,
        verified: failures.is_empty(),
        failures,
        complement_of: Rational::new(2 * n as i64, q as i64),
    })
}
