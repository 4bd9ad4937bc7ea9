//! Generalized Petersen graphs `Pet(n,k)` and their relatives.
//!
//! Vertex convention shared by every module: indices `0..n` are the outer
//! vertices `u_0..u_{n-1}`, indices `n..2n` the inner vertices
//! `v_0..v_{n-1}`.

use serde::{Deserialize, Serialize};

use crate::error::{bail, Result};
use crate::graph::{walk_power, GraphBuilder, SimpleGraph, make_cycle};
use crate::rational::gcd;

/// Largest accepted `n`; keeps every product in the odd-girth arithmetic
/// well inside `i64`.
pub const MAX_N: usize = 1 << 24;

/// A validated pair with `2 < 2k <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct GPParams {
    n: usize,
    k: usize,
}

#[derive(Deserialize)]
struct RawParams {
    n: usize,
    k: usize,
}

impl TryFrom<RawParams> for GPParams {
    type Error = crate::Error;
    fn try_from(r: RawParams) -> Result<Self> {
        GPParams::new(r.n, r.k)
    }
}

impl GPParams {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k < 2 {
            bail!(InvalidParameter, "Pet({n},{k}): k must be at least 2");
        }
        if 2 * k > n {
            bail!(InvalidParameter, "Pet({n},{k}): requires 2k <= n");
        }
        if n > MAX_N {
            bail!(InvalidParameter, "Pet({n},{k}): n exceeds {MAX_N}");
        }
        Ok(GPParams { n, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Every valid pair with `n <= n_max`, ordered by `(n, k)`.
    pub fn all_up_to(n_max: usize) -> impl Iterator<Item = GPParams> {
        (4..=n_max).flat_map(|n| (2..=n / 2).map(move |k| GPParams { n, k }))
    }

    /// `Pet(2k,k)` has inner vertices of degree 2.
    pub fn is_cubic(&self) -> bool {
        self.n != 2 * self.k
    }

    pub fn is_bipartite(&self) -> bool {
        self.n % 2 == 0 && self.k % 2 == 1
    }

    pub fn gcd(&self) -> usize {
        gcd(self.n as i64, self.k as i64) as usize
    }

    pub fn outer(&self, i: i64) -> usize {
        i.rem_euclid(self.n as i64) as usize
    }

    pub fn inner(&self, i: i64) -> usize {
        self.n + i.rem_euclid(self.n as i64) as usize
    }

    /// `"u<i>"` / `"v<i>"`.
    pub fn vertex_label(&self, v: usize) -> String {
        if v < self.n {
            format!("u{v}")
        } else {
            format!("v{}", v - self.n)
        }
    }
}

impl std::fmt::Display for GPParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Pet({},{})", self.n, self.k)
    }
}

pub fn build_petersen(p: GPParams) -> SimpleGraph {
    let n = p.n as i64;
    let mut b = GraphBuilder::new(2 * p.n);
    for i in 0..n {
        b.add_edge_unchecked(p.outer(i), p.outer(i + 1));
        b.add_edge_unchecked(p.outer(i), p.inner(i));
        b.add_edge_unchecked(p.inner(i), p.inner(i + p.k as i64));
    }
    let labels = (0..2 * p.n).map(|v| p.vertex_label(v)).collect();
    b.build()
        .with_labels(labels)
        .expect("label count matches")
        .with_name(p.to_string())
}

/// `Pb(n,k)`: `Pet(n,k)` with each `u_i` identified with `v_i`, i.e. the
/// circulant with steps 1 and `k`. Vertex `i` is `x_i`.
pub fn build_pb(p: GPParams) -> SimpleGraph {
    let n = p.n as i64;
    let mut b = GraphBuilder::new(p.n);
    for i in 0..n {
        b.add_edge_unchecked(p.outer(i), p.outer(i + 1));
        b.add_edge_unchecked(p.outer(i), p.outer(i + p.k as i64));
    }
    b.build().with_name(format!("Pb({},{})", p.n, p.k))
}

/// `C_n^k` under walk-power semantics.
pub fn build_cycle_power_k(p: GPParams) -> SimpleGraph {
    let cycle = make_cycle(p.n).expect("n >= 4");
    walk_power(&cycle, p.k)
        .expect("k >= 2")
        .with_name(format!("C_{}^{}", p.n, p.k))
}

/// `Pet(n,k) ≅ Pet(n,m)` iff `m ≡ ±k` or `mk ≡ ±1 (mod n)`.
///
/// `m` may be any step in `1..n` (a step above `n/2` names the same graph
/// as `n - m`).
pub fn iso_congruence(n: usize, k: usize, m: usize) -> Result<bool> {
    GPParams::new(n, k)?;
    if m == 0 || m >= n {
        bail!(InvalidParameter, "step {m} is not a valid inner step for n = {n}");
    }
    if m.min(n - m) < 2 {
        bail!(InvalidParameter, "step {m} gives Pet({n},1), outside the domain");
    }
    let (n, k, m) = (n as i64, k as i64, m as i64);
    let pm = |a: i64, b: i64| (a - b).rem_euclid(n) == 0 || (a + b).rem_euclid(n) == 0;
    Ok(pm(m, k) || pm(m * k, 1))
}

const EDGE_TRANSITIVE: [(usize, usize); 7] = [(4, 1), (5, 2), (8, 3), (10, 2), (10, 3), (12, 5), (24, 5)];

/// Membership in the edge-transitive list. Pairs from the list that fall
/// outside the `2 < 2k <= n` domain report `false` with a warning.
pub fn edge_transitive(n: usize, k: usize) -> (bool, Option<String>) {
    let listed = EDGE_TRANSITIVE.contains(&(n, k));
    match GPParams::new(n, k) {
        Ok(_) => (listed, None),
        Err(_) if listed => (false, Some(format!("({n},{k}) lies outside the Pet(n,k) domain"))),
        Err(_) => (false, None),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyFlags {
    pub bipartite: bool,
    pub vertex_transitive: bool,
    pub cayley: bool,
    pub edge_transitive: bool,
    /// False only for `Pet(2k,k)`.
    pub cubic: bool,
}

pub fn property_flags(p: GPParams) -> PropertyFlags {
    let (n, k) = (p.n as i64, p.k as i64);
    let k2 = (k * k).rem_euclid(n);
    PropertyFlags {
        bipartite: p.is_bipartite(),
        vertex_transitive: (n, k) == (10, 2) || k2 == 1 || k2 == n - 1,
        cayley: k2 == 1 % n,
        edge_transitive: edge_transitive(p.n, p.k).0,
        cubic: p.is_cubic(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth_bfs, is_bipartite, make_complete, odd_girth_bfs};

    fn pet(n: usize, k: usize) -> SimpleGraph {
        build_petersen(GPParams::new(n, k).unwrap())
    }

    #[test]
    fn params_domain() {
        assert!(GPParams::new(5, 2).is_ok());
        assert!(GPParams::new(4, 2).is_ok());
        assert!(GPParams::new(5, 3).is_err());
        assert!(GPParams::new(8, 1).is_err());
        assert!(!GPParams::new(6, 3).unwrap().is_cubic());
        assert_eq!(GPParams::all_up_to(7).count(), 1 + 1 + 2 + 2);
        assert!(serde_json_roundtrip_rejects_invalid());
    }

    fn serde_json_roundtrip_rejects_invalid() -> bool {
        serde_json::from_str::<GPParams>(r#"{"n":5,"k":3}"#).is_err()
            && serde_json::from_str::<GPParams>(r#"{"n":5,"k":2}"#).unwrap() == GPParams::new(5, 2).unwrap()
    }

    #[test]
    fn petersen_graph() {
        let g = pet(5, 2);
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));
        assert!(g.is_regular(3));
        assert_eq!(odd_girth_bfs(&g), Some(5));
        assert_eq!(girth_bfs(&g), Some(5));
        assert_eq!(g.label(7), "v2");
    }

    #[test]
    fn degenerate_half_step() {
        for k in 2..6 {
            let g = pet(2 * k, k);
            assert!(!g.is_regular(3));
            assert_eq!(g.degree(2 * k), 2);
        }
        assert!(is_bipartite(&pet(6, 3)));
        assert_eq!(pet(6, 3).vertex_count(), 12);
    }

    #[test]
    fn pb_circulants() {
        let pb = |n, k| build_pb(GPParams::new(n, k).unwrap());
        assert!(pb(5, 2).same_edges(&make_complete(5)));
        let g = pb(7, 2);
        assert_eq!(g.edge_count(), 14);
        assert!(g.is_regular(4));
        assert_eq!(pb(6, 3).edge_count(), 9);
    }

    #[test]
    fn cycle_powers_have_odd_short_distances() {
        // oracle: circular distance d joins i and j iff d or n - d is odd and <= k
        for (n, k) in [(7, 3), (9, 3), (11, 5)] {
            let g = build_cycle_power_k(GPParams::new(n, k).unwrap());
            for i in 0..n {
                for j in i + 1..n {
                    let d = j - i;
                    let expect = (d % 2 == 1 && d <= k) || ((n - d) % 2 == 1 && n - d <= k);
                    assert_eq!(g.has_edge(i, j), expect, "C_{n}^{k} at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn congruences() {
        assert!(iso_congruence(8, 3, 3).unwrap());
        assert!(!iso_congruence(8, 3, 4).unwrap());
        assert!(iso_congruence(7, 2, 3).unwrap());
        // 2 * 4 ≡ -1 (mod 9)
        assert!(iso_congruence(9, 2, 4).unwrap());
        assert!(!iso_congruence(13, 2, 3).unwrap());
        // 5 ≡ -3 (mod 8), and also 15 ≡ -1
        assert!(iso_congruence(8, 3, 5).unwrap());
        assert!(iso_congruence(9, 2, 5).unwrap());
        assert!(iso_congruence(9, 2, 9).is_err());
        assert!(iso_congruence(9, 2, 8).is_err());
        assert!(iso_congruence(9, 1, 2).is_err());
    }

    #[test]
    fn flags() {
        let f = property_flags(GPParams::new(10, 2).unwrap());
        assert!(f.vertex_transitive && f.edge_transitive && !f.cayley);
        assert!(property_flags(GPParams::new(6, 3).unwrap()).bipartite);
        let f = property_flags(GPParams::new(24, 5).unwrap());
        assert!(f.cayley && f.vertex_transitive && f.edge_transitive);
        assert_eq!(edge_transitive(4, 1).0, false);
        assert!(edge_transitive(4, 1).1.is_some());
        assert!(!property_flags(GPParams::new(7, 2).unwrap()).vertex_transitive);
    }
}
