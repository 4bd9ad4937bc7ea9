//! Explicit maps out of `Pet(n,k)`: the collapse onto `Pb(n,k)`, the map
//! into `C_n^k`, circular colorings of both, and their composition into
//! `K_{5/2}`.

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::search::{search_hom, SearchOptions};
use super::{Verdict, VertexMap};
use crate::error::{bail, Error, Result};
use crate::graph::{make_circular_complete, SimpleGraph};
use crate::petersen::{build_cycle_power_k, build_pb, build_petersen, GPParams};
use crate::rational::Rational;

/// A `Z_modulus` labelling in which adjacent vertices sit at circular
/// distance at least `threshold`. Certifies `χ_c <= modulus / threshold`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct CircularColoring {
    modulus: usize,
    threshold: Rational,
    values: Vec<usize>,
}

#[derive(Deserialize)]
struct RawColoring {
    modulus: usize,
    threshold: Rational,
    values: Vec<usize>,
}

impl TryFrom<RawColoring> for CircularColoring {
    type Error = Error;
    fn try_from(r: RawColoring) -> Result<Self> {
        CircularColoring::new(r.modulus, r.threshold, r.values)
    }
}

impl CircularColoring {
    pub fn new(modulus: usize, threshold: Rational, values: Vec<usize>) -> Result<Self> {
        if modulus == 0 {
            bail!(InvalidParameter, "modulus must be positive");
        }
        if !threshold.is_positive() || threshold.clone() * Rational::from(2) > Rational::from(modulus as i64) {
            bail!(InvalidParameter, "threshold {threshold} outside (0, {modulus}/2]");
        }
        if let Some(v) = values.iter().find(|&&v| v >= modulus) {
            bail!(InvalidInput, "value {v} is not a residue mod {modulus}");
        }
        Ok(CircularColoring { modulus, threshold, values })
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    pub fn threshold(&self) -> &Rational {
        &self.threshold
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `modulus / threshold`.
    pub fn ratio(&self) -> Rational {
        Rational::from(self.modulus as i64) / self.threshold.clone()
    }

    pub fn circular_distance(&self, a: usize, b: usize) -> usize {
        let d = a.abs_diff(b) % self.modulus;
        d.min(self.modulus - d)
    }

    pub fn verify(&self, g: &SimpleGraph) -> Result<Verdict> {
        if self.values.len() != g.vertex_count() {
            bail!(InvalidInput, "{} values for {} vertices", self.values.len(), g.vertex_count());
        }
        let broken = g.edges().find(|&(a, b)| {
            let d = self.circular_distance(self.values[a], self.values[b]);
            Rational::from(d as i64) < self.threshold
        });
        Ok(broken.map_or(Verdict::Hom, |edge| Verdict::Broken { edge }))
    }

    /// With threshold `a/b`, scaling every value by `b` gives a
    /// homomorphism into `K_{bn/a}`.
    pub fn to_vertex_map(&self, g: &SimpleGraph) -> Result<VertexMap> {
        let (a, b) = small_fraction(&self.threshold)?;
        let target = make_circular_complete(b * self.modulus, a)?;
        let values = self.values.iter().map(|&v| v * b).collect();
        let map = VertexMap::new(g.clone(), target, values)?;
        map.verified_or_internal("scaled circular coloring")
    }
}

fn small_fraction(r: &Rational) -> Result<(usize, usize)> {
    match (r.numer().to_usize(), r.denom().to_usize()) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => bail!(InvalidParameter, "{r} does not fit machine integers"),
    }
}

fn mod_inverse(a: i64, n: i64) -> Option<i64> {
    let e = a.rem_euclid(n).extended_gcd(&n);
    (e.gcd == 1).then(|| e.x.rem_euclid(n))
}

/// `v_i -> x_i`, `u_{i+1} -> x_i`: a homomorphism `Pet(n,k) -> Pb(n,k)`.
pub fn collapse_pet_to_pb(p: GPParams) -> Result<VertexMap> {
    let n = p.n();
    let assignment = (0..n).map(|i| (i + n - 1) % n).chain(0..n).collect();
    VertexMap::new(build_petersen(p), build_pb(p), assignment)?.verified_or_internal("collapse onto Pb(n,k)")
}

/// The same vertex map, read as `Pet(n,k) -> C_n^k` for odd `n`, `k`.
pub fn pet_to_cycle_power(p: GPParams) -> Result<VertexMap> {
    let (n, k) = (p.n(), p.k());
    if n % 2 == 0 || k % 2 == 0 {
        bail!(Domain, "requires n and k odd");
    }
    if n <= 2 * k + 1 {
        bail!(Domain, "requires n > 2k+1");
    }
    let assignment = (0..n).map(|i| (i + n - 1) % n).chain(0..n).collect();
    VertexMap::new(build_petersen(p), build_cycle_power_k(p), assignment)?.verified_or_internal("map into C_n^k")
}

/// Coloring of `Pb(n,k)` by `x_j -> j (k-1)^{-1} mod n` with threshold
/// `(n-4)(k-2) / (2(k-1))`.
pub fn pb_circular_coloring(p: GPParams) -> Result<CircularColoring> {
    let (n, k) = (p.n() as i64, p.k() as i64);
    if n % 2 == 0 || k % 2 == 1 {
        bail!(Domain, "requires n odd and k even");
    }
    if k == 2 {
        bail!(Domain, "requires k >= 4 (k = 2 gives threshold 0)");
    }
    let m = k - 1;
    let r = n.rem_euclid(m);
    if r != 2 % m && r != (-2i64).rem_euclid(m) {
        bail!(Domain, "requires n ≡ ±2 (mod k−1)");
    }
    let inv = mod_inverse(m, n).expect("gcd(n, k-1) = 1 when n ≡ ±2 and n is odd");
    // Mirror the labelling when n ≡ +2; distances are unchanged.
    let c = if r == (-2i64).rem_euclid(m) { inv } else { (n - inv) % n };
    let values = (0..n).map(|j| (j * c).rem_euclid(n) as usize).collect();
    let threshold = Rational::new((n - 4) * (k - 2), 2 * (k - 1));
    let coloring = CircularColoring::new(n as usize, threshold, values)?;
    let pb = build_pb(p);
    if let Verdict::Broken { edge: (a, b) } = coloring.verify(&pb)? {
        bail!(Internal, "Pb({n},{k}) coloring fails on edge x_{a} x_{b}");
    }
    Ok(coloring)
}

/// Coloring of `C_n^k` by `x_i -> i/2 mod n` with threshold `(n-k)/2`.
pub fn eta_cycle_power_coloring(p: GPParams) -> Result<CircularColoring> {
    let (n, k) = (p.n(), p.k());
    if n % 2 == 0 || k % 2 == 0 {
        bail!(Domain, "requires n and k odd");
    }
    if n <= 2 * k + 1 {
        bail!(Domain, "requires n > 2k+1");
    }
    let values = (0..n).map(|i| if i % 2 == 0 { i / 2 } else { (n + i) / 2 }).collect();
    let coloring = CircularColoring::new(n, Rational::from(((n - k) / 2) as i64), values)?;
    if let Verdict::Broken { edge: (a, b) } = coloring.verify(&build_cycle_power_k(p))? {
        bail!(Internal, "C_{n}^{k} coloring fails on edge x_{a} x_{b}");
    }
    Ok(coloring)
}

/// A homomorphism `K_{p/q} -> K_{p2/q2}` for `p/q <= p2/q2`, via
/// `i -> floor(i p2 / p)` with a search fallback.
pub fn circular_clique_hom(p: usize, q: usize, p2: usize, q2: usize) -> Result<VertexMap> {
    let source = make_circular_complete(p, q)?;
    let target = make_circular_complete(p2, q2)?;
    if p * q2 > p2 * q {
        bail!(Domain, "K_{{{p}/{q}}} does not map to K_{{{p2}/{q2}}}: {p}/{q} > {p2}/{q2}");
    }
    let floor_map = (0..p).map(|i| i * p2 / p).collect();
    let mut map = VertexMap::new(source.clone(), target.clone(), floor_map)?;
    if map.verify().is_hom() {
        return Ok(map);
    }
    match search_hom(&source, &target, &SearchOptions::default().transitive()).into_map() {
        Some(m) => Ok(m),
        None => bail!(Internal, "no map K_{{{p}/{q}}} -> K_{{{p2}/{q2}}} found"),
    }
}

/// An explicit homomorphism `Pet(n,k) -> K_{5/2}` (a relabelled `C_5`).
///
/// Odd `n, k` with `n >= 5k` go through `C_n^k` and its `i/2` coloring;
/// odd `n`, even `k` with `n ≡ ±2 (mod k-1)` and a small enough
/// `Pb(n,k)` ratio go through the collapse onto `Pb(n,k)`.
pub fn c5_coloring(p: GPParams) -> Result<VertexMap> {
    let (n, k) = (p.n(), p.k());
    let five_halves = Rational::new(5, 2);
    let to_c5 = |m: VertexMap| -> Result<VertexMap> {
        let t = m.target();
        let (tp, tq) = circular_parameters(t)?;
        m.then(&circular_clique_hom(tp, tq, 5, 2)?)
    };
    let map = if n % 2 == 1 && k % 2 == 1 {
        if n < 5 * k {
            bail!(Domain, "requires n >= 5k for odd n, k (2n/(n-k) = {} > 5/2)", Rational::new(2 * n as i64, (n - k) as i64));
        }
        let pet_cnk = pet_to_cycle_power(p)?;
        let eta = eta_cycle_power_coloring(p)?.to_vertex_map(pet_cnk.target())?;
        to_c5(pet_cnk.then(&eta)?)?
    } else if n % 2 == 1 {
        let coloring = pb_circular_coloring(p)?;
        let ratio = coloring.ratio();
        if ratio > five_halves {
            bail!(Domain, "requires 2n(k−1)/((n−4)(k−2)) <= 5/2, got {ratio}");
        }
        let collapse = collapse_pet_to_pb(p)?;
        let circ = coloring.to_vertex_map(collapse.target())?;
        to_c5(collapse.then(&circ)?)?
    } else {
        bail!(Domain, "requires n odd");
    };
    map.verified_or_internal("C_5 coloring")
}

/// Recovers `(p, q)` from a graph built by `make_circular_complete`.
fn circular_parameters(g: &SimpleGraph) -> Result<(usize, usize)> {
    let p = g.vertex_count();
    match (1..=p / 2).find(|&d| g.has_edge(0, d)) {
        Some(q) => Ok((p, q)),
        None => bail!(InvalidInput, "not a circular clique"),
    }
}
