//! Exact lower and upper bounds on `χ_c(Pet(n,k))` and a per-instance
//! report that collects them.

use serde::{Deserialize, Serialize};

use crate::error::{bail, Result};
use crate::odd_girth::{ip_enumerate, IpEnumeration};
use crate::petersen::GPParams;
use crate::rational::Rational;

fn rat(num: usize, den: usize) -> Rational {
    Rational::new(num as i64, den as i64)
}

/// `2 + 4r / (4r² + 2r + 1)` for odd `n, k` when no optimal point of the
/// program is trivial; `r` comes from the optimal objective `2r + 1`.
pub fn lower_compk_a(p: GPParams) -> Option<Rational> {
    compk_a_from(p, &ip_enumerate(p))
}

fn compk_a_from(p: GPParams, e: &IpEnumeration) -> Option<Rational> {
    if p.n() % 2 == 0 || p.k() % 2 == 0 || e.trivial_optimum {
        return None;
    }
    let r = e.best?.r;
    Some(Rational::from(2) + Rational::new(4 * r, 4 * r * r + 2 * r + 1))
}

/// `2n(K+1) / (Kn + floor(2n/(2K+2)))` for even inner step `K`, without
/// checking the odd-girth hypothesis. `None` for odd steps.
pub fn compk_b_value(p: GPParams) -> Option<Rational> {
    let (n, k) = (p.n(), p.k());
    if k % 2 == 1 {
        return None;
    }
    Some(rat(2 * n * (k + 1), k * n + 2 * n / (2 * k + 2)))
}

/// [`compk_b_value`] when the odd girth equals `K + 3`.
pub fn lower_compk_b(p: GPParams) -> Option<Rational> {
    compk_b_from(p, odd_girth_of(&ip_enumerate(p)))
}

fn compk_b_from(p: GPParams, odd_girth: Option<usize>) -> Option<Rational> {
    (odd_girth == Some(p.k() + 3)).then(|| compk_b_value(p)).flatten()
}

fn odd_girth_of(e: &IpEnumeration) -> Option<usize> {
    let opt = e.optimum()? as usize;
    Some(if e.trivial_optimum { opt } else { opt + 2 })
}

/// `2 + 2/(K+1)` for even inner step `K`.
pub fn lower_even_step(p: GPParams) -> Result<Rational> {
    if p.k() % 2 == 1 {
        bail!(Domain, "requires an even inner step, got {}", p.k());
    }
    Ok(Rational::from(2) + rat(2, p.k() + 1))
}

/// For even step `K`: `y = n mod (K+2)` satisfies `0 < y <= K + 1 - n/(K+2)`.
pub fn proposition_condition(p: GPParams) -> Result<bool> {
    let (n, k) = (p.n(), p.k());
    if k % 2 == 1 {
        bail!(Domain, "requires an even inner step, got {k}");
    }
    let y = n % (k + 2);
    Ok(y > 0 && Rational::from(y as i64) <= Rational::from((k + 1) as i64) - rat(n, k + 2))
}

/// `2n(k-1) / ((n-4)(k-2))` for odd `n`, even `k >= 4`, `n ≡ ±2 (mod k-1)`.
pub fn upper_even(p: GPParams) -> Option<Rational> {
    let (n, k) = (p.n(), p.k());
    if n % 2 == 0 || k % 2 == 1 || k < 4 {
        return None;
    }
    let m = k - 1;
    if n % m != 2 % m && n % m != m - 2 % m {
        return None;
    }
    Some(rat(2 * n * (k - 1), (n - 4) * (k - 2)))
}

/// `2n / (n-k)` for odd `n, k` with `n > 2k + 1`.
pub fn upper_odd(p: GPParams) -> Option<Rational> {
    let (n, k) = (p.n(), p.k());
    (n % 2 == 1 && k % 2 == 1 && n > 2 * k + 1).then(|| rat(2 * n, n - k))
}

/// `χ_c` of the `(2s+1)`-subdivision of a graph with `χ_c = chi > 2`:
/// `(2s+1) chi / (s chi + 1)`.
pub fn chi_c_subdivision_formula(chi: &Rational, s: u64) -> Result<Rational> {
    if *chi <= 2 {
        bail!(Domain, "requires chi > 2, got {chi}");
    }
    let s = Rational::from(s as i64);
    let two_s_plus_one = s.clone() * Rational::from(2) + Rational::from(1);
    Ok(two_s_plus_one * chi.clone() / (s * chi.clone() + Rational::from(1)))
}

/// `χ_c` of the complement of `K_{p/q}`: `p / floor(p/q)`.
pub fn chi_c_complement_circular(p: usize, q: usize) -> Result<Rational> {
    if q == 0 || p < 2 * q {
        bail!(Domain, "requires p/q >= 2");
    }
    if q == 1 {
        bail!(Domain, "the complement of K_{p} has no edges");
    }
    Ok(rat(p, p / q))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundEntry {
    pub name: String,
    pub kind: BoundKind,
    /// Present whenever the formula is defined, even if its hypotheses fail.
    pub value: Option<Rational>,
    pub applicable: bool,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub n: usize,
    pub k: usize,
    pub odd_girth: usize,
    pub bounds: Vec<BoundEntry>,
    pub best_lower: Option<Rational>,
    pub best_upper: Rational,
    /// `best_upper <= 5/2`, i.e. a homomorphism to `C_5` is certified.
    pub c5_colorable: bool,
}

impl BoundReport {
    pub fn applicable(&self, kind: BoundKind) -> impl Iterator<Item = &BoundEntry> {
        self.bounds.iter().filter(move |b| b.kind == kind && b.applicable)
    }

    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn is_consistent(&self) -> bool {
        self.best_lower.as_ref().is_none_or(|l| *l <= self.best_upper)
    }
}

/// Every bound with its applicability for one non-bipartite instance.
pub fn bound_report(p: GPParams) -> Result<BoundReport> {
    if p.is_bipartite() {
        bail!(Domain, "{p} is bipartite");
    }
    let (n, k) = (p.n(), p.k());
    let e = ip_enumerate(p);
    let odd_girth = odd_girth_of(&e).expect("non-bipartite");
    let both_odd = n % 2 == 1 && k % 2 == 1;
    let even_step = k % 2 == 0;

    let mut bounds = Vec::new();
    let mut push = |name: &str, kind, value: Option<Rational>, applicable: bool, reason: String| {
        bounds.push(BoundEntry { name: name.to_string(), kind, value, applicable, reason });
    };

    let a = compk_a_from(p, &e);
    let reason = match (both_odd, e.trivial_optimum) {
        (false, _) => "requires n and k odd".to_string(),
        (true, true) => "the program has a trivial optimal solution".to_string(),
        (true, false) => format!("r = {}", e.best.expect("feasible").r),
    };
    push("compk_a", BoundKind::Lower, a.clone(), a.is_some(), reason);

    let b = compk_b_from(p, Some(odd_girth));
    let reason = if !even_step {
        "requires an even inner step".to_string()
    } else if b.is_none() {
        format!("odd girth {odd_girth} != k+3 = {}", k + 3)
    } else {
        format!("odd girth {odd_girth} = k+3")
    };
    push("compk_b", BoundKind::Lower, compk_b_value(p), b.is_some(), reason);

    let g = lower_even_step(p).ok();
    let reason = if even_step { format!("n > {k}") } else { "requires an even inner step".to_string() };
    push("even_step", BoundKind::Lower, g.clone(), g.is_some(), reason);

    let ue = upper_even(p);
    let reason = if ue.is_some() {
        format!("n odd, k even, n ≡ ±2 (mod {})", k.saturating_sub(1))
    } else {
        "requires n odd, k >= 4 even and n ≡ ±2 (mod k−1)".to_string()
    };
    push("upper_even", BoundKind::Upper, ue.clone(), ue.is_some(), reason);

    let uo = upper_odd(p);
    let reason = if uo.is_some() { "n, k odd and n > 2k+1" } else { "requires n, k odd and n > 2k+1" };
    push("upper_odd", BoundKind::Upper, uo.clone(), uo.is_some(), reason.to_string());

    push("three_chromatic", BoundKind::Upper, Some(Rational::from(3)), true, "non-bipartite Pet(n,k) is 3-colorable".to_string());

    let best_lower = bounds.iter().filter(|b| b.kind == BoundKind::Lower && b.applicable).filter_map(|b| b.value.clone()).max();
    let best_upper = bounds
        .iter()
        .filter(|b| b.kind == BoundKind::Upper && b.applicable)
        .filter_map(|b| b.value.clone())
        .min()
        .expect("the 3-chromatic bound is always present");
    Ok(BoundReport {
        n,
        k,
        odd_girth,
        c5_colorable: best_upper <= Rational::new(5, 2),
        bounds,
        best_lower,
        best_upper,
    })
}
