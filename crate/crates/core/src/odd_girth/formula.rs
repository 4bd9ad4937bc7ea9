use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::nk;
use crate::error::{bail, Result};
use crate::petersen::GPParams;
use crate::rational::{gcd, Rational};

/// Intermediate sets of the closed-form odd girth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaTrace {
    pub ind_set: Vec<i64>,
    pub g_set: Vec<i64>,
    /// `n / gcd(n,k)` and `k + 3`.
    pub trivial_candidates: [i64; 2],
    pub chosen: i64,
    pub par_k: u8,
}

fn require_odd_cycle(p: GPParams) -> Result<()> {
    if p.is_bipartite() {
        bail!(Domain, "{p} is bipartite");
    }
    Ok(())
}

/// The admissible multipliers `t`, by parity case:
///
/// * `n`, `k` odd: odd `t` in `[1, min(2k/g, floor((k-1)^2/n) + 1)]`
/// * `n/g` odd, `k` even: `t` in `[1, min(2k/g, floor((k-1)^2/n))]`
/// * `n/g`, `k` even: `t` in `[1, min(k/g, floor((k-1)^2/n))]`
///
/// where `g = gcd(n,k)`.
pub fn ind_set(p: GPParams) -> Result<Vec<i64>> {
    require_odd_cycle(p)?;
    let (n, k) = nk(p);
    let g = gcd(n, k);
    let spread = (k - 1) * (k - 1) / n;
    let set = if k % 2 == 1 {
        let hi = (2 * k / g).min(spread + 1);
        (1..=hi).filter(|t| t % 2 == 1).collect()
    } else if (n / g) % 2 == 1 {
        (1..=(2 * k / g).min(spread)).collect()
    } else {
        (1..=(k / g).min(spread)).collect()
    };
    Ok(set)
}

/// `{ tn + (1-k) floor(tn/k) + 2, (1+k) ceil(tn/k) - tn + 2 : t in ind_set }`.
pub fn candidate_g_set(p: GPParams) -> Result<BTreeSet<i64>> {
    let (n, k) = nk(p);
    Ok(ind_set(p)?
        .into_iter()
        .flat_map(|t| {
            let tn = t * n;
            let floor = tn.div_euclid(k);
            let ceil = (tn + k - 1).div_euclid(k);
            [tn + (1 - k) * floor + 2, (1 + k) * ceil - tn + 2]
        })
        .collect())
}

/// Smallest odd value among `n/gcd(n,k)`, `k + 3` and the candidate set;
/// `None` exactly when `Pet(n,k)` is bipartite.
pub fn odd_girth_formula(p: GPParams) -> Option<FormulaTrace> {
    if p.is_bipartite() {
        return None;
    }
    let (n, k) = nk(p);
    let ind = ind_set(p).expect("non-bipartite");
    let g_set: Vec<i64> = candidate_g_set(p).expect("non-bipartite").into_iter().collect();
    let trivial = [n / gcd(n, k), k + 3];
    let chosen = trivial
        .iter()
        .chain(&g_set)
        .copied()
        .filter(|x| x % 2 == 1)
        .min()
        .expect("n/gcd is odd when k is odd, k + 3 is odd when k is even");
    Some(FormulaTrace { ind_set: ind, g_set, trivial_candidates: trivial, chosen, par_k: (k % 2) as u8 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GirthBounds {
    /// `max(n/k, min(gcd(n,k-1), gcd(n,k+1)) + 2)`
    pub lower: Rational,
    /// `(n/k) par(k) + k + 1`
    pub upper: Rational,
    /// The odd girth equals `k + 3`, where the bounds are not claimed.
    pub exempt_k_plus_3: bool,
}

impl GirthBounds {
    pub fn contains(&self, odd_girth: i64) -> bool {
        self.lower <= odd_girth && self.upper >= odd_girth
    }

    /// True when exempt or when the odd girth lies within the bounds.
    pub fn holds_for(&self, odd_girth: i64) -> bool {
        self.exempt_k_plus_3 || self.contains(odd_girth)
    }
}

pub fn girth_bounds(p: GPParams) -> Result<GirthBounds> {
    require_odd_cycle(p)?;
    let (n, k) = nk(p);
    let ratio = Rational::new(n, k);
    let gcd_term = Rational::from(gcd(n, k - 1).min(gcd(n, k + 1)) + 2);
    let lower = if ratio > gcd_term { ratio.clone() } else { gcd_term };
    let upper = if k % 2 == 1 { ratio + Rational::from(k + 1) } else { Rational::from(k + 1) };
    let g = odd_girth_formula(p).expect("non-bipartite").chosen;
    Ok(GirthBounds { lower, upper, exempt_k_plus_3: g == k + 3 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, k: usize) -> GPParams {
        GPParams::new(n, k).unwrap()
    }

    fn formula(n: usize, k: usize) -> Option<i64> {
        odd_girth_formula(params(n, k)).map(|t| t.chosen)
    }

    #[test]
    fn ind_and_g_sets() {
        assert_eq!(ind_set(params(11, 3)).unwrap(), vec![1]);
        assert_eq!(ind_set(params(5, 2)).unwrap(), Vec::<i64>::new());
        assert_eq!(ind_set(params(9, 3)).unwrap(), vec![1]);
        assert!(ind_set(params(6, 3)).is_err());
        assert_eq!(candidate_g_set(params(11, 3)).unwrap().into_iter().collect::<Vec<_>>(), vec![7]);
        assert_eq!(candidate_g_set(params(9, 3)).unwrap().into_iter().collect::<Vec<_>>(), vec![5]);
        assert!(candidate_g_set(params(5, 2)).unwrap().is_empty());
    }

    #[test]
    fn known_values() {
        for n in 5..60 {
            assert_eq!(formula(n, 2), Some(if n == 6 { 3 } else { 5 }), "Pet({n},2)");
        }
        assert_eq!(formula(11, 3), Some(7));
        assert_eq!(formula(13, 3), Some(7));
        assert_eq!(formula(9, 3), Some(3));
        assert_eq!(formula(6, 3), None);
    }

    #[test]
    fn trace_fields() {
        let t = odd_girth_formula(params(11, 3)).unwrap();
        assert_eq!(t.trivial_candidates, [11, 6]);
        assert_eq!(t.par_k, 1);
        assert_eq!(t.chosen, 7);
    }

    #[test]
    fn bounds_examples() {
        let b = girth_bounds(params(11, 3)).unwrap();
        assert_eq!(b.lower, Rational::new(11, 3));
        assert_eq!(b.upper, Rational::new(11, 3) + Rational::from(4));
        assert!(b.holds_for(7) && !b.exempt_k_plus_3);
        let b = girth_bounds(params(6, 2)).unwrap();
        assert!(!b.exempt_k_plus_3);
        assert_eq!(b.lower, Rational::from(3));
        assert!(b.contains(3));
        let b = girth_bounds(params(9, 3)).unwrap();
        assert_eq!(b.lower, Rational::from(3));
        assert_eq!(b.upper, Rational::from(7));
        assert!(girth_bounds(params(6, 3)).is_err());
        assert!(girth_bounds(params(7, 2)).unwrap().exempt_k_plus_3);
    }
}
