//! Exact circular chromatic number by search over circular cliques.

use super::search::{search_hom, SearchOptions, SearchOutcome};
use crate::error::{bail, Result};
use crate::graph::{is_bipartite, make_circular_complete, SimpleGraph};
use crate::rational::{gcd, Rational};

/// Reduced fractions `p/q >= 2` with `p <= p_max`, in increasing order.
pub fn fractions_up_to(p_max: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (2..=p_max)
        .flat_map(|p| (1..=p / 2).map(move |q| (p, q)))
        .filter(|&(p, q)| gcd(p as i64, q as i64) == 1)
        .collect();
    out.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    out
}

/// Smallest `p/q` with `p <= p_max` such that `g -> K_{p/q}`.
///
/// The optimum always has a numerator at most `|V(g)|`, so `p_max >=
/// |V(g)|` gives the exact value. Existence of a map is monotone in the
/// ratio, which allows a binary search over the ordered fractions. Each
/// probe gets `budget` search nodes.
pub fn chi_c_exact(g: &SimpleGraph, p_max: usize, budget: u64) -> Result<Rational> {
    if g.edge_count() == 0 || is_bipartite(g) {
        bail!(Domain, "requires a non-bipartite graph");
    }
    let fr = fractions_up_to(p_max);
    let opts = SearchOptions::with_budget(budget).transitive();
    let maps_to = |i: usize| -> Result<bool> {
        let (p, q) = fr[i];
        let target = make_circular_complete(p, q)?;
        match search_hom(g, &target, &opts) {
            SearchOutcome::Found(..) => Ok(true),
            SearchOutcome::None(..) => Ok(false),
            SearchOutcome::BudgetExhausted(s) => {
                bail!(BudgetExhausted, "deciding g -> K_{{{p}/{q}}} after {} nodes", s.nodes)
            }
        }
    };
    let Some(top) = fr.len().checked_sub(1) else {
        bail!(Domain, "p_max = {p_max} admits no circular clique");
    };
    if !maps_to(top)? {
        bail!(Domain, "chromatic number exceeds p_max = {p_max}");
    }
    // invariant: fr[hi] works, everything below lo fails
    let (mut lo, mut hi) = (0, top);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if maps_to(mid)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let (p, q) = fr[hi];
    Ok(Rational::new(p as i64, q as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{make_complete, make_cycle};
    use crate::petersen::{build_petersen, GPParams};

    #[test]
    fn ordered_fractions() {
        assert_eq!(fractions_up_to(5), vec![(2, 1), (5, 2), (3, 1), (4, 1), (5, 1)]);
        assert!(fractions_up_to(1).is_empty());
    }

    #[test]
    fn classic_values() {
        let budget = 10_000_000;
        for k in 1..=6 {
            let c = make_cycle(2 * k + 1).unwrap();
            assert_eq!(chi_c_exact(&c, 2 * k + 1, budget).unwrap(), Rational::new(2 * k as i64 + 1, k as i64));
        }
        assert_eq!(chi_c_exact(&make_complete(4), 4, budget).unwrap(), Rational::from(4));
        let pet = build_petersen(GPParams::new(5, 2).unwrap());
        assert_eq!(chi_c_exact(&pet, 10, budget).unwrap(), Rational::from(3));
        assert!(matches!(chi_c_exact(&make_complete(4), 3, budget), Err(Error::Domain(_))));
        assert!(matches!(chi_c_exact(&make_cycle(6).unwrap(), 6, budget), Err(Error::Domain(_))));
        assert!(matches!(chi_c_exact(&make_complete(6), 6, 2), Err(Error::BudgetExhausted(_))));
    }
}
