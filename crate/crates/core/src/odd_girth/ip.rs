use serde::{Deserialize, Serialize};

use super::nk;
use crate::error::{bail, Result};
use crate::petersen::GPParams;
use crate::rational::gcd;

/// A feasible point `(u, v, r, t)` with odd objective `u + |v| = 2r + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IpSolution {
    pub u: i64,
    /// `v_plus - v_minus`; at an optimum one of the two is zero.
    pub v: i64,
    pub r: i64,
    pub t: i64,
    pub objective: i64,
    pub trivial: bool,
}

impl IpSolution {
    fn from_point(u: i64, v: i64, t: i64) -> Option<Self> {
        let objective = u + v.abs();
        (u >= 0 && objective % 2 == 1).then(|| IpSolution {
            u,
            v,
            r: (objective - 1) / 2,
            t,
            objective,
            trivial: u == 0 || v == 0,
        })
    }

    /// The structural facts every optimal solution satisfies.
    pub fn check(&self, p: GPParams) -> std::result::Result<(), String> {
        let (n, k) = nk(p);
        let mut errs = Vec::new();
        if self.u + k * self.v != self.t * n {
            errs.push("u + k v != t n".to_string());
        }
        if self.objective != self.u + self.v.abs() || self.objective != 2 * self.r + 1 {
            errs.push("objective != u + |v| = 2r + 1".to_string());
        }
        if self.u % gcd(n, k) != 0 {
            errs.push("gcd(n,k) does not divide u".to_string());
        }
        if self.u < 0 || self.objective > n {
            errs.push("objective outside [0, n]".to_string());
        }
        // With n = 2k the exception has a mirror image (k, 1, 1).
        let small_u = self.u < k
            || (k % 2 == 0 && (self.u, self.v, self.t) == (k, -1, 0))
            || (2 * k == n && (self.u, self.v, self.t) == (k, 1, 1));
        if !small_u {
            errs.push("u >= k outside the (k,-1,0) exception".to_string());
        }
        if errs.is_empty() {
            Ok(())
        } else {
            Err(errs.join("; "))
        }
    }

    // (|t|, u, |v|, negative t last)
    fn tie_key(&self) -> (i64, i64, i64, bool) {
        (self.t.abs(), self.u, self.v.abs(), self.t < 0)
    }
}

/// Every optimal point of the program, with a preferred representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IpEnumeration {
    /// Representative optimum: smallest `|t|`, then `u`, then `|v|`, then
    /// positive `t` before negative.
    pub best: Option<IpSolution>,
    /// All optimal points in representative order.
    pub optima: Vec<IpSolution>,
    pub trivial_optimum: bool,
}

impl IpEnumeration {
    pub fn is_feasible(&self) -> bool {
        self.best.is_some()
    }

    pub fn optimum(&self) -> Option<i64> {
        self.best.map(|s| s.objective)
    }

    /// Optimal nontrivial points with `t != 0`.
    pub fn nontrivial_t_forms(&self) -> impl Iterator<Item = &IpSolution> {
        self.optima.iter().filter(|s| !s.trivial && s.t != 0)
    }
}

/// Exhaustive scan of `0 <= u <= n`, `|v| <= n`. Any optimum has objective
/// at most `n` (the points `(n, 0)` or `(k, -1)` are feasible whenever the
/// program is), so the box contains every optimum.
///
/// For each `v` the admissible `u` are those congruent to `-k v (mod n)`,
/// which leaves at most two values in `[0, n]`.
pub fn ip_enumerate(p: GPParams) -> IpEnumeration {
    let (n, k) = nk(p);
    let mut best_obj = i64::MAX;
    let mut optima = Vec::new();
    for v in -n..=n {
        let base = (-k * v).rem_euclid(n);
        for u in [base, base + n] {
            if u > n {
                continue;
            }
            let Some(sol) = IpSolution::from_point(u, v, (u + k * v) / n) else {
                continue;
            };
            if sol.objective < best_obj {
                best_obj = sol.objective;
                optima.clear();
            }
            if sol.objective == best_obj {
                optima.push(sol);
            }
        }
    }
    optima.sort_by_key(IpSolution::tie_key);
    IpEnumeration {
        best: optima.first().copied(),
        trivial_optimum: optima.iter().any(|s| s.trivial),
        optima,
    }
}

/// The unique `(u, v)` with `0 <= u < k` solving `u + k v = t n` for a fixed
/// nonzero `t`. The objective may be even, in which case the point is not
/// feasible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub u: i64,
    pub v: i64,
    pub t: i64,
    pub objective: i64,
}

impl Candidate {
    pub fn solution(&self) -> Option<IpSolution> {
        IpSolution::from_point(self.u, self.v, self.t)
    }
}

pub fn unique_solution_for_t(p: GPParams, t: i64) -> Result<Candidate> {
    let (n, k) = nk(p);
    let (u, v) = match t {
        0 => bail!(InvalidParameter, "t must be nonzero"),
        t if t > 0 => {
            let q = (t * n).div_euclid(k);
            (t * n - k * q, q)
        }
        t => {
            // ceil(-tn / k) with -tn > 0
            let c = (-t * n + k - 1) / k;
            (k * c + t * n, -c)
        }
    };
    Ok(Candidate { u, v, t, objective: u + v.abs() })
}

/// `2r + 1` when some optimum is trivial, `2r + 3` when every optimum is
/// nontrivial, `None` when the program is infeasible.
pub fn odd_girth_from_ip(p: GPParams) -> Option<usize> {
    let e = ip_enumerate(p);
    let opt = e.optimum()?;
    Some(if e.trivial_optimum { opt } else { opt + 2 } as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, k: usize) -> GPParams {
        GPParams::new(n, k).unwrap()
    }

    /// Independent brute force over the box without the residue shortcut.
    fn brute_optimum(p: GPParams) -> Option<(i64, bool)> {
        let (n, k) = nk(p);
        let mut best: Option<(i64, bool)> = None;
        for u in 0..=n {
            for v in -n..=n {
                let obj = u + v.abs();
                if (u + k * v) % n != 0 || obj % 2 == 0 {
                    continue;
                }
                let triv = u == 0 || v == 0;
                best = match best {
                    Some((b, t)) if b < obj => Some((b, t)),
                    Some((b, t)) if b == obj => Some((b, t || triv)),
                    _ => Some((obj, triv)),
                };
            }
        }
        best
    }

    #[test]
    fn petersen_optimum() {
        let e = ip_enumerate(params(5, 2));
        let best = e.best.unwrap();
        assert_eq!((best.u, best.v, best.t, best.objective, best.trivial), (2, -1, 0, 3, false));
        assert!(!e.trivial_optimum);
        // (1, 2, t = 1) ties with it
        assert_eq!(e.optima.len(), 2);
        assert_eq!(odd_girth_from_ip(params(5, 2)), Some(5));
    }

    #[test]
    fn bipartite_is_infeasible() {
        let e = ip_enumerate(params(6, 3));
        assert!(!e.is_feasible());
        assert_eq!(odd_girth_from_ip(params(6, 3)), None);
    }

    #[test]
    fn trivial_optimum_on_divisible_pair() {
        let e = ip_enumerate(params(9, 3));
        let best = e.best.unwrap();
        assert_eq!((best.u, best.v, best.t, best.objective, best.trivial), (0, 3, 1, 3, true));
        assert_eq!(odd_girth_from_ip(params(9, 3)), Some(3));
    }

    #[test]
    fn unique_points() {
        let c = unique_solution_for_t(params(11, 3), 1).unwrap();
        assert_eq!((c.u, c.v, c.objective), (2, 3, 5));
        let c = unique_solution_for_t(params(13, 3), 1).unwrap();
        assert_eq!((c.u, c.v, c.objective), (1, 4, 5));
        let c = unique_solution_for_t(params(12, 4), 2).unwrap();
        assert_eq!((c.u, c.v), (0, 6));
        let c = unique_solution_for_t(params(11, 3), -1).unwrap();
        assert_eq!((c.u, c.v), (1, -4));
        assert_eq!(c.u + 3 * c.v, -11);
        assert!(unique_solution_for_t(params(11, 3), 0).is_err());
    }

    #[test]
    fn agrees_with_brute_force() {
        for p in GPParams::all_up_to(40) {
            let e = ip_enumerate(p);
            assert_eq!(e.best.map(|b| (b.objective, e.trivial_optimum)), brute_optimum(p), "{p}");
            for s in &e.optima {
                s.check(p).unwrap_or_else(|m| panic!("{p}: {m}"));
            }
        }
    }
}
