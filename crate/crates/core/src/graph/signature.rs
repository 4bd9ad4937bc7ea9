use serde::{Deserialize, Serialize};

use crate::error::{bail, Result};
use crate::petersen::GPParams;

/// Oriented edge-class counts of a cycle in `Pet(n,k)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSignature {
    pub length: usize,
    /// `u_i -> u_{i+1}`
    pub u_plus: usize,
    /// `u_i -> u_{i-1}`
    pub u_minus: usize,
    /// `v_i -> v_{i+k}`
    pub v_plus: usize,
    /// `v_i -> v_{i-k}`
    pub v_minus: usize,
    /// spokes `u_i v_i`, either direction
    pub b: usize,
}

impl CycleSignature {
    /// The three identities every cycle satisfies: the classes partition the
    /// edges, spokes come in pairs, and the index displacement closes up
    /// modulo `n`.
    pub fn invariants_hold(&self, p: GPParams) -> bool {
        let n = p.n() as i64;
        let k = p.k() as i64;
        let total = self.u_plus + self.u_minus + self.v_plus + self.v_minus + self.b;
        let shift = (self.u_plus as i64 - self.u_minus as i64) + k * (self.v_plus as i64 - self.v_minus as i64);
        total == self.length && self.b % 2 == 0 && shift.rem_euclid(n) == 0
    }
}

/// Classifies the edges of the closed walk `w_0 w_1 … w_{l-1} w_0`. The
/// sequence may repeat `w_0` at the end. Vertices must be distinct and
/// consecutive ones adjacent in `Pet(n,k)`.
///
/// When `n = 2k` an inner chord is both `+k` and `-k`; it is counted as `+`.
pub fn cycle_signature(p: GPParams, cycle: &[usize]) -> Result<CycleSignature> {
    let mut walk = cycle;
    if walk.len() > 1 && walk.first() == walk.last() {
        walk = &walk[..walk.len() - 1];
    }
    let len = walk.len();
    if len < 3 {
        bail!(InvalidInput, "a cycle needs at least 3 vertices, got {len}");
    }
    let n = p.n();
    let mut seen = vec![false; 2 * n];
    for &w in walk {
        if w >= 2 * n {
            bail!(InvalidInput, "vertex {w} is not in {p}");
        }
        if std::mem::replace(&mut seen[w], true) {
            bail!(InvalidInput, "vertex {} repeats", p.vertex_label(w));
        }
    }
    let step = |a: usize, b: usize| (b + n - a) % n;
    let mut sig = CycleSignature { length: len, ..Default::default() };
    for j in 0..len {
        let (a, b) = (walk[j], walk[(j + 1) % len]);
        let (ia, ib) = (a % n, b % n);
        match (a < n, b < n) {
            (true, true) if step(ia, ib) == 1 => sig.u_plus += 1,
            (true, true) if step(ib, ia) == 1 => sig.u_minus += 1,
            (false, false) if step(ia, ib) == p.k() => sig.v_plus += 1,
            (false, false) if step(ib, ia) == p.k() => sig.v_minus += 1,
            (true, false) | (false, true) if ia == ib => sig.b += 1,
            _ => bail!(
                InvalidInput,
                "{} and {} are not adjacent in {p}",
                p.vertex_label(a),
                p.vertex_label(b)
            ),
        }
    }
    Ok(sig)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, k: usize) -> GPParams {
        GPParams::new(n, k).unwrap()
    }

    #[test]
    fn outer_and_inner_cycles() {
        let p = params(5, 2);
        let outer: Vec<usize> = (0..5).collect();
        let s = cycle_signature(p, &outer).unwrap();
        assert_eq!((s.length, s.u_plus, s.u_minus + s.v_plus + s.v_minus + s.b), (5, 5, 0));
        let inner = [5, 7, 9, 6, 8];
        let s = cycle_signature(p, &inner).unwrap();
        assert_eq!((s.length, s.v_plus, s.u_plus + s.u_minus + s.v_minus + s.b), (5, 5, 0));
        assert!(s.invariants_hold(p));
    }

    #[test]
    fn short_eight_cycle() {
        // u0 u1 v1 v_{k+1} u_{k+1} u_k v_k v0, counted edge by edge
        let p = params(9, 2);
        let (u, v) = (|i: usize| i, |i: usize| 9 + i);
        let walk = [u(0), u(1), v(1), v(3), u(3), u(2), v(2), v(0), u(0)];
        let s = cycle_signature(p, &walk).unwrap();
        assert_eq!(
            s,
            CycleSignature { length: 8, u_plus: 1, u_minus: 1, v_plus: 1, v_minus: 1, b: 4 }
        );
        assert!(s.invariants_hold(p));
    }

    #[test]
    fn rejects_non_cycles() {
        let p = params(5, 2);
        assert!(cycle_signature(p, &[0, 1]).is_err());
        assert!(cycle_signature(p, &[0, 1, 2, 1]).is_err());
        assert!(cycle_signature(p, &[0, 2, 4]).is_err());
        assert!(cycle_signature(p, &[0, 1, 42]).is_err());
    }
}
