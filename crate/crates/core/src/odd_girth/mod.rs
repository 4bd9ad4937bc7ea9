//! Odd girth of `Pet(n,k)` three ways: exhaustive solution of the integer
//! program, the closed-form minimum over candidate lengths, and BFS on the
//! graph itself.
//!
//! The program: minimise `u + |v|` subject to `u + k v = t n`,
//! `u + |v| = 2r + 1`, `u >= 0`, `t` any integer. A solution is *trivial*
//! when `u = 0` or `v = 0`.
//!
//! All arithmetic here is exact on `i64`; [`GPParams`] caps `n` so that no
//! intermediate product can overflow.

mod formula;
mod ip;
mod validate;

pub use formula::{candidate_g_set, girth_bounds, ind_set, odd_girth_formula, FormulaTrace, GirthBounds};
pub use ip::{ip_enumerate, odd_girth_from_ip, unique_solution_for_t, Candidate, IpEnumeration, IpSolution};
pub use validate::{cell, cross_validate, ValidationReport, ValidationRow};

use crate::petersen::GPParams;

pub(crate) fn nk(p: GPParams) -> (i64, i64) {
    (p.n() as i64, p.k() as i64)
}
