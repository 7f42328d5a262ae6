//! Minimum maximum lateness by bisection over feasibility probes.
//!
//! `Lmax <= L` holds iff the instance with every deadline moved by `L` is
//! feasible, and that predicate is monotone in `L`. Bisecting it between
//! [`search_bounds`] gives the optimum; the last feasible probe supplies the
//! witness and the last infeasible one certifies optimality.

use crate::error::{Error, Result};
use crate::feasibility::{feasible_general_capped, FeasibilityResult, DEFAULT_MEMORY_CAP_BITS};
use crate::instance::{evaluate_schedule, shift_deadlines, Assignment, Instance, Time};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalResult {
    /// `None` iff there are no jobs.
    pub lmax: Option<Time>,
    pub assignment: Assignment,
    /// Feasibility calls spent.
    pub probes: usize,
}

/// `probe(hi)` is always feasible and no schedule beats `lo`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub lo: Time,
    pub hi: Time,
}

/// Is there a schedule with `Lmax <= bound`?
pub fn probe(instance: &Instance, bound: Time) -> Result<FeasibilityResult> {
    probe_capped(instance, bound, DEFAULT_MEMORY_CAP_BITS)
}

pub fn probe_capped(
    instance: &Instance,
    bound: Time,
    memory_cap_bits: u128,
) -> Result<FeasibilityResult> {
    feasible_general_capped(&shift_deadlines(instance, bound)?, memory_cap_bits)
}

/// `lo = -max d`, since completions are never negative.
/// `hi = max_rate * W - min d`, the worst lateness with all jobs on the
/// slowest machine, so any schedule at all meets it.
pub fn search_bounds(instance: &Instance) -> Result<SearchBounds> {
    let jobs = instance.jobs();
    if jobs.is_empty() {
        return Err(Error::Precondition(
            "search bounds need at least one job".into(),
        ));
    }
    let max_d = jobs.iter().map(|j| j.deadline).max().unwrap();
    let min_d = jobs.iter().map(|j| j.deadline).min().unwrap();
    let overflow = || Error::Range("search bounds overflow a 64-bit integer".into());
    let lo = max_d.checked_neg().ok_or_else(overflow)?;
    let hi = instance
        .machines()
        .max_rate()
        .checked_mul(instance.total_work())
        .and_then(|x| x.checked_sub(min_d))
        .ok_or_else(overflow)?;
    Ok(SearchBounds { lo, hi })
}

pub fn min_lmax(instance: &Instance) -> Result<OptimalResult> {
    min_lmax_capped(instance, DEFAULT_MEMORY_CAP_BITS)
}

pub fn min_lmax_capped(instance: &Instance, memory_cap_bits: u128) -> Result<OptimalResult> {
    if instance.num_jobs() == 0 {
        return Ok(OptimalResult {
            lmax: None,
            assignment: Assignment::default(),
            probes: 0,
        });
    }
    let SearchBounds { mut lo, mut hi } = search_bounds(instance)?;
    let mut probes = 0;
    let mut witness: Option<Assignment> = None;
    while lo < hi {
        let mid = (lo as i128 + hi as i128).div_euclid(2) as Time;
        probes += 1;
        let r = probe_capped(instance, mid, memory_cap_bits)?;
        if r.feasible {
            hi = mid;
            witness = r.witness;
        } else {
            lo = mid + 1;
        }
    }
    let assignment = match witness {
        Some(w) => w,
        None => {
            // every probe failed (or none ran), so the upper bound is the answer
            probes += 1;
            probe_capped(instance, hi, memory_cap_bits)?
                .witness
                .ok_or_else(|| Error::Internal(format!("upper bound {hi} reported infeasible")))?
        }
    };

    let lmax = evaluate_schedule(instance, &assignment)?.lmax;
    if lmax != Some(hi) {
        return Err(Error::Internal(format!(
            "witness lateness {lmax:?} differs from the bisection optimum {hi}"
        )));
    }
    Ok(OptimalResult {
        lmax,
        assignment,
        probes,
    })
}
