//! Exhaustive reference solvers for small instances.
//!
//! Nothing here touches the dynamic program. Assignments are enumerated
//! lexicographically (job 0 is the most significant base-`m` digit) and each
//! is scored by running every machine's jobs in EDD order, the same rule as
//! [`evaluate_schedule`]. Ties resolve to the smallest `machine_of` vector.

use crate::error::{Error, Result};
use crate::instance::{edd_order, evaluate_schedule, Assignment, Instance, Job, Time};
use crate::solver::OptimalResult;

pub const DEFAULT_ENUMERATION_CAP: u128 = 20_000_000;

/// Largest `n` accepted by [`brute_force_all_orders_feasible`].
pub const ALL_ORDERS_MAX_JOBS: usize = 6;

fn assignment_count(instance: &Instance, cap: u128) -> Result<u128> {
    let count = (instance.num_machines() as u128).checked_pow(instance.num_jobs() as u32);
    match count {
        Some(c) if c <= cap => Ok(c),
        _ => Err(Error::ResourceLimit {
            what: "assignments to enumerate",
            required: count.unwrap_or(u128::MAX),
            cap,
        }),
    }
}

/// Calls `visit` with every `machine_of` vector in lexicographic order.
fn for_each_assignment(n: usize, m: usize, mut visit: impl FnMut(&[usize])) {
    let mut digits = vec![0usize; n];
    loop {
        visit(&digits);
        let Some(pos) = (0..n).rev().find(|&k| digits[k] + 1 < m) else {
            return;
        };
        digits[pos] += 1;
        digits[pos + 1..].iter_mut().for_each(|d| *d = 0);
    }
}

pub fn brute_force_min_lmax(instance: &Instance) -> Result<OptimalResult> {
    brute_force_min_lmax_capped(instance, DEFAULT_ENUMERATION_CAP)
}

pub fn brute_force_min_lmax_capped(instance: &Instance, cap: u128) -> Result<OptimalResult> {
    let count = assignment_count(instance, cap)?;
    if instance.num_jobs() == 0 {
        return Ok(OptimalResult {
            lmax: None,
            assignment: Assignment::default(),
            probes: 0,
        });
    }
    let order = edd_order(instance);
    let rates = instance.machines().rates();
    let mut done = vec![0 as Time; instance.num_machines()];
    let mut best: Option<(Time, Vec<usize>)> = None;
    for_each_assignment(instance.num_jobs(), instance.num_machines(), |digits| {
        done.iter_mut().for_each(|w| *w = 0);
        let mut lmax = Time::MIN;
        for &id in &order {
            let job = &instance.jobs()[id];
            let machine = digits[id];
            done[machine] += job.work;
            lmax = lmax.max(rates[machine] * done[machine] - job.deadline);
        }
        if best.as_ref().is_none_or(|(b, _)| lmax < *b) {
            best = Some((lmax, digits.to_vec()));
        }
    });
    let (lmax, machine_of) = best.expect("at least one assignment");
    let assignment = Assignment::new(machine_of);
    debug_assert_eq!(
        evaluate_schedule(instance, &assignment).unwrap().lmax,
        Some(lmax)
    );
    Ok(OptimalResult {
        lmax: Some(lmax),
        assignment,
        probes: count as usize,
    })
}

/// Is there a schedule with `Lmax <= bound`? Empty instances always qualify.
pub fn brute_force_feasible(instance: &Instance, bound: Time) -> Result<bool> {
    brute_force_feasible_capped(instance, bound, DEFAULT_ENUMERATION_CAP)
}

pub fn brute_force_feasible_capped(instance: &Instance, bound: Time, cap: u128) -> Result<bool> {
    Ok(brute_force_min_lmax_capped(instance, cap)?
        .lmax
        .is_none_or(|l| l <= bound))
}

/// Feasibility (`Lmax <= 0`) over every assignment and every order of the
/// jobs on each machine, without assuming EDD sequencing.
pub fn brute_force_all_orders_feasible(instance: &Instance) -> Result<bool> {
    let n = instance.num_jobs();
    if n > ALL_ORDERS_MAX_JOBS {
        return Err(Error::ResourceLimit {
            what: "jobs for order enumeration",
            required: n as u128,
            cap: ALL_ORDERS_MAX_JOBS as u128,
        });
    }
    let m = instance.num_machines();
    let jobs = instance.jobs();
    // Tries every order of `left` behind a prefix that has already used
    // `done` work; a prefix that misses a deadline cannot be extended.
    fn some_order_fits(jobs: &[Job], rate: Time, done: Time, left: &mut Vec<usize>) -> bool {
        if left.is_empty() {
            return true;
        }
        for k in 0..left.len() {
            let id = left[k];
            let finish = done + jobs[id].work;
            if rate * finish <= jobs[id].deadline {
                left.swap_remove(k);
                let ok = some_order_fits(jobs, rate, finish, left);
                left.push(id);
                let last = left.len() - 1;
                left.swap(k, last);
                if ok {
                    return true;
                }
            }
        }
        false
    }
    let fits = |machine: usize, group: &mut Vec<usize>| -> bool {
        some_order_fits(jobs, instance.machines().rate(machine), 0, group)
    };

    let mut found = false;
    for_each_assignment(n, m, |digits| {
        if found {
            return;
        }
        found = (0..m).all(|machine| {
            let mut group: Vec<usize> = (0..n).filter(|&id| digits[id] == machine).collect();
            fits(machine, &mut group)
        });
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::MachinePark;

    fn inst(rates: &[Time], jobs: &[(Time, Time)]) -> Instance {
        Instance::new(
            MachinePark::new(rates.to_vec()).unwrap(),
            jobs.iter().copied(),
        )
        .unwrap()
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_assignment(2, 3, |d| seen.push(d.to_vec()));
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[0], vec![0, 0]);
        assert_eq!(seen[1], vec![0, 1]);
        assert_eq!(seen[3], vec![1, 0]);
        assert_eq!(seen[8], vec![2, 2]);
        let mut one = 0;
        for_each_assignment(0, 2, |d| {
            assert!(d.is_empty());
            one += 1
        });
        assert_eq!(one, 1);
    }

    #[test]
    fn pigeonhole() {
        let r = brute_force_min_lmax(&inst(&[1, 1], &[(1, 1), (1, 1), (1, 1)])).unwrap();
        assert_eq!(r.lmax, Some(1));
        // lexicographically first optimum
        assert_eq!(r.assignment.machine_of, vec![0, 0, 1]);
    }

    #[test]
    fn single_machine_is_edd_chain() {
        // EDD runs job 1 (d=2) then job 0 (d=3): completions 1 and 5
        let i = inst(&[1], &[(4, 3), (1, 2)]);
        assert_eq!(brute_force_min_lmax(&i).unwrap().lmax, Some(2));
    }

    #[test]
    fn related_pair_by_hand() {
        // rates (1, 2), two jobs (2, 2):
        //   both on m1: completions 2, 4 -> lmax 2
        //   split either way: completions 2 and 4 -> lmax 2
        //   both on m2: completions 4, 8 -> lmax 6
        let i = inst(&[1, 2], &[(2, 2), (2, 2)]);
        let r = brute_force_min_lmax(&i).unwrap();
        assert_eq!(r.lmax, Some(2));
        assert_eq!(r.assignment.machine_of, vec![0, 0]);
        assert_eq!(r.probes, 4);
    }

    #[test]
    fn feasible_wrappers() {
        let i = inst(&[1], &[(5, 4)]);
        assert!(!brute_force_feasible(&i, 0).unwrap());
        assert!(brute_force_feasible(&i, 1).unwrap());
        assert!(brute_force_feasible(&inst(&[1, 2], &[]), -100).unwrap());
    }

    #[test]
    fn all_orders_examples() {
        assert!(brute_force_all_orders_feasible(&inst(&[1], &[])).unwrap());
        // job 1 first finishes at 1, job 0 then at 3 > 2: infeasible;
        // job 0 first finishes at 2, job 1 at 3 > 1: infeasible
        assert!(!brute_force_all_orders_feasible(&inst(&[1], &[(2, 2), (1, 1)])).unwrap());
        assert!(brute_force_all_orders_feasible(&inst(&[1], &[(2, 3), (1, 1)])).unwrap());
    }

    #[test]
    fn caps() {
        let jobs = vec![(1, 1); 7];
        assert!(matches!(
            brute_force_all_orders_feasible(&inst(&[1], &jobs)),
            Err(Error::ResourceLimit { .. })
        ));
        assert!(matches!(
            brute_force_min_lmax_capped(&inst(&[1, 1], &jobs), 100),
            Err(Error::ResourceLimit { required: 128, .. })
        ));
    }
}
