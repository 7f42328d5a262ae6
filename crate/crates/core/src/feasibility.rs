//! Exact feasibility (`Lmax <= 0`) by layered dynamic programming.
//!
//! Jobs are taken in EDD order. Layer `i` records, for every vector
//! `(w_1, .., w_{m-1})` of work loads on the first `m - 1` machines, whether the
//! first `i` jobs can be split so that machine `j` carries exactly `w_j` work
//! units and every job meets its deadline. The load of machine `m` is implied:
//! it is whatever prefix work is not on the others.
//!
//! Job `i` (work `t`, deadline `d`) reaches cell `w` of layer `i` in two ways:
//!
//! * appended to machine `j < m`: cell `w - t e_j` is set in layer `i - 1` and
//!   `rate_j * w_j <= d`;
//! * appended to machine `m`: cell `w` is set in layer `i - 1` and
//!   `rate_m * (prefix_i - sum(w)) <= d`.
//!
//! States are indexed by work rather than elapsed time, so every coordinate is
//! a plain integer and deadline checks multiply back by the rate. A
//! coordinate can never exceed `max(d) / rate_j` without breaking a deadline,
//! which bounds each axis to `min(W, max(d) / rate_j) + 1` cells.
//!
//! All layers are kept so that [`reconstruct_assignment`] can walk back from
//! any set cell of the last layer to a witness.

use bitvec::prelude::*;

use crate::error::{Error, Result};
use crate::instance::{edd_order, Assignment, Instance, Time};

/// Default table budget: 2^31 bits, 256 MiB.
pub const DEFAULT_MEMORY_CAP_BITS: u128 = 1 << 31;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityResult {
    pub feasible: bool,
    /// Present iff `feasible`.
    pub witness: Option<Assignment>,
}

impl FeasibilityResult {
    fn infeasible() -> Self {
        FeasibilityResult {
            feasible: false,
            witness: None,
        }
    }

    fn with_witness(witness: Assignment) -> Self {
        FeasibilityResult {
            feasible: true,
            witness: Some(witness),
        }
    }
}

/// One dense boolean layer over work-allocation vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpLayer {
    extents: Vec<usize>,
    bits: BitVec<u64, Lsb0>,
}

impl DpLayer {
    fn empty(extents: &[usize], cells: usize) -> Self {
        DpLayer {
            extents: extents.to_vec(),
            bits: bitvec![u64, Lsb0; 0; cells],
        }
    }

    /// Number of cells along each of the `m - 1` axes.
    pub fn extents(&self) -> &[usize] {
        &self.extents
    }

    pub fn get(&self, loads: &[usize]) -> bool {
        assert_eq!(loads.len(), self.extents.len(), "wrong dimensionality");
        let mut idx = 0;
        let mut stride = 1;
        for (&w, &e) in loads.iter().zip(&self.extents) {
            if w >= e {
                return false;
            }
            idx += w * stride;
            stride *= e;
        }
        self.bits[idx]
    }

    pub fn is_empty(&self) -> bool {
        self.bits.not_any()
    }

    pub fn count(&self) -> usize {
        self.bits.count_ones()
    }

    /// Load vectors of all set cells, in index order.
    pub fn true_cells(&self) -> Vec<Vec<usize>> {
        self.bits
            .iter_ones()
            .map(|idx| {
                let mut loads = vec![0; self.extents.len()];
                decode(idx, &self.extents, &mut loads);
                loads
            })
            .collect()
    }
}

/// Writes the coordinates of `idx` into `out` and returns their sum.
fn decode(mut idx: usize, extents: &[usize], out: &mut [usize]) -> usize {
    let mut sum = 0;
    for (slot, &e) in out.iter_mut().zip(extents) {
        *slot = idx % e;
        idx /= e;
        sum += *slot;
    }
    sum
}

/// Layers built for one instance, together with the EDD order they follow.
#[derive(Debug, Clone)]
pub struct DpTable {
    order: Vec<usize>,
    layers: Vec<DpLayer>,
    num_jobs: usize,
}

impl DpTable {
    /// Job ids in the order the layers consume them.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// Layers `0..=k`. Shorter than `n + 1` when a layer came out empty and
    /// the build stopped early.
    pub fn layers(&self) -> &[DpLayer] {
        &self.layers
    }

    pub fn is_feasible(&self) -> bool {
        self.layers.len() == self.num_jobs + 1 && self.layers.last().is_some_and(|l| !l.is_empty())
    }
}

fn deadline_extents(instance: &Instance) -> Vec<usize> {
    let m = instance.num_machines();
    let total = instance.total_work();
    let dmax = instance
        .jobs()
        .iter()
        .map(|j| j.deadline)
        .max()
        .unwrap_or(0)
        .max(0);
    instance.machines().rates()[..m - 1]
        .iter()
        .map(|&rate| (total.min(dmax / rate) + 1) as usize)
        .collect()
}

fn check_budget(layers: usize, extents: &[usize], cap: u128) -> Result<usize> {
    let cells = extents
        .iter()
        .try_fold(1u128, |acc, &e| acc.checked_mul(e as u128));
    let required = cells.and_then(|c| c.checked_mul(layers as u128));
    match (cells, required) {
        (Some(c), Some(r)) if r <= cap && c <= usize::MAX as u128 => Ok(c as usize),
        _ => Err(Error::ResourceLimit {
            what: "dynamic-programming table (bits)",
            required: required.unwrap_or(u128::MAX),
            cap,
        }),
    }
}

/// Builds the work-indexed layers for `instance`.
pub fn build_layers(instance: &Instance, memory_cap_bits: u128) -> Result<DpTable> {
    let n = instance.num_jobs();
    let m = instance.num_machines();
    let rates = instance.machines().rates();
    let extents = deadline_extents(instance);
    let cells = check_budget(n + 1, &extents, memory_cap_bits)?;

    let mut strides = Vec::with_capacity(m - 1);
    let mut s = 1usize;
    for &e in &extents {
        strides.push(s);
        s *= e;
    }

    let order = edd_order(instance);
    let mut first = DpLayer::empty(&extents, cells);
    first.bits.set(0, true);
    let mut layers = Vec::with_capacity(n + 1);
    layers.push(first);

    let last_rate = rates[m - 1];
    let mut loads = vec![0usize; m - 1];
    let mut prefix: Time = 0;
    for &id in &order {
        let job = instance.jobs()[id];
        let work = job.work as usize;
        let deadline = job.deadline;
        prefix += job.work;

        let prev = layers.last().expect("layer 0 exists");
        let mut next = DpLayer::empty(&extents, cells);
        for idx in prev.bits.iter_ones() {
            let sum = decode(idx, &extents, &mut loads);
            for j in 0..m - 1 {
                if work < extents[j] - loads[j] {
                    let load = (loads[j] + work) as Time;
                    if rates[j] * load <= deadline {
                        next.bits.set(idx + work * strides[j], true);
                    }
                }
            }
            if last_rate * (prefix - sum as Time) <= deadline {
                next.bits.set(idx, true);
            }
        }
        let dead = next.is_empty();
        layers.push(next);
        if dead {
            break;
        }
    }

    Ok(DpTable {
        order,
        layers,
        num_jobs: n,
    })
}

/// Decides `Lmax <= 0` on any machine park, with the default memory cap.
pub fn feasible_general(instance: &Instance) -> Result<FeasibilityResult> {
    feasible_general_capped(instance, DEFAULT_MEMORY_CAP_BITS)
}

pub fn feasible_general_capped(
    instance: &Instance,
    memory_cap_bits: u128,
) -> Result<FeasibilityResult> {
    let table = build_layers(instance, memory_cap_bits)?;
    if !table.is_feasible() {
        return Ok(FeasibilityResult::infeasible());
    }
    let witness = reconstruct_assignment(&table, instance)?;
    Ok(FeasibilityResult::with_witness(witness))
}

/// Walks back from the first set cell of the last layer, choosing for each
/// job a transition that is consistent with the layer before it.
pub fn reconstruct_assignment(table: &DpTable, instance: &Instance) -> Result<Assignment> {
    let n = instance.num_jobs();
    let m = instance.num_machines();
    if table.num_jobs != n || table.order.len() != n {
        return Err(Error::Precondition(
            "table was built for a different instance".into(),
        ));
    }
    if !table.is_feasible() {
        return Err(Error::Precondition(
            "last layer has no set cell, nothing to reconstruct".into(),
        ));
    }
    let rates = instance.machines().rates();
    let extents = table.layers[0].extents.clone();
    let mut strides = Vec::with_capacity(m - 1);
    let mut s = 1usize;
    for &e in &extents {
        strides.push(s);
        s *= e;
    }

    let mut prefix: Vec<Time> = Vec::with_capacity(n + 1);
    prefix.push(0);
    for &id in &table.order {
        prefix.push(prefix.last().unwrap() + instance.jobs()[id].work);
    }

    let mut machine_of = vec![0usize; n];
    let mut cur = table.layers[n]
        .bits
        .first_one()
        .expect("feasible table has a set cell");
    let mut loads = vec![0usize; m - 1];
    for k in (0..n).rev() {
        let id = table.order[k];
        let job = instance.jobs()[id];
        let work = job.work as usize;
        let prev = &table.layers[k].bits;
        let sum = decode(cur, &extents, &mut loads);

        let explicit = (0..m - 1).find(|&j| {
            loads[j] >= work
                && rates[j] * loads[j] as Time <= job.deadline
                && prev[cur - work * strides[j]]
        });
        if let Some(j) = explicit {
            machine_of[id] = j;
            cur -= work * strides[j];
        } else if rates[m - 1] * (prefix[k + 1] - sum as Time) <= job.deadline && prev[cur] {
            machine_of[id] = m - 1;
        } else {
            return Err(Error::Internal(format!(
                "no predecessor for cell {loads:?} of layer {}",
                k + 1
            )));
        }
    }
    Ok(Assignment::new(machine_of))
}

/// The time-indexed two-machine table: row `i`, column `t` is set iff the
/// first `i` EDD jobs fit with machine 1 finishing at exactly `t`.
#[derive(Debug, Clone)]
pub struct TwoMachineTable {
    order: Vec<usize>,
    rows: Vec<BitVec<u64, Lsb0>>,
}

impl TwoMachineTable {
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Completion times of machine 1 marked in `row`.
    pub fn row_times(&self, row: usize) -> Vec<usize> {
        self.rows[row].iter_ones().collect()
    }

    pub fn is_feasible(&self) -> bool {
        self.rows.last().is_some_and(|r| r.any())
    }
}

fn check_two_identical(instance: &Instance) -> Result<()> {
    if instance.num_machines() != 2 || !instance.machines().all_unit() {
        return Err(Error::Precondition(format!(
            "two-machine path needs rates (1, 1), got {:?}",
            instance.machines().rates()
        )));
    }
    Ok(())
}

pub fn two_machine_table(instance: &Instance, memory_cap_bits: u128) -> Result<TwoMachineTable> {
    check_two_identical(instance)?;
    let n = instance.num_jobs();
    let total = instance.total_work() as usize;
    let columns = check_budget(n + 1, &[total + 1], memory_cap_bits)?;
    let order = edd_order(instance);

    let mut rows = Vec::with_capacity(n + 1);
    let mut first = bitvec![u64, Lsb0; 0; columns];
    first.set(0, true);
    rows.push(first);

    let mut prefix: Time = 0;
    for &id in &order {
        let job = instance.jobs()[id];
        let work = job.work as usize;
        prefix += job.work;
        let prev = rows.last().unwrap();
        let mut row = bitvec![u64, Lsb0; 0; columns];
        for t in 0..columns {
            let on_first = t >= work && prev[t - work] && t as Time <= job.deadline;
            let on_second = prev[t] && prefix - t as Time <= job.deadline;
            if on_first || on_second {
                row.set(t, true);
            }
        }
        rows.push(row);
    }
    Ok(TwoMachineTable { order, rows })
}

/// Decides `Lmax <= 0` on two identical machines with the time-indexed table.
pub fn feasible_two_machines(instance: &Instance) -> Result<FeasibilityResult> {
    feasible_two_machines_capped(instance, DEFAULT_MEMORY_CAP_BITS)
}

pub fn feasible_two_machines_capped(
    instance: &Instance,
    memory_cap_bits: u128,
) -> Result<FeasibilityResult> {
    let table = two_machine_table(instance, memory_cap_bits)?;
    if !table.is_feasible() {
        return Ok(FeasibilityResult::infeasible());
    }

    let n = instance.num_jobs();
    let mut prefix: Vec<Time> = vec![0];
    for &id in &table.order {
        prefix.push(prefix.last().unwrap() + instance.jobs()[id].work);
    }
    let mut machine_of = vec![0usize; n];
    let mut t = table.rows[n].first_one().unwrap();
    for k in (0..n).rev() {
        let id = table.order[k];
        let job = instance.jobs()[id];
        let work = job.work as usize;
        let prev = &table.rows[k];
        if t >= work && prev[t - work] && t as Time <= job.deadline {
            machine_of[id] = 0;
            t -= work;
        } else if prev[t] && prefix[k + 1] - t as Time <= job.deadline {
            machine_of[id] = 1;
        } else {
            return Err(Error::Internal(format!(
                "no predecessor for time {t} in row {}",
                k + 1
            )));
        }
    }
    Ok(FeasibilityResult::with_witness(Assignment::new(machine_of)))
}
