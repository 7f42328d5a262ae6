//! Jobs, machines and schedules.
//!
//! Every solver in this crate takes an [`Instance`]: a [`MachinePark`] of `m`
//! uniformly related machines plus a list of [`Job`]s. Machine `j` needs
//! `rates[j]` time-units per unit of work, so identical machines are simply a
//! park whose rates are all 1.
//!
//! A schedule is described by an [`Assignment`] only. Each machine runs its
//! jobs back to back in earliest-due-date order (ties by job id), which loses
//! nothing: on a single machine any feasible order can be turned into the EDD
//! order by swapping adjacent out-of-order jobs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::text;

/// Integer time, work and rate values.
pub type Time = i64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Job {
    /// Position of the job in the input.
    pub id: usize,
    /// Work units, `>= 0`.
    pub work: Time,
    /// Due date in time units. Negative values only arise from [`shift_deadlines`].
    pub deadline: Time,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MachinePark {
    rates: Vec<Time>,
}

impl MachinePark {
    pub fn new(rates: Vec<Time>) -> Result<Self> {
        if rates.is_empty() {
            return Err(Error::Range("at least one machine is required".into()));
        }
        if let Some((j, &r)) = rates.iter().enumerate().find(|(_, &r)| r < 1) {
            return Err(Error::Range(format!(
                "machine {} has rate {r}, rates must be >= 1",
                j + 1
            )));
        }
        Ok(MachinePark { rates })
    }

    /// `m` machines with rate 1.
    pub fn identical(m: usize) -> Result<Self> {
        Self::new(vec![1; m])
    }

    pub fn len(&self) -> usize {
        self.rates.len()
    }

    /// Always false; a park has at least one machine.
    pub fn is_empty(&self) -> bool {
        self.rates.is_empty()
    }

    pub fn rates(&self) -> &[Time] {
        &self.rates
    }

    pub fn rate(&self, machine: usize) -> Time {
        self.rates[machine]
    }

    pub fn max_rate(&self) -> Time {
        self.rates.iter().copied().max().unwrap_or(1)
    }

    pub fn all_unit(&self) -> bool {
        self.rates.iter().all(|&r| r == 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    machines: MachinePark,
    jobs: Vec<Job>,
}

impl Instance {
    /// Builds an instance from `(work, deadline)` pairs; job ids follow the
    /// order of `jobs`.
    ///
    /// Rejects negative work and instances whose total work times the largest
    /// rate does not fit in an `i64`.
    pub fn new(
        machines: MachinePark,
        jobs: impl IntoIterator<Item = (Time, Time)>,
    ) -> Result<Self> {
        let jobs: Vec<Job> = jobs
            .into_iter()
            .enumerate()
            .map(|(id, (work, deadline))| Job { id, work, deadline })
            .collect();
        if let Some(job) = jobs.iter().find(|j| j.work < 0) {
            return Err(Error::Range(format!(
                "job {} has negative work {}",
                job.id, job.work
            )));
        }
        let total = jobs
            .iter()
            .try_fold(0i64, |acc, j| acc.checked_add(j.work))
            .and_then(|w| w.checked_mul(machines.max_rate()));
        if total.is_none() {
            return Err(Error::Range(
                "total work times the largest rate overflows a 64-bit integer".into(),
            ));
        }
        Ok(Instance { machines, jobs })
    }

    pub fn machines(&self) -> &MachinePark {
        &self.machines
    }

    pub fn jobs(&self) -> &[Job] {
        &self.jobs
    }

    pub fn num_jobs(&self) -> usize {
        self.jobs.len()
    }

    pub fn num_machines(&self) -> usize {
        self.machines.len()
    }

    /// Sum of all work, `W`.
    pub fn total_work(&self) -> Time {
        self.jobs.iter().map(|j| j.work).sum()
    }

    /// Largest single work amount, `0` when there are no jobs.
    pub fn max_work(&self) -> Time {
        self.jobs.iter().map(|j| j.work).max().unwrap_or(0)
    }

    /// Parses the line-oriented instance format:
    ///
    /// ```text
    /// m rate_1 ... rate_m
    /// n
    /// work_1 deadline_1
    /// ...
    /// ```
    pub fn parse(input: &str) -> Result<Self> {
        let lines = text::lines(input);
        let mut it = lines.iter();

        let header = it
            .next()
            .ok_or_else(|| text::unexpected_eof(input, "machine line `m rate_1 .. rate_m`"))?;
        let m_tok = header.tokens[0];
        let m = m_tok.int()?;
        if m < 1 {
            return Err(m_tok.err(format!("machine count must be >= 1, found {m}")));
        }
        header.expect_len(m as usize + 1, "machine line")?;
        let mut rates = Vec::with_capacity(m as usize);
        for tok in &header.tokens[1..] {
            let r = tok.int()?;
            if r < 1 {
                return Err(tok.err(format!("rate must be >= 1, found {r}")));
            }
            rates.push(r);
        }

        let count_line = it
            .next()
            .ok_or_else(|| text::unexpected_eof(input, "job count line `n`"))?;
        count_line.expect_len(1, "job count line")?;
        let n_tok = count_line.tokens[0];
        let n = n_tok.int()?;
        if n < 0 {
            return Err(n_tok.err(format!("job count must be >= 0, found {n}")));
        }

        let mut jobs = Vec::new();
        for k in 0..n {
            let line = it.next().ok_or_else(|| {
                text::unexpected_eof(input, &format!("job line {} of {n}", k + 1))
            })?;
            line.expect_len(2, "job line")?;
            let work = line.tokens[0].int()?;
            if work < 0 {
                return Err(line.tokens[0].err(format!("work must be >= 0, found {work}")));
            }
            let deadline = line.tokens[1].int()?;
            if deadline < 0 {
                return Err(line.tokens[1].err(format!("deadline must be >= 0, found {deadline}")));
            }
            jobs.push((work, deadline));
        }
        if let Some(extra) = it.next() {
            return Err(extra.tokens[0].err(format!("unexpected content after {n} job lines")));
        }

        let machines = MachinePark::new(rates).expect("rates validated above");
        Instance::new(machines, jobs).map_err(|e| match e {
            Error::Range(msg) => Error::parse(header.number, 1, msg),
            other => other,
        })
    }
}

impl FromStr for Instance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Instance::parse(s)
    }
}

/// Renders the text format accepted by [`Instance::parse`].
impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.machines.len())?;
        for r in self.machines.rates() {
            write!(f, " {r}")?;
        }
        writeln!(f)?;
        writeln!(f, "{}", self.jobs.len())?;
        for j in &self.jobs {
            writeln!(f, "{} {}", j.work, j.deadline)?;
        }
        Ok(())
    }
}

/// Job-to-machine map. `machine_of[id]` is a 0-based machine index; the CLI
/// prints it 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Assignment {
    pub machine_of: Vec<usize>,
}

impl Assignment {
    pub fn new(machine_of: Vec<usize>) -> Self {
        Assignment { machine_of }
    }

    pub fn len(&self) -> usize {
        self.machine_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.machine_of.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatenessReport {
    /// Rate times total work, per machine.
    pub per_machine_completion: Vec<Time>,
    /// Completion time of each job, indexed by job id.
    pub per_job_completion: Vec<Time>,
    /// `None` when the instance has no jobs.
    pub lmax: Option<Time>,
}

/// Job ids sorted by deadline, ties by id.
pub fn edd_order(instance: &Instance) -> Vec<usize> {
    let mut order: Vec<usize> = (0..instance.num_jobs()).collect();
    order.sort_by_key(|&i| (instance.jobs[i].deadline, i));
    order
}

/// Adds `x` to every deadline. Asking whether `Lmax <= x` is the same as
/// asking whether the shifted instance is feasible.
pub fn shift_deadlines(instance: &Instance, x: Time) -> Result<Instance> {
    let jobs = instance
        .jobs
        .iter()
        .map(|j| {
            j.deadline
                .checked_add(x)
                .map(|deadline| Job { deadline, ..*j })
                .ok_or_else(|| {
                    Error::Range(format!(
                        "deadline {} of job {} shifted by {x} overflows",
                        j.deadline, j.id
                    ))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Instance {
        machines: instance.machines.clone(),
        jobs,
    })
}

/// Simulates every machine running its jobs in EDD order at its rate.
pub fn evaluate_schedule(instance: &Instance, assignment: &Assignment) -> Result<LatenessReport> {
    let n = instance.num_jobs();
    let m = instance.num_machines();
    if assignment.len() != n {
        return Err(Error::Structural(format!(
            "assignment covers {} jobs, instance has {n}",
            assignment.len()
        )));
    }
    if let Some((id, &j)) = assignment
        .machine_of
        .iter()
        .enumerate()
        .find(|(_, &j)| j >= m)
    {
        return Err(Error::Structural(format!(
            "job {id} is assigned to machine index {j}, instance has {m} machines"
        )));
    }

    let mut work_done = vec![0 as Time; m];
    let mut per_job_completion = vec![0 as Time; n];
    let mut lmax: Option<Time> = None;
    for id in edd_order(instance) {
        let job = &instance.jobs[id];
        let machine = assignment.machine_of[id];
        work_done[machine] += job.work;
        let completion = instance.machines.rate(machine) * work_done[machine];
        per_job_completion[id] = completion;
        let lateness = completion - job.deadline;
        lmax = Some(lmax.map_or(lateness, |l| l.max(lateness)));
    }
    let per_machine_completion = work_done
        .iter()
        .enumerate()
        .map(|(j, &w)| instance.machines.rate(j) * w)
        .collect();

    Ok(LatenessReport {
        per_machine_completion,
        per_job_completion,
        lmax,
    })
}
