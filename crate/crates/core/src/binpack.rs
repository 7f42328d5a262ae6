//! Exact bin packing through the scheduling feasibility test.
//!
//! Items of size `s_i` with bin capacity `b` become jobs of work `s_i`, all
//! due at `b`, on `m` unit-rate machines. Every job meets its deadline iff
//! each machine carries at most `b` work, i.e. iff the items fit in `m` bins.
//! Feasibility only improves with more machines, so the fewest bins is the
//! smallest feasible `m` in `[1, n]`.
//!
//! The table has `(b + 1)^(m - 1)` cells per layer, so this is practical for
//! a handful of bins only.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::feasibility::{feasible_general_capped, DEFAULT_MEMORY_CAP_BITS};
use crate::instance::{Instance, MachinePark, Time};
use crate::text;

/// Largest item count accepted by [`brute_force_min_bins`].
pub const BRUTE_FORCE_MAX_ITEMS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinPackInstance {
    item_sizes: Vec<Time>,
    bin_capacity: Time,
}

impl BinPackInstance {
    pub fn new(item_sizes: Vec<Time>, bin_capacity: Time) -> Result<Self> {
        if bin_capacity < 1 {
            return Err(Error::Range(format!(
                "bin capacity must be >= 1, got {bin_capacity}"
            )));
        }
        if let Some((i, &s)) = item_sizes
            .iter()
            .enumerate()
            .find(|(_, &s)| s < 1 || s > bin_capacity)
        {
            return Err(Error::Range(format!(
                "item {i} has size {s}, sizes must lie in [1, {bin_capacity}]"
            )));
        }
        if item_sizes
            .iter()
            .try_fold(0i64, |acc, &s| acc.checked_add(s))
            .is_none()
        {
            return Err(Error::Range("total item size overflows".into()));
        }
        Ok(BinPackInstance {
            item_sizes,
            bin_capacity,
        })
    }

    pub fn item_sizes(&self) -> &[Time] {
        &self.item_sizes
    }

    pub fn bin_capacity(&self) -> Time {
        self.bin_capacity
    }

    pub fn num_items(&self) -> usize {
        self.item_sizes.len()
    }

    /// `ceil(sum / b)`.
    pub fn volume_bound(&self) -> usize {
        let total: Time = self.item_sizes.iter().sum();
        ((total + self.bin_capacity - 1) / self.bin_capacity) as usize
    }

    /// Parses `b`, then `n`, then one size per line.
    pub fn parse(input: &str) -> Result<Self> {
        let lines = text::lines(input);
        let mut it = lines.iter();
        let cap_line = it
            .next()
            .ok_or_else(|| text::unexpected_eof(input, "bin capacity line `b`"))?;
        cap_line.expect_len(1, "bin capacity line")?;
        let b = cap_line.tokens[0].int()?;
        if b < 1 {
            return Err(cap_line.tokens[0].err(format!("bin capacity must be >= 1, found {b}")));
        }
        let count_line = it
            .next()
            .ok_or_else(|| text::unexpected_eof(input, "item count line `n`"))?;
        count_line.expect_len(1, "item count line")?;
        let n = count_line.tokens[0].int()?;
        if n < 0 {
            return Err(count_line.tokens[0].err(format!("item count must be >= 0, found {n}")));
        }
        let mut sizes = Vec::new();
        for k in 0..n {
            let line = it.next().ok_or_else(|| {
                text::unexpected_eof(input, &format!("item line {} of {n}", k + 1))
            })?;
            line.expect_len(1, "item line")?;
            let tok = line.tokens[0];
            let s = tok.int()?;
            if s < 1 || s > b {
                return Err(tok.err(format!("item size must lie in [1, {b}], found {s}")));
            }
            sizes.push(s);
        }
        if let Some(extra) = it.next() {
            return Err(extra.tokens[0].err(format!("unexpected content after {n} item lines")));
        }
        BinPackInstance::new(sizes, b).map_err(|e| match e {
            Error::Range(msg) => Error::parse(count_line.number, 1, msg),
            other => other,
        })
    }
}

impl FromStr for BinPackInstance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BinPackInstance::parse(s)
    }
}

impl fmt::Display for BinPackInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.bin_capacity)?;
        writeln!(f, "{}", self.item_sizes.len())?;
        for s in &self.item_sizes {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

/// `m` unit-rate machines, one job `(size, b)` per item.
pub fn to_scheduling_instance(bp: &BinPackInstance, m: usize) -> Result<Instance> {
    let machines = MachinePark::identical(m)?;
    Instance::new(
        machines,
        bp.item_sizes.iter().map(|&s| (s, bp.bin_capacity)),
    )
}

/// How [`min_bins`] visits candidate bin counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Ascending from the volume bound; cheap because small `m` probes are
    /// exponentially cheaper than large ones.
    #[default]
    Scan,
    /// Bisection over `[1, n]`.
    Bisect,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    pub bins: usize,
    /// 0-based bin of each item.
    pub bin_of: Vec<usize>,
}

fn probe_bins(bp: &BinPackInstance, m: usize, memory_cap_bits: u128) -> Result<Option<Vec<usize>>> {
    let instance = to_scheduling_instance(bp, m)?;
    Ok(feasible_general_capped(&instance, memory_cap_bits)?
        .witness
        .map(|w| w.machine_of))
}

/// Fewest bins together with an item-to-bin map.
pub fn pack(bp: &BinPackInstance, strategy: Strategy, memory_cap_bits: u128) -> Result<Packing> {
    let n = bp.num_items();
    if n == 0 {
        return Err(Error::Precondition(
            "bin packing needs at least one item".into(),
        ));
    }
    match strategy {
        Strategy::Scan => {
            for m in bp.volume_bound().max(1)..=n {
                if let Some(bin_of) = probe_bins(bp, m, memory_cap_bits)? {
                    return Ok(Packing { bins: m, bin_of });
                }
            }
            Err(Error::Internal(format!(
                "{n} items did not fit in {n} bins"
            )))
        }
        Strategy::Bisect => {
            let (mut lo, mut hi) = (1, n);
            let mut best = None;
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                match probe_bins(bp, mid, memory_cap_bits)? {
                    Some(w) => {
                        hi = mid;
                        best = Some(w);
                    }
                    None => lo = mid + 1,
                }
            }
            let bin_of = match best {
                Some(w) => w,
                None => probe_bins(bp, hi, memory_cap_bits)?.ok_or_else(|| {
                    Error::Internal(format!("{n} items did not fit in {hi} bins"))
                })?,
            };
            Ok(Packing { bins: hi, bin_of })
        }
    }
}

pub fn min_bins(bp: &BinPackInstance) -> Result<usize> {
    Ok(pack(bp, Strategy::default(), DEFAULT_MEMORY_CAP_BITS)?.bins)
}

/// Exhaustive minimum over item-to-bin maps, where each item may only open
/// the lowest-index empty bin.
pub fn brute_force_min_bins(bp: &BinPackInstance) -> Result<usize> {
    let n = bp.num_items();
    if n > BRUTE_FORCE_MAX_ITEMS {
        return Err(Error::ResourceLimit {
            what: "items for bin enumeration",
            required: n as u128,
            cap: BRUTE_FORCE_MAX_ITEMS as u128,
        });
    }
    if n == 0 {
        return Err(Error::Precondition(
            "bin packing needs at least one item".into(),
        ));
    }

    fn go(sizes: &[Time], cap: Time, k: usize, loads: &mut Vec<Time>, best: &mut usize) {
        if loads.len() >= *best {
            return;
        }
        if k == sizes.len() {
            *best = loads.len();
            return;
        }
        for b in 0..loads.len() {
            if loads[b] + sizes[k] <= cap {
                loads[b] += sizes[k];
                go(sizes, cap, k + 1, loads, best);
                loads[b] -= sizes[k];
            }
        }
        loads.push(sizes[k]);
        go(sizes, cap, k + 1, loads, best);
        loads.pop();
    }

    let mut best = n + 1;
    go(
        &bp.item_sizes,
        bp.bin_capacity,
        0,
        &mut Vec::new(),
        &mut best,
    );
    Ok(best)
}
