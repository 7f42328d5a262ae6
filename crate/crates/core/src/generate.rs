//! Seeded random instances.
//!
//! The generator is xoshiro256** seeded through SplitMix64 (both public
//! domain, Blackman and Vigna). Values are drawn in this order: the `m` rates,
//! then `work, deadline` for each job. A value uniform in `[lo, hi]` is
//! `lo + x % span` for the first 64-bit output `x` below the largest multiple
//! of `span = hi - lo + 1`, so the stream maps to instances without bias and
//! without depending on any library's range-sampling algorithm.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::binpack::BinPackInstance;
use crate::error::{Error, Result};
use crate::instance::{Instance, MachinePark, Time};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenParams {
    pub n: usize,
    pub m: usize,
    pub max_work: Time,
    pub max_deadline: Time,
    pub max_rate: Time,
    pub seed: u64,
}

pub fn generate_random(params: &GenParams) -> Result<Instance> {
    let GenParams {
        n,
        m,
        max_work,
        max_deadline,
        max_rate,
        seed,
    } = *params;
    if m < 1 {
        return Err(Error::Range("m must be >= 1".into()));
    }
    if max_work < 1 {
        return Err(Error::Range(format!(
            "max_work must be >= 1, got {max_work}"
        )));
    }
    if max_deadline < 0 {
        return Err(Error::Range(format!(
            "max_deadline must be >= 0, got {max_deadline}"
        )));
    }
    if max_rate < 1 {
        return Err(Error::Range(format!(
            "max_rate must be >= 1, got {max_rate}"
        )));
    }

    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let rates = (0..m).map(|_| uniform(&mut rng, 1, max_rate)).collect();
    let jobs: Vec<(Time, Time)> = (0..n)
        .map(|_| {
            let work = uniform(&mut rng, 1, max_work);
            let deadline = uniform(&mut rng, 0, max_deadline);
            (work, deadline)
        })
        .collect();
    Instance::new(MachinePark::new(rates)?, jobs)
}

/// Random bin-packing instance: capacity uniform in `[1, max_capacity]`,
/// then `n` sizes uniform in `[1, min(max_size, capacity)]`.
pub fn generate_bin_packing(
    n: usize,
    max_size: Time,
    max_capacity: Time,
    seed: u64,
) -> Result<BinPackInstance> {
    if max_size < 1 || max_capacity < 1 {
        return Err(Error::Range(format!(
            "max_size and max_capacity must be >= 1, got {max_size} and {max_capacity}"
        )));
    }
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let capacity = uniform(&mut rng, 1, max_capacity);
    let top = max_size.min(capacity);
    let sizes = (0..n).map(|_| uniform(&mut rng, 1, top)).collect();
    BinPackInstance::new(sizes, capacity)
}

/// Uniform integer in `[lo, hi]` by rejection sampling.
pub(crate) fn uniform<R: RngCore>(rng: &mut R, lo: Time, hi: Time) -> Time {
    debug_assert!(lo <= hi);
    let span = (hi as i128 - lo as i128 + 1) as u128;
    if span > u64::MAX as u128 {
        return rng.next_u64() as Time;
    }
    let span = span as u64;
    let zone = u64::MAX - (u64::MAX % span + 1) % span;
    loop {
        let x = rng.next_u64();
        if x <= zone {
            return (lo as i128 + (x % span) as i128) as Time;
        }
    }
}
