//! Command-line front end.
//!
//! [`RunConfig::from_args`] parses an argument list and [`run`] executes it,
//! returning the exit code and both output streams instead of writing them,
//! so tests can drive the exact same path as the `lmax` binary.
//!
//! Exit codes: 0 success (or feasible), 1 infeasible, 2 bad input,
//! 3 resource limit, 4 bad flags, 70 internal error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand};

use crate::binpack::{pack, BinPackInstance, Strategy};
use crate::error::Error;
use crate::feasibility::DEFAULT_MEMORY_CAP_BITS;
use crate::generate::{generate_random, GenParams};
use crate::instance::{Instance, Time};
use crate::oracle::{brute_force_min_lmax_capped, DEFAULT_ENUMERATION_CAP};
use crate::solver::{min_lmax_capped, probe_capped, OptimalResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_USAGE: i32 = 4;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Debug, Parser)]
#[command(
    name = "lmax",
    version,
    about = "Exact minimum maximum lateness on identical or related parallel machines"
)]
struct Args {
    #[command(subcommand)]
    config: RunConfig,
}

#[derive(Debug, Clone, PartialEq, Eq, Subcommand)]
pub enum RunConfig {
    /// Minimum Lmax and an optimal job-to-machine assignment
    Solve {
        /// Instance file, `-` for standard input
        #[arg(default_value = "-")]
        input: String,
        #[arg(long = "memory-cap-bits", default_value_t = DEFAULT_MEMORY_CAP_BITS)]
        memory_cap_bits: u128,
    },
    /// Is there a schedule with Lmax <= the given bound?
    Feasible {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long = "lmax", default_value_t = 0, allow_hyphen_values = true)]
        lmax: Time,
        #[arg(long = "memory-cap-bits", default_value_t = DEFAULT_MEMORY_CAP_BITS)]
        memory_cap_bits: u128,
    },
    /// Minimum Lmax by exhaustive enumeration
    Oracle {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long = "enum-cap", default_value_t = DEFAULT_ENUMERATION_CAP)]
        enumeration_cap: u128,
    },
    /// Fewest bins for a bin-packing file
    Binpack {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, default_value = "scan", value_parser = parse_strategy)]
        strategy: Strategy,
        #[arg(long = "memory-cap-bits", default_value_t = DEFAULT_MEMORY_CAP_BITS)]
        memory_cap_bits: u128,
    },
    /// Print a seeded random instance
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long = "max-work")]
        max_work: Time,
        #[arg(long = "max-deadline")]
        max_deadline: Time,
        #[arg(long = "max-rate", default_value_t = 1)]
        max_rate: Time,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    match s {
        "scan" => Ok(Strategy::Scan),
        "bisect" => Ok(Strategy::Bisect),
        other => Err(format!(
            "unknown strategy `{other}`, expected `scan` or `bisect`"
        )),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, err: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

impl RunConfig {
    /// Parses `args` (program name first). `--help` and `--version` come back
    /// as a successful [`Outcome`]; bad flags as exit code 4.
    pub fn from_args<I, T>(args: I) -> Result<RunConfig, Outcome>
    where
        I: IntoIterator<Item = T>,
        T: Into<OsString> + Clone,
    {
        match Args::try_parse_from(args) {
            Ok(a) => Ok(a.config),
            Err(e) => {
                let rendered = e.render().to_string();
                Err(if e.use_stderr() {
                    Outcome {
                        code: EXIT_USAGE,
                        stdout: String::new(),
                        stderr: rendered,
                    }
                } else {
                    Outcome::ok(rendered)
                })
            }
        }
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, Outcome> {
    let mut text = String::new();
    let res = if path == "-" {
        stdin.read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Outcome::error(EXIT_INPUT, format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Range(_) | Error::Precondition(_) => EXIT_INPUT,
        Error::ResourceLimit { .. } => EXIT_RESOURCE,
        Error::Structural(_) | Error::Internal(_) => EXIT_INTERNAL,
    }
}

fn fail(err: Error) -> Outcome {
    Outcome::error(exit_code(&err), err)
}

fn render_optimum(result: &OptimalResult) -> String {
    let mut out = String::new();
    match result.lmax {
        Some(l) => writeln!(out, "lmax: {l}").unwrap(),
        None => writeln!(out, "lmax: none").unwrap(),
    }
    for (id, &j) in result.assignment.machine_of.iter().enumerate() {
        writeln!(out, "job {id} -> machine {}", j + 1).unwrap();
    }
    out
}

fn load_instance(path: &str, stdin: &mut dyn Read) -> Result<Instance, Outcome> {
    let text = read_input(path, stdin)?;
    Instance::parse(&text).map_err(fail)
}

pub fn run(config: &RunConfig, stdin: &mut dyn Read) -> Outcome {
    match execute(config, stdin) {
        Ok(o) | Err(o) => o,
    }
}

fn execute(config: &RunConfig, stdin: &mut dyn Read) -> Result<Outcome, Outcome> {
    match config {
        RunConfig::Solve {
            input,
            memory_cap_bits,
        } => {
            let instance = load_instance(input, stdin)?;
            let result = min_lmax_capped(&instance, *memory_cap_bits).map_err(fail)?;
            Ok(Outcome::ok(render_optimum(&result)))
        }
        RunConfig::Feasible {
            input,
            lmax,
            memory_cap_bits,
        } => {
            let instance = load_instance(input, stdin)?;
            let feasible = probe_capped(&instance, *lmax, *memory_cap_bits)
                .map_err(fail)?
                .feasible;
            Ok(Outcome {
                code: if feasible { EXIT_OK } else { EXIT_INFEASIBLE },
                stdout: format!("feasible: {feasible}\n"),
                stderr: String::new(),
            })
        }
        RunConfig::Oracle {
            input,
            enumeration_cap,
        } => {
            let instance = load_instance(input, stdin)?;
            let result = brute_force_min_lmax_capped(&instance, *enumeration_cap).map_err(fail)?;
            Ok(Outcome::ok(render_optimum(&result)))
        }
        RunConfig::Binpack {
            input,
            strategy,
            memory_cap_bits,
        } => {
            let text = read_input(input, stdin)?;
            let bp = BinPackInstance::parse(&text).map_err(fail)?;
            if bp.num_items() == 0 {
                return Ok(Outcome::ok("bins: 0\n".into()));
            }
            let packing = pack(&bp, *strategy, *memory_cap_bits).map_err(fail)?;
            let mut out = format!("bins: {}\n", packing.bins);
            for (i, &b) in packing.bin_of.iter().enumerate() {
                writeln!(out, "item {i} -> bin {}", b + 1).unwrap();
            }
            Ok(Outcome::ok(out))
        }
        RunConfig::Gen {
            n,
            m,
            max_work,
            max_deadline,
            max_rate,
            seed,
        } => {
            let params = GenParams {
                n: *n,
                m: *m,
                max_work: *max_work,
                max_deadline: *max_deadline,
                max_rate: *max_rate,
                seed: *seed,
            };
            let instance = generate_random(&params).map_err(|e| Outcome::error(EXIT_USAGE, e))?;
            Ok(Outcome::ok(instance.to_string()))
        }
    }
}
