//! Exact minimisation of maximum lateness (`Lmax`) for `n` jobs on `m`
//! identical or uniformly related parallel machines (`Pm||Lmax`, `Qm||Lmax`).
//!
//! The pieces, bottom up:
//!
//! * [`instance`]: jobs, machine parks, assignments, EDD ordering and schedule
//!   evaluation, plus the text format.
//! * [`feasibility`]: pseudopolynomial layered DP deciding whether every job
//!   can meet its deadline, with witness reconstruction. A time-indexed table
//!   for two identical machines sits next to the general work-indexed one.
//! * [`solver`]: bisection over deadline shifts for the optimal `Lmax`.
//! * [`oracle`]: exhaustive solvers used to check all of the above.
//! * [`binpack`]: exact bin packing through the feasibility test.
//! * [`generate`]: seeded random instances.
//! * [`cli`]: the `lmax` command.
//!
//! ```
//! use lmax::{min_lmax, Instance};
//!
//! let instance: Instance = "2 1 1\n3\n1 1\n1 1\n1 1\n".parse().unwrap();
//! let best = min_lmax(&instance).unwrap();
//! assert_eq!(best.lmax, Some(1));
//! ```

pub mod binpack;
pub mod cli;
pub mod error;
pub mod feasibility;
pub mod generate;
pub mod instance;
pub mod oracle;
pub mod solver;
mod text;

pub use binpack::{brute_force_min_bins, min_bins, pack, BinPackInstance, Packing, Strategy};
pub use error::{Error, Result};
pub use feasibility::{
    build_layers, feasible_general, feasible_two_machines, reconstruct_assignment, DpLayer,
    DpTable, FeasibilityResult, DEFAULT_MEMORY_CAP_BITS,
};
pub use generate::{generate_bin_packing, generate_random, GenParams};
pub use instance::{
    edd_order, evaluate_schedule, shift_deadlines, Assignment, Instance, Job, LatenessReport,
    MachinePark, Time,
};
pub use oracle::{brute_force_all_orders_feasible, brute_force_feasible, brute_force_min_lmax};
pub use solver::{min_lmax, probe, search_bounds, OptimalResult, SearchBounds};
