// Optimal maximum lateness for a small instance, with the schedule it
// comes from and the probe that proves nothing better exists.
//
//     cargo run --example solve_lmax

use lmax::{evaluate_schedule, min_lmax, probe, Instance};

const INSTANCE: &str = "\
# five jobs on two identical machines
2 1 1
5
3 4
2 4
4 7
1 2
3 9
";

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let instance: Instance = INSTANCE.parse()?;
    let best = min_lmax(&instance)?;
    let lmax = best.lmax.expect("instance has jobs");
    println!("optimal Lmax = {lmax} after {} probes", best.probes);

    let report = evaluate_schedule(&instance, &best.assignment)?;
    for job in instance.jobs() {
        println!(
            "  job {} (work {}, due {}) on machine {} finishes at {}",
            job.id,
            job.work,
            job.deadline,
            best.assignment.machine_of[job.id] + 1,
            report.per_job_completion[job.id]
        );
    }
    assert_eq!(report.lmax, Some(lmax));
    assert!(!probe(&instance, lmax - 1)?.feasible);
    println!("no schedule reaches Lmax = {}", lmax - 1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
