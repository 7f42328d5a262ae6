// Uniformly related machines: machine `j` needs `rate_j` time per unit of
// work. Scaling every rate and deadline by `c` scales the optimum by `c`.
//
//     cargo run --example related_machines

use lmax::{min_lmax, search_bounds, Instance, MachinePark};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let park = MachinePark::new(vec![1, 2, 3])?;
    let jobs = [(4, 4), (3, 3), (2, 5), (5, 8), (1, 2), (2, 6)];
    let instance = Instance::new(park, jobs)?;

    let bounds = search_bounds(&instance)?;
    println!("searching Lmax in [{}, {}]", bounds.lo, bounds.hi);
    let best = min_lmax(&instance)?;
    let lmax = best.lmax.unwrap();
    println!("optimal Lmax = {lmax}");
    for (machine, rate) in instance.machines().rates().iter().enumerate() {
        let ids: Vec<usize> = (0..instance.num_jobs())
            .filter(|&id| best.assignment.machine_of[id] == machine)
            .collect();
        println!("  machine {} (rate {rate}): jobs {ids:?}", machine + 1);
    }

    let c = 3;
    let scaled = Instance::new(
        MachinePark::new(instance.machines().rates().iter().map(|r| r * c).collect())?,
        instance.jobs().iter().map(|j| (j.work, j.deadline * c)),
    )?;
    let scaled_lmax = min_lmax(&scaled)?.lmax.unwrap();
    println!("rates and deadlines times {c}: Lmax = {scaled_lmax}");
    assert_eq!(scaled_lmax, c * lmax);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
