// Two identical machines: the time-indexed table next to the general
// work-indexed layers. Row `i` lists the times at which machine 1 can finish
// after the first `i` EDD jobs; both tables hold the same cells.
//
//     cargo run --example two_machines

use lmax::feasibility::{build_layers, two_machine_table};
use lmax::{feasible_two_machines, Instance, DEFAULT_MEMORY_CAP_BITS};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let instance: Instance = "2 1 1\n4\n2 2\n2 2\n2 4\n2 4\n".parse()?;

    let table = two_machine_table(&instance, DEFAULT_MEMORY_CAP_BITS)?;
    let layers = build_layers(&instance, DEFAULT_MEMORY_CAP_BITS)?;
    println!("EDD order: {:?}", table.order());
    for (row, layer) in layers.layers().iter().enumerate() {
        let times = table.row_times(row);
        let loads: Vec<usize> = layer.true_cells().into_iter().map(|c| c[0]).collect();
        println!("  row {row}: machine 1 can finish at {times:?}");
        assert_eq!(times, loads);
    }

    let result = feasible_two_machines(&instance)?;
    let witness = result.witness.expect("feasible");
    println!(
        "feasible, machines per job: {:?}",
        witness.machine_of.iter().map(|j| j + 1).collect::<Vec<_>>()
    );

    let crowded: Instance = "2 1 1\n3\n1 1\n1 1\n1 1\n".parse()?;
    assert!(!feasible_two_machines(&crowded)?.feasible);
    println!("three unit jobs due at 1 do not fit on two machines");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
