// Bin packing solved through the scheduling test: items become jobs due at
// the bin capacity, and `m` bins suffice iff `m` machines are feasible.
//
//     cargo run --example bin_packing

use lmax::binpack::{pack, to_scheduling_instance, Strategy};
use lmax::{brute_force_min_bins, feasible_general, BinPackInstance, DEFAULT_MEMORY_CAP_BITS};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let bp: BinPackInstance = "10\n5\n6\n5\n4\n3\n2\n".parse()?;
    println!(
        "items {:?}, capacity {}",
        bp.item_sizes(),
        bp.bin_capacity()
    );
    println!("volume bound: {} bins", bp.volume_bound());

    for m in 1..=3 {
        let feasible = feasible_general(&to_scheduling_instance(&bp, m)?)?.feasible;
        println!("  {m} machine(s) feasible: {feasible}");
    }

    let scan = pack(&bp, Strategy::Scan, DEFAULT_MEMORY_CAP_BITS)?;
    let bisect = pack(&bp, Strategy::Bisect, DEFAULT_MEMORY_CAP_BITS)?;
    assert_eq!(scan.bins, bisect.bins);
    assert_eq!(scan.bins, brute_force_min_bins(&bp)?);
    for bin in 0..scan.bins {
        let items: Vec<_> = bp
            .item_sizes()
            .iter()
            .zip(&scan.bin_of)
            .filter(|(_, &b)| b == bin)
            .map(|(s, _)| *s)
            .collect();
        println!("  bin {}: {items:?}", bin + 1);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
