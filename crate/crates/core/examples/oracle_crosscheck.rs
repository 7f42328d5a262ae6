// Cross-checks the dynamic program against exhaustive enumeration on a batch
// of seeded random instances.
//
//     cargo run --release --example oracle_crosscheck

use lmax::{brute_force_min_lmax, generate_random, min_lmax, GenParams};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut agreed = 0;
    for seed in 0..200 {
        let params = GenParams {
            n: 1 + (seed % 7) as usize,
            m: 1 + (seed % 3) as usize,
            max_work: 5,
            max_deadline: 15,
            max_rate: 3,
            seed,
        };
        let instance = generate_random(&params)?;
        let dp = min_lmax(&instance)?;
        let exhaustive = brute_force_min_lmax(&instance)?;
        if dp.lmax != exhaustive.lmax {
            return Err(format!(
                "seed {seed}: {:?} vs {:?}\n{instance}",
                dp.lmax, exhaustive.lmax
            )
            .into());
        }
        agreed += 1;
    }
    println!("dynamic program and enumeration agree on {agreed} instances");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
