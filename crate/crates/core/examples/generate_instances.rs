// Seeded instance generation and the text format round trip.
//
//     cargo run --example generate_instances

use lmax::{generate_random, GenParams, Instance};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let params = GenParams {
        n: 6,
        m: 3,
        max_work: 9,
        max_deadline: 30,
        max_rate: 2,
        seed: 42,
    };
    let instance = generate_random(&params)?;
    let text = instance.to_string();
    print!("{text}");

    let again = generate_random(&params)?;
    assert_eq!(instance, again);
    assert_eq!(text.parse::<Instance>()?, instance);
    println!("# same seed, same instance; text parses back unchanged");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
