// Runs the engine on the 14-vertex, 6-edge example system and prints the
// final rows with their sizes and the overall counts.
//
//     cargo run --example golden_system

use std::error::Error;

use etrans::engine::{run, RunOptions};
use etrans::{analytics, Hypergraph};

const SYSTEM: &str = "14 6
3 4 9
5 10
6 7 11 12
8 13 14
1 2 3 4 5 6 7 8
3 4 5 8 12 13
";

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let h = Hypergraph::parse(SYSTEM)?;
    let family = run(&h, RunOptions::default());

    for (i, row) in family.rows.iter().enumerate() {
        println!("r{} = {:<40} |r| = {}", i + 1, row.render(), row.size());
    }
    let total = analytics::count_total(&family)?;
    let (k_min, tau_min) = analytics::transversal_number(&family)?;
    println!("N = {total}, R = {}, k_min = {k_min}, tau_min = {tau_min}", family.len());
    println!(
        "impositions = {}, s_max = {}, max_stack = {}",
        family.stats.impositions, family.stats.max_sons, family.stats.max_stack
    );

    assert_eq!(total, 8784u32.into());
    assert_eq!(family.len(), 7);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
