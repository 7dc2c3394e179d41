// Minimum transversals of a small system: the transversal number, how many
// transversals attain it, and the full size spectrum.

use std::error::Error;

use etrans::engine::{run, EdgeOrder, RunOptions};
use etrans::{analytics, Hypergraph};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // a 6-cycle seen as a graph: minimum transversals are minimum vertex covers
    let h = Hypergraph::from_edges(6, [vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 5], vec![5, 6], vec![6, 1]]);
    let family = run(&h, RunOptions { order: EdgeOrder::SizeAscending, ..RunOptions::default() });

    let (k_min, tau_min) = analytics::transversal_number(&family)?;
    println!("{} rows, k_min = {k_min}, tau_min = {tau_min}", family.len());
    for k in analytics::generate_all_k(&family, k_min)? {
        println!("  {{{k}}}");
    }

    let spectrum = analytics::spectrum(&family)?;
    for (k, c) in spectrum.counts.iter().enumerate() {
        println!("tau_{k} = {c}");
    }

    // pruned run: only rows that can still reach size 5
    let pruned = run(&h, RunOptions { min_card: Some(5), ..RunOptions::default() });
    println!("at least 5: {} (from {} rows)", analytics::count_at_least(&pruned, 5)?, pruned.len());

    assert_eq!((k_min, tau_min), (3, 2u32.into()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
