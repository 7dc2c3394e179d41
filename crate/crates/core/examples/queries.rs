// Restricting the transversal family with required and forbidden vertices.

use std::error::Error;

use etrans::engine::{run, RunOptions};
use etrans::{analytics, Hypergraph, VertexSet};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let h = Hypergraph::from_edges(
        14,
        [
            vec![3, 4, 9],
            vec![5, 10],
            vec![6, 7, 11, 12],
            vec![8, 13, 14],
            vec![1, 2, 3, 4, 5, 6, 7, 8],
            vec![3, 4, 5, 8, 12, 13],
        ],
    );
    let family = run(&h, RunOptions::default());

    let require = VertexSet::from([8, 9]);
    let forbid = VertexSet::from([7]);
    let filtered = analytics::filter_family(&family, &require, &forbid)?;
    println!("require {{{require}}}, forbid {{{forbid}}}:");
    for row in &filtered.rows {
        println!("  {row}");
    }
    println!("N = {}", analytics::count_total(&filtered)?);

    // a single-vertex question: how many transversals avoid vertex 10?
    let without_10 = analytics::filter_family(&family, &VertexSet::new(), &VertexSet::from([10]))?;
    println!("without 10: {}", analytics::count_total(&without_10)?);

    match analytics::filter_family(&family, &VertexSet::from([3]), &VertexSet::from([3])) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
