// Lists the 6-element members of one row in generation order.

use std::error::Error;

use etrans::Row;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let row = Row::from_tokens("2 e2 e1 2 1 e2 e1 0 e2")?;
    let k = 6;
    println!("row {row}, k = {k}, Card = {}", row.card(k));

    let mut sets = row.k_subsets(k);
    for (i, x) in sets.by_ref().enumerate() {
        println!("{:>3}: {{{}}}", i + 1, x.to_vec().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
    }
    println!("max stack depth = {}", sets.max_stack());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
