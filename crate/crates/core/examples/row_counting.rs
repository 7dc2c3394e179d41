// Size-by-size counts for a single row with four bubbles of sizes 2, 3, 3
// and 4, together with the intermediate table built one bubble at a time.

use std::error::Error;

use etrans::row::bubble_segment_counts;
use etrans::Row;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let r0 = Row::from_tokens("e1 e1 e2 e2 e2 e3 e3 e3 e4 e4 e4 e4")?;
    println!("r0 = {r0}, |r0| = {}", r0.size());

    let sizes = r0.bubble_sizes();
    let table = bubble_segment_counts(&sizes, 5);
    println!("{:>8} {:>6} {:>6} {:>6} {:>6} {:>6}", "bubbles", "k=1", "k=2", "k=3", "k=4", "k=5");
    for (i, counts) in table.iter().enumerate() {
        let cells: Vec<String> = counts[1..].iter().map(|c| format!("{c:>6}")).collect();
        println!("{:>8} {}", format!("1..{}", i + 1), cells.join(" "));
    }

    let counts = r0.card_counts(r0.w());
    for (k, c) in counts.iter().enumerate().skip(r0.c_min()) {
        println!("Card(r0, {k:>2}) = {c}");
    }
    assert_eq!(counts[4], 72u32.into());
    assert_eq!(counts[7], 594u32.into());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
