// How many distinct rows exist on w vertices, by formula and by listing.

use std::error::Error;

use etrans::oracles::{row_census, row_census_brute, CENSUS_BRUTE_MAX_W};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for w in 0..=10 {
        let f = row_census(w);
        if w <= CENSUS_BRUTE_MAX_W {
            let listed = row_census_brute(w)?;
            println!("f({w}) = {f} (listed: {listed})");
            assert_eq!(f, listed);
        } else {
            println!("f({w}) = {f}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
