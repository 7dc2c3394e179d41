// Cross-checks the engine against brute force and inclusion-exclusion on a
// handful of seeded random systems.

use std::error::Error;

use etrans::engine::{run, RunOptions};
use etrans::{analytics, oracles, Hypergraph};

/// Small xorshift generator so the example needs no extra dependencies.
struct XorShift(u64);

impl XorShift {
    fn below(&mut self, n: usize) -> usize {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        (self.0 % n as u64) as usize
    }
}

fn random_system(rng: &mut XorShift) -> Hypergraph {
    let w = 3 + rng.below(10);
    let h = 1 + rng.below(8);
    let edges = (0..h).map(|_| {
        let mut e: Vec<usize> = (1..=w).filter(|_| rng.below(3) == 0).collect();
        if e.is_empty() {
            e.push(1 + rng.below(w));
        }
        e
    });
    Hypergraph::from_edges(w, edges.collect::<Vec<_>>())
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let mut rng = XorShift(0x9e37_79b9_7f4a_7c15);
    println!("{:>3} {:>3} {:>3} {:>8} {:>8} {:>8}", "w", "h", "R", "engine", "brute", "incl-ex");
    for _ in 0..12 {
        let h = random_system(&mut rng);
        let family = run(&h, RunOptions::default());
        let engine = analytics::count_total(&family)?;
        let brute = oracles::brute_transversals(&h)?.len();
        let ie = oracles::inclusion_exclusion_count(&h, None)?;
        println!("{:>3} {:>3} {:>3} {engine:>8} {brute:>8} {ie:>8}", h.w(), h.h(), family.len());
        if engine != ie || engine != brute.into() {
            return Err(format!("disagreement on\n{h}").into());
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
