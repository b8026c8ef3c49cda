//! Check the verdict on random strings against the genus oracle.
//!
//! cargo run --release --example fuzz_crossvalidate [count] [seed]

use gpcheck::cli::fuzz_case;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> gpcheck::Result<()> {
    let mut args = std::env::args().skip(1);
    let count: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(500);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let (mut planar, mut agree) = (0, 0);
    for _ in 0..count {
        let case_seed: u64 = master.random();
        let c = fuzz_case(case_seed, 8, 4)?;
        planar += u64::from(gpcheck::genus(&c.string).is_planar());
        match c.check.agree() {
            Some(true) => agree += 1,
            _ => println!(
                "disagreement, case seed {case_seed}: {}",
                c.string.to_json()
            ),
        }
    }
    println!("{agree}/{count} agree ({planar} planar strings)");
    Ok(())
}
