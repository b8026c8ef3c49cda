//! Enumerate the cyclic sequences of a paragraph and evaluate the parity
//! maps for one partition.

use gpcheck::cyclic::{compatible_with_dp, w_map, DpOutcome};
use gpcheck::{enumerate_dp, enumerate_partitions, GaussParagraph};

fn main() -> gpcheck::Result<()> {
    let p = GaussParagraph::parse("a b\na c d b\nc d\n")?;
    let family = enumerate_dp(&p, 1000);
    println!(
        "{} cyclic sequences (truncated: {})",
        family.sequences.len(),
        family.truncated
    );
    let part = enumerate_partitions(&p).next().expect("a partition exists");
    println!("partition {}", part.to_json(&p));
    for d in &family.sequences {
        let connectors: Vec<&str> = d.connectors().iter().map(|&c| p.token(c)).collect();
        let w: Vec<usize> = (0..p.n_words()).map(|n| w_map(&p, &part, n, d)).collect();
        println!("words {:?} via {:?}: W = {w:?}", d.chain(), connectors);
    }
    match compatible_with_dp(&p, &part, &family) {
        DpOutcome::Compatible => println!("compatible with every sequence"),
        DpOutcome::Incompatible(f) => println!("incompatible: {f:?}"),
        DpOutcome::Indeterminate => println!("family truncated"),
    }
    Ok(())
}
