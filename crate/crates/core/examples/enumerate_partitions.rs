//! Word-wise partitions of a paragraph, one per class of per-word swaps.
//!
//! cargo run --example enumerate_partitions [file.gp]

use gpcheck::{enumerate_partitions, GaussParagraph};

fn main() -> gpcheck::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| gpcheck::Error::Io(e.to_string()))?
        }
        None => "a b\na c d b\nc d\n".to_string(),
    };
    let p = GaussParagraph::parse(&text)?;
    let mut count = 0;
    for part in enumerate_partitions(&p) {
        println!("{}", part.to_json(&p));
        count += 1;
    }
    println!("{count} partitions");

    // Words sharing an odd number of letters admit none.
    let odd = GaussParagraph::parse("a b b\na c c\n")?;
    println!(
        "odd sharing: {} partitions",
        enumerate_partitions(&odd).count()
    );
    Ok(())
}
