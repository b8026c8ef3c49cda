//! Decide realizability of a paragraph and print the report.
//!
//! cargo run --example check_realizability [file.gp]

use gpcheck::checker::realizability_json;
use gpcheck::{realizable, CheckOptions, GaussParagraph, Realizability};

fn main() -> gpcheck::Result<()> {
    let texts = match std::env::args().nth(1) {
        Some(path) => {
            vec![std::fs::read_to_string(path).map_err(|e| gpcheck::Error::Io(e.to_string()))?]
        }
        None => [
            "a a\n",
            "a b a b\n",
            "a b\na b\n",
            "a b\na c b d\nc d\n",
            "a b b\na c c\n",
        ]
        .map(String::from)
        .to_vec(),
    };
    let opts = CheckOptions::default();
    for text in texts {
        let p = GaussParagraph::parse(&text)?;
        let r = realizable(&p, &opts);
        println!("== {}", text.trim().replace('\n', " / "));
        match &r {
            Realizability::Realizable(c) => {
                println!("realizable with {}", c.partition.to_json(&p));
                println!("oracle: {}", c.oracle);
            }
            Realizability::NotRealizable { reason, first } => {
                println!("not realizable ({reason:?})");
                if let Some((_, report)) = first {
                    if let Some((c, w)) = report.first_failure() {
                        println!("first failure ({c}): {}", w.message);
                    }
                }
            }
            Realizability::Indeterminate { .. } => println!("indeterminate"),
        }
        println!("{}", realizability_json(&p, &r));
    }
    Ok(())
}
