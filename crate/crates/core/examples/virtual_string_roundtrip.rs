//! Build the virtual string of a paragraph and partition, then recover both.

use gpcheck::{enumerate_partitions, GaussParagraph, VirtualString};

fn main() -> gpcheck::Result<()> {
    let p = GaussParagraph::parse("a b c c\na b\n")?;
    for part in enumerate_partitions(&p) {
        let s = match VirtualString::construct_from_pair(&p, &part) {
            Ok(s) => s,
            Err(e) => {
                println!("{}: not constructible ({e})", part.to_json(&p));
                continue;
            }
        };
        let back = s.induced_partition()?;
        println!("{}", part.to_json(&p));
        println!("  string   {}", s.to_json());
        println!("  induced  {}", back.to_json(&p));
        assert!(back.equal_up_to_swaps(&part));
        assert_eq!(s.underlying_paragraph(), p);
    }
    Ok(())
}
