//! The mod 2 intersection form on the basis classes of a constructed string.

use gpcheck::homology::{all_even, basis_cycles, BEval, IntersectionForm};
use gpcheck::{enumerate_partitions, genus, GaussParagraph};

fn main() -> gpcheck::Result<()> {
    for text in ["a b\na c d b\nc d\n", "a b\na c b d\nc d\n"] {
        let p = GaussParagraph::parse(text)?;
        let basis = basis_cycles(&p);
        println!("paragraph {:?}", text.trim().replace('\n', " / "));
        for part in enumerate_partitions(&p) {
            let form = IntersectionForm::new(&p, &part);
            let Some(s) = form.string() else {
                println!("  {}: no string", part.to_json(&p));
                continue;
            };
            println!("  {} genus {}", part.to_json(&p), genus(s).genus);
            for (k, c1) in basis.classes.iter().enumerate() {
                let row: Vec<String> = basis
                    .classes
                    .iter()
                    .map(|c2| match form.b_mod2(c1, c2) {
                        BEval::Parity(v) => v.to_string(),
                        BEval::NotApplicable(_) => "-".to_string(),
                    })
                    .collect();
                println!("    {k:>2} {:<24} {}", c1.describe(&p), row.join(" "));
            }
            println!("    {:?}", all_even(&form, &basis));
        }
    }
    Ok(())
}
