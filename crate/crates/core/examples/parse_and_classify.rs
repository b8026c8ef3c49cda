//! Parse a paragraph and list the role of every letter.
//!
//! cargo run --example parse_and_classify [file.gp]

use gpcheck::GaussParagraph;

fn main() -> gpcheck::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| gpcheck::Error::Io(e.to_string()))?
        }
        None => "a b c c\na b\n".to_string(),
    };
    let p = GaussParagraph::parse(&text)?;
    println!("{} words, {} letters", p.n_words(), p.n_letters());
    for n in 0..p.n_words() {
        let (singles, doubles) = p.classify_letters(n);
        println!(
            "word {n}: doubles {:?}, singles {:?}",
            p.tokens_of(&doubles),
            p.tokens_of(&singles)
        );
        for i in p.double_letters(n) {
            let (pi, pi_) = p.p_sets(i)?;
            println!(
                "  {}: w = {:?}, p = {:?}, p' = {:?}",
                p.token(i),
                p.tokens_of(&p.w_set(i)?),
                p.tokens_of(&pi),
                p.tokens_of(&pi_)
            );
        }
    }
    print!("canonical text:\n{}", p.serialize());
    Ok(())
}
