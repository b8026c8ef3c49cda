//! Genus of the ribbon surface of a virtual string, with its boundary walk.
//!
//! cargo run --example genus_oracle [string.json]

use gpcheck::surface::certificate;
use gpcheck::{genus, VirtualString};

fn main() -> gpcheck::Result<()> {
    let texts = match std::env::args().nth(1) {
        Some(path) => {
            vec![std::fs::read_to_string(path).map_err(|e| gpcheck::Error::Io(e.to_string()))?]
        }
        None => vec![
            r#"{"circles":[["a+","a-"]]}"#.to_string(),
            r#"{"circles":[["a+","b+","a-","b-"]]}"#.to_string(),
            r#"{"circles":[["a+","b-"],["a-","b+"]]}"#.to_string(),
        ],
    };
    for text in texts {
        let s = VirtualString::from_json(&text)?;
        let g = genus(&s);
        println!("{} -> {g}", s.to_json());
        if g.is_planar() {
            for (k, face) in certificate(&s).iter().enumerate() {
                println!("  boundary {k}: {}", face.join(" "));
            }
        }
    }
    Ok(())
}
