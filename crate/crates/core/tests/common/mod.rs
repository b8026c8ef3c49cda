#![allow(dead_code)]

use gpcheck::checker::{check_i, check_iii, check_v};
use gpcheck::generate::random_string;
use gpcheck::{enumerate_partitions, is_word_wise, GaussParagraph, WordWisePartition};
use rand::seq::IndexedRandom;
use rand::Rng;

pub fn gp(words: &[&str]) -> GaussParagraph {
    GaussParagraph::from_words(words.iter().map(|w| w.split_whitespace())).unwrap()
}

/// A random pair passing conditions (i), (iii) and (v), drawn from the
/// paragraphs of random strings and their first word-wise partitions.
pub fn random_constructible_pair<R: Rng>(rng: &mut R) -> (GaussParagraph, WordWisePartition) {
    loop {
        let s = random_string(rng, 8, 4);
        let p = s.underlying_paragraph();
        if check_i(&p).is_some() || check_iii(&p).is_some() {
            continue;
        }
        let mut candidates: Vec<WordWisePartition> = enumerate_partitions(&p).take(64).collect();
        if let Ok(induced) = s.induced_partition() {
            if is_word_wise(&p, &induced).is_ok() {
                candidates.push(induced);
            }
        }
        let good: Vec<_> = candidates
            .into_iter()
            .filter(|part| check_v(&p, part).is_none())
            .collect();
        if let Some(part) = good.choose(rng) {
            return (p, part.clone());
        }
    }
}
