mod common;

use std::collections::BTreeSet;

use gpcheck::checker::{self, check_pair, CheckOptions};
use gpcheck::cyclic::{d_map, delta, delta_cases, enumerate_dp, q_map, w_map};
use gpcheck::generate::random_string;
use gpcheck::partition::{enumerate_partitions_raw, Side, Slot};
use gpcheck::surface::genus;
use gpcheck::{
    enumerate_partitions, is_word_wise, ArcChoice, GaussParagraph, Span, VirtualString,
    WordWisePartition,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::random_constructible_pair;

fn string_from(seed: u64, arrows: usize, circles: usize) -> VirtualString {
    random_string(&mut ChaCha8Rng::seed_from_u64(seed), arrows, circles)
}

fn tokens(p: &GaussParagraph) -> Vec<Vec<String>> {
    (0..p.n_words())
        .map(|n| {
            p.word(n)
                .letters()
                .iter()
                .map(|&id| p.token(id).to_string())
                .collect()
        })
        .collect()
}

/// The same paragraph with word `n` stored rotated left by `shifts[n]`.
fn rotated(p: &GaussParagraph, shifts: &[usize]) -> GaussParagraph {
    let words = tokens(p).into_iter().zip(shifts).map(|(mut w, &s)| {
        let len = w.len();
        w.rotate_left(s % len);
        w
    });
    GaussParagraph::from_words(words).unwrap()
}

/// Every assignment of letters to slots that passes the word-wise test.
fn brute_force_partitions(p: &GaussParagraph) -> Vec<WordWisePartition> {
    let slots: Vec<Slot> = (0..p.n_words())
        .flat_map(|word| [Side::Plain, Side::Primed].map(|side| Slot { word, side }))
        .collect();
    let k = p.n_letters();
    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    loop {
        let part =
            WordWisePartition::from_slots(p, idx.iter().map(|&i| slots[i]).collect()).unwrap();
        if is_word_wise(p, &part).is_ok() {
            out.push(part);
        }
        let mut d = 0;
        loop {
            if d == k {
                return out;
            }
            idx[d] += 1;
            if idx[d] < slots.len() {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn text_format_round_trips(seed in any::<u64>()) {
        let p = string_from(seed, 8, 4).underlying_paragraph();
        let text = p.serialize();
        let back = GaussParagraph::parse(&text).unwrap();
        prop_assert_eq!(back.serialize(), text);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn string_json_round_trips(seed in any::<u64>()) {
        let s = string_from(seed, 8, 4);
        let back = VirtualString::from_json(&s.to_json()).unwrap();
        prop_assert_eq!(back.to_json(), s.to_json());
        prop_assert_eq!(genus(&back), genus(&s));
    }

    #[test]
    fn interlacing_is_symmetric(seed in any::<u64>()) {
        let p = string_from(seed, 8, 3).underlying_paragraph();
        let doubles: Vec<_> = p.letter_ids().filter(|&i| p.is_double(i)).collect();
        for &i in &doubles {
            for &j in &doubles {
                if p.home_word(i) != p.home_word(j) {
                    continue;
                }
                prop_assert_eq!(p.interlaced(i, j).unwrap(), p.interlaced(j, i).unwrap());
                prop_assert_eq!(p.w_set(i).unwrap().contains(j), p.w_set(j).unwrap().contains(i));
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force(seed in any::<u64>()) {
        let p = string_from(seed, 6, 3).underlying_paragraph();
        let brute = brute_force_partitions(&p);
        let raw: Vec<_> = enumerate_partitions_raw(&p).collect();
        let as_set = |v: &[WordWisePartition]| v.iter().map(|x| x.slots().to_vec()).collect::<BTreeSet<_>>();
        prop_assert_eq!(raw.len(), brute.len());
        prop_assert_eq!(as_set(&raw), as_set(&brute));
        let canonical: BTreeSet<_> = brute.iter().map(|x| x.canonical().slots().to_vec()).collect();
        let listed: Vec<_> = enumerate_partitions(&p).collect();
        prop_assert_eq!(listed.len(), canonical.len());
        prop_assert_eq!(as_set(&listed).len(), listed.len());
    }

    #[test]
    fn checks_ignore_word_swaps(seed in any::<u64>(), word in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, part) = random_constructible_pair(&mut rng);
        let mut swapped = part.clone();
        swapped.swap_word(word % p.n_words());
        let opts = CheckOptions::default();
        let a = check_pair(&p, &part, &opts).unwrap();
        let b = check_pair(&p, &swapped, &opts).unwrap();
        let pa: Vec<bool> = a.statuses().map(|(_, s)| s.passed()).collect();
        let pb: Vec<bool> = b.statuses().map(|(_, s)| s.passed()).collect();
        prop_assert_eq!(pa, pb);
    }

    #[test]
    fn verdict_ignores_word_rotation(seed in any::<u64>(), shifts in prop::collection::vec(0usize..16, 4)) {
        let p = string_from(seed, 6, 3).underlying_paragraph();
        let q = rotated(&p, &shifts);
        let opts = CheckOptions::default();
        prop_assert_eq!(
            checker::realizable(&p, &opts).verdict_name(),
            checker::realizable(&q, &opts).verdict_name()
        );
        prop_assert_eq!(enumerate_partitions(&p).count(), enumerate_partitions(&q).count());
    }

    #[test]
    fn delta_cases_agree(seed in any::<u64>(), picks in prop::collection::vec(0usize..64, 4)) {
        let p = string_from(seed, 8, 3).underlying_paragraph();
        let n = picks[0] % p.n_words();
        let len = p.word(n).len();
        prop_assume!(len >= 2);
        // Arcs always join two distinct positions.
        let other = |x: usize, y: usize| (x + 1 + y % (len - 1)) % len;
        let (a, y) = (picks[0] % len, picks[2] % len);
        let f = Span::between_positions(n, a, other(a, picks[1]));
        let s = Span::between_positions(n, y, other(y, picks[3]));
        let cases = delta_cases(&p, &f, &s);
        prop_assert!(!cases.is_empty());
        let values: BTreeSet<usize> = cases.iter().map(|&(_, v)| v).collect();
        prop_assert_eq!(values.len(), 1, "cases {:?}", cases);
    }

    #[test]
    fn delta_ignores_word_rotation(seed in any::<u64>(), picks in prop::collection::vec(0usize..64, 4), shift in 0usize..16) {
        let p = string_from(seed, 8, 3).underlying_paragraph();
        let n = picks[0] % p.n_words();
        let len = p.word(n).len();
        let mut shifts = vec![0; p.n_words()];
        shifts[n] = shift % len;
        let q = rotated(&p, &shifts);
        let moved = |pos: usize| (pos + len - shifts[n]) % len;
        let pos: Vec<usize> = picks.iter().map(|x| x % len).collect();
        let f = Span::between_positions(n, pos[0], pos[1]);
        let s = Span::between_positions(n, pos[2], pos[3]);
        let fq = Span::between_positions(n, moved(pos[0]), moved(pos[1]));
        let sq = Span::between_positions(n, moved(pos[2]), moved(pos[3]));
        prop_assert_eq!(delta(&p, Some(&f), Some(&s)), delta(&q, Some(&fq), Some(&sq)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// The two arcs of a double letter add up to its whole circle.
    #[test]
    fn arcs_sum_to_circle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, part) = random_constructible_pair(&mut rng);
        let family = enumerate_dp(&p, 2000);
        for d in family.sequences.iter().take(200) {
            for i in p.letter_ids().filter(|&i| p.is_double(i)) {
                let n = p.home_word(i).unwrap();
                let sum = q_map(&p, &part, i, ArcChoice::Plain, d) + q_map(&p, &part, i, ArcChoice::Primed, d);
                prop_assert_eq!(sum % 2, w_map(&p, &part, n, d) % 2, "letter {}", p.token(i));
            }
        }
    }

    /// On a planar string every class has zero intersection with every
    /// other, so all the maps are even for the induced partition.
    #[test]
    fn planar_strings_give_even_maps(seed in any::<u64>()) {
        let s = string_from(seed, 6, 3);
        prop_assume!(genus(&s).is_planar());
        let p = s.underlying_paragraph();
        let part = s.induced_partition().unwrap();
        prop_assume!(is_word_wise(&p, &part).is_ok());
        let family = enumerate_dp(&p, 2000);
        let seqs: Vec<_> = family.sequences.iter().take(60).collect();
        for d in &seqs {
            for n in 0..p.n_words() {
                prop_assert_eq!(w_map(&p, &part, n, d) % 2, 0);
            }
            for i in p.letter_ids().filter(|&i| p.is_double(i)) {
                for arc in [ArcChoice::Plain, ArcChoice::Primed] {
                    prop_assert_eq!(q_map(&p, &part, i, arc, d) % 2, 0);
                }
            }
            for e in &seqs {
                prop_assert_eq!(d_map(&p, &part, d, e).1 % 2, 0);
            }
        }
    }

    #[test]
    fn construction_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, part) = random_constructible_pair(&mut rng);
        let s = VirtualString::construct_from_pair(&p, &part).unwrap();
        prop_assert_eq!(s.underlying_paragraph(), p);
        prop_assert!(s.induced_partition().unwrap().equal_up_to_swaps(&part));
    }
}
