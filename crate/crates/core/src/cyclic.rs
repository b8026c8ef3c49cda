//! Cyclic sequences of arcs chained through shared single letters, and the
//! parity maps evaluated on them.

use crate::gauss::{ArcChoice, GaussParagraph, LetterId, LetterSet, Span};
use crate::partition::{gamma, tail_position, WordWisePartition};

/// Default bound on the number of cyclic sequences enumerated.
pub const DEFAULT_MAX_CYCLIC: usize = 100_000;

/// One arc per word (possibly none), chained head to tail.
///
/// `chain[k]` carries the arc from `connectors[k - 1]` to `connectors[k]`
/// (indices cyclic): each connector ends the arc on one word and starts the
/// arc on the next.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclicSequence {
    arcs: Vec<Option<Span>>,
    chain: Vec<usize>,
    connectors: Vec<LetterId>,
    o_sets: Vec<Option<LetterSet>>,
}

impl CyclicSequence {
    /// Builds the sequence for a closed chain of distinct words.
    ///
    /// Returns `None` unless the chain has at least two words, each connector
    /// is a single letter shared by the two words it joins, and every arc has
    /// distinct endpoints.
    pub fn new(p: &GaussParagraph, chain: Vec<usize>, connectors: Vec<LetterId>) -> Option<Self> {
        let m = chain.len();
        if m < 2 || connectors.len() != m {
            return None;
        }
        let mut arcs = vec![None; p.n_words()];
        for k in 0..m {
            let word = chain[k];
            if word >= p.n_words() || arcs[word].is_some() {
                return None;
            }
            let into = connectors[(k + m - 1) % m];
            let out = connectors[k];
            if into == out {
                return None;
            }
            let next = chain[(k + 1) % m];
            let (u, v) = p.words_of(out);
            if !((u == word && v == next) || (u == next && v == word)) || u == v {
                return None;
            }
            let start = p.occurrence_in(into, word)?;
            let end = p.occurrence_in(out, word)?;
            arcs[word] = Some(Span::between(start, end));
        }
        let o_sets = arcs
            .iter()
            .map(|a| a.as_ref().map(|s| p.o_span(s)))
            .collect();
        Some(CyclicSequence {
            arcs,
            chain,
            connectors,
            o_sets,
        })
    }

    /// The arc on word `n`, if any.
    pub fn arc(&self, n: usize) -> Option<Span> {
        self.arcs[n]
    }

    pub fn arcs(&self) -> &[Option<Span>] {
        &self.arcs
    }

    pub fn chain(&self) -> &[usize] {
        &self.chain
    }

    pub fn connectors(&self) -> &[LetterId] {
        &self.connectors
    }

    /// Letters occurring exactly once strictly inside the arc on word `n`.
    pub fn o_set(&self, n: usize) -> Option<&LetterSet> {
        self.o_sets[n].as_ref()
    }

    fn o_count(&self, n: usize, set: &LetterSet) -> usize {
        self.o_set(n).map_or(0, |o| o.intersection_count(set))
    }

    /// `Σ_{k≠n} #(set ∩ o(d(k)))`.
    fn others_count(&self, n: usize, set: &LetterSet) -> usize {
        (0..self.arcs.len())
            .filter(|&k| k != n)
            .map(|k| self.o_count(k, set))
            .sum()
    }
}

/// The enumerated family of cyclic sequences.
#[derive(Debug, Clone, Default)]
pub struct DpFamily {
    pub sequences: Vec<CyclicSequence>,
    /// Set when enumeration stopped at the cap.
    pub truncated: bool,
}

/// All cyclic sequences, sorted by (word chain, connectors).
///
/// Chains are simple directed cycles of the word graph starting at their
/// least word; both directions of a cycle are kept since they carry different
/// arcs.
pub fn enumerate_dp(p: &GaussParagraph, cap: usize) -> DpFamily {
    let n = p.n_words();
    // shared[u][v]: single letters shared by words u and v, ascending.
    let mut shared = vec![vec![Vec::new(); n]; n];
    for id in p.letter_ids() {
        let (u, v) = p.words_of(id);
        if u != v {
            shared[u][v].push(id);
            shared[v][u].push(id);
        }
    }
    let mut out = DpFamily::default();
    for start in 0..n {
        let mut path = vec![start];
        if extend(p, &shared, &mut path, cap, &mut out) {
            break;
        }
    }
    out
}

/// Depth-first extension of a simple path; returns true once the cap is hit.
fn extend(
    p: &GaussParagraph,
    shared: &[Vec<Vec<LetterId>>],
    path: &mut Vec<usize>,
    cap: usize,
    out: &mut DpFamily,
) -> bool {
    let start = path[0];
    let last = *path.last().expect("nonempty path");
    for next in start + 1..shared.len() {
        if shared[last][next].is_empty() || path.contains(&next) {
            continue;
        }
        path.push(next);
        if !shared[next][start].is_empty() && emit_chain(p, shared, path, cap, out) {
            return true;
        }
        if extend(p, shared, path, cap, out) {
            return true;
        }
        path.pop();
    }
    false
}

/// Emits every connector choice for a closed chain, in lexicographic order.
fn emit_chain(
    p: &GaussParagraph,
    shared: &[Vec<Vec<LetterId>>],
    chain: &[usize],
    cap: usize,
    out: &mut DpFamily,
) -> bool {
    let m = chain.len();
    let options: Vec<&Vec<LetterId>> = (0..m)
        .map(|k| &shared[chain[k]][chain[(k + 1) % m]])
        .collect();
    let mut idx = vec![0usize; m];
    loop {
        let connectors: Vec<LetterId> = (0..m).map(|k| options[k][idx[k]]).collect();
        if let Some(seq) = CyclicSequence::new(p, chain.to_vec(), connectors) {
            if out.sequences.len() == cap {
                out.truncated = true;
                return true;
            }
            out.sequences.push(seq);
        }
        let mut k = m;
        loop {
            if k == 0 {
                return false;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < options[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// The six cyclic orders of the endpoints of two spans, read forward from
/// the start `a` of the first span `a…b` with the second span `y…z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeltaCase {
    /// a, y, b, z
    I,
    /// a, z, b, y
    II,
    /// a, y, z, b
    III,
    /// a, z, y, b
    IV,
    /// a, b, y, z
    V,
    /// a, b, z, y
    VI,
}

#[derive(Clone, Copy, PartialEq)]
enum Pt {
    B,
    Y,
    Z,
}

const CASES: [(DeltaCase, [Pt; 3]); 6] = [
    (DeltaCase::I, [Pt::Y, Pt::B, Pt::Z]),
    (DeltaCase::II, [Pt::Z, Pt::B, Pt::Y]),
    (DeltaCase::III, [Pt::Y, Pt::Z, Pt::B]),
    (DeltaCase::IV, [Pt::Z, Pt::Y, Pt::B]),
    (DeltaCase::V, [Pt::B, Pt::Y, Pt::Z]),
    (DeltaCase::VI, [Pt::B, Pt::Z, Pt::Y]),
];

/// Every case whose cyclic order fits the two spans, with its value.
///
/// Coincident endpoints (such as `a = y`) can fit several cases at once.
/// A point coinciding with `a` may be read at the start or at the end.
pub fn delta_cases(p: &GaussParagraph, first: &Span, second: &Span) -> Vec<(DeltaCase, usize)> {
    debug_assert_eq!(first.word, second.word);
    let word = p.word(first.word);
    let len = word.len();
    let dist = |pos: usize| (pos + len - first.start) % len;
    let base = |pt: Pt| match pt {
        Pt::B => dist(first.end),
        Pt::Y => dist(second.start),
        Pt::Z => dist(second.end),
    };
    let mut out = Vec::new();
    for (case, order) in CASES {
        let options = |pt: Pt| {
            let d = base(pt);
            if d == 0 {
                [0, len]
            } else {
                [d, d]
            }
        };
        let fits = options(order[0]).into_iter().find_map(|d1| {
            options(order[1]).into_iter().find_map(|d2| {
                options(order[2])
                    .into_iter()
                    .find(|&d3| d1 <= d2 && d2 <= d3)
                    .map(|d3| [d1, d2, d3])
            })
        });
        if let Some([d1, d2, d3]) = fits {
            let seg =
                |lo: usize, hi: usize| p.once_in((lo + 1..hi).map(|d| word.at(first.start + d)));
            let s = [seg(0, d1), seg(d1, d2), seg(d2, d3), seg(d3, len)];
            let c = |x: usize, y: usize| s[x - 1].intersection_count(&s[y - 1]);
            let value = match case {
                DeltaCase::I => c(1, 2) + c(1, 3) + c(2, 3),
                DeltaCase::II => c(1, 4) + c(2, 4) + c(2, 1),
                DeltaCase::III => c(1, 2) + c(3, 2),
                DeltaCase::IV => c(1, 4) + c(2, 3) + c(2, 4) + c(2, 1) + c(3, 4),
                DeltaCase::V => c(1, 3),
                DeltaCase::VI => c(1, 4) + c(1, 2),
            };
            out.push((case, value));
        }
    }
    out
}

/// `δ_n(a…b, y…z)`; zero when either span is absent.
pub fn delta(p: &GaussParagraph, first: Option<&Span>, second: Option<&Span>) -> usize {
    match (first, second) {
        (Some(f), Some(s)) => delta_cases(p, f, s).first().map_or(0, |&(_, v)| v),
        _ => 0,
    }
}

/// `ε_n(a x1 b, y x2 z)`; zero when either span is absent.
pub fn epsilon(
    p: &GaussParagraph,
    part: &WordWisePartition,
    first: Option<&Span>,
    second: Option<&Span>,
) -> u8 {
    let (Some(f), Some(s)) = (first, second) else {
        return 0;
    };
    let n = f.word;
    let word = p.word(n);
    let len = word.len();
    let (a, b) = (word.at(f.start), word.at(f.end));
    let (y, z) = (word.at(s.start), word.at(s.end));
    let own = |id: LetterId| part.in_word_sets(id, n);
    // A single letter of the word occurs once, so position tests suffice.
    let in_first = |pos: usize| f.interior_contains(len, pos);
    let in_second = |pos: usize| s.interior_contains(len, pos);
    let statements: Vec<bool> = if a == b {
        let [o0, o1] = p.occurrences(a);
        // The crossing at `a` meets the loop only when the arc runs from the
        // tail of `a`; an arc starting at the head picks up 0 or 2 there.
        let once = usize::from(in_second(o0.position)) + usize::from(in_second(o1.position)) == 1;
        let tail_first = tail_position(p, part, a).ok() == Some(f.start);
        vec![
            once && tail_first,
            in_first(s.start) && !own(y),
            in_first(s.end) && own(z),
        ]
    } else {
        vec![
            in_second(f.start) && own(a),
            in_second(f.end) && !own(b),
            in_first(s.start) && !own(y),
            in_first(s.end) && own(z),
        ]
    };
    (statements.iter().filter(|&&t| t).count() % 2) as u8
}

/// `W(v_n, d)`.
pub fn w_map(p: &GaussParagraph, part: &WordWisePartition, n: usize, d: &CyclicSequence) -> usize {
    let mut total = d.others_count(n, &p.o_word(n));
    if let Some(span) = d.arc(n) {
        let back = Span::between_positions(span.word, span.end, span.start);
        let word = p.word(n);
        total += p.o_span(&span).intersection_count(&p.o_span(&back));
        total += usize::from(
            gamma(p, part, n, word.at(span.start), word.at(span.end)).expect("arc ends are single"),
        );
    }
    total
}

/// `Q_n(p_i, d)` for the plain p-set or `Q_n(p'_i, d)` for the primed one.
pub fn q_map(
    p: &GaussParagraph,
    part: &WordWisePartition,
    i: LetterId,
    arc: ArcChoice,
    d: &CyclicSequence,
) -> usize {
    let span = p.double_span(i, arc).expect("double letter");
    let n = span.word;
    let p_set = p.o_span(&span);
    delta(p, Some(&span), d.arc(n).as_ref())
        + usize::from(epsilon(p, part, Some(&span), d.arc(n).as_ref()))
        + d.others_count(n, &p_set)
}

/// Per-word values `D_n(d1, d2)` and their sum.
pub fn d_map(
    p: &GaussParagraph,
    part: &WordWisePartition,
    d1: &CyclicSequence,
    d2: &CyclicSequence,
) -> (Vec<usize>, usize) {
    let values: Vec<usize> = (0..p.n_words())
        .map(|n| {
            let (a1, a2) = (d1.arc(n), d2.arc(n));
            let Some(o1) = d1.o_set(n) else {
                return 0;
            };
            delta(p, a1.as_ref(), a2.as_ref())
                + usize::from(epsilon(p, part, a1.as_ref(), a2.as_ref()))
                + d2.others_count(n, o1)
        })
        .collect();
    let total = values.iter().sum();
    (values, total)
}

/// The first odd value found when checking compatibility with the family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DpFailure {
    W {
        word: usize,
        seq: usize,
    },
    Q {
        letter: LetterId,
        arc: ArcChoice,
        seq: usize,
    },
    D {
        first: usize,
        second: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DpOutcome {
    Compatible,
    Incompatible(DpFailure),
    /// No odd value found, but the family was truncated.
    Indeterminate,
}

/// Checks that every `W`, both `Q` variants and every summed `D` is even on
/// the family.
pub fn compatible_with_dp(
    p: &GaussParagraph,
    part: &WordWisePartition,
    family: &DpFamily,
) -> DpOutcome {
    let seqs = &family.sequences;
    for (s, d) in seqs.iter().enumerate() {
        for n in 0..p.n_words() {
            if w_map(p, part, n, d) % 2 == 1 {
                return DpOutcome::Incompatible(DpFailure::W { word: n, seq: s });
            }
        }
        for i in p.letter_ids().filter(|&i| p.is_double(i)) {
            for arc in [ArcChoice::Plain, ArcChoice::Primed] {
                if q_map(p, part, i, arc, d) % 2 == 1 {
                    return DpOutcome::Incompatible(DpFailure::Q {
                        letter: i,
                        arc,
                        seq: s,
                    });
                }
            }
        }
    }
    for (a, d1) in seqs.iter().enumerate() {
        for (b, d2) in seqs.iter().enumerate() {
            if d_map(p, part, d1, d2).1 % 2 == 1 {
                return DpOutcome::Incompatible(DpFailure::D {
                    first: a,
                    second: b,
                });
            }
        }
    }
    if family.truncated {
        DpOutcome::Indeterminate
    } else {
        DpOutcome::Compatible
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::WordWisePartition;

    fn gp(words: &[&str]) -> GaussParagraph {
        GaussParagraph::from_words(words.iter().map(|w| w.split_whitespace())).unwrap()
    }

    #[test]
    fn family_examples() {
        assert!(enumerate_dp(&gp(&["a b a b"]), 100).sequences.is_empty());
        let fam = enumerate_dp(&gp(&["a b", "a b"]), 100);
        assert_eq!(fam.sequences.len(), 2);
        assert!(!fam.truncated);
        let fam = enumerate_dp(&gp(&["a b a c", "b c"]), 100);
        assert_eq!(fam.sequences.len(), 2);
    }

    #[test]
    fn family_arcs_chain() {
        let p = gp(&["a b", "a b"]);
        let fam = enumerate_dp(&p, 100);
        let d = &fam.sequences[0];
        assert_eq!(d.chain(), [0, 1]);
        let a = p.id_of("a").unwrap();
        assert_eq!(d.connectors()[0], a);
        // The arc on word 0 runs from b to a, the arc on word 1 from a to b.
        assert_eq!(
            d.arc(0),
            Some(Span {
                word: 0,
                start: 1,
                end: 0
            })
        );
        assert_eq!(
            d.arc(1),
            Some(Span {
                word: 1,
                start: 0,
                end: 1
            })
        );
    }

    #[test]
    fn family_three_words() {
        let p = gp(&["a b", "a c", "b c"]);
        let fam = enumerate_dp(&p, 100);
        // One triangle, two directions.
        assert_eq!(fam.sequences.len(), 2);
        assert_eq!(fam.sequences[0].chain(), [0, 1, 2]);
        assert_eq!(fam.sequences[1].chain(), [0, 2, 1]);
    }

    #[test]
    fn family_cap() {
        let p = gp(&["a b c d", "a b c d"]);
        assert_eq!(enumerate_dp(&p, 1000).sequences.len(), 12);
        let capped = enumerate_dp(&p, 5);
        assert!(capped.truncated);
        assert_eq!(capped.sequences.len(), 5);
    }

    #[test]
    fn delta_empty_is_zero() {
        let p = gp(&["a b", "a b"]);
        let s = Span {
            word: 0,
            start: 0,
            end: 1,
        };
        assert_eq!(delta(&p, Some(&s), None), 0);
        assert_eq!(delta(&p, None, Some(&s)), 0);
    }

    #[test]
    fn delta_case_v_disjoint() {
        // a b y z with nothing shared between the first span and the second.
        let p = gp(&["i c c i y d d z", "y z"]);
        let first = p
            .double_span(p.id_of("i").unwrap(), ArcChoice::Plain)
            .unwrap();
        let second = Span {
            word: 0,
            start: 4,
            end: 7,
        };
        let cases = delta_cases(&p, &first, &second);
        assert_eq!(cases, vec![(DeltaCase::V, 0)]);
    }

    #[test]
    fn delta_case_v_counts_shared() {
        // i c i y c z: c inside both spans.
        let p = gp(&["i c i y c z", "y z"]);
        let first = p
            .double_span(p.id_of("i").unwrap(), ArcChoice::Plain)
            .unwrap();
        let second = Span {
            word: 0,
            start: 3,
            end: 5,
        };
        assert_eq!(delta(&p, Some(&first), Some(&second)), 1);
    }

    #[test]
    fn epsilon_examples() {
        let p = gp(&["i c i y c z", "y z"]);
        let part =
            WordWisePartition::from_tokens(&p, &[(&["i", "c", "y"], &[]), (&["z"], &[])]).unwrap();
        let first = p
            .double_span(p.id_of("i").unwrap(), ArcChoice::Plain)
            .unwrap();
        let second = Span {
            word: 0,
            start: 3,
            end: 5,
        };
        assert_eq!(epsilon(&p, &part, Some(&first), None), 0);
        assert_eq!(epsilon(&p, &part, Some(&first), Some(&second)), 0);

        // Single-letter span a…b with a inside y…z and a in the word's sets.
        let p = gp(&["y a z b", "a b y z"]);
        let part =
            WordWisePartition::from_tokens(&p, &[(&["a"], &["b"]), (&["y"], &["z"])]).unwrap();
        let first = Span {
            word: 0,
            start: 1,
            end: 3,
        };
        let second = Span {
            word: 0,
            start: 0,
            end: 2,
        };
        assert_eq!(epsilon(&p, &part, Some(&first), Some(&second)), 1);
    }

    #[test]
    fn w_map_zero_without_shared_singles() {
        let p = gp(&["a b", "a b"]);
        let part = WordWisePartition::from_tokens(&p, &[(&["a"], &[]), (&["b"], &[])]).unwrap();
        let fam = enumerate_dp(&p, 100);
        for d in &fam.sequences {
            for n in 0..2 {
                assert_eq!(w_map(&p, &part, n, d) % 2, 0);
            }
        }
        assert_eq!(compatible_with_dp(&p, &part, &fam), DpOutcome::Compatible);
    }
}
