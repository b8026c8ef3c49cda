//! Word-wise partitions: an assignment of every letter to one word's pair of
//! sets `(A_n, A'_n)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauss::{GaussParagraph, LetterId, LetterSet};

/// Which of the two sets of a word a letter belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Plain,
    Primed,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Plain => Side::Primed,
            Side::Primed => Side::Plain,
        }
    }
}

/// The set a letter is assigned to: `A_word` or `A'_word`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub word: usize,
    pub side: Side,
}

/// A partition of the alphabet into per-word pairs of sets.
///
/// The type itself only guarantees that every letter is in exactly one set;
/// whether the defining conditions hold is decided by [`is_word_wise`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordWisePartition {
    slots: Vec<Slot>,
    n_words: usize,
}

/// First violated clause of the word-wise definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// A letter was put in the sets of a word it does not occur in.
    NotInWord { letter: String, word: usize },
    /// A double letter was put in the sets of another word.
    DoubleLetterMisplaced { letter: String, word: usize },
    /// Two words share `shared` letters but the first word's sets hold
    /// `in_first` of them instead of half.
    UnevenSplit {
        first: usize,
        second: usize,
        shared: usize,
        in_first: usize,
    },
}

impl Violation {
    /// Roman numeral of the violated clause.
    pub fn clause(&self) -> &'static str {
        match self {
            Violation::NotInWord { .. } => "i",
            Violation::DoubleLetterMisplaced { .. } => "ii",
            Violation::UnevenSplit { .. } => "iii",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotInWord { letter, word } => write!(
                f,
                "clause (i): letter {letter} is assigned to word {word} but does not occur in it"
            ),
            Violation::DoubleLetterMisplaced { letter, word } => write!(
                f,
                "clause (ii): double letter {letter} of word {word} is assigned to another word"
            ),
            Violation::UnevenSplit {
                first,
                second,
                shared,
                in_first,
            } => write!(
                f,
                "clause (iii): words {first} and {second} share {shared} letters but {in_first} are assigned to word {first}"
            ),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PartitionDoc {
    words: Vec<WordSetsDoc>,
}

#[derive(Serialize, Deserialize)]
struct WordSetsDoc {
    #[serde(rename = "A")]
    a: Vec<String>,
    #[serde(rename = "Ap")]
    ap: Vec<String>,
}

impl WordWisePartition {
    pub fn from_slots(p: &GaussParagraph, slots: Vec<Slot>) -> Result<Self> {
        if slots.len() != p.n_letters() {
            return Err(Error::Partition(format!(
                "expected {} letter assignments, got {}",
                p.n_letters(),
                slots.len()
            )));
        }
        if let Some(s) = slots.iter().find(|s| s.word >= p.n_words()) {
            return Err(Error::Partition(format!("no word {}", s.word)));
        }
        Ok(WordWisePartition {
            slots,
            n_words: p.n_words(),
        })
    }

    /// Builds a partition from explicit `(A_n, A'_n)` pairs, one per word.
    pub fn from_sets(p: &GaussParagraph, sets: &[(LetterSet, LetterSet)]) -> Result<Self> {
        if sets.len() != p.n_words() {
            return Err(Error::Partition(format!(
                "expected {} words, got {}",
                p.n_words(),
                sets.len()
            )));
        }
        let mut slots: Vec<Option<Slot>> = vec![None; p.n_letters()];
        for (word, (a, ap)) in sets.iter().enumerate() {
            for (set, side) in [(a, Side::Plain), (ap, Side::Primed)] {
                for id in set.iter() {
                    if id.0 >= slots.len() {
                        return Err(Error::Partition(format!("letter id {} out of range", id.0)));
                    }
                    if slots[id.0].is_some() {
                        return Err(Error::Partition(format!(
                            "letter {} is assigned twice",
                            p.token(id)
                        )));
                    }
                    slots[id.0] = Some(Slot { word, side });
                }
            }
        }
        let slots = slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                s.ok_or_else(|| {
                    Error::Partition(format!("letter {} is not assigned", p.token(LetterId(i))))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_slots(p, slots)
    }

    /// Builds a partition from token lists, one `(A_n, A'_n)` pair per word.
    pub fn from_tokens(p: &GaussParagraph, sets: &[(&[&str], &[&str])]) -> Result<Self> {
        let sets = sets
            .iter()
            .map(|(a, ap)| Ok((p.set_of(a.iter().copied())?, p.set_of(ap.iter().copied())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_sets(p, &sets)
    }

    pub fn from_json(p: &GaussParagraph, text: &str) -> Result<Self> {
        let doc: PartitionDoc = serde_json::from_str(text)?;
        let sets = doc
            .words
            .iter()
            .map(|w| {
                Ok((
                    p.set_of(w.a.iter().map(String::as_str))?,
                    p.set_of(w.ap.iter().map(String::as_str))?,
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_sets(p, &sets)
    }

    /// JSON document with letters sorted inside each array.
    pub fn to_json(&self, p: &GaussParagraph) -> String {
        serde_json::to_string(&self.to_json_value(p)).expect("partition serializes")
    }

    pub fn to_json_value(&self, p: &GaussParagraph) -> serde_json::Value {
        let doc = PartitionDoc {
            words: (0..self.n_words)
                .map(|n| {
                    let (a, ap) = self.sets(p, n);
                    WordSetsDoc {
                        a: p.tokens_of(&a),
                        ap: p.tokens_of(&ap),
                    }
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("partition serializes")
    }

    pub fn n_words(&self) -> usize {
        self.n_words
    }

    pub fn slot(&self, id: LetterId) -> Slot {
        self.slots[id.0]
    }

    pub fn slots(&self) -> &[Slot] {
        &self.slots
    }

    /// The word whose sets contain `id`.
    pub fn owner(&self, id: LetterId) -> usize {
        self.slots[id.0].word
    }

    /// Whether `id ∈ A_n ∪ A'_n`.
    pub fn in_word_sets(&self, id: LetterId, n: usize) -> bool {
        self.slots[id.0].word == n
    }

    /// Whether two letters lie in the same one of the `2N` sets.
    pub fn same_subset(&self, i: LetterId, j: LetterId) -> bool {
        self.slots[i.0] == self.slots[j.0]
    }

    /// `(A_n, A'_n)`.
    pub fn sets(&self, p: &GaussParagraph, n: usize) -> (LetterSet, LetterSet) {
        let mut a = p.empty_set();
        let mut ap = p.empty_set();
        for (i, s) in self.slots.iter().enumerate() {
            if s.word == n {
                match s.side {
                    Side::Plain => a.insert(LetterId(i)),
                    Side::Primed => ap.insert(LetterId(i)),
                }
            }
        }
        (a, ap)
    }

    /// Exchanges `A_n` and `A'_n`.
    pub fn swap_word(&mut self, n: usize) {
        for s in self.slots.iter_mut().filter(|s| s.word == n) {
            s.side = s.side.flip();
        }
    }

    /// Representative under per-word swaps: the least letter assigned to a
    /// word sits in that word's `A` set.
    pub fn canonical(&self) -> Self {
        let mut out = self.clone();
        let mut seen = vec![false; self.n_words];
        for i in 0..self.slots.len() {
            let n = self.slots[i].word;
            if !seen[n] {
                seen[n] = true;
                if self.slots[i].side == Side::Primed {
                    out.swap_word(n);
                }
            }
        }
        out
    }

    pub fn equal_up_to_swaps(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

/// Checks the three defining conditions of a word-wise partition.
pub fn is_word_wise(p: &GaussParagraph, part: &WordWisePartition) -> Result<(), Violation> {
    for id in p.letter_ids() {
        let owner = part.owner(id);
        let (m, n) = p.words_of(id);
        if owner != m && owner != n {
            let letter = p.token(id).to_string();
            return Err(if m == n {
                Violation::DoubleLetterMisplaced { letter, word: m }
            } else {
                Violation::NotInWord {
                    letter,
                    word: owner,
                }
            });
        }
    }
    for m in 0..p.n_words() {
        for n in m + 1..p.n_words() {
            let common = p.common_letters(m, n);
            let in_first = common.iter().filter(|&id| part.owner(id) == m).count();
            if 2 * in_first != common.len() {
                return Err(Violation::UnevenSplit {
                    first: m,
                    second: n,
                    shared: common.len(),
                    in_first,
                });
            }
        }
    }
    Ok(())
}

/// Every word-wise partition of `p`, once per class of per-word swaps, in
/// lexicographic order of the per-letter assignment.
pub fn enumerate_partitions(p: &GaussParagraph) -> Partitions<'_> {
    Partitions::new(p, true)
}

/// Every word-wise partition of `p` with no swap canonicalization.
pub fn enumerate_partitions_raw(p: &GaussParagraph) -> Partitions<'_> {
    Partitions::new(p, false)
}

/// Lazy depth-first enumeration of word-wise partitions.
pub struct Partitions<'p> {
    p: &'p GaussParagraph,
    canonical: bool,
    choices: Vec<Vec<Slot>>,
    /// For letters shared between two words: index of the word pair.
    pair_of: Vec<Option<usize>>,
    /// Per word pair: (first word, half the shared count, assigned to first, assigned to second).
    pairs: Vec<(usize, usize, usize, usize)>,
    word_load: Vec<usize>,
    chosen: Vec<usize>,
    emitted: bool,
    done: bool,
}

impl<'p> Partitions<'p> {
    fn new(p: &'p GaussParagraph, canonical: bool) -> Self {
        let mut pairs = Vec::new();
        let mut pair_index = std::collections::HashMap::new();
        let mut pair_of = vec![None; p.n_letters()];
        let mut choices = Vec::with_capacity(p.n_letters());
        let mut done = false;
        for id in p.letter_ids() {
            let (m, n) = p.words_of(id);
            let owners = if m == n { vec![m] } else { vec![m, n] };
            choices.push(
                owners
                    .iter()
                    .flat_map(|&word| [Side::Plain, Side::Primed].map(|side| Slot { word, side }))
                    .collect(),
            );
            if m != n {
                let k = *pair_index.entry((m, n)).or_insert_with(|| {
                    let shared = p.common_letters(m, n).len();
                    if shared % 2 == 1 {
                        done = true;
                    }
                    pairs.push((m, shared / 2, 0, 0));
                    pairs.len() - 1
                });
                pair_of[id.0] = Some(k);
            }
        }
        Partitions {
            p,
            canonical,
            choices,
            pair_of,
            pairs,
            word_load: vec![0; p.n_words()],
            chosen: Vec::new(),
            emitted: false,
            done,
        }
    }

    fn allowed(&self, depth: usize, choice: usize) -> bool {
        let slot = self.choices[depth][choice];
        if self.canonical && slot.side == Side::Primed && self.word_load[slot.word] == 0 {
            return false;
        }
        match self.pair_of[depth] {
            Some(k) => {
                let (first, half, a, b) = self.pairs[k];
                if slot.word == first {
                    a < half
                } else {
                    b < half
                }
            }
            None => true,
        }
    }

    fn push(&mut self, depth: usize, choice: usize) {
        let slot = self.choices[depth][choice];
        self.word_load[slot.word] += 1;
        if let Some(k) = self.pair_of[depth] {
            let pair = &mut self.pairs[k];
            if slot.word == pair.0 {
                pair.2 += 1
            } else {
                pair.3 += 1
            }
        }
        self.chosen.push(choice);
    }

    fn pop(&mut self) -> Option<usize> {
        let choice = self.chosen.pop()?;
        let depth = self.chosen.len();
        let slot = self.choices[depth][choice];
        self.word_load[slot.word] -= 1;
        if let Some(k) = self.pair_of[depth] {
            let pair = &mut self.pairs[k];
            if slot.word == pair.0 {
                pair.2 -= 1
            } else {
                pair.3 -= 1
            }
        }
        Some(choice)
    }

    fn current(&self) -> WordWisePartition {
        WordWisePartition {
            slots: self
                .chosen
                .iter()
                .enumerate()
                .map(|(d, &c)| self.choices[d][c])
                .collect(),
            n_words: self.p.n_words(),
        }
    }
}

impl Iterator for Partitions<'_> {
    type Item = WordWisePartition;

    fn next(&mut self) -> Option<WordWisePartition> {
        if self.done {
            return None;
        }
        let mut from = 0;
        if self.emitted {
            self.emitted = false;
            match self.pop() {
                Some(c) => from = c + 1,
                None => {
                    self.done = true;
                    return None;
                }
            }
        }
        loop {
            let depth = self.chosen.len();
            if depth == self.choices.len() {
                self.emitted = true;
                return Some(self.current());
            }
            match (from..self.choices[depth].len()).find(|&c| self.allowed(depth, c)) {
                Some(c) => {
                    self.push(depth, c);
                    from = 0;
                }
                None => match self.pop() {
                    Some(c) => from = c + 1,
                    None => {
                        self.done = true;
                        return None;
                    }
                },
            }
        }
    }
}

/// A pair of letters violating compatibility with the paragraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CompatibilityFailure {
    /// Interlaced double letters whose single-letter gap parities disagree
    /// or contradict their placement.
    Interlaced {
        i: LetterId,
        j: LetterId,
        word: usize,
    },
    /// Single letters in the word's own sets whose gap lengths disagree or
    /// contradict their placement.
    Singles {
        i: LetterId,
        j: LetterId,
        word: usize,
    },
}

/// Checks both compatibility clauses; returns the first failing pair.
///
/// For interlaced `i, j` the word is read as `i x1 j x2 i x3 j x4` from either
/// letter, so all four gaps must carry single-letter counts of one parity.
pub fn compatible_with_p(
    p: &GaussParagraph,
    part: &WordWisePartition,
) -> Result<(), CompatibilityFailure> {
    for n in 0..p.n_words() {
        let word = p.word(n);
        let len = word.len();
        let doubles: Vec<LetterId> = p.double_letters(n).collect::<Vec<_>>();
        let mut sorted = doubles.clone();
        sorted.sort();
        for (x, &i) in sorted.iter().enumerate() {
            for &j in &sorted[x + 1..] {
                if !p.interlaced(i, j).unwrap_or(false) {
                    continue;
                }
                let [i0, i1] = p.occurrences(i);
                let [j0, j1] = p.occurrences(j);
                // Walk forward from i0: the next marker is one occurrence of j.
                let inside = |pos: usize| pos > i0.position && pos < i1.position;
                let (ja, jb) = if inside(j0.position) {
                    (j0, j1)
                } else {
                    (j1, j0)
                };
                let gaps = [
                    crate::gauss::Span::between(i0, ja),
                    crate::gauss::Span::between(ja, i1),
                    crate::gauss::Span::between(i1, jb),
                    crate::gauss::Span::between(jb, i0),
                ];
                let parities: Vec<usize> = gaps.iter().map(|g| p.singles_inside(g) % 2).collect();
                let wij = p
                    .w_set(i)
                    .expect("double")
                    .intersection_count(&p.w_set(j).expect("double"));
                let value = (wij + parities[0]) % 2;
                let want = usize::from(part.same_subset(i, j));
                if parities.iter().any(|&q| q != parities[0]) || value != want {
                    return Err(CompatibilityFailure::Interlaced { i, j, word: n });
                }
            }
        }
        let own_singles: Vec<LetterId> = p
            .o_word(n)
            .iter()
            .filter(|&id| part.in_word_sets(id, n))
            .collect();
        for (x, &i) in own_singles.iter().enumerate() {
            for &j in &own_singles[x + 1..] {
                let pi = p.occurrence_in(i, n).expect("single").position;
                let pj = p.occurrence_in(j, n).expect("single").position;
                let l1 = (pj + len - pi) % len - 1;
                let l2 = (pi + len - pj) % len - 1;
                let want = usize::from(part.same_subset(i, j));
                if l1 % 2 != l2 % 2 || l1 % 2 != want {
                    return Err(CompatibilityFailure::Singles { i, j, word: n });
                }
            }
        }
    }
    Ok(())
}

/// Position parity carrying the tails of the double letters in `A_n` when a
/// string is built from the pair; double letters of `A'_n` get the other
/// parity.
///
/// Single letters of the word's own sets fix it: their tails sit at their
/// own positions, so a plain single letter carries the parity and a primed
/// one the opposite. Without such letters the choice is free and `0` is used.
pub fn tail_parity(p: &GaussParagraph, part: &WordWisePartition, n: usize) -> usize {
    let word = p.word(n);
    (0..word.len())
        .find_map(|pos| {
            let id = word.at(pos);
            let slot = part.slot(id);
            (slot.word == n && !p.is_double(id)).then(|| match slot.side {
                Side::Plain => pos % 2,
                Side::Primed => 1 - pos % 2,
            })
        })
        .unwrap_or(0)
}

/// Position of the occurrence of double letter `i` that carries the tail of
/// its arrow in the string built from the pair.
pub fn tail_position(p: &GaussParagraph, part: &WordWisePartition, i: LetterId) -> Result<usize> {
    let n = p
        .home_word(i)
        .ok_or_else(|| Error::NotDoubleLetter(p.token(i).to_string()))?;
    let want = match part.slot(i).side {
        Side::Plain => tail_parity(p, part, n),
        Side::Primed => 1 - tail_parity(p, part, n),
    };
    let [o0, o1] = p.occurrences(i);
    Ok(if o1.position % 2 == want && o0.position % 2 != want {
        o1.position
    } else {
        o0.position
    })
}

/// `0` iff exactly one of the single letters `i, j` of word `n` lies in the
/// word's own sets.
pub fn gamma(
    p: &GaussParagraph,
    part: &WordWisePartition,
    n: usize,
    i: LetterId,
    j: LetterId,
) -> Result<u8> {
    for id in [i, j] {
        if !p.is_single_in(id, n) {
            return Err(Error::NotSingleLetter(p.token(id).to_string()));
        }
    }
    if i == j {
        return Err(Error::InvalidSpan);
    }
    Ok(u8::from(part.in_word_sets(i, n) == part.in_word_sets(j, n)))
}
