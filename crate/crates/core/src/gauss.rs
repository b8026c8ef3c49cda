//! Gauss paragraphs: finite families of circular words in which every letter
//! occurs exactly twice overall.
//!
//! Letters are interned: a paragraph sorts its alphabet by token byte order and
//! every query works on [`LetterId`]s, the index of a token in that order. All
//! queries are invariant under rotation of the stored words, except where a
//! method documents an explicit anchoring (see [`GaussParagraph::p_sets`]).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A letter token: a nonempty string over `[A-Za-z0-9_]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(String);

impl Letter {
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if !token.is_empty()
            && token
                .bytes()
                .all(|b| b.is_ascii_alphanumeric() || b == b'_')
        {
            Ok(Letter(token))
        } else {
            Err(Error::InvalidLetter(token))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Letter::new(s)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Index of a letter in the sorted alphabet of its paragraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LetterId(pub usize);

/// A set of letters of one paragraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LetterSet(FixedBitSet);

impl LetterSet {
    pub fn with_capacity(alphabet_len: usize) -> Self {
        LetterSet(FixedBitSet::with_capacity(alphabet_len))
    }

    pub fn insert(&mut self, id: LetterId) {
        self.0.insert(id.0);
    }

    pub fn remove(&mut self, id: LetterId) {
        self.0.set(id.0, false);
    }

    pub fn contains(&self, id: LetterId) -> bool {
        self.0.contains(id.0)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = LetterId> + '_ {
        self.0.ones().map(LetterId)
    }

    /// `#(self ∩ other)`.
    pub fn intersection_count(&self, other: &LetterSet) -> usize {
        self.0.intersection_count(&other.0)
    }

    pub fn intersection(&self, other: &LetterSet) -> LetterSet {
        let mut out = self.clone();
        out.0.intersect_with(&other.0);
        out
    }

    pub fn union_with(&mut self, other: &LetterSet) {
        self.0.union_with(&other.0);
    }

    pub fn is_subset(&self, other: &LetterSet) -> bool {
        self.0.is_subset(&other.0)
    }
}

/// Which of the two arcs cut out by a double letter.
///
/// `Plain` is the forward arc starting at the occurrence with the smaller
/// stored position; `Primed` is the complementary arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArcChoice {
    Plain,
    Primed,
}

/// A circular word, stored as one of its rotations.
#[derive(Debug, Clone)]
pub struct Word {
    letters: Vec<LetterId>,
}

impl Word {
    pub fn letters(&self) -> &[LetterId] {
        &self.letters
    }

    /// Number of letter occurrences, i.e. twice the double letters plus the
    /// single letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn at(&self, position: usize) -> LetterId {
        self.letters[position % self.letters.len()]
    }

    /// Lexicographically least rotation. Letter ids follow token byte order,
    /// so comparing ids compares tokens.
    pub fn canonical_rotation(&self) -> Vec<LetterId> {
        let n = self.letters.len();
        (0..n)
            .map(|r| {
                self.letters[r..]
                    .iter()
                    .chain(&self.letters[..r])
                    .copied()
                    .collect::<Vec<_>>()
            })
            .min()
            .unwrap_or_default()
    }
}

/// Position of one occurrence of a letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occurrence {
    pub word: usize,
    pub position: usize,
}

/// A forward circular span of one word between two distinct positions.
///
/// The endpoints are the letters at `start` and `end`; the interior is the
/// (possibly empty) run of positions strictly between them going forward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Span {
    pub word: usize,
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(p: &GaussParagraph, word: usize, start: usize, end: usize) -> Result<Self> {
        let len = p.words.get(word).ok_or(Error::SpanNotInWord(word))?.len();
        if start >= len || end >= len || start == end {
            return Err(Error::SpanNotInWord(word));
        }
        Ok(Span { word, start, end })
    }

    /// Span between two occurrences in the same word.
    pub fn between(from: Occurrence, to: Occurrence) -> Self {
        debug_assert_eq!(from.word, to.word);
        Span {
            word: from.word,
            start: from.position,
            end: to.position,
        }
    }

    /// Span between two stored positions of one word.
    pub fn between_positions(word: usize, start: usize, end: usize) -> Self {
        Span { word, start, end }
    }

    /// Number of interior positions in a word of length `word_len`.
    pub fn interior_len(&self, word_len: usize) -> usize {
        (self.end + word_len - self.start) % word_len - 1
    }

    /// Interior positions, in forward order.
    pub fn interior(&self, word_len: usize) -> impl Iterator<Item = usize> {
        let start = self.start;
        (1..=self.interior_len(word_len)).map(move |k| (start + k) % word_len)
    }

    /// Whether `position` lies strictly inside the span.
    pub fn interior_contains(&self, word_len: usize, position: usize) -> bool {
        let d = (position + word_len - self.start) % word_len;
        d >= 1 && d <= self.interior_len(word_len)
    }
}

/// A validated Gauss paragraph.
#[derive(Debug, Clone)]
pub struct GaussParagraph {
    alphabet: Vec<Letter>,
    words: Vec<Word>,
    /// Per letter, its two occurrences sorted by (word, position).
    occurrences: Vec<[Occurrence; 2]>,
}

impl PartialEq for GaussParagraph {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet
            && self.words.len() == other.words.len()
            && self
                .words
                .iter()
                .zip(&other.words)
                .all(|(a, b)| a.canonical_rotation() == b.canonical_rotation())
    }
}

impl Eq for GaussParagraph {}

impl GaussParagraph {
    /// Builds a paragraph from words given as token lists; word order is kept.
    pub fn from_words<W, T>(words: W) -> Result<Self>
    where
        W: IntoIterator,
        W::Item: IntoIterator<Item = T>,
        T: AsRef<str>,
    {
        let raw: Vec<Vec<Letter>> = words
            .into_iter()
            .map(|w| {
                w.into_iter()
                    .map(|t| Letter::new(t.as_ref()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Self::from_letters(raw)
    }

    fn from_letters(raw: Vec<Vec<Letter>>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyParagraph);
        }
        if let Some(n) = raw.iter().position(|w| w.is_empty()) {
            return Err(Error::EmptyWord(n));
        }
        let mut counts: BTreeMap<&Letter, usize> = BTreeMap::new();
        for l in raw.iter().flatten() {
            *counts.entry(l).or_default() += 1;
        }
        if let Some((l, &c)) = counts.iter().find(|(_, &c)| c != 2) {
            return Err(Error::LetterCount {
                letter: l.to_string(),
                count: c,
            });
        }
        let alphabet: Vec<Letter> = counts.keys().map(|l| (*l).clone()).collect();
        let index: BTreeMap<&Letter, usize> =
            alphabet.iter().enumerate().map(|(i, l)| (l, i)).collect();

        let words: Vec<Word> = raw
            .iter()
            .map(|w| Word {
                letters: w.iter().map(|l| LetterId(index[l])).collect(),
            })
            .collect();

        let mut occ: Vec<Vec<Occurrence>> = vec![Vec::with_capacity(2); alphabet.len()];
        for (n, w) in words.iter().enumerate() {
            for (position, id) in w.letters.iter().enumerate() {
                occ[id.0].push(Occurrence { word: n, position });
            }
        }
        let occurrences = occ.into_iter().map(|o| [o[0], o[1]]).collect();

        let p = GaussParagraph {
            alphabet,
            words,
            occurrences,
        };
        p.check_connected()?;
        Ok(p)
    }

    fn check_connected(&self) -> Result<()> {
        let n = self.words.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for [a, b] in &self.occurrences {
            let (ra, rb) = (find(&mut parent, a.word), find(&mut parent, b.word));
            parent[ra] = rb;
        }
        let root = find(&mut parent, 0);
        let stray: Vec<usize> = (0..n).filter(|&w| find(&mut parent, w) != root).collect();
        if stray.is_empty() {
            Ok(())
        } else {
            Err(Error::DisconnectedParagraph(stray))
        }
    }

    /// Parses the line-oriented text format: one word per line, tokens
    /// separated by ASCII whitespace, `#` comments, blank lines ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut raw = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let content = line.split('#').next().unwrap_or("");
            let mut word = Vec::new();
            let mut col = 0;
            for token in content.split(|c: char| c.is_ascii_whitespace()) {
                if !token.is_empty() {
                    let letter = Letter::new(token).map_err(|_| Error::Syntax {
                        line: lineno + 1,
                        column: col + 1,
                        message: format!("invalid letter token {token:?}"),
                    })?;
                    word.push(letter);
                }
                col += token.len() + 1;
            }
            if !word.is_empty() {
                raw.push(word);
            }
        }
        Self::from_letters(raw)
    }

    /// Canonical text form: canonical rotations, single spaces, one word per
    /// line with a trailing newline.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for w in &self.words {
            let tokens: Vec<&str> = w
                .canonical_rotation()
                .iter()
                .map(|&id| self.alphabet[id.0].as_str())
                .collect();
            out.push_str(&tokens.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn n_words(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, n: usize) -> &Word {
        &self.words[n]
    }

    pub fn alphabet(&self) -> &[Letter] {
        &self.alphabet
    }

    pub fn n_letters(&self) -> usize {
        self.alphabet.len()
    }

    pub fn letter(&self, id: LetterId) -> &Letter {
        &self.alphabet[id.0]
    }

    pub fn token(&self, id: LetterId) -> &str {
        self.alphabet[id.0].as_str()
    }

    pub fn letter_ids(&self) -> impl Iterator<Item = LetterId> {
        (0..self.alphabet.len()).map(LetterId)
    }

    pub fn id_of(&self, token: &str) -> Result<LetterId> {
        self.alphabet
            .binary_search_by(|l| l.as_str().cmp(token))
            .map(LetterId)
            .map_err(|_| Error::UnknownLetter(token.to_string()))
    }

    pub fn empty_set(&self) -> LetterSet {
        LetterSet::with_capacity(self.alphabet.len())
    }

    /// Builds a set from tokens; mainly for tests and examples.
    pub fn set_of<'t>(&self, tokens: impl IntoIterator<Item = &'t str>) -> Result<LetterSet> {
        let mut s = self.empty_set();
        for t in tokens {
            s.insert(self.id_of(t)?);
        }
        Ok(s)
    }

    /// Sorted tokens of a set.
    pub fn tokens_of(&self, set: &LetterSet) -> Vec<String> {
        set.iter().map(|id| self.token(id).to_string()).collect()
    }

    /// The two occurrences of a letter, sorted by (word, position).
    pub fn occurrences(&self, id: LetterId) -> [Occurrence; 2] {
        self.occurrences[id.0]
    }

    /// The word in which `id` is a double letter, if it is one.
    pub fn home_word(&self, id: LetterId) -> Option<usize> {
        let [a, b] = self.occurrences[id.0];
        (a.word == b.word).then_some(a.word)
    }

    pub fn is_double(&self, id: LetterId) -> bool {
        self.home_word(id).is_some()
    }

    /// The two words containing `id` (equal for a double letter).
    pub fn words_of(&self, id: LetterId) -> (usize, usize) {
        let [a, b] = self.occurrences[id.0];
        (a.word, b.word)
    }

    /// Occurrence of `id` in word `n`, for a letter that is single there.
    pub fn occurrence_in(&self, id: LetterId, n: usize) -> Option<Occurrence> {
        let [a, b] = self.occurrences[id.0];
        match (a.word == n, b.word == n) {
            (true, false) => Some(a),
            (false, true) => Some(b),
            _ => None,
        }
    }

    pub fn is_single_in(&self, id: LetterId, n: usize) -> bool {
        self.occurrence_in(id, n).is_some()
    }

    fn require_double(&self, id: LetterId) -> Result<usize> {
        self.home_word(id)
            .ok_or_else(|| Error::NotDoubleLetter(self.token(id).to_string()))
    }

    /// Single and double letters of word `n`.
    pub fn classify_letters(&self, n: usize) -> (LetterSet, LetterSet) {
        let mut singles = self.empty_set();
        let mut doubles = self.empty_set();
        for &id in &self.words[n].letters {
            if self.home_word(id) == Some(n) {
                doubles.insert(id);
            } else {
                singles.insert(id);
            }
        }
        (singles, doubles)
    }

    /// `o(w)`: the single letters of word `n`.
    pub fn o_word(&self, n: usize) -> LetterSet {
        self.classify_letters(n).0
    }

    pub fn double_letters(&self, n: usize) -> impl Iterator<Item = LetterId> + '_ {
        let mut seen = self.empty_set();
        self.words[n].letters.iter().copied().filter(move |&id| {
            if self.home_word(id) == Some(n) && !seen.contains(id) {
                seen.insert(id);
                true
            } else {
                false
            }
        })
    }

    /// Whether two double letters of one word alternate `i j i j` cyclically.
    pub fn interlaced(&self, i: LetterId, j: LetterId) -> Result<bool> {
        let wi = self.require_double(i)?;
        let wj = self.require_double(j)?;
        if wi != wj {
            return Err(Error::DifferentWords(
                self.token(i).to_string(),
                self.token(j).to_string(),
            ));
        }
        if i == j {
            return Ok(false);
        }
        let [i0, i1] = self.occurrences[i.0];
        let [j0, j1] = self.occurrences[j.0];
        let inside = |pos: usize| pos > i0.position && pos < i1.position;
        Ok(inside(j0.position) != inside(j1.position))
    }

    /// `w_i`: letters interlaced with the double letter `i`.
    pub fn w_set(&self, i: LetterId) -> Result<LetterSet> {
        let n = self.require_double(i)?;
        let span = self.double_span(i, ArcChoice::Plain)?;
        let plain = self.o_span(&span);
        let mut out = self.empty_set();
        for id in plain.iter() {
            if self.home_word(id) == Some(n) {
                out.insert(id);
            }
        }
        Ok(out)
    }

    /// The span from one occurrence of the double letter `i` to the other.
    /// `Plain` starts at the occurrence with the smaller stored position.
    pub fn double_span(&self, i: LetterId, arc: ArcChoice) -> Result<Span> {
        self.require_double(i)?;
        let [a, b] = self.occurrences[i.0];
        Ok(match arc {
            ArcChoice::Plain => Span::between(a, b),
            ArcChoice::Primed => Span::between(b, a),
        })
    }

    /// The p-sets `(p_i, p'_i)` of a double letter: letters occurring exactly
    /// once on either side of the two occurrences. `p_i` is read on the
    /// forward span that follows the occurrence at the smaller position.
    pub fn p_sets(&self, i: LetterId) -> Result<(LetterSet, LetterSet)> {
        Ok((
            self.p_set(i, ArcChoice::Plain)?,
            self.p_set(i, ArcChoice::Primed)?,
        ))
    }

    pub fn p_set(&self, i: LetterId, arc: ArcChoice) -> Result<LetterSet> {
        Ok(self.o_span(&self.double_span(i, arc)?))
    }

    /// `o(span)`: letters occurring exactly once strictly inside the span.
    pub fn o_span(&self, span: &Span) -> LetterSet {
        let word = &self.words[span.word];
        self.once_in(span.interior(word.len()).map(|pos| word.letters[pos]))
    }

    /// Letters occurring exactly once in a run of letters.
    pub(crate) fn once_in(&self, letters: impl Iterator<Item = LetterId>) -> LetterSet {
        let mut once = self.empty_set();
        let mut twice = self.empty_set();
        for id in letters {
            if once.contains(id) {
                once.remove(id);
                twice.insert(id);
            } else if !twice.contains(id) {
                once.insert(id);
            }
        }
        once
    }

    /// Number of distinct letters inside the span that also occur in another
    /// word.
    pub fn out_count(&self, span: &Span) -> usize {
        let word = &self.words[span.word];
        let mut seen = self.empty_set();
        for pos in span.interior(word.len()) {
            let id = word.letters[pos];
            if self.home_word(id).is_none() {
                seen.insert(id);
            }
        }
        seen.len()
    }

    /// Single letters of word `n` strictly inside the span.
    pub fn singles_inside(&self, span: &Span) -> usize {
        self.out_count(span)
    }

    /// Letters occurring in both words `m` and `n` (`m != n`).
    pub fn common_letters(&self, m: usize, n: usize) -> LetterSet {
        let mut out = self.empty_set();
        for (id, [a, b]) in self.occurrences.iter().enumerate() {
            if (a.word == m && b.word == n) || (a.word == n && b.word == m) {
                out.insert(LetterId(id));
            }
        }
        out
    }
}

impl FromStr for GaussParagraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GaussParagraph::parse(s)
    }
}

impl fmt::Display for GaussParagraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(words: &[&str]) -> GaussParagraph {
        GaussParagraph::from_words(words.iter().map(|w| w.split_whitespace())).unwrap()
    }

    fn toks(p: &GaussParagraph, s: &LetterSet) -> Vec<String> {
        p.tokens_of(s)
    }

    #[test]
    fn parse_examples() {
        let p = GaussParagraph::parse("a b a b\n").unwrap();
        assert_eq!(p.n_words(), 1);
        assert_eq!(p.n_letters(), 2);

        let p = GaussParagraph::parse("a b\na b\n").unwrap();
        assert_eq!(p.n_words(), 2);
        assert_eq!(p.common_letters(0, 1).len(), 2);

        assert!(matches!(
            GaussParagraph::parse("a a\nb b\n"),
            Err(Error::DisconnectedParagraph(_))
        ));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            GaussParagraph::parse("a b a\n"),
            Err(Error::LetterCount { count: 1, .. })
        ));
        assert!(matches!(
            GaussParagraph::parse("a a a\n"),
            Err(Error::LetterCount { count: 3, .. })
        ));
        match GaussParagraph::parse("a a\n b c- b c\n") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 4)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            GaussParagraph::parse("# nothing\n\n"),
            Err(Error::EmptyParagraph)
        ));
        let empty: Vec<Vec<&str>> = vec![vec!["a", "a"], vec![]];
        assert!(matches!(
            GaussParagraph::from_words(empty),
            Err(Error::EmptyWord(1))
        ));
    }

    #[test]
    fn comments_and_blank_lines() {
        let p = GaussParagraph::parse("# two circles\n\nx1 y_2  # first\n\ty_2 x1\n").unwrap();
        assert_eq!(p.serialize(), "x1 y_2\nx1 y_2\n");
    }

    #[test]
    fn serialize_uses_canonical_rotation() {
        let p = gp(&["c a b a b c"]);
        assert_eq!(p.serialize(), "a b a b c c\n");
        let q = GaussParagraph::parse(&p.serialize()).unwrap();
        assert_eq!(p, q);
        assert_eq!(q.serialize(), p.serialize());
    }

    #[test]
    fn classify() {
        let p = gp(&["a b a b"]);
        let (s, d) = p.classify_letters(0);
        assert!(s.is_empty());
        assert_eq!(toks(&p, &d), ["a", "b"]);

        let p = gp(&["a b", "a b"]);
        let (s, d) = p.classify_letters(0);
        assert_eq!(toks(&p, &s), ["a", "b"]);
        assert!(d.is_empty());

        let p = gp(&["a b a c", "b c"]);
        let (s, d) = p.classify_letters(0);
        assert_eq!(toks(&p, &s), ["b", "c"]);
        assert_eq!(toks(&p, &d), ["a"]);
        assert_eq!(toks(&p, &p.o_word(0)), ["b", "c"]);
    }

    #[test]
    fn interlacing() {
        let p = gp(&["a b a b"]);
        let (a, b) = (p.id_of("a").unwrap(), p.id_of("b").unwrap());
        assert!(p.interlaced(a, b).unwrap());

        let p = gp(&["a a b b"]);
        let (a, b) = (p.id_of("a").unwrap(), p.id_of("b").unwrap());
        assert!(!p.interlaced(a, b).unwrap());

        let p = gp(&["a b b a c c"]);
        let (a, b) = (p.id_of("a").unwrap(), p.id_of("b").unwrap());
        assert!(!p.interlaced(a, b).unwrap());

        let p = gp(&["a b a c", "b c"]);
        let b = p.id_of("b").unwrap();
        assert!(matches!(
            p.interlaced(p.id_of("a").unwrap(), b),
            Err(Error::NotDoubleLetter(_))
        ));
    }

    #[test]
    fn w_sets() {
        let p = gp(&["a b a b"]);
        assert_eq!(toks(&p, &p.w_set(p.id_of("a").unwrap()).unwrap()), ["b"]);
        let p = gp(&["a a"]);
        assert!(p.w_set(p.id_of("a").unwrap()).unwrap().is_empty());
        let p = gp(&["a b c a b c"]);
        assert_eq!(
            toks(&p, &p.w_set(p.id_of("a").unwrap()).unwrap()),
            ["b", "c"]
        );
    }

    #[test]
    fn p_set_examples() {
        let p = gp(&["a b a b"]);
        let (pi, pp) = p.p_sets(p.id_of("a").unwrap()).unwrap();
        assert_eq!(
            (toks(&p, &pi), toks(&p, &pp)),
            (vec!["b".into()], vec!["b".into()])
        );

        let p = gp(&["a b a c", "b c"]);
        let (pi, pp) = p.p_sets(p.id_of("a").unwrap()).unwrap();
        assert_eq!(toks(&p, &pi), ["b"]);
        assert_eq!(toks(&p, &pp), ["c"]);

        let p = gp(&["a b c b a d", "c d"]);
        let (pi, pp) = p.p_sets(p.id_of("a").unwrap()).unwrap();
        assert_eq!(toks(&p, &pi), ["c"]);
        assert_eq!(toks(&p, &pp), ["d"]);
    }

    #[test]
    fn o_span_examples() {
        // a [b c b] d : c only
        let p = gp(&["a b c b d", "a c d"]);
        assert_eq!(toks(&p, &p.o_span(&Span::new(&p, 0, 0, 4).unwrap())), ["c"]);
        // empty interior
        assert!(p.o_span(&Span::new(&p, 0, 0, 1).unwrap()).is_empty());

        let p = gp(&["a b c a d e", "d e b c"]);
        let span = Span::new(&p, 0, 0, 3).unwrap();
        assert_eq!(toks(&p, &p.o_span(&span)), ["b", "c"]);
        // wrapping span from e around to a
        let span = Span::new(&p, 0, 5, 0).unwrap();
        assert_eq!(span.interior_len(6), 0);
        let span = Span::new(&p, 0, 4, 1).unwrap();
        assert_eq!(toks(&p, &p.o_span(&span)), ["a", "e"]);
    }

    #[test]
    fn out_counts() {
        let p = gp(&["a b a b"]);
        let a = p.id_of("a").unwrap();
        assert_eq!(p.out_count(&p.double_span(a, ArcChoice::Plain).unwrap()), 0);

        let p = gp(&["a b a c", "b c"]);
        let a = p.id_of("a").unwrap();
        assert_eq!(p.out_count(&p.double_span(a, ArcChoice::Plain).unwrap()), 1);

        let p = gp(&["a b c a", "b d c d"]);
        let a = p.id_of("a").unwrap();
        assert_eq!(p.out_count(&p.double_span(a, ArcChoice::Plain).unwrap()), 2);
    }

    #[test]
    fn common() {
        let p = gp(&["a b", "a b"]);
        assert_eq!(toks(&p, &p.common_letters(0, 1)), ["a", "b"]);
        let p = gp(&["a b a c", "b c"]);
        assert_eq!(toks(&p, &p.common_letters(1, 0)), ["b", "c"]);
    }

    #[test]
    fn multi_character_tokens() {
        let p = gp(&["x10 x2 x10 x2"]);
        assert_eq!(p.alphabet()[0].as_str(), "x10");
        assert!(p
            .interlaced(p.id_of("x10").unwrap(), p.id_of("x2").unwrap())
            .unwrap());
    }
}
