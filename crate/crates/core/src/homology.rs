//! Mod-2 intersection values on a generating set of loop classes.

use std::fmt;

use crate::cyclic::{compatible_with_dp, d_map, q_map, w_map, CyclicSequence, DpFamily, DpOutcome};
use crate::gauss::{ArcChoice, GaussParagraph, LetterId, LetterSet, Span};
use crate::partition::WordWisePartition;
use crate::vstring::VirtualString;

/// A generator of the loop classes of the ribbon surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BasisClass {
    /// A whole circle.
    Circle(usize),
    /// The loop along one of the two arcs cut out by a double letter.
    Arrow(LetterId, ArcChoice),
    /// A loop through several circles.
    Cycle(CyclicSequence),
}

impl BasisClass {
    pub fn describe(&self, p: &GaussParagraph) -> String {
        match self {
            BasisClass::Circle(n) => format!("circle {n}"),
            BasisClass::Arrow(i, ArcChoice::Plain) => format!("arrow {}", p.token(*i)),
            BasisClass::Arrow(i, ArcChoice::Primed) => format!("arrow {}*", p.token(*i)),
            BasisClass::Cycle(d) => format!(
                "cycle {:?} via {}",
                d.chain(),
                d.connectors()
                    .iter()
                    .map(|&c| p.token(c))
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        }
    }
}

/// A mod-2 intersection value, or the reason no formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BEval {
    Parity(u8),
    NotApplicable(&'static str),
}

impl fmt::Display for BEval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BEval::Parity(v) => write!(f, "{v}"),
            BEval::NotApplicable(why) => write!(f, "n/a ({why})"),
        }
    }
}

/// Spanning tree letters of the word graph and the generating classes.
#[derive(Debug, Clone)]
pub struct Basis {
    pub tree_letters: LetterSet,
    pub classes: Vec<BasisClass>,
}

impl Basis {
    /// The cycle classes as a family of cyclic sequences.
    pub fn cycle_family(&self) -> DpFamily {
        DpFamily {
            sequences: self
                .classes
                .iter()
                .filter_map(|c| match c {
                    BasisClass::Cycle(d) => Some(d.clone()),
                    _ => None,
                })
                .collect(),
            truncated: false,
        }
    }
}

/// Circles, one arc loop per double letter, and one cycle per letter left
/// out of the least spanning tree of the word graph (edges taken in letter
/// order).
pub fn basis_cycles(p: &GaussParagraph) -> Basis {
    let n = p.n_words();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    let mut tree = p.empty_set();
    let mut adjacency: Vec<Vec<(usize, LetterId)>> = vec![Vec::new(); n];
    let mut cotree = Vec::new();
    for id in p.letter_ids() {
        let (u, v) = p.words_of(id);
        if u == v {
            continue;
        }
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            cotree.push(id);
        } else {
            parent[ru] = rv;
            tree.insert(id);
            adjacency[u].push((v, id));
            adjacency[v].push((u, id));
        }
    }
    let mut classes: Vec<BasisClass> = (0..n).map(BasisClass::Circle).collect();
    classes.extend(
        p.letter_ids()
            .filter(|&i| p.is_double(i))
            .map(|i| BasisClass::Arrow(i, ArcChoice::Plain)),
    );
    for c in cotree {
        let (u, v) = p.words_of(c);
        let (u, v) = (u.min(v), u.max(v));
        let (path_words, path_letters) = tree_path(&adjacency, v, u);
        // Chain u -> v along c, then back to u through the tree.
        let mut chain = vec![u];
        chain.extend(&path_words[..path_words.len() - 1]);
        let mut connectors = vec![c];
        connectors.extend(path_letters);
        let d = CyclicSequence::new(p, chain, connectors)
            .expect("fundamental cycle is a cyclic sequence");
        classes.push(BasisClass::Cycle(d));
    }
    Basis {
        tree_letters: tree,
        classes,
    }
}

/// Words and connecting letters on the tree path `from -> to`; the word list
/// starts at `from` and ends at `to`.
fn tree_path(
    adjacency: &[Vec<(usize, LetterId)>],
    from: usize,
    to: usize,
) -> (Vec<usize>, Vec<LetterId>) {
    let mut prev: Vec<Option<(usize, LetterId)>> = vec![None; adjacency.len()];
    let mut seen = vec![false; adjacency.len()];
    let mut stack = vec![from];
    seen[from] = true;
    while let Some(x) = stack.pop() {
        for &(y, id) in &adjacency[x] {
            if !seen[y] {
                seen[y] = true;
                prev[y] = Some((x, id));
                stack.push(y);
            }
        }
    }
    let mut words = vec![to];
    let mut letters = Vec::new();
    let mut x = to;
    while x != from {
        let (y, id) = prev[x].expect("tree is connected");
        words.push(y);
        letters.push(id);
        x = y;
    }
    words.reverse();
    letters.reverse();
    (words, letters)
}

/// Evaluator of the mod-2 intersection form for a paragraph with a partition.
///
/// Linked arrows on one circle need the string built from the pair; when it
/// cannot be built those values are not applicable.
pub struct IntersectionForm<'a> {
    p: &'a GaussParagraph,
    part: &'a WordWisePartition,
    string: Option<VirtualString>,
}

impl<'a> IntersectionForm<'a> {
    pub fn new(p: &'a GaussParagraph, part: &'a WordWisePartition) -> Self {
        let string = VirtualString::construct_from_pair(p, part).ok();
        IntersectionForm { p, part, string }
    }

    pub fn string(&self) -> Option<&VirtualString> {
        self.string.as_ref()
    }

    fn w_count(&self, i: LetterId) -> usize {
        self.p.w_set(i).expect("double letter").len()
    }

    pub fn b_mod2(&self, c1: &BasisClass, c2: &BasisClass) -> BEval {
        use BasisClass::*;
        let p = self.p;
        let parity = |v: usize| BEval::Parity((v % 2) as u8);
        match (c1, c2) {
            (Circle(m), Circle(n)) => {
                if m == n {
                    BEval::Parity(0)
                } else {
                    parity(p.common_letters(*m, *n).len())
                }
            }
            (Arrow(i, arc), Circle(m)) | (Circle(m), Arrow(i, arc)) => {
                let home = p.home_word(*i).expect("double letter");
                if home == *m {
                    parity(self.w_count(*i))
                } else {
                    let ps = p.p_set(*i, *arc).expect("double letter");
                    parity(ps.intersection_count(&p.o_word(*m)))
                }
            }
            (Arrow(i, ai), Arrow(j, aj)) => self.arrow_pair(*i, *ai, *j, *aj),
            (Circle(n), Cycle(d)) | (Cycle(d), Circle(n)) => parity(w_map(p, self.part, *n, d)),
            (Arrow(i, arc), Cycle(d)) | (Cycle(d), Arrow(i, arc)) => {
                parity(q_map(p, self.part, *i, *arc, d))
            }
            (Cycle(d1), Cycle(d2)) => parity(d_map(p, self.part, d1, d2).1),
        }
    }

    fn arrow_pair(&self, i: LetterId, ai: ArcChoice, j: LetterId, aj: ArcChoice) -> BEval {
        let p = self.p;
        let parity = |v: usize| BEval::Parity((v % 2) as u8);
        let (hi, hj) = (
            p.home_word(i).expect("double"),
            p.home_word(j).expect("double"),
        );
        if hi != hj {
            let pi = p.p_set(i, ai).expect("double");
            let pj = p.p_set(j, aj).expect("double");
            return parity(pi.intersection_count(&pj));
        }
        if i == j {
            return if ai == aj {
                BEval::Parity(0)
            } else {
                parity(self.w_count(i))
            };
        }
        let (wi, wj) = (self.w_count(i), self.w_count(j));
        if !p.interlaced(i, j).expect("double letters") {
            if wi % 2 == 1 || wj % 2 == 1 {
                return BEval::NotApplicable("odd interlacing count");
            }
            let common = p
                .w_set(i)
                .expect("double")
                .intersection_count(&p.w_set(j).expect("double"));
            return parity(common);
        }
        if wi % 2 == 1 {
            return BEval::NotApplicable("odd interlacing count");
        }
        let Some(s) = &self.string else {
            return BEval::NotApplicable("no string for this pair");
        };
        // The formula is for loops running tail to head; the other arc of an
        // arrow differs by its circle, whose value is the interlacing count
        // of the other letter.
        let mut v = self.linked_pair(s, i, j);
        if !self.runs_tail_to_head(s, i, ai) {
            v += wj;
        }
        if !self.runs_tail_to_head(s, j, aj) {
            v += wi;
        }
        parity(v)
    }

    fn runs_tail_to_head(&self, s: &VirtualString, i: LetterId, arc: ArcChoice) -> bool {
        self.p.double_span(i, arc).expect("double").start == s.tail(i.0).slot
    }

    /// Value for linked arrows on one circle, both loops taken tail to head.
    fn linked_pair(&self, s: &VirtualString, i: LetterId, j: LetterId) -> usize {
        let n = s.tail(i.0).circle;
        let len = self.p.word(n).len();
        let dist = |from: usize, to: usize| (to + len - from) % len;
        let (ai, bi) = (s.tail(i.0).slot, s.head(i.0).slot);
        let aj = s.tail(j.0).slot;
        // Order the pair so the tails come first: a_i, a_j, b_i, b_j.
        let (i, j, ai, aj) = if dist(ai, aj) < dist(ai, bi) {
            (i, j, ai, aj)
        } else {
            (j, i, aj, ai)
        };
        let q = s.q_pairing(n, i.0, j.0).expect("even circles");
        let gap = Span::between_positions(n, ai, aj);
        let common = self
            .p
            .w_set(i)
            .expect("double")
            .intersection_count(&self.p.w_set(j).expect("double"));
        (q.rem_euclid(2) as usize) + self.p.singles_inside(&gap) + common + 1
    }
}

/// Result of scanning every pair of basis classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvenScan {
    AllEven,
    Odd {
        first: usize,
        second: usize,
    },
    NotApplicable {
        first: usize,
        second: usize,
        reason: &'static str,
    },
}

/// Scans all ordered pairs of classes, diagonal included.
pub fn all_even(form: &IntersectionForm<'_>, basis: &Basis) -> EvenScan {
    let cs = &basis.classes;
    for (a, c1) in cs.iter().enumerate() {
        for (b, c2) in cs.iter().enumerate() {
            match form.b_mod2(c1, c2) {
                BEval::Parity(0) => {}
                BEval::Parity(_) => {
                    return EvenScan::Odd {
                        first: a,
                        second: b,
                    }
                }
                BEval::NotApplicable(reason) => {
                    return EvenScan::NotApplicable {
                        first: a,
                        second: b,
                        reason,
                    }
                }
            }
        }
    }
    EvenScan::AllEven
}

/// Compatibility with the cyclic sequences, checked on the basis cycles only.
pub fn compatible_on_basis(
    p: &GaussParagraph,
    part: &WordWisePartition,
    basis: &Basis,
) -> DpOutcome {
    compatible_with_dp(p, part, &basis.cycle_family())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(words: &[&str]) -> GaussParagraph {
        GaussParagraph::from_words(words.iter().map(|w| w.split_whitespace())).unwrap()
    }

    #[test]
    fn basis_examples() {
        let p = gp(&["a a"]);
        let b = basis_cycles(&p);
        assert!(b.tree_letters.is_empty());
        assert_eq!(b.classes.len(), 2);

        let p = gp(&["a b", "a b"]);
        let b = basis_cycles(&p);
        assert_eq!(p.tokens_of(&b.tree_letters), ["a"]);
        assert_eq!(b.classes.len(), 3);
        let BasisClass::Cycle(d) = &b.classes[2] else {
            panic!()
        };
        assert_eq!(p.token(d.connectors()[0]), "b");

        let p = gp(&["a b a c", "b c"]);
        let b = basis_cycles(&p);
        assert_eq!(p.tokens_of(&b.tree_letters), ["b"]);
        assert_eq!(b.classes.len(), 4);
        assert!(matches!(b.classes[2], BasisClass::Arrow(..)));
        assert!(matches!(b.classes[3], BasisClass::Cycle(..)));
    }

    #[test]
    fn basis_three_words() {
        let p = gp(&["a b c c", "a d", "b d"]);
        let b = basis_cycles(&p);
        // 3 circles, 1 arrow, 1 cycle through all three words.
        assert_eq!(b.classes.len(), 5);
        let BasisClass::Cycle(d) = &b.classes[4] else {
            panic!()
        };
        assert_eq!(d.chain().len(), 3);
    }

    #[test]
    fn values() {
        let p = gp(&["a a"]);
        let part = WordWisePartition::from_tokens(&p, &[(&["a"], &[])]).unwrap();
        let form = IntersectionForm::new(&p, &part);
        let a = p.id_of("a").unwrap();
        assert_eq!(
            form.b_mod2(
                &BasisClass::Arrow(a, ArcChoice::Plain),
                &BasisClass::Circle(0)
            ),
            BEval::Parity(0)
        );
        assert_eq!(all_even(&form, &basis_cycles(&p)), EvenScan::AllEven);

        let p = gp(&["a b", "a b"]);
        let part = WordWisePartition::from_tokens(&p, &[(&["a"], &[]), (&["b"], &[])]).unwrap();
        let form = IntersectionForm::new(&p, &part);
        assert_eq!(
            form.b_mod2(&BasisClass::Circle(0), &BasisClass::Circle(1)),
            BEval::Parity(0)
        );
        assert_eq!(all_even(&form, &basis_cycles(&p)), EvenScan::AllEven);

        let p = gp(&["a b a b"]);
        let part = WordWisePartition::from_tokens(&p, &[(&["a"], &["b"])]).unwrap();
        let form = IntersectionForm::new(&p, &part);
        let a = p.id_of("a").unwrap();
        assert_eq!(
            form.b_mod2(
                &BasisClass::Arrow(a, ArcChoice::Plain),
                &BasisClass::Circle(0)
            ),
            BEval::Parity(1)
        );
    }
}
