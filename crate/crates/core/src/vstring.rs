//! Virtual strings: oriented core circles carrying the endpoints of arrows.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::checker::{self, Condition};
use crate::error::{Error, Result};
use crate::gauss::{GaussParagraph, Letter};
use crate::partition::{is_word_wise, tail_parity, Side, Slot, WordWisePartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EndKind {
    Tail,
    Head,
}

/// One arrow end placed on a circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Endpoint {
    pub arrow: usize,
    pub kind: EndKind,
}

/// Location of an arrow end: circle and slot in that circle's order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Place {
    pub circle: usize,
    pub slot: usize,
}

/// How one arrow links another on a common circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Linking {
    Positive,
    Negative,
    Unlinked,
}

/// A connected virtual string.
///
/// Arrows are numbered by label in byte order, so arrow `k` corresponds to
/// letter id `k` of the underlying paragraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VirtualString {
    labels: Vec<Letter>,
    circles: Vec<Vec<Endpoint>>,
    tails: Vec<Place>,
    heads: Vec<Place>,
}

#[derive(Serialize, Deserialize)]
struct StringDoc {
    circles: Vec<Vec<String>>,
}

impl VirtualString {
    /// Builds a string from circles of `(label, kind)` pairs listed in
    /// orientation order.
    pub fn from_labeled<S: AsRef<str>>(circles: &[Vec<(S, EndKind)>]) -> Result<Self> {
        let mut names: BTreeMap<Letter, usize> = BTreeMap::new();
        for circle in circles {
            for (label, _) in circle {
                names.insert(Letter::new(label.as_ref())?, 0);
            }
        }
        if names.is_empty() {
            return Err(Error::VirtualString("no arrows".into()));
        }
        for (k, v) in names.values_mut().enumerate() {
            *v = k;
        }
        let labels: Vec<Letter> = names.keys().cloned().collect();
        let mut tails: Vec<Option<Place>> = vec![None; labels.len()];
        let mut heads: Vec<Option<Place>> = vec![None; labels.len()];
        let mut out = Vec::with_capacity(circles.len());
        for (c, circle) in circles.iter().enumerate() {
            if circle.is_empty() {
                return Err(Error::VirtualString(format!("circle {c} is empty")));
            }
            let mut ends = Vec::with_capacity(circle.len());
            for (slot, (label, kind)) in circle.iter().enumerate() {
                let arrow = names[&Letter::new(label.as_ref())?];
                let target = match kind {
                    EndKind::Tail => &mut tails[arrow],
                    EndKind::Head => &mut heads[arrow],
                };
                if target.is_some() {
                    return Err(Error::VirtualString(format!(
                        "arrow {} has two {}s",
                        label.as_ref(),
                        if *kind == EndKind::Tail {
                            "tail"
                        } else {
                            "head"
                        }
                    )));
                }
                *target = Some(Place { circle: c, slot });
                ends.push(Endpoint { arrow, kind: *kind });
            }
            out.push(ends);
        }
        let missing = |v: &[Option<Place>], what: &str| -> Result<Vec<Place>> {
            v.iter()
                .enumerate()
                .map(|(k, pl)| {
                    pl.ok_or_else(|| {
                        Error::VirtualString(format!("arrow {} has no {what}", labels[k]))
                    })
                })
                .collect()
        };
        let tails = missing(&tails, "tail")?;
        let heads = missing(&heads, "head")?;
        let s = VirtualString {
            labels,
            circles: out,
            tails,
            heads,
        };
        s.check_connected()?;
        Ok(s)
    }

    fn check_connected(&self) -> Result<()> {
        let n = self.circles.len();
        let mut reach = vec![false; n];
        let mut stack = vec![0];
        reach[0] = true;
        while let Some(c) = stack.pop() {
            for e in &self.circles[c] {
                let other = match e.kind {
                    EndKind::Tail => self.heads[e.arrow].circle,
                    EndKind::Head => self.tails[e.arrow].circle,
                };
                if !reach[other] {
                    reach[other] = true;
                    stack.push(other);
                }
            }
        }
        if reach.iter().all(|&r| r) {
            Ok(())
        } else {
            Err(Error::DisconnectedString)
        }
    }

    /// Parses `{"circles":[["a+","b-",...],...]}`; `x+` is the tail of arrow
    /// `x` and `x-` (or `x−`) its head.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: StringDoc = serde_json::from_str(text)?;
        let circles = doc
            .circles
            .iter()
            .map(|c| {
                c.iter()
                    .map(|t| parse_endpoint(t))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_labeled(&circles)
    }

    pub fn to_json(&self) -> String {
        let doc = StringDoc {
            circles: self
                .circles
                .iter()
                .map(|c| c.iter().map(|e| self.endpoint_token(e)).collect())
                .collect(),
        };
        serde_json::to_string(&doc).expect("string serializes")
    }

    fn endpoint_token(&self, e: &Endpoint) -> String {
        let sign = if e.kind == EndKind::Tail { '+' } else { '-' };
        format!("{}{sign}", self.labels[e.arrow])
    }

    pub fn n_arrows(&self) -> usize {
        self.labels.len()
    }

    pub fn n_circles(&self) -> usize {
        self.circles.len()
    }

    pub fn circles(&self) -> &[Vec<Endpoint>] {
        &self.circles
    }

    pub fn label(&self, arrow: usize) -> &str {
        self.labels[arrow].as_str()
    }

    pub fn arrow_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l.as_str() == label)
    }

    pub fn tail(&self, arrow: usize) -> Place {
        self.tails[arrow]
    }

    pub fn head(&self, arrow: usize) -> Place {
        self.heads[arrow]
    }

    /// Words read along the circles from slot 0.
    pub fn underlying_paragraph(&self) -> GaussParagraph {
        GaussParagraph::from_words(
            self.circles
                .iter()
                .map(|c| c.iter().map(|e| self.labels[e.arrow].as_str())),
        )
        .expect("a valid virtual string has a valid paragraph")
    }

    /// Forward distance from slot `from` to slot `to` on a circle.
    fn dist(&self, circle: usize, from: usize, to: usize) -> usize {
        let len = self.circles[circle].len();
        (to + len - from) % len
    }

    /// Whether `place` is strictly inside the forward arc `from → to`.
    fn strictly_inside(&self, place: Place, from: Place, to: Place) -> bool {
        place.circle == from.circle && {
            let d = self.dist(from.circle, from.slot, place.slot);
            d > 0 && d < self.dist(from.circle, from.slot, to.slot)
        }
    }

    /// How arrow `f` links arrow `e`.
    pub fn links(&self, e: usize, f: usize) -> Result<Linking> {
        let (a, b) = (self.tails[e], self.heads[e]);
        let (c, d) = (self.tails[f], self.heads[f]);
        let s = a.circle;
        if [b, c, d].iter().any(|x| x.circle != s) {
            return Err(Error::EndpointsNotOnCommonCircle);
        }
        if e == f {
            return Ok(Linking::Unlinked);
        }
        let (db, dc, dd) = (
            self.dist(s, a.slot, b.slot),
            self.dist(s, a.slot, c.slot),
            self.dist(s, a.slot, d.slot),
        );
        Ok(if dd < db && db < dc {
            Linking::Positive
        } else if dc < db && db < dd {
            Linking::Negative
        } else {
            Linking::Unlinked
        })
    }

    fn self_arrow_circle(&self, e: usize) -> Option<usize> {
        let (a, b) = (self.tails[e], self.heads[e]);
        (a.circle == b.circle).then_some(a.circle)
    }

    /// Arrows with tail on circle `i` and head on circle `j`.
    pub fn arrows_between(&self, i: usize, j: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n_arrows())
            .filter(move |&f| self.tails[f].circle == i && self.heads[f].circle == j)
    }

    pub fn arr_count(&self, i: usize, j: usize) -> usize {
        self.arrows_between(i, j).count()
    }

    /// Positive minus negative links of self-arrows with `e`.
    pub fn n_of(&self, e: usize) -> Result<i64> {
        let i = self
            .self_arrow_circle(e)
            .ok_or_else(|| Error::ArrowNotOnCircle(self.label(e).into(), self.tails[e].circle))?;
        let mut total = 0;
        for f in self.arrows_between(i, i) {
            match self.links(e, f)? {
                Linking::Positive => total += 1,
                Linking::Negative => total -= 1,
                Linking::Unlinked => {}
            }
        }
        Ok(total)
    }

    fn n_arc(&self, i: usize, j: usize, e: usize, from: Place, to: Place) -> Result<i64> {
        if self.self_arrow_circle(e) != Some(i) {
            return Err(Error::ArrowNotOnCircle(self.label(e).into(), i));
        }
        let heads = self
            .arrows_between(j, i)
            .filter(|&f| self.strictly_inside(self.heads[f], from, to))
            .count() as i64;
        let tails = self
            .arrows_between(i, j)
            .filter(|&f| self.strictly_inside(self.tails[f], from, to))
            .count() as i64;
        Ok(heads - tails)
    }

    /// Signed count over the arc from the tail of `e` to its head.
    pub fn n_ij(&self, i: usize, j: usize, e: usize) -> Result<i64> {
        self.n_arc(i, j, e, self.tails[e], self.heads[e])
    }

    /// Signed count over the arc from the head of `e` to its tail.
    pub fn n_star_ij(&self, i: usize, j: usize, e: usize) -> Result<i64> {
        self.n_arc(i, j, e, self.heads[e], self.tails[e])
    }

    fn check_even(&self) -> Result<()> {
        match self.circles.iter().position(|c| c.len() % 2 == 1) {
            Some(c) => Err(Error::QUndefined(c)),
            None => Ok(()),
        }
    }

    /// Heads minus tails on the arc from the tail of `e` (excluded) to the
    /// tail of `f` (included); zero when `e = f`.
    pub fn q_pairing(&self, circle: usize, e: usize, f: usize) -> Result<i64> {
        self.check_even()?;
        for x in [e, f] {
            if self.tails[x].circle != circle {
                return Err(Error::TailsNotOnCircle(self.label(x).into(), circle));
            }
        }
        if e == f {
            return Ok(0);
        }
        let (a, c) = (self.tails[e].slot, self.tails[f].slot);
        let span = self.dist(circle, a, c);
        let ends = &self.circles[circle];
        let mut q = 0;
        for k in 1..=span {
            match ends[(a + k) % ends.len()].kind {
                EndKind::Head => q += 1,
                EndKind::Tail => q -= 1,
            }
        }
        Ok(q)
    }

    /// The partition read off the string: each arrow belongs to the circle of
    /// its tail, split into the two parity classes of the q-pairing.
    ///
    /// The result always assigns tails to their own circle, but it is only
    /// word-wise when each pair of circles has as many arrows one way as the
    /// other.
    pub fn induced_partition(&self) -> Result<WordWisePartition> {
        self.check_even()?;
        // Arrows are scanned in label order, so the first arrow met on a
        // circle is its least letter and anchors the plain side.
        let mut anchor: Vec<Option<usize>> = vec![None; self.n_circles()];
        let mut slots = Vec::with_capacity(self.n_arrows());
        for f in 0..self.n_arrows() {
            let t = self.tails[f];
            let e = *anchor[t.circle].get_or_insert(f);
            let q = self.q_pairing(t.circle, e, f)?;
            let side = if q.rem_euclid(2) == 0 {
                Side::Plain
            } else {
                Side::Primed
            };
            slots.push(Slot {
                word: t.circle,
                side,
            });
        }
        WordWisePartition::from_slots(&self.underlying_paragraph(), slots)
    }

    /// Builds a string with underlying paragraph `p` and induced partition
    /// `P`, provided the pair passes conditions (i), (iii) and (v).
    ///
    /// Stored word rotations are kept: letters of `A_n` get their tails on
    /// one position parity and letters of `A'_n` on the other, the parity
    /// being fixed by the single letters of `A_n` (or `A'_n`).
    pub fn construct_from_pair(p: &GaussParagraph, part: &WordWisePartition) -> Result<Self> {
        is_word_wise(p, part).map_err(Error::NotWordWise)?;
        if checker::check_i(p).is_some() {
            return Err(Error::PreconditionViolated(Condition::I));
        }
        if checker::check_iii(p).is_some() {
            return Err(Error::PreconditionViolated(Condition::III));
        }
        if checker::check_v(p, part).is_some() {
            return Err(Error::PreconditionViolated(Condition::V));
        }
        let mut circles: Vec<Vec<(&str, EndKind)>> = Vec::with_capacity(p.n_words());
        for n in 0..p.n_words() {
            let word = p.word(n);
            let parity = tail_parity(p, part, n);
            let circle = (0..word.len())
                .map(|pos| {
                    let id = word.at(pos);
                    let slot = part.slot(id);
                    let kind = if p.is_double(id) {
                        let tail_parity = match slot.side {
                            Side::Plain => parity,
                            Side::Primed => 1 - parity,
                        };
                        if pos % 2 == tail_parity {
                            EndKind::Tail
                        } else {
                            EndKind::Head
                        }
                    } else if slot.word == n {
                        EndKind::Tail
                    } else {
                        EndKind::Head
                    };
                    (p.token(id), kind)
                })
                .collect();
            circles.push(circle);
        }
        Self::from_labeled(&circles)
    }
}

fn parse_endpoint(token: &str) -> Result<(String, EndKind)> {
    let bad = || Error::VirtualString(format!("bad endpoint token {token:?}"));
    let (label, kind) = if let Some(l) = token.strip_suffix('+') {
        (l, EndKind::Tail)
    } else if let Some(l) = token.strip_suffix('-') {
        (l, EndKind::Head)
    } else if let Some(l) = token.strip_suffix('\u{2212}') {
        (l, EndKind::Head)
    } else {
        return Err(bad());
    };
    Letter::new(label).map_err(|_| bad())?;
    Ok((label.to_string(), kind))
}

impl fmt::Display for VirtualString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}
