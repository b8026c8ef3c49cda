//! The seven realizability conditions, the search over partitions, and
//! agreement checks against the genus oracle.

use std::cell::OnceCell;
use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cyclic::{
    compatible_with_dp, enumerate_dp, DpFailure, DpFamily, DpOutcome, DEFAULT_MAX_CYCLIC,
};
use crate::error::{Error, Result};
use crate::gauss::{ArcChoice, GaussParagraph, LetterId};
use crate::homology::{basis_cycles, compatible_on_basis, Basis};
use crate::partition::{
    compatible_with_p, enumerate_partitions, is_word_wise, CompatibilityFailure, WordWisePartition,
};
use crate::surface::{self, SurfaceSummary};
use crate::vstring::VirtualString;

pub const SCHEMA: &str = "gpcheck/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

impl Condition {
    pub const ALL: [Condition; 7] = [
        Condition::I,
        Condition::II,
        Condition::III,
        Condition::IV,
        Condition::V,
        Condition::VI,
        Condition::VII,
    ];

    pub fn numeral(self) -> &'static str {
        match self {
            Condition::I => "i",
            Condition::II => "ii",
            Condition::III => "iii",
            Condition::IV => "iv",
            Condition::V => "v",
            Condition::VI => "vi",
            Condition::VII => "vii",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.numeral())
    }
}

/// What made a condition fail (or stay undecided).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub message: String,
    pub letters: Vec<String>,
    pub words: Vec<usize>,
    /// Indices into the enumerated cyclic-sequence family.
    pub sequences: Vec<usize>,
}

impl Witness {
    fn new(message: String) -> Self {
        Witness {
            message,
            letters: Vec::new(),
            words: Vec::new(),
            sequences: Vec::new(),
        }
    }

    fn letters(mut self, p: &GaussParagraph, ids: &[LetterId]) -> Self {
        self.letters = ids.iter().map(|&i| p.token(i).to_string()).collect();
        self
    }

    fn words(mut self, words: &[usize]) -> Self {
        self.words = words.to_vec();
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(Witness),
    Indeterminate(Witness),
}

impl Status {
    pub fn passed(&self) -> bool {
        matches!(self, Status::Pass)
    }

    fn name(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail(_) => "fail",
            Status::Indeterminate(_) => "indeterminate",
        }
    }

    fn witness(&self) -> Option<&Witness> {
        match self {
            Status::Pass => None,
            Status::Fail(w) | Status::Indeterminate(w) => Some(w),
        }
    }
}

fn status(w: Option<Witness>) -> Status {
    w.map_or(Status::Pass, Status::Fail)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Indeterminate,
}

/// Status of each of the seven conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    statuses: [Status; 7],
}

impl ConditionReport {
    pub fn status(&self, c: Condition) -> &Status {
        &self.statuses[c as usize]
    }

    pub fn statuses(&self) -> impl Iterator<Item = (Condition, &Status)> {
        Condition::ALL.into_iter().zip(self.statuses.iter())
    }

    pub fn passes(&self) -> bool {
        self.statuses.iter().all(Status::passed)
    }

    pub fn verdict(&self) -> Verdict {
        if self.statuses.iter().any(|s| matches!(s, Status::Fail(_))) {
            Verdict::Fail
        } else if self.passes() {
            Verdict::Pass
        } else {
            Verdict::Indeterminate
        }
    }

    /// First failing condition, if any.
    pub fn first_failure(&self) -> Option<(Condition, &Witness)> {
        self.statuses().find_map(|(c, s)| match s {
            Status::Fail(w) => Some((c, w)),
            _ => None,
        })
    }

    /// Whether conditions (i), (iii) and (v) hold, so a string can be built.
    pub fn constructible(&self) -> bool {
        [Condition::I, Condition::III, Condition::V]
            .iter()
            .all(|&c| self.status(c).passed())
    }

    pub fn to_json_value(&self) -> Value {
        let mut map = serde_json::Map::new();
        for (c, s) in self.statuses() {
            let pass = match s {
                Status::Pass => json!(true),
                Status::Fail(_) => json!(false),
                Status::Indeterminate(_) => Value::Null,
            };
            map.insert(
                c.numeral().to_string(),
                json!({ "pass": pass, "status": s.name(), "witness": s.witness() }),
            );
        }
        Value::Object(map)
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, s) in self.statuses() {
            write!(f, "({c}) {}", s.name())?;
            if let Some(w) = s.witness() {
                write!(f, ": {}", w.message)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub max_cyclic: usize,
    /// Check (vii) on the basis cycles only instead of the whole family.
    pub fast_path: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_cyclic: DEFAULT_MAX_CYCLIC,
            fast_path: false,
        }
    }
}

fn doubles(p: &GaussParagraph) -> impl Iterator<Item = LetterId> + '_ {
    p.letter_ids().filter(|&i| p.is_double(i))
}

const ARCS: [ArcChoice; 2] = [ArcChoice::Plain, ArcChoice::Primed];

fn arc_mark(arc: ArcChoice) -> &'static str {
    match arc {
        ArcChoice::Plain => "",
        ArcChoice::Primed => "'",
    }
}

/// Interlacing count and both p-set sizes of every double letter are even.
pub fn check_i(p: &GaussParagraph) -> Option<Witness> {
    for i in doubles(p) {
        let t = p.token(i);
        let w = p.w_set(i).expect("double").len();
        let (pi, pj) = p.p_sets(i).expect("double");
        let bad = if w % 2 == 1 {
            Some(format!("#(w_{t}) = {w} is odd"))
        } else if pi.len() % 2 == 1 {
            Some(format!("#(p_{t}) = {} is odd", pi.len()))
        } else if pj.len() % 2 == 1 {
            Some(format!("#(p'_{t}) = {} is odd", pj.len()))
        } else {
            None
        };
        if let Some(msg) = bad {
            let home = p.home_word(i).expect("double");
            return Some(Witness::new(msg).letters(p, &[i]).words(&[home]));
        }
    }
    None
}

/// Each p-set of a double letter meets every other word's single letters an
/// even number of times.
pub fn check_ii(p: &GaussParagraph) -> Option<Witness> {
    for i in doubles(p) {
        let home = p.home_word(i).expect("double");
        for m in (0..p.n_words()).filter(|&m| m != home) {
            let o = p.o_word(m);
            for arc in ARCS {
                let k = p.p_set(i, arc).expect("double").intersection_count(&o);
                if k % 2 == 1 {
                    let msg = format!(
                        "#(p{}_{} ∩ o(v_{m})) = {k} is odd",
                        arc_mark(arc),
                        p.token(i)
                    );
                    return Some(Witness::new(msg).letters(p, &[i]).words(&[home, m]));
                }
            }
        }
    }
    None
}

/// Any two words share an even number of letters.
pub fn check_iii(p: &GaussParagraph) -> Option<Witness> {
    for m in 0..p.n_words() {
        for n in m + 1..p.n_words() {
            let common = p.common_letters(m, n);
            if common.len() % 2 == 1 {
                let ids: Vec<LetterId> = common.iter().collect();
                let msg = format!("words {m} and {n} share {} letters", common.len());
                return Some(Witness::new(msg).letters(p, &ids).words(&[m, n]));
            }
        }
    }
    None
}

/// Non-interlaced double letters of one word have evenly many common
/// interlaced letters.
pub fn check_iv(p: &GaussParagraph) -> Option<Witness> {
    for n in 0..p.n_words() {
        let ds: Vec<LetterId> = p.double_letters(n).collect();
        let mut ds = ds;
        ds.sort();
        for (x, &i) in ds.iter().enumerate() {
            for &j in &ds[x + 1..] {
                if p.interlaced(i, j).expect("double") {
                    continue;
                }
                let k = p
                    .w_set(i)
                    .expect("double")
                    .intersection_count(&p.w_set(j).expect("double"));
                if k % 2 == 1 {
                    let msg = format!("#(w_{} ∩ w_{}) = {k} is odd", p.token(i), p.token(j));
                    return Some(Witness::new(msg).letters(p, &[i, j]).words(&[n]));
                }
            }
        }
    }
    None
}

/// The partition is compatible with the paragraph.
pub fn check_v(p: &GaussParagraph, part: &WordWisePartition) -> Option<Witness> {
    compatible_with_p(p, part).err().map(|f| match f {
        CompatibilityFailure::Interlaced { i, j, word } => Witness::new(format!(
            "interlaced letters {} and {} disagree with their placement",
            p.token(i),
            p.token(j)
        ))
        .letters(p, &[i, j])
        .words(&[word]),
        CompatibilityFailure::Singles { i, j, word } => Witness::new(format!(
            "single letters {} and {} disagree with their placement",
            p.token(i),
            p.token(j)
        ))
        .letters(p, &[i, j])
        .words(&[word]),
    })
}

/// Double letters of different words have p-sets meeting evenly.
pub fn check_vi(p: &GaussParagraph) -> Option<Witness> {
    let ds: Vec<LetterId> = doubles(p).collect();
    for (x, &i) in ds.iter().enumerate() {
        for &j in &ds[x + 1..] {
            let (hi, hj) = (
                p.home_word(i).expect("double"),
                p.home_word(j).expect("double"),
            );
            if hi == hj {
                continue;
            }
            for ai in ARCS {
                for aj in ARCS {
                    let k = p
                        .p_set(i, ai)
                        .expect("double")
                        .intersection_count(&p.p_set(j, aj).expect("double"));
                    if k % 2 == 1 {
                        let msg = format!(
                            "#(p{}_{} ∩ p{}_{}) = {k} is odd",
                            arc_mark(ai),
                            p.token(i),
                            arc_mark(aj),
                            p.token(j)
                        );
                        return Some(Witness::new(msg).letters(p, &[i, j]).words(&[hi, hj]));
                    }
                }
            }
        }
    }
    None
}

fn describe_sequence(p: &GaussParagraph, family: &DpFamily, s: usize) -> String {
    let d = &family.sequences[s];
    let connectors: Vec<&str> = d.connectors().iter().map(|&c| p.token(c)).collect();
    format!("words {:?} via {}", d.chain(), connectors.join(","))
}

fn dp_status(p: &GaussParagraph, family: &DpFamily, outcome: DpOutcome) -> Status {
    match outcome {
        DpOutcome::Compatible => Status::Pass,
        DpOutcome::Indeterminate => Status::Indeterminate(Witness::new(format!(
            "cyclic sequences exceed the cap of {}",
            family.sequences.len()
        ))),
        DpOutcome::Incompatible(f) => {
            let w = match f {
                DpFailure::W { word, seq } => Witness {
                    message: format!(
                        "W(v_{word}, d) is odd for d = {}",
                        describe_sequence(p, family, seq)
                    ),
                    letters: Vec::new(),
                    words: vec![word],
                    sequences: vec![seq],
                },
                DpFailure::Q { letter, arc, seq } => Witness {
                    message: format!(
                        "Q(p{}_{}, d) is odd for d = {}",
                        arc_mark(arc),
                        p.token(letter),
                        describe_sequence(p, family, seq)
                    ),
                    letters: vec![p.token(letter).to_string()],
                    words: vec![p.home_word(letter).expect("double")],
                    sequences: vec![seq],
                },
                DpFailure::D { first, second } => Witness {
                    message: format!(
                        "sum of D(d1, d2) is odd for d1 = {}, d2 = {}",
                        describe_sequence(p, family, first),
                        describe_sequence(p, family, second)
                    ),
                    letters: Vec::new(),
                    words: Vec::new(),
                    sequences: vec![first, second],
                },
            };
            Status::Fail(w)
        }
    }
}

/// The partition is compatible with every cyclic sequence in `family`.
pub fn check_vii(p: &GaussParagraph, part: &WordWisePartition, family: &DpFamily) -> Status {
    dp_status(p, family, compatible_with_dp(p, part, family))
}

/// Condition (vii) checked on the basis cycles only. The reduction relies
/// on (i) to (vi); when one of them fails the full family is used instead.
pub fn check_vii_fast(p: &GaussParagraph, part: &WordWisePartition, max_cyclic: usize) -> Status {
    if Fixed::new(p).all_pass() && check_v(p, part).is_none() {
        check_vii_on_basis(p, part, &basis_cycles(p))
    } else {
        check_vii(p, part, &enumerate_dp(p, max_cyclic))
    }
}

/// Condition (vii) on the basis cycles, without checking the hypotheses.
pub fn check_vii_on_basis(p: &GaussParagraph, part: &WordWisePartition, basis: &Basis) -> Status {
    dp_status(
        p,
        &basis.cycle_family(),
        compatible_on_basis(p, part, basis),
    )
}

/// Conditions that do not depend on the partition.
#[derive(Debug, Clone)]
struct Fixed {
    i: Status,
    ii: Status,
    iii: Status,
    iv: Status,
    vi: Status,
}

impl Fixed {
    fn new(p: &GaussParagraph) -> Self {
        Fixed {
            i: status(check_i(p)),
            ii: status(check_ii(p)),
            iii: status(check_iii(p)),
            iv: status(check_iv(p)),
            vi: status(check_vi(p)),
        }
    }

    fn all_pass(&self) -> bool {
        [&self.i, &self.ii, &self.iii, &self.iv, &self.vi]
            .iter()
            .all(|s| s.passed())
    }

    fn report(&self, v: Status, vii: Status) -> ConditionReport {
        ConditionReport {
            statuses: [
                self.i.clone(),
                self.ii.clone(),
                self.iii.clone(),
                self.iv.clone(),
                v,
                self.vi.clone(),
                vii,
            ],
        }
    }
}

/// Evaluates all seven conditions for a word-wise pair.
pub fn check_conditions(
    p: &GaussParagraph,
    part: &WordWisePartition,
    family: &DpFamily,
) -> Result<ConditionReport> {
    is_word_wise(p, part).map_err(Error::NotWordWise)?;
    let fixed = Fixed::new(p);
    Ok(fixed.report(status(check_v(p, part)), check_vii(p, part, family)))
}

/// [`check_conditions`] with the family enumerated (or the fast path taken)
/// according to `opts`.
pub fn check_pair(
    p: &GaussParagraph,
    part: &WordWisePartition,
    opts: &CheckOptions,
) -> Result<ConditionReport> {
    is_word_wise(p, part).map_err(Error::NotWordWise)?;
    let fixed = Fixed::new(p);
    let v = status(check_v(p, part));
    let vii = if opts.fast_path && fixed.all_pass() && v.passed() {
        check_vii_on_basis(p, part, &basis_cycles(p))
    } else {
        check_vii(p, part, &enumerate_dp(p, opts.max_cyclic))
    };
    Ok(fixed.report(v, vii))
}

/// Proof of realizability: a passing partition, its string and that
/// string's planar surface.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub partition: WordWisePartition,
    pub report: ConditionReport,
    pub string: VirtualString,
    pub oracle: SurfaceSummary,
    pub boundary: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotRealizableReason {
    /// No word-wise partition exists.
    NoPartition,
    /// Every partition fails some condition.
    ConditionsFail,
}

#[derive(Debug, Clone)]
pub enum Realizability {
    Realizable(Box<Certificate>),
    NotRealizable {
        reason: NotRealizableReason,
        /// Report for the first partition tried, if there was one.
        first: Option<(WordWisePartition, ConditionReport)>,
    },
    /// Some partition passed everything except a truncated (vii).
    Indeterminate {
        partition: WordWisePartition,
        report: ConditionReport,
    },
}

impl Realizability {
    pub fn verdict_name(&self) -> &'static str {
        match self {
            Realizability::Realizable(_) => "realizable",
            Realizability::NotRealizable { .. } => "not_realizable",
            Realizability::Indeterminate { .. } => "indeterminate",
        }
    }
}

fn certificate(
    p: &GaussParagraph,
    part: WordWisePartition,
    report: ConditionReport,
) -> Certificate {
    let string =
        VirtualString::construct_from_pair(p, &part).expect("passing pair is constructible");
    let oracle = surface::genus(&string);
    let boundary = surface::certificate(&string);
    Certificate {
        partition: part,
        report,
        string,
        oracle,
        boundary,
    }
}

/// Decides whether some word-wise partition makes the paragraph realizable;
/// returns the first passing partition in enumeration order.
pub fn realizable(p: &GaussParagraph, opts: &CheckOptions) -> Realizability {
    let fixed = Fixed::new(p);
    let family: OnceCell<DpFamily> = OnceCell::new();
    let basis = OnceCell::new();
    let vii = |part: &WordWisePartition, hypotheses: bool| {
        if opts.fast_path && hypotheses {
            check_vii_on_basis(p, part, basis.get_or_init(|| basis_cycles(p)))
        } else {
            check_vii(
                p,
                part,
                family.get_or_init(|| enumerate_dp(p, opts.max_cyclic)),
            )
        }
    };
    let mut first = None;
    let mut undecided = None;
    for part in enumerate_partitions(p) {
        let v = status(check_v(p, &part));
        // Only the first report needs (vii) once the fixed conditions fail.
        if !fixed.all_pass() || !v.passed() {
            if first.is_none() {
                let report = fixed.report(v, vii(&part, false));
                first = Some((part, report));
            }
            continue;
        }
        let report = fixed.report(v, vii(&part, true));
        match report.verdict() {
            Verdict::Pass => {
                return Realizability::Realizable(Box::new(certificate(p, part, report)))
            }
            Verdict::Indeterminate => {
                if undecided.is_none() {
                    undecided = Some((part.clone(), report.clone()));
                }
            }
            Verdict::Fail => {}
        }
        if first.is_none() {
            first = Some((part, report));
        }
    }
    if let Some((partition, report)) = undecided {
        return Realizability::Indeterminate { partition, report };
    }
    let reason = if first.is_none() {
        NotRealizableReason::NoPartition
    } else {
        NotRealizableReason::ConditionsFail
    };
    Realizability::NotRealizable { reason, first }
}

/// Checker verdict and oracle verdict for one pair.
#[derive(Debug, Clone)]
pub struct Agreement {
    pub report: ConditionReport,
    /// Genus of the string built from the pair, when it can be built.
    pub constructed: Option<SurfaceSummary>,
    /// Genus of a given string whose underlying pair this is.
    pub given: Option<SurfaceSummary>,
    /// `None` when the checker could not decide.
    pub agree: Option<bool>,
}

/// Compares the checker with the genus of the string built from the pair.
///
/// When (i), (iii) or (v) fails no string is built; the pair must then be
/// reported as failing, which it is by construction.
pub fn cross_validate(
    p: &GaussParagraph,
    part: &WordWisePartition,
    opts: &CheckOptions,
) -> Result<Agreement> {
    let report = check_pair(p, part, opts)?;
    let constructed = if report.constructible() {
        Some(surface::genus(&VirtualString::construct_from_pair(
            p, part,
        )?))
    } else {
        None
    };
    let agree = match report.verdict() {
        Verdict::Indeterminate => None,
        v => Some(match constructed {
            Some(g) => (v == Verdict::Pass) == g.is_planar(),
            None => v == Verdict::Fail,
        }),
    };
    Ok(Agreement {
        report,
        constructed,
        given: None,
        agree,
    })
}

/// Outcome of validating one virtual string.
#[derive(Debug, Clone)]
pub enum StringCheck {
    /// The induced partition is not word-wise; the string must be
    /// non-planar.
    NotWordWise {
        oracle: SurfaceSummary,
        agree: bool,
    },
    Checked(Box<Agreement>),
}

impl StringCheck {
    pub fn agree(&self) -> Option<bool> {
        match self {
            StringCheck::NotWordWise { agree, .. } => Some(*agree),
            StringCheck::Checked(a) => a.agree,
        }
    }
}

/// Checks the underlying pair of a string against the string's own genus
/// and against the genus of the string rebuilt from the pair.
pub fn validate_string(s: &VirtualString, opts: &CheckOptions) -> Result<StringCheck> {
    let p = s.underlying_paragraph();
    let part = s.induced_partition()?;
    let oracle = surface::genus(s);
    if is_word_wise(&p, &part).is_err() {
        return Ok(StringCheck::NotWordWise {
            oracle,
            agree: !oracle.is_planar(),
        });
    }
    let mut a = cross_validate(&p, &part, opts)?;
    a.given = Some(oracle);
    if let Some(ok) = a.agree {
        a.agree = Some(ok && (a.report.verdict() == Verdict::Pass) == oracle.is_planar());
    }
    Ok(StringCheck::Checked(Box::new(a)))
}

/// JSON report for a realizability decision.
pub fn realizability_json(p: &GaussParagraph, r: &Realizability) -> Value {
    match r {
        Realizability::Realizable(c) => json!({
            "schema": SCHEMA,
            "verdict": r.verdict_name(),
            "partition": c.partition.to_json_value(p),
            "conditions": c.report.to_json_value(),
            "oracle": oracle_json(&c.oracle, Some(&c.boundary)),
            "string": serde_json::from_str::<Value>(&c.string.to_json()).expect("valid json"),
        }),
        Realizability::NotRealizable { reason, first } => json!({
            "schema": SCHEMA,
            "verdict": r.verdict_name(),
            "reason": match reason {
                NotRealizableReason::NoPartition => "no_partition",
                NotRealizableReason::ConditionsFail => "conditions_fail",
            },
            "partition": first.as_ref().map(|(part, _)| part.to_json_value(p)),
            "conditions": first.as_ref().map(|(_, rep)| rep.to_json_value()),
            "oracle": Value::Null,
        }),
        Realizability::Indeterminate { partition, report } => json!({
            "schema": SCHEMA,
            "verdict": r.verdict_name(),
            "partition": partition.to_json_value(p),
            "conditions": report.to_json_value(),
            "oracle": Value::Null,
        }),
    }
}

/// JSON report for one pair.
pub fn pair_json(p: &GaussParagraph, part: &WordWisePartition, a: &Agreement) -> Value {
    let verdict = match a.report.verdict() {
        Verdict::Pass => "realizable",
        Verdict::Fail => "not_realizable",
        Verdict::Indeterminate => "indeterminate",
    };
    json!({
        "schema": SCHEMA,
        "verdict": verdict,
        "partition": part.to_json_value(p),
        "conditions": a.report.to_json_value(),
        "oracle": a.constructed.as_ref().map(|g| oracle_json(g, None)),
        "agree": a.agree,
    })
}

pub fn oracle_json(g: &SurfaceSummary, boundary: Option<&Vec<Vec<String>>>) -> Value {
    let mut v = json!({
        "genus": g.genus,
        "boundary": g.boundary_components,
        "euler_characteristic": g.euler_characteristic,
        "planar": g.is_planar(),
    });
    if let Some(b) = boundary {
        v["boundary_cycles"] = json!(b);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(words: &[&str]) -> GaussParagraph {
        GaussParagraph::from_words(words.iter().map(|w| w.split_whitespace())).unwrap()
    }

    #[test]
    fn abab_fails_i() {
        let p = gp(&["a b a b"]);
        let w = check_i(&p).unwrap();
        assert_eq!(w.letters, ["a"]);
        assert!(w.message.contains("#(w_a) = 1"));
        assert!(matches!(
            realizable(&p, &CheckOptions::default()),
            Realizability::NotRealizable { .. }
        ));
    }

    #[test]
    fn figure_eight_passes() {
        let p = gp(&["a a"]);
        let part = WordWisePartition::from_tokens(&p, &[(&["a"], &[])]).unwrap();
        let fam = enumerate_dp(&p, 10);
        let r = check_conditions(&p, &part, &fam).unwrap();
        assert!(r.passes());
        let Realizability::Realizable(c) = realizable(&p, &CheckOptions::default()) else {
            panic!()
        };
        assert_eq!(c.oracle.genus, 0);
    }

    #[test]
    fn hopf_shadow_realizable() {
        let p = gp(&["a b", "a b"]);
        let Realizability::Realizable(c) = realizable(&p, &CheckOptions::default()) else {
            panic!()
        };
        assert_eq!(c.oracle.genus, 0);
        assert!(c.report.passes());
    }

    #[test]
    fn odd_sharing_has_no_partition() {
        let p = gp(&["a b b", "a c c"]);
        assert!(check_iii(&p).is_some());
        assert!(matches!(
            realizable(&p, &CheckOptions::default()),
            Realizability::NotRealizable {
                reason: NotRealizableReason::NoPartition,
                ..
            }
        ));
    }

    #[test]
    fn not_word_wise_rejected() {
        let p = gp(&["a b", "a b"]);
        let part = WordWisePartition::from_tokens(&p, &[(&["a", "b"], &[]), (&[], &[])]).unwrap();
        assert!(matches!(
            check_conditions(&p, &part, &DpFamily::default()),
            Err(Error::NotWordWise(_))
        ));
    }

    #[test]
    fn cross_validate_examples() {
        let p = gp(&["a a"]);
        let part = WordWisePartition::from_tokens(&p, &[(&["a"], &[])]).unwrap();
        let a = cross_validate(&p, &part, &CheckOptions::default()).unwrap();
        assert_eq!(a.agree, Some(true));
        assert_eq!(a.constructed.unwrap().genus, 0);

        let p = gp(&["a b a b"]);
        let part = WordWisePartition::from_tokens(&p, &[(&["a"], &["b"])]).unwrap();
        let a = cross_validate(&p, &part, &CheckOptions::default()).unwrap();
        assert_eq!(a.agree, Some(true));
        assert!(a.constructed.is_none());
    }

    #[test]
    fn report_json_shape() {
        let p = gp(&["a a"]);
        let r = realizable(&p, &CheckOptions::default());
        let v = realizability_json(&p, &r);
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["verdict"], "realizable");
        assert_eq!(v["conditions"]["i"]["pass"], true);
        assert_eq!(v["oracle"]["genus"], 0);
        assert_eq!(v["oracle"]["boundary"], 3);
    }
}
