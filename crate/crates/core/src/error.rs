use thiserror::Error;

use crate::checker::Condition;
use crate::partition::Violation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid letter token {0:?}")]
    InvalidLetter(String),
    #[error("letter {letter} occurs {count} time(s); every letter must occur exactly twice")]
    LetterCount { letter: String, count: usize },
    #[error("paragraph is disconnected: words {0:?} share no letter with the rest")]
    DisconnectedParagraph(Vec<usize>),
    #[error("word {0} is empty")]
    EmptyWord(usize),
    #[error("paragraph has no words")]
    EmptyParagraph,
    #[error("unknown letter {0}")]
    UnknownLetter(String),
    #[error("letter {0} is not a double letter")]
    NotDoubleLetter(String),
    #[error("letter {0} is not a single letter of the given word")]
    NotSingleLetter(String),
    #[error("double letters {0} and {1} belong to different words")]
    DifferentWords(String, String),
    #[error("span does not lie in word {0}")]
    SpanNotInWord(usize),
    #[error("span endpoints must be two occurrences of one double letter or two distinct single letters")]
    InvalidSpan,
    #[error("partition: {0}")]
    Partition(String),
    #[error("partition is not word-wise: {0}")]
    NotWordWise(Violation),
    #[error("virtual string: {0}")]
    VirtualString(String),
    #[error("virtual string is disconnected")]
    DisconnectedString,
    #[error("endpoints of the two arrows are not on a common circle")]
    EndpointsNotOnCommonCircle,
    #[error("arrow {0} does not have both endpoints on circle {1}")]
    ArrowNotOnCircle(String, usize),
    #[error("arrow {0} does not have its tail on circle {1}")]
    TailsNotOnCircle(String, usize),
    #[error("q-pairing undefined: circle {0} carries an odd number of endpoints")]
    QUndefined(usize),
    #[error("precondition violated: condition ({0}) fails")]
    PreconditionViolated(Condition),
    #[error("{0}")]
    Io(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
