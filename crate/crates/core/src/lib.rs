//! Decide whether a multi-word Gauss paragraph is realizable by a closed
//! curve on the sphere, and check each verdict against the genus of a
//! ribbon surface.
//!
//! ```
//! use gpcheck::{realizable, CheckOptions, GaussParagraph, Realizability};
//!
//! let p = GaussParagraph::parse("a b\na b\n").unwrap();
//! assert!(matches!(realizable(&p, &CheckOptions::default()), Realizability::Realizable(_)));
//! ```

pub mod checker;
pub mod cli;
pub mod cyclic;
pub mod error;
pub mod gauss;
pub mod generate;
pub mod homology;
pub mod partition;
pub mod surface;
pub mod vstring;

pub use checker::{
    check_conditions, check_pair, cross_validate, realizable, validate_string, CheckOptions,
    Condition, ConditionReport, Realizability, Status, Verdict,
};
pub use cyclic::{enumerate_dp, CyclicSequence, DpFamily};
pub use error::{Error, Result};
pub use gauss::{ArcChoice, GaussParagraph, Letter, LetterId, LetterSet, Span};
pub use partition::{enumerate_partitions, is_word_wise, Side, WordWisePartition};
pub use surface::{genus, SurfaceSummary};
pub use vstring::VirtualString;
