//! Command-line front end. The binary only forwards to [`run`].

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::checker::{self, CheckOptions, Realizability, StringCheck, Verdict, SCHEMA};
use crate::cyclic::DEFAULT_MAX_CYCLIC;
use crate::error::{Error, Result};
use crate::gauss::GaussParagraph;
use crate::generate::random_string;
use crate::partition::{enumerate_partitions, WordWisePartition};
use crate::surface;
use crate::vstring::VirtualString;

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_INDETERMINATE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "gpcheck",
    version,
    about = "Realizability of Gauss paragraphs on the sphere"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide realizability, or check one partition with --partition.
    Check {
        file: PathBuf,
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_CYCLIC as u64, value_parser = clap::value_parser!(u64).range(1..))]
        max_cyclic: u64,
        /// Check compatibility with cyclic sequences on basis cycles only.
        #[arg(long)]
        fast_path: bool,
    },
    /// Genus of a virtual string (JSON file) or of the string built from a
    /// paragraph and partition.
    Genus {
        file: PathBuf,
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Cross-validate the checker against the genus oracle on random strings.
    Fuzz {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 8)]
        arrows: usize,
        #[arg(long, default_value_t = 4)]
        circles: usize,
        /// Rerun a single case from the seed printed for it.
        #[arg(long)]
        replay: Option<u64>,
    },
    /// Print every word-wise partition, one JSON document per line.
    Partitions { file: PathBuf },
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_YES };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Check {
            file,
            partition,
            json,
            max_cyclic,
            fast_path,
        } => {
            let opts = CheckOptions {
                max_cyclic: max_cyclic as usize,
                fast_path,
            };
            cmd_check(&file, partition.as_deref(), json, &opts, out)
        }
        Command::Genus {
            file,
            partition,
            json,
        } => cmd_genus(&file, partition.as_deref(), json, out),
        Command::Fuzz {
            seed,
            count,
            arrows,
            circles,
            replay,
        } => cmd_fuzz(seed, count, arrows, circles, replay, out),
        Command::Partitions { file } => cmd_partitions(&file, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_paragraph(path: &Path) -> Result<GaussParagraph> {
    GaussParagraph::parse(&read(path)?)
}

fn io(r: std::io::Result<()>) -> Result<()> {
    r.map_err(|e| Error::Io(format!("write failed: {e}")))
}

pub fn cmd_check(
    file: &Path,
    partition: Option<&Path>,
    json_out: bool,
    opts: &CheckOptions,
    out: &mut dyn Write,
) -> Result<i32> {
    let p = load_paragraph(file)?;
    if let Some(pf) = partition {
        let part = WordWisePartition::from_json(&p, &read(pf)?)?;
        let a = checker::cross_validate(&p, &part, opts)?;
        if json_out {
            io(writeln!(out, "{}", checker::pair_json(&p, &part, &a)))?;
        } else {
            io(write!(out, "{}", a.report))?;
            if let Some(g) = a.constructed {
                io(writeln!(out, "oracle: {g}"))?;
            }
            io(writeln!(
                out,
                "verdict: {}",
                verdict_word(a.report.verdict())
            ))?;
        }
        return Ok(match a.report.verdict() {
            Verdict::Pass => EXIT_YES,
            Verdict::Fail => EXIT_NO,
            Verdict::Indeterminate => EXIT_INDETERMINATE,
        });
    }
    let r = checker::realizable(&p, opts);
    if json_out {
        io(writeln!(out, "{}", checker::realizability_json(&p, &r)))?;
    } else {
        match &r {
            Realizability::Realizable(c) => {
                io(writeln!(out, "partition: {}", c.partition.to_json(&p)))?;
                io(write!(out, "{}", c.report))?;
                io(writeln!(out, "oracle: {}", c.oracle))?;
            }
            Realizability::NotRealizable { reason, first } => {
                io(writeln!(out, "reason: {reason:?}"))?;
                if let Some((part, report)) = first {
                    io(writeln!(out, "first partition: {}", part.to_json(&p)))?;
                    io(write!(out, "{report}"))?;
                }
            }
            Realizability::Indeterminate { partition, report } => {
                io(writeln!(out, "partition: {}", partition.to_json(&p)))?;
                io(write!(out, "{report}"))?;
            }
        }
        io(writeln!(out, "verdict: {}", r.verdict_name()))?;
    }
    Ok(match r {
        Realizability::Realizable(_) => EXIT_YES,
        Realizability::NotRealizable { .. } => EXIT_NO,
        Realizability::Indeterminate { .. } => EXIT_INDETERMINATE,
    })
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "realizable",
        Verdict::Fail => "not_realizable",
        Verdict::Indeterminate => "indeterminate",
    }
}

pub fn cmd_genus(
    file: &Path,
    partition: Option<&Path>,
    json_out: bool,
    out: &mut dyn Write,
) -> Result<i32> {
    let text = read(file)?;
    let s = if text.trim_start().starts_with('{') {
        VirtualString::from_json(&text)?
    } else {
        let p = GaussParagraph::parse(&text)?;
        let pf =
            partition.ok_or_else(|| Error::Partition("a paragraph needs --partition".into()))?;
        let part = WordWisePartition::from_json(&p, &read(pf)?)?;
        VirtualString::construct_from_pair(&p, &part)?
    };
    let g = surface::genus(&s);
    if json_out {
        let boundary = surface::certificate(&s);
        let doc = json!({
            "schema": SCHEMA,
            "string": serde_json::from_str::<serde_json::Value>(&s.to_json())?,
            "oracle": checker::oracle_json(&g, g.is_planar().then_some(&boundary)),
        });
        io(writeln!(out, "{doc}"))?;
    } else {
        io(writeln!(out, "b = {}", g.boundary_components))?;
        io(writeln!(out, "chi = {}", g.euler_characteristic))?;
        io(writeln!(out, "g = {}", g.genus))?;
        io(writeln!(
            out,
            "planar: {}",
            if g.is_planar() { "yes" } else { "no" }
        ))?;
    }
    Ok(if g.is_planar() { EXIT_YES } else { EXIT_NO })
}

/// Outcome of one fuzz case.
pub struct FuzzCase {
    pub string: VirtualString,
    pub check: StringCheck,
}

pub fn fuzz_case(case_seed: u64, arrows: usize, circles: usize) -> Result<FuzzCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(case_seed);
    let string = random_string(&mut rng, arrows.max(1), circles.max(1));
    let check = checker::validate_string(&string, &CheckOptions::default())?;
    Ok(FuzzCase { string, check })
}

pub fn cmd_fuzz(
    seed: u64,
    count: u64,
    arrows: usize,
    circles: usize,
    replay: Option<u64>,
    out: &mut dyn Write,
) -> Result<i32> {
    if let Some(case_seed) = replay {
        let c = fuzz_case(case_seed, arrows, circles)?;
        io(writeln!(out, "string: {}", c.string.to_json()))?;
        io(writeln!(out, "{}", describe(&c.check)))?;
        return Ok(if c.check.agree() == Some(false) {
            EXIT_NO
        } else {
            EXIT_YES
        });
    }
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let (mut agree, mut disagree, mut undecided) = (0u64, 0u64, 0u64);
    for k in 0..count {
        let case_seed: u64 = master.random();
        let c = fuzz_case(case_seed, arrows, circles)?;
        match c.check.agree() {
            Some(true) => agree += 1,
            Some(false) => {
                disagree += 1;
                io(writeln!(
                    out,
                    "case {k}: DISAGREEMENT, replay with --replay {case_seed}: {}",
                    c.string.to_json()
                ))?;
            }
            None => {
                undecided += 1;
                io(writeln!(
                    out,
                    "case {k}: indeterminate, replay with --replay {case_seed}"
                ))?;
            }
        }
    }
    io(writeln!(
        out,
        "{agree}/{count} agree, {disagree} disagree, {undecided} indeterminate (seed {seed})"
    ))?;
    Ok(if disagree > 0 { EXIT_NO } else { EXIT_YES })
}

fn describe(c: &StringCheck) -> String {
    match c {
        StringCheck::NotWordWise { oracle, agree } => {
            format!("induced partition not word-wise; oracle {oracle}; agree {agree}")
        }
        StringCheck::Checked(a) => {
            let mut s = format!("{}", a.report);
            if let Some(g) = a.given {
                s += &format!("given string: {g}\n");
            }
            if let Some(g) = a.constructed {
                s += &format!("constructed string: {g}\n");
            }
            s + &format!("agree: {:?}", a.agree)
        }
    }
}

pub fn cmd_partitions(file: &Path, out: &mut dyn Write) -> Result<i32> {
    let p = load_paragraph(file)?;
    for part in enumerate_partitions(&p) {
        io(writeln!(out, "{}", part.to_json(&p)))?;
    }
    Ok(EXIT_YES)
}
