//! Argument definitions and their validation into core parameter types.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use delcode_core::burst::BurstParams;
use delcode_core::channels::{ChannelKind, Codec};
use delcode_core::tenengolts::TenengoltsParams;
use delcode_core::vt_binary::VtParams;
use delcode_core::vt_indel::ShiftedVtParams;

use crate::error::{CliError, Result};

/// Seed used when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 42;

/// Time budget for `analyze optimal` when `--budget-seconds` is absent.
pub const DEFAULT_BUDGET_SECONDS: u64 = 600;

#[derive(Debug, Parser)]
#[command(name = "delcode", version, about = "Encode, decode and analyze single-edit correcting codes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    pub format: Format,

    /// Seed for every random draw.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Wall-clock budget for searches.
    #[arg(long, global = true)]
    pub budget_seconds: Option<u64>,

    /// Timing and progress on stderr.
    #[arg(short, long, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Plain,
    Structured,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Data words to codewords.
    Encode(EncodeArgs),
    /// Received words to corrected codewords.
    Decode(DecodeArgs),
    /// Exhaustive checks and bounds.
    Analyze(AnalyzeArgs),
    /// Seeded channel trials.
    Simulate(SimulateArgs),
    /// List every codeword.
    Enumerate(CodeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Vt,
    ShiftedVt,
    Tenengolts,
    Burst,
    Repetition,
}

/// Code family and its parameters.
#[derive(Debug, Clone, Args, Serialize)]
pub struct CodeArgs {
    #[arg(long, value_enum)]
    pub code: Family,
    /// Block length.
    #[arg(long)]
    pub n: Option<usize>,
    /// Checksum residue; a comma-separated list of row residues for burst.
    #[arg(long)]
    pub a: Option<String>,
    /// Symbol-sum residue (tenengolts).
    #[arg(long)]
    pub b: Option<u32>,
    /// Alphabet size (tenengolts, optionally repetition).
    #[arg(long)]
    pub q: Option<u32>,
    /// Interleave depth (burst).
    #[arg(long)]
    pub s: Option<usize>,
    /// Row length (burst) or message length (repetition).
    #[arg(long)]
    pub k: Option<usize>,
    /// Copies per symbol (repetition).
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct EncodeArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub code: CodeArgs,
    /// One data word; comma-separated blocks for burst.
    #[arg(long, conflicts_with_all = ["rows", "file"])]
    pub data: Option<String>,
    /// Comma-separated row codewords (burst).
    #[arg(long, conflicts_with = "file")]
    pub rows: Option<String>,
    /// Data words, one per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct DecodeArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub code: CodeArgs,
    #[arg(long, conflicts_with = "file")]
    pub received: Option<String>,
    /// Received words, one per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    /// `|VT_a(n)|` for every `a`.
    Sizes,
    /// Whether the deletion balls of `VT_a(n)` tile `{0,1}^(n-1)`.
    Perfect,
    /// Largest single-deletion code by exact search.
    Optimal,
    /// No two codewords share a word after the given deletions and insertions.
    IndelLemma,
    /// Counterexamples to the nonzero-indicator q-ary construction.
    Buggy,
    /// Capacity bounds of the binary deletion channel.
    Bounds,
    /// Whether `VT_0(n)` is closed under XOR.
    Linearity,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct AnalyzeArgs {
    #[arg(value_enum)]
    pub task: Task,
    #[arg(long)]
    pub n: Option<usize>,
    /// Residue; all residues when absent.
    #[arg(long)]
    pub a: Option<u64>,
    #[arg(long)]
    pub q: Option<u32>,
    /// Deletions to correct (optimal).
    #[arg(long, default_value_t = 1)]
    pub e: usize,
    /// Deletion probability (bounds).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Deletions for indel-lemma; with --insertions, replaces the default (0,1) and (1,0) pair.
    #[arg(long, requires = "insertions")]
    pub deletions: Option<usize>,
    #[arg(long, requires = "deletions")]
    pub insertions: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChannelName {
    Identity,
    Bdc,
    SingleDeletion,
    SingleInsertion,
    SingleSubstitution,
    Burst,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct SimulateArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub code: CodeArgs,
    #[arg(long, value_enum)]
    pub channel: ChannelName,
    /// Deletion probability (bdc).
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Burst length; defaults to the interleave depth of a burst code.
    #[arg(long)]
    pub burst_len: Option<usize>,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    /// Write failure transcripts here, one JSON object per line.
    #[arg(long)]
    pub transcripts: Option<PathBuf>,
}

fn forbid<T>(value: &Option<T>, flag: &str, family: &str) -> Result<()> {
    match value {
        Some(_) => Err(CliError::usage(format!("--{flag} does not apply to --code {family}"))),
        None => Ok(()),
    }
}

fn need<T: Copy>(value: Option<T>, flag: &str, family: &str) -> Result<T> {
    value.ok_or_else(|| CliError::usage(format!("--code {family} needs --{flag}")))
}

fn single_residue(a: &Option<String>) -> Result<u64> {
    match a {
        None => Ok(0),
        Some(text) => text.trim().parse().map_err(|_| CliError::usage(format!("--a expects an integer, got {text:?}"))),
    }
}

fn residue_list(a: &Option<String>, s: usize) -> Result<Vec<u64>> {
    let Some(text) = a else {
        return Ok(vec![0; s]);
    };
    let list = text
        .split(',')
        .map(|t| t.trim().parse::<u64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| CliError::usage(format!("--a expects comma-separated integers, got {text:?}")))?;
    match list.len() {
        1 => Ok(vec![list[0]; s]),
        len if len == s => Ok(list),
        len => Err(CliError::usage(format!("--a lists {len} residues for {s} rows"))),
    }
}

impl CodeArgs {
    /// Validates the flag combination into a codec. Repetition codes get
    /// `k = 0` when `--k` is absent; only simulation and enumeration need it.
    pub fn codec(&self) -> Result<Codec> {
        let name = self.code.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
        let name = name.as_str();
        match self.code {
            Family::Vt | Family::ShiftedVt => {
                for (v, flag) in [(&self.s, "s"), (&self.k, "k"), (&self.r, "r")] {
                    forbid(v, flag, name)?;
                }
                forbid(&self.b, "b", name)?;
                forbid(&self.q, "q", name)?;
                let n = need(self.n, "n", name)?;
                let a = single_residue(&self.a)?;
                Ok(if self.code == Family::Vt {
                    Codec::Vt(VtParams::new(n, a)?)
                } else {
                    Codec::ShiftedVt(ShiftedVtParams::new(n, a)?)
                })
            }
            Family::Tenengolts => {
                for (v, flag) in [(&self.s, "s"), (&self.k, "k"), (&self.r, "r")] {
                    forbid(v, flag, name)?;
                }
                let n = need(self.n, "n", name)?;
                let q = need(self.q, "q", name)?;
                Ok(Codec::Tenengolts(TenengoltsParams::new(n, q, single_residue(&self.a)?, self.b.unwrap_or(0))?))
            }
            Family::Burst => {
                forbid(&self.b, "b", name)?;
                forbid(&self.q, "q", name)?;
                forbid(&self.r, "r", name)?;
                let s = need(self.s, "s", name)?;
                let k = match (self.k, self.n) {
                    (Some(k), None) => k,
                    (Some(k), Some(n)) if n == s * k => k,
                    (None, Some(n)) if s > 0 && n % s == 0 => n / s,
                    (None, None) => return Err(CliError::usage("--code burst needs --k or --n")),
                    _ => return Err(CliError::usage("--n must equal s * k")),
                };
                Ok(Codec::Burst(BurstParams::new(s, k, &residue_list(&self.a, s)?)?))
            }
            Family::Repetition => {
                forbid(&self.a, "a", name)?;
                forbid(&self.b, "b", name)?;
                forbid(&self.s, "s", name)?;
                let r = need(self.r, "r", name)?;
                if r == 0 {
                    return Err(CliError::usage("--r must be at least 1"));
                }
                let k = match (self.k, self.n) {
                    (Some(k), None) => k,
                    (Some(k), Some(n)) if n == k * r => k,
                    (None, Some(n)) if n % r == 0 => n / r,
                    (None, None) => 0,
                    _ => return Err(CliError::usage("--n must equal k * r")),
                };
                Ok(Codec::Repetition { k, r })
            }
        }
    }

    /// Alphabet size of transmitted words.
    pub fn alphabet(&self) -> u32 {
        match self.code {
            Family::Tenengolts | Family::Repetition => self.q.unwrap_or(2),
            _ => 2,
        }
    }
}

impl SimulateArgs {
    pub fn channel_kind(&self, codec: &Codec) -> Result<ChannelKind> {
        if self.channel != ChannelName::Bdc && self.alpha.is_some() {
            return Err(CliError::usage("--alpha only applies to --channel bdc"));
        }
        if self.channel != ChannelName::Burst && self.burst_len.is_some() {
            return Err(CliError::usage("--burst-len only applies to --channel burst"));
        }
        Ok(match self.channel {
            ChannelName::Identity => ChannelKind::Identity,
            ChannelName::Bdc => ChannelKind::Bdc { alpha: need(self.alpha, "alpha", "bdc channel")? },
            ChannelName::SingleDeletion => ChannelKind::SingleDeletion,
            ChannelName::SingleInsertion => ChannelKind::SingleInsertion,
            ChannelName::SingleSubstitution => ChannelKind::SingleSubstitution,
            ChannelName::Burst => {
                let s = match (self.burst_len, codec) {
                    (Some(s), _) => s,
                    (None, Codec::Burst(p)) => p.s(),
                    (None, _) => return Err(CliError::usage("--channel burst needs --burst-len")),
                };
                ChannelKind::Burst { s }
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(line: &str) -> Cli {
        Cli::try_parse_from(std::iter::once("delcode").chain(line.split_whitespace())).unwrap()
    }

    fn codec_of(line: &str) -> Result<Codec> {
        match args(line).command {
            Command::Encode(e) => e.code.codec(),
            Command::Decode(d) => d.code.codec(),
            _ => unreachable!(),
        }
    }

    #[test]
    fn families_resolve() {
        assert!(matches!(codec_of("encode --code vt --n 7 --data 1011").unwrap(), Codec::Vt(p) if p.n() == 7 && p.a() == 0));
        assert!(matches!(codec_of("encode --code repetition --r 2 --data 101").unwrap(), Codec::Repetition { k: 0, r: 2 }));
        match codec_of("encode --code burst --s 2 --k 3 --a 0,1 --rows 101,000").unwrap() {
            Codec::Burst(p) => assert_eq!(p.residues(), [0, 1]),
            other => panic!("{other:?}"),
        }
        match codec_of("decode --code burst --s 3 --n 12 --a 2 --received 1").unwrap() {
            Codec::Burst(p) => assert_eq!((p.k(), p.residues()), (4, vec![2, 2, 2])),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn inconsistent_flags_are_usage_errors() {
        for line in [
            "decode --code vt --n 5 --q 3 --received 1",
            "decode --code tenengolts --n 5 --received 1",
            "decode --code vt --received 1",
            "decode --code burst --s 2 --k 3 --n 7 --received 1",
            "decode --code burst --s 2 --k 3 --a 0,0,0 --received 1",
            "decode --code repetition --r 2 --a 1 --received 1",
            "decode --code shifted-vt --n 4 --b 1 --received 1",
        ] {
            assert!(matches!(codec_of(line), Err(CliError::Usage(_))), "{line}");
        }
        assert!(matches!(codec_of("decode --code vt --n 4 --a 9 --received 1"), Err(CliError::Core(_))));
    }

    #[test]
    fn global_defaults() {
        let cli = args("analyze bounds --alpha 0.5");
        assert_eq!(cli.seed, DEFAULT_SEED);
        assert_eq!(cli.format, Format::Plain);
        assert_eq!(args("--format structured --seed 9 analyze sizes --n 3").seed, 9);
    }
}
