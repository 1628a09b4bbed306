//! Channel models and a seeded trial harness.
//!
//! All randomness comes from ChaCha8 seeded with `seed ^ trial`. Channel
//! draws use stream 0 of that generator and codeword sampling uses stream 1,
//! so a trial's channel output depends only on the input word, the channel
//! and `(seed, trial)`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::burst::{self, BurstParams};
use crate::tenengolts::{self, CodeIndex, TenengoltsParams};
use crate::vt_binary::{self, VtParams};
use crate::vt_indel::{self, ShiftedVtParams};
use crate::words::{runs_of, BinaryWord, QaryWord, Word};
use crate::{EditKind, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "kind", rename_all = "kebab-case"))]
pub enum ChannelKind {
    Identity,
    /// Each symbol deleted independently with probability `alpha`.
    Bdc { alpha: f64 },
    SingleDeletion,
    SingleInsertion,
    SingleSubstitution,
    /// `s` consecutive symbols deleted.
    Burst { s: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct ChannelSpec {
    pub kind: ChannelKind,
    pub seed: u64,
}

impl ChannelSpec {
    pub fn new(kind: ChannelKind, seed: u64) -> Result<Self> {
        match kind {
            ChannelKind::Bdc { alpha } if !(0.0..=1.0).contains(&alpha) => {
                Err(Error::InvalidArgument("deletion probability must lie in [0, 1]"))
            }
            ChannelKind::Burst { s: 0 } => Err(Error::InvalidArgument("burst length must be at least 1")),
            _ => Ok(ChannelSpec { kind, seed }),
        }
    }
}

fn trial_rng(seed: u64, trial: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ trial);
    rng.set_stream(stream);
    rng
}

fn below(rng: &mut ChaCha8Rng, bound: usize) -> usize {
    rng.gen_range(0..bound as u64) as usize
}

/// Sends `x` through the channel for trial number `trial`.
///
/// Single-edit and burst channels leave words too short for the edit
/// unchanged.
pub fn transmit<W: Word>(x: &W, spec: &ChannelSpec, trial: u64) -> W {
    let mut rng = trial_rng(spec.seed, trial, 0);
    let symbols = x.symbols();
    let n = symbols.len();
    let q = x.alphabet_size();
    let mut out: Vec<W::Symbol> = symbols.to_vec();
    match spec.kind {
        ChannelKind::Identity => {}
        ChannelKind::Bdc { alpha } => {
            out = symbols.iter().copied().filter(|_| !rng.gen_bool(alpha)).collect();
        }
        ChannelKind::SingleDeletion if n >= 1 => {
            out.remove(below(&mut rng, n));
        }
        ChannelKind::SingleInsertion => {
            let pos = below(&mut rng, n + 1);
            let value = below(&mut rng, q as usize) as u32;
            out.insert(pos, W::symbol_from(value));
        }
        ChannelKind::SingleSubstitution if n >= 1 => {
            let pos = below(&mut rng, n);
            let old = W::symbol_value(out[pos]);
            let shift = 1 + below(&mut rng, q as usize - 1) as u32;
            out[pos] = W::symbol_from((old + shift) % q);
        }
        ChannelKind::Burst { s } if s <= n => {
            let start = below(&mut rng, n - s + 1);
            out.drain(start..start + s);
        }
        _ => {}
    }
    x.rebuild(out)
}

/// Repeats every symbol `r` times.
pub fn repetition_encode<W: Word>(x: &W, r: usize) -> Result<W> {
    if r == 0 {
        return Err(Error::InvalidArgument("repetition factor must be at least 1"));
    }
    Ok(x.rebuild(x.symbols().iter().flat_map(|&s| core::iter::repeat_n(s, r)).collect()))
}

/// Undoes up to `r - 1` deletions: every run is rounded up to a multiple of
/// `r` and shrunk by the factor `r`.
pub fn repetition_decode<W: Word>(y: &W, r: usize) -> Result<W> {
    if r == 0 {
        return Err(Error::InvalidArgument("repetition factor must be at least 1"));
    }
    let mut restored = 0;
    let mut out = Vec::new();
    for run in runs_of(y.symbols()) {
        let groups = run.len.div_ceil(r);
        restored += groups * r - run.len;
        out.extend(core::iter::repeat_n(run.symbol, groups));
    }
    if restored > r - 1 {
        return Err(Error::CorruptInput("more deletions than the repetition factor covers"));
    }
    Ok(y.rebuild(out))
}

/// A code under test.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "code", rename_all = "kebab-case"))]
pub enum Codec {
    Vt(VtParams),
    ShiftedVt(ShiftedVtParams),
    Tenengolts(TenengoltsParams),
    Burst(BurstParams),
    /// Binary messages of length `k`, each bit sent `r` times.
    Repetition { k: usize, r: usize },
}

impl Codec {
    /// Length of the transmitted word.
    pub fn block_len(&self) -> usize {
        match self {
            Codec::Vt(p) => p.n(),
            Codec::ShiftedVt(p) => p.n(),
            Codec::Tenengolts(p) => p.n(),
            Codec::Burst(p) => p.n(),
            Codec::Repetition { k, r } => k * r,
        }
    }
}

/// One failed trial.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Transcript {
    pub trial: u64,
    pub sent: String,
    pub received: String,
    /// Decoder output, or the decoder's error message.
    pub decoded: core::result::Result<String, String>,
}

#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct TrialReport {
    pub codec: Codec,
    pub channel: ChannelSpec,
    pub trials: u64,
    pub successes: u64,
    pub failures: u64,
    /// Successful trials where the decoder saw no edit.
    pub clean: u64,
    pub success_rate: f64,
    /// Failures in trial order.
    pub transcripts: Vec<Transcript>,
}

enum Sampler {
    Vt(VtParams),
    Shifted(ShiftedVtParams),
    Tenengolts(TenengoltsParams, Option<CodeIndex>),
    Burst(BurstParams),
    Repetition(usize, usize),
}

struct Trial {
    sent: String,
    received: String,
    decoded: core::result::Result<(String, bool), String>,
    ok: bool,
}

fn random_bits(rng: &mut ChaCha8Rng, len: usize) -> BinaryWord {
    BinaryWord::new((0..len).map(|_| rng.gen_range(0..2u8)).collect()).expect("bits")
}

fn run_binary<D>(x: BinaryWord, spec: &ChannelSpec, trial: u64, decode: D) -> Trial
where
    D: FnOnce(&BinaryWord) -> Result<(BinaryWord, EditKind)>,
{
    let y = transmit(&x, spec, trial);
    let decoded = decode(&y);
    let ok = matches!(&decoded, Ok((w, _)) if *w == x);
    Trial {
        sent: x.to_string(),
        received: y.to_string(),
        decoded: decoded.map(|(w, k)| (w.to_string(), k == EditKind::None)).map_err(|e| e.to_string()),
        ok,
    }
}

impl Sampler {
    fn new(codec: &Codec) -> Self {
        match codec {
            Codec::Vt(p) => Sampler::Vt(*p),
            Codec::ShiftedVt(p) => Sampler::Shifted(*p),
            Codec::Tenengolts(p) => Sampler::Tenengolts(*p, CodeIndex::new(p).ok()),
            Codec::Burst(p) => Sampler::Burst(p.clone()),
            Codec::Repetition { k, r } => Sampler::Repetition(*k, *r),
        }
    }

    fn run(&self, spec: &ChannelSpec, trial: u64) -> Result<Trial> {
        let mut rng = trial_rng(spec.seed, trial, 1);
        Ok(match self {
            Sampler::Vt(p) => {
                let x = vt_binary::systematic_encode(&random_bits(&mut rng, vt_binary::data_len(p.n())), p)?;
                run_binary(x, spec, trial, |y| {
                    let len = y.bits().len();
                    let out = if len + 1 == p.n() {
                        vt_binary::decode_deletion(y, p)
                    } else if len == p.n() + 1 {
                        vt_binary::decode_insertion(y, p)
                    } else if len == p.n() {
                        vt_binary::decode_z_channel(y, p)
                    } else {
                        Err(Error::CorruptInput("received length differs from n by more than one"))
                    }?;
                    Ok((out.codeword, out.kind))
                })
            }
            Sampler::Shifted(p) => {
                let x = loop {
                    let w = random_bits(&mut rng, p.n());
                    if vt_indel::is_codeword(&w, p)? {
                        break w;
                    }
                };
                run_binary(x, spec, trial, |y| {
                    let out = vt_indel::decode(y, p)?;
                    Ok((out.codeword, out.kind))
                })
            }
            Sampler::Tenengolts(p, index) => {
                let x = match index.as_ref().filter(|i| i.size() > 0) {
                    Some(index) => index.encode(rng.gen_range(0..index.size()))?,
                    None => loop {
                        let symbols = (0..p.n()).map(|_| rng.gen_range(0..p.q())).collect();
                        let w = QaryWord::new(symbols, p.q())?;
                        if tenengolts::is_codeword(&w, p)? {
                            break w;
                        }
                    },
                };
                let y = transmit(&x, spec, trial);
                let decoded = if y.len() + 1 == p.n() {
                    tenengolts::decode_deletion(&y, p).map(|o| (o.codeword, o.kind))
                } else if y.len() == p.n() + 1 {
                    tenengolts::decode_insertion(&y, p).map(|o| (o.codeword, o.kind))
                } else if y.len() == p.n() && tenengolts::is_codeword(&y, p)? {
                    Ok((y.clone(), EditKind::None))
                } else {
                    Err(Error::CorruptInput("not a single deletion or insertion"))
                };
                let ok = matches!(&decoded, Ok((w, _)) if *w == x);
                Trial {
                    sent: x.to_string(),
                    received: y.to_string(),
                    decoded: decoded.map(|(w, k)| (w.to_string(), k == EditKind::None)).map_err(|e| e.to_string()),
                    ok,
                }
            }
            Sampler::Burst(p) => {
                let data: Vec<BinaryWord> =
                    (0..p.s()).map(|_| random_bits(&mut rng, burst::row_data_len(p))).collect();
                let x = burst::encode_systematic(&data, p)?;
                run_binary(x, spec, trial, |y| {
                    if y.bits().len() == p.n() {
                        let rows = burst::deinterleave(y, p.s())?;
                        for (row, rp) in rows.iter().zip(p.row_params()) {
                            if !vt_binary::is_codeword(row, rp)? {
                                return Err(Error::CorruptInput("not a single s-burst"));
                            }
                        }
                        Ok((y.clone(), EditKind::None))
                    } else {
                        Ok((burst::decode_burst(y, p)?, EditKind::Deletion))
                    }
                })
            }
            Sampler::Repetition(k, r) => {
                let message = random_bits(&mut rng, *k);
                let x = repetition_encode(&message, *r)?;
                let y = transmit(&x, spec, trial);
                let decoded = repetition_decode(&y, *r);
                let ok = matches!(&decoded, Ok(m) if *m == message);
                Trial {
                    sent: x.to_string(),
                    received: y.to_string(),
                    decoded: decoded.map(|m| (m.to_string(), y == x)).map_err(|e| e.to_string()),
                    ok,
                }
            }
        })
    }
}

/// Runs `trials` independent trials: sample a codeword, transmit, decode,
/// compare. Decoder errors count as failures.
pub fn run_experiment(codec: &Codec, spec: &ChannelSpec, trials: u64) -> Result<TrialReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("need at least one trial"));
    }
    let n = codec.block_len();
    match spec.kind {
        ChannelKind::Burst { s } if s > n => {
            return Err(Error::InvalidArgument("burst longer than the block"));
        }
        ChannelKind::SingleDeletion | ChannelKind::SingleSubstitution if n == 0 => {
            return Err(Error::InvalidArgument("empty blocks cannot suffer this edit"));
        }
        _ => {}
    }
    if let Codec::Tenengolts(p) = codec {
        if !matches!(spec.kind, ChannelKind::Identity | ChannelKind::Bdc { .. } | ChannelKind::Burst { .. })
            && p.q() < 2
        {
            return Err(Error::InvalidArgument("alphabet too small for the channel"));
        }
    }
    let sampler = Sampler::new(codec);
    let mut report = TrialReport {
        codec: codec.clone(),
        channel: *spec,
        trials,
        successes: 0,
        failures: 0,
        clean: 0,
        success_rate: 0.0,
        transcripts: Vec::new(),
    };
    for trial in 0..trials {
        let t = sampler.run(spec, trial)?;
        if t.ok {
            report.successes += 1;
            if matches!(t.decoded, Ok((_, true))) {
                report.clean += 1;
            }
        } else {
            report.failures += 1;
            report.transcripts.push(Transcript {
                trial,
                sent: t.sent,
                received: t.received,
                decoded: t.decoded.map(|(w, _)| w),
            });
        }
    }
    report.success_rate = report.successes as f64 / trials as f64;
    Ok(report)
}
