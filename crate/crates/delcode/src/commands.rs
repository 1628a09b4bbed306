use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use delcode_core::analysis::{self, BetaReading, Counterexample};
use delcode_core::burst::{self, BurstParams};
use delcode_core::channels::{self, ChannelSpec, Codec};
use delcode_core::graph::MisBudget;
use delcode_core::tenengolts::{self, CodeIndex, TenengoltsParams};
use delcode_core::vt_binary::{self, VtParams};
use delcode_core::vt_indel::{self, ShiftedVtParams};
use delcode_core::words::Limits;
use delcode_core::{BinaryWord, DecodeOutcome, EditKind, Error, Interval, QaryWord, Word};

use crate::cli::{AnalyzeArgs, Cli, CodeArgs, Command, DecodeArgs, EncodeArgs, SimulateArgs, Task, DEFAULT_BUDGET_SECONDS};
use crate::error::{CliError, Exit, Result};
use crate::io;
use crate::report::{Rendered, Report, Status};

/// Runs one parsed invocation.
pub fn run(cli: &Cli) -> Result<Rendered> {
    let started = Instant::now();
    let mut out = match &cli.command {
        Command::Encode(args) => encode(args)?,
        Command::Decode(args) => decode(args)?,
        Command::Analyze(args) => analyze(args, cli.budget_seconds)?,
        Command::Simulate(args) => simulate(args, cli.seed)?,
        Command::Enumerate(args) => enumerate(args)?,
    };
    if cli.verbose > 0 {
        out.diagnostics.push(format!("{}: {:.3}s", out.report.command, started.elapsed().as_secs_f64()));
    }
    Ok(out)
}

fn params_of<T: Serialize>(args: &T) -> Result<Value> {
    Ok(serde_json::to_value(args)?)
}

/// Inline value or file lines.
fn inputs(inline: &Option<String>, file: &Option<std::path::PathBuf>, flag: &str) -> Result<Vec<String>> {
    match (inline, file) {
        (Some(word), None) => Ok(vec![word.trim().to_string()]),
        (None, Some(path)) => io::read_lines(path),
        _ => Err(CliError::usage(format!("give --{flag} or --file"))),
    }
}

fn index_bits(size: u128) -> usize {
    if size == 0 {
        0
    } else {
        127 - size.leading_zeros() as usize
    }
}

fn bits_to_index(data: &BinaryWord) -> u128 {
    data.bits().iter().fold(0u128, |acc, &b| acc << 1 | b as u128)
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

/// A decoded line, independent of alphabet.
struct Decoded {
    word: String,
    kind: EditKind,
    value: Option<u32>,
    positions: Option<Interval>,
}

impl<W: Word + std::fmt::Display> From<DecodeOutcome<W>> for Decoded {
    fn from(o: DecodeOutcome<W>) -> Self {
        Decoded { word: o.codeword.to_string(), kind: o.kind, value: o.value, positions: o.positions }
    }
}

fn clean(word: String) -> Decoded {
    Decoded { word, kind: EditKind::None, value: None, positions: None }
}

/// One codec with whatever tables it needs, built once per invocation.
enum Coder {
    Vt(VtParams),
    Shifted(ShiftedVtParams, Option<Vec<BinaryWord>>),
    Tenengolts(TenengoltsParams, Option<CodeIndex>),
    Burst(BurstParams),
    Repetition { r: usize, q: u32 },
}

impl Coder {
    fn new(args: &CodeArgs) -> Result<Self> {
        Ok(match args.codec()? {
            Codec::Vt(p) => Coder::Vt(p),
            Codec::ShiftedVt(p) => Coder::Shifted(p, None),
            Codec::Tenengolts(p) => Coder::Tenengolts(p, None),
            Codec::Burst(p) => Coder::Burst(p),
            Codec::Repetition { r, .. } => Coder::Repetition { r, q: args.alphabet() },
        })
    }

    fn binary(text: &str) -> Result<BinaryWord> {
        Ok(text.parse()?)
    }

    fn encode(&mut self, line: &str) -> Result<String> {
        match self {
            Coder::Vt(p) => Ok(vt_binary::systematic_encode(&Self::binary(line)?, p)?.to_string()),
            Coder::Shifted(p, table) => {
                let code = match table {
                    Some(code) => code,
                    None => table.insert(vt_indel::enumerate(p)?),
                };
                let data = Self::binary(line)?;
                let need = index_bits(code.len() as u128);
                if data.len() != need {
                    return Err(Error::LengthMismatch { expected: need, found: data.len() }.into());
                }
                Ok(code[bits_to_index(&data) as usize].to_string())
            }
            Coder::Tenengolts(p, index) => {
                let index = match index {
                    Some(index) => index,
                    None => index.insert(CodeIndex::new(p)?),
                };
                let data = Self::binary(line)?;
                let need = index_bits(index.size());
                if data.len() != need {
                    return Err(Error::LengthMismatch { expected: need, found: data.len() }.into());
                }
                Ok(index.encode(bits_to_index(&data))?.to_string())
            }
            Coder::Burst(p) => {
                let blocks = line.split(',').map(Self::binary).collect::<Result<Vec<_>>>()?;
                Ok(burst::encode_systematic(&blocks, p)?.to_string())
            }
            Coder::Repetition { r, q } => {
                if *q == 2 {
                    Ok(channels::repetition_encode(&Self::binary(line)?, *r)?.to_string())
                } else {
                    Ok(channels::repetition_encode(&QaryWord::parse(line, *q)?, *r)?.to_string())
                }
            }
        }
    }

    fn encode_rows(&self, line: &str) -> Result<String> {
        let Coder::Burst(p) = self else {
            return Err(CliError::usage("--rows only applies to --code burst"));
        };
        let rows = line.split(',').map(Self::binary).collect::<Result<Vec<_>>>()?;
        Ok(burst::encode(&rows, p)?.to_string())
    }

    fn decode(&self, line: &str) -> Result<Decoded> {
        match self {
            Coder::Vt(p) => {
                let y = Self::binary(line)?;
                let n = p.n();
                let out = match y.len() {
                    len if len + 1 == n => vt_binary::decode_deletion(&y, p)?,
                    len if len == n + 1 => vt_binary::decode_insertion(&y, p)?,
                    len if len == n => vt_binary::decode_z_channel(&y, p)?,
                    len => return Err(Error::LengthMismatch { expected: n - 1, found: len }.into()),
                };
                Ok(out.into())
            }
            Coder::Shifted(p, _) => Ok(vt_indel::decode(&Self::binary(line)?, p)?.into()),
            Coder::Tenengolts(p, _) => {
                let y = QaryWord::parse(line, p.q())?;
                let n = p.n();
                match y.len() {
                    len if len + 1 == n => Ok(tenengolts::decode_deletion(&y, p)?.into()),
                    len if len == n + 1 => Ok(tenengolts::decode_insertion(&y, p)?.into()),
                    len if len == n && tenengolts::is_codeword(&y, p)? => Ok(clean(y.to_string())),
                    len if len == n => Err(Error::CorruptInput("not a codeword and no length change").into()),
                    len => Err(Error::LengthMismatch { expected: n - 1, found: len }.into()),
                }
            }
            Coder::Burst(p) => {
                let y = Self::binary(line)?;
                if y.len() == p.n() {
                    let rows = burst::deinterleave(&y, p.s())?;
                    for (row, rp) in rows.iter().zip(p.row_params()) {
                        if !vt_binary::is_codeword(row, rp)? {
                            return Err(Error::CorruptInput("full-length word is not a codeword").into());
                        }
                    }
                    return Ok(clean(y.to_string()));
                }
                let x = burst::decode_burst(&y, p)?;
                Ok(Decoded { word: x.to_string(), kind: EditKind::Deletion, value: None, positions: None })
            }
            Coder::Repetition { r, q } => {
                let (word, received, restored) = if *q == 2 {
                    let y = Self::binary(line)?;
                    let x = channels::repetition_decode(&y, *r)?;
                    (x.to_string(), y.len(), x.len())
                } else {
                    let y = QaryWord::parse(line, *q)?;
                    let x = channels::repetition_decode(&y, *r)?;
                    (x.to_string(), y.len(), x.len())
                };
                let kind = if received == restored * r { EditKind::None } else { EditKind::Deletion };
                Ok(Decoded { word, kind, value: None, positions: None })
            }
        }
    }
}

/// Applies `f` to every line, recording per-line failures.
fn per_line<F>(report: Report, lines: &[String], mut f: F) -> Rendered
where
    F: FnMut(&str) -> Result<(String, Value)>,
{
    let mut out = Rendered::new(report);
    let mut worst = Exit::Ok;
    for (i, line) in lines.iter().enumerate() {
        match f(line) {
            Ok((plain, mut entry)) => {
                entry["line"] = json!(i + 1);
                entry["input"] = json!(line);
                out.report.results.push(entry);
                out.plain.push(plain);
            }
            Err(e) => {
                worst = worst.worst(match e.exit() {
                    Exit::ResourceLimit => Exit::ResourceLimit,
                    _ => Exit::Decode,
                });
                out.diagnostics.push(format!("line {}: {line}: {e}", i + 1));
                out.report.results.push(json!({"line": i + 1, "input": line, "error": e.to_string()}));
            }
        }
    }
    if worst != Exit::Ok {
        out.report.status = Status::Failed;
        out.exit = Some(worst);
    }
    out
}

fn encode(args: &EncodeArgs) -> Result<Rendered> {
    let mut coder = Coder::new(&args.code)?;
    let report = Report::new("encode", params_of(args)?);
    if let Some(rows) = &args.rows {
        let lines = vec![rows.trim().to_string()];
        return Ok(per_line(report, &lines, |l| coder.encode_rows(l).map(|w| (w.clone(), json!({"codeword": w})))));
    }
    let lines = inputs(&args.data, &args.file, "data")?;
    Ok(per_line(report, &lines, |l| coder.encode(l).map(|w| (w.clone(), json!({"codeword": w})))))
}

fn decode(args: &DecodeArgs) -> Result<Rendered> {
    let coder = Coder::new(&args.code)?;
    let lines = inputs(&args.received, &args.file, "received")?;
    let report = Report::new("decode", params_of(args)?);
    Ok(per_line(report, &lines, |l| {
        let d = coder.decode(l)?;
        let entry = json!({
            "codeword": d.word,
            "kind": d.kind,
            "value": d.value,
            "positions": d.positions.map(|p| [p.lo, p.hi]),
        });
        Ok((d.word, entry))
    }))
}

fn enumerate(args: &CodeArgs) -> Result<Rendered> {
    let limits = Limits::default();
    let words: Vec<String> = match args.codec()? {
        Codec::Vt(p) => vt_binary::enumerate_within(&p, &limits)?.iter().map(ToString::to_string).collect(),
        Codec::ShiftedVt(p) => vt_indel::enumerate_within(&p, &limits)?.iter().map(ToString::to_string).collect(),
        Codec::Tenengolts(p) => tenengolts::enumerate_within(&p, &limits)?.iter().map(ToString::to_string).collect(),
        Codec::Burst(p) => {
            limits.check_len(p.n())?;
            let rows = p
                .row_params()
                .iter()
                .map(vt_binary::enumerate)
                .collect::<delcode_core::Result<Vec<_>>>()?;
            let mut out = Vec::new();
            let mut pick = vec![0usize; p.s()];
            if rows.iter().all(|r| !r.is_empty()) {
                'outer: loop {
                    let chosen: Vec<BinaryWord> = pick.iter().zip(&rows).map(|(&i, r)| r[i].clone()).collect();
                    out.push(burst::interleave(&chosen)?.to_string());
                    for (slot, row) in pick.iter_mut().zip(&rows).rev() {
                        *slot += 1;
                        if *slot < row.len() {
                            continue 'outer;
                        }
                        *slot = 0;
                    }
                    break;
                }
            }
            out.sort();
            out
        }
        Codec::Repetition { k, r } => {
            if k == 0 {
                return Err(CliError::usage("--code repetition needs --k or --n to enumerate"));
            }
            let q = args.alphabet();
            limits.check_space(k, q)?;
            QaryWord::all(k, q, &limits)?
                .map(|m| channels::repetition_encode(&m, r).map(|c| c.to_string()))
                .collect::<delcode_core::Result<Vec<String>>>()?
        }
    };
    let mut out = Rendered::new(Report::new("enumerate", params_of(args)?));
    out.report.results = words.iter().map(|w| json!(w)).collect();
    out.plain = words;
    Ok(out)
}

fn simulate(args: &SimulateArgs, seed: u64) -> Result<Rendered> {
    let codec = args.code.codec()?;
    if let Codec::Repetition { k: 0, .. } = codec {
        return Err(CliError::usage("--code repetition needs --k or --n to simulate"));
    }
    if args.code.alphabet() != 2 && matches!(codec, Codec::Repetition { .. }) {
        return Err(CliError::usage("simulation of repetition codes is binary only"));
    }
    let spec = ChannelSpec::new(args.channel_kind(&codec)?, seed)?;
    let report = channels::run_experiment(&codec, &spec, args.trials)?;
    if let Some(path) = &args.transcripts {
        let lines = report
            .transcripts
            .iter()
            .map(serde_json::to_string)
            .collect::<serde_json::Result<Vec<_>>>()?;
        io::write_lines(path, &lines)?;
    }
    let mut params = params_of(args)?;
    params["seed"] = json!(seed);
    let mut out = Rendered::new(Report::new("simulate", params));
    out.report.results.push(json!({
        "codec": report.codec,
        "channel": report.channel,
        "trials": report.trials,
        "successes": report.successes,
        "failures": report.failures,
        "clean": report.clean,
        "success_rate": report.success_rate,
    }));
    out.plain.push(format!(
        "trials={} successes={} failures={} clean={} success_rate={}",
        report.trials, report.successes, report.failures, report.clean, report.success_rate
    ));
    Ok(out)
}

fn need_n(args: &AnalyzeArgs) -> Result<usize> {
    args.n.ok_or_else(|| CliError::usage("this analysis needs --n"))
}

fn residues(args: &AnalyzeArgs, n: usize) -> Vec<u64> {
    match args.a {
        Some(a) => vec![a],
        None => (0..=n as u64).collect(),
    }
}

fn counterexample_line(label: &str, c: &Option<Counterexample>) -> String {
    match c {
        Some(c) => format!(
            "{label}: {} {} share {} in class ({}, {})",
            c.x,
            c.y,
            join(&c.shared),
            c.class.0,
            c.class.1
        ),
        None => format!("{label}: none"),
    }
}

fn analyze(args: &AnalyzeArgs, budget_seconds: Option<u64>) -> Result<Rendered> {
    let mut params = params_of(args)?;
    let mut out = Rendered::new(Report::new("analyze", Value::Null));
    match args.task {
        Task::Sizes => {
            let d = analysis::size_distribution(need_n(args)?)?;
            out.plain.push(format!(
                "n={} total={} max={} min={} sizes={}",
                d.n,
                d.total,
                d.max_size(),
                d.min_size(),
                join(&d.sizes)
            ));
            out.report.results.push(serde_json::to_value(&d)?);
        }
        Task::Perfect => {
            let n = need_n(args)?;
            for a in residues(args, n) {
                let cert = analysis::verify_perfect(n, a)?;
                let mut line = format!("n={n} a={a} {}", if cert.is_perfect() { "perfect" } else { "not-perfect" });
                line += &format!(" codewords={}", join(&cert.codewords));
                if let Some((u, v, d)) = &cert.overlap {
                    line += &format!(" overlap={u},{v}@{d}");
                }
                if let Some(w) = &cert.uncovered {
                    line += &format!(" uncovered={w}");
                }
                out.plain.push(line);
                let mut entry = serde_json::to_value(&cert)?;
                entry["perfect"] = json!(cert.is_perfect());
                out.report.results.push(entry);
            }
        }
        Task::Optimal => {
            let n = need_n(args)?;
            let seconds = budget_seconds.unwrap_or(DEFAULT_BUDGET_SECONDS);
            params["budget_seconds"] = json!(seconds);
            let deadline = Instant::now() + Duration::from_secs(seconds);
            let r = analysis::optimal_code_size(n, args.e, MisBudget::default(), &mut || Instant::now() >= deadline)?;
            let status = if r.exact { "exact" } else { "timeout" };
            out.plain.push(format!("n={} e={} size={} status={status}", r.n, r.e, r.size));
            let mut entry = serde_json::to_value(&r)?;
            entry["status"] = json!(status);
            out.report.results.push(entry);
            if !r.exact {
                out.report.status = Status::Timeout;
            }
        }
        Task::IndelLemma => {
            let n = need_n(args)?;
            let pairs = match (args.deletions, args.insertions) {
                (Some(d), Some(i)) => vec![(d, i)],
                _ => vec![(0, 1), (1, 0)],
            };
            for a in residues(args, n) {
                let code = vt_binary::enumerate(&VtParams::new(n, a)?)?;
                for &(d, i) in &pairs {
                    let collision = analysis::verify_indel_lemma(&code, d, i)?;
                    out.plain.push(match &collision {
                        None => format!("n={n} a={a} deletions={d} insertions={i} holds"),
                        Some(c) => format!(
                            "n={n} a={a} deletions={d} insertions={i} violated by {} {} via {}",
                            c.first, c.second, c.shared
                        ),
                    });
                    out.report.results.push(json!({
                        "n": n, "a": a, "deletions": d, "insertions": i,
                        "holds": collision.is_none(), "collision": collision,
                    }));
                }
            }
        }
        Task::Buggy => {
            let n = args.n.unwrap_or(2);
            let q = args.q.unwrap_or(3);
            params["n"] = json!(n);
            params["q"] = json!(q);
            let report = analysis::falsify_buggy_nonbinary(n, q)?;
            for (reading, c) in &report.readings {
                let label = match reading {
                    BetaReading::FromOne => "buggy from-one",
                    BetaReading::FromTwo => "buggy from-two",
                };
                out.plain.push(counterexample_line(label, c));
                out.report.results.push(json!({"code": "buggy", "reading": reading, "counterexample": c}));
            }
            let t = analysis::tenengolts_counterexample(n, q)?;
            out.plain.push(counterexample_line("tenengolts", &t));
            out.report.results.push(json!({"code": "tenengolts", "counterexample": t}));
        }
        Task::Bounds => {
            let alpha = args.alpha.ok_or_else(|| CliError::usage("bounds needs --alpha"))?;
            let b = analysis::capacity_bounds(alpha)?;
            let golden = b.golden_ratio_upper.map_or("n/a".to_string(), |g| g.to_string());
            out.plain.push(format!(
                "alpha={} erasure_upper={} golden_ratio_upper={golden} lower={} best_upper={}",
                b.alpha,
                b.erasure_upper,
                b.lower,
                b.best_upper()
            ));
            let mut entry = serde_json::to_value(b)?;
            entry["best_upper"] = json!(b.best_upper());
            out.report.results.push(entry);
        }
        Task::Linearity => {
            let n = need_n(args)?;
            let linear = analysis::linearity_check(n)?;
            out.plain.push(format!("n={n} linear={linear}"));
            out.report.results.push(json!({"n": n, "linear": linear}));
        }
    }
    out.report.params = params;
    Ok(out)
}
