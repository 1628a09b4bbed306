//! Word types, run decomposition and edit balls.
//!
//! Two word types share one generic toolbox through the [`Word`] trait:
//! [`BinaryWord`] (bits stored as `u8`) and [`QaryWord`] (symbols in `[0, q)`).
//!
//! Ball operations materialize deduplicated [`BTreeSet`]s. They refuse words
//! longer than [`Limits::max_len`] (24 by default) with
//! [`Error::ResourceLimit`].

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Enumeration limits shared by ball and enumeration operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Longest word (binary) or `log2` of the word-space size (q-ary) that
    /// enumeration will touch.
    pub max_len: usize,
}

impl Limits {
    pub const DEFAULT_MAX_LEN: usize = 24;

    pub fn new(max_len: usize) -> Self {
        Limits { max_len }
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if n > self.max_len {
            Err(Error::ResourceLimit { requested: n, limit: self.max_len })
        } else {
            Ok(())
        }
    }

    /// Checks that `q^n <= 2^max_len`.
    pub fn check_space(&self, n: usize, q: u32) -> Result<()> {
        let bits = space_bits(n, q);
        if bits > self.max_len {
            Err(Error::ResourceLimit { requested: bits, limit: self.max_len })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_len: Self::DEFAULT_MAX_LEN }
    }
}

/// Smallest `b` with `q^n <= 2^b`.
fn space_bits(n: usize, q: u32) -> usize {
    let per_symbol = libm::log2(q as f64);
    libm::ceil(per_symbol * n as f64 - 1e-9) as usize
}

/// A finite sequence over a fixed alphabet.
pub trait Word: Clone + Ord + fmt::Debug {
    type Symbol: Copy + Ord + fmt::Debug;

    fn symbols(&self) -> &[Self::Symbol];

    fn alphabet_size(&self) -> u32;

    /// Builds a word over the same alphabet. Symbols must already be in range.
    fn rebuild(&self, symbols: Vec<Self::Symbol>) -> Self;

    fn symbol_from(value: u32) -> Self::Symbol;

    fn symbol_value(symbol: Self::Symbol) -> u32;

    fn len(&self) -> usize {
        self.symbols().len()
    }

    fn is_empty(&self) -> bool {
        self.symbols().is_empty()
    }

    /// Symbol at 1-based position `pos`.
    fn at(&self, pos: usize) -> u32 {
        Self::symbol_value(self.symbols()[pos - 1])
    }
}

/// A word over `{0, 1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(into = "String", try_from = "String"))]
pub struct BinaryWord {
    bits: Vec<u8>,
}

impl BinaryWord {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(&b) = bits.iter().find(|&&b| b > 1) {
            return Err(Error::SymbolOutOfRange { symbol: b as u32, q: 2 });
        }
        Ok(BinaryWord { bits })
    }

    pub fn zeros(n: usize) -> Self {
        BinaryWord { bits: alloc::vec![0; n] }
    }

    /// The word whose position `i` holds bit `i - 1` of `mask`.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        BinaryWord { bits: (0..n).map(|i| ((mask >> i) & 1) as u8).collect() }
    }

    /// Inverse of [`BinaryWord::from_mask`]. Requires `len() <= 64`.
    pub fn to_mask(&self) -> u64 {
        self.bits.iter().enumerate().fold(0, |m, (i, &b)| m | ((b as u64) << i))
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.bits
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// `sum i * x_i` over 1-based positions.
    pub fn weighted_sum(&self) -> u64 {
        weighted_sum(&self.bits)
    }

    /// All `2^n` words of length `n`, ordered by mask value.
    pub fn all(n: usize, limits: &Limits) -> Result<impl Iterator<Item = BinaryWord>> {
        limits.check_len(n)?;
        Ok((0..1u64 << n).map(move |m| BinaryWord::from_mask(m, n)))
    }
}

pub(crate) fn weighted_sum(bits: &[u8]) -> u64 {
    bits.iter().enumerate().map(|(i, &b)| (i as u64 + 1) * b as u64).sum()
}

impl Word for BinaryWord {
    type Symbol = u8;

    fn symbols(&self) -> &[u8] {
        &self.bits
    }

    fn alphabet_size(&self) -> u32 {
        2
    }

    fn rebuild(&self, symbols: Vec<u8>) -> Self {
        BinaryWord { bits: symbols }
    }

    fn symbol_from(value: u32) -> u8 {
        value as u8
    }

    fn symbol_value(symbol: u8) -> u32 {
        symbol as u32
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::InvalidArgument("binary words use only '0' and '1'")),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(BinaryWord { bits })
    }
}

impl From<BinaryWord> for String {
    fn from(w: BinaryWord) -> String {
        alloc::format!("{w}")
    }
}

impl TryFrom<String> for BinaryWord {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// A word over `[0, q)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct QaryWord {
    symbols: Vec<u32>,
    q: u32,
}

impl QaryWord {
    pub fn new(symbols: Vec<u32>, q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidArgument("alphabet size must be at least 2"));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s >= q) {
            return Err(Error::SymbolOutOfRange { symbol: s, q });
        }
        Ok(QaryWord { symbols, q })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn values(&self) -> &[u32] {
        &self.symbols
    }

    pub fn symbol_sum(&self) -> u64 {
        self.symbols.iter().map(|&s| s as u64).sum()
    }

    /// Parses the text format: decimal digits when `q <= 10`, otherwise
    /// comma-separated decimal symbols.
    pub fn parse(s: &str, q: u32) -> Result<Self> {
        let symbols = if q <= 10 {
            s.chars()
                .map(|c| c.to_digit(10).ok_or(Error::InvalidArgument("expected decimal digits")))
                .collect::<Result<Vec<u32>>>()?
        } else if s.is_empty() {
            Vec::new()
        } else {
            s.split(',')
                .map(|t| t.parse::<u32>().map_err(|_| Error::InvalidArgument("expected comma-separated symbols")))
                .collect::<Result<Vec<u32>>>()?
        };
        QaryWord::new(symbols, q)
    }

    /// Lexicographic successor over `[0, q)^n`, or `None` after the last word.
    pub fn successor(&self) -> Option<QaryWord> {
        let mut next = self.symbols.clone();
        for s in next.iter_mut().rev() {
            if *s + 1 < self.q {
                *s += 1;
                return Some(QaryWord { symbols: next, q: self.q });
            }
            *s = 0;
        }
        None
    }

    /// All `q^n` words of length `n` in lexicographic order.
    pub fn all(n: usize, q: u32, limits: &Limits) -> Result<impl Iterator<Item = QaryWord>> {
        if q < 2 {
            return Err(Error::InvalidArgument("alphabet size must be at least 2"));
        }
        limits.check_space(n, q)?;
        let first = QaryWord { symbols: alloc::vec![0; n], q };
        Ok(core::iter::successors(Some(first), QaryWord::successor))
    }
}

impl Word for QaryWord {
    type Symbol = u32;

    fn symbols(&self) -> &[u32] {
        &self.symbols
    }

    fn alphabet_size(&self) -> u32 {
        self.q
    }

    fn rebuild(&self, symbols: Vec<u32>) -> Self {
        QaryWord { symbols, q: self.q }
    }

    fn symbol_from(value: u32) -> u32 {
        value
    }

    fn symbol_value(symbol: u32) -> u32 {
        symbol
    }
}

impl fmt::Display for QaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q <= 10 {
            for s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (i, s) in self.symbols.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QaryWord(q={}, {self})", self.q)
    }
}

/// One maximal block of equal symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Run<S> {
    pub symbol: S,
    /// 1-based start position.
    pub start: usize,
    pub len: usize,
}

impl<S> Run<S> {
    /// 1-based last position.
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }
}

/// Maximal runs of a word, in order, covering `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunDecomposition<S> {
    runs: Vec<Run<S>>,
}

impl<S: Copy> RunDecomposition<S> {
    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Run<S>> {
        self.runs.iter()
    }

    pub fn as_slice(&self) -> &[Run<S>] {
        &self.runs
    }

    /// The run covering 1-based position `pos`.
    pub fn containing(&self, pos: usize) -> Option<&Run<S>> {
        self.runs.iter().find(|r| r.start <= pos && pos <= r.end())
    }
}

pub fn runs<W: Word>(w: &W) -> RunDecomposition<W::Symbol> {
    RunDecomposition { runs: runs_of(w.symbols()) }
}

pub(crate) fn runs_of<S: Copy + PartialEq>(symbols: &[S]) -> Vec<Run<S>> {
    let mut out: Vec<Run<S>> = Vec::new();
    for (i, &s) in symbols.iter().enumerate() {
        match out.last_mut() {
            Some(run) if run.symbol == s => run.len += 1,
            _ => out.push(Run { symbol: s, start: i + 1, len: 1 }),
        }
    }
    out
}

/// 1-based interval of the run containing `pos`.
pub(crate) fn run_interval<S: Copy + PartialEq>(symbols: &[S], pos: usize) -> crate::Interval {
    let s = symbols[pos - 1];
    let mut lo = pos;
    while lo > 1 && symbols[lo - 2] == s {
        lo -= 1;
    }
    let mut hi = pos;
    while hi < symbols.len() && symbols[hi] == s {
        hi += 1;
    }
    crate::Interval::new(lo, hi)
}

/// `D_1` of a raw sequence: one deletion per run.
fn single_deletions<S: Copy + PartialEq>(symbols: &[S]) -> impl Iterator<Item = Vec<S>> + '_ {
    runs_of(symbols).into_iter().map(move |run| {
        let mut v = Vec::with_capacity(symbols.len() - 1);
        v.extend_from_slice(&symbols[..run.start - 1]);
        v.extend_from_slice(&symbols[run.start..]);
        v
    })
}

/// All words reachable from `w` by exactly `e` deletions (`D_e(w)`).
pub fn deletion_ball<W: Word>(w: &W, e: usize) -> Result<BTreeSet<W>> {
    deletion_ball_within(w, e, &Limits::default())
}

pub fn deletion_ball_within<W: Word>(w: &W, e: usize, limits: &Limits) -> Result<BTreeSet<W>> {
    if e > w.len() {
        return Err(Error::InvalidArgument("cannot delete more symbols than the word holds"));
    }
    limits.check_len(w.len())?;
    let mut level: BTreeSet<Vec<W::Symbol>> = BTreeSet::new();
    level.insert(w.symbols().to_vec());
    for _ in 0..e {
        level = level.iter().flat_map(|v| single_deletions(v)).collect();
    }
    Ok(level.into_iter().map(|v| w.rebuild(v)).collect())
}

/// All words reachable from `w` by exactly `e` insertions of symbols from
/// `w`'s alphabet.
pub fn insertion_ball<W: Word>(w: &W, e: usize) -> Result<BTreeSet<W>> {
    insertion_ball_within(w, e, &Limits::default())
}

pub fn insertion_ball_within<W: Word>(w: &W, e: usize, limits: &Limits) -> Result<BTreeSet<W>> {
    limits.check_len(w.len() + e)?;
    let q = w.alphabet_size();
    let mut level: BTreeSet<Vec<W::Symbol>> = BTreeSet::new();
    level.insert(w.symbols().to_vec());
    for _ in 0..e {
        let mut next = BTreeSet::new();
        for v in &level {
            for pos in 0..=v.len() {
                for value in 0..q {
                    let mut u = Vec::with_capacity(v.len() + 1);
                    u.extend_from_slice(&v[..pos]);
                    u.push(W::symbol_from(value));
                    u.extend_from_slice(&v[pos..]);
                    next.insert(u);
                }
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|v| w.rebuild(v)).collect())
}

/// Words obtained by deleting `s` consecutive symbols from `w`.
pub fn burst_deletion_ball<W: Word>(w: &W, s: usize) -> Result<BTreeSet<W>> {
    if s > w.len() {
        return Err(Error::InvalidArgument("burst longer than the word"));
    }
    Limits::default().check_len(w.len())?;
    let symbols = w.symbols();
    Ok((0..=symbols.len() - s)
        .map(|j| {
            let mut v = Vec::with_capacity(symbols.len() - s);
            v.extend_from_slice(&symbols[..j]);
            v.extend_from_slice(&symbols[j + s..]);
            w.rebuild(v)
        })
        .collect())
}

/// Whether `D_e(u)` and `D_e(v)` intersect.
pub fn confusable<W: Word>(u: &W, v: &W, e: usize) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { expected: u.len(), found: v.len() });
    }
    let du = deletion_ball(u, e)?;
    let dv = deletion_ball(v, e)?;
    Ok(du.intersection(&dv).next().is_some())
}
