//! q-ary single-deletion codes built on the monotonicity indicator sequence.
//!
//! A word `x` over `[0, q)` of length `n` is mapped to its monotonicity
//! indicator `alpha(x)` of length `n - 1`, where `alpha_i = 1` iff
//! `x_i >= x_{i-1}`. The code `C(n, q, a, b)` holds the words with
//!
//! - `sum_{i=2}^{n} (i - 1) * alpha_i = a (mod n)`, i.e. `alpha(x)` is in the
//!   binary code `VT_a(n - 1)`, and
//! - `sum x_i = b (mod q)`.
//!
//! A deletion in `x` is a deletion in `alpha(x)`, so the binary VT decoder
//! recovers `alpha(x)`; the symbol sum gives the deleted value; the position
//! is whatever slot reproduces `alpha(x)`.

use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::vt_binary::restore_deletion;
use crate::words::{run_interval, BinaryWord, Limits, QaryWord, Word};
use crate::{DecodeOutcome, EditKind, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct TenengoltsParams {
    n: usize,
    q: u32,
    a: u64,
    b: u32,
}

impl TenengoltsParams {
    pub fn new(n: usize, q: u32, a: u64, b: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidArgument("block length must be at least 2"));
        }
        if q < 2 {
            return Err(Error::InvalidArgument("alphabet size must be at least 2"));
        }
        if a >= n as u64 {
            return Err(Error::InvalidArgument("alpha residue must lie in [0, n)"));
        }
        if b >= q {
            return Err(Error::InvalidArgument("symbol-sum residue must lie in [0, q)"));
        }
        Ok(TenengoltsParams { n, q, a, b })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }
}

fn alpha_bits(symbols: &[u32]) -> Vec<u8> {
    symbols.windows(2).map(|w| (w[1] >= w[0]) as u8).collect()
}

/// `alpha_2 .. alpha_n` as a binary word of length `n - 1`.
pub fn alpha_sequence(x: &QaryWord) -> Result<BinaryWord> {
    if x.len() < 2 {
        return Err(Error::InvalidArgument("alpha sequence needs at least two symbols"));
    }
    BinaryWord::new(alpha_bits(x.values()))
}

/// The `(a, b)` class a word of length `n >= 2` belongs to.
pub fn signature(x: &QaryWord) -> Result<(u64, u32)> {
    let n = x.len();
    if n < 2 {
        return Err(Error::InvalidArgument("block length must be at least 2"));
    }
    let alpha = alpha_bits(x.values());
    let a = crate::words::weighted_sum(&alpha) % n as u64;
    let b = (x.symbol_sum() % x.q() as u64) as u32;
    Ok((a, b))
}

fn check_word(x: &QaryWord, len: usize, params: &TenengoltsParams) -> Result<()> {
    if x.q() != params.q {
        return Err(Error::InvalidArgument("word alphabet differs from the code alphabet"));
    }
    if x.len() != len {
        return Err(Error::LengthMismatch { expected: len, found: x.len() });
    }
    Ok(())
}

pub fn is_codeword(x: &QaryWord, params: &TenengoltsParams) -> Result<bool> {
    check_word(x, params.n, params)?;
    Ok(signature(x)? == (params.a, params.b))
}

fn deleted_value(y: &QaryWord, params: &TenengoltsParams) -> u32 {
    let q = params.q as u64;
    ((params.b as u64 + q - y.symbol_sum() % q) % q) as u32
}

fn inserted(y: &[u32], pos: usize, value: u32) -> Vec<u32> {
    let mut v = Vec::with_capacity(y.len() + 1);
    v.extend_from_slice(&y[..pos]);
    v.push(value);
    v.extend_from_slice(&y[pos..]);
    v
}

fn outcome(y: &QaryWord, symbols: Vec<u32>, pos: usize, value: u32) -> DecodeOutcome<QaryWord> {
    let positions = run_interval(&symbols, pos + 1);
    DecodeOutcome {
        codeword: y.rebuild(symbols),
        kind: EditKind::Deletion,
        value: Some(value),
        positions: Some(positions),
    }
}

/// Corrects one deletion: `y` has length `n - 1`.
///
/// Runs in `O(n)`: the value comes from the symbol sum, `alpha(x)` from the
/// binary VT decoder on `alpha(y)`, and each insertion slot is tested against
/// `alpha(x)` in constant time using precomputed prefix and suffix matches.
pub fn decode_deletion(y: &QaryWord, params: &TenengoltsParams) -> Result<DecodeOutcome<QaryWord>> {
    check_word(y, params.n - 1, params)?;
    let n = params.n;
    let value = deleted_value(y, params);
    let ys = y.values();
    let alpha_y = alpha_bits(ys);
    let target = restore_deletion(&alpha_y, n - 1, params.a, n as u64)
        .map_err(|_| Error::CorruptInput("alpha sequence is not one deletion from the code"))?
        .codeword;
    let target = target.bits();

    // alpha(x) for x = y[..p] v y[p..] agrees with alpha_y[..p-1] on the left,
    // has two fresh comparisons around v, and agrees with alpha_y[p..] shifted
    // by one on the right.
    let prefix = alpha_y.iter().zip(target).take_while(|(u, t)| u == t).count();
    let mut suffix_from = alpha_y.len();
    while suffix_from > 0 && alpha_y[suffix_from - 1] == target[suffix_from] {
        suffix_from -= 1;
    }

    let mut found: Option<(Vec<u32>, usize)> = None;
    for p in 0..n {
        if p >= 1 && p - 1 > prefix {
            break;
        }
        if p < suffix_from {
            continue;
        }
        if p >= 1 && (value >= ys[p - 1]) as u8 != target[p - 1] {
            continue;
        }
        if p + 1 < n && (ys[p] >= value) as u8 != target[p] {
            continue;
        }
        let candidate = inserted(ys, p, value);
        match &found {
            None => found = Some((candidate, p)),
            Some((first, _)) if *first == candidate => {}
            Some(_) => return Err(Error::InternalInvariant("two distinct codewords explain one deletion")),
        }
    }
    let (symbols, pos) = found.ok_or(Error::CorruptInput("no slot reproduces the decoded alpha sequence"))?;
    Ok(outcome(y, symbols, pos, value))
}

/// Reference decoder: inserts the deleted value at every slot and keeps the
/// members. Quadratic; used to cross-check [`decode_deletion`].
pub fn decode_deletion_by_scan(y: &QaryWord, params: &TenengoltsParams) -> Result<DecodeOutcome<QaryWord>> {
    check_word(y, params.n - 1, params)?;
    let value = deleted_value(y, params);
    let ys = y.values();
    let mut found: Option<(Vec<u32>, usize)> = None;
    for p in 0..params.n {
        let candidate = inserted(ys, p, value);
        if signature(&y.rebuild(candidate.clone()))? != (params.a, params.b) {
            continue;
        }
        match &found {
            None => found = Some((candidate, p)),
            Some((first, _)) if *first == candidate => {}
            Some(_) => return Err(Error::InternalInvariant("two distinct codewords explain one deletion")),
        }
    }
    let (symbols, pos) = found.ok_or(Error::CorruptInput("no single deletion explains the received word"))?;
    Ok(outcome(y, symbols, pos, value))
}

/// Corrects one insertion: `y` has length `n + 1`. The inserted value is the
/// symbol-sum excess; each occurrence of it is tried.
pub fn decode_insertion(y: &QaryWord, params: &TenengoltsParams) -> Result<DecodeOutcome<QaryWord>> {
    check_word(y, params.n + 1, params)?;
    let q = params.q as u64;
    let value = ((y.symbol_sum() % q + q - params.b as u64) % q) as u32;
    let ys = y.values();
    let mut found: Option<(Vec<u32>, usize)> = None;
    for (p, _) in ys.iter().enumerate().filter(|(_, &s)| s == value) {
        let mut candidate = ys.to_vec();
        candidate.remove(p);
        if signature(&y.rebuild(candidate.clone()))?.0 != params.a {
            continue;
        }
        match &found {
            None => found = Some((candidate, p)),
            Some((first, _)) if *first == candidate => {}
            Some(_) => return Err(Error::InternalInvariant("two distinct codewords explain one insertion")),
        }
    }
    let (symbols, pos) = found.ok_or(Error::CorruptInput("no single insertion explains the received word"))?;
    Ok(DecodeOutcome {
        codeword: y.rebuild(symbols),
        kind: EditKind::Insertion,
        value: Some(value),
        positions: Some(run_interval(ys, pos + 1)),
    })
}

/// All members in lexicographic order.
pub fn enumerate(params: &TenengoltsParams) -> Result<Vec<QaryWord>> {
    enumerate_within(params, &Limits::default())
}

pub fn enumerate_within(params: &TenengoltsParams, limits: &Limits) -> Result<Vec<QaryWord>> {
    let mut out = Vec::new();
    for x in QaryWord::all(params.n, params.q, limits)? {
        if signature(&x)? == (params.a, params.b) {
            out.push(x);
        }
    }
    Ok(out)
}

/// Ranks and unranks codewords in lexicographic order without enumerating.
///
/// Holds, for every prefix length, last symbol and partial residues, the
/// number of completions landing in the code. Counts are `u128`; codes
/// whose size overflows are refused.
#[derive(Debug, Clone)]
pub struct CodeIndex {
    params: TenengoltsParams,
    // completions[((len * q + last) * n + alpha_res) * q + sum_res]
    completions: Vec<u128>,
    size: u128,
}

impl CodeIndex {
    /// Table entries allowed before refusing.
    pub const MAX_TABLE: usize = 1 << 24;

    pub fn new(params: &TenengoltsParams) -> Result<Self> {
        let n = params.n;
        let q = params.q as usize;
        let entries = (n + 1)
            .checked_mul(q * q)
            .and_then(|e| e.checked_mul(n))
            .filter(|&e| e <= Self::MAX_TABLE)
            .ok_or(Error::ResourceLimit { requested: n, limit: Self::MAX_TABLE })?;
        let mut completions = alloc::vec![0u128; entries];
        let idx = |len: usize, last: usize, ar: usize, sr: usize| ((len * q + last) * n + ar) * q + sr;
        for last in 0..q {
            completions[idx(n, last, params.a as usize, params.b as usize)] = 1;
        }
        for len in (1..n).rev() {
            for last in 0..q {
                for ar in 0..n {
                    for sr in 0..q {
                        let mut total: u128 = 0;
                        for t in 0..q {
                            let alpha = (t >= last) as usize;
                            let next = completions[idx(len + 1, t, (ar + len * alpha) % n, (sr + t) % q)];
                            total = total
                                .checked_add(next)
                                .ok_or(Error::ResourceLimit { requested: n, limit: Self::MAX_TABLE })?;
                        }
                        completions[idx(len, last, ar, sr)] = total;
                    }
                }
            }
        }
        let mut size: u128 = 0;
        for t in 0..q {
            size = size
                .checked_add(completions[idx(1, t, 0, t % q)])
                .ok_or(Error::ResourceLimit { requested: n, limit: Self::MAX_TABLE })?;
        }
        Ok(CodeIndex { params: *params, completions, size })
    }

    fn count(&self, len: usize, last: u32, ar: u64, sr: u32) -> u128 {
        let n = self.params.n;
        let q = self.params.q as usize;
        self.completions[((len * q + last as usize) * n + ar as usize) * q + sr as usize]
    }

    /// Number of codewords.
    pub fn size(&self) -> u128 {
        self.size
    }

    /// The `k`-th codeword in lexicographic order.
    pub fn encode(&self, mut k: u128) -> Result<QaryWord> {
        if k >= self.size {
            return Err(Error::InvalidArgument("index beyond the code size"));
        }
        let TenengoltsParams { n, q, .. } = self.params;
        let mut symbols = Vec::with_capacity(n);
        let (mut ar, mut sr) = (0u64, 0u32);
        for len in 0..n {
            let mut chosen = None;
            for t in 0..q {
                let (nar, nsr) = self.step(len, symbols.last().copied(), t, ar, sr);
                let c = self.count(len + 1, t, nar, nsr);
                if k < c {
                    chosen = Some((t, nar, nsr));
                    break;
                }
                k -= c;
            }
            let (t, nar, nsr) = chosen.ok_or(Error::InternalInvariant("completion counts disagree with size"))?;
            symbols.push(t);
            ar = nar;
            sr = nsr;
        }
        QaryWord::new(symbols, q)
    }

    /// Lexicographic rank of a codeword.
    pub fn index_of(&self, x: &QaryWord) -> Result<u128> {
        if !is_codeword(x, &self.params)? {
            return Err(Error::InvalidArgument("word is not in the code"));
        }
        let (mut ar, mut sr) = (0u64, 0u32);
        let mut rank: u128 = 0;
        let xs = x.values();
        for (len, &s) in xs.iter().enumerate() {
            let last = if len == 0 { None } else { Some(xs[len - 1]) };
            for t in 0..s {
                let (nar, nsr) = self.step(len, last, t, ar, sr);
                rank += self.count(len + 1, t, nar, nsr);
            }
            let (nar, nsr) = self.step(len, last, s, ar, sr);
            ar = nar;
            sr = nsr;
        }
        Ok(rank)
    }

    /// Residues after appending `t` to a prefix of length `len`.
    fn step(&self, len: usize, last: Option<u32>, t: u32, ar: u64, sr: u32) -> (u64, u32) {
        let n = self.params.n as u64;
        let alpha = match last {
            Some(l) => (t >= l) as u64,
            None => 0,
        };
        ((ar + len as u64 * alpha) % n, (sr + t) % self.params.q)
    }
}

/// The `k`-th codeword in lexicographic order.
pub fn encode_by_index(k: u128, params: &TenengoltsParams) -> Result<QaryWord> {
    CodeIndex::new(params)?.encode(k)
}

/// Lexicographic rank of a codeword; inverse of [`encode_by_index`].
pub fn decode_to_index(x: &QaryWord, params: &TenengoltsParams) -> Result<u128> {
    CodeIndex::new(params)?.index_of(x)
}
