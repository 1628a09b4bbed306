//! Binary VT codes.
//!
//! `VT_a(n)` holds the length-`n` words with `sum i*x_i = a (mod n + 1)`.
//! One code corrects a single deletion, a single insertion, or a single
//! `1 -> 0` flip. The deletion and insertion decoders here are written for any
//! modulus `m >= n + 1` so that [`crate::vt_indel`] can reuse them with
//! `m = 2n + 1`.

use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::words::{run_interval, weighted_sum, BinaryWord, Limits};
use crate::{DecodeOutcome, EditKind, Error, Interval, Result};

/// Parameters of `VT_a(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct VtParams {
    n: usize,
    a: u64,
    modulus: u64,
}

impl VtParams {
    pub fn new(n: usize, a: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("block length must be at least 1"));
        }
        if a > n as u64 {
            return Err(Error::InvalidArgument("residue must lie in [0, n]"));
        }
        Ok(VtParams { n, a, modulus: n as u64 + 1 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    /// Always `n + 1`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// Weight and residual checksum of a received word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Syndrome {
    pub weight: usize,
    /// `(a - sum i*y_i) mod m`, in `[0, m)`.
    pub residue: u64,
}

pub fn syndrome(y: &BinaryWord, params: &VtParams) -> Syndrome {
    Syndrome {
        weight: y.weight(),
        residue: residual(params.a, weighted_sum(y.bits()), params.modulus),
    }
}

/// `(target - sum) mod m`.
pub(crate) fn residual(target: u64, sum: u64, m: u64) -> u64 {
    (target % m + m - sum % m) % m
}

fn check_len(x: &BinaryWord, n: usize) -> Result<()> {
    if x.bits().len() != n {
        return Err(Error::LengthMismatch { expected: n, found: x.bits().len() });
    }
    Ok(())
}

/// `(sum i*x_i) mod (n + 1)`.
pub fn checksum(x: &BinaryWord, params: &VtParams) -> Result<u64> {
    check_len(x, params.n)?;
    Ok(x.weighted_sum() % params.modulus)
}

pub fn is_codeword(x: &BinaryWord, params: &VtParams) -> Result<bool> {
    Ok(checksum(x, params)? == params.a)
}

/// Restores one deleted bit so that the result has checksum `a` modulo `m`.
///
/// `m` must be at least `n + 1`; the true (unreduced) syndrome then lies in
/// `[0, n]` and the reduction is exact.
pub(crate) fn restore_deletion(y: &[u8], n: usize, a: u64, m: u64) -> Result<DecodeOutcome<BinaryWord>> {
    debug_assert_eq!(y.len() + 1, n);
    let weight = y.iter().filter(|&&b| b == 1).count();
    let s = residual(a, weighted_sum(y), m) as usize;
    if s > n {
        return Err(Error::CorruptInput("syndrome out of range for a single deletion"));
    }
    // Insertion point p0 (0-based, bit goes before y[p0]).
    let (value, p0) = if s <= weight {
        // A 0 with exactly s ones to its right: directly after the
        // (weight - s)-th one.
        (0u8, index_after_nth(y, 1, weight - s))
    } else {
        // A 1 with exactly s - weight - 1 zeros to its left.
        (1u8, index_after_nth(y, 0, s - weight - 1))
    };
    let mut bits = Vec::with_capacity(n);
    bits.extend_from_slice(&y[..p0]);
    bits.push(value);
    bits.extend_from_slice(&y[p0..]);
    if weighted_sum(&bits) % m != a % m {
        return Err(Error::CorruptInput("reconstruction fails the checksum"));
    }
    let positions = run_interval(&bits, p0 + 1);
    Ok(DecodeOutcome {
        codeword: BinaryWord::new(bits)?,
        kind: EditKind::Deletion,
        value: Some(value as u32),
        positions: Some(positions),
    })
}

/// Index just past the `count`-th occurrence of `symbol` (0 when `count == 0`).
fn index_after_nth(y: &[u8], symbol: u8, count: usize) -> usize {
    if count == 0 {
        return 0;
    }
    let mut seen = 0;
    for (i, &b) in y.iter().enumerate() {
        if b == symbol {
            seen += 1;
            if seen == count {
                return i + 1;
            }
        }
    }
    y.len()
}

/// Removes one inserted bit so that the result has checksum `a` modulo `m`.
///
/// With the inserted bit `v` at position `p` of `y` and `R1` ones to its
/// right, `sum(y) - sum(x) = v*p + R1`. For `v = 0` this is `R1 <= w`; for
/// `v = 1` it is `w + L0 >= w`, where `L0` counts zeros left of `p`. Both
/// cases meet at `w`, which means the insertion sits in the first run.
pub(crate) fn remove_insertion(y: &[u8], n: usize, a: u64, m: u64) -> Result<DecodeOutcome<BinaryWord>> {
    debug_assert_eq!(y.len(), n + 1);
    let weight = y.iter().filter(|&&b| b == 1).count();
    let reduced = residual(weighted_sum(y) % m, a, m);
    let mut excess = reduced;
    while excess <= n as u64 + 1 {
        if let Some(pos) = insertion_position(y, weight, excess as usize) {
            let mut bits = y.to_vec();
            let value = bits.remove(pos);
            if weighted_sum(&bits) % m == a % m {
                return Ok(DecodeOutcome {
                    codeword: BinaryWord::new(bits)?,
                    kind: EditKind::Insertion,
                    value: Some(value as u32),
                    positions: Some(run_interval(y, pos + 1)),
                });
            }
        }
        excess += m;
    }
    Err(Error::CorruptInput("no single insertion explains the received word"))
}

/// 0-based index of a bit whose removal lowers the weighted sum by `excess`.
fn insertion_position(y: &[u8], weight: usize, excess: usize) -> Option<usize> {
    if y.is_empty() {
        return None;
    }
    if excess == weight {
        return Some(0);
    }
    if excess < weight {
        // A 0 with exactly `excess` ones to its right.
        let start = index_after_nth(y, 1, weight - excess);
        y.get(start).filter(|&&b| b == 0).map(|_| start)
    } else {
        // A 1 with exactly `excess - weight` zeros to its left.
        let zeros = y.len() - weight;
        let left = excess - weight;
        if left > zeros {
            return None;
        }
        let start = index_after_nth(y, 0, left);
        y.get(start).filter(|&&b| b == 1).map(|_| start)
    }
}

/// Corrects one deletion: `y` has length `n - 1`.
pub fn decode_deletion(y: &BinaryWord, params: &VtParams) -> Result<DecodeOutcome<BinaryWord>> {
    check_len(y, params.n - 1)?;
    restore_deletion(y.bits(), params.n, params.a, params.modulus)
}

/// Corrects one insertion: `y` has length `n + 1`.
pub fn decode_insertion(y: &BinaryWord, params: &VtParams) -> Result<DecodeOutcome<BinaryWord>> {
    check_len(y, params.n + 1)?;
    remove_insertion(y.bits(), params.n, params.a, params.modulus)
}

/// Corrects at most one `1 -> 0` flip. The residue equals the flipped position.
pub fn decode_z_channel(received: &BinaryWord, params: &VtParams) -> Result<DecodeOutcome<BinaryWord>> {
    check_len(received, params.n)?;
    let s = syndrome(received, params).residue as usize;
    if s == 0 {
        return Ok(DecodeOutcome::clean(received.clone()));
    }
    if received.bits()[s - 1] != 0 {
        return Err(Error::CorruptInput("not a single 1 -> 0 flip"));
    }
    let mut bits = received.bits().to_vec();
    bits[s - 1] = 1;
    Ok(DecodeOutcome {
        codeword: BinaryWord::new(bits)?,
        kind: EditKind::ZFlip,
        value: Some(1),
        positions: Some(Interval::point(s)),
    })
}

/// Parity positions of the systematic encoder: the powers of two in `[1, n]`.
pub fn parity_positions(n: usize) -> Vec<usize> {
    core::iter::successors(Some(1usize), |p| p.checked_mul(2))
        .take_while(|&p| p <= n)
        .collect()
}

/// Number of data bits carried by a systematic codeword of length `n`.
pub fn data_len(n: usize) -> usize {
    n - parity_positions(n).len()
}

fn is_power_of_two_position(i: usize) -> bool {
    i.is_power_of_two()
}

/// Places `data` on the non-power-of-two positions and picks the parity bits
/// at positions `1, 2, 4, ...` as the binary expansion of the residue still
/// needed to reach `a`.
pub fn systematic_encode(data: &BinaryWord, params: &VtParams) -> Result<BinaryWord> {
    let n = params.n;
    let k = data_len(n);
    if data.bits().len() != k {
        return Err(Error::LengthMismatch { expected: k, found: data.bits().len() });
    }
    let mut bits = alloc::vec![0u8; n];
    let mut data_bits = data.bits().iter();
    for (i, slot) in bits.iter_mut().enumerate() {
        if !is_power_of_two_position(i + 1) {
            *slot = *data_bits.next().expect("data length checked");
        }
    }
    let needed = residual(params.a, weighted_sum(&bits), params.modulus);
    for p in parity_positions(n) {
        bits[p - 1] = ((needed & p as u64) != 0) as u8;
    }
    let x = BinaryWord::new(bits)?;
    if !is_codeword(&x, params)? {
        return Err(Error::InternalInvariant("systematic parity missed the target residue"));
    }
    Ok(x)
}

/// Reads the data bits back from the non-power-of-two positions.
pub fn systematic_decode(x: &BinaryWord) -> BinaryWord {
    let bits = x
        .bits()
        .iter()
        .enumerate()
        .filter(|(i, _)| !is_power_of_two_position(i + 1))
        .map(|(_, &b)| b)
        .collect();
    BinaryWord::new(bits).expect("bits of a binary word")
}

/// All members of `VT_a(n)` in lexicographic order.
pub fn enumerate(params: &VtParams) -> Result<Vec<BinaryWord>> {
    enumerate_within(params, &Limits::default())
}

pub fn enumerate_within(params: &VtParams, limits: &Limits) -> Result<Vec<BinaryWord>> {
    let mut out: Vec<BinaryWord> = BinaryWord::all(params.n, limits)?
        .filter(|x| x.weighted_sum() % params.modulus == params.a)
        .collect();
    out.sort();
    Ok(out)
}

/// Residue class of `x`: the unique `a` with `x` in `VT_a(n)`.
pub fn residue_class(x: &BinaryWord) -> u64 {
    x.weighted_sum() % (x.bits().len() as u64 + 1)
}
