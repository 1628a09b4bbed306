//! VT codes with modulus `2n + 1`.
//!
//! Taking the checksum modulo `2n + 1` instead of `n + 1` leaves room for
//! both flip directions: a `1 -> 0` flip at `p` leaves residue `p` and a
//! `0 -> 1` flip leaves `2n + 1 - p`. The received length tells which single
//! edit happened.

use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::vt_binary::{remove_insertion, residual, restore_deletion};
use crate::words::{weighted_sum, BinaryWord, Limits};
use crate::{DecodeOutcome, EditKind, Error, Interval, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct ShiftedVtParams {
    n: usize,
    a: u64,
    modulus: u64,
}

impl ShiftedVtParams {
    pub fn new(n: usize, a: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("block length must be at least 1"));
        }
        let modulus = 2 * n as u64 + 1;
        if a >= modulus {
            return Err(Error::InvalidArgument("residue must lie in [0, 2n]"));
        }
        Ok(ShiftedVtParams { n, a, modulus })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

/// What the received length says about the edit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum EditClass {
    Deletion,
    Insertion,
    SubstitutionOrClean,
}

pub fn is_codeword(x: &BinaryWord, params: &ShiftedVtParams) -> Result<bool> {
    if x.bits().len() != params.n {
        return Err(Error::LengthMismatch { expected: params.n, found: x.bits().len() });
    }
    Ok(x.weighted_sum() % params.modulus == params.a)
}

pub fn classify(y: &BinaryWord, params: &ShiftedVtParams) -> Result<EditClass> {
    let len = y.bits().len();
    match len {
        l if l + 1 == params.n => Ok(EditClass::Deletion),
        l if l == params.n => Ok(EditClass::SubstitutionOrClean),
        l if l == params.n + 1 => Ok(EditClass::Insertion),
        _ => Err(Error::CorruptInput("received length differs from n by more than one")),
    }
}

/// Where a substitution residue points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlipLocation {
    Clean,
    /// A `1` became `0` at this position.
    OneToZero(usize),
    /// A `0` became `1` at this position.
    ZeroToOne(usize),
}

/// Maps `S = (a - sum i*y_i) mod (2n + 1)` to a flip. The ranges `{0}`,
/// `[1, n]` and `[n + 1, 2n]` are disjoint and cover `[0, 2n]`.
pub fn locate_flip(residue: u64, n: usize) -> FlipLocation {
    let n64 = n as u64;
    debug_assert!(residue <= 2 * n64);
    if residue == 0 {
        FlipLocation::Clean
    } else if residue <= n64 {
        FlipLocation::OneToZero(residue as usize)
    } else {
        FlipLocation::ZeroToOne((2 * n64 + 1 - residue) as usize)
    }
}

/// Corrects one insertion, deletion or substitution.
pub fn decode(y: &BinaryWord, params: &ShiftedVtParams) -> Result<DecodeOutcome<BinaryWord>> {
    let bits = y.bits();
    match classify(y, params)? {
        EditClass::Deletion => restore_deletion(bits, params.n, params.a, params.modulus),
        EditClass::Insertion => remove_insertion(bits, params.n, params.a, params.modulus),
        EditClass::SubstitutionOrClean => {
            let residue = residual(params.a, weighted_sum(bits), params.modulus);
            let (pos, from) = match locate_flip(residue, params.n) {
                FlipLocation::Clean => return Ok(DecodeOutcome::clean(y.clone())),
                FlipLocation::OneToZero(p) => (p, 0u8),
                FlipLocation::ZeroToOne(p) => (p, 1u8),
            };
            if bits[pos - 1] != from {
                return Err(Error::CorruptInput("residue does not match a single substitution"));
            }
            let mut fixed: Vec<u8> = bits.to_vec();
            fixed[pos - 1] = 1 - from;
            Ok(DecodeOutcome {
                codeword: BinaryWord::new(fixed)?,
                kind: EditKind::Substitution,
                value: Some(1 - from as u32),
                positions: Some(Interval::point(pos)),
            })
        }
    }
}

/// All members in lexicographic order.
pub fn enumerate(params: &ShiftedVtParams) -> Result<Vec<BinaryWord>> {
    enumerate_within(params, &Limits::default())
}

pub fn enumerate_within(params: &ShiftedVtParams, limits: &Limits) -> Result<Vec<BinaryWord>> {
    let mut out: Vec<BinaryWord> = BinaryWord::all(params.n, limits)?
        .filter(|x| x.weighted_sum() % params.modulus == params.a)
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn p(n: usize, a: u64) -> ShiftedVtParams {
        ShiftedVtParams::new(n, a).unwrap()
    }

    #[test]
    fn membership() {
        assert!(is_codeword(&b("0000"), &p(4, 0)).unwrap());
        assert!(is_codeword(&b("0111"), &p(4, 0)).unwrap());
        assert!(!is_codeword(&b("1111"), &p(4, 0)).unwrap());
        assert!(ShiftedVtParams::new(4, 9).is_err());
        assert!(ShiftedVtParams::new(4, 8).is_ok());
    }

    #[test]
    fn classify_by_length() {
        let params = p(4, 0);
        assert_eq!(classify(&b("011"), &params).unwrap(), EditClass::Deletion);
        assert_eq!(classify(&b("0111"), &params).unwrap(), EditClass::SubstitutionOrClean);
        assert_eq!(classify(&b("01110"), &params).unwrap(), EditClass::Insertion);
        assert!(matches!(classify(&b("01"), &params), Err(Error::CorruptInput(_))));
    }

    #[test]
    fn decode_examples() {
        let params = p(4, 0);
        let out = decode(&b("0011"), &params).unwrap();
        assert_eq!((out.codeword, out.kind, out.positions), (b("0111"), EditKind::Substitution, Some(Interval::point(2))));
        let out = decode(&b("1111"), &params).unwrap();
        assert_eq!((out.codeword, out.positions), (b("0111"), Some(Interval::point(1))));
        let out = decode(&b("111"), &params).unwrap();
        assert_eq!((out.codeword, out.kind, out.value), (b("0111"), EditKind::Deletion, Some(0)));
        let out = decode(&b("0111"), &params).unwrap();
        assert_eq!((out.codeword, out.kind), (b("0111"), EditKind::None));
    }

    #[test]
    fn flip_ranges_partition_residues() {
        for n in 1..=20usize {
            let mut clean = 0;
            let mut seen = alloc::vec![0u32; n + 1];
            for s in 0..=2 * n as u64 {
                match locate_flip(s, n) {
                    FlipLocation::Clean => clean += 1,
                    FlipLocation::OneToZero(p) => {
                        assert!(s <= n as u64);
                        seen[p] += 1;
                    }
                    FlipLocation::ZeroToOne(p) => {
                        assert!(s > n as u64);
                        assert!((1..=n).contains(&p));
                        seen[p] += 2;
                    }
                }
            }
            assert_eq!(clean, 1);
            assert!(seen[1..].iter().all(|&c| c == 3));
        }
    }
}
