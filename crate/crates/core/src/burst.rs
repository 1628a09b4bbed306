//! Burst-deletion codes from interleaved VT codewords.
//!
//! A codeword of length `n = s * k` is `s` rows of `VT_{a_r}(k)` codewords
//! written column by column: position `(j - 1) * s + r` holds bit `j` of row
//! `r`. Deleting `s` consecutive positions removes exactly one bit from each
//! row and keeps every surviving bit in its residue class modulo `s`, so the
//! rows can be pulled apart again and decoded independently.
//!
//! Bursts shorter than `s` are not corrected.

use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::vt_binary::{self, VtParams};
use crate::{BinaryWord, Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct BurstParams {
    s: usize,
    k: usize,
    rows: Vec<VtParams>,
}

impl BurstParams {
    /// `residues` holds one `a_r` per row, each in `[0, k]`.
    pub fn new(s: usize, k: usize, residues: &[u64]) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidArgument("interleave depth must be at least 1"));
        }
        if residues.len() != s {
            return Err(Error::InvalidArgument("need exactly one residue per row"));
        }
        let rows = residues.iter().map(|&a| VtParams::new(k, a)).collect::<Result<Vec<_>>>()?;
        Ok(BurstParams { s, k, rows })
    }

    /// All rows use residue 0.
    pub fn uniform(s: usize, k: usize) -> Result<Self> {
        Self::new(s, k, &alloc::vec![0; s])
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.s * self.k
    }

    pub fn row_params(&self) -> &[VtParams] {
        &self.rows
    }

    pub fn residues(&self) -> Vec<u64> {
        self.rows.iter().map(|p| p.a()).collect()
    }
}

/// Merges `rows` column by column.
pub fn interleave(rows: &[BinaryWord]) -> Result<BinaryWord> {
    let Some(first) = rows.first() else {
        return Err(Error::InvalidArgument("need at least one row"));
    };
    let k = first.bits().len();
    if rows.iter().any(|r| r.bits().len() != k) {
        return Err(Error::InvalidArgument("rows have different lengths"));
    }
    let mut bits = Vec::with_capacity(k * rows.len());
    for j in 0..k {
        bits.extend(rows.iter().map(|r| r.bits()[j]));
    }
    BinaryWord::new(bits)
}

/// Splits `x` into `s` rows by position modulo `s`; row `s` takes residue 0.
pub fn deinterleave(x: &BinaryWord, s: usize) -> Result<Vec<BinaryWord>> {
    if s == 0 {
        return Err(Error::InvalidArgument("interleave depth must be at least 1"));
    }
    if !x.bits().len().is_multiple_of(s) {
        return Err(Error::InvalidArgument("length is not a multiple of the depth"));
    }
    (0..s)
        .map(|r| BinaryWord::new(x.bits().iter().skip(r).step_by(s).copied().collect()))
        .collect()
}

/// Interleaves rows after checking each is in its row's VT code.
pub fn encode(rows: &[BinaryWord], params: &BurstParams) -> Result<BinaryWord> {
    if rows.len() != params.s {
        return Err(Error::InvalidArgument("need exactly s rows"));
    }
    for (row, p) in rows.iter().zip(&params.rows) {
        if !vt_binary::is_codeword(row, p)? {
            return Err(Error::InvalidArgument("row is not a codeword of its VT code"));
        }
    }
    interleave(rows)
}

/// Number of data bits [`encode_systematic`] takes per row.
pub fn row_data_len(params: &BurstParams) -> usize {
    vt_binary::data_len(params.k)
}

/// Systematically encodes one block of data per row, then interleaves.
pub fn encode_systematic(data: &[BinaryWord], params: &BurstParams) -> Result<BinaryWord> {
    if data.len() != params.s {
        return Err(Error::InvalidArgument("need exactly s data blocks"));
    }
    let rows = data
        .iter()
        .zip(&params.rows)
        .map(|(d, p)| vt_binary::systematic_encode(d, p))
        .collect::<Result<Vec<_>>>()?;
    interleave(&rows)
}

/// Inverse of [`encode_systematic`] on an intact codeword.
pub fn decode_systematic(x: &BinaryWord, params: &BurstParams) -> Result<Vec<BinaryWord>> {
    if x.bits().len() != params.n() {
        return Err(Error::LengthMismatch { expected: params.n(), found: x.bits().len() });
    }
    Ok(deinterleave(x, params.s)?.iter().map(vt_binary::systematic_decode).collect())
}

/// Corrects one burst of exactly `s` consecutive deletions.
pub fn decode_burst(y: &BinaryWord, params: &BurstParams) -> Result<BinaryWord> {
    let expected = params.n() - params.s;
    if y.bits().len() != expected {
        return Err(Error::LengthMismatch { expected, found: y.bits().len() });
    }
    let rows = deinterleave(y, params.s)?;
    let fixed = rows
        .iter()
        .zip(&params.rows)
        .map(|(row, p)| {
            vt_binary::decode_deletion(row, p)
                .map(|o| o.codeword)
                .map_err(|_| Error::CorruptInput("a row did not decode; not a single s-burst"))
        })
        .collect::<Result<Vec<_>>>()?;
    interleave(&fixed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn b(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn interleave_examples() {
        assert_eq!(interleave(&[b("101"), b("000")]).unwrap(), b("100010"));
        assert_eq!(interleave(&[b("1101")]).unwrap(), b("1101"));
        assert!(interleave(&[b("101"), b("00")]).is_err());
        assert!(interleave(&[]).is_err());
    }

    #[test]
    fn deinterleave_examples() {
        assert_eq!(deinterleave(&b("100010"), 2).unwrap(), vec![b("101"), b("000")]);
        assert_eq!(deinterleave(&b("1010"), 2).unwrap(), vec![b("11"), b("00")]);
        assert_eq!(deinterleave(&b("011"), 1).unwrap(), vec![b("011")]);
        assert!(deinterleave(&b("101"), 2).is_err());
    }

    #[test]
    fn encode_and_decode_examples() {
        let params = BurstParams::uniform(2, 3).unwrap();
        assert_eq!(encode(&[b("101"), b("000")], &params).unwrap(), b("100010"));
        assert!(encode(&[b("110"), b("000")], &params).is_err());
        assert_eq!(decode_burst(&b("1010"), &params).unwrap(), b("100010"));
        assert_eq!(decode_burst(&b("0000"), &params).unwrap(), b("000000"));
        assert!(matches!(decode_burst(&b("10100"), &params), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn systematic_rows() {
        let params = BurstParams::new(3, 7, &[0, 3, 5]).unwrap();
        let data = vec![b("1011"), b("0110"), b("1111")];
        let x = encode_systematic(&data, &params).unwrap();
        for (row, p) in deinterleave(&x, 3).unwrap().iter().zip(params.row_params()) {
            assert!(vt_binary::is_codeword(row, p).unwrap());
        }
        assert_eq!(decode_systematic(&x, &params).unwrap(), data);
        assert_eq!(encode_systematic(&vec![b("0000"); 3], &BurstParams::uniform(3, 7).unwrap()).unwrap(), BinaryWord::zeros(21));
    }
}
