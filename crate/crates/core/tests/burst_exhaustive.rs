use std::collections::BTreeMap;

use delcode_core::burst::{self, BurstParams};
use delcode_core::vt_binary::{self, VtParams};
use delcode_core::words::{burst_deletion_ball, confusable, BinaryWord, Limits};
use proptest::prelude::*;

fn b(s: &str) -> BinaryWord {
    s.parse().unwrap()
}

/// Every interleaved codeword for residues `residues`, by cartesian product.
fn codewords(s: usize, k: usize, residues: &[u64]) -> Vec<BinaryWord> {
    let rows: Vec<Vec<BinaryWord>> = residues
        .iter()
        .map(|&a| vt_binary::enumerate(&VtParams::new(k, a).unwrap()).unwrap())
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; s];
    loop {
        let chosen: Vec<BinaryWord> = pick.iter().zip(&rows).map(|(&i, r)| r[i].clone()).collect();
        out.push(burst::interleave(&chosen).unwrap());
        let mut r = 0;
        while r < s {
            pick[r] += 1;
            if pick[r] < rows[r].len() {
                break;
            }
            pick[r] = 0;
            r += 1;
        }
        if r == s {
            return out;
        }
    }
}

fn remove_burst(x: &BinaryWord, start: usize, s: usize) -> BinaryWord {
    let mut bits = x.bits().to_vec();
    bits.drain(start..start + s);
    BinaryWord::new(bits).unwrap()
}

#[test]
fn every_exact_burst_is_corrected() {
    for s in 1..=3 {
        for k in 1..=6 {
            for residues in [vec![0; s], (0..s as u64).map(|r| r % (k as u64 + 1)).collect()] {
                let params = BurstParams::new(s, k, &residues).unwrap();
                for x in codewords(s, k, &residues) {
                    for start in 0..=s * k - s {
                        let y = remove_burst(&x, start, s);
                        assert_eq!(burst::decode_burst(&y, &params).unwrap(), x, "s={s} k={k} start={start}");
                    }
                }
            }
        }
    }
}

#[test]
fn burst_balls_are_disjoint() {
    for s in 1..=3 {
        for k in 1..=6 {
            let mut owner: BTreeMap<BinaryWord, BinaryWord> = BTreeMap::new();
            for x in codewords(s, k, &vec![0; s]) {
                for d in burst_deletion_ball(&x, s).unwrap() {
                    if let Some(prev) = owner.insert(d.clone(), x.clone()) {
                        assert_eq!(prev, x, "s={s} k={k} share {d}");
                    }
                }
            }
        }
    }
}

#[test]
fn survivors_stay_in_their_rows() {
    for s in 1..=4 {
        for k in 1..=6 {
            let n = s * k;
            for start in 0..=n - s {
                let survivors: Vec<usize> = (0..n).filter(|&p| p < start || p >= start + s).collect();
                let mut lost_at = vec![None; s];
                for p in start..start + s {
                    lost_at[p % s] = Some(p / s);
                }
                for (new_pos, &old_pos) in survivors.iter().enumerate() {
                    assert_eq!(new_pos % s, old_pos % s);
                }
                // One deletion per row, at the same column or one apart.
                let cols: Vec<usize> = lost_at.iter().map(|c| c.unwrap()).collect();
                let lo = *cols.iter().min().unwrap();
                assert!(cols.iter().all(|&c| c == lo || c == lo + 1));
            }
        }
    }
}

#[test]
fn round_trip_of_interleaving() {
    for s in 1..=4 {
        for k in 1..=6usize {
            if s * k > 16 {
                continue;
            }
            for x in BinaryWord::all(s * k, &Limits::default()).unwrap() {
                let rows = burst::deinterleave(&x, s).unwrap();
                assert!(rows.iter().all(|r| r.bits().len() == k));
                assert_eq!(burst::interleave(&rows).unwrap(), x);
            }
        }
    }
}

#[test]
fn burst_correctable_yet_deletion_confusable() {
    let (u, v) = (b("0101"), b("1010"));
    let bu = burst_deletion_ball(&u, 2).unwrap();
    let bv = burst_deletion_ball(&v, 2).unwrap();
    assert!(bu.is_disjoint(&bv));
    assert!(confusable(&u, &v, 1).unwrap());
}

#[test]
fn shorter_bursts_are_rejected() {
    let params = BurstParams::uniform(3, 5).unwrap();
    let x = BinaryWord::zeros(15);
    assert!(burst::decode_burst(&remove_burst(&x, 2, 2), &params).is_err());
    assert!(burst::decode_burst(&x, &params).is_err());
}

proptest! {
    #[test]
    fn systematic_rows_are_codewords(s in 1usize..5, k in 1usize..40, seed in any::<u64>()) {
        let residues: Vec<u64> = (0..s as u64).map(|r| (seed >> r) % (k as u64 + 1)).collect();
        let params = BurstParams::new(s, k, &residues).unwrap();
        let m = burst::row_data_len(&params);
        let data: Vec<BinaryWord> = (0..s)
            .map(|r| BinaryWord::new((0..m).map(|i| ((seed >> ((r * 7 + i) % 64)) & 1) as u8).collect()).unwrap())
            .collect();
        let x = burst::encode_systematic(&data, &params).unwrap();
        for (row, p) in burst::deinterleave(&x, s).unwrap().iter().zip(params.row_params()) {
            prop_assert!(vt_binary::is_codeword(row, p).unwrap());
        }
        prop_assert_eq!(burst::decode_systematic(&x, &params).unwrap(), data);
    }
}
