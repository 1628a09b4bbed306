use delcode_core::burst::BurstParams;
use delcode_core::channels::{self, ChannelKind, ChannelSpec, Codec};
use delcode_core::tenengolts::TenengoltsParams;
use delcode_core::vt_binary::VtParams;
use delcode_core::vt_indel::ShiftedVtParams;
use delcode_core::words::{BinaryWord, Limits, QaryWord, Word};
use statrs::distribution::{Binomial, ChiSquared, ContinuousCDF, Discrete};

fn spec(kind: ChannelKind, seed: u64) -> ChannelSpec {
    ChannelSpec::new(kind, seed).unwrap()
}

fn ones(n: usize) -> BinaryWord {
    BinaryWord::new(vec![1; n]).unwrap()
}

#[test]
fn channel_output_is_reproducible() {
    let x = BinaryWord::new((0..64).map(|i| (i * 7 % 3 == 0) as u8).collect()).unwrap();
    for kind in [
        ChannelKind::Bdc { alpha: 0.3 },
        ChannelKind::SingleDeletion,
        ChannelKind::SingleInsertion,
        ChannelKind::SingleSubstitution,
        ChannelKind::Burst { s: 4 },
    ] {
        let s = spec(kind, 0xDEAD_BEEF);
        for trial in 0..20 {
            assert_eq!(channels::transmit(&x, &s, trial), channels::transmit(&x, &s, trial));
        }
        let distinct: std::collections::BTreeSet<_> = (0..20).map(|t| channels::transmit(&x, &s, t)).collect();
        assert!(distinct.len() > 1, "{kind:?} ignores the trial index");
    }
}

#[test]
fn experiment_is_reproducible() {
    let codec = Codec::Vt(VtParams::new(31, 0).unwrap());
    let s = spec(ChannelKind::Bdc { alpha: 0.05 }, 7);
    let first = channels::run_experiment(&codec, &s, 2000).unwrap();
    let second = channels::run_experiment(&codec, &s, 2000).unwrap();
    assert_eq!(format!("{first:?}"), format!("{second:?}"));
    assert!(first.success_rate > 0.0 && first.success_rate < 1.0);
    assert_eq!(first.successes + first.failures, first.trials);
    assert_eq!(first.transcripts.len() as u64, first.failures);
    assert!(first.transcripts.windows(2).all(|w| w[0].trial < w[1].trial));
}

#[test]
fn bdc_mean_length_concentrates() {
    let x = ones(100);
    let s = spec(ChannelKind::Bdc { alpha: 0.5 }, 1);
    let total: usize = (0..10_000).map(|t| channels::transmit(&x, &s, t).len()).sum();
    let mean = total as f64 / 10_000.0;
    assert!((48.5..=51.5).contains(&mean), "{mean}");
}

#[test]
fn bdc_length_is_binomial() {
    let n = 100u64;
    let trials = 10_000u64;
    for alpha in [0.1, 0.5, 0.9] {
        let s = spec(ChannelKind::Bdc { alpha }, 2024);
        let mut counts = vec![0u64; n as usize + 1];
        for t in 0..trials {
            counts[channels::transmit(&ones(n as usize), &s, t).len()] += 1;
        }
        let model = Binomial::new(1.0 - alpha, n).unwrap();
        // Pool adjacent lengths until each bin expects at least five hits.
        let mut bins: Vec<(f64, f64)> = Vec::new();
        let (mut obs, mut exp) = (0.0, 0.0);
        for (k, &c) in counts.iter().enumerate() {
            obs += c as f64;
            exp += model.pmf(k as u64) * trials as f64;
            if exp >= 5.0 {
                bins.push((obs, exp));
                (obs, exp) = (0.0, 0.0);
            }
        }
        if let Some(last) = bins.last_mut() {
            last.0 += obs;
            last.1 += exp;
        }
        let stat: f64 = bins.iter().map(|(o, e)| (o - e).powi(2) / e).sum();
        let critical = ChiSquared::new((bins.len() - 1) as f64).unwrap().inverse_cdf(0.999);
        assert!(stat < critical, "alpha={alpha}: {stat} >= {critical}");
    }
}

#[test]
fn guaranteed_codecs_never_fail() {
    let cases = [
        (Codec::Vt(VtParams::new(31, 0).unwrap()), ChannelKind::SingleDeletion),
        (Codec::Vt(VtParams::new(20, 3).unwrap()), ChannelKind::SingleInsertion),
        (Codec::ShiftedVt(ShiftedVtParams::new(12, 5).unwrap()), ChannelKind::SingleSubstitution),
        (Codec::ShiftedVt(ShiftedVtParams::new(12, 5).unwrap()), ChannelKind::SingleDeletion),
        (Codec::ShiftedVt(ShiftedVtParams::new(12, 5).unwrap()), ChannelKind::SingleInsertion),
        (Codec::Tenengolts(TenengoltsParams::new(12, 4, 3, 1).unwrap()), ChannelKind::SingleDeletion),
        (Codec::Tenengolts(TenengoltsParams::new(12, 4, 3, 1).unwrap()), ChannelKind::SingleInsertion),
        (Codec::Burst(BurstParams::new(3, 10, &[0, 4, 9]).unwrap()), ChannelKind::Burst { s: 3 }),
        (Codec::Repetition { k: 16, r: 2 }, ChannelKind::SingleDeletion),
        (Codec::Repetition { k: 16, r: 3 }, ChannelKind::Burst { s: 2 }),
    ];
    for (codec, kind) in cases {
        let report = channels::run_experiment(&codec, &spec(kind, 99), 5000).unwrap();
        assert_eq!(report.success_rate, 1.0, "{codec:?} over {kind:?}: {:?}", report.transcripts.first());
    }
}

#[test]
fn identity_channel_is_all_clean() {
    let codec = Codec::ShiftedVt(ShiftedVtParams::new(10, 0).unwrap());
    let report = channels::run_experiment(&codec, &spec(ChannelKind::Identity, 5), 500).unwrap();
    assert_eq!(report.success_rate, 1.0);
    assert_eq!(report.clean, 500);
}

#[test]
fn mismatched_channels_record_failures() {
    let codec = Codec::Vt(VtParams::new(16, 0).unwrap());
    let report = channels::run_experiment(&codec, &spec(ChannelKind::Burst { s: 3 }, 5), 500).unwrap();
    assert!(report.failures > 0);
    assert!(report.transcripts.iter().all(|t| t.sent.len() == 16 && t.received.len() == 13));
}

#[test]
fn incompatible_requests_are_rejected() {
    let codec = Codec::Vt(VtParams::new(4, 0).unwrap());
    assert!(channels::run_experiment(&codec, &spec(ChannelKind::Burst { s: 5 }, 0), 10).is_err());
    assert!(channels::run_experiment(&codec, &spec(ChannelKind::Identity, 0), 0).is_err());
}

fn deletion_subsets(n: usize, e: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize <= e)
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
        .collect()
}

#[test]
fn repetition_survives_up_to_r_minus_one_deletions() {
    for e in 1..=2 {
        let r = e + 1;
        for k in 0..=5 {
            for x in BinaryWord::all(k, &Limits::default()).unwrap() {
                let coded = channels::repetition_encode(&x, r).unwrap();
                for drop in deletion_subsets(coded.len(), e) {
                    let kept: Vec<u8> = coded
                        .bits()
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| !drop.contains(i))
                        .map(|(_, &b)| b)
                        .collect();
                    let y = BinaryWord::new(kept).unwrap();
                    assert_eq!(channels::repetition_decode(&y, r).unwrap(), x, "x={x} drop={drop:?}");
                }
            }
        }
    }
}

#[test]
fn repetition_examples() {
    let x: BinaryWord = "101".parse().unwrap();
    assert_eq!(channels::repetition_encode(&x, 2).unwrap().to_string(), "110011");
    let y: BinaryWord = "11001".parse().unwrap();
    assert_eq!(channels::repetition_decode(&y, 2).unwrap(), x);
    let q = QaryWord::parse("021", 3).unwrap();
    assert_eq!(channels::repetition_encode(&q, 2).unwrap().to_string(), "002211");
    let too_many: BinaryWord = "101".parse().unwrap();
    assert!(channels::repetition_decode(&too_many, 2).is_err());
}
