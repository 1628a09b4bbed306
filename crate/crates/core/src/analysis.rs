//! Exhaustive checks of the combinatorics behind the codes.
//!
//! Everything here is brute force over small block lengths, written to be
//! obviously correct rather than fast. Results are plain data so the std
//! crate can serialize them into reports.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

use crate::graph::{maximum_independent_set, Graph, MisBudget, SearchStatus};
use crate::tenengolts;
use crate::vt_binary::{self, VtParams};
use crate::words::{deletion_ball, deletion_ball_within, insertion_ball_within, BinaryWord, Limits, QaryWord, Word};
use crate::{Error, Result};

/// `|VT_a(n)|` for every residue.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct SizeDistribution {
    pub n: usize,
    /// `sizes[a] = |VT_a(n)|`.
    pub sizes: Vec<u64>,
    /// Residues attaining the largest size, ascending.
    pub largest: Vec<u64>,
    /// Residues attaining the smallest size, ascending.
    pub smallest: Vec<u64>,
    pub total: u64,
}

impl SizeDistribution {
    pub fn max_size(&self) -> u64 {
        self.sizes.iter().copied().max().unwrap_or(0)
    }

    pub fn min_size(&self) -> u64 {
        self.sizes.iter().copied().min().unwrap_or(0)
    }
}

pub fn size_distribution(n: usize) -> Result<SizeDistribution> {
    size_distribution_within(n, &Limits::default())
}

pub fn size_distribution_within(n: usize, limits: &Limits) -> Result<SizeDistribution> {
    if n == 0 {
        return Err(Error::InvalidArgument("block length must be at least 1"));
    }
    limits.check_len(n)?;
    let m = n as u64 + 1;
    let mut sizes = alloc::vec![0u64; n + 1];
    for mask in 0..1u64 << n {
        let mut sum = 0u64;
        let mut rest = mask;
        while rest != 0 {
            sum += rest.trailing_zeros() as u64 + 1;
            rest &= rest - 1;
        }
        sizes[(sum % m) as usize] += 1;
    }
    let max = *sizes.iter().max().expect("n >= 1");
    let min = *sizes.iter().min().expect("n >= 1");
    let pick = |target: u64| (0..=n as u64).filter(|&a| sizes[a as usize] == target).collect();
    Ok(SizeDistribution {
        n,
        largest: pick(max),
        smallest: pick(min),
        total: sizes.iter().sum(),
        sizes,
    })
}

/// Whether the single-deletion balls of a code tile `{0,1}^(n-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct PartitionCertificate {
    pub n: usize,
    /// Residue when the code is `VT_a(n)`.
    pub a: Option<u64>,
    pub codewords: Vec<BinaryWord>,
    pub disjoint: bool,
    pub covering: bool,
    /// Two codewords and a descendant they share, if any.
    pub overlap: Option<(BinaryWord, BinaryWord, BinaryWord)>,
    /// Smallest word of length `n - 1` no codeword reaches, if any.
    pub uncovered: Option<BinaryWord>,
}

impl PartitionCertificate {
    pub fn is_perfect(&self) -> bool {
        self.disjoint && self.covering
    }
}

pub fn verify_perfect(n: usize, a: u64) -> Result<PartitionCertificate> {
    let params = VtParams::new(n, a)?;
    let code = vt_binary::enumerate(&params)?;
    let mut cert = verify_perfect_code(&code)?;
    cert.a = Some(a);
    Ok(cert)
}

/// Partition check for an arbitrary code of equal-length words.
pub fn verify_perfect_code(code: &[BinaryWord]) -> Result<PartitionCertificate> {
    let Some(first) = code.first() else {
        return Err(Error::InvalidArgument("code is empty"));
    };
    let n = first.len();
    if n == 0 {
        return Err(Error::InvalidArgument("block length must be at least 1"));
    }
    let limits = Limits::default();
    let mut owner: BTreeMap<BinaryWord, &BinaryWord> = BTreeMap::new();
    let mut overlap = None;
    for c in code {
        if c.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: c.len() });
        }
        for d in deletion_ball_within(c, 1, &limits)? {
            match owner.get(&d) {
                Some(&prev) if prev != c => {
                    if overlap.is_none() {
                        overlap = Some((prev.clone(), c.clone(), d.clone()));
                    }
                }
                Some(_) => {}
                None => {
                    owner.insert(d, c);
                }
            }
        }
    }
    let uncovered = BinaryWord::all(n - 1, &limits)?
        .filter(|w| !owner.contains_key(w))
        .min();
    Ok(PartitionCertificate {
        n,
        a: None,
        codewords: code.to_vec(),
        disjoint: overlap.is_none(),
        covering: uncovered.is_none(),
        overlap,
        uncovered,
    })
}

/// Outcome of the optimal-code search.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct MisResult {
    pub n: usize,
    pub e: usize,
    /// Size of `witness`: optimal when `exact`, a lower bound otherwise.
    pub size: usize,
    pub witness: Vec<BinaryWord>,
    pub exact: bool,
    pub nodes: u64,
}

/// Word whose lexicographic rank among `{0,1}^n` is `index`.
fn lex_word(index: u64, n: usize) -> BinaryWord {
    BinaryWord::new((0..n).map(|i| (index >> (n - 1 - i) & 1) as u8).collect()).expect("bits")
}

fn lex_index(w: &BinaryWord) -> usize {
    w.bits().iter().fold(0, |acc, &b| acc << 1 | b as usize)
}

/// The confusability graph on `{0,1}^n`: vertex `i` is the `i`-th word in
/// lexicographic order, edges join words whose `D_e` balls meet.
pub fn confusability_graph(n: usize, e: usize) -> Result<Graph> {
    let limits = Limits::new(16);
    limits.check_len(n)?;
    if e > n {
        return Err(Error::InvalidArgument("cannot delete more symbols than the word holds"));
    }
    let mut by_descendant: BTreeMap<BinaryWord, Vec<usize>> = BTreeMap::new();
    for i in 0..1usize << n {
        for d in deletion_ball_within(&lex_word(i as u64, n), e, &limits)? {
            by_descendant.entry(d).or_default().push(i);
        }
    }
    let mut graph = Graph::new(1 << n);
    for owners in by_descendant.values() {
        for (j, &u) in owners.iter().enumerate() {
            for &v in &owners[j + 1..] {
                graph.add_edge(u, v);
            }
        }
    }
    Ok(graph)
}

/// Largest `e`-deletion-correcting code of length `n`, by exact maximum
/// independent set search on the confusability graph.
///
/// For `e = 1` the search starts from the largest VT code. `abort` is polled
/// during the search; when it fires, the best code found so far is returned
/// with `exact = false`.
pub fn optimal_code_size<F: FnMut() -> bool>(n: usize, e: usize, budget: MisBudget, abort: &mut F) -> Result<MisResult> {
    if n == 0 {
        return Err(Error::InvalidArgument("block length must be at least 1"));
    }
    let graph = confusability_graph(n, e)?;
    let seed: Option<Vec<usize>> = if e == 1 {
        let best_a = size_distribution(n)?.largest[0];
        let code = vt_binary::enumerate(&VtParams::new(n, best_a)?)?;
        Some(code.iter().map(lex_index).collect())
    } else {
        None
    };
    let out = maximum_independent_set(&graph, seed.as_deref(), budget, abort);
    let witness: Vec<BinaryWord> = out.set.iter().map(|&i| lex_word(i as u64, n)).collect();
    Ok(MisResult {
        n,
        e,
        size: witness.len(),
        witness,
        exact: out.status == SearchStatus::Exact,
        nodes: out.nodes,
    })
}

/// A pair of codewords whose corrupted versions collide.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Collision<W> {
    pub first: W,
    pub second: W,
    pub shared: W,
}

/// Words reachable by `deletions` deletions followed by `insertions` insertions.
pub fn indel_ball<W: Word>(w: &W, deletions: usize, insertions: usize) -> Result<BTreeSet<W>> {
    let limits = Limits::default();
    let mut out = BTreeSet::new();
    for d in deletion_ball_within(w, deletions, &limits)? {
        out.extend(insertion_ball_within(&d, insertions, &limits)?);
    }
    Ok(out)
}

/// Checks that no two codewords can be turned into the same word by
/// `deletions` deletions and `insertions` insertions. Returns the first
/// collision found, or `None` when the code separates them.
pub fn verify_indel_lemma<W: Word>(code: &[W], deletions: usize, insertions: usize) -> Result<Option<Collision<W>>> {
    let Some(first) = code.first() else {
        return Ok(None);
    };
    let mut owner: BTreeMap<W, &W> = BTreeMap::new();
    for c in code {
        if c.len() != first.len() {
            return Err(Error::LengthMismatch { expected: first.len(), found: c.len() });
        }
        for d in indel_ball(c, deletions, insertions)? {
            if let Some(&prev) = owner.get(&d) {
                if prev != c {
                    return Ok(Some(Collision { first: prev.clone(), second: c.clone(), shared: d }));
                }
            } else {
                owner.insert(d, c);
            }
        }
    }
    Ok(None)
}

/// How the buggy code's checksum indexes `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum BetaReading {
    /// `sum_{i=1}^{n} i * beta_i`, with `beta_1 = [x_1 != 0]`.
    FromOne,
    /// `sum_{i=2}^{n} i * beta_i`.
    FromTwo,
}

/// Two members of one class whose single-deletion balls intersect.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Counterexample {
    pub x: QaryWord,
    pub y: QaryWord,
    /// Every common descendant, ascending.
    pub shared: Vec<QaryWord>,
    /// The `(a, b)` class both belong to.
    pub class: (u64, u32),
}

/// Class of `x` in the nonzero-indicator code: `(sum i*beta_i mod (n+1), sum x_i mod q)`.
pub fn buggy_class(x: &QaryWord, reading: BetaReading) -> (u64, u32) {
    let n = x.len() as u64;
    let skip = match reading {
        BetaReading::FromOne => 0,
        BetaReading::FromTwo => 1,
    };
    let weighted: u64 = x
        .values()
        .iter()
        .enumerate()
        .skip(skip)
        .filter(|(_, &s)| s != 0)
        .map(|(i, _)| i as u64 + 1)
        .sum();
    (weighted % (n + 1), (x.symbol_sum() % x.q() as u64) as u32)
}

/// Lexicographically first pair `(x, y)`, `x < y`, in the same class with
/// intersecting single-deletion balls.
pub fn first_confusable_pair<F>(n: usize, q: u32, class_of: F) -> Result<Option<Counterexample>>
where
    F: Fn(&QaryWord) -> (u64, u32),
{
    let mut buckets: BTreeMap<((u64, u32), QaryWord), Vec<QaryWord>> = BTreeMap::new();
    for x in QaryWord::all(n, q, &Limits::new(20))? {
        let class = class_of(&x);
        for d in deletion_ball(&x, 1)? {
            let bucket = buckets.entry((class, d)).or_default();
            if bucket.len() < 2 {
                bucket.push(x.clone());
            }
        }
    }
    let best = buckets
        .iter()
        .filter(|(_, words)| words.len() == 2)
        .map(|((class, _), words)| (words[0].clone(), words[1].clone(), *class))
        .min();
    let Some((x, y, class)) = best else {
        return Ok(None);
    };
    let dx = deletion_ball(&x, 1)?;
    let dy = deletion_ball(&y, 1)?;
    let shared = dx.intersection(&dy).cloned().collect();
    Ok(Some(Counterexample { x, y, shared, class }))
}

/// Falsifier results for both readings of the buggy code.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct BuggyReport {
    pub n: usize,
    pub q: u32,
    pub readings: Vec<(BetaReading, Option<Counterexample>)>,
}

impl BuggyReport {
    pub fn any_counterexample(&self) -> bool {
        self.readings.iter().any(|(_, c)| c.is_some())
    }
}

/// Searches every class of the nonzero-indicator code for two members a
/// single deletion can confuse.
pub fn falsify_buggy_nonbinary(n: usize, q: u32) -> Result<BuggyReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("block length must be at least 1"));
    }
    if q < 2 {
        return Err(Error::InvalidArgument("alphabet size must be at least 2"));
    }
    let readings = [BetaReading::FromOne, BetaReading::FromTwo]
        .into_iter()
        .map(|r| Ok((r, first_confusable_pair(n, q, |x| buggy_class(x, r))?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BuggyReport { n, q, readings })
}

/// Same search over Tenengolts classes; `None` means every class corrects
/// one deletion.
pub fn tenengolts_counterexample(n: usize, q: u32) -> Result<Option<Counterexample>> {
    if n < 2 {
        return Err(Error::InvalidArgument("block length must be at least 2"));
    }
    first_confusable_pair(n, q, |x| tenengolts::signature(x).expect("n >= 2"))
}

/// Closed-form bounds on the binary deletion channel capacity, in bits.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct CapacityBounds {
    pub alpha: f64,
    /// `1 - alpha`: the erasure channel is never worse.
    pub erasure_upper: f64,
    /// `0.11 (1 - alpha)`.
    pub lower: f64,
    /// `(1 - alpha) log2(phi)`, stated for `alpha >= 0.5` only.
    pub golden_ratio_upper: Option<f64>,
}

impl CapacityBounds {
    /// Tightest applicable upper bound.
    pub fn best_upper(&self) -> f64 {
        match self.golden_ratio_upper {
            Some(g) => g.min(self.erasure_upper),
            None => self.erasure_upper,
        }
    }
}

pub const GOLDEN_RATIO: f64 = 1.618_033_988_749_895;

pub fn capacity_bounds(alpha: f64) -> Result<CapacityBounds> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidArgument("deletion probability must lie in [0, 1]"));
    }
    let keep = 1.0 - alpha;
    Ok(CapacityBounds {
        alpha,
        erasure_upper: keep,
        lower: 0.11 * keep,
        golden_ratio_upper: (alpha >= 0.5).then(|| keep * libm::log2(GOLDEN_RATIO)),
    })
}

/// Whether `VT_0(n)` is closed under bitwise XOR.
pub fn linearity_check(n: usize) -> Result<bool> {
    let code = vt_binary::enumerate_within(&VtParams::new(n, 0)?, &Limits::new(16))?;
    let masks: BTreeSet<u64> = code.iter().map(BinaryWord::to_mask).collect();
    Ok(masks.iter().all(|&u| masks.iter().all(|&v| masks.contains(&(u ^ v)))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn b(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn size_examples() {
        let d = size_distribution(7).unwrap();
        assert_eq!(d.sizes, vec![16; 8]);
        assert_eq!(d.total, 128);
        assert_eq!(size_distribution(1).unwrap().sizes, vec![1, 1]);
        assert!(size_distribution(0).is_err());
    }

    #[test]
    fn perfect_examples() {
        let cert = verify_perfect(3, 0).unwrap();
        assert!(cert.is_perfect());
        assert_eq!(cert.codewords, vec![b("000"), b("101")]);
        for a in 0..=3 {
            assert!(verify_perfect(3, a).unwrap().is_perfect());
        }
        let cert = verify_perfect_code(&[b("000"), b("111")]).unwrap();
        assert!(cert.disjoint);
        assert!(!cert.covering);
        assert_eq!(cert.uncovered, Some(b("01")));
        let cert = verify_perfect_code(&[b("0101"), b("1010")]).unwrap();
        assert!(!cert.disjoint);
    }

    #[test]
    fn small_optimal_sizes() {
        let sizes: Vec<usize> = (1..=5)
            .map(|n| optimal_code_size(n, 1, MisBudget::default(), &mut || false).unwrap().size)
            .collect();
        assert_eq!(sizes, vec![1, 2, 2, 4, 6]);
    }

    #[test]
    fn indel_examples() {
        let code = vt_binary::enumerate(&VtParams::new(5, 0).unwrap()).unwrap();
        assert_eq!(verify_indel_lemma(&code, 0, 1).unwrap(), None);
        let hit = verify_indel_lemma(&[b("0101"), b("1010")], 1, 0).unwrap().unwrap();
        assert!(hit.shared == b("010") || hit.shared == b("101"));
        assert_eq!(verify_indel_lemma(&[b("0110")], 1, 1).unwrap(), None);
    }

    #[test]
    fn buggy_code_falls_at_n2_q3() {
        let report = falsify_buggy_nonbinary(2, 3).unwrap();
        for (_, found) in &report.readings {
            let c = found.as_ref().unwrap();
            assert_eq!((c.x.to_string(), c.y.to_string()), ("12".into(), "21".into()));
            assert_eq!(c.shared.iter().map(|w| w.to_string()).collect::<Vec<_>>(), vec!["1", "2"]);
        }
        assert_eq!(report.readings[0].1.as_ref().unwrap().class, (0, 0));
        assert_eq!(tenengolts_counterexample(2, 3).unwrap(), None);
    }

    #[test]
    fn bounds_examples() {
        let one = capacity_bounds(1.0).unwrap();
        assert_eq!((one.erasure_upper, one.lower, one.golden_ratio_upper), (0.0, 0.0, Some(0.0)));
        let quarter = capacity_bounds(0.25).unwrap();
        assert_eq!(quarter.golden_ratio_upper, None);
        assert!((quarter.lower - 0.0825).abs() < 1e-15);
        assert!(capacity_bounds(1.5).is_err());
        assert!(capacity_bounds(f64::NAN).is_err());
    }

    #[test]
    fn linearity_examples() {
        assert!(linearity_check(3).unwrap());
        assert!(linearity_check(4).unwrap());
        assert!(!linearity_check(5).unwrap());
    }
}
