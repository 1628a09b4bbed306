use core::fmt;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

/// Which single edit a decoder undid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum EditKind {
    None,
    Deletion,
    Insertion,
    /// Asymmetric `1 -> 0` flip.
    ZFlip,
    Substitution,
}

impl fmt::Display for EditKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EditKind::None => "none",
            EditKind::Deletion => "deletion",
            EditKind::Insertion => "insertion",
            EditKind::ZFlip => "z-flip",
            EditKind::Substitution => "substitution",
        })
    }
}

/// Closed interval of 1-based positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn point(p: usize) -> Self {
        Interval { lo: p, hi: p }
    }

    pub fn contains(&self, p: usize) -> bool {
        self.lo <= p && p <= self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Result of a successful decode.
///
/// `positions` is where the edit may have happened. For deletions it is the
/// run of the restored symbol in `codeword`; for insertions the run of the
/// removed symbol in the received word; for flips a single position. Inside a
/// run the exact location is not observable.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct DecodeOutcome<W> {
    pub codeword: W,
    pub kind: EditKind,
    /// Symbol restored (deletion, flip) or removed (insertion). `None` when clean.
    pub value: Option<u32>,
    pub positions: Option<Interval>,
}

impl<W> DecodeOutcome<W> {
    pub fn clean(codeword: W) -> Self {
        DecodeOutcome { codeword, kind: EditKind::None, value: None, positions: None }
    }
}
