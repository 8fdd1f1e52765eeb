//! Integer partitions, compositions, and constrained partition enumeration.
//!
//! A partition is a weakly decreasing sequence of positive integers; a
//! composition keeps the parts in a caller-chosen order. [`PartitionClass`]
//! restricts enumeration to the families this crate works with: all
//! partitions, distinct parts, odd parts, parts congruent to ±1 modulo 4d,
//! parts greater than one, or an arbitrary per-part predicate.
//!
//! Enumeration is streaming: [`PartitionStream`] walks the search tree with
//! an explicit stack of O(n) parts and yields partitions in decreasing
//! lexicographic order, so nothing close to p(n) values is ever resident at
//! once.

use std::collections::BTreeMap;
use std::fmt;
use std::num::NonZeroU32;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive, found 0 at position {0}")]
    ZeroPart(usize),
    #[error("parts must be weakly decreasing, violated at position {0}")]
    NotWeaklyDecreasing(usize),
    #[error("invalid part {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// A weakly decreasing sequence of positive integers.
///
/// The weight (sum of parts) and the number of odd parts are computed at
/// construction and cached; both are used constantly by the index
/// statistics.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    weight: u64,
    odd_parts: u32,
}

impl Partition {
    /// The empty partition, the only partition of 0.
    pub fn empty() -> Self {
        Partition { parts: Vec::new(), weight: 0, odd_parts: 0 }
    }

    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(PartitionError::ZeroPart(i));
            }
            if i > 0 && parts[i - 1] < p {
                return Err(PartitionError::NotWeaklyDecreasing(i));
            }
        }
        Ok(Self::new_unchecked(parts))
    }

    fn new_unchecked(parts: Vec<u32>) -> Self {
        let weight = parts.iter().map(|&p| u64::from(p)).sum();
        let odd_parts = parts.iter().filter(|&&p| p % 2 == 1).count() as u32;
        Partition { parts, weight, odd_parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Number of odd parts. Always congruent to the weight mod 2.
    pub fn odd_part_count(&self) -> u32 {
        self.odd_parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of each part size, keyed by part.
    pub fn part_multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut freq = BTreeMap::new();
        for &p in &self.parts {
            *freq.entry(p).or_insert(0) += 1;
        }
        freq
    }

    pub fn to_composition(&self) -> Composition {
        Composition { parts: self.parts.clone(), weight: self.weight }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts, ",")
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses the comma-separated text form, e.g. `3,2,1,1`. The empty
    /// string denotes the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Partition::new(parse_parts(s, &[','])?)
    }
}

/// An ordered sequence of positive integers. Unlike a partition the parts
/// need not decrease.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<u32>,
    weight: u64,
}

impl Composition {
    pub fn empty() -> Self {
        Composition { parts: Vec::new(), weight: 0 }
    }

    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(PartitionError::ZeroPart(i));
        }
        let weight = parts.iter().map(|&p| u64::from(p)).sum();
        Ok(Composition { parts, weight })
    }

    /// The one-block composition `(n)`; empty when n = 0.
    pub fn single(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Composition { parts: vec![n], weight: u64::from(n) }
        }
    }

    /// The all-ones composition `1^n`.
    pub fn all_ones(n: u64) -> Self {
        Composition { parts: vec![1; n as usize], weight: n }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn odd_part_count(&self) -> u64 {
        self.parts.iter().filter(|&&p| p % 2 == 1).count() as u64
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts, "|")
    }
}

impl FromStr for Composition {
    type Err = PartitionError;

    /// Accepts both the comma form `4,3` and the block form `4|3`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Composition::new(parse_parts(s, &[',', '|'])?)
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        p.to_composition()
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32], sep: &str) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_parts(s: &str, seps: &[char]) -> Result<Vec<u32>, PartitionError> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(|c| seps.contains(&c))
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<u32>().map_err(|e| PartitionError::Parse {
                text: tok.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

/// A family of partitions cut out by a per-part rule, plus the distinctness
/// flag for partitions into distinct parts.
#[derive(Clone)]
pub enum PartitionClass {
    /// Every partition.
    All,
    /// All parts distinct.
    Distinct,
    /// All parts odd.
    OddParts,
    /// All parts congruent to ±1 modulo 4d. With d = 1 this is exactly the
    /// odd parts.
    OddModFourD(NonZeroU32),
    /// No part equal to 1.
    NoOnes,
    /// Arbitrary per-part test.
    Predicate(Arc<dyn Fn(u32) -> bool + Send + Sync>),
}

impl fmt::Debug for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionClass::All => f.write_str("All"),
            PartitionClass::Distinct => f.write_str("Distinct"),
            PartitionClass::OddParts => f.write_str("OddParts"),
            PartitionClass::OddModFourD(d) => write!(f, "OddModFourD({d})"),
            PartitionClass::NoOnes => f.write_str("NoOnes"),
            PartitionClass::Predicate(_) => f.write_str("Predicate(..)"),
        }
    }
}

impl PartitionClass {
    pub fn odd_mod_four_d(d: u32) -> Self {
        PartitionClass::OddModFourD(NonZeroU32::new(d).expect("d must be positive"))
    }

    pub fn predicate(f: impl Fn(u32) -> bool + Send + Sync + 'static) -> Self {
        PartitionClass::Predicate(Arc::new(f))
    }

    /// Whether a single part is allowed in this class.
    pub fn admits(&self, part: u32) -> bool {
        debug_assert!(part > 0);
        match self {
            PartitionClass::All | PartitionClass::Distinct => true,
            PartitionClass::OddParts => part % 2 == 1,
            PartitionClass::OddModFourD(d) => {
                let m = 4 * d.get();
                let r = part % m;
                r == 1 || r == m - 1
            }
            PartitionClass::NoOnes => part >= 2,
            PartitionClass::Predicate(f) => f(part),
        }
    }

    fn requires_distinct(&self) -> bool {
        matches!(self, PartitionClass::Distinct)
    }

    /// Largest admissible part ≤ `cap`, or None when no part fits.
    fn largest_admissible_at_most(&self, cap: u32) -> Option<u32> {
        if cap == 0 {
            return None;
        }
        match self {
            PartitionClass::All | PartitionClass::Distinct => Some(cap),
            PartitionClass::OddParts => Some(if cap % 2 == 1 { cap } else { cap - 1 }),
            PartitionClass::OddModFourD(d) => {
                let m = 4 * d.get();
                let r = cap % m;
                let base = cap - r;
                if r == m - 1 {
                    Some(cap)
                } else if r >= 1 {
                    Some(base + 1)
                } else if base >= m {
                    // cap ≡ 0: step down to the previous class, base - 1 ≡ m-1.
                    Some(base - 1)
                } else {
                    None
                }
            }
            PartitionClass::NoOnes => {
                if cap >= 2 {
                    Some(cap)
                } else {
                    None
                }
            }
            PartitionClass::Predicate(f) => (1..=cap).rev().find(|&p| f(p)),
        }
    }
}

enum StreamState {
    Descend,
    Backtrack,
    Done,
}

/// Streaming enumeration of the partitions of `n` inside a class, in
/// decreasing lexicographic order of the part vectors.
///
/// The stream holds only the current search path (at most n parts). It is a
/// plain iterator: independent streams may run on different threads, a
/// single stream is pulled sequentially.
pub struct PartitionStream {
    class: PartitionClass,
    target: u64,
    stack: Vec<u32>,
    remaining: u64,
    odd_count: u32,
    state: StreamState,
}

impl PartitionStream {
    fn new(n: u64, class: PartitionClass) -> Self {
        assert!(n <= u64::from(u32::MAX), "weight {n} too large to enumerate");
        PartitionStream {
            class,
            target: n,
            stack: Vec::new(),
            remaining: n,
            odd_count: 0,
            state: StreamState::Descend,
        }
    }

    fn push(&mut self, p: u32) {
        self.stack.push(p);
        self.remaining -= u64::from(p);
        self.odd_count += p % 2;
    }

    fn pop(&mut self) -> Option<u32> {
        let p = self.stack.pop()?;
        self.remaining += u64::from(p);
        self.odd_count -= p % 2;
        Some(p)
    }

    /// Cap on the next part: the remaining weight and the weak (or strict,
    /// for distinct parts) decrease under the last chosen part.
    fn next_part_cap(&self) -> u32 {
        let mut cap = self.remaining.min(u64::from(u32::MAX)) as u32;
        if let Some(&last) = self.stack.last() {
            let bound = if self.class.requires_distinct() { last - 1 } else { last };
            cap = cap.min(bound);
        }
        cap
    }

    /// Advances to the next partition and exposes it as a borrowed slice.
    /// Used by [`for_each_partition`] to avoid an allocation per partition.
    fn advance(&mut self) -> Option<(&[u32], u32)> {
        loop {
            match self.state {
                StreamState::Done => return None,
                StreamState::Descend => {
                    if self.remaining == 0 {
                        self.state = StreamState::Backtrack;
                        return Some((&self.stack, self.odd_count));
                    }
                    match self.class.largest_admissible_at_most(self.next_part_cap()) {
                        Some(p) => self.push(p),
                        None => self.state = StreamState::Backtrack,
                    }
                }
                StreamState::Backtrack => match self.pop() {
                    None => {
                        self.state = StreamState::Done;
                        return None;
                    }
                    Some(p) => {
                        if let Some(next) = self.class.largest_admissible_at_most(p - 1) {
                            self.push(next);
                            self.state = StreamState::Descend;
                        }
                    }
                },
            }
        }
    }
}

impl Iterator for PartitionStream {
    type Item = Partition;

    fn next(&mut self) -> Option<Self::Item> {
        let target = self.target;
        let (parts, odd) = self.advance()?;
        Some(Partition { parts: parts.to_vec(), weight: target, odd_parts: odd })
    }
}

/// All partitions of `n` whose parts lie in `class`, each exactly once, in
/// decreasing lexicographic order. For n = 0 the stream yields exactly the
/// empty partition, whatever the class.
pub fn partitions_of(n: u64, class: &PartitionClass) -> PartitionStream {
    PartitionStream::new(n, class.clone())
}

/// Visits every partition of `n` in `class` as `(parts, odd_part_count)`
/// without allocating a [`Partition`] per element. Same order as
/// [`partitions_of`].
pub fn for_each_partition<F>(n: u64, class: &PartitionClass, mut visit: F)
where
    F: FnMut(&[u32], u32),
{
    let mut stream = PartitionStream::new(n, class.clone());
    while let Some((parts, odd)) = stream.advance() {
        visit(parts, odd);
    }
}

/// Number of partitions of `n` in `class`, by the standard part-by-part
/// dynamic program rather than by walking the stream.
pub fn count_partitions(n: u64, class: &PartitionClass) -> BigUint {
    let n = usize::try_from(n).expect("weight too large to count");
    let mut table = vec![BigUint::ZERO; n + 1];
    table[0] = BigUint::from(1u32);
    let parts = (1..=n as u32).filter(|&p| class.admits(p));
    if class.requires_distinct() {
        for p in parts {
            let p = p as usize;
            for j in (p..=n).rev() {
                let add = table[j - p].clone();
                table[j] += add;
            }
        }
    } else {
        for p in parts {
            let p = p as usize;
            for j in p..=n {
                let add = table[j - p].clone();
                table[j] += add;
            }
        }
    }
    table.pop().expect("table is nonempty")
}
