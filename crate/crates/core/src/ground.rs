//! Ground sets and bitmask subsets.

use std::collections::HashMap;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};
use std::sync::Arc;

use crate::error::{PlottError, Result};

/// Default upper bound on the number of symbols in a ground set.
pub const DEFAULT_CAP: usize = 16;

/// Absolute upper bound; a choice table on this many symbols has 2^24 entries.
pub const HARD_CAP: usize = 24;

/// A subset of a ground set, stored as a bitmask over symbol indices.
///
/// A `Subset` does not know which ground set it belongs to; operations that
/// receive one from the outside check its width with [`GroundSet::check`].
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    pub const fn singleton(index: usize) -> Self {
        Subset(1 << index)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(Subset::EMPTY, |acc, i| acc.with(i))
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, index: usize) -> bool {
        index < 32 && self.0 & (1 << index) != 0
    }

    #[must_use]
    pub const fn with(self, index: usize) -> Self {
        Subset(self.0 | (1 << index))
    }

    #[must_use]
    pub const fn without(self, index: usize) -> Self {
        Subset(self.0 & !(1 << index))
    }

    #[must_use]
    pub const fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    #[must_use]
    pub const fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    #[must_use]
    pub const fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest member index, if any.
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// All subsets of `self`, in ascending bitmask order.
    pub fn subsets(self) -> Submasks {
        Submasks {
            mask: self.0,
            next: Some(0),
        }
    }

    pub(crate) const fn idx(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        self.union(rhs)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        self.intersection(rhs)
    }
}

impl Sub for Subset {
    type Output = Subset;
    fn sub(self, rhs: Subset) -> Subset {
        self.difference(rhs)
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

pub struct Members(u32);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

pub struct Submasks {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // next submask in increasing order
            Some(((cur | !self.mask).wrapping_add(1)) & self.mask)
        };
        Some(Subset(cur))
    }
}

/// An ordered finite alphabet. Symbol order fixes the bit assigned to each
/// symbol and every canonical ordering downstream.
#[derive(Clone)]
pub struct GroundSet {
    symbols: Arc<[String]>,
    index: Arc<HashMap<String, usize>>,
}

impl GroundSet {
    /// Builds a ground set with the default cap of [`DEFAULT_CAP`] symbols.
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_cap(symbols, DEFAULT_CAP)
    }

    pub fn with_cap<I, S>(symbols: I, cap: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        let cap = cap.min(HARD_CAP);
        if symbols.len() > cap {
            return Err(PlottError::Capacity {
                size: symbols.len(),
                cap,
            });
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() {
                return Err(PlottError::invalid("empty symbol"));
            }
            if index.insert(s.clone(), i).is_some() {
                return Err(PlottError::invalid(format!("duplicate symbol {s:?}")));
            }
        }
        Ok(GroundSet {
            symbols: symbols.into(),
            index: Arc::new(index),
        })
    }

    /// One-character symbols, e.g. `GroundSet::from_chars("abc")`.
    pub fn from_chars(chars: &str) -> Result<Self> {
        Self::new(chars.chars().map(String::from))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn symbol(&self, index: usize) -> &str {
        &self.symbols[index]
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.index.get(symbol).copied()
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    /// Number of subsets, `2^len`.
    pub fn power_len(&self) -> usize {
        1usize << self.len()
    }

    /// All subsets in ascending bitmask order.
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        (0..self.power_len() as u32).map(Subset::from_bits)
    }

    pub fn check(&self, subset: Subset) -> Result<()> {
        if subset.is_subset_of(self.full()) {
            Ok(())
        } else {
            Err(PlottError::invalid(format!(
                "mask {:#b} exceeds ground width {}",
                subset.bits(),
                self.len()
            )))
        }
    }

    pub fn subset<'a, I>(&self, symbols: I) -> Result<Subset>
    where
        I: IntoIterator<Item = &'a str>,
    {
        symbols.into_iter().try_fold(Subset::EMPTY, |acc, s| {
            self.index_of(s)
                .map(|i| acc.with(i))
                .ok_or_else(|| PlottError::invalid(format!("unknown symbol {s:?}")))
        })
    }

    /// Subset of one-character symbols, e.g. `ground.subset_of_chars("ab")`.
    pub fn subset_of_chars(&self, chars: &str) -> Result<Subset> {
        let owned: Vec<String> = chars.chars().map(String::from).collect();
        self.subset(owned.iter().map(String::as_str))
    }

    /// Symbols of `subset` in ground order.
    pub fn names(&self, subset: Subset) -> Vec<&str> {
        subset.iter().map(|i| self.symbol(i)).collect()
    }

    pub fn same_as(&self, other: &GroundSet) -> bool {
        Arc::ptr_eq(&self.symbols, &other.symbols) || self.symbols == other.symbols
    }

    pub(crate) fn ensure_same(&self, other: &GroundSet) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(PlottError::GroundMismatch(format!(
                "{:?} vs {:?}",
                self.symbols, other.symbols
            )))
        }
    }

    pub fn display(&self, subset: Subset) -> String {
        format!("{{{}}}", self.names(subset).join(","))
    }
}

impl PartialEq for GroundSet {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for GroundSet {}

impl std::hash::Hash for GroundSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.symbols.hash(state);
    }
}

impl fmt::Debug for GroundSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.symbols.iter()).finish()
    }
}
