//! Simple words: repetition-free sequences of ground-set symbols.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{PlottError, Result};
use crate::ground::{GroundSet, Subset};

/// A simple word `x(1) x(2) .. x(k)`, read as the linear order
/// `x(1) > x(2) > .. > x(k)` on its support.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleWord {
    ground: GroundSet,
    letters: Vec<usize>,
    support: Subset,
}

impl SimpleWord {
    pub fn new(ground: &GroundSet, letters: Vec<usize>) -> Result<Self> {
        let mut support = Subset::EMPTY;
        for &x in &letters {
            if x >= ground.len() {
                return Err(PlottError::invalid(format!(
                    "letter index {x} outside ground of size {}",
                    ground.len()
                )));
            }
            if support.contains(x) {
                return Err(PlottError::invalid(format!(
                    "letter {:?} repeated in word",
                    ground.symbol(x)
                )));
            }
            support = support.with(x);
        }
        Ok(SimpleWord {
            ground: ground.clone(),
            letters,
            support,
        })
    }

    pub fn empty(ground: &GroundSet) -> Self {
        SimpleWord {
            ground: ground.clone(),
            letters: Vec::new(),
            support: Subset::EMPTY,
        }
    }

    pub fn from_symbols<'a, I>(ground: &GroundSet, symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let letters = symbols
            .into_iter()
            .map(|s| {
                ground
                    .index_of(s)
                    .ok_or_else(|| PlottError::invalid(format!("unknown symbol {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, letters)
    }

    /// Word over one-character symbols, e.g. `SimpleWord::parse(&g, "abc")`.
    pub fn parse(ground: &GroundSet, text: &str) -> Result<Self> {
        let owned: Vec<String> = text.chars().map(String::from).collect();
        Self::from_symbols(ground, owned.iter().map(String::as_str))
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The set of letters occurring in the word.
    pub fn support(&self) -> Subset {
        self.support
    }

    /// Whether the word uses every symbol of its ground set.
    pub fn is_complete(&self) -> bool {
        self.len() == self.ground.len()
    }

    /// First letter of the word lying in `menu`.
    pub fn first_in(&self, menu: Subset) -> Option<usize> {
        self.letters.iter().copied().find(|&x| menu.contains(x))
    }

    /// Prefix order: `self` is a (not necessarily proper) prefix of `other`.
    pub fn is_prefix_of(&self, other: &SimpleWord) -> bool {
        self.ground == other.ground && other.letters.starts_with(&self.letters)
    }

    pub fn prefix(&self, len: usize) -> SimpleWord {
        let letters = self.letters[..len].to_vec();
        let support = Subset::from_indices(letters.iter().copied());
        SimpleWord {
            ground: self.ground.clone(),
            letters,
            support,
        }
    }

    /// All prefixes, shortest (the empty word) first.
    pub fn prefixes(&self) -> impl Iterator<Item = SimpleWord> + '_ {
        (0..=self.len()).map(move |k| self.prefix(k))
    }

    /// Appends a letter not yet in the word.
    pub(crate) fn pushed(&self, x: usize) -> SimpleWord {
        debug_assert!(!self.support.contains(x));
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.extend_from_slice(&self.letters);
        letters.push(x);
        SimpleWord {
            ground: self.ground.clone(),
            letters,
            support: self.support.with(x),
        }
    }

    pub fn symbols(&self) -> Vec<&str> {
        self.letters
            .iter()
            .map(|&x| self.ground.symbol(x))
            .collect()
    }

    /// Canonical order: shorter words first, then index-lexicographic.
    pub fn canonical_cmp(&self, other: &SimpleWord) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl fmt::Display for SimpleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let single = self.ground.symbols().iter().all(|s| s.chars().count() == 1);
        let sep = if single { "" } else { " " };
        f.write_str(&self.symbols().join(sep))
    }
}

impl fmt::Debug for SimpleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Every simple word over `ground`, in canonical order.
pub fn all_words(ground: &GroundSet) -> Vec<SimpleWord> {
    let mut out = vec![SimpleWord::empty(ground)];
    let mut frontier = out.clone();
    for _ in 0..ground.len() {
        let mut next = Vec::new();
        for w in &frontier {
            for x in (ground.full() - w.support()).iter() {
                next.push(w.pushed(x));
            }
        }
        next.sort_by(SimpleWord::canonical_cmp);
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// A duplicate-free set of simple words over one ground set, kept in
/// canonical order (length, then index-lexicographic).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WordSet {
    ground: GroundSet,
    words: Vec<SimpleWord>,
}

impl WordSet {
    pub fn new<I: IntoIterator<Item = SimpleWord>>(ground: &GroundSet, words: I) -> Result<Self> {
        let mut words: Vec<SimpleWord> = words.into_iter().collect();
        if let Some(w) = words.iter().find(|w| w.ground() != ground) {
            return Err(PlottError::GroundMismatch(format!(
                "word {w} is over {:?}, expected {:?}",
                w.ground(),
                ground
            )));
        }
        words.sort_by(SimpleWord::canonical_cmp);
        words.dedup();
        Ok(WordSet {
            ground: ground.clone(),
            words,
        })
    }

    pub(crate) fn from_unsorted(ground: &GroundSet, mut words: Vec<SimpleWord>) -> Self {
        words.sort_by(SimpleWord::canonical_cmp);
        words.dedup();
        WordSet {
            ground: ground.clone(),
            words,
        }
    }

    pub fn empty(ground: &GroundSet) -> Self {
        WordSet {
            ground: ground.clone(),
            words: Vec::new(),
        }
    }

    /// Convenience for one-character symbols: `WordSet::parse(&g, &["", "a", "ab"])`.
    pub fn parse(ground: &GroundSet, texts: &[&str]) -> Result<Self> {
        let words = texts
            .iter()
            .map(|t| SimpleWord::parse(ground, t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(ground, words)
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, SimpleWord> {
        self.words.iter()
    }

    pub fn words(&self) -> &[SimpleWord] {
        &self.words
    }

    pub fn contains(&self, w: &SimpleWord) -> bool {
        w.ground() == &self.ground
            && self
                .words
                .binary_search_by(|probe| probe.canonical_cmp(w))
                .is_ok()
    }

    pub fn is_subset_of(&self, other: &WordSet) -> bool {
        self.words.iter().all(|w| other.contains(w))
    }

    pub fn union(&self, other: &WordSet) -> Result<WordSet> {
        self.ground.ensure_same(&other.ground)?;
        let all = self.words.iter().chain(&other.words).cloned().collect();
        Ok(Self::from_unsorted(&self.ground, all))
    }

    pub fn intersection(&self, other: &WordSet) -> Result<WordSet> {
        self.ground.ensure_same(&other.ground)?;
        let words = self
            .words
            .iter()
            .filter(|w| other.contains(w))
            .cloned()
            .collect();
        Ok(WordSet {
            ground: self.ground.clone(),
            words,
        })
    }

    /// Every prefix of every member is a member.
    pub fn is_prefix_closed(&self) -> bool {
        self.words
            .iter()
            .all(|w| w.is_empty() || self.contains(&w.prefix(w.len() - 1)))
    }

    /// Members that are not a proper prefix of another member.
    pub fn prefix_maximal(&self) -> WordSet {
        let words = self
            .words
            .iter()
            .filter(|w| {
                !self
                    .words
                    .iter()
                    .any(|v| v.len() > w.len() && w.is_prefix_of(v))
            })
            .cloned()
            .collect();
        WordSet {
            ground: self.ground.clone(),
            words,
        }
    }
}

impl<'a> IntoIterator for &'a WordSet {
    type Item = &'a SimpleWord;
    type IntoIter = std::slice::Iter<'a, SimpleWord>;

    fn into_iter(self) -> Self::IntoIter {
        self.words.iter()
    }
}

impl fmt::Debug for WordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.words.iter()).finish()
    }
}
