//! Finite partial orders stored as domination rows.

use crate::error::{PlottError, Result};
use crate::ground::{GroundSet, Subset};
use crate::word::SimpleWord;

/// A partial order on a ground set. Row `x` is the set of elements that `x`
/// weakly dominates, so `x` is always in its own row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialOrder {
    ground: GroundSet,
    dominates: Vec<Subset>,
}

impl PartialOrder {
    /// Validates reflexivity, transitivity and antisymmetry.
    pub fn new(ground: &GroundSet, dominates: Vec<Subset>) -> Result<Self> {
        if dominates.len() != ground.len() {
            return Err(PlottError::invalid(format!(
                "order has {} rows for a ground of size {}",
                dominates.len(),
                ground.len()
            )));
        }
        for (x, &row) in dominates.iter().enumerate() {
            ground.check(row)?;
            if !row.contains(x) {
                return Err(PlottError::invalid(format!(
                    "order is not reflexive at {:?}",
                    ground.symbol(x)
                )));
            }
            for y in row.iter() {
                if !dominates[y].is_subset_of(row) {
                    return Err(PlottError::invalid(format!(
                        "order is not transitive through {:?} ≥ {:?}",
                        ground.symbol(x),
                        ground.symbol(y)
                    )));
                }
                if y != x && dominates[y].contains(x) {
                    return Err(PlottError::invalid(format!(
                        "order is not antisymmetric: {:?} and {:?} dominate each other",
                        ground.symbol(x),
                        ground.symbol(y)
                    )));
                }
            }
        }
        Ok(PartialOrder {
            ground: ground.clone(),
            dominates,
        })
    }

    /// Reflexive-transitive closure of the given `(upper, lower)` pairs.
    pub fn from_relations<I>(ground: &GroundSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = ground.len();
        let mut rows: Vec<Subset> = (0..n).map(Subset::singleton).collect();
        for (hi, lo) in pairs {
            if hi >= n || lo >= n {
                return Err(PlottError::invalid("relation index outside ground"));
            }
            rows[hi] = rows[hi].with(lo);
        }
        // Warshall
        for k in 0..n {
            for x in 0..n {
                if rows[x].contains(k) {
                    rows[x] = rows[x] | rows[k];
                }
            }
        }
        Self::new(ground, rows)
    }

    pub fn from_symbol_relations<'a, I>(ground: &GroundSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let idx = |s: &str| {
            ground
                .index_of(s)
                .ok_or_else(|| PlottError::invalid(format!("unknown symbol {s:?}")))
        };
        let pairs = pairs
            .into_iter()
            .map(|(a, b)| Ok((idx(a)?, idx(b)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_relations(ground, pairs)
    }

    /// The antichain: every element is maximal in every menu.
    pub fn discrete(ground: &GroundSet) -> Self {
        PartialOrder {
            ground: ground.clone(),
            dominates: (0..ground.len()).map(Subset::singleton).collect(),
        }
    }

    /// The linear order `w(1) > w(2) > ..` of a complete word.
    pub fn from_word(word: &SimpleWord) -> Result<Self> {
        if !word.is_complete() {
            return Err(PlottError::invalid(format!(
                "word {word} does not list every symbol"
            )));
        }
        let ground = word.ground();
        let mut rows = vec![Subset::EMPTY; ground.len()];
        let mut below = Subset::EMPTY;
        for &x in word.letters().iter().rev() {
            below = below.with(x);
            rows[x] = below;
        }
        Ok(PartialOrder {
            ground: ground.clone(),
            dominates: rows,
        })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn rows(&self) -> &[Subset] {
        &self.dominates
    }

    /// `x ≥ y`.
    pub fn dominates(&self, x: usize, y: usize) -> bool {
        self.dominates[x].contains(y)
    }

    /// Elements weakly above `y` (its principal filter).
    pub fn filter(&self, y: usize) -> Subset {
        (0..self.ground.len())
            .filter(|&x| self.dominates[x].contains(y))
            .collect()
    }

    /// Elements of `menu` not strictly dominated by another element of `menu`.
    pub fn maximal(&self, menu: Subset) -> Subset {
        menu.iter()
            .filter(|&x| {
                menu.iter()
                    .all(|y| y == x || !self.dominates[y].contains(x))
            })
            .collect()
    }

    /// Hasse diagram edges `(upper, lower)`, sorted by upper then lower index.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.ground.len() {
            let strict = self.dominates[x].without(x);
            for y in strict.iter() {
                let between = strict
                    .without(y)
                    .iter()
                    .any(|z| self.dominates[z].contains(y));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }
}
