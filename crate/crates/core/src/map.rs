//! Total maps between ground sets.

use crate::error::{PlottError, Result};
use crate::ground::{GroundSet, Subset};

/// A total map `source -> target`, one image per source index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetMap {
    source: GroundSet,
    target: GroundSet,
    images: Vec<usize>,
}

impl SetMap {
    pub fn new(source: &GroundSet, target: &GroundSet, images: Vec<usize>) -> Result<Self> {
        if images.len() != source.len() {
            return Err(PlottError::invalid(format!(
                "map has {} images for a source of size {}",
                images.len(),
                source.len()
            )));
        }
        if let Some(&bad) = images.iter().find(|&&y| y >= target.len()) {
            return Err(PlottError::invalid(format!(
                "image index {bad} outside target of size {}",
                target.len()
            )));
        }
        Ok(SetMap {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    /// Builds a map from `(source symbol, target symbol)` pairs; every source
    /// symbol must appear exactly once.
    pub fn from_pairs<'a, I>(source: &GroundSet, target: &GroundSet, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut images = vec![None; source.len()];
        for (s, t) in pairs {
            let i = source
                .index_of(s)
                .ok_or_else(|| PlottError::invalid(format!("unknown source symbol {s:?}")))?;
            let j = target
                .index_of(t)
                .ok_or_else(|| PlottError::invalid(format!("unknown target symbol {t:?}")))?;
            if images[i].replace(j).is_some() {
                return Err(PlottError::invalid(format!("symbol {s:?} mapped twice")));
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, y)| {
                y.ok_or_else(|| {
                    PlottError::invalid(format!("symbol {:?} has no image", source.symbol(i)))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn identity(ground: &GroundSet) -> Self {
        SetMap {
            source: ground.clone(),
            target: ground.clone(),
            images: (0..ground.len()).collect(),
        }
    }

    /// Sends every source symbol to the equally named target symbol.
    pub fn by_name(source: &GroundSet, target: &GroundSet) -> Result<Self> {
        Self::from_pairs(
            source,
            target,
            source.symbols().iter().map(|s| (s.as_str(), s.as_str())),
        )
    }

    pub fn source(&self) -> &GroundSet {
        &self.source
    }

    pub fn target(&self) -> &GroundSet {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `phi(A)`.
    pub fn image(&self, a: Subset) -> Subset {
        a.iter().map(|x| self.images[x]).collect()
    }

    /// `phi^{-1}(B)`.
    pub fn preimage(&self, b: Subset) -> Subset {
        self.images
            .iter()
            .enumerate()
            .filter(|&(_, &y)| b.contains(y))
            .map(|(x, _)| x)
            .collect()
    }

    /// `then ∘ self`.
    pub fn then(&self, then: &SetMap) -> Result<SetMap> {
        self.target.ensure_same(&then.source)?;
        Ok(SetMap {
            source: self.source.clone(),
            target: then.target.clone(),
            images: self.images.iter().map(|&y| then.images[y]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = Subset::EMPTY;
        self.images.iter().all(|&y| {
            let fresh = !seen.contains(y);
            seen = seen.with(y);
            fresh
        })
    }

    pub fn is_surjective(&self) -> bool {
        self.image(self.source.full()) == self.target.full()
    }
}
