//! Prefix-closed word languages whose one-letter extensions depend only on
//! the support of the word being extended.
//!
//! Basements have this shape: for `w` in `Bas(f)`, the word `wx` is in
//! `Bas(f)` exactly when `x ∈ f(A)` for every menu `A` that contains `x`
//! and misses `supp(w)`. So a basement is described by the table
//! `extensions[S]` (letters that may follow any basement word with support
//! `S`) together with the set of supports actually reached from the empty
//! word. Joins, intersections and pullbacks of basements are computed on
//! these tables without listing words.

use crate::choice::ChoiceFunction;
use crate::ground::{GroundSet, Subset};
use crate::map::SetMap;
use crate::word::{SimpleWord, WordSet};

#[derive(Clone, Debug)]
pub(crate) struct Language {
    ground: GroundSet,
    /// Letters that may extend a word of support `S`, indexed by `S`.
    extensions: Vec<Subset>,
}

impl Language {
    /// The basement of `f`.
    pub(crate) fn basement_of(f: &ChoiceFunction) -> Self {
        let ground = f.ground();
        let full = ground.full();
        let stable = always_chosen(f);
        let extensions = ground.subsets().map(|s| stable[(full - s).idx()]).collect();
        Language {
            ground: ground.clone(),
            extensions,
        }
    }

    /// Words `w` over `phi.source()` whose image `phi♯(w)` lies in `target`.
    ///
    /// Extending `w` by `x` leaves `phi♯(w)` unchanged when `phi(x)` already
    /// occurs in it; otherwise `phi♯(w)` is extended by `phi(x)`.
    pub(crate) fn pullback(phi: &SetMap, target: &Language) -> Self {
        let source = phi.source();
        let extensions = source
            .subsets()
            .map(|s| {
                let hit = phi.image(s);
                let allowed = hit | target.extensions[hit.idx()];
                phi.preimage(allowed) - s
            })
            .collect();
        Language {
            ground: source.clone(),
            extensions,
        }
    }

    pub(crate) fn intersect(&self, other: &Language) -> Self {
        debug_assert!(self.ground == other.ground);
        Language {
            ground: self.ground.clone(),
            extensions: self
                .extensions
                .iter()
                .zip(&other.extensions)
                .map(|(&a, &b)| a & b)
                .collect(),
        }
    }

    /// Supports of the words of the language, as a membership table.
    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.ground.power_len()];
        seen[0] = true;
        // adding a letter increases the mask, so one ascending pass suffices
        for s in 0..seen.len() {
            if seen[s] {
                for x in self.extensions[s].iter() {
                    seen[s | (1 << x)] = true;
                }
            }
        }
        seen
    }

    /// Pointwise union of `l_w` over all words `w` of the language.
    ///
    /// `x ∈ result(A)` iff some word `w` with `supp(w) ∩ A = ∅` may be
    /// extended by `x ∈ A`. The union over supports inside each complement is
    /// a subset-sum transform.
    pub(crate) fn join(&self) -> ChoiceFunction {
        let n = self.ground.len();
        let reachable = self.reachable();
        let mut below: Vec<Subset> = self
            .extensions
            .iter()
            .zip(&reachable)
            .map(|(&e, &r)| if r { e } else { Subset::EMPTY })
            .collect();
        for i in 0..n {
            let bit = 1usize << i;
            for t in 0..below.len() {
                if t & bit != 0 {
                    below[t] = below[t] | below[t ^ bit];
                }
            }
        }
        let full = self.ground.full();
        let table = self
            .ground
            .subsets()
            .map(|a| below[(full - a).idx()] & a)
            .collect();
        ChoiceFunction::from_table_trusted(&self.ground, table)
    }

    /// Every word of the language, by depth-first prefix extension.
    pub(crate) fn words(&self) -> WordSet {
        let mut out = Vec::new();
        let mut stack = vec![SimpleWord::empty(&self.ground)];
        while let Some(w) = stack.pop() {
            for x in self.extensions[w.support().idx()].iter() {
                stack.push(w.pushed(x));
            }
            out.push(w);
        }
        WordSet::from_unsorted(&self.ground, out)
    }

    /// Words of the language that admit no extension.
    pub(crate) fn maximal_words(&self) -> WordSet {
        let mut out = Vec::new();
        let mut stack = vec![SimpleWord::empty(&self.ground)];
        while let Some(w) = stack.pop() {
            let ext = self.extensions[w.support().idx()];
            if ext.is_empty() {
                out.push(w);
            } else {
                for x in ext.iter() {
                    stack.push(w.pushed(x));
                }
            }
        }
        WordSet::from_unsorted(&self.ground, out)
    }
}

/// `stable[R]` = elements `x ∈ R` chosen from every menu `A ⊆ R` that
/// contains `x`.
///
/// Any such `A` is either `R` itself or lies inside `R ∖ y` for some other
/// `y ∈ R`, which gives `stable[R] = f(R) ∩ ⋂_{y ∈ R} (stable[R ∖ y] ∪ {y})`.
fn always_chosen(f: &ChoiceFunction) -> Vec<Subset> {
    let mut stable = vec![Subset::EMPTY; f.ground().power_len()];
    for r in 1..stable.len() {
        let menu = Subset::from_bits(r as u32);
        let mut acc = f.at(menu);
        for y in menu.iter() {
            acc = acc & stable[menu.without(y).idx()].with(y);
        }
        stable[r] = acc;
    }
    stable
}
