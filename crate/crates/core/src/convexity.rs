//! The convex structure on simple words: shuffles, melanges, segments,
//! convex sets and hulls.

use std::collections::HashSet;

use crate::error::{PlottError, Result};
use crate::geometry::ConvexFamily;
use crate::lattice::{basement, join_of_words};
use crate::word::{SimpleWord, WordSet};

/// All interleavings of two words over disjoint letters that keep the
/// internal order of both.
pub fn shuffle(w: &SimpleWord, v: &SimpleWord) -> Result<WordSet> {
    w.ground().ensure_same(v.ground())?;
    if !w.support().is_disjoint(v.support()) {
        return Err(PlottError::invalid(format!(
            "cannot shuffle {w} and {v}: they share letters"
        )));
    }
    // over disjoint letters, simplification never drops anything
    melange_family(&[w.clone(), v.clone()])
}

/// Simplifications of the shuffles of two tagged copies.
pub fn melange(w: &SimpleWord, v: &SimpleWord) -> Result<WordSet> {
    melange_family(&[w.clone(), v.clone()])
}

/// Melanges of any number of words over one ground set: interleave the
/// words as if their letters were distinct, then keep the first occurrence
/// of every letter.
pub fn melange_family(words: &[SimpleWord]) -> Result<WordSet> {
    let first = words
        .first()
        .ok_or_else(|| PlottError::invalid("melange of an empty list of words"))?;
    let ground = first.ground();
    for w in &words[1..] {
        ground.ensure_same(w.ground())?;
    }
    let mut found = HashSet::new();
    let mut visited = HashSet::new();
    let mut positions = vec![0usize; words.len()];
    let mut current = Vec::new();
    interleave(
        words,
        &mut positions,
        &mut current,
        &mut visited,
        &mut found,
    );
    let out = found
        .into_iter()
        .map(|letters| SimpleWord::new(ground, letters))
        .collect::<Result<Vec<_>>>()?;
    Ok(WordSet::from_unsorted(ground, out))
}

fn interleave(
    words: &[SimpleWord],
    positions: &mut Vec<usize>,
    current: &mut Vec<usize>,
    visited: &mut HashSet<(Vec<usize>, Vec<usize>)>,
    found: &mut HashSet<Vec<usize>>,
) {
    // the remaining interleavings depend only on positions and output so far
    if !visited.insert((positions.clone(), current.clone())) {
        return;
    }
    let mut done = true;
    for i in 0..words.len() {
        let Some(&x) = words[i].letters().get(positions[i]) else {
            continue;
        };
        done = false;
        positions[i] += 1;
        let fresh = !current.contains(&x);
        if fresh {
            current.push(x);
        }
        interleave(words, positions, current, visited, found);
        if fresh {
            current.pop();
        }
        positions[i] -= 1;
    }
    if done {
        found.insert(current.clone());
    }
}

/// `co(w, v)`: every prefix of every melange of `w` and `v`, computed as the
/// basement of `l_w ∨ l_v`.
pub fn segment(w: &SimpleWord, v: &SimpleWord) -> Result<WordSet> {
    w.ground().ensure_same(v.ground())?;
    let pair = WordSet::new(w.ground(), [w.clone(), v.clone()])?;
    Ok(basement(&join_of_words(&pair)))
}

/// Non-empty and containing `co(w, v)` for all members `w`, `v`.
///
/// The empty word set is not counted as convex: it is not the basement of
/// any choice function.
pub fn is_convex(words: &WordSet) -> bool {
    if words.is_empty() {
        return false;
    }
    let members = words.words();
    members.iter().enumerate().all(|(i, w)| {
        members[i..].iter().all(|v| {
            segment(w, v)
                .map(|s| s.is_subset_of(words))
                .unwrap_or(false)
        })
    })
}

/// Smallest convex set of words containing `words`: the basement of the
/// join of their linear functions.
pub fn convex_hull(words: &WordSet) -> WordSet {
    basement(&join_of_words(words))
}

/// The convex geometry `{X ∖ supp(w) : w ∈ C}` of a convex word set.
pub fn geometry_from_convex_set(words: &WordSet) -> Result<ConvexFamily> {
    if !is_convex(words) {
        return Err(PlottError::invalid("word set is not convex"));
    }
    let full = words.ground().full();
    ConvexFamily::new(words.ground(), words.iter().map(|w| full - w.support()))
}
