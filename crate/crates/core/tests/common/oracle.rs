//! Brute-force reference implementations.
//!
//! Everything here works from the definitions: contraction tables,
//! `evaluate`, `is_path_independent` and the plain constructors. None of the
//! library's lattice, functorial or convexity algorithms are called.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

use plott::{ChoiceFunction, GroundSet, PlottError, Result, SetMap, SimpleWord, Subset, WordSet};

pub const MAX_SIZE: usize = 3;
pub const MAX_WORD_SIZE: usize = 4;

fn capacity(size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(PlottError::Capacity { size, cap });
    }
    Ok(())
}

thread_local! {
    static PLOTT_CACHE: RefCell<HashMap<Vec<String>, Vec<ChoiceFunction>>> =
        RefCell::new(HashMap::new());
}

/// Every contraction table on the ground set, in odometer order.
pub fn all_choice_functions(ground: &GroundSet) -> Result<Vec<ChoiceFunction>> {
    capacity(ground.len(), MAX_SIZE)?;
    let menus: Vec<Subset> = ground.subsets().collect();
    // for every menu, the list of its subsets
    let options: Vec<Vec<Subset>> = menus.iter().map(|m| m.subsets().collect()).collect();
    let mut digits = vec![0usize; menus.len()];
    let mut out = Vec::new();
    loop {
        let table = digits
            .iter()
            .zip(&options)
            .map(|(&d, opts)| opts[d])
            .collect();
        out.push(ChoiceFunction::from_table(ground, table)?);
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(out);
            }
            digits[i] += 1;
            if digits[i] < options[i].len() {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Every path-independent function, filtered from all contraction tables.
pub fn all_plott(ground: &GroundSet) -> Result<Vec<ChoiceFunction>> {
    capacity(ground.len(), MAX_SIZE)?;
    let key = ground.symbols().to_vec();
    if let Some(hit) = PLOTT_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(hit);
    }
    let found: Vec<ChoiceFunction> = all_choice_functions(ground)?
        .into_iter()
        .filter(|f| f.is_path_independent())
        .collect();
    PLOTT_CACHE.with(|c| c.borrow_mut().insert(key, found.clone()));
    Ok(found)
}

fn le(f: &ChoiceFunction, g: &ChoiceFunction) -> bool {
    f.ground()
        .subsets()
        .all(|a| f.evaluate(a).unwrap().is_subset_of(g.evaluate(a).unwrap()))
}

fn union_of<'a, I>(ground: &GroundSet, fs: I) -> ChoiceFunction
where
    I: IntoIterator<Item = &'a ChoiceFunction>,
{
    let mut table = vec![Subset::EMPTY; ground.power_len()];
    for f in fs {
        for a in ground.subsets() {
            table[a.bits() as usize] = table[a.bits() as usize] | f.evaluate(a).unwrap();
        }
    }
    ChoiceFunction::from_table(ground, table).unwrap()
}

/// Union of all Plott functions below `f`.
pub fn oracle_plottize(f: &ChoiceFunction) -> Result<ChoiceFunction> {
    let ground = f.ground();
    let all = all_plott(ground)?;
    Ok(union_of(ground, all.iter().filter(|p| le(p, f))))
}

pub fn oracle_meet(f: &ChoiceFunction, g: &ChoiceFunction) -> Result<ChoiceFunction> {
    let ground = f.ground();
    let both =
        ChoiceFunction::from_fn(ground, |a| f.evaluate(a).unwrap() & g.evaluate(a).unwrap())?;
    oracle_plottize(&both)
}

/// `phi(f(phi^{-1}(B)))`, straight from the definition.
pub fn oracle_direct_image(phi: &SetMap, f: &ChoiceFunction) -> Result<ChoiceFunction> {
    let images = phi.images();
    ChoiceFunction::from_fn(phi.target(), |b| {
        let pre: Subset = (0..images.len())
            .filter(|&x| b.contains(images[x]))
            .collect();
        f.evaluate(pre).unwrap().iter().map(|x| images[x]).collect()
    })
}

/// Largest Plott function on the source whose direct image is below `g`.
pub fn oracle_inverse_image(phi: &SetMap, g: &ChoiceFunction) -> Result<ChoiceFunction> {
    let source = phi.source();
    let all = all_plott(source)?;
    let below: Vec<&ChoiceFunction> = all
        .iter()
        .filter(|f| le(&oracle_direct_image(phi, f).unwrap(), g))
        .collect();
    oracle_plottize(&union_of(source, below))
}

/// `l_w`, straight from the definition: the first letter of `w` in the menu.
pub fn oracle_linear(w: &SimpleWord) -> ChoiceFunction {
    ChoiceFunction::from_fn(w.ground(), |a| {
        w.letters()
            .iter()
            .find(|&&x| a.contains(x))
            .map_or(Subset::EMPTY, |&x| Subset::singleton(x))
    })
    .unwrap()
}

/// Prefixes of all melanges of `w` and `v`: every tagged shuffle by full
/// recursion, simplified to first occurrences.
pub fn oracle_segment(w: &SimpleWord, v: &SimpleWord) -> Result<WordSet> {
    let ground = w.ground();
    capacity(ground.len(), MAX_WORD_SIZE)?;
    let mut shuffles = Vec::new();
    tagged_shuffles(w.letters(), v.letters(), &mut Vec::new(), &mut shuffles);
    let mut seen = BTreeSet::new();
    for s in shuffles {
        let mut simple: Vec<usize> = Vec::new();
        for (_, x) in s {
            if !simple.contains(&x) {
                simple.push(x);
            }
        }
        for k in 0..=simple.len() {
            seen.insert(simple[..k].to_vec());
        }
    }
    let words = seen
        .into_iter()
        .map(|letters| SimpleWord::new(ground, letters))
        .collect::<Result<Vec<_>>>()?;
    WordSet::new(ground, words)
}

fn tagged_shuffles(
    left: &[usize],
    right: &[usize],
    acc: &mut Vec<(u8, usize)>,
    out: &mut Vec<Vec<(u8, usize)>>,
) {
    if left.is_empty() && right.is_empty() {
        out.push(acc.clone());
        return;
    }
    if let Some((&x, rest)) = left.split_first() {
        acc.push((0, x));
        tagged_shuffles(rest, right, acc, out);
        acc.pop();
    }
    if let Some((&y, rest)) = right.split_first() {
        acc.push((1, y));
        tagged_shuffles(left, rest, acc, out);
        acc.pop();
    }
}
