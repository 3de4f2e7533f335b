#![allow(dead_code)]

pub mod oracle;

use plott::{all_words, ChoiceFunction, GroundSet, PlottFunction, SetMap, SimpleWord, WordSet};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_c401;

pub fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ salt)
}

pub fn ground(chars: &str) -> GroundSet {
    GroundSet::from_chars(chars).unwrap()
}

/// `{a}`, `{a,b}`, `{a,b,c}`, ... for the first `n` letters.
pub fn letters(n: usize) -> GroundSet {
    ground(&"abcdefgh"[..n])
}

pub fn word(g: &GroundSet, text: &str) -> SimpleWord {
    SimpleWord::parse(g, text).unwrap()
}

pub fn words(g: &GroundSet, texts: &[&str]) -> WordSet {
    WordSet::parse(g, texts).unwrap()
}

pub fn all_word_set(g: &GroundSet) -> WordSet {
    WordSet::new(g, all_words(g)).unwrap()
}

/// Every Plott function on `g` (at most three symbols), from the oracle.
pub fn plott_functions(g: &GroundSet) -> Vec<PlottFunction> {
    oracle::all_plott(g)
        .unwrap()
        .into_iter()
        .map(|f| PlottFunction::new(f).unwrap())
        .collect()
}

pub fn random_plott(g: &GroundSet, rng: &mut impl Rng) -> PlottFunction {
    plott_functions(g).choose(rng).unwrap().clone()
}

pub fn random_choice(g: &GroundSet, rng: &mut impl Rng) -> ChoiceFunction {
    ChoiceFunction::from_fn(g, |a| a.iter().filter(|_| rng.gen_bool(0.5)).collect()).unwrap()
}

pub fn random_map(source: &GroundSet, target: &GroundSet, rng: &mut impl Rng) -> SetMap {
    let images = (0..source.len())
        .map(|_| rng.gen_range(0..target.len()))
        .collect();
    SetMap::new(source, target, images).unwrap()
}

pub fn random_word(g: &GroundSet, rng: &mut impl Rng) -> SimpleWord {
    let mut letters: Vec<usize> = (0..g.len()).collect();
    letters.shuffle(rng);
    let len = rng.gen_range(0..=g.len());
    letters.truncate(len);
    SimpleWord::new(g, letters).unwrap()
}

/// A ground set of 0..=3 symbols drawn from `pool`.
pub fn random_ground(pool: &str, rng: &mut impl Rng) -> GroundSet {
    let n = rng.gen_range(0..=3);
    ground(&pool[..n])
}

/// The four-point function whose only choice of `d` is from `{d}`:
/// `f(A) = A ∖ d` except `f(X) = f(X ∖ d) = {a, b}`.
pub fn four_point_example() -> PlottFunction {
    let g = ground("abcd");
    let d = g.subset_of_chars("d").unwrap();
    let abc = g.subset_of_chars("abc").unwrap();
    let ab = g.subset_of_chars("ab").unwrap();
    let f = ChoiceFunction::from_fn(&g, |a| {
        if a == d {
            d
        } else if a == g.full() || a == abc {
            ab
        } else {
            a - d
        }
    })
    .unwrap();
    PlottFunction::new(f).unwrap()
}

/// `l_abc ∨ l_cba`, built from the definition of the linear functions.
pub fn two_extremes() -> PlottFunction {
    let g = letters(3);
    let abc = oracle::oracle_linear(&word(&g, "abc"));
    let cba = oracle::oracle_linear(&word(&g, "cba"));
    PlottFunction::new(abc.pointwise_union(&cba).unwrap()).unwrap()
}
