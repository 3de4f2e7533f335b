//! Path-independent (Plott) choice functions on finite sets.
//!
//! A choice function picks a subset `f(A) ⊆ A` from every menu `A`; it is
//! path independent when `f(A ∪ B) = f(f(A) ∪ B)`. This crate represents
//! choice functions as dense tables over bitmask subsets and implements:
//!
//! * the lattice of Plott functions ([`lattice`]): join, meet,
//!   Plottization, basements and socles of simple words;
//! * the bijection with convex geometries, pieces and canonical superset
//!   rationalizations ([`geometry`]);
//! * direct and inverse images along maps of ground sets, sums, products
//!   and correspondences ([`functorial`]);
//! * the convex structure on simple words: shuffles, melanges, segments
//!   and hulls ([`convexity`]);
//! * Hasse diagram export ([`dot`]).
//!
//! ```
//! use plott::{lattice, linear_from_word, GroundSet, SimpleWord};
//!
//! let x = GroundSet::from_chars("abc").unwrap();
//! let abc = linear_from_word(&SimpleWord::parse(&x, "abc").unwrap());
//! let bac = linear_from_word(&SimpleWord::parse(&x, "bac").unwrap());
//! let m = lattice::meet(&abc, &bac).unwrap();
//! assert_eq!(m, plott::PlottFunction::zero(&x));
//! ```

pub mod choice;
pub mod convexity;
pub mod dot;
pub mod error;
pub mod functorial;
pub mod geometry;
pub mod ground;
mod language;
pub mod lattice;
pub mod map;
pub mod order;
pub mod word;

pub use choice::{
    linear_from_word, require_plott, word_from_linear, ChoiceFunction, Comparison, PlottFunction,
};
pub use error::{PlottError, Result};
pub use geometry::{ConvexFamily, PieceStructure, Rationalization};
pub use ground::{GroundSet, Subset, DEFAULT_CAP, HARD_CAP};
pub use map::SetMap;
pub use order::PartialOrder;
pub use word::{all_words, SimpleWord, WordSet};

/// `f(A)` for a menu over `f`'s ground set.
pub fn evaluate(f: &ChoiceFunction, menu: Subset) -> Result<Subset> {
    f.evaluate(menu)
}

pub fn is_path_independent(f: &ChoiceFunction) -> bool {
    f.is_path_independent()
}

pub fn support(f: &ChoiceFunction) -> Subset {
    f.support()
}

pub fn compare(f: &ChoiceFunction, g: &ChoiceFunction) -> Result<Comparison> {
    f.compare(g)
}

/// `v` is a prefix of `w`.
pub fn word_prefix_order(v: &SimpleWord, w: &SimpleWord) -> bool {
    v.is_prefix_of(w)
}
