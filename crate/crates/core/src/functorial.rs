//! Base change along maps of ground sets: direct and inverse images, the
//! word image, full images, trivial extension, direct sums and products,
//! and Plott correspondences.

use crate::choice::{ChoiceFunction, PlottFunction};
use crate::error::{PlottError, Result};
use crate::ground::{GroundSet, Subset, DEFAULT_CAP};
use crate::language::Language;
use crate::lattice::meet;
use crate::map::SetMap;
use crate::word::{SimpleWord, WordSet};

/// `phi_*(f)(B) = phi(f(phi^{-1}(B)))`.
pub fn direct_image(phi: &SetMap, f: &ChoiceFunction) -> Result<ChoiceFunction> {
    phi.source().ensure_same(f.ground())?;
    let target = phi.target();
    let table = target
        .subsets()
        .map(|b| phi.image(f.at(phi.preimage(b))))
        .collect();
    Ok(ChoiceFunction::from_table_trusted(target, table))
}

/// [`direct_image`] of a Plott function, which is again Plott.
pub fn direct_image_plott(phi: &SetMap, f: &PlottFunction) -> Result<PlottFunction> {
    direct_image(phi, f).map(PlottFunction::produced)
}

/// Maps each letter through `phi`, keeping only the first occurrence of
/// every image letter.
pub fn word_image(phi: &SetMap, w: &SimpleWord) -> Result<SimpleWord> {
    phi.source().ensure_same(w.ground())?;
    let mut seen = Subset::EMPTY;
    let mut letters = Vec::new();
    for &x in w.letters() {
        let y = phi.apply(x);
        if !seen.contains(y) {
            seen = seen.with(y);
            letters.push(y);
        }
    }
    SimpleWord::new(phi.target(), letters)
}

/// `phi_+(A) = {y : phi^{-1}(y) ⊆ A}`; targets with empty fibre are
/// always included.
pub fn full_image(phi: &SetMap, a: Subset) -> Result<Subset> {
    phi.source().check(a)?;
    let outside = phi.source().full() - a;
    Ok(phi.target().full() - phi.image(outside))
}

/// `f_Y(B) = f(B ∩ X)` along an injective embedding of `X` into `Y`.
pub fn trivial_extension(f: &ChoiceFunction, embed: &SetMap) -> Result<ChoiceFunction> {
    if !embed.is_injective() {
        return Err(PlottError::invalid(
            "trivial extension needs an injective map",
        ));
    }
    direct_image(embed, f)
}

/// `(f ⨿ g)(A ⨿ B) = f(A) ⨿ g(B)` on the concatenated ground set.
pub fn direct_sum(f: &ChoiceFunction, g: &ChoiceFunction) -> Result<ChoiceFunction> {
    direct_sum_capped(f, g, DEFAULT_CAP)
}

pub fn direct_sum_capped(
    f: &ChoiceFunction,
    g: &ChoiceFunction,
    cap: usize,
) -> Result<ChoiceFunction> {
    let (x, y) = (f.ground(), g.ground());
    if let Some(s) = y.symbols().iter().find(|s| x.index_of(s).is_some()) {
        return Err(PlottError::invalid(format!(
            "symbol {s:?} occurs in both summands"
        )));
    }
    let ground = GroundSet::with_cap(x.symbols().iter().chain(y.symbols()).cloned(), cap)?;
    let shift = x.len();
    let low = x.full();
    let table = ground
        .subsets()
        .map(|menu| {
            let left = f.at(menu & low);
            let right = g.at(Subset::from_bits(menu.bits() >> shift));
            left | Subset::from_bits(right.bits() << shift)
        })
        .collect();
    Ok(ChoiceFunction::from_table_trusted(&ground, table))
}

/// The largest Plott function on `phi.source()` whose direct image is
/// below `g`.
///
/// Its basement is the set of words whose word image lies in `Bas(g)`;
/// the search runs over that pulled-back language.
pub fn inverse_image(phi: &SetMap, g: &ChoiceFunction) -> Result<PlottFunction> {
    phi.target().ensure_same(g.ground())?;
    let pulled = Language::pullback(phi, &Language::basement_of(g));
    Ok(PlottFunction::produced(pulled.join()))
}

/// Basement of [`inverse_image`]: words `w` with `phi♯(w) ∈ Bas(g)`.
pub fn inverse_image_basement(phi: &SetMap, g: &ChoiceFunction) -> Result<WordSet> {
    phi.target().ensure_same(g.ground())?;
    Ok(Language::pullback(phi, &Language::basement_of(g)).words())
}

/// The cartesian product ground set with symbols `(x,y)`, first component
/// varying slowest, and its two projections.
pub fn product_ground(
    x: &GroundSet,
    y: &GroundSet,
    cap: usize,
) -> Result<(GroundSet, SetMap, SetMap)> {
    let size = x.len() * y.len();
    if size > cap {
        return Err(PlottError::Capacity { size, cap });
    }
    let symbols = x
        .symbols()
        .iter()
        .flat_map(|a| y.symbols().iter().map(move |b| format!("({a},{b})")));
    let product = GroundSet::with_cap(symbols, cap)?;
    let ny = y.len();
    let alpha = SetMap::new(&product, x, (0..size).map(|i| i / ny).collect())?;
    let beta = SetMap::new(&product, y, (0..size).map(|i| i % ny).collect())?;
    Ok((product, alpha, beta))
}

/// `f ∏ g = alpha^*(f) ∧ beta^*(g)` on `X × Y`.
pub fn direct_product(f: &ChoiceFunction, g: &ChoiceFunction) -> Result<PlottFunction> {
    direct_product_capped(f, g, DEFAULT_CAP)
}

pub fn direct_product_capped(
    f: &ChoiceFunction,
    g: &ChoiceFunction,
    cap: usize,
) -> Result<PlottFunction> {
    let (_, alpha, beta) = product_ground(f.ground(), g.ground(), cap)?;
    meet(&inverse_image(&alpha, f)?, &inverse_image(&beta, g)?)
}

/// Applies the correspondence `(h on Z, phi: Z -> X, psi: Z -> Y)` to `f`:
/// `psi_*(h ∧ phi^*(f))`.
pub fn apply_correspondence(
    h: &PlottFunction,
    phi: &SetMap,
    psi: &SetMap,
    f: &ChoiceFunction,
) -> Result<PlottFunction> {
    h.ground().ensure_same(phi.source())?;
    h.ground().ensure_same(psi.source())?;
    let lifted = inverse_image(phi, f)?;
    direct_image_plott(psi, &meet(h, &lifted)?)
}

/// The pairing `pi(z) = (phi(z), psi(z))` into `X × Y`, together with the
/// projections `alpha`, `beta` of the product.
pub fn pairing_map(phi: &SetMap, psi: &SetMap, cap: usize) -> Result<(SetMap, SetMap, SetMap)> {
    phi.source().ensure_same(psi.source())?;
    let (product, alpha, beta) = product_ground(phi.target(), psi.target(), cap)?;
    let ny = psi.target().len();
    let images = (0..phi.source().len())
        .map(|z| phi.apply(z) * ny + psi.apply(z))
        .collect();
    let pi = SetMap::new(phi.source(), &product, images)?;
    Ok((pi, alpha, beta))
}
