//! The lattice of Plott functions on a ground set: join, meet, basement,
//! socle, Plottization, the standard constructors, and enumeration.

use std::str::FromStr;

use crate::choice::{linear_from_word, ChoiceFunction, PlottFunction};
use crate::error::{PlottError, Result};
use crate::geometry::{self, ConvexFamily};
use crate::ground::{GroundSet, Subset};
use crate::language::Language;
use crate::order::PartialOrder;
use crate::word::{SimpleWord, WordSet};

/// `(f ∨ g)(A) = f(A) ∪ g(A)`.
pub fn join(f: &PlottFunction, g: &PlottFunction) -> Result<PlottFunction> {
    Ok(PlottFunction::produced(f.pointwise_union(g)?))
}

/// Greatest Plott function below both arguments: the function whose
/// basement is `Bas(f) ∩ Bas(g)`.
pub fn meet(f: &PlottFunction, g: &PlottFunction) -> Result<PlottFunction> {
    f.ground().ensure_same(g.ground())?;
    let common = Language::basement_of(f).intersect(&Language::basement_of(g));
    Ok(PlottFunction::produced(common.join()))
}

/// All simple words `w` with `l_w ≤ f`. Defined for any choice function.
pub fn basement(f: &ChoiceFunction) -> WordSet {
    Language::basement_of(f).words()
}

/// The prefix-maximal words of the basement.
pub fn socle(f: &ChoiceFunction) -> WordSet {
    Language::basement_of(f).maximal_words()
}

/// Pointwise union of `l_c` over `c ∈ C`; `0` for the empty set.
pub fn join_of_words(words: &WordSet) -> PlottFunction {
    let mut acc = ChoiceFunction::zero(words.ground());
    for w in words {
        acc.union_in_place(&linear_from_word(w));
    }
    PlottFunction::produced(acc)
}

/// The largest Plott function below `f`, computed as the join of the
/// basement of `f`.
pub fn plottize(f: &ChoiceFunction) -> PlottFunction {
    PlottFunction::produced(Language::basement_of(f).join())
}

/// `f_R(A) = Max(R | A)`.
pub fn max_choice(order: &PartialOrder) -> PlottFunction {
    let f = ChoiceFunction::from_table_trusted(
        order.ground(),
        order.ground().subsets().map(|a| order.maximal(a)).collect(),
    );
    PlottFunction::produced(f)
}

/// The `k` best elements of each menu under a complete order word.
pub fn top_k_choice(order: &SimpleWord, k: usize) -> Result<PlottFunction> {
    if !order.is_complete() {
        return Err(PlottError::invalid(format!(
            "top-k needs a complete order, got {order}"
        )));
    }
    let ground = order.ground();
    let table = ground
        .subsets()
        .map(|a| {
            order
                .letters()
                .iter()
                .copied()
                .filter(|&x| a.contains(x))
                .take(k)
                .collect()
        })
        .collect();
    Ok(PlottFunction::produced(ChoiceFunction::from_table_trusted(
        ground, table,
    )))
}

/// `1_S(A) = A ∩ S`.
pub fn identity_on(ground: &GroundSet, s: Subset) -> Result<PlottFunction> {
    ground.check(s)?;
    let f = ChoiceFunction::from_table_trusted(ground, ground.subsets().map(|a| a & s).collect());
    Ok(PlottFunction::produced(f))
}

/// How [`enumerate_plott`] searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Every contraction table, filtered by path independence. Up to 3 symbols.
    Brute,
    /// Every convex geometry, built top-down by one-element steps and
    /// intersections. Up to 5 symbols.
    Geometry,
}

impl Strategy {
    pub fn max_size(self) -> usize {
        match self {
            Strategy::Brute => 3,
            Strategy::Geometry => 5,
        }
    }
}

impl FromStr for Strategy {
    type Err = PlottError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Strategy::Brute),
            "geometry" => Ok(Strategy::Geometry),
            other => Err(PlottError::invalid(format!("unknown strategy {other:?}"))),
        }
    }
}

/// Every Plott function on `ground`, exactly once, sorted by table.
pub fn enumerate_plott(ground: &GroundSet, strategy: Strategy) -> Result<Vec<PlottFunction>> {
    let cap = strategy.max_size();
    if ground.len() > cap {
        return Err(PlottError::Capacity {
            size: ground.len(),
            cap,
        });
    }
    let mut out = match strategy {
        Strategy::Brute => brute_force(ground),
        Strategy::Geometry => geometry::enumerate_geometries(ground)
            .iter()
            .map(geometry::from_geometry_trusted)
            .collect(),
    };
    out.sort_by(|f, g| f.table().cmp(g.table()));
    Ok(out)
}

fn brute_force(ground: &GroundSet) -> Vec<PlottFunction> {
    let menus: Vec<Subset> = ground.subsets().skip(1).collect();
    let mut table = vec![Subset::EMPTY; ground.power_len()];
    let mut out = Vec::new();
    // odometer over the choices f(A) ⊆ A for every non-empty menu A
    loop {
        let f = ChoiceFunction::from_table_trusted(ground, table.clone());
        if f.is_path_independent() {
            out.push(PlottFunction::new_unchecked(f));
        }
        let mut advanced = false;
        for &menu in &menus {
            let slot = &mut table[menu.idx()];
            if *slot == menu {
                *slot = Subset::EMPTY;
            } else {
                // next subset of `menu` in ascending order
                *slot =
                    Subset::from_bits(((slot.bits() | !menu.bits()).wrapping_add(1)) & menu.bits());
                advanced = true;
                break;
            }
        }
        if !advanced {
            return out;
        }
    }
}

/// Join-irreducible elements of a finite lattice given as a list: those
/// with exactly one lower cover.
pub fn join_irreducibles(functions: &[PlottFunction]) -> Vec<PlottFunction> {
    functions
        .iter()
        .filter(|f| {
            let below: Vec<&PlottFunction> =
                functions.iter().filter(|g| g.le(f) && g != f).collect();
            let covers = below
                .iter()
                .filter(|g| !below.iter().any(|h| h != *g && g.le(h)))
                .count();
            covers == 1
        })
        .cloned()
        .collect()
}

/// The chain geometry of a word, as a convex family.
pub fn chain_geometry(w: &SimpleWord) -> ConvexFamily {
    let full = w.ground().full();
    let members = w.prefixes().map(|p| full - p.support()).collect();
    ConvexFamily::from_members_trusted(w.ground(), members)
}
