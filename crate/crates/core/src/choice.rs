//! Choice functions as dense tables, and the elementary predicates on them.

use std::fmt;
use std::ops::Deref;

use crate::error::{PlottError, Result};
use crate::ground::{GroundSet, Subset};
use crate::word::SimpleWord;

/// A choice function `f: 2^X -> 2^X` with `f(A) ⊆ A`, stored as a table
/// indexed by the bitmask of the menu `A`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChoiceFunction {
    ground: GroundSet,
    table: Vec<Subset>,
}

/// Outcome of comparing two choice functions pointwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    LessEqual,
    GreaterEqual,
    Equal,
    Incomparable,
}

impl ChoiceFunction {
    pub fn from_table(ground: &GroundSet, table: Vec<Subset>) -> Result<Self> {
        if table.len() != ground.power_len() {
            return Err(PlottError::invalid(format!(
                "table has {} entries, expected {}",
                table.len(),
                ground.power_len()
            )));
        }
        for (a, &chosen) in table.iter().enumerate() {
            let menu = Subset::from_bits(a as u32);
            if !chosen.is_subset_of(menu) {
                return Err(PlottError::invalid(format!(
                    "choice {} from menu {} is not a subset of the menu",
                    ground.display(chosen),
                    ground.display(menu)
                )));
            }
        }
        Ok(ChoiceFunction {
            ground: ground.clone(),
            table,
        })
    }

    pub fn from_fn<F: FnMut(Subset) -> Subset>(ground: &GroundSet, f: F) -> Result<Self> {
        Self::from_table(ground, ground.subsets().map(f).collect())
    }

    /// Table built by the crate itself; contraction holds by construction.
    pub(crate) fn from_table_trusted(ground: &GroundSet, table: Vec<Subset>) -> Self {
        debug_assert_eq!(table.len(), ground.power_len());
        debug_assert!(table
            .iter()
            .enumerate()
            .all(|(a, c)| c.is_subset_of(Subset::from_bits(a as u32))));
        ChoiceFunction {
            ground: ground.clone(),
            table,
        }
    }

    /// The empty choice `0`.
    pub fn zero(ground: &GroundSet) -> Self {
        Self::from_table_trusted(ground, vec![Subset::EMPTY; ground.power_len()])
    }

    /// The identity choice `1_X`.
    pub fn identity(ground: &GroundSet) -> Self {
        Self::from_table_trusted(ground, ground.subsets().collect())
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn table(&self) -> &[Subset] {
        &self.table
    }

    /// `f(A)`; fails when `A` has bits outside the ground set.
    pub fn evaluate(&self, menu: Subset) -> Result<Subset> {
        self.ground.check(menu)?;
        Ok(self.table[menu.idx()])
    }

    /// `f(A)` without the width check. Panics if `A` is too wide.
    pub fn at(&self, menu: Subset) -> Subset {
        self.table[menu.idx()]
    }

    /// A pair `(A, B)` with `f(A ∪ B) != f(f(A) ∪ B)`, if one exists.
    pub fn path_independence_witness(&self) -> Option<(Subset, Subset)> {
        let n = self.table.len();
        for a in 0..n {
            let fa = self.table[a].idx();
            if fa == a {
                continue;
            }
            for b in 0..n {
                if self.table[a | b] != self.table[fa | b] {
                    return Some((Subset::from_bits(a as u32), Subset::from_bits(b as u32)));
                }
            }
        }
        None
    }

    /// Path independence: `f(A ∪ B) = f(f(A) ∪ B)` for all `A`, `B`.
    /// Quadratic in the table size.
    pub fn is_path_independent(&self) -> bool {
        self.path_independence_witness().is_none()
    }

    /// `{x : f({x}) = {x}}`.
    pub fn support(&self) -> Subset {
        (0..self.ground.len())
            .filter(|&x| self.table[1 << x] == Subset::singleton(x))
            .collect()
    }

    /// Pointwise `f ≤ g`. Both must share a ground set.
    pub fn le(&self, other: &ChoiceFunction) -> bool {
        debug_assert!(self.ground == other.ground);
        self.table
            .iter()
            .zip(&other.table)
            .all(|(a, b)| a.is_subset_of(*b))
    }

    pub fn compare(&self, other: &ChoiceFunction) -> Result<Comparison> {
        self.ground.ensure_same(&other.ground)?;
        Ok(match (self.le(other), other.le(self)) {
            (true, true) => Comparison::Equal,
            (true, false) => Comparison::LessEqual,
            (false, true) => Comparison::GreaterEqual,
            (false, false) => Comparison::Incomparable,
        })
    }

    pub fn pointwise_union(&self, other: &ChoiceFunction) -> Result<ChoiceFunction> {
        self.zip_with(other, Subset::union)
    }

    /// `f ∩ g`, which need not be path independent even when `f` and `g` are.
    pub fn pointwise_intersection(&self, other: &ChoiceFunction) -> Result<ChoiceFunction> {
        self.zip_with(other, Subset::intersection)
    }

    fn zip_with(
        &self,
        other: &ChoiceFunction,
        op: impl Fn(Subset, Subset) -> Subset,
    ) -> Result<ChoiceFunction> {
        self.ground.ensure_same(&other.ground)?;
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(&a, &b)| op(a, b))
            .collect();
        Ok(Self::from_table_trusted(&self.ground, table))
    }

    pub(crate) fn union_in_place(&mut self, other: &ChoiceFunction) {
        for (a, b) in self.table.iter_mut().zip(&other.table) {
            *a = a.union(*b);
        }
    }

    /// Largest number of elements chosen from any menu.
    pub fn max_choice_len(&self) -> usize {
        self.table.iter().map(|s| s.len()).max().unwrap_or(0)
    }
}

impl fmt::Debug for ChoiceFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (a, c) in self.table.iter().enumerate().skip(1) {
            m.entry(
                &self.ground.display(Subset::from_bits(a as u32)),
                &self.ground.display(*c),
            );
        }
        m.finish()
    }
}

/// A choice function known to be path independent.
///
/// Obtained either by checking ([`PlottFunction::new`]) or from an operation
/// that preserves path independence. [`PlottFunction::new_unchecked`] is the
/// trusted route for callers that already know the property holds.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlottFunction(ChoiceFunction);

impl PlottFunction {
    pub fn new(f: ChoiceFunction) -> Result<Self> {
        if f.is_path_independent() {
            Ok(PlottFunction(f))
        } else {
            Err(PlottError::NotPlott)
        }
    }

    pub fn new_unchecked(f: ChoiceFunction) -> Self {
        PlottFunction(f)
    }

    /// Wraps an internally produced result, re-checking in debug builds.
    pub(crate) fn produced(f: ChoiceFunction) -> Self {
        debug_assert!(
            f.ground().len() > 8 || f.is_path_independent(),
            "operation produced a non path independent function"
        );
        PlottFunction(f)
    }

    pub fn zero(ground: &GroundSet) -> Self {
        PlottFunction(ChoiceFunction::zero(ground))
    }

    pub fn identity(ground: &GroundSet) -> Self {
        PlottFunction(ChoiceFunction::identity(ground))
    }

    pub fn as_choice(&self) -> &ChoiceFunction {
        &self.0
    }

    pub fn into_inner(self) -> ChoiceFunction {
        self.0
    }
}

impl Deref for PlottFunction {
    type Target = ChoiceFunction;

    fn deref(&self) -> &ChoiceFunction {
        &self.0
    }
}

impl AsRef<ChoiceFunction> for PlottFunction {
    fn as_ref(&self) -> &ChoiceFunction {
        &self.0
    }
}

impl From<PlottFunction> for ChoiceFunction {
    fn from(f: PlottFunction) -> Self {
        f.0
    }
}

impl fmt::Debug for PlottFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Wraps `f` as a Plott function, checking path independence unless `trusted`.
pub fn require_plott(f: &ChoiceFunction, trusted: bool) -> Result<PlottFunction> {
    if trusted {
        Ok(PlottFunction::new_unchecked(f.clone()))
    } else {
        PlottFunction::new(f.clone())
    }
}

/// The linear function `l_w`: from each menu pick the first letter of `w`
/// it contains, or nothing when the menu misses the support of `w`.
pub fn linear_from_word(w: &SimpleWord) -> PlottFunction {
    let ground = w.ground();
    let mut table = vec![Subset::EMPTY; ground.power_len()];
    // a menu whose first hit is letters[i] contains letters[i] and avoids all earlier letters
    let mut earlier = Subset::EMPTY;
    for &x in w.letters() {
        let free = ground.full() - earlier - Subset::singleton(x);
        for rest in free.subsets() {
            table[rest.with(x).idx()] = Subset::singleton(x);
        }
        earlier = earlier.with(x);
    }
    PlottFunction(ChoiceFunction::from_table_trusted(ground, table))
}

/// Inverse of [`linear_from_word`].
pub fn word_from_linear(f: &ChoiceFunction) -> Result<SimpleWord> {
    let widest = f.max_choice_len();
    if widest > 1 {
        return Err(PlottError::NotLinear { count: widest });
    }
    if !f.is_path_independent() {
        return Err(PlottError::NotPlott);
    }
    let ground = f.ground();
    let mut letters = Vec::new();
    let mut used = Subset::EMPTY;
    while let Some(x) = f.at(ground.full() - used).first() {
        letters.push(x);
        used = used.with(x);
    }
    let w = SimpleWord::new(ground, letters)?;
    debug_assert_eq!(linear_from_word(&w).as_choice(), f);
    Ok(w)
}
