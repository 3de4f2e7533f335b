//! Convex geometries of Plott functions, extreme points, pieces, and
//! superset rationalizations.
//!
//! A Plott function `f` closes a set `A` to `{x : f(A ∪ x) = f(A)}`; the
//! closed sets form its convex geometry, and `f` is recovered as the
//! extreme-point operator of that geometry. A piece of `x` is a maximal
//! convex set avoiding `x`. Ordered by inclusion and mapped to their owners,
//! the pieces give a poset whose maximization pushes forward to `f`.

use crate::choice::{ChoiceFunction, PlottFunction};
use crate::error::{PlottError, Result};
use crate::functorial::{direct_image, full_image};
use crate::ground::{GroundSet, Subset, HARD_CAP};
use crate::lattice::max_choice;
use crate::map::SetMap;
use crate::order::PartialOrder;
use crate::word::SimpleWord;

/// An intersection-closed family of subsets containing the full set.
/// Members are kept in ascending bitmask order. The empty set may or may
/// not be a member.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConvexFamily {
    ground: GroundSet,
    members: Vec<Subset>,
}

impl ConvexFamily {
    pub fn new<I: IntoIterator<Item = Subset>>(ground: &GroundSet, members: I) -> Result<Self> {
        let mut members: Vec<Subset> = members.into_iter().collect();
        for &m in &members {
            ground.check(m)?;
        }
        members.sort();
        members.dedup();
        if members.binary_search(&ground.full()).is_err() {
            return Err(PlottError::invalid("family does not contain the full set"));
        }
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if members.binary_search(&(a & b)).is_err() {
                    return Err(PlottError::invalid(format!(
                        "family is not closed under intersection: {} ∩ {}",
                        ground.display(a),
                        ground.display(b)
                    )));
                }
            }
        }
        Ok(ConvexFamily {
            ground: ground.clone(),
            members,
        })
    }

    pub(crate) fn from_members_trusted(ground: &GroundSet, mut members: Vec<Subset>) -> Self {
        members.sort();
        members.dedup();
        ConvexFamily {
            ground: ground.clone(),
            members,
        }
    }

    /// Every subset of the ground set.
    pub fn power_set(ground: &GroundSet) -> Self {
        ConvexFamily {
            ground: ground.clone(),
            members: ground.subsets().collect(),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn members(&self) -> &[Subset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, s: Subset) -> bool {
        self.members.binary_search(&s).is_ok()
    }

    /// Smallest member containing `b`.
    pub fn closure(&self, b: Subset) -> Subset {
        self.members
            .iter()
            .filter(|m| b.is_subset_of(**m))
            .fold(self.ground.full(), |acc, &m| acc & m)
    }

    /// Closure of every subset, indexed by bitmask.
    ///
    /// A non-member `B` lies strictly inside each member containing it, so
    /// its closure is the intersection of the closures of the `B ∪ x`.
    fn closure_table(&self) -> Vec<Subset> {
        let full = self.ground.full();
        let mut member = vec![false; self.ground.power_len()];
        for m in &self.members {
            member[m.idx()] = true;
        }
        let mut cl = vec![full; member.len()];
        for b in (0..member.len()).rev() {
            let set = Subset::from_bits(b as u32);
            cl[b] = if member[b] {
                set
            } else {
                (full - set)
                    .iter()
                    .fold(full, |acc, x| acc & cl[set.with(x).idx()])
            };
        }
        cl
    }
}

/// `{x : f(A ∪ x) = f(A)}`; always contains `A`.
pub fn closure(f: &PlottFunction, a: Subset) -> Result<Subset> {
    let chosen = f.evaluate(a)?;
    Ok((0..f.ground().len())
        .filter(|&x| f.at(a.with(x)) == chosen)
        .collect())
}

/// The convex geometry of `f`: the sets equal to their closure.
pub fn to_geometry(f: &PlottFunction) -> ConvexFamily {
    let n = f.ground().len();
    let members = f
        .ground()
        .subsets()
        .filter(|&a| {
            let chosen = f.at(a);
            (0..n).all(|x| a.contains(x) || f.at(a.with(x)) != chosen)
        })
        .collect();
    ConvexFamily::from_members_trusted(f.ground(), members)
}

/// Points `a ∈ A` outside the closure of `A ∖ a`.
pub fn extreme_points(family: &ConvexFamily, a: Subset) -> Result<Subset> {
    family.ground().check(a)?;
    Ok(a.iter()
        .filter(|&x| !family.closure(a.without(x)).contains(x))
        .collect())
}

fn extreme_table(family: &ConvexFamily, cl: &[Subset]) -> Vec<Subset> {
    family
        .ground()
        .subsets()
        .map(|a| {
            a.iter()
                .filter(|&x| !cl[a.without(x).idx()].contains(x))
                .collect()
        })
        .collect()
}

/// The extreme-point operator of a convex geometry.
pub fn from_geometry(family: &ConvexFamily) -> Result<PlottFunction> {
    if !is_convex_geometry(family) {
        return Err(PlottError::invalid(
            "family fails the Minkowski-Krein-Milman property",
        ));
    }
    Ok(from_geometry_trusted(family))
}

pub(crate) fn from_geometry_trusted(family: &ConvexFamily) -> PlottFunction {
    let cl = family.closure_table();
    let table = extreme_table(family, &cl);
    PlottFunction::produced(ChoiceFunction::from_table_trusted(family.ground(), table))
}

/// Full set present, intersection-closed, and `cl(A) = cl(ext(A))` for
/// every subset `A`.
pub fn is_convex_geometry(family: &ConvexFamily) -> bool {
    let members = family.members();
    if !family.contains(family.ground().full()) {
        return false;
    }
    let closed = members
        .iter()
        .enumerate()
        .all(|(i, &a)| members[i + 1..].iter().all(|&b| family.contains(a & b)));
    if !closed {
        return false;
    }
    let cl = family.closure_table();
    let ext = extreme_table(family, &cl);
    (0..cl.len()).all(|a| cl[a] == cl[ext[a].idx()])
}

/// All maximal chains `X = L(0) ⊃ L(1) ⊃ ..` of the family, each step going
/// to a member covered by the previous one, ending at the least member.
pub fn maximal_chains(family: &ConvexFamily) -> Vec<Vec<Subset>> {
    let mut out = Vec::new();
    let mut chain = vec![family.ground().full()];
    extend_chains(family, &mut chain, &mut out);
    out
}

fn extend_chains(family: &ConvexFamily, chain: &mut Vec<Subset>, out: &mut Vec<Vec<Subset>>) {
    let top = *chain.last().expect("chain starts at the full set");
    let inside: Vec<Subset> = family
        .members()
        .iter()
        .copied()
        .filter(|&m| m != top && m.is_subset_of(top))
        .collect();
    let covered: Vec<Subset> = inside
        .iter()
        .copied()
        .filter(|&m| !inside.iter().any(|&k| k != m && m.is_subset_of(k)))
        .collect();
    if covered.is_empty() {
        out.push(chain.clone());
        return;
    }
    for m in covered {
        chain.push(m);
        extend_chains(family, chain, out);
        chain.pop();
    }
}

/// The word of elements deleted along a chain, first deletion first.
/// Fails when some step removes more than one element.
pub fn chain_word(ground: &GroundSet, chain: &[Subset]) -> Result<SimpleWord> {
    let letters = chain
        .windows(2)
        .map(|pair| {
            let removed = pair[0] - pair[1];
            match removed.len() {
                1 => Ok(removed.first().unwrap_or_default()),
                k => Err(PlottError::invalid(format!(
                    "chain step removes {k} elements"
                ))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    SimpleWord::new(ground, letters)
}

/// A maximal convex set avoiding its owner.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Piece {
    pub set: Subset,
    pub owner: usize,
}

/// The pieces of a Plott function, named `<owner>'`, `<owner>''`, ... in
/// ascending bitmask order, with the inclusion order (larger pieces on top).
#[derive(Clone, Debug)]
pub struct PieceStructure {
    pub pieces: Vec<Piece>,
    pub order: PartialOrder,
}

impl PieceStructure {
    /// Ground set of piece symbols.
    pub fn ground(&self) -> &GroundSet {
        self.order.ground()
    }

    /// Map sending each piece to its owner.
    pub fn owner_map(&self, target: &GroundSet) -> SetMap {
        SetMap::new(
            self.ground(),
            target,
            self.pieces.iter().map(|p| p.owner).collect(),
        )
        .expect("owners index the ground set")
    }
}

pub fn pieces(f: &PlottFunction) -> Result<PieceStructure> {
    let family = to_geometry(f);
    let ground = f.ground();
    let mut found = Vec::new();
    for x in 0..ground.len() {
        let avoiding: Vec<Subset> = family
            .members()
            .iter()
            .copied()
            .filter(|m| !m.contains(x))
            .collect();
        for &p in &avoiding {
            if !avoiding.iter().any(|&q| q != p && p.is_subset_of(q)) {
                found.push(Piece { set: p, owner: x });
            }
        }
    }
    found.sort_by_key(|p| (p.set, p.owner));
    debug_assert!(found.windows(2).all(|w| w[0].set != w[1].set));

    let mut primes = vec![0usize; ground.len()];
    let names: Vec<String> = found
        .iter()
        .map(|p| {
            primes[p.owner] += 1;
            format!("{}{}", ground.symbol(p.owner), "'".repeat(primes[p.owner]))
        })
        .collect();
    let piece_ground = GroundSet::with_cap(names, HARD_CAP)?;
    let rows = found
        .iter()
        .map(|p| {
            found
                .iter()
                .enumerate()
                .filter(|(_, q)| q.set.is_subset_of(p.set))
                .map(|(j, _)| j)
                .collect()
        })
        .collect();
    let order = PartialOrder::new(&piece_ground, rows)?;
    Ok(PieceStructure {
        pieces: found,
        order,
    })
}

/// A poset on a superset together with its projection onto the ground set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rationalization {
    pub order: PartialOrder,
    pub map: SetMap,
}

/// The pieces of `f` under inclusion, projected onto their owners.
pub fn canonical_rationalization(f: &PlottFunction) -> Result<Rationalization> {
    let structure = pieces(f)?;
    let map = structure.owner_map(f.ground());
    Ok(Rationalization {
        order: structure.order,
        map,
    })
}

/// Whether pushing the maximization of `order` forward along `psi` gives `f`.
pub fn verify_ss_rationalization(
    order: &PartialOrder,
    psi: &SetMap,
    f: &ChoiceFunction,
) -> Result<bool> {
    order.ground().ensure_same(psi.source())?;
    psi.target().ensure_same(f.ground())?;
    let pushed = direct_image(psi, &max_choice(order))?;
    Ok(&pushed == f)
}

/// A map `alpha` from the rationalizing poset to the pieces of `f` with
/// `owner ∘ alpha = psi`.
///
/// `alpha(y)` is the first piece (in piece order) of `psi(y)` containing the
/// full image of the elements not dominated by `y`.
pub fn rationalization_alpha(
    order: &PartialOrder,
    psi: &SetMap,
    f: &PlottFunction,
) -> Result<SetMap> {
    if !verify_ss_rationalization(order, psi, f)? {
        return Err(PlottError::invalid(
            "poset and map do not rationalize the choice function",
        ));
    }
    let structure = pieces(f)?;
    let y_full = order.ground().full();
    let images = (0..order.ground().len())
        .map(|y| {
            let not_above = y_full - order.filter(y);
            let convex = full_image(psi, not_above)?;
            let owner = psi.apply(y);
            structure
                .pieces
                .iter()
                .position(|p| p.owner == owner && convex.is_subset_of(p.set))
                .ok_or_else(|| {
                    PlottError::invalid(format!(
                        "no piece of {:?} contains the image of {:?}",
                        f.ground().symbol(owner),
                        order.ground().symbol(y)
                    ))
                })
        })
        .collect::<Result<Vec<_>>>()?;
    SetMap::new(order.ground(), structure.ground(), images)
}

/// Every convex geometry on a ground set of at most 5 symbols.
///
/// Candidate members are decided from the full set downwards. A set that is
/// the intersection of the members above it must be taken; a set with a
/// one-element extension already in the family may be taken or skipped;
/// anything else is skipped.
pub(crate) fn enumerate_geometries(ground: &GroundSet) -> Vec<ConvexFamily> {
    assert!(ground.len() <= 5, "family masks are 64 bits wide");
    let full = ground.full();
    let mut out = Vec::new();
    let chosen = 1u64 << full.idx();
    search_geometries(ground, full.idx(), chosen, &mut out);
    out
}

fn search_geometries(ground: &GroundSet, last: usize, chosen: u64, out: &mut Vec<ConvexFamily>) {
    if last == 0 {
        let members = (0..64)
            .filter(|b| chosen & (1u64 << b) != 0)
            .map(|b| Subset::from_bits(b as u32))
            .collect();
        out.push(ConvexFamily::from_members_trusted(ground, members));
        return;
    }
    let m = last - 1;
    let set = Subset::from_bits(m as u32);
    let full = ground.full();
    let member = |s: Subset| chosen & (1u64 << s.idx()) != 0;

    let mut above = full;
    let mut any_above = false;
    let mut rest = chosen;
    while rest != 0 {
        let b = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let s = Subset::from_bits(b as u32);
        if s != set && set.is_subset_of(s) {
            above = above & s;
            any_above = true;
        }
    }
    let forced = any_above && above == set;
    let extendable = (full - set).iter().any(|x| member(set.with(x)));

    match (forced, extendable) {
        (true, true) => search_geometries(ground, m, chosen | (1u64 << m), out),
        (true, false) => {}
        (false, true) => {
            search_geometries(ground, m, chosen | (1u64 << m), out);
            search_geometries(ground, m, chosen, out);
        }
        (false, false) => search_geometries(ground, m, chosen, out),
    }
}
