//! Covers, refinements, minimal covers, order of a subset, filters and
//! join-prime elements.
//!
//! A cover of `L` is a subset `V` with `0 ∉ V` and `⋁V = 1`. Everything here
//! also works inside a principal filter `↑base` of a larger lattice, which is
//! how the inductive dimensions recurse without materialising sublattices.

use serde::Serialize;

use crate::error::{LatticeError, Result};
use crate::lattice::{ElementSet, Lattice};

/// Default ceiling on `n` for cover enumeration.
pub const MINIMAL_COVER_LIMIT: usize = 64;
/// Ceiling for listing every cover (not just minimal ones).
pub const ALL_COVERS_LIMIT: usize = 22;

/// The minimal covers of one lattice, in lexicographic order of their
/// sorted element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverFamily {
    pub covers: Vec<ElementSet>,
}

impl CoverFamily {
    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    /// Every member sorted by name, then the family sorted.
    pub fn to_names(&self, lat: &Lattice) -> Vec<Vec<String>> {
        sorted_names(lat, self.covers.iter())
    }

    /// Elements occurring in some member.
    pub fn support(&self, lat: &Lattice) -> ElementSet {
        let mut s = ElementSet::empty(lat);
        for c in &self.covers {
            for x in c.iter() {
                s.insert(x);
            }
        }
        s
    }
}

pub fn sorted_names<'a>(
    lat: &Lattice,
    sets: impl Iterator<Item = &'a ElementSet>,
) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = sets.map(|s| s.sorted_labels(lat)).collect();
    out.sort();
    out
}

pub fn is_cover(lat: &Lattice, v: &ElementSet) -> Result<bool> {
    v.check_owner(lat)?;
    Ok(is_cover_in(lat, lat.bottom(), v.iter()))
}

/// Cover test inside `↑base`. The empty set is never a cover, which also
/// rules out covers of the one-element lattice.
pub(crate) fn is_cover_in(lat: &Lattice, base: usize, v: impl Iterator<Item = usize>) -> bool {
    let mut any = false;
    let mut j = base;
    for x in v {
        if x == base || !lat.leq(base, x) {
            return false;
        }
        any = true;
        j = lat.join(j, x);
    }
    any && j == lat.top()
}

/// `U` refines `V`: every member of `U` lies below some member of `V`.
pub fn refines(lat: &Lattice, u: &ElementSet, v: &ElementSet) -> Result<bool> {
    if !is_cover(lat, u)? || !is_cover(lat, v)? {
        return Err(LatticeError::NotACover);
    }
    Ok(refines_unchecked(lat, u, v))
}

pub(crate) fn refines_unchecked(lat: &Lattice, u: &ElementSet, v: &ElementSet) -> bool {
    u.iter().all(|x| v.iter().any(|y| lat.leq(x, y)))
}

pub fn minimal_covers(lat: &Lattice) -> Result<CoverFamily> {
    minimal_covers_with_limit(lat, MINIMAL_COVER_LIMIT)
}

pub fn minimal_covers_with_limit(lat: &Lattice, limit: usize) -> Result<CoverFamily> {
    LatticeError::check_size("minimal cover enumeration", lat.len(), limit)?;
    let covers = minimal_covers_in(lat, lat.bottom())
        .into_iter()
        .map(|c| ElementSet::from_indices(lat, c).expect("indices come from the lattice"))
        .collect();
    Ok(CoverFamily { covers })
}

/// Minimal covers of `↑base`, each as a sorted index list.
///
/// A cover `V` is minimal iff for every `v ∈ V` the elements of `↓V` other
/// than `v` and the bottom do not join to the top: otherwise those elements
/// form a refinement avoiding `v`, and conversely any refinement avoiding `v`
/// lives inside that set. That condition only gets harder to meet as `V`
/// grows, so the search prunes as soon as a partial set violates it. For an
/// antichain the join of `↓V ∖ {v, 0}` is the join of the other members with
/// the lower covers of `v` that lie in the filter.
pub(crate) fn minimal_covers_in(lat: &Lattice, base: usize) -> Vec<Vec<usize>> {
    let top = lat.top();
    if base == top {
        return Vec::new();
    }
    let cand: Vec<usize> = lat.up_set(base).iter().filter(|&x| x != base).collect();
    let below_join: Vec<usize> = (0..lat.len())
        .map(|x| {
            if lat.leq(base, x) {
                let lows = lat.lower_covers(x).iter().copied().filter(|&w| lat.leq(base, w));
                // the empty join inside ↑base is base itself
                lat.join(base, lat.join_all(lows))
            } else {
                base
            }
        })
        .collect();

    let mut out = Vec::new();
    let mut chosen = Vec::new();
    search(lat, base, &cand, &below_join, 0, &mut chosen, &mut out);
    out
}

fn search(
    lat: &Lattice,
    base: usize,
    cand: &[usize],
    below_join: &[usize],
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    for i in start..cand.len() {
        let x = cand[i];
        if chosen.iter().any(|&c| lat.comparable(c, x)) {
            continue;
        }
        chosen.push(x);
        if all_necessary(lat, base, chosen, below_join) {
            if lat.join_all(chosen.iter().copied()) == lat.top() {
                // no proper superset of a minimal cover passes the test
                out.push(chosen.clone());
            } else {
                search(lat, base, cand, below_join, i + 1, chosen, out);
            }
        }
        chosen.pop();
    }
}

fn all_necessary(lat: &Lattice, base: usize, set: &[usize], below_join: &[usize]) -> bool {
    let k = set.len();
    // prefix[i] = join of set[..i], suffix[i] = join of set[i..]
    let mut prefix = vec![base; k + 1];
    for i in 0..k {
        prefix[i + 1] = lat.join(prefix[i], set[i]);
    }
    let mut suffix = vec![base; k + 1];
    for i in (0..k).rev() {
        suffix[i] = lat.join(suffix[i + 1], set[i]);
    }
    (0..k).all(|i| {
        let others = lat.join(prefix[i], suffix[i + 1]);
        lat.join(others, below_join[set[i]]) != lat.top()
    })
}

/// Every cover of `lat`, for small lattices only.
pub fn all_covers(lat: &Lattice) -> Result<Vec<ElementSet>> {
    LatticeError::check_size("cover listing", lat.len(), ALL_COVERS_LIMIT)?;
    let nonzero: Vec<usize> = (0..lat.len()).filter(|&x| x != lat.bottom()).collect();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << nonzero.len()) {
        let members = nonzero
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &x)| x);
        if lat.join_all(members.clone()) == lat.top() {
            out.push(ElementSet::from_indices(lat, members)?);
        }
    }
    Ok(out)
}

/// `ord(C)`: one less than the size of the largest subset of `C` whose meet
/// is not the bottom.
pub fn ord(lat: &Lattice, c: &ElementSet) -> Result<usize> {
    c.check_owner(lat)?;
    if c.is_empty() {
        return Err(LatticeError::InvalidSubset("ord of an empty set"));
    }
    if c.contains(lat.bottom()) {
        return Err(LatticeError::InvalidSubset("ord of a set containing the bottom"));
    }
    let elems: Vec<usize> = c.iter().collect();
    let mut best = 0;
    largest_nonzero_meet(lat, &elems, 0, lat.top(), 0, &mut best);
    Ok(best - 1)
}

fn largest_nonzero_meet(
    lat: &Lattice,
    elems: &[usize],
    start: usize,
    meet: usize,
    size: usize,
    best: &mut usize,
) {
    *best = (*best).max(size);
    if size + (elems.len() - start) <= *best {
        return;
    }
    for i in start..elems.len() {
        let m = lat.meet(meet, elems[i]);
        if m != lat.bottom() {
            largest_nonzero_meet(lat, elems, i + 1, m, size + 1, best);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Filter {
    /// The least element; every filter of a finite lattice is principal.
    pub base: usize,
    pub members: ElementSet,
    pub prime: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FilterNames {
    pub members: Vec<String>,
    pub prime: bool,
}

impl Filter {
    pub fn names(&self, lat: &Lattice) -> FilterNames {
        FilterNames {
            members: self.members.sorted_labels(lat),
            prime: self.prime,
        }
    }
}

/// All proper filters. A non-empty meet-closed set in a finite lattice
/// contains its own meet, so each filter is `↑x` for its least element `x`,
/// and properness means `x ≠ 0`.
pub fn filters(lat: &Lattice) -> Vec<Filter> {
    (0..lat.len())
        .filter(|&x| x != lat.bottom())
        .map(|x| {
            let members = ElementSet::from_bits(lat, lat.up_set(x).clone());
            let prime = is_prime_filter(lat, &members);
            Filter {
                base: x,
                members,
                prime,
            }
        })
        .collect()
}

pub fn prime_filters(lat: &Lattice) -> Vec<Filter> {
    filters(lat).into_iter().filter(|f| f.prime).collect()
}

/// `F` is prime iff its complement is closed under binary joins. For a
/// finite complement that is the same as its total join staying outside `F`.
fn is_prime_filter(lat: &Lattice, f: &ElementSet) -> bool {
    let outside = (0..lat.len()).filter(|&x| !f.contains(x));
    !f.contains(lat.join_all(outside))
}

/// Non-zero `x` with `x ≤ a ∨ b ⇒ x ≤ a or x ≤ b`.
pub fn join_primes(lat: &Lattice) -> ElementSet {
    let mut out = ElementSet::empty(lat);
    for x in 0..lat.len() {
        if x == lat.bottom() {
            continue;
        }
        // the elements not above x must join to something not above x
        let rest = (0..lat.len()).filter(|&y| !lat.leq(x, y));
        if !lat.leq(x, lat.join_all(rest)) {
            out.insert(x);
        }
    }
    out
}
