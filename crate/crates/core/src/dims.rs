//! Ind, ind, dim, Kdim and height.
//!
//! Ind and ind recurse on principal filters `↑x` of one root lattice. The
//! recursion never materialises a sublattice: inside `↑b` the bottom is `b`,
//! meets and joins are inherited, and pseudostars are taken relative to `b`.
//! Results are memoised per filter base.

use serde::Serialize;

use crate::covers::{self, MINIMAL_COVER_LIMIT};
use crate::error::{LatticeError, Result};
use crate::lattice::{ElementSet, Lattice};

/// Where `Ind(↑base)` was attained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndWitness {
    pub a: usize,
    pub u: usize,
    /// `u* ∨ u`, computed inside the filter.
    pub next: usize,
}

/// Memoised large inductive dimension over the principal filters of one
/// lattice, via minimal complements: `Ind(L)` is one more than the largest
/// `Ind(↑(u* ∨ u))` over all `a` and all `u` minimal with `a ∨ u = 1`.
pub struct IndLarge<'a> {
    lat: &'a Lattice,
    memo: Vec<Option<(i64, Option<IndWitness>)>>,
}

impl<'a> IndLarge<'a> {
    pub fn new(lat: &'a Lattice) -> Self {
        IndLarge {
            lat,
            memo: vec![None; lat.len()],
        }
    }

    pub fn root(&mut self) -> i64 {
        self.of_filter(self.lat.bottom())
    }

    /// `Ind(↑x)`.
    pub fn of_filter(&mut self, x: usize) -> i64 {
        self.solve(x).0
    }

    pub fn witness(&mut self, x: usize) -> Option<IndWitness> {
        self.solve(x).1
    }

    fn solve(&mut self, b: usize) -> (i64, Option<IndWitness>) {
        if let Some(v) = self.memo[b] {
            return v;
        }
        let lat = self.lat;
        let result = if b == lat.top() {
            (-1, None)
        } else {
            let view: Vec<usize> = lat.up_set(b).iter().collect();
            let mut best: Option<(i64, IndWitness)> = None;
            for &u in &view {
                let Some(a) = complement_certificate(lat, b, &view, u) else {
                    continue;
                };
                let next = lat.join(lat.pseudostar_in(b, u).value, u);
                let val = self.solve(next).0;
                if best.is_none_or(|(v, _)| val > v) {
                    best = Some((val, IndWitness { a, u, next }));
                }
            }
            // u = b paired with a = 1 is always present
            let (v, w) = best.expect("a = 1, u = bottom is always a candidate");
            (v + 1, Some(w))
        };
        self.memo[b] = Some(result);
        result
    }
}

/// Some `a ≥ b` for which `u` is minimal in `{x ≥ b : a ∨ x = 1}`.
///
/// It suffices to check the lower covers of `u` inside the filter: if some
/// smaller `x` works then so does a lower cover above it.
fn complement_certificate(lat: &Lattice, b: usize, view: &[usize], u: usize) -> Option<usize> {
    let top = lat.top();
    let lows: Vec<usize> = lat
        .lower_covers(u)
        .iter()
        .copied()
        .filter(|&w| lat.leq(b, w))
        .collect();
    view.iter().copied().find(|&a| {
        lat.join(a, u) == top && lows.iter().all(|&w| lat.join(a, w) != top)
    })
}

/// Memoised small inductive dimension: one more than the largest
/// `ind(↑(v* ∨ v))` over elements `v` of minimal covers.
pub struct IndSmall<'a> {
    lat: &'a Lattice,
    memo: Vec<Option<(i64, Option<usize>)>>,
}

impl<'a> IndSmall<'a> {
    pub fn new(lat: &'a Lattice) -> Result<Self> {
        LatticeError::check_size("ind", lat.len(), MINIMAL_COVER_LIMIT)?;
        Ok(IndSmall {
            lat,
            memo: vec![None; lat.len()],
        })
    }

    pub fn root(&mut self) -> i64 {
        self.of_filter(self.lat.bottom())
    }

    pub fn of_filter(&mut self, x: usize) -> i64 {
        self.solve(x).0
    }

    /// The cover element `v` attaining the maximum in `↑x`.
    pub fn witness(&mut self, x: usize) -> Option<usize> {
        self.solve(x).1
    }

    fn solve(&mut self, b: usize) -> (i64, Option<usize>) {
        if let Some(v) = self.memo[b] {
            return v;
        }
        let lat = self.lat;
        let result = if b == lat.top() {
            (-1, None)
        } else {
            let mut support: Vec<usize> = covers::minimal_covers_in(lat, b)
                .into_iter()
                .flatten()
                .collect();
            support.sort_unstable();
            support.dedup();
            assert!(!support.is_empty(), "every nontrivial lattice has a minimal cover");
            let mut best: Option<(i64, usize)> = None;
            for v in support {
                let next = lat.join(lat.pseudostar_in(b, v).value, v);
                let val = self.solve(next).0;
                if best.is_none_or(|(bv, _)| val > bv) {
                    best = Some((val, v));
                }
            }
            let (v, w) = best.expect("support is non-empty");
            (v + 1, Some(w))
        };
        self.memo[b] = Some(result);
        result
    }
}

pub fn ind_large(lat: &Lattice) -> i64 {
    IndLarge::new(lat).root()
}

pub fn ind_small(lat: &Lattice) -> Result<i64> {
    Ok(IndSmall::new(lat)?.root())
}

/// Covering dimension and an attaining minimal cover. The one-element
/// lattice has no covers and gets `-1`.
pub fn dim_covering_with_witness(lat: &Lattice) -> Result<(i64, Option<ElementSet>)> {
    let family = covers::minimal_covers(lat)?;
    let mut best: Option<(i64, ElementSet)> = None;
    for c in family.covers {
        let o = covers::ord(lat, &c)? as i64;
        if best.as_ref().is_none_or(|(b, _)| o > *b) {
            best = Some((o, c));
        }
    }
    Ok(match best {
        Some((o, c)) => (o, Some(c)),
        None => (-1, None),
    })
}

pub fn dim_covering(lat: &Lattice) -> Result<i64> {
    Ok(dim_covering_with_witness(lat)?.0)
}

/// Longest strict chain of prime filters, as filter bases from the smallest
/// filter to the largest (`F_0` first). `None` when there are no prime filters.
pub fn kdim_with_witness(lat: &Lattice) -> Option<(usize, Vec<usize>)> {
    let primes: Vec<usize> = covers::join_primes(lat).iter().collect();
    if primes.is_empty() {
        return None;
    }
    // ↑x ⊂ ↑y iff y < x; chain length over the join-prime order
    let mut order = primes.clone();
    order.sort_by_key(|&x| lat.down_set(x).count());
    let mut len = vec![0usize; lat.len()];
    let mut prev: Vec<Option<usize>> = vec![None; lat.len()];
    for (i, &x) in order.iter().enumerate() {
        for &y in &order[..i] {
            if lat.lt(y, x) && len[y] + 1 > len[x] {
                len[x] = len[y] + 1;
                prev[x] = Some(y);
            }
        }
    }
    let end = *order
        .iter()
        .max_by_key(|&&x| (len[x], std::cmp::Reverse(x)))
        .expect("non-empty");
    let mut chain = vec![end];
    while let Some(p) = prev[*chain.last().unwrap()] {
        chain.push(p);
    }
    Some((len[end], chain))
}

pub fn kdim(lat: &Lattice) -> Option<usize> {
    kdim_with_witness(lat).map(|(k, _)| k)
}

/// A longest chain from bottom to top, bottom first.
pub fn max_chain(lat: &Lattice) -> Vec<usize> {
    let mut order: Vec<usize> = (0..lat.len()).collect();
    order.sort_by_key(|&x| lat.down_set(x).count());
    let mut h = vec![0usize; lat.len()];
    let mut prev: Vec<Option<usize>> = vec![None; lat.len()];
    for &x in &order {
        for &w in lat.lower_covers(x) {
            if h[w] + 1 > h[x] {
                h[x] = h[w] + 1;
                prev[x] = Some(w);
            }
        }
    }
    let mut chain = vec![lat.top()];
    while let Some(p) = prev[*chain.last().unwrap()] {
        chain.push(p);
    }
    chain.reverse();
    chain
}

pub fn height(lat: &Lattice) -> usize {
    max_chain(lat).len() - 1
}

/// `Ind(↑x) ≤ Ind(L)` for every `x`.
pub fn has_sp_property(lat: &Lattice) -> bool {
    let mut ind = IndLarge::new(lat);
    let root = ind.root();
    (0..lat.len()).all(|x| ind.of_filter(x) <= root)
}

/// The SP-property for every principal filter `↑k` of `lat`.
pub fn all_filters_have_sp(lat: &Lattice) -> bool {
    let mut ind = IndLarge::new(lat);
    (0..lat.len()).all(|k| {
        let base = ind.of_filter(k);
        lat.up_set(k).iter().all(|x| ind.of_filter(x) <= base)
    })
}

/// Every nonzero element has pseudostar `0`.
pub fn all_pseudostars_trivial(lat: &Lattice) -> bool {
    (0..lat.len())
        .filter(|&x| x != lat.bottom())
        .all(|x| lat.pseudostar(x).value == lat.bottom())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndPair {
    pub a: String,
    pub u: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub ind_large: Option<IndPair>,
    pub ind_small: Option<String>,
    pub dim_covering: Option<Vec<String>>,
    /// Prime filters from smallest to largest.
    pub kdim: Option<Vec<Vec<String>>>,
    pub max_chain: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub name: String,
    pub n: usize,
    pub ind_large: i64,
    pub ind_small: i64,
    pub dim_covering: i64,
    pub kdim: Option<usize>,
    pub height: usize,
    pub witnesses: Witnesses,
}

pub fn full_report(lat: &Lattice) -> Result<DimensionReport> {
    let mut big = IndLarge::new(lat);
    let ind_large = big.root();
    let ind_pair = big.witness(lat.bottom()).map(|w| IndPair {
        a: lat.label(w.a).to_string(),
        u: lat.label(w.u).to_string(),
    });
    let mut small = IndSmall::new(lat)?;
    let ind_small = small.root();
    let small_w = small.witness(lat.bottom()).map(|v| lat.label(v).to_string());
    let (dim, dim_w) = dim_covering_with_witness(lat)?;
    let kd = kdim_with_witness(lat);
    let chain = max_chain(lat);
    Ok(DimensionReport {
        name: lat.name().to_string(),
        n: lat.len(),
        ind_large,
        ind_small,
        dim_covering: dim,
        kdim: kd.as_ref().map(|(k, _)| *k),
        height: chain.len() - 1,
        witnesses: Witnesses {
            ind_large: ind_pair,
            ind_small: small_w,
            dim_covering: dim_w.map(|c| c.sorted_labels(lat)),
            kdim: kd.map(|(_, bases)| {
                bases
                    .iter()
                    .map(|&x| {
                        let mut m: Vec<String> =
                            lat.up_set(x).iter().map(|y| lat.label(y).to_string()).collect();
                        m.sort();
                        m
                    })
                    .collect()
            }),
            max_chain: chain.iter().map(|&x| lat.label(x).to_string()).collect(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_lattice;

    fn chain(n: usize) -> Lattice {
        let labels: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Lattice::from_edges("chain", labels, &edges).unwrap()
    }

    fn l2() -> Lattice {
        build_lattice(
            "L2",
            &["0", "y1", "y2", "y3", "1"],
            &[("0", "y1"), ("y1", "y2"), ("y1", "y3"), ("y2", "1"), ("y3", "1")],
        )
        .unwrap()
    }

    #[test]
    fn trivial_lattice() {
        let l = chain(1);
        let r = full_report(&l).unwrap();
        assert_eq!((r.ind_large, r.ind_small, r.dim_covering), (-1, -1, -1));
        assert_eq!(r.kdim, None);
        assert_eq!(r.height, 0);
    }

    #[test]
    fn chains() {
        for n in 2..8 {
            let l = chain(n);
            assert_eq!(ind_large(&l), 0);
            assert_eq!(height(&l), n - 1);
        }
        let l = chain(2);
        assert_eq!(dim_covering(&l).unwrap(), 0);
        assert_eq!(kdim(&l), Some(0));
    }

    #[test]
    fn l2_values() {
        let l = l2();
        let r = full_report(&l).unwrap();
        assert_eq!(r.ind_large, 1);
        assert_eq!(r.ind_small, 1);
        assert_eq!(r.height, 3);
        assert_eq!(r.witnesses.max_chain.first().unwrap(), "0");
        assert_eq!(r.witnesses.max_chain.last().unwrap(), "1");
    }

    #[test]
    fn report_json_has_null_kdim() {
        let r = full_report(&chain(1)).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.contains("\"kdim\":null"));
    }
}
