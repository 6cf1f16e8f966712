//! Literal implementations of the definitions, for cross-checking, and
//! generators of small lattices.
//!
//! Nothing here shares code with the optimised algorithms beyond the lattice
//! tables themselves: principal filters are materialised as standalone
//! lattices, pseudostars are recomputed inside them, and covers are found by
//! scanning every subset.

use std::collections::{HashMap, HashSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{LatticeError, Result};
use crate::iso;
use crate::lattice::{ElementSet, Lattice};

/// Ceiling for oracles that scan every subset.
pub const SUBSET_LIMIT: usize = 12;
/// Ceiling for exhaustive generation.
pub const EXHAUSTIVE_LIMIT: usize = 7;

fn filter_key(l: &Lattice) -> Vec<String> {
    let mut k = l.labels().to_vec();
    k.sort();
    k
}

fn up_lattice(l: &Lattice, x: usize) -> Lattice {
    l.principal_filter(x).lattice
}

/// `Ind` by the quantified definition with iterative deepening on `k`.
pub fn ind_large_def(l: &Lattice) -> i64 {
    ind_large_def_memo(l, &mut HashMap::new())
}

fn ind_large_def_memo(l: &Lattice, memo: &mut HashMap<Vec<String>, i64>) -> i64 {
    if l.len() == 1 {
        return -1;
    }
    let key = filter_key(l);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let top = l.top();
    let n = l.len();
    // Ind(↑(u* ∨ u)) for every u, computed once
    let inner: Vec<i64> = (0..n)
        .map(|u| {
            let s = l.join(l.pseudostar(u).value, u);
            ind_large_def_memo(&up_lattice(l, s), memo)
        })
        .collect();
    let holds = |k: i64| {
        (0..n).all(|a| {
            (0..n).filter(|&v| l.join(a, v) == top).all(|v| {
                (0..n).any(|u| l.leq(u, v) && l.join(a, u) == top && inner[u] < k)
            })
        })
    };
    let v = (0..=n as i64)
        .find(|&k| holds(k))
        .expect("Ind is below the height");
    memo.insert(key, v);
    v
}

/// Covers of `l` as bit masks over element indices.
fn cover_masks(l: &Lattice) -> Vec<u64> {
    let n = l.len();
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << n) {
        if mask >> l.bottom() & 1 == 1 {
            continue;
        }
        let j = l.join_all((0..n).filter(|&i| mask >> i & 1 == 1));
        if j == l.top() {
            out.push(mask);
        }
    }
    out
}

fn down_masks(l: &Lattice) -> Vec<u64> {
    (0..l.len())
        .map(|x| l.down_set(x).iter().fold(0u64, |m, y| m | 1 << y))
        .collect()
}

/// `U` refines `V` iff every member of `U` lies in `↓V`.
fn refines_mask(down: &[u64], u: u64, v: u64) -> bool {
    let below_v = bits(v).fold(0u64, |m, x| m | down[x]);
    u & !below_v == 0
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

/// `ind` by the quantified definition over all covers and refinements.
pub fn ind_small_def(l: &Lattice) -> Result<i64> {
    LatticeError::check_size("ind oracle", l.len(), SUBSET_LIMIT)?;
    Ok(ind_small_def_memo(l, &mut HashMap::new()))
}

fn ind_small_def_memo(l: &Lattice, memo: &mut HashMap<Vec<String>, i64>) -> i64 {
    if l.len() == 1 {
        return -1;
    }
    let key = filter_key(l);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let n = l.len();
    let inner: Vec<i64> = (0..n)
        .map(|u| {
            let s = l.join(l.pseudostar(u).value, u);
            ind_small_def_memo(&up_lattice(l, s), memo)
        })
        .collect();
    let covers = cover_masks(l);
    let down = down_masks(l);
    let holds = |k: i64| {
        covers.iter().all(|&v| {
            covers
                .iter()
                .any(|&u| refines_mask(&down, u, v) && bits(u).all(|x| inner[x] < k))
        })
    };
    let v = (0..=n as i64).find(|&k| holds(k)).expect("ind is bounded by n");
    memo.insert(key, v);
    v
}

/// `ord` by listing every subset of `c`.
pub fn ord_def(l: &Lattice, c: &[usize]) -> usize {
    assert!(!c.is_empty() && !c.contains(&l.bottom()));
    let mut best = 0;
    for mask in 1u64..(1u64 << c.len()) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let m = l.meet_all(bits(mask).map(|i| c[i]));
        if m != l.bottom() {
            best = size;
        }
    }
    best - 1
}

/// Covering dimension by the quantified definition. `-1` for the
/// one-element lattice, which has no covers.
pub fn dim_def(l: &Lattice) -> Result<i64> {
    LatticeError::check_size("dim oracle", l.len(), SUBSET_LIMIT)?;
    if l.len() == 1 {
        return Ok(-1);
    }
    let covers = cover_masks(l);
    let down = down_masks(l);
    let ords: Vec<usize> = covers
        .iter()
        .map(|&r| ord_def(l, &bits(r).collect::<Vec<_>>()))
        .collect();
    let holds = |k: usize| {
        covers.iter().all(|&c| {
            covers
                .iter()
                .zip(&ords)
                .any(|(&r, &o)| o <= k && refines_mask(&down, r, c))
        })
    };
    Ok((0..=l.len()).find(|&k| holds(k)).expect("ord is below n") as i64)
}

/// Minimal covers by the definition: covers contained in every cover that
/// refines them.
pub fn minimal_covers_def(l: &Lattice) -> Result<Vec<ElementSet>> {
    LatticeError::check_size("minimal cover oracle", l.len(), SUBSET_LIMIT)?;
    let covers = cover_masks(l);
    let down = down_masks(l);
    covers
        .iter()
        .filter(|&&v| {
            covers
                .iter()
                .filter(|&&c| refines_mask(&down, c, v))
                .all(|&c| v & !c == 0)
        })
        .map(|&v| ElementSet::from_indices(l, bits(v)))
        .collect()
}

/// Every filter by scanning all subsets, with the pairwise prime test.
pub fn filters_def(l: &Lattice) -> Result<Vec<(ElementSet, bool)>> {
    LatticeError::check_size("filter oracle", l.len(), SUBSET_LIMIT)?;
    let n = l.len();
    let full = (1u64 << n) - 1;
    let mut out = Vec::new();
    for f in 1u64..full {
        let has = |x: usize| f >> x & 1 == 1;
        let up_closed = bits(f).all(|x| (0..n).all(|y| !l.leq(x, y) || has(y)));
        let meet_closed = bits(f).all(|x| bits(f).all(|y| has(l.meet(x, y))));
        if !(up_closed && meet_closed) {
            continue;
        }
        let prime = (0..n).all(|x| (0..n).all(|y| !has(l.join(x, y)) || has(x) || has(y)));
        out.push((ElementSet::from_indices(l, bits(f))?, prime));
    }
    Ok(out)
}

/// Join-prime elements straight from the definition.
pub fn join_primes_def(l: &Lattice) -> ElementSet {
    let n = l.len();
    let mut out = ElementSet::empty(l);
    for x in (0..n).filter(|&x| x != l.bottom()) {
        let prime = (0..n).all(|a| {
            (0..n).all(|b| !l.leq(x, l.join(a, b)) || l.leq(x, a) || l.leq(x, b))
        });
        if prime {
            out.insert(x);
        }
    }
    out
}

/// Longest strict chain of prime filters from [`filters_def`].
pub fn kdim_def(l: &Lattice) -> Result<Option<usize>> {
    let mut primes: Vec<ElementSet> = filters_def(l)?
        .into_iter()
        .filter(|(_, p)| *p)
        .map(|(f, _)| f)
        .collect();
    if primes.is_empty() {
        return Ok(None);
    }
    primes.sort_by_key(|f| f.len());
    let mut len = vec![0usize; primes.len()];
    for i in 0..primes.len() {
        for j in 0..i {
            if primes[j].len() < primes[i].len() && primes[j].is_subset(&primes[i]) {
                len[i] = len[i].max(len[j] + 1);
            }
        }
    }
    Ok(len.into_iter().max())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub max_n: usize,
    pub mode: Mode,
    pub seed: u64,
    pub samples: usize,
}

impl GeneratorConfig {
    pub fn exhaustive(max_n: usize) -> Self {
        GeneratorConfig {
            max_n,
            mode: Mode::Exhaustive,
            seed: 0,
            samples: 0,
        }
    }

    pub fn random(max_n: usize, seed: u64, samples: usize) -> Self {
        GeneratorConfig {
            max_n,
            mode: Mode::Random,
            seed,
            samples,
        }
    }
}

/// Lattices per the config. Exhaustive mode lists every lattice with
/// `n ≤ max_n` once up to isomorphism, by increasing `n`; random mode yields
/// `samples` seeded draws.
pub fn enumerate_lattices(cfg: &GeneratorConfig) -> Result<Box<dyn Iterator<Item = Lattice>>> {
    if cfg.max_n == 0 {
        return Err(LatticeError::InvalidK("max_n must be at least 1".into()));
    }
    match cfg.mode {
        Mode::Exhaustive => {
            LatticeError::check_size("exhaustive enumeration", cfg.max_n, EXHAUSTIVE_LIMIT)?;
            let all: Vec<Lattice> = (1..=cfg.max_n).flat_map(lattices_of_size).collect();
            Ok(Box::new(all.into_iter()))
        }
        Mode::Random => {
            LatticeError::check_size("random generation", cfg.max_n, 64)?;
            Ok(Box::new(RandomLattices::new(cfg.max_n, cfg.seed).take(cfg.samples)))
        }
    }
}

fn labels_for(m: usize) -> Vec<String> {
    let mut labels = vec!["0".to_string()];
    labels.extend((1..=m).map(|i| format!("e{i}")));
    labels.push("1".to_string());
    labels
}

/// All lattices with exactly `n` elements, up to isomorphism.
pub fn lattices_of_size(n: usize) -> Vec<Lattice> {
    if n == 1 {
        return vec![Lattice::from_edges("n1", vec!["0".into()], &[]).expect("singleton")];
    }
    let m = n - 2;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    // every poset has a labelling in which i < j implies i precedes j; pick
    // the down-set of each new element among the down-closed earlier subsets
    let mut below: Vec<u64> = Vec::with_capacity(m);
    extend_posets(m, &mut below, &mut |below| {
        let lt = |i: usize, j: usize| -> bool {
            // indices: 0 bottom, 1..=m middle, m + 1 top
            if i == j {
                return false;
            }
            if i == 0 || j == m + 1 {
                return true;
            }
            if j == 0 || i == m + 1 {
                return false;
            }
            below[j - 1] >> (i - 1) & 1 == 1
        };
        let Ok(l) = Lattice::from_order(&format!("n{n}"), labels_for(m), |i, j| i == j || lt(i, j))
        else {
            return;
        };
        let code = iso::canonical_form(&l).expect("within limit");
        if seen.insert(code) {
            out.push(l.with_name(format!("n{n}-{}", out.len())));
        }
    });
    out
}

fn extend_posets(m: usize, below: &mut Vec<u64>, visit: &mut dyn FnMut(&[u64])) {
    let j = below.len();
    if j == m {
        visit(below);
        return;
    }
    for d in 0u64..(1u64 << j) {
        // d must be down-closed among earlier elements
        if bits(d).all(|i| below[i] & !d == 0) {
            below.push(d);
            extend_posets(m, below, visit);
            below.pop();
        }
    }
}

/// Seeded random lattices: a random strict order on the middle elements,
/// closed transitively, with a bottom and top added, kept only when it is a
/// lattice. Element indices are shuffled so storage order carries no
/// information.
pub struct RandomLattices {
    rng: ChaCha8Rng,
    max_n: usize,
    pub attempts: u64,
    pub accepted: u64,
}

impl RandomLattices {
    pub fn new(max_n: usize, seed: u64) -> Self {
        RandomLattices {
            rng: ChaCha8Rng::seed_from_u64(seed),
            max_n,
            attempts: 0,
            accepted: 0,
        }
    }

    fn draw(&mut self) -> Option<Lattice> {
        self.attempts += 1;
        let n = self.rng.gen_range(1..=self.max_n);
        if n == 1 {
            return Some(Lattice::from_edges("r1", vec!["0".into()], &[]).expect("singleton"));
        }
        let m = n - 2;
        let p: f64 = self.rng.gen_range(0.15..0.65);
        let mut lt = vec![vec![false; m]; m];
        for i in 0..m {
            for j in i + 1..m {
                lt[i][j] = self.rng.gen_bool(p);
            }
        }
        for k in 0..m {
            for i in 0..m {
                for j in 0..m {
                    if lt[i][k] && lt[k][j] {
                        lt[i][j] = true;
                    }
                }
            }
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut self.rng);
        // position p holds original element perm[p]
        let base = labels_for(m);
        let labels: Vec<String> = perm.iter().map(|&o| base[o].clone()).collect();
        let leq = |a: usize, b: usize| {
            let (i, j) = (perm[a], perm[b]);
            i == j || i == 0 || j == m + 1 || (i != m + 1 && j != 0 && lt[i - 1][j - 1])
        };
        Lattice::from_order(&format!("r{n}"), labels, leq).ok()
    }
}

impl Iterator for RandomLattices {
    type Item = Lattice;

    fn next(&mut self) -> Option<Lattice> {
        loop {
            if let Some(l) = self.draw() {
                self.accepted += 1;
                let name = format!("{}-{}", l.name(), self.accepted);
                return Some(l.with_name(name));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_seven() {
        let counts: Vec<usize> = (1..=7).map(|n| lattices_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 5, 15, 53]);
    }

    #[test]
    fn exhaustive_cap() {
        assert!(matches!(
            enumerate_lattices(&GeneratorConfig::exhaustive(8)),
            Err(LatticeError::SizeLimit { .. })
        ));
    }

    #[test]
    fn random_is_reproducible() {
        let a: Vec<_> = enumerate_lattices(&GeneratorConfig::random(9, 7, 50))
            .unwrap()
            .map(|l| (l.labels().to_vec(), l.hasse().to_vec()))
            .collect();
        let b: Vec<_> = enumerate_lattices(&GeneratorConfig::random(9, 7, 50))
            .unwrap()
            .map(|l| (l.labels().to_vec(), l.hasse().to_vec()))
            .collect();
        assert_eq!(a.len(), 50);
        assert_eq!(a, b);
    }

    #[test]
    fn ord_def_small() {
        let l = lattices_of_size(4)
            .into_iter()
            .find(|l| l.hasse().len() == 4)
            .unwrap();
        let atoms: Vec<usize> = l.upper_covers(l.bottom()).to_vec();
        assert_eq!(ord_def(&l, &atoms), 0);
        assert_eq!(ord_def(&l, &[l.top()]), 0);
    }
}
