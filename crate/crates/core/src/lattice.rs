//! Finite bounded lattices built from their Hasse diagram.
//!
//! A [`Lattice`] is validated once at construction: the cover relation is
//! closed into a partial order, the bounds are located, and the meet and join
//! of every pair are tabulated. Everything downstream works on element
//! indices `0..n` and reads those tables.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::bitset::Bits;
use crate::error::{LatticeError, Result};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Identity of a built lattice. Clones share the identity of their source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatticeId(u64);

impl LatticeId {
    fn fresh() -> Self {
        LatticeId(NEXT_ID.fetch_add(1, Ordering::Relaxed))
    }
}

#[derive(Clone)]
pub struct Lattice {
    id: LatticeId,
    name: String,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    /// `up[x]` is the principal filter of `x`.
    up: Vec<Bits>,
    /// `down[x]` is the principal ideal of `x`.
    down: Vec<Bits>,
    down_count: Vec<usize>,
    hasse: Vec<(usize, usize)>,
    lower: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    meet: Vec<u32>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
}

impl std::fmt::Debug for Lattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Lattice")
            .field("name", &self.name)
            .field("n", &self.len())
            .field("labels", &self.labels)
            .field("hasse", &self.hasse)
            .finish()
    }
}

/// Result of the `x*` computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pseudostar {
    pub value: usize,
    /// `x* ∧ x` is the bottom, so `x*` is the largest element disjoint from `x`.
    pub is_pseudocomplement: bool,
}

/// Build a lattice from element names and cover pairs `(a, b)` meaning `b` covers `a`.
///
/// Redundant pairs (implied by transitivity) are accepted; the stored Hasse
/// diagram is always the transitive reduction.
pub fn build_lattice<S: AsRef<str>>(
    name: &str,
    labels: &[S],
    covers: &[(S, S)],
) -> Result<Lattice> {
    let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    let index = index_labels(&labels)?;
    let mut edges = Vec::with_capacity(covers.len());
    for (a, b) in covers {
        let ia = *index
            .get(a.as_ref())
            .ok_or_else(|| LatticeError::UnknownLabel(a.as_ref().to_string()))?;
        let ib = *index
            .get(b.as_ref())
            .ok_or_else(|| LatticeError::UnknownLabel(b.as_ref().to_string()))?;
        edges.push((ia, ib));
    }
    Lattice::from_edges(name, labels, &edges)
}

fn index_labels(labels: &[String]) -> Result<HashMap<String, usize>> {
    if labels.is_empty() {
        return Err(LatticeError::Empty);
    }
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.clone(), i).is_some() {
            return Err(LatticeError::DuplicateLabel(l.clone()));
        }
    }
    Ok(index)
}

impl Lattice {
    /// Build from labels and index pairs `(a, b)` with `b` above `a`.
    pub fn from_edges(name: &str, labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let index = index_labels(&labels)?;
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        let mut outdeg = vec![0usize; n];
        for &(a, b) in edges {
            for i in [a, b] {
                if i >= n {
                    return Err(LatticeError::IndexOutOfRange { index: i, size: n });
                }
            }
            if a == b {
                return Err(LatticeError::CycleError(labels[a].clone()));
            }
            if !succ[a].contains(&b) {
                succ[a].push(b);
                indeg[b] += 1;
                outdeg[a] += 1;
            }
        }

        // Kahn's algorithm; leftovers sit on a cycle.
        let mut remaining = indeg.clone();
        let mut topo = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).rev().filter(|&i| remaining[i] == 0).collect();
        while let Some(x) = stack.pop() {
            topo.push(x);
            for &y in succ[x].iter().rev() {
                remaining[y] -= 1;
                if remaining[y] == 0 {
                    stack.push(y);
                }
            }
        }
        if topo.len() < n {
            let stuck = (0..n).find(|&i| remaining[i] > 0).unwrap();
            return Err(LatticeError::CycleError(labels[stuck].clone()));
        }

        let minimal: Vec<usize> = (0..n).filter(|&i| indeg[i] == 0).collect();
        let maximal: Vec<usize> = (0..n).filter(|&i| outdeg[i] == 0).collect();
        if minimal.len() != 1 {
            let names: Vec<&str> = minimal.iter().map(|&i| labels[i].as_str()).collect();
            return Err(LatticeError::NotBounded(format!(
                "no unique bottom; minimal elements: {}",
                names.join(", ")
            )));
        }
        if maximal.len() != 1 {
            let names: Vec<&str> = maximal.iter().map(|&i| labels[i].as_str()).collect();
            return Err(LatticeError::NotBounded(format!(
                "no unique top; maximal elements: {}",
                names.join(", ")
            )));
        }

        let mut pred = vec![Vec::new(); n];
        for (a, bs) in succ.iter().enumerate() {
            for &b in bs {
                pred[b].push(a);
            }
        }
        let mut down: Vec<Bits> = vec![Bits::new(n); n];
        for &x in &topo {
            let mut d = Bits::new(n);
            d.insert(x);
            for &p in &pred[x] {
                d.union_with(&down[p]);
            }
            down[x] = d;
        }
        let mut up: Vec<Bits> = vec![Bits::new(n); n];
        for (y, d) in down.iter().enumerate() {
            for x in d.iter() {
                up[x].insert(y);
            }
        }
        let down_count: Vec<usize> = down.iter().map(Bits::count).collect();

        let mut lower = vec![Vec::new(); n];
        let mut upper = vec![Vec::new(); n];
        let mut hasse = Vec::new();
        for b in 0..n {
            let mut strict = down[b].clone();
            strict.remove(b);
            for a in strict.iter() {
                if up[a].intersection_count(&strict) == 1 {
                    lower[b].push(a);
                    upper[a].push(b);
                    hasse.push((a, b));
                }
            }
        }
        for u in &mut upper {
            u.sort_unstable();
        }
        hasse.sort_unstable();

        let mut lat = Lattice {
            id: LatticeId::fresh(),
            name: name.to_string(),
            labels,
            index,
            up,
            down,
            down_count,
            hasse,
            lower,
            upper,
            meet: vec![0; n * n],
            join: vec![0; n * n],
            bottom: minimal[0],
            top: maximal[0],
        };
        lat.tabulate(&topo)?;
        Ok(lat)
    }

    /// Build from an explicit order relation `leq(i, j)`; the relation is
    /// checked to be a partial order and reduced to its Hasse diagram first.
    pub fn from_order(
        name: &str,
        labels: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
    ) -> Result<Self> {
        let n = labels.len();
        let rel: Vec<Bits> = (0..n)
            .map(|i| Bits::from_indices(n, (0..n).filter(|&j| leq(i, j))))
            .collect();
        for i in 0..n {
            if !rel[i].contains(i) {
                return Err(LatticeError::NotAnOrder(format!(
                    "not reflexive at `{}`",
                    labels[i]
                )));
            }
            for j in rel[i].iter() {
                if j != i && rel[j].contains(i) {
                    return Err(LatticeError::NotAnOrder(format!(
                        "`{}` and `{}` are mutually below each other",
                        labels[i], labels[j]
                    )));
                }
                if !rel[j].is_subset(&rel[i]) {
                    return Err(LatticeError::NotAnOrder(format!(
                        "not transitive through `{}`",
                        labels[j]
                    )));
                }
            }
        }
        let mut below: Vec<Bits> = vec![Bits::new(n); n];
        for (i, r) in rel.iter().enumerate() {
            for j in r.iter() {
                below[j].insert(i);
            }
        }
        let mut edges = Vec::new();
        for a in 0..n {
            let mut strict_up = rel[a].clone();
            strict_up.remove(a);
            for b in strict_up.iter() {
                // b covers a iff b is the only element of (a, b]
                if strict_up.intersection_count(&below[b]) == 1 {
                    edges.push((a, b));
                }
            }
        }
        Lattice::from_edges(name, labels, &edges)
    }

    fn tabulate(&mut self, topo: &[usize]) -> Result<()> {
        let n = self.len();
        for &x in topo {
            for y in 0..n {
                let m = if self.leq(x, y) {
                    x
                } else if self.leq(y, x) {
                    y
                } else {
                    // meet(x, y) lies below some lower cover of x
                    let cand = self.lower[x]
                        .iter()
                        .map(|&w| self.meet[w * n + y] as usize)
                        .max_by_key(|&c| self.down_count[c])
                        .expect("non-bottom element has a lower cover");
                    if self.down[x].intersection_count(&self.down[y]) != self.down_count[cand] {
                        return Err(LatticeError::NotALattice(
                            self.labels[x].clone(),
                            self.labels[y].clone(),
                            "meet",
                        ));
                    }
                    cand
                };
                self.meet[x * n + y] = m as u32;
            }
        }
        let up_count: Vec<usize> = self.up.iter().map(Bits::count).collect();
        for &x in topo.iter().rev() {
            for y in 0..n {
                let j = if self.leq(x, y) {
                    y
                } else if self.leq(y, x) {
                    x
                } else {
                    let cand = self.upper[x]
                        .iter()
                        .map(|&w| self.join[w * n + y] as usize)
                        .max_by_key(|&c| up_count[c])
                        .expect("non-top element has an upper cover");
                    if self.up[x].intersection_count(&self.up[y]) != up_count[cand] {
                        return Err(LatticeError::NotALattice(
                            self.labels[x].clone(),
                            self.labels[y].clone(),
                            "join",
                        ));
                    }
                    cand
                };
                self.join[x * n + y] = j as u32;
            }
        }
        Ok(())
    }

    pub fn id(&self) -> LatticeId {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Lattices always have at least one element; this is `n == 1`.
    pub fn is_trivial(&self) -> bool {
        self.len() == 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<usize> {
        self.index_of(label)
            .ok_or_else(|| LatticeError::UnknownLabel(label.to_string()))
    }

    pub fn check_index(&self, x: usize) -> Result<usize> {
        if x < self.len() {
            Ok(x)
        } else {
            Err(LatticeError::IndexOutOfRange {
                index: x,
                size: self.len(),
            })
        }
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    #[inline]
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.len() + y] as usize
    }

    #[inline]
    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.len() + y] as usize
    }

    /// Join of a family; the empty join is the bottom.
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a family; the empty meet is the top.
    pub fn meet_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn up_set(&self, x: usize) -> &Bits {
        &self.up[x]
    }

    pub fn down_set(&self, x: usize) -> &Bits {
        &self.down[x]
    }

    /// Pairs `(a, b)` with `b` covering `a`, sorted.
    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    /// `x* = ⋁{y : x ∧ y = 0}`.
    pub fn pseudostar(&self, x: usize) -> Pseudostar {
        self.pseudostar_in(self.bottom, x)
    }

    /// `x*` computed inside the principal filter of `base` (which must lie below `x`).
    pub fn pseudostar_in(&self, base: usize, x: usize) -> Pseudostar {
        debug_assert!(self.leq(base, x));
        let value = self
            .up[base]
            .iter()
            .filter(|&y| self.meet(x, y) == base)
            .fold(base, |acc, y| self.join(acc, y));
        Pseudostar {
            value,
            is_pseudocomplement: self.meet(value, x) == base,
        }
    }

    /// The principal filter of `x` as a standalone lattice.
    pub fn principal_filter(&self, x: usize) -> PrincipalFilter {
        let members: Vec<usize> = self.up[x].iter().collect();
        let sub = self
            .restrict(&format!("{}^{}", self.name, self.labels[x]), &members)
            .expect("principal filters are sublattices");
        PrincipalFilter {
            lattice: sub,
            base: x,
            parent_index: members,
        }
    }

    /// The order restricted to `members`, validated as a lattice in its own right.
    pub fn restrict(&self, name: &str, members: &[usize]) -> Result<Lattice> {
        let labels = members.iter().map(|&i| self.labels[i].clone()).collect();
        Lattice::from_order(name, labels, |i, j| self.leq(members[i], members[j]))
    }

    /// Elements of `set` with the inherited order, as a lattice, with the
    /// index map back into `self`. Fails if the induced order is not a lattice.
    pub fn induced(&self, set: &ElementSet) -> Result<SubLattice> {
        set.check_owner(self)?;
        let members: Vec<usize> = set.iter().collect();
        let lattice = self.restrict(&format!("{}|sub", self.name), &members)?;
        Ok(SubLattice {
            lattice,
            parent_index: members,
        })
    }

    /// True iff `set` is non-empty and closed under this lattice's meet and join.
    pub fn is_sublattice(&self, set: &ElementSet) -> Result<bool> {
        set.check_owner(self)?;
        if set.is_empty() {
            return Ok(false);
        }
        for x in set.iter() {
            for y in set.iter() {
                if !set.contains(self.meet(x, y)) || !set.contains(self.join(x, y)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn is_down_set(&self, set: &ElementSet) -> Result<bool> {
        set.check_owner(self)?;
        Ok(set.iter().all(|s| self.down[s].is_subset(set.bits())))
    }

    /// Rename the element labels; the order is untouched.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Lattice> {
        if labels.len() != self.len() {
            return Err(LatticeError::InvalidK("label count mismatch".into()));
        }
        let edges: Vec<(usize, usize)> = self.hasse.clone();
        Lattice::from_edges(&self.name, labels, &edges)
    }

    /// The same lattice with elements permuted: element `i` becomes index `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Lattice {
        let n = self.len();
        assert_eq!(perm.len(), n);
        let mut labels = vec![String::new(); n];
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[i].clone();
        }
        let edges: Vec<(usize, usize)> = self.hasse.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Lattice::from_edges(&self.name, labels, &edges).expect("permutation preserves lattice")
    }

    /// Edge list by label, in index order.
    pub fn cover_labels(&self) -> Vec<(String, String)> {
        self.hasse
            .iter()
            .map(|&(a, b)| (self.labels[a].clone(), self.labels[b].clone()))
            .collect()
    }
}

/// The principal filter `↑base` of a parent lattice.
#[derive(Debug, Clone)]
pub struct PrincipalFilter {
    pub lattice: Lattice,
    pub base: usize,
    /// `parent_index[i]` is the parent index of element `i` of `lattice`.
    pub parent_index: Vec<usize>,
}

/// An induced sublattice with its embedding into the parent.
#[derive(Debug, Clone)]
pub struct SubLattice {
    pub lattice: Lattice,
    pub parent_index: Vec<usize>,
}

/// A subset of the carrier of one particular lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    owner: LatticeId,
    bits: Bits,
}

impl ElementSet {
    pub fn empty(lat: &Lattice) -> Self {
        ElementSet {
            owner: lat.id(),
            bits: Bits::new(lat.len()),
        }
    }

    pub fn from_indices(lat: &Lattice, xs: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = ElementSet::empty(lat);
        for x in xs {
            s.bits.insert(lat.check_index(x)?);
        }
        Ok(s)
    }

    pub fn from_labels<S: AsRef<str>>(lat: &Lattice, names: &[S]) -> Result<Self> {
        let mut s = ElementSet::empty(lat);
        for n in names {
            s.bits.insert(lat.require(n.as_ref())?);
        }
        Ok(s)
    }

    pub(crate) fn from_bits(lat: &Lattice, bits: Bits) -> Self {
        debug_assert_eq!(bits.len(), lat.len());
        ElementSet {
            owner: lat.id(),
            bits,
        }
    }

    pub fn owner(&self) -> LatticeId {
        self.owner
    }

    pub fn check_owner(&self, lat: &Lattice) -> Result<()> {
        if self.owner == lat.id() {
            Ok(())
        } else {
            Err(LatticeError::ForeignSet)
        }
    }

    pub fn bits(&self) -> &Bits {
        &self.bits
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits.contains(x)
    }

    pub fn insert(&mut self, x: usize) {
        self.bits.insert(x);
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Labels sorted by element index.
    pub fn labels(&self, lat: &Lattice) -> Vec<String> {
        self.iter().map(|x| lat.label(x).to_string()).collect()
    }

    /// Labels sorted lexicographically, the canonical output order.
    pub fn sorted_labels(&self, lat: &Lattice) -> Vec<String> {
        let mut v = self.labels(lat);
        v.sort();
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Lattice {
        build_lattice(
            "L1",
            &["0", "x1", "x2", "1"],
            &[("0", "x1"), ("0", "x2"), ("x1", "1"), ("x2", "1")],
        )
        .unwrap()
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
    fn diamond_builds() {
        let l = diamond();
        assert_eq!(l.len(), 4);
        assert_eq!(l.label(l.bottom()), "0");
        assert_eq!(l.label(l.top()), "1");
        assert_eq!(l.hasse().len(), 4);
    }

    #[test]
    fn singleton_lattice() {
        let l = build_lattice::<&str>("one", &["a"], &[]).unwrap();
        assert_eq!(l.bottom(), l.top());
        assert!(l.is_trivial());
        assert_eq!(l.pseudostar(0).value, 0);
    }

    #[test]
    fn two_maximal_elements_not_bounded() {
        let err = build_lattice(
            "bad",
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b")],
        )
        .unwrap_err();
        // `1` is isolated as well, so both bounds fail; bottom is reported first
        assert!(matches!(err, LatticeError::NotBounded(_)), "{err:?}");
        let err = build_lattice("bad", &["0", "a", "b"], &[("0", "a"), ("0", "b")]).unwrap_err();
        match err {
            LatticeError::NotBounded(msg) => assert!(msg.contains("a, b"), "{msg}"),
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn duplicate_and_unknown_labels() {
        assert_eq!(
            build_lattice::<&str>("d", &["a", "a"], &[]).unwrap_err(),
            LatticeError::DuplicateLabel("a".into())
        );
        assert_eq!(
            build_lattice("u", &["a"], &[("a", "b")]).unwrap_err(),
            LatticeError::UnknownLabel("b".into())
        );
        assert_eq!(
            build_lattice::<&str>("e", &[], &[]).unwrap_err(),
            LatticeError::Empty
        );
    }

    #[test]
    fn cycle_rejected() {
        let err = build_lattice(
            "c",
            &["0", "a", "b", "1"],
            &[("0", "a"), ("a", "b"), ("b", "a"), ("b", "1")],
        )
        .unwrap_err();
        assert!(matches!(err, LatticeError::CycleError(_)));
    }

    #[test]
    fn missing_join_reported_with_pair() {
        // 0 < a,b < c,d < 1 with both c and d above a and b: no least upper bound
        let err = build_lattice(
            "bowtie",
            &["0", "a", "b", "c", "d", "1"],
            &[
                ("0", "a"),
                ("0", "b"),
                ("a", "c"),
                ("a", "d"),
                ("b", "c"),
                ("b", "d"),
                ("c", "1"),
                ("d", "1"),
            ],
        )
        .unwrap_err();
        match err {
            LatticeError::NotALattice(x, y, _) => {
                let mut pair = [x, y];
                pair.sort();
                assert!(pair == ["a", "b"] || pair == ["c", "d"], "{pair:?}");
            }
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn redundant_edges_reduced() {
        let l = build_lattice(
            "chain",
            &["0", "a", "1"],
            &[("0", "a"), ("a", "1"), ("0", "1")],
        )
        .unwrap();
        assert_eq!(l.hasse(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn meet_join_in_l2() {
        let l = l2();
        let y1 = l.require("y1").unwrap();
        let y2 = l.require("y2").unwrap();
        let y3 = l.require("y3").unwrap();
        assert_eq!(l.meet(y2, y3), y1);
        assert_eq!(l.join(y2, y3), l.top());
        for x in 0..l.len() {
            assert_eq!(l.meet(x, l.top()), x);
            assert_eq!(l.join(x, l.bottom()), x);
        }
    }

    #[test]
    fn pseudostar_examples() {
        let l = l2();
        assert_eq!(l.pseudostar(l.bottom()).value, l.top());
        let y2 = l.require("y2").unwrap();
        assert_eq!(l.pseudostar(y2).value, l.bottom());

        let d = diamond();
        let ps = d.pseudostar(d.require("x1").unwrap());
        assert_eq!(d.label(ps.value), "x2");
        assert!(ps.is_pseudocomplement);
    }

    #[test]
    fn principal_filters() {
        let l = l2();
        let top = l.principal_filter(l.top());
        assert!(top.lattice.is_trivial());
        let y1 = l.require("y1").unwrap();
        let f = l.principal_filter(y1);
        assert_eq!(f.lattice.len(), 4);
        assert_eq!(f.lattice.label(f.lattice.bottom()), "y1");
        assert_eq!(f.parent_index[f.lattice.top()], l.top());
    }

    #[test]
    fn down_sets() {
        let l = diamond();
        let s0 = ElementSet::from_indices(&l, [l.bottom()]).unwrap();
        assert!(l.is_down_set(&s0).unwrap());
        assert!(l.is_down_set(&ElementSet::empty(&l)).unwrap());
        let s = ElementSet::from_labels(&l, &["x1"]).unwrap();
        assert!(!l.is_down_set(&s).unwrap());
    }

    #[test]
    fn foreign_sets_rejected() {
        let a = diamond();
        let b = diamond();
        let s = ElementSet::empty(&a);
        assert_eq!(b.is_down_set(&s).unwrap_err(), LatticeError::ForeignSet);
    }

    #[test]
    fn from_order_rejects_non_transitive() {
        let labels: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
        let err = Lattice::from_order("t", labels, |i, j| i == j || (i, j) == (0, 1) || (i, j) == (1, 2))
            .unwrap_err();
        assert!(matches!(err, LatticeError::NotAnOrder(_)));
    }
}
