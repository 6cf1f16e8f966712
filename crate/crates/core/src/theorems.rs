//! Executable statements about the dimensions, checked on concrete
//! lattices. Each check returns the violations it found; a hypothesis that
//! does not hold makes the check vacuous, and that is reported too so
//! callers can count how often each statement was actually exercised.

use serde::Serialize;

use crate::constructions::{self, rect_pseudostar_formula};
use crate::covers::{self, refines_unchecked};
use crate::dims::{self, all_filters_have_sp, all_pseudostars_trivial, IndLarge, IndSmall};
use crate::error::Result;
use crate::io::LatticeDoc;
use crate::lattice::{ElementSet, Lattice};
use crate::oracle;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub detail: String,
    pub lattices: Vec<LatticeDoc>,
}

/// Outcome of running a batch of checks.
#[derive(Debug, Default, Clone, PartialEq, Eq, Serialize)]
pub struct Tally {
    /// `(check, times its hypothesis held)` in first-seen order.
    pub exercised: Vec<(&'static str, u64)>,
    pub violations: Vec<Violation>,
}

impl Tally {
    fn hit(&mut self, check: &'static str) {
        match self.exercised.iter_mut().find(|(c, _)| *c == check) {
            Some((_, n)) => *n += 1,
            None => self.exercised.push((check, 1)),
        }
    }

    fn record(&mut self, check: &'static str, ok: bool, detail: impl FnOnce() -> String, ls: &[&Lattice]) {
        self.hit(check);
        if !ok {
            self.violations.push(Violation {
                check,
                detail: detail(),
                lattices: ls.iter().map(|l| LatticeDoc::from_lattice(l)).collect(),
            });
        }
    }

    pub fn count(&self, check: &str) -> u64 {
        self.exercised
            .iter()
            .find(|(c, _)| *c == check)
            .map_or(0, |(_, n)| *n)
    }

    pub fn merge(&mut self, other: Tally) {
        for (c, n) in other.exercised {
            match self.exercised.iter_mut().find(|(d, _)| *d == c) {
                Some((_, m)) => *m += n,
                None => self.exercised.push((c, n)),
            }
        }
        self.violations.extend(other.violations);
    }
}

/// Statements about one lattice: `ind ≤ Ind < h`, the two-element-cover
/// equality and its inheritance by filters, and a fresh top giving `Ind 0`.
pub fn check_lattice(l: &Lattice) -> Result<Tally> {
    let mut t = Tally::default();
    let mut big = IndLarge::new(l);
    let mut small = IndSmall::new(l)?;
    let ind_l = big.root();
    let ind_s = small.root();
    let h = dims::height(l) as i64;
    t.record("ind_le_Ind", ind_s <= ind_l, || format!("ind {ind_s} > Ind {ind_l}"), &[l]);
    t.record("Ind_lt_height", ind_l < h, || format!("Ind {ind_l} >= h {h}"), &[l]);

    let small_covers = |base: usize| {
        covers::minimal_covers_in(l, base)
            .iter()
            .all(|c| c.len() <= 2)
    };
    if l.len() > 1 && small_covers(l.bottom()) {
        t.record(
            "pair_covers_equal",
            ind_s == ind_l,
            || format!("all minimal covers have size <= 2 but ind {ind_s} != Ind {ind_l}"),
            &[l],
        );
        let bad = (0..l.len()).find(|&x| !small_covers(x));
        t.record(
            "pair_covers_inherited",
            bad.is_none(),
            || format!("filter above {} has a minimal cover of size > 2", l.label(bad.unwrap())),
            &[l],
        );
    }
    if l.len() > 1 {
        let lt = constructions::add_top(l)?;
        let v = dims::ind_large(&lt);
        t.record("add_top_zero", v == 0, || format!("Ind after adding a top is {v}"), &[l]);
    }
    Ok(t)
}

/// Every cover is refined by some minimal cover, and a cover avoiding the
/// top is refined by a minimal cover avoiding the top. Scans every cover.
pub fn check_cover_refinement(l: &Lattice) -> Result<Tally> {
    let mut t = Tally::default();
    let all = covers::all_covers(l)?;
    let minimal = covers::minimal_covers(l)?.covers;
    for c in &all {
        let found = minimal.iter().any(|m| refines_unchecked(l, m, c));
        t.record(
            "refined_by_minimal",
            found,
            || format!("cover {:?} has no refining minimal cover", c.sorted_labels(l)),
            &[l],
        );
        if !c.contains(l.top()) {
            let found = minimal
                .iter()
                .any(|m| !m.contains(l.top()) && refines_unchecked(l, m, c));
            t.record(
                "refined_by_minimal_without_top",
                found,
                || format!("cover {:?} has no refining minimal cover avoiding the top", c.sorted_labels(l)),
                &[l],
            );
        }
    }
    Ok(t)
}

/// The optimised routines against the literal definitions.
pub fn check_oracles(l: &Lattice) -> Result<Tally> {
    let mut t = Tally::default();
    let a = dims::ind_large(l);
    let b = oracle::ind_large_def(l);
    t.record("oracle_Ind", a == b, || format!("Ind {a} vs definition {b}"), &[l]);
    let a = dims::ind_small(l)?;
    let b = oracle::ind_small_def(l)?;
    t.record("oracle_ind", a == b, || format!("ind {a} vs definition {b}"), &[l]);
    let a = dims::dim_covering(l)?;
    let b = oracle::dim_def(l)?;
    t.record("oracle_dim", a == b, || format!("dim {a} vs definition {b}"), &[l]);
    let fam = covers::minimal_covers(l)?;
    let mut a: Vec<Vec<usize>> = fam.covers.iter().map(|c| c.iter().collect()).collect();
    let mut b: Vec<Vec<usize>> = oracle::minimal_covers_def(l)?
        .iter()
        .map(|c| c.iter().collect())
        .collect();
    a.sort();
    b.sort();
    t.record("oracle_minimal_covers", a == b, || format!("{a:?} vs definition {b:?}"), &[l]);
    let a = dims::kdim(l);
    let b = oracle::kdim_def(l)?;
    t.record("oracle_kdim", a == b, || format!("Kdim {a:?} vs definition {b:?}"), &[l]);
    let a = covers::join_primes(l);
    let b = oracle::join_primes_def(l);
    t.record("oracle_join_primes", a == b, || format!("{a:?} vs {b:?}"), &[l]);
    let mut a: Vec<(Vec<usize>, bool)> = covers::filters(l)
        .into_iter()
        .map(|f| (f.members.iter().collect(), f.prime))
        .collect();
    let mut b: Vec<(Vec<usize>, bool)> = oracle::filters_def(l)?
        .into_iter()
        .map(|(f, p)| (f.iter().collect(), p))
        .collect();
    a.sort();
    b.sort();
    t.record("oracle_filters", a == b, || format!("{a:?} vs {b:?}"), &[l]);
    Ok(t)
}

/// Statements about the sum and the three products of `a` and `b`. The
/// rectangular statements need both factors nontrivial.
pub fn check_pair(a: &Lattice, b: &Lattice) -> Result<Tally> {
    let mut t = Tally::default();
    let ia = dims::ind_large(a);
    let ib = dims::ind_large(b);

    let ab = constructions::cartesian_product(a, b)?;
    let ba = constructions::cartesian_product(b, a)?;
    let iab = dims::ind_large(&ab);
    let iba = dims::ind_large(&ba);
    t.record("product_max", iab == ia.max(ib), || format!("Ind(AxB) {iab}, Ind A {ia}, Ind B {ib}"), &[a, b]);
    t.record("product_symmetric", iab == iba, || format!("Ind(AxB) {iab} vs Ind(BxA) {iba}"), &[a, b]);
    t.record(
        "product_subadditive",
        iab <= ia.max(0) + ib.max(0),
        || format!("Ind(AxB) {iab} > {ia} + {ib}"),
        &[a, b],
    );
    product_filters_and_pseudostars(a, b, &ab, &mut t);

    let b_trivial = all_pseudostars_trivial(b);
    if b_trivial {
        let s = constructions::linear_sum(a, b)?;
        let v = dims::ind_large(&s);
        t.record("sum_keeps_right", ib <= v, || format!("Ind B {ib} > Ind(A+B) {v}"), &[a, b]);
        let x = constructions::lex_product(a, b)?;
        let v = dims::ind_large(&x);
        t.record("lex_keeps_right", ib <= v, || format!("Ind B {ib} > Ind(A<>B) {v}"), &[a, b]);
    } else {
        constructions::linear_sum(a, b)?;
        constructions::lex_product(a, b)?;
    }

    if a.is_trivial() || b.is_trivial() {
        return Ok(t);
    }
    let rect = constructions::rect_product_parts(a, b)?;
    let r = &rect.lattice;
    for (i, &(x, y)) in rect.pairs.iter().enumerate() {
        let want = rect_pseudostar_formula(a, b, x, y);
        let got = rect.pairs[r.pseudostar(i).value];
        t.record(
            "rect_pseudostar",
            want == got,
            || format!("pseudostar of {} is {} but the case formula gives ({},{})",
                r.label(i), r.label(r.pseudostar(i).value), a.label(want.0), b.label(want.1)),
            &[a, b],
        );
    }
    let ir = dims::ind_large(r);
    let sp = all_filters_have_sp(a) && all_filters_have_sp(b);
    if sp {
        t.record("rect_bound", ir <= ia.max(ib) + 1, || format!("Ind(A[]B) {ir} > max({ia},{ib}) + 1"), &[a, b]);
    }
    let trivial = all_pseudostars_trivial(a) && b_trivial;
    if trivial {
        t.record("product_le_rect", iab <= ir, || format!("Ind(AxB) {iab} > Ind(A[]B) {ir}"), &[a, b]);
    }
    if sp && trivial {
        t.record(
            "rect_sandwich",
            iab <= ir && ir <= iab + 1,
            || format!("Ind(AxB) {iab}, Ind(A[]B) {ir}"),
            &[a, b],
        );
    }
    Ok(t)
}

/// In `a × b` (element `(x, y)` at `x * |b| + y`): `↑(x, y)` is `↑x × ↑y`
/// under the identity on pairs, and pseudostars are taken componentwise.
fn product_filters_and_pseudostars(a: &Lattice, b: &Lattice, ab: &Lattice, t: &mut Tally) {
    let nb = b.len();
    for p in 0..ab.len() {
        let (x, y) = (p / nb, p % nb);
        let up: Vec<usize> = ab.up_set(p).iter().collect();
        let want: Vec<usize> = a
            .up_set(x)
            .iter()
            .flat_map(|x2| b.up_set(y).iter().map(move |y2| x2 * nb + y2))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        // same carrier; the order on it is inherited in both cases
        t.record("product_filter", up == want, || format!("filter above {} differs", ab.label(p)), &[a, b]);
        let s = ab.pseudostar(p).value;
        let c = a.pseudostar(x).value * nb + b.pseudostar(y).value;
        t.record(
            "product_pseudostar",
            s == c,
            || format!("pseudostar of {} is {} not {}", ab.label(p), ab.label(s), ab.label(c)),
            &[a, b],
        );
    }
}

/// The hypotheses and conclusion for one sublattice `m ∋ 1` of `l`.
pub fn check_sublattice(l: &Lattice, m: &ElementSet) -> Result<Tally> {
    let mut t = Tally::default();
    let h = crate::catalog::sublattice_hypotheses(l, m)?;
    if h.all() {
        let sub = l.induced(m)?.lattice;
        let im = dims::ind_large(&sub);
        let il = dims::ind_large(l);
        t.record("sublattice_bound", im <= il, || format!("Ind(M) {im} > Ind(L) {il}"), &[l, &sub]);
    }
    Ok(t)
}

/// Relabelling and reordering the elements leaves the report unchanged.
pub fn check_relabel(l: &Lattice, perm: &[usize]) -> Result<Tally> {
    let mut t = Tally::default();
    let p = l.permuted(perm);
    let a = dims::full_report(l)?;
    let b = dims::full_report(&p)?;
    let same = (a.ind_large, a.ind_small, a.dim_covering, a.kdim, a.height)
        == (b.ind_large, b.ind_small, b.dim_covering, b.kdim, b.height);
    t.record("relabel_invariant", same, || format!("{a:?} vs {b:?}"), &[l]);
    Ok(t)
}
