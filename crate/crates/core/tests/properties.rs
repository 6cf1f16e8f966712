use latdim::catalog::{fixture, fixtures};
use latdim::constructions::{add_top, graft_m, ind_k_family};
use latdim::dims::{ind_large, ind_small};
use latdim::oracle::{enumerate_lattices, lattices_of_size, GeneratorConfig, RandomLattices};
use latdim::theorems::{
    check_cover_refinement, check_lattice, check_pair, check_sublattice, Tally,
};
use latdim::{ElementSet, Lattice};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn assert_clean(t: &Tally) {
    if let Some(v) = t.violations.first() {
        panic!("{} violations, first: {} ({}) on {:?}", t.violations.len(), v.check, v.detail, v.lattices);
    }
}

#[test]
fn single_lattice_statements_on_fixtures() {
    let mut t = Tally::default();
    for f in fixtures() {
        t.merge(check_lattice(&f.lattice).unwrap());
    }
    assert_clean(&t);
}

#[test]
fn single_lattice_statements_exhaustive() {
    let mut t = Tally::default();
    for l in enumerate_lattices(&GeneratorConfig::exhaustive(7)).unwrap() {
        t.merge(check_lattice(&l).unwrap());
    }
    assert_clean(&t);
    assert!(t.count("pair_covers_equal") > 0);
}

#[test]
fn single_lattice_statements_random() {
    let mut t = Tally::default();
    for l in enumerate_lattices(&GeneratorConfig::random(9, 1, 2000)).unwrap() {
        t.merge(check_lattice(&l).unwrap());
    }
    assert_clean(&t);
    assert_eq!(t.count("ind_le_Ind"), 2000);
}

#[test]
fn covers_are_refined_by_minimal_ones() {
    let mut t = Tally::default();
    for l in enumerate_lattices(&GeneratorConfig::exhaustive(7)).unwrap() {
        t.merge(check_cover_refinement(&l).unwrap());
    }
    for l in RandomLattices::new(9, 2).take(200) {
        t.merge(check_cover_refinement(&l).unwrap());
    }
    assert_clean(&t);
}

#[test]
fn products_exhaustive_pairs() {
    let small: Vec<Lattice> = (1..=5).flat_map(lattices_of_size).collect();
    let mut t = Tally::default();
    for a in &small {
        for b in &small {
            t.merge(check_pair(a, b).unwrap());
        }
    }
    assert_clean(&t);
    for c in ["product_max", "sum_keeps_right", "lex_keeps_right", "rect_bound", "product_le_rect", "rect_sandwich"] {
        assert!(t.count(c) > 0, "{c} never exercised");
    }
}

#[test]
fn products_with_fixtures() {
    let small: Vec<Lattice> = (2..=4).flat_map(lattices_of_size).collect();
    let mut t = Tally::default();
    for f in fixtures().into_iter().filter(|f| f.lattice.len() <= 16) {
        for b in &small {
            t.merge(check_pair(&f.lattice, b).unwrap());
        }
    }
    assert_clean(&t);
}

#[test]
fn down_set_sublattices() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut t = Tally::default();
    let mut hits = 0;
    for l in RandomLattices::new(10, 8).take(3000) {
        // generate a random down-set by closing a random subset downwards
        let mut m = ElementSet::empty(&l);
        for x in 0..l.len() {
            if x != l.top() && rng.gen_bool(0.3) {
                for y in l.down_set(x).iter() {
                    m.insert(y);
                }
            }
        }
        m.insert(l.top());
        m.insert(l.bottom());
        let before = t.count("sublattice_bound");
        t.merge(check_sublattice(&l, &m).unwrap());
        hits += t.count("sublattice_bound") - before;
    }
    assert_clean(&t);
    assert!(hits > 100, "only {hits} sublattices met the hypotheses");
}

#[test]
fn fresh_top_and_families() {
    for id in ["fig1.L1", "fig1.L2", "fig7", "fig18"] {
        let l = fixture(id).unwrap().lattice;
        assert_eq!(ind_large(&add_top(&l).unwrap()), 0, "{id}");
    }
    for k in 1..=3 {
        let l = ind_k_family(k).unwrap();
        assert_eq!(ind_large(&l), k as i64, "k = {k}");
    }
    for k in 2..=3 {
        let l = graft_m(k).unwrap();
        assert_eq!(ind_small(&l).unwrap(), k as i64 - 1, "k = {k}");
        assert_eq!(ind_large(&l), k as i64, "k = {k}");
    }
}

fn arb_lattice(max_n: usize) -> impl Strategy<Value = Lattice> {
    any::<u64>().prop_map(move |seed| RandomLattices::new(max_n, seed).next().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn lattice_axioms(l in arb_lattice(10)) {
        let n = l.len();
        for x in 0..n {
            prop_assert!(l.leq(l.bottom(), x) && l.leq(x, l.top()));
            for y in 0..n {
                let j = l.join(x, y);
                let m = l.meet(x, y);
                prop_assert_eq!(j, l.join(y, x));
                prop_assert_eq!(m, l.meet(y, x));
                prop_assert_eq!(l.meet(x, j), x);
                prop_assert_eq!(l.join(x, m), x);
                prop_assert!(l.leq(x, j) && l.leq(m, x));
                prop_assert_eq!(l.leq(x, y), j == y);
                for z in 0..n {
                    prop_assert_eq!(l.join(j, z), l.join(x, l.join(y, z)));
                }
            }
        }
    }

    #[test]
    fn pair_statements(a in arb_lattice(6), b in arb_lattice(6)) {
        let t = check_pair(&a, &b).unwrap();
        prop_assert!(t.violations.is_empty(), "{:?}", t.violations);
    }

    #[test]
    fn single_statements(l in arb_lattice(11)) {
        let t = check_lattice(&l).unwrap();
        prop_assert!(t.violations.is_empty(), "{:?}", t.violations);
    }
}
