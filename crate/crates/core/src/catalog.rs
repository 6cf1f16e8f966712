//! Embedded figure lattices and the values stated for them.

use serde::Serialize;

use crate::constructions;
use crate::covers;
use crate::dims::{self, IndLarge};
use crate::error::Result;
use crate::io::parse_lattice;
use crate::iso;
use crate::lattice::{ElementSet, Lattice};

macro_rules! embed {
    ($($id:literal),* $(,)?) => {
        const SOURCES: &[(&str, &str)] = &[
            $(($id, include_str!(concat!("../../../fixtures/", $id, ".json")))),*
        ];
    };
}

embed!(
    "fig1.L1", "fig1.L2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig9",
    "fig10.L1+L3", "fig10.L3+L1", "fig11", "fig23", "fig12", "fig13.L1", "fig13.L2",
    "fig14", "fig15", "fig17", "fig18", "fig19", "chain3",
);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KdimExpect {
    Exactly(usize),
    AtLeast(usize),
}

/// Only the values stated for the figure; everything else is `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ind_large: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ind_small: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_covering: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kdim: Option<KdimExpect>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub height: Option<usize>,
    /// The exact family of minimal covers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_covers: Option<Vec<Vec<&'static str>>>,
    /// Covers that must appear among the minimal covers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimal_covers_include: Option<Vec<Vec<&'static str>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub join_primes: Option<Vec<&'static str>>,
}

pub struct Fixture {
    pub id: &'static str,
    pub lattice: Lattice,
    pub expected: Expected,
    pub source: &'static str,
}

fn expected(id: &str) -> (Expected, &'static str) {
    let e = Expected::default();
    let mc = |v: &[&[&'static str]]| Some(v.iter().map(|c| c.to_vec()).collect::<Vec<_>>());
    match id {
        "fig1.L1" => (
            Expected { ind_large: Some(0), n: Some(4), height: Some(2), ..e },
            "diamond",
        ),
        "fig1.L2" => (Expected { ind_large: Some(1), ..e }, "diamond on a new bottom"),
        "fig3" => (Expected { ind_large: Some(0), ..e }, "transcribed diagram"),
        "fig4" => (
            Expected {
                ind_large: Some(1),
                ind_small: Some(0),
                minimal_covers: mc(&[&["x7", "x8"], &["x2", "x3", "x7"], &["x2", "x8"], &["x3", "x8"]]),
                ..e
            },
            "transcribed diagram",
        ),
        "fig5" => (
            Expected { ind_large: Some(0), kdim: Some(KdimExpect::AtLeast(1)), ..e },
            "pentagon; only the inequality on Kdim is stated",
        ),
        "fig6" => (
            Expected {
                ind_large: Some(2),
                kdim: Some(KdimExpect::Exactly(1)),
                join_primes: Some(vec!["x1", "x2", "x3", "x5"]),
                ..e
            },
            "transcribed diagram",
        ),
        "fig7" => (
            Expected {
                ind_large: Some(3),
                dim_covering: Some(2),
                minimal_covers: mc(&[&["x2", "x11"], &["x4", "x5", "x7"]]),
                ..e
            },
            "transcribed diagram; the straight segment x3-x10 passes through x7 and is read as x3 < x7 < x10",
        ),
        "fig8" => (
            Expected {
                ind_large: Some(1),
                dim_covering: Some(2),
                minimal_covers: mc(&[&["x2", "x3", "x4"]]),
                ..e
            },
            "transcribed diagram",
        ),
        "fig9" | "fig13.L1" | "fig13.L2" | "chain3" => {
            (Expected { ind_large: Some(0), ..e }, "chain")
        }
        "fig10.L1+L3" => (Expected { ind_large: Some(0), ..e }, "linear sum"),
        "fig10.L3+L1" => (Expected { ind_large: Some(1), ..e }, "linear sum"),
        "fig11" => (Expected { ind_large: Some(1), ..e }, "lexicographic product"),
        "fig23" | "fig12" => (Expected { ind_large: Some(0), ..e }, "lexicographic product"),
        "fig14" => (Expected { ind_large: Some(1), ..e }, "rectangular product of 3-chains"),
        "fig15" => (Expected { ind_large: Some(0), ..e }, "rectangular product"),
        "fig17" => (
            Expected { ind_large: Some(2), ind_small: Some(1), ..e },
            "graft with N the five-element lattice with Ind 1",
        ),
        "fig18" => (
            Expected {
                ind_large: Some(3),
                ind_small: Some(0),
                minimal_covers_include: mc(&[&["s", "x8"], &["x2", "x3", "x7"], &["x2", "x8"], &["x3", "x8"]]),
                ..e
            },
            "transcribed diagram; the straight segment t-x6 passes through r and is read as t < r < x6",
        ),
        "fig19" => (
            Expected { ind_large: Some(2), ind_small: Some(0), ..e },
            "schematic diagram instantiated with N the twelve-element base lattice; x[w] < w for each interior w of N",
        ),
        _ => unreachable!("unknown fixture {id}"),
    }
}

pub fn fixture_ids() -> impl Iterator<Item = &'static str> {
    SOURCES.iter().map(|(id, _)| *id)
}

pub fn fixture(id: &str) -> Option<Fixture> {
    let &(id, json) = SOURCES.iter().find(|(i, _)| *i == id)?;
    let lattice = parse_lattice(json)
        .unwrap_or_else(|e| panic!("embedded fixture {id} is invalid: {e}"));
    let (expected, source) = expected(id);
    Some(Fixture {
        id,
        lattice,
        expected,
        source,
    })
}

pub fn fixtures() -> Vec<Fixture> {
    fixture_ids().map(|id| fixture(id).expect("listed")).collect()
}

pub(crate) fn fixture_lattice(id: &str) -> Lattice {
    fixture(id).unwrap_or_else(|| panic!("no fixture {id}")).lattice
}

/// How a fixture lattice is rebuilt from smaller ones, where it is one.
pub fn construction_of(id: &str) -> Option<Result<Lattice>> {
    let f = fixture_lattice;
    let (l1, l2, l3) = (f("fig1.L1"), f("fig1.L2"), f("fig9"));
    Some(match id {
        "fig10.L1+L3" => constructions::linear_sum(&l1, &l3),
        "fig10.L3+L1" => constructions::linear_sum(&l3, &l1),
        "fig11" => constructions::lex_product(&l3, &l1),
        "fig23" => constructions::lex_product(&l1, &l3),
        "fig12" => constructions::lex_product(&l2, &l3),
        "fig14" => constructions::rect_product(&f("fig13.L1"), &f("fig13.L2")),
        "fig15" => constructions::rect_product(&l2, &l1),
        "fig17" => constructions::graft_m(2),
        _ => return None,
    })
}

/// One comparison between a stated and a computed value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub fixture: String,
    pub field: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

fn check<T: std::fmt::Debug>(out: &mut Vec<Check>, id: &str, field: &str, exp: T, act: T, ok: bool) {
    out.push(Check {
        fixture: id.to_string(),
        field: field.to_string(),
        expected: format!("{exp:?}"),
        actual: format!("{act:?}"),
        ok,
    });
}

/// Compare every stated value of `f` with the computed one.
pub fn check_fixture(f: &Fixture) -> Result<Vec<Check>> {
    let l = &f.lattice;
    let e = &f.expected;
    let id = f.id;
    let mut out = Vec::new();
    if let Some(n) = e.n {
        check(&mut out, id, "n", n, l.len(), n == l.len());
    }
    if let Some(v) = e.ind_large {
        let a = dims::ind_large(l);
        check(&mut out, id, "ind_large", v, a, v == a);
    }
    if let Some(v) = e.ind_small {
        let a = dims::ind_small(l)?;
        check(&mut out, id, "ind_small", v, a, v == a);
    }
    if let Some(v) = e.dim_covering {
        let a = dims::dim_covering(l)?;
        check(&mut out, id, "dim_covering", v, a, v == a);
    }
    if let Some(k) = e.kdim {
        let a = dims::kdim(l);
        let ok = match (k, a) {
            (KdimExpect::Exactly(v), Some(a)) => v == a,
            (KdimExpect::AtLeast(v), Some(a)) => a >= v,
            (_, None) => false,
        };
        check(&mut out, id, "kdim", Some(k), a.map(KdimExpect::Exactly), ok);
    }
    if let Some(h) = e.height {
        let a = dims::height(l);
        check(&mut out, id, "height", h, a, h == a);
    }
    if e.minimal_covers.is_some() || e.minimal_covers_include.is_some() {
        let got = covers::minimal_covers(l)?.to_names(l);
        if let Some(want) = &e.minimal_covers {
            let want = normalize(want);
            check(&mut out, id, "minimal_covers", &want, &got, want == got);
        }
        if let Some(want) = &e.minimal_covers_include {
            let want = normalize(want);
            let ok = want.iter().all(|c| got.contains(c));
            check(&mut out, id, "minimal_covers_include", &want, &got, ok);
        }
    }
    if let Some(want) = &e.join_primes {
        let mut want: Vec<String> = want.iter().map(|s| s.to_string()).collect();
        want.sort();
        let got = covers::join_primes(l).sorted_labels(l);
        check(&mut out, id, "join_primes", &want, &got, want == got);
    }
    if let Some(built) = construction_of(id) {
        let built = built?;
        let found = iso::is_isomorphic_with_limit(l, &built, l.len().max(built.len()))?.is_some();
        check(&mut out, id, "isomorphic_to_construction", true, found, found);
    }
    Ok(out)
}

fn normalize(v: &[Vec<&str>]) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = v
        .iter()
        .map(|c| {
            let mut c: Vec<String> = c.iter().map(|s| s.to_string()).collect();
            c.sort();
            c
        })
        .collect();
    out.sort();
    out
}

/// A named part of a fixture lattice with its stated `Ind`.
pub struct SubFixture {
    pub fixture: &'static str,
    pub name: &'static str,
    pub part: Part,
    pub ind_large: i64,
}

pub enum Part {
    /// An explicit subset, used as a lattice with the inherited order.
    Set(&'static [&'static str]),
    /// The principal filter above one element.
    Filter(&'static str),
}

pub fn fixture_sublattices() -> Vec<SubFixture> {
    vec![
        SubFixture {
            fixture: "fig3",
            name: "M",
            part: Part::Set(&["x2", "x4", "x5", "x6", "1"]),
            ind_large: 1,
        },
        SubFixture {
            fixture: "fig7",
            name: "up x2",
            part: Part::Filter("x2"),
            ind_large: 2,
        },
        SubFixture {
            fixture: "fig8",
            name: "up x5",
            part: Part::Filter("x5"),
            ind_large: 0,
        },
    ]
}

impl SubFixture {
    /// The part as a standalone lattice.
    pub fn lattice(&self) -> Result<Lattice> {
        let parent = fixture_lattice(self.fixture);
        match self.part {
            Part::Set(names) => {
                let set = ElementSet::from_labels(&parent, names)?;
                Ok(parent.induced(&set)?.lattice)
            }
            Part::Filter(x) => Ok(parent.principal_filter(parent.require(x)?).lattice),
        }
    }

    pub fn computed_ind_large(&self) -> Result<i64> {
        let parent = fixture_lattice(self.fixture);
        match self.part {
            Part::Filter(x) => Ok(IndLarge::new(&parent).of_filter(parent.require(x)?)),
            Part::Set(_) => Ok(dims::ind_large(&self.lattice()?)),
        }
    }
}

/// The hypotheses under which a sublattice cannot have larger `Ind`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SublatticeHypotheses {
    pub contains_top: bool,
    pub rest_is_down_set: bool,
    pub is_sublattice: bool,
    /// For each `u ∈ M`, `↑(u*_M ∨ u)` in `M` is isomorphic to `↑(u*_L ∨ u)` in `L`.
    pub filters_match: bool,
}

impl SublatticeHypotheses {
    pub fn all(&self) -> bool {
        self.contains_top && self.rest_is_down_set && self.is_sublattice && self.filters_match
    }
}

pub fn sublattice_hypotheses(l: &Lattice, m: &ElementSet) -> Result<SublatticeHypotheses> {
    m.check_owner(l)?;
    let contains_top = m.contains(l.top());
    let mut rest = ElementSet::empty(l);
    for x in m.iter().filter(|&x| x != l.top()) {
        rest.insert(x);
    }
    let rest_is_down_set = l.is_down_set(&rest)?;
    let is_sublattice = l.is_sublattice(m)?;
    let mut filters_match = false;
    if contains_top && is_sublattice {
        let members: Vec<usize> = m.iter().collect();
        let bottom_m = l.meet_all(members.iter().copied());
        filters_match = members.iter().all(|&u| {
            let star_m = members
                .iter()
                .copied()
                .filter(|&y| l.meet(u, y) == bottom_m)
                .fold(bottom_m, |acc, y| l.join(acc, y));
            let base_m = l.join(star_m, u);
            let base_l = l.join(l.pseudostar(u).value, u);
            let up_m: Vec<usize> = members.iter().copied().filter(|&y| l.leq(base_m, y)).collect();
            let up_l: Vec<usize> = l.up_set(base_l).iter().collect();
            if up_m.len() != up_l.len() {
                return false;
            }
            let a = l.restrict("M", &up_m).expect("filter of a sublattice");
            let b = l.restrict("L", &up_l).expect("principal filter");
            iso::is_isomorphic_with_limit(&a, &b, a.len())
                .expect("limit is the size")
                .is_some()
        });
    }
    Ok(SublatticeHypotheses {
        contains_top,
        rest_is_down_set,
        is_sublattice,
        filters_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_load() {
        let fs = fixtures();
        assert_eq!(fs.len(), SOURCES.len());
        assert_eq!(fixture("fig1.L1").unwrap().lattice.len(), 4);
        assert!(fixture("nope").is_none());
    }

    #[test]
    fn small_fixture_checks_pass() {
        for id in ["fig1.L1", "fig1.L2", "fig3", "fig9", "fig14"] {
            let f = fixture(id).unwrap();
            for c in check_fixture(&f).unwrap() {
                assert!(c.ok, "{c:?}");
            }
        }
    }

    #[test]
    fn fig3_m_violates_down_set() {
        let l = fixture_lattice("fig3");
        let m = ElementSet::from_labels(&l, &["x2", "x4", "x5", "x6", "1"]).unwrap();
        let h = sublattice_hypotheses(&l, &m).unwrap();
        assert!(h.contains_top);
        assert!(!h.rest_is_down_set);
        assert!(!h.all());
    }
}
