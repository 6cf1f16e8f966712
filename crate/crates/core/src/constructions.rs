//! Composite lattices: linear sum, Cartesian, lexicographic and rectangular
//! products, a fresh top, the `Ind = k` family and the graft onto the
//! ten-element base lattice.
//!
//! Every constructor computes an order relation and sends it through
//! [`Lattice::from_order`], so lattice-hood is always machine-checked.

use crate::catalog;
use crate::error::{LatticeError, Result};
use crate::lattice::Lattice;

/// Provenance of a constructed element name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Tag {
    Left(String),
    Right(String),
    Pair(String, String),
    Fresh(String),
    Plain(String),
}

impl Tag {
    /// Parse one level of a constructed name.
    pub fn parse(name: &str) -> Tag {
        if let Some(rest) = name.strip_prefix("L:") {
            return Tag::Left(rest.to_string());
        }
        if let Some(rest) = name.strip_prefix("R:") {
            return Tag::Right(rest.to_string());
        }
        if let Some(rest) = name.strip_prefix('#') {
            return Tag::Fresh(rest.to_string());
        }
        if let Some(inner) = name.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            let mut depth = 0i32;
            for (i, c) in inner.char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => depth -= 1,
                    ',' if depth == 0 => {
                        return Tag::Pair(inner[..i].to_string(), inner[i + 1..].to_string())
                    }
                    _ => {}
                }
            }
        }
        Tag::Plain(name.to_string())
    }
}

fn pair_name(a: &str, b: &str) -> String {
    format!("({a},{b})")
}

/// Every element of `a` below every element of `b`.
pub fn linear_sum(a: &Lattice, b: &Lattice) -> Result<Lattice> {
    let na = a.len();
    let labels = a
        .labels()
        .iter()
        .map(|l| format!("L:{l}"))
        .chain(b.labels().iter().map(|l| format!("R:{l}")))
        .collect();
    Lattice::from_order(
        &format!("{}+{}", a.name(), b.name()),
        labels,
        |i, j| match (i < na, j < na) {
            (true, true) => a.leq(i, j),
            (false, false) => b.leq(i - na, j - na),
            (true, false) => true,
            (false, true) => false,
        },
    )
}

/// Componentwise order; `(x, y)` has index `x * |b| + y`.
pub fn cartesian_product(a: &Lattice, b: &Lattice) -> Result<Lattice> {
    let nb = b.len();
    Lattice::from_order(
        &format!("{}x{}", a.name(), b.name()),
        all_pair_labels(a, b),
        |i, j| a.leq(i / nb, j / nb) && b.leq(i % nb, j % nb),
    )
}

fn all_pair_labels(a: &Lattice, b: &Lattice) -> Vec<String> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a.labels() {
        for y in b.labels() {
            out.push(pair_name(x, y));
        }
    }
    out
}

/// `(x, y) ≤ (x', y')` iff `x < x'`, or `x = x'` and `y ≤ y'`. The derived
/// meet and join are checked against the four-case formulas.
pub fn lex_product(a: &Lattice, b: &Lattice) -> Result<Lattice> {
    let nb = b.len();
    let lat = Lattice::from_order(
        &format!("{}<>{}", a.name(), b.name()),
        all_pair_labels(a, b),
        |i, j| {
            let (x, y, x2, y2) = (i / nb, i % nb, j / nb, j % nb);
            a.lt(x, x2) || (x == x2 && b.leq(y, y2))
        },
    )?;
    let idx = |x: usize, y: usize| x * nb + y;
    for i in 0..lat.len() {
        for j in 0..lat.len() {
            let (x, y, x2, y2) = (i / nb, i % nb, j / nb, j % nb);
            let (meet, join) = if a.lt(x, x2) {
                (i, j)
            } else if a.lt(x2, x) {
                (j, i)
            } else if x == x2 {
                (idx(x, b.meet(y, y2)), idx(x, b.join(y, y2)))
            } else {
                (idx(a.meet(x, x2), b.top()), idx(a.join(x, x2), b.bottom()))
            };
            if lat.meet(i, j) != meet || lat.join(i, j) != join {
                return Err(LatticeError::FormulaMismatch(format!(
                    "lexicographic meet/join of {} and {}",
                    lat.label(i),
                    lat.label(j)
                )));
            }
        }
    }
    Ok(lat)
}

/// Rectangular product together with its embedding into `a × b`.
pub struct RectProduct {
    pub lattice: Lattice,
    /// Component indices of each element.
    pub pairs: Vec<(usize, usize)>,
}

/// Pairs of nonzero elements plus `(0, 0)`, ordered componentwise. The
/// derived operations are checked against the componentwise join and the
/// two-case meet.
pub fn rect_product(a: &Lattice, b: &Lattice) -> Result<Lattice> {
    Ok(rect_product_parts(a, b)?.lattice)
}

pub fn rect_product_parts(a: &Lattice, b: &Lattice) -> Result<RectProduct> {
    let mut pairs = vec![(a.bottom(), b.bottom())];
    for x in 0..a.len() {
        for y in 0..b.len() {
            if x != a.bottom() && y != b.bottom() {
                pairs.push((x, y));
            }
        }
    }
    let labels = pairs
        .iter()
        .map(|&(x, y)| pair_name(a.label(x), b.label(y)))
        .collect();
    let lat = Lattice::from_order(&format!("{}[]{}", a.name(), b.name()), labels, |i, j| {
        a.leq(pairs[i].0, pairs[j].0) && b.leq(pairs[i].1, pairs[j].1)
    })?;
    let find = |p: (usize, usize)| pairs.iter().position(|&q| q == p);
    for i in 0..pairs.len() {
        for j in 0..pairs.len() {
            let ((x, y), (x2, y2)) = (pairs[i], pairs[j]);
            let join = find((a.join(x, x2), b.join(y, y2)));
            let (mx, my) = (a.meet(x, x2), b.meet(y, y2));
            let meet = if mx != a.bottom() && my != b.bottom() {
                find((mx, my))
            } else {
                Some(0)
            };
            if join != Some(lat.join(i, j)) || meet != Some(lat.meet(i, j)) {
                return Err(LatticeError::FormulaMismatch(format!(
                    "rectangular meet/join of {} and {}",
                    lat.label(i),
                    lat.label(j)
                )));
            }
        }
    }
    Ok(RectProduct {
        lattice: lat,
        pairs,
    })
}

/// The four-case pseudostar of `(x, y)` in `a □ b`, as a component pair.
pub fn rect_pseudostar_formula(a: &Lattice, b: &Lattice, x: usize, y: usize) -> (usize, usize) {
    let xs = a.pseudostar(x).value;
    let ys = b.pseudostar(y).value;
    match (xs == a.bottom(), ys == b.bottom()) {
        (true, true) => (a.bottom(), b.bottom()),
        (false, false) => (a.top(), b.top()),
        (true, false) => (a.top(), ys),
        (false, true) => (xs, b.top()),
    }
}

/// A fresh top `#top` above the old one.
pub fn add_top(l: &Lattice) -> Result<Lattice> {
    let mut labels = l.labels().to_vec();
    labels.push("#top".to_string());
    let mut edges = l.hasse().to_vec();
    edges.push((l.top(), l.len()));
    Lattice::from_edges(&format!("{}+top", l.name()), labels, &edges)
}

/// A lattice with `Ind = k` in which every nonzero element has pseudostar
/// `0`. Step `k` puts `#bottom < #z` under the previous lattice `M` and a
/// new coatom `#y` above `#z` that is incomparable to `M ∖ {1}`.
pub fn ind_k_family(k: usize) -> Result<Lattice> {
    if k < 1 {
        return Err(LatticeError::InvalidK(format!("ind_k_family needs k >= 1, got {k}")));
    }
    let mut lat = catalog::fixture_lattice("fig1.L2").with_name("ind1");
    for step in 2..=k {
        lat = wrap(&lat)?.with_name(format!("ind{step}"));
    }
    Ok(lat)
}

fn wrap(m: &Lattice) -> Result<Lattice> {
    let n = m.len();
    // indices: 0..n = M, n = #bottom, n + 1 = #z, n + 2 = #y
    let (bot, z, y) = (n, n + 1, n + 2);
    let mut labels: Vec<String> = m.labels().iter().map(|l| format!("M:{l}")).collect();
    labels.extend(["#bottom", "#z", "#y"].map(String::from));
    Lattice::from_order("wrap", labels, |i, j| {
        if i == j || i == bot {
            return true;
        }
        match (i < n, j < n) {
            (true, true) => m.leq(i, j),
            (false, true) => i == z || j == m.top(),
            (true, false) => false,
            (false, false) => i == z && j == y,
        }
    })
}

/// The base lattice with the two-element top segment `{x6, 1}` replaced by
/// `N = ind_k_family(k - 1)`, `0_N = x6` and `1_N = 1`. Interior elements of
/// `N` are named `N:<name>` and sit above exactly the elements below `x6`.
pub fn graft_m(k: usize) -> Result<Lattice> {
    if k < 2 {
        return Err(LatticeError::InvalidK(format!("graft_M needs k >= 2, got {k}")));
    }
    let base = catalog::fixture_lattice("fig4");
    let n = ind_k_family(k - 1)?;
    graft_onto(&base, &n, &format!("graft{k}"))
}

/// Replace `{x6, 1}` in `base` by `n`.
pub fn graft_onto(base: &Lattice, n: &Lattice, name: &str) -> Result<Lattice> {
    let x6 = base.require("x6")?;
    let nb = base.len();
    let interior: Vec<usize> = (0..n.len())
        .filter(|&i| i != n.bottom() && i != n.top())
        .collect();
    let mut labels = base.labels().to_vec();
    labels.extend(interior.iter().map(|&i| format!("N:{}", n.label(i))));
    // map any index to its N element when it belongs to N
    let as_n = |i: usize| -> Option<usize> {
        if i >= nb {
            Some(interior[i - nb])
        } else if i == x6 {
            Some(n.bottom())
        } else if i == base.top() {
            Some(n.top())
        } else {
            None
        }
    };
    Lattice::from_order(name, labels, |i, j| match (i < nb, j < nb) {
        (true, true) => base.leq(i, j),
        (false, false) => n.leq(as_n(i).unwrap(), as_n(j).unwrap()),
        (true, false) => base.leq(i, x6),
        (false, true) => j == base.top(),
    })
}
