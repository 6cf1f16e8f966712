//! Order isomorphism and a canonical form for small lattices.

use crate::error::{LatticeError, Result};
use crate::lattice::Lattice;

/// Default ceiling for the isomorphism search.
pub const ISO_LIMIT: usize = 12;
/// Ceiling for canonical forms (linear extensions grow factorially).
pub const CANON_LIMIT: usize = 10;

/// An order isomorphism `a → b` as `map[i]` = image of element `i`.
pub fn is_isomorphic(a: &Lattice, b: &Lattice) -> Result<Option<Vec<usize>>> {
    is_isomorphic_with_limit(a, b, ISO_LIMIT)
}

pub fn is_isomorphic_with_limit(
    a: &Lattice,
    b: &Lattice,
    limit: usize,
) -> Result<Option<Vec<usize>>> {
    LatticeError::check_size("isomorphism search", a.len().max(b.len()), limit)?;
    if a.len() != b.len() || a.hasse().len() != b.hasse().len() {
        return Ok(None);
    }
    let sig_a: Vec<Signature> = (0..a.len()).map(|x| signature(a, x)).collect();
    let sig_b: Vec<Signature> = (0..b.len()).map(|x| signature(b, x)).collect();
    let mut sa = sig_a.clone();
    let mut sb = sig_b.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return Ok(None);
    }
    // bottom-up so each new element is checked against its already-placed lower covers
    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by_key(|&x| a.down_set(x).count());
    let mut map = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    let found = extend(a, b, &sig_a, &sig_b, &order, 0, &mut map, &mut used);
    Ok(found.then_some(map))
}

/// (size of ↓x, size of ↑x, lower cover count, upper cover count)
type Signature = (usize, usize, usize, usize);

fn signature(l: &Lattice, x: usize) -> Signature {
    (
        l.down_set(x).count(),
        l.up_set(x).count(),
        l.lower_covers(x).len(),
        l.upper_covers(x).len(),
    )
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Lattice,
    b: &Lattice,
    sig_a: &[Signature],
    sig_b: &[Signature],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for y in 0..b.len() {
        if used[y] || sig_a[x] != sig_b[y] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&p| {
            let q = map[p];
            a.leq(p, x) == b.leq(q, y) && a.leq(x, p) == b.leq(y, q)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(a, b, sig_a, sig_b, order, depth + 1, map, used) {
            return true;
        }
        used[y] = false;
        map[x] = usize::MAX;
    }
    false
}

/// Lexicographically least strict-upper-triangle order code over all linear
/// extensions. Two lattices are isomorphic iff their codes agree.
pub fn canonical_form(l: &Lattice) -> Result<Vec<bool>> {
    LatticeError::check_size("canonical form", l.len(), CANON_LIMIT)?;
    let n = l.len();
    let mut best: Option<Vec<bool>> = None;
    let mut seq = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut code = Vec::new();
    linear_extensions(l, &mut seq, &mut placed, &mut code, &mut best);
    Ok(best.expect("every finite order has a linear extension"))
}

fn linear_extensions(
    l: &Lattice,
    seq: &mut Vec<usize>,
    placed: &mut [bool],
    code: &mut Vec<bool>,
    best: &mut Option<Vec<bool>>,
) {
    if let Some(b) = best {
        // prune once the partial code is already larger than the best
        if code.as_slice() > &b[..code.len()] {
            return;
        }
    }
    let n = l.len();
    if seq.len() == n {
        if best.as_ref().is_none_or(|b| *code < *b) {
            *best = Some(code.clone());
        }
        return;
    }
    for x in 0..n {
        if placed[x] || l.lower_covers(x).iter().any(|&w| !placed[w]) {
            continue;
        }
        let before = code.len();
        code.extend(seq.iter().map(|&p| l.leq(p, x)));
        seq.push(x);
        placed[x] = true;
        linear_extensions(l, seq, placed, code, best);
        placed[x] = false;
        seq.pop();
        code.truncate(before);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_lattice;

    fn diamond(names: [&str; 4]) -> Lattice {
        let [z, a, b, o] = names;
        build_lattice("d", &names, &[(z, a), (z, b), (a, o), (b, o)]).unwrap()
    }

    #[test]
    fn identity_and_relabel() {
        let d = diamond(["0", "x1", "x2", "1"]);
        let m = is_isomorphic(&d, &d).unwrap().unwrap();
        assert_eq!(m, vec![0, 1, 2, 3]);
        let e = diamond(["1", "p", "q", "0"]);
        assert!(is_isomorphic(&d, &e).unwrap().is_some());
        assert_eq!(canonical_form(&d).unwrap(), canonical_form(&e).unwrap());
    }

    #[test]
    fn diamond_is_not_a_chain() {
        let d = diamond(["0", "x1", "x2", "1"]);
        let c = build_lattice("c", &["0", "a", "b", "1"], &[("0", "a"), ("a", "b"), ("b", "1")])
            .unwrap();
        assert!(is_isomorphic(&d, &c).unwrap().is_none());
        assert_ne!(canonical_form(&d).unwrap(), canonical_form(&c).unwrap());
    }

    #[test]
    fn size_limit() {
        let labels: Vec<String> = (0..13).map(|i| i.to_string()).collect();
        let edges: Vec<(usize, usize)> = (1..13).map(|i| (i - 1, i)).collect();
        let c = Lattice::from_edges("c", labels, &edges).unwrap();
        assert!(matches!(
            is_isomorphic(&c, &c),
            Err(LatticeError::SizeLimit { .. })
        ));
    }
}
