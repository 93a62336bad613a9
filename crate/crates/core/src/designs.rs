//! Difference sets, relative difference sets, and the incidence graphs
//! built from them, plus the symplectic generalized quadrangles `W(q)`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::cayley::{cayley_graph, ConnectionSet};
use crate::error::{Error, Result};
use crate::gf::{prime_power, GaloisField};
use crate::graph::Graph;
use crate::groups::{Elem, Group, Subgroup};

/// Guard on exact relative difference set verification.
pub const RDS_MAX_ORDER: usize = 512;
/// Guard on exhaustive difference set search.
pub const FIND_MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceSet {
    pub elements: Vec<Elem>,
    /// `(n, k, λ)`.
    pub params: (usize, usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeDifferenceSet {
    pub elements: Vec<Elem>,
    pub forbidden: Subgroup,
    /// `(m, n, k, λ)` with `|G| = m n` and `|N| = n`.
    pub params: (usize, usize, usize, usize),
}

/// An element whose difference count breaks uniformity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceRefusal {
    pub element: Elem,
    pub count: usize,
    pub expected: usize,
}

fn difference_counts(g: &Group, d: &[Elem]) -> Vec<usize> {
    let mut counts = vec![0usize; g.order()];
    for &x in d {
        for &y in d {
            if x != y {
                counts[g.mul(x, g.inv(y))] += 1;
            }
        }
    }
    counts
}

fn dedup(g: &Group, d: &[Elem]) -> Result<Vec<Elem>> {
    let set: BTreeSet<Elem> = d.iter().copied().collect();
    if set.len() != d.len() || set.iter().any(|&x| x >= g.order()) {
        return Err(Error::InvalidParameter("difference set must be a set of group elements".into()));
    }
    Ok(set.into_iter().collect())
}

/// Counts every `d1 d2^-1` with `d1 != d2` exactly.
pub fn verify_difference_set(g: &Group, d: &[Elem]) -> Result<core::result::Result<DifferenceSet, DifferenceRefusal>> {
    let d = dedup(g, d)?;
    let counts = difference_counts(g, &d);
    let e = g.identity();
    let mut lambda = None;
    for x in (0..g.order()).filter(|&x| x != e) {
        match lambda {
            None => lambda = Some(counts[x]),
            Some(l) if l != counts[x] => {
                return Ok(Err(DifferenceRefusal { element: x, count: counts[x], expected: l }))
            }
            _ => {}
        }
    }
    let params = (g.order(), d.len(), lambda.unwrap_or(0));
    Ok(Ok(DifferenceSet { elements: d, params }))
}

/// Lexicographically least `(n, k, λ)` difference set in `g`, or `None`
/// after exhausting every candidate. Translates of a difference set are
/// difference sets, so the least one contains element 0.
pub fn find_difference_set(g: &Group, k: usize, lambda: usize, budget: &dyn Budget) -> Result<Option<DifferenceSet>> {
    let n = g.order();
    if n > FIND_MAX_ORDER {
        return Err(Error::SizeGuard(format!("difference set search limited to order {FIND_MAX_ORDER}")));
    }
    if k == 0 || k > n || lambda * (n - 1) != k * (k - 1) {
        return Ok(None);
    }
    struct S<'a> {
        g: &'a Group,
        k: usize,
        lambda: usize,
        counts: Vec<usize>,
        chosen: Vec<Elem>,
        budget: &'a dyn Budget,
        aborted: bool,
    }
    impl S<'_> {
        fn go(&mut self, next: Elem) -> bool {
            if self.budget.exhausted() {
                self.aborted = true;
                return false;
            }
            if self.chosen.len() == self.k {
                return true;
            }
            for x in next..self.g.order() {
                if self.g.order() - x < self.k - self.chosen.len() {
                    break;
                }
                let mut ok = true;
                let mut touched = Vec::new();
                for &y in &self.chosen {
                    for z in [self.g.mul(x, self.g.inv(y)), self.g.mul(y, self.g.inv(x))] {
                        self.counts[z] += 1;
                        touched.push(z);
                        if self.counts[z] > self.lambda {
                            ok = false;
                        }
                    }
                }
                if ok {
                    self.chosen.push(x);
                    if self.go(x + 1) {
                        return true;
                    }
                    self.chosen.pop();
                }
                for z in touched {
                    self.counts[z] -= 1;
                }
                if self.aborted {
                    return false;
                }
            }
            false
        }
    }
    let mut s = S { g, k, lambda, counts: vec![0; n], chosen: vec![0], budget, aborted: false };
    let found = s.go(1);
    if s.aborted {
        return Err(Error::BudgetExceeded);
    }
    if !found {
        return Ok(None);
    }
    Ok(verify_difference_set(g, &s.chosen)?.ok())
}

/// `Cay(G ⋊ Z_2, Dc)`: the incidence graph of the development of `D`.
/// Returns the extension, the connection set and the graph.
pub fn incidence_graph_of_development(g: &Group, d: &[Elem]) -> Result<(Group, ConnectionSet, Graph)> {
    let ext = g.generalized_dihedral_extension()?;
    let n = g.order();
    let s: Vec<Elem> = dedup(g, d)?.iter().map(|&x| n + x).collect();
    let s = ConnectionSet::new(&ext, &s)?;
    let gr = cayley_graph(&ext, &s);
    Ok((ext, s, gr))
}

pub fn verify_relative_difference_set(
    g: &Group,
    forbidden: &Subgroup,
    r: &[Elem],
) -> Result<core::result::Result<RelativeDifferenceSet, DifferenceRefusal>> {
    if g.order() > RDS_MAX_ORDER {
        return Err(Error::SizeGuard(format!("relative difference set check limited to order {RDS_MAX_ORDER}")));
    }
    let r = dedup(g, r)?;
    let counts = difference_counts(g, &r);
    let mut lambda = None;
    for (x, &c) in counts.iter().enumerate() {
        if forbidden.contains(x) {
            if x != g.identity() && c != 0 {
                return Ok(Err(DifferenceRefusal { element: x, count: c, expected: 0 }));
            }
            continue;
        }
        match lambda {
            None => lambda = Some(c),
            Some(l) if l != c => return Ok(Err(DifferenceRefusal { element: x, count: c, expected: l })),
            _ => {}
        }
    }
    let nn = forbidden.order();
    let params = (g.order() / nn, nn, r.len(), lambda.unwrap_or(0));
    Ok(Ok(RelativeDifferenceSet { elements: r, forbidden: forbidden.clone(), params }))
}

/// `{(x, x^2)}` relative to `N = {(0, y)}`: in `GF(q)^2` for odd `q`, in the
/// twisted group of `Group::semifield_plane_group` for even `q`.
pub fn quadratic_rds(q: usize) -> Result<(Group, RelativeDifferenceSet)> {
    let (p, _) = prime_power(q).ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
    let f = GaloisField::new(q)?;
    let g = if p == 2 { Group::semifield_plane_group(q)? } else { Group::field_additive(q, 2)? };
    let r: Vec<Elem> = (0..q).map(|x| x * q + f.mul(x, x)).collect();
    let n: Vec<Elem> = (0..q).collect();
    let n = g.subgroup(&n)?;
    match verify_relative_difference_set(&g, &n, &r)? {
        Ok(rds) if rds.params == (q, q, q, 1) => Ok((g, rds)),
        Ok(rds) => Err(Error::Precondition(format!("quadratic set has parameters {:?}", rds.params))),
        Err(w) => Err(Error::Precondition(format!("quadratic set fails at element {}", w.element))),
    }
}

/// Incidence graph of `AG(2, q)` minus a parallel class, as `Cay(G ⋊ Z_2, Rc)`.
pub fn affine_plane_minus_pc_graph(q: usize) -> Result<(Group, ConnectionSet, Graph)> {
    if !(2..=8).contains(&q) {
        return Err(Error::InvalidParameter(format!("affine plane order {q} outside 2..=8")));
    }
    let (g, rds) = quadratic_rds(q)?;
    incidence_graph_of_development(&g, &rds.elements)
}

/// Incidence graph of the symplectic quadrangle `W(q)`: points of
/// `PG(3, q)`, then the totally isotropic lines of
/// `x1 y2 - x2 y1 + x3 y4 - x4 y3`.
pub fn symplectic_gq_incidence(q: usize) -> Result<Graph> {
    if !(2..=4).contains(&q) {
        return Err(Error::InvalidParameter(format!("symplectic quadrangle order {q} outside 2..=4")));
    }
    let f = GaloisField::new(q)?;
    let vec_of = |mut x: usize| {
        let mut v = [0usize; 4];
        for i in (0..4).rev() {
            v[i] = x % q;
            x /= q;
        }
        v
    };
    // normalised representatives: first nonzero coordinate is 1
    let points: Vec<[usize; 4]> =
        (1..q.pow(4)).map(vec_of).filter(|v| v.iter().find(|&&c| c != 0) == Some(&1)).collect();
    let index_of = |v: [usize; 4]| -> usize {
        let lead = *v.iter().find(|&&c| c != 0).unwrap();
        let inv = f.inv(lead);
        let w = v.map(|c| f.mul(c, inv));
        points.binary_search(&w).unwrap()
    };
    let form = |x: &[usize; 4], y: &[usize; 4]| {
        let t1 = f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]));
        let t2 = f.sub(f.mul(x[2], y[3]), f.mul(x[3], y[2]));
        f.add(t1, t2)
    };
    let mut lines: BTreeSet<Vec<usize>> = BTreeSet::new();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i + 1..] {
            if form(a, b) != 0 {
                continue;
            }
            let mut line = vec![index_of(*a)];
            for t in 0..q {
                let v = core::array::from_fn(|c| f.add(b[c], f.mul(t, a[c])));
                line.push(index_of(v));
            }
            line.sort_unstable();
            lines.insert(line);
        }
    }
    let np = points.len();
    let mut g = Graph::empty(np + lines.len());
    for (j, line) in lines.iter().enumerate() {
        for &p in line {
            g.add_edge(p, np + j);
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Unlimited;
    use crate::drg::{check_distance_regular, srg_parameters, DrgCheck, IntersectionArray};

    fn array_of(g: &Graph) -> IntersectionArray {
        match check_distance_regular(g).unwrap() {
            DrgCheck::Regular(a) => a,
            DrgCheck::Refused(w) => panic!("{w}"),
        }
    }

    #[test]
    fn small_difference_sets() {
        let z7 = Group::cyclic(7).unwrap();
        assert_eq!(verify_difference_set(&z7, &[1, 2, 4]).unwrap().unwrap().params, (7, 3, 1));
        // brute-force oracle: all six ordered differences are distinct and nonzero
        let diffs: BTreeSet<usize> = [1usize, 2, 4]
            .iter()
            .flat_map(|&a| [1usize, 2, 4].into_iter().filter(move |&b| b != a).map(move |b| (a + 7 - b) % 7))
            .collect();
        assert_eq!(diffs.len(), 6);
        let z11 = Group::cyclic(11).unwrap();
        assert_eq!(verify_difference_set(&z11, &[1, 3, 4, 5, 9]).unwrap().unwrap().params, (11, 5, 2));
        let all: Vec<usize> = (1..11).collect();
        assert_eq!(verify_difference_set(&z11, &all).unwrap().unwrap().params, (11, 10, 9));
        assert!(verify_difference_set(&z7, &[1, 2, 3]).unwrap().is_err());
    }

    #[test]
    fn complement_duality() {
        let z13 = Group::cyclic(13).unwrap();
        let d = find_difference_set(&z13, 4, 1, &Unlimited).unwrap().unwrap();
        let comp: Vec<usize> = (0..13).filter(|x| !d.elements.contains(x)).collect();
        assert_eq!(verify_difference_set(&z13, &comp).unwrap().unwrap().params, (13, 9, 6));
    }

    #[test]
    fn singer_sets_exist() {
        let z7 = Group::cyclic(7).unwrap();
        let d = find_difference_set(&z7, 3, 1, &Unlimited).unwrap().unwrap();
        assert_eq!(d.elements, vec![0, 1, 3]);
        assert!(find_difference_set(&Group::cyclic(21).unwrap(), 5, 1, &Unlimited).unwrap().is_some());
        assert!(find_difference_set(&Group::cyclic(13).unwrap(), 4, 1, &Unlimited).unwrap().is_some());
        // 6·5 != 1·15, so no (16,6,1) set
        assert!(find_difference_set(&Group::cyclic(16).unwrap(), 6, 1, &Unlimited).unwrap().is_none());
    }

    #[test]
    fn development_graphs() {
        let z7 = Group::cyclic(7).unwrap();
        let (_, _, h) = incidence_graph_of_development(&z7, &[1, 2, 4]).unwrap();
        assert_eq!(array_of(&h), "{3,2,2;1,1,3}".parse().unwrap());
        let (_, _, h) = incidence_graph_of_development(&z7, &[0, 3, 5, 6]).unwrap();
        assert_eq!(array_of(&h), "{4,3,2;1,2,4}".parse().unwrap());
        let z11 = Group::cyclic(11).unwrap();
        let (_, _, b) = incidence_graph_of_development(&z11, &[1, 3, 4, 5, 9]).unwrap();
        assert_eq!(array_of(&b), "{5,4,3;1,2,5}".parse().unwrap());
        assert_eq!(b.order(), 22);
        assert!(incidence_graph_of_development(&Group::symmetric(3).unwrap(), &[0]).is_err());
    }

    #[test]
    fn quadratic_sets() {
        for q in [2, 3, 4, 5, 7, 8, 9] {
            let (g, r) = quadratic_rds(q).unwrap();
            assert_eq!(r.params, (q, q, q, 1));
            assert!(g.is_abelian());
        }
        assert!(quadratic_rds(6).is_err());
    }

    #[test]
    fn affine_planes_minus_parallel_class() {
        let arrays = ["{2,1,1,1;1,1,1,2}", "{3,2,2,1;1,1,2,3}", "{4,3,3,1;1,1,3,4}", "{5,4,4,1;1,1,4,5}"];
        for (q, a) in (2..=5).zip(arrays) {
            let (_, _, g) = affine_plane_minus_pc_graph(q).unwrap();
            assert_eq!(g.order(), 2 * q * q);
            assert!(g.is_bipartite());
            assert_eq!(array_of(&g), a.parse().unwrap());
            assert_eq!(g.girth(), Some(if q == 2 { 8 } else { 6 }));
        }
    }

    #[test]
    fn symplectic_quadrangles() {
        for (q, a) in [(2, "{3,2,2,2;1,1,1,3}"), (3, "{4,3,3,3;1,1,1,4}")] {
            let g = symplectic_gq_incidence(q).unwrap();
            assert_eq!(g.order(), 2 * (q * q * q + q * q + q + 1));
            assert_eq!(array_of(&g), a.parse().unwrap());
        }
    }

    #[test]
    fn symplectic_four_halved_is_srg() {
        let g = symplectic_gq_incidence(4).unwrap();
        assert_eq!(g.order(), 170);
        assert_eq!(array_of(&g), "{5,4,4,4;1,1,1,5}".parse().unwrap());
        let (h, _) = g.halved(0).unwrap();
        assert_eq!(srg_parameters(&array_of(&h)), Some((85, 20, 3, 5)));
    }
}
