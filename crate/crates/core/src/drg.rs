//! Intersection arrays, distance-regularity checks, spectra and the
//! parameter-level Cayley feasibility tests.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;

/// Eigenvalues within this distance of an integer are snapped to it.
pub const SNAP_TOL: f64 = 1e-6;
/// Eigenvalues within this distance of each other are merged.
pub const MERGE_TOL: f64 = 1e-5;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntersectionArray {
    b: Vec<usize>,
    c: Vec<usize>,
}

impl IntersectionArray {
    /// `b = [b_0..b_{d-1}]`, `c = [c_1..c_d]`.
    pub fn new(b: Vec<usize>, c: Vec<usize>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidParameter(m));
        if b.is_empty() || b.len() != c.len() {
            return bad(format!("need equally many b and c entries, got {} and {}", b.len(), c.len()));
        }
        if c[0] != 1 {
            return bad(format!("c_1 must be 1, got {}", c[0]));
        }
        let a = IntersectionArray { b, c };
        let k = a.valency();
        for i in 0..=a.diameter() {
            if a.b(i) + a.c(i) > k {
                return bad(format!("a_{i} would be negative"));
            }
        }
        if a.b.windows(2).any(|w| w[0] < w[1]) {
            return bad("b_i must be non-increasing".into());
        }
        if a.c.windows(2).any(|w| w[0] > w[1]) {
            return bad("c_i must be non-decreasing".into());
        }
        if a.b.contains(&0) {
            return bad("b_i must be positive below the diameter".into());
        }
        Ok(a)
    }

    pub fn valency(&self) -> usize {
        self.b[0]
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    /// `b_i`, with `b_d = 0`.
    pub fn b(&self, i: usize) -> usize {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.c.get(i - 1).copied().unwrap_or(0)
        }
    }

    pub fn a(&self, i: usize) -> usize {
        self.valency() - self.b(i) - self.c(i)
    }

    pub fn b_seq(&self) -> &[usize] {
        &self.b
    }

    pub fn c_seq(&self) -> &[usize] {
        &self.c
    }

    /// `k_i = b_0 ⋯ b_{i-1} / (c_1 ⋯ c_i)`; `None` if some `k_i` is not integral.
    pub fn vertex_counts(&self) -> Option<Vec<u128>> {
        let mut out = vec![1u128];
        let mut cur = 1u128;
        for i in 1..=self.diameter() {
            let num = cur.checked_mul(self.b(i - 1) as u128)?;
            if num % self.c(i) as u128 != 0 {
                return None;
            }
            cur = num / self.c(i) as u128;
            out.push(cur);
        }
        Some(out)
    }

    pub fn order(&self) -> Option<u128> {
        self.vertex_counts().map(|v| v.iter().sum())
    }

    pub fn is_bipartite(&self) -> bool {
        (0..=self.diameter()).all(|i| self.a(i) == 0)
    }

    /// `2 min{i : a_i > 0} + 1`.
    pub fn odd_girth(&self) -> Option<usize> {
        (0..=self.diameter()).find(|&i| self.a(i) > 0).map(|i| 2 * i + 1)
    }

    /// `2 min{i : c_i > 1}`.
    pub fn even_girth(&self) -> Option<usize> {
        (1..=self.diameter()).find(|&i| self.c(i) > 1).map(|i| 2 * i)
    }

    pub fn girth(&self) -> Option<usize> {
        match (self.odd_girth(), self.even_girth()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('{')
            .and_then(|x| x.strip_suffix('}'))
            .ok_or_else(|| Error::InvalidParameter(format!("array must look like {{b0,...;c1,...}}: {s}")))?;
        let (bs, cs) = inner.split_once(';').ok_or_else(|| Error::InvalidParameter(format!("missing ';' in {s}")))?;
        let parse = |p: &str| -> Result<Vec<usize>> {
            p.split(',')
                .map(|x| x.parse::<usize>().map_err(|_| Error::InvalidParameter(format!("bad entry '{x}' in {s}"))))
                .collect()
        };
        IntersectionArray::new(parse(bs)?, parse(cs)?)
    }
}

/// A pair `(x, y)` at distance `distance` whose count of neighbours of `y`
/// at distance `distance + offset` from `x` disagrees with an earlier pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub x: usize,
    pub y: usize,
    pub distance: usize,
    pub parameter: char,
    pub expected: usize,
    pub found: usize,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "vertices {} and {} at distance {}: {}_{} = {} but an earlier pair gave {}",
            self.x, self.y, self.distance, self.parameter, self.distance, self.found, self.expected
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DrgCheck {
    Regular(IntersectionArray),
    Refused(Witness),
}

pub fn check_distance_regular(g: &Graph) -> Result<DrgCheck> {
    let n = g.order();
    if n == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let dt = g.distance_table();
    let diam = (0..n).flat_map(|x| dt.row(x).iter().map(|&d| d as usize)).max().unwrap_or(0);
    let mut b: Vec<Option<usize>> = vec![None; diam + 1];
    let mut c: Vec<Option<usize>> = vec![None; diam + 1];
    for x in 0..n {
        let row = dt.row(x);
        for y in 0..n {
            let i = row[y] as usize;
            let (mut down, mut up) = (0, 0);
            for z in g.neighbors(y) {
                let j = row[z] as usize;
                if j + 1 == i {
                    down += 1;
                } else if j == i + 1 {
                    up += 1;
                }
            }
            for (slot, val, p) in [(&mut c[i], down, 'c'), (&mut b[i], up, 'b')] {
                match *slot {
                    None => *slot = Some(val),
                    Some(e) if e != val => {
                        return Ok(DrgCheck::Refused(Witness {
                            x,
                            y,
                            distance: i,
                            parameter: p,
                            expected: e,
                            found: val,
                        }))
                    }
                    _ => {}
                }
            }
        }
    }
    let bs = b[..diam].iter().map(|x| x.unwrap()).collect();
    let cs = c[1..].iter().map(|x| x.unwrap()).collect();
    Ok(DrgCheck::Regular(IntersectionArray::new(bs, cs)?))
}

/// `(n, k, λ, μ)` for diameter-2 arrays.
pub fn srg_parameters(a: &IntersectionArray) -> Option<(usize, usize, usize, usize)> {
    if a.diameter() != 2 {
        return None;
    }
    let n = a.order()? as usize;
    Some((n, a.valency(), a.a(1), a.c(2)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenvalue {
    pub value: f64,
    /// Set when the value is an exact integer root of the characteristic
    /// polynomial.
    pub exact: Option<i64>,
}

impl Eigenvalue {
    pub fn is_rational(&self) -> bool {
        self.exact.is_some()
    }
}

/// Distinct eigenvalues of a graph with multiplicities, decreasing.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub values: Vec<(f64, usize)>,
}

impl Spectrum {
    pub fn distinct(&self) -> Vec<f64> {
        self.values.iter().map(|&(v, _)| v).collect()
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.values.iter().any(|&(v, _)| (v - x).abs() <= tol)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, m)) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}^{}", fmt_eigen(*v), m)?;
        }
        Ok(())
    }
}

pub fn fmt_eigen(v: f64) -> String {
    if (v - libm::round(v)).abs() < 1e-12 {
        format!("{}", libm::round(v) as i64)
    } else {
        format!("{v:.6}")
    }
}

/// `P_{d+1}(x)` where `P_i = (x - a_i) P_{i-1} - b_{i-1} c_i P_{i-2}`, exactly.
fn char_poly_at(a: &IntersectionArray, x: i128) -> Option<i128> {
    let (mut p_prev, mut p) = (1i128, x.checked_sub(a.a(0) as i128)?);
    for i in 1..=a.diameter() {
        let next = x
            .checked_sub(a.a(i) as i128)?
            .checked_mul(p)?
            .checked_sub((a.b(i - 1) as i128 * a.c(i) as i128).checked_mul(p_prev)?)?;
        p_prev = p;
        p = next;
    }
    Some(p)
}

/// Symmetrised intersection matrix: diagonal `a_i`, off-diagonal
/// `sqrt(b_{i-1} c_i)`.
fn symmetric_intersection_matrix(a: &IntersectionArray) -> DMatrix<f64> {
    let d = a.diameter();
    let mut m = DMatrix::<f64>::zeros(d + 1, d + 1);
    for i in 0..=d {
        m[(i, i)] = a.a(i) as f64;
        if i > 0 {
            let off = libm::sqrt((a.b(i - 1) * a.c(i)) as f64);
            m[(i, i - 1)] = off;
            m[(i - 1, i)] = off;
        }
    }
    m
}

/// Integer eigenvalues of the intersection matrix, found exactly by testing
/// every integer in `[-k, k]`. A monic integer polynomial has no other
/// rational roots.
pub fn rational_eigenvalues(a: &IntersectionArray) -> Vec<i64> {
    let k = a.valency() as i128;
    (-k..=k).rev().filter(|&x| char_poly_at(a, x) == Some(0)).map(|x| x as i64).collect()
}

/// The `d + 1` distinct eigenvalues of a distance-regular graph with this
/// array, decreasing, each tagged with its exact value when rational.
pub fn spectrum_of_array(a: &IntersectionArray) -> Vec<Eigenvalue> {
    let exact = rational_eigenvalues(a);
    let eig = SymmetricEigen::new(symmetric_intersection_matrix(a));
    let mut vals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
    vals.into_iter()
        .map(|v| {
            let hit = exact.iter().copied().find(|&e| (v - e as f64).abs() < 1e-6);
            Eigenvalue { value: hit.map_or(v, |e| e as f64), exact: hit }
        })
        .collect()
}

/// Eigenvalues of a real symmetric matrix, snapped and merged.
pub fn symmetric_spectrum(m: DMatrix<f64>, snap: f64, merge: f64) -> Spectrum {
    let eig = SymmetricEigen::new(m);
    let mut vals: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&v| {
            let r = libm::round(v);
            if (v - r).abs() <= snap {
                r
            } else {
                v
            }
        })
        .collect();
    vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
    let mut values: Vec<(f64, usize)> = Vec::new();
    for v in vals {
        match values.last_mut() {
            Some((w, m)) if (*w - v).abs() <= merge => *m += 1,
            _ => values.push((v, 1)),
        }
    }
    Spectrum { values }
}

pub fn adjacency_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.order();
    DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
}

pub fn spectrum_numeric(g: &Graph) -> Result<Spectrum> {
    spectrum_numeric_with(g, SNAP_TOL, MERGE_TOL)
}

pub fn spectrum_numeric_with(g: &Graph, snap: f64, merge: f64) -> Result<Spectrum> {
    if g.order() > 1024 {
        return Err(Error::SizeGuard(format!("spectrum of {} vertices exceeds 1024", g.order())));
    }
    Ok(symmetric_spectrum(adjacency_matrix(g), snap, merge))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub feasible: bool,
    pub reason: String,
}

/// Incidence graph of a generalized quadrangle of order `(s,s)`: a Cayley
/// structure forces `gcd(s+1, 6) = 1`.
pub fn gq_cayley_feasible(s: usize) -> Verdict {
    let mut why = Vec::new();
    if (s + 1).is_multiple_of(2) {
        why.push("2 divides s+1");
    }
    if (s + 1).is_multiple_of(3) {
        why.push("3 divides s+1");
    }
    if why.is_empty() {
        Verdict { feasible: true, reason: "feasible: s+1 coprime to 6".into() }
    } else {
        Verdict { feasible: false, reason: format!("infeasible: {}", why.join("; ")) }
    }
}

/// Incidence graph of a generalized hexagon of order `(s,s)`: a Cayley
/// structure forces `6 | s` and `5 ∤ s+1`.
pub fn gh_cayley_feasible(s: usize) -> Verdict {
    let mut why = Vec::new();
    if !s.is_multiple_of(6) {
        why.push("s not multiple of 6");
    }
    if (s + 1).is_multiple_of(5) {
        why.push("5 divides s+1");
    }
    if why.is_empty() {
        Verdict { feasible: true, reason: "feasible: 6 divides s and 5 does not divide s+1".into() }
    } else {
        Verdict { feasible: false, reason: format!("infeasible: {}", why.join("; ")) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BensonTrace {
    pub fixed_points: usize,
    pub collinear_moves: usize,
    /// `tr(Q(A + I))`, the fixed points plus the points moved to a neighbour.
    pub trace: usize,
    pub congruent_mod_s: bool,
    pub order: Option<u128>,
    /// Order 2, 3 or 5 with no fixed point and no point moved to a neighbour.
    pub contradicts: bool,
}

pub fn benson_trace(point_graph: &Graph, s: usize, perm: &Permutation) -> Result<BensonTrace> {
    if s == 0 {
        return Err(Error::InvalidParameter("s must be positive".into()));
    }
    if perm.degree() != point_graph.order() || !point_graph.is_automorphism(&perm.images()) {
        return Err(Error::NotAutomorphism);
    }
    let n = point_graph.order();
    let fixed_points = perm.fixed_points();
    let collinear_moves = (0..n).filter(|&x| point_graph.has_edge(x, perm.apply(x))).count();
    let trace = fixed_points + collinear_moves;
    let order = perm.order();
    let contradicts = matches!(order, Some(2 | 3 | 5)) && trace == 0;
    Ok(BensonTrace { fixed_points, collinear_moves, trace, congruent_mod_s: trace % s == 1 % s, order, contradicts })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalvingReport {
    pub admissible_m: Vec<usize>,
    pub obstructed: bool,
}

impl HalvingReport {
    pub fn message(&self, n: u128) -> String {
        if self.obstructed {
            format!("no group of order {n} with a subgroup of index 2 admits this graph")
        } else {
            let ms: Vec<String> = self.admissible_m.iter().map(|m| m.to_string()).collect();
            format!("index-2 quotient possible with m in {{{}}}", ms.join(","))
        }
    }
}

/// An index-2 subgroup splits a Cayley graph into two cosets with quotient
/// `[[m, k-m], [k-m, m]]`, which forces `2m - k` to be an eigenvalue.
pub fn halving_obstruction(a: &IntersectionArray) -> HalvingReport {
    let k = a.valency();
    let rational = rational_eigenvalues(a);
    let bip = a.is_bipartite();
    let admissible_m: Vec<usize> =
        (0..k).filter(|&m| m > 0 || bip).filter(|&m| rational.contains(&(2 * m as i64 - k as i64))).collect();
    HalvingReport { obstructed: admissible_m.is_empty(), admissible_m }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, kneser};

    fn arr(s: &str) -> IntersectionArray {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let a = arr("{3, 2; 1, 1}");
        assert_eq!(a.to_string(), "{3,2;1,1}");
        assert_eq!(a.a(1), 0);
        assert_eq!(a.a(2), 2);
        assert_eq!(a.order(), Some(10));
        assert!("{3,2;2,1}".parse::<IntersectionArray>().is_err());
        assert!("{3,4;1,1}".parse::<IntersectionArray>().is_err());
        assert!("3,2;1,1".parse::<IntersectionArray>().is_err());
    }

    #[test]
    fn girth_formulas() {
        let bs = arr("{3,2,2,2,1,1,1;1,1,1,1,1,1,3}");
        assert_eq!(bs.order(), Some(102));
        assert_eq!(bs.odd_girth(), Some(9));
        assert_eq!(bs.girth(), Some(9));
        let cox = arr("{3,2,2,1;1,1,1,2}");
        assert_eq!(cox.girth(), Some(7));
        assert_eq!(cox.even_girth(), Some(8));
    }

    #[test]
    fn petersen_checks() {
        let p = kneser(5, 2).unwrap();
        assert_eq!(check_distance_regular(&p).unwrap(), DrgCheck::Regular(arr("{3,2;1,1}")));
        let mut q = p.clone();
        let (u, v) = q.edges()[0];
        q.remove_edge(u, v);
        assert!(matches!(check_distance_regular(&q).unwrap(), DrgCheck::Refused(_)));
    }

    #[test]
    fn srg() {
        assert_eq!(srg_parameters(&arr("{20,16;1,5}")), Some((85, 20, 3, 5)));
        assert_eq!(srg_parameters(&arr("{5,4;1,2}")), Some((16, 5, 0, 2)));
        assert_eq!(srg_parameters(&arr("{3,2;1,1}")), Some((10, 3, 0, 1)));
        assert_eq!(srg_parameters(&arr("{3,2,1;1,2,3}")), None);
    }

    // independent oracle: characteristic polynomial of the unsymmetrised
    // tridiagonal matrix evaluated by Laplace expansion along row 0
    fn det(m: &[Vec<i64>]) -> i64 {
        if m.len() == 1 {
            return m[0][0];
        }
        (0..m.len())
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..].iter().map(|r| [&r[..j], &r[j + 1..]].concat()).collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum()
    }

    #[test]
    fn array_spectra() {
        let lp = arr("{4,2,1;1,1,4}");
        let ev: Vec<i64> = spectrum_of_array(&lp).iter().map(|e| e.exact.unwrap()).collect();
        assert_eq!(ev, vec![4, 2, -1, -2]);
        for &x in &ev {
            let d = lp.diameter();
            let m: Vec<Vec<i64>> = (0..=d)
                .map(|i| {
                    (0..=d)
                        .map(|j| {
                            let v = if j == i {
                                lp.a(i) as i64
                            } else if j + 1 == i {
                                lp.c(i) as i64
                            } else if j == i + 1 {
                                lp.b(i) as i64
                            } else {
                                0
                            };
                            if i == j {
                                x - v
                            } else {
                                -v
                            }
                        })
                        .collect()
                })
                .collect();
            assert_eq!(det(&m), 0);
        }
        assert_eq!(rational_eigenvalues(&arr("{3,2,2,2,1,1,1;1,1,1,1,1,1,3}")), vec![3, 2, 0]);
        assert_eq!(rational_eigenvalues(&arr("{5,4,2;1,1,4}")), vec![5, 2, -1, -3]);
    }

    #[test]
    fn numeric_spectra() {
        let s = spectrum_numeric(&complete(4)).unwrap();
        assert_eq!(s.values, vec![(3.0, 1), (-1.0, 3)]);
        let c5 = spectrum_numeric(&cycle(5)).unwrap();
        let expect = [
            2.0,
            2.0 * libm::cos(2.0 * core::f64::consts::PI / 5.0),
            2.0 * libm::cos(4.0 * core::f64::consts::PI / 5.0),
        ];
        assert_eq!(c5.values.len(), 3);
        for (i, &(v, m)) in c5.values.iter().enumerate() {
            assert!((v - expect[i]).abs() < 1e-9);
            assert_eq!(m, if i == 0 { 1 } else { 2 });
        }
        let p = kneser(5, 2).unwrap();
        let num = spectrum_numeric(&p).unwrap().distinct();
        let ar: Vec<f64> = spectrum_of_array(&arr("{3,2;1,1}")).iter().map(|e| e.value).collect();
        assert_eq!(num, ar);
    }

    #[test]
    fn feasibility() {
        assert!(!gq_cayley_feasible(2).feasible);
        assert!(!gq_cayley_feasible(3).feasible);
        assert!(gq_cayley_feasible(4).feasible);
        assert!(!gh_cayley_feasible(2).feasible);
        let v = gh_cayley_feasible(4);
        assert_eq!(v.reason, "infeasible: s not multiple of 6; 5 divides s+1");
        assert!(gh_cayley_feasible(6).feasible);
        for s in 1..200 {
            assert_eq!(gq_cayley_feasible(s).feasible, (s + 1) % 2 != 0 && (s + 1) % 3 != 0);
            assert_eq!(gh_cayley_feasible(s).feasible, s % 6 == 0 && (s + 1) % 5 != 0);
        }
    }

    #[test]
    fn halving() {
        let bs = halving_obstruction(&arr("{3,2,2,2,1,1,1;1,1,1,1,1,1,3}"));
        assert!(bs.obstructed);
        assert_eq!(bs.message(102), "no group of order 102 with a subgroup of index 2 admits this graph");
        assert_eq!(halving_obstruction(&arr("{3;1}")).admissible_m, vec![1]);
        assert!(halving_obstruction(&arr("{3,2,1;1,2,3}")).admissible_m.contains(&0));
    }

    #[test]
    fn benson_identity() {
        let p = kneser(5, 2).unwrap();
        let id = Permutation::identity(10);
        let t = benson_trace(&p, 2, &id).unwrap();
        assert_eq!(t.trace, 10);
        assert!(!t.congruent_mod_s);
        let bad = Permutation::from_cycles(10, &[&[0, 1]]).unwrap();
        assert_eq!(benson_trace(&p, 2, &bad), Err(Error::NotAutomorphism));
    }
}
